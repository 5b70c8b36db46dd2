#pragma once

#include <string>
#include <variant>

#include "pinchgeo/immersion.hpp"
#include "pinchgeo/tensor_core.hpp"

namespace pinchgeo {

/// Round sphere S^n(r) in R^{n+1}.
struct RoundSphere {
    int n = 2;
    double r = 1.0;
};

/// S^{n-1}((n-1)/(n H0)) x R in R^{n+1}; mean curvature H0.
struct SphericalCylinder {
    int n = 2;
    double H0 = 1.0;
};

/// S^1(1/sqrt(1+lambda^2)) x S^{n-1}(lambda/sqrt(1+lambda^2)) in the unit
/// sphere S^{n+1}.
struct CliffordProduct {
    int n = 2;
    double lambda = 1.0;
};

using ModelId = std::variant<RoundSphere, SphericalCylinder, CliffordProduct>;

/// Throws std::invalid_argument unless n >= 2 and the model parameter is > 0.
void validate(const ModelId& model);

std::string model_name(const ModelId& model);

struct ExactModel {
    SecondFundamentalForm h;
    AmbientSpec ambient;
};

/// Closed-form hypersurface data in an adapted frame. The Clifford principal
/// curvatures are (lambda, -1/lambda, ..., -1/lambda).
ExactModel exact_h(const ModelId& model);

/// Trigonometric parametrization of the model with `grid` samples per axis.
/// Polar angles are kept away from the coordinate poles.
ImmersionSpec as_immersion(const ModelId& model, int grid = 5);

struct SharpnessCertificate {
    int n = 0;
    double eps = 0.0;
    double lambda = 0.0;
    double S = 0.0;
    double H = 0.0;
    /// S - n^2 H^2 / (n-1) - 2.
    double margin = 0.0;
    /// margin in [0, eps) with margin > 0 when n > 2.
    bool certified = false;
};

/// Picks the Clifford parameter lambda = sqrt(eps (n-1)/(n-2) (1 - 1e-6)) and
/// confirms 0 < S - n^2H^2/(n-1) - 2 < eps. For n = 2 the margin is 0 for
/// every lambda; `lambda_for_n2` is then used.
SharpnessCertificate sharpness_certificate(int n, double eps, double lambda_for_n2 = 1.0);

}  // namespace pinchgeo
