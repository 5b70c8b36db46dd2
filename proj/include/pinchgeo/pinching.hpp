#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pinchgeo/tensor_core.hpp"

namespace pinchgeo {

/// alpha(n, H, c) = nc + n^3 H^2 / (2(n-1)) - n(n-2)/(2(n-1)) sqrt(n^2 H^4 + 4(n-1) c H^2).
double alpha(int n, double H, double c);

struct AlphaMinimum {
    double H = 0.0;
    double value = 0.0;
};

/// Golden-section minimum of alpha(n, ., c) over H in [0, 10(1 + sqrt c)].
AlphaMinimum alpha_min_over_H(int n, double c);

struct ShapePoint {
    double S = 0.0;
    double H = 0.0;
};

struct ScalarPoint {
    double R = 0.0;  ///< scalar curvature, sum_{i != j} R_ijij
    double H = 0.0;
};

/// max over points of S - n^2 H^2 / (n-1) - 2c.
double lambda_pinch(std::span<const ShapePoint> points, int n, double c);

/// min over points of R - n^2 (n-2) H^2 / (n-1) - (n+1)(n-2) c.
double mu_pinch(std::span<const ScalarPoint> points, int n, double c);

/// Pointwise data of one isometric embedding.
struct EmbeddingSample {
    std::string label;
    int n = 2;
    double c = 0.0;
    std::vector<ScalarPoint> points;
};

struct InvariantCertificate {
    /// Largest mu over the supplied embeddings: a lower bound for I(M).
    double value = 0.0;
    std::size_t best = 0;
    /// True when every embedding is Euclidean, so the value also bounds I_0(M).
    bool bounds_I0 = false;
};

InvariantCertificate invariant_certificate(std::span<const EmbeddingSample> embeddings);

// Hypothesis margins. Positive means the strict inequality holds.

/// 8/3 (kmin - kmax/4) + n^2 H^2/(n-1) - S.
double ambient_pinching_margin(double S, double H, const AmbientSpec& ambient, int n);

/// 2c + n^2 H^2/(n-1) - S (space-form version of the above).
double space_form_margin(double S, double H, double c, int n);

/// 2c + (9/2) H^2 - S.
double dim3_margin(double S, double H, double c);

/// alpha(n, H, c) - S.
double alpha_margin(double S, double H, double c, int n);

struct DimensionThreshold {
    bool part_i = false;   ///< 4 <= n <= 6 and S < 2 sqrt(n-1) c
    bool part_ii = false;  ///< n >= 7 and S < 2 sqrt(2) c
    double threshold = 0.0;
};

DimensionThreshold dimension_threshold(double S, double c, int n);

/// Lower bound for Ric(X) of a 3-dimensional submanifold,
/// (2/3)[3c + 6H^2 - S - (3/sqrt 6) H sqrt(S - 3H^2)]. Throws when S < 3H^2
/// beyond round-off.
double ricci_lower_bound_3d(double S, double H, double c);

/// Mean-curvature threshold for three-dimensional submanifolds of the unit
/// sphere, (2/3) sqrt(sqrt 2 - 1).
double dim3_mean_curvature_threshold();

// ---------------------------------------------------------------------------
// Report over a sampled (or homogeneous closed-form) manifold.

struct SamplePoint {
    std::vector<double> u;  ///< empty for closed-form models
    double S = 0.0;
    double H = 0.0;
    double R = 0.0;
};

enum class HypothesisStatus { Holds, Fails, Boundary, NotApplicable };

std::string to_string(HypothesisStatus status);

struct HypothesisCheck {
    std::string id;
    std::string condition;
    /// "pointwise" or "supremum"; on sampled data both reduce to the worst point.
    std::string kind;
    HypothesisStatus status = HypothesisStatus::NotApplicable;
    std::string note;
    /// Worst (smallest) margin over the points; positive means the hypothesis holds there.
    double margin = 0.0;
    std::size_t worst_point = 0;

    bool holds() const { return status == HypothesisStatus::Holds; }
};

struct PinchingReport {
    std::string label;
    std::string source;  ///< "closed_form" or "sampled"
    int n = 0;
    int p = 0;
    AmbientSpec ambient = AmbientSpec::space_form(0.0);
    std::size_t point_count = 0;

    double S_min = 0.0, S_max = 0.0;
    double H_min = 0.0, H_max = 0.0;

    /// Sampled extrema; only available for space-form ambients.
    std::optional<double> lambda_M;
    std::optional<double> mu_M;
    std::optional<double> ricci_3d_lower_bound;

    std::vector<HypothesisCheck> hypotheses;

    const HypothesisCheck* find(const std::string& id) const;
};

/// Margins closer to zero than this (relative to max(1, S_max)) are reported
/// as boundary cases rather than holding or failing.
inline constexpr double kBoundaryTol = 1e-12;

/// Boundary tolerance for finite-difference data, whose invariants carry
/// truncation error well above round-off.
inline constexpr double kSampledBoundaryTol = 1e-7;

PinchingReport build_pinching_report(std::string label, std::string source, int n, int p,
                                     const AmbientSpec& ambient, std::span<const SamplePoint> points,
                                     double boundary_tol = kBoundaryTol);

}  // namespace pinchgeo
