#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pinchgeo/tensor_core.hpp"

namespace pinchgeo {

enum class Sampling {
    Gaussian,   ///< i.i.d. N(0, scale^2) coefficients, then symmetrized
    HeavyTail,  ///< Cauchy(0, scale) coefficients clipped to +-1e3 scale
    Both,       ///< alternate the two by trial index
};

struct TrialConfig {
    std::uint64_t seed = 42;
    int trials = 10000;
    int n_min = 2;
    int n_max = 8;
    int p_min = 1;
    int p_max = 4;
    double scale = 1.0;
    /// "a <= b" fails only if a - b > tol * max(1, |a|, |b|).
    double tol = 1e-9;
    Sampling sampling = Sampling::Both;

    /// Throws std::invalid_argument on out-of-range settings
    /// (trials >= 1, n in [2, 10], p in [1, 6]).
    void validate() const;
};

struct Violation {
    std::size_t trial = 0;
    std::string step;
    double lhs = 0.0;
    double rhs = 0.0;
    int n = 0;
    int p = 0;
    int q = 0;
    double c = 0.0;
    std::optional<double> lambda;
    /// Coefficients h[a][i][j], row-major per block, in the basis the step was checked in.
    std::vector<double> witness;
};

struct ViolationReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::size_t checks = 0;
    std::vector<Violation> violations;
    /// Smallest rhs - lhs of the suite's headline inequality.
    double min_slack = 0.0;
    /// Suite-specific extra: the umbilic n = 2 slack of the sectional bound, or the
    /// (n, H, c) location of the smallest slack for the alpha bound.
    std::optional<double> min_tight_slack;
    std::vector<double> min_slack_at;

    bool passed() const { return violations.empty(); }
};

/// Chain of inequalities bounding the Lawson-Simons sum in dimension 3 by
/// S - (9/2) H^2 - 2c, step by step, for q in {1, 2}.
ViolationReport verify_chain_3d(const TrialConfig& cfg);

/// Sectional-curvature lower bound from S and H on random planes.
ViolationReport verify_sectional_bound(const TrialConfig& cfg);

/// |R_1234| <= sum_a |h13 h24 - h14 h23| on random four-frames (n >= 4).
ViolationReport verify_cross_term(const TrialConfig& cfg);

/// Four-frame quantity >= four_frame_lower_bound on random frames and lambda.
ViolationReport verify_four_frame(const TrialConfig& cfg);

/// alpha(n, H, c) >= 2c + n^2 H^2/(n-1) over n in 2..10, H and c in [0, 10].
ViolationReport verify_alpha_bound(const TrialConfig& cfg);

/// scalar_curvature(gauss_curvature(h)) = n(n-1)c + n^2 H^2 - S, plus the
/// pointwise lambda/mu duality and the curvature symmetries.
ViolationReport verify_scalar_identity(const TrialConfig& cfg);

/// (1 + l^2) [8/3 (kmin - kmax/4) + n^2 H^2/(n-1) - S], l in [-1, 1].
double four_frame_lower_bound(double S, double H, const AmbientSpec& ambient, double lambda, int n);

/// Random symmetric form with the given sampling mode.
SecondFundamentalForm random_form(int n, int p, double scale, Sampling mode, std::mt19937_64& rng);

/// Suite names accepted by run_suite: chain3d, sectional, cross_term,
/// four_frame, alpha_bound, scalar.
const std::vector<std::string>& suite_names();

/// 1e5 for alpha_bound, 1e4 otherwise.
int default_trials(const std::string& suite);

/// Dispatches to the verify_* function; throws std::invalid_argument for an unknown name.
ViolationReport run_suite(const std::string& suite, const TrialConfig& cfg);

}  // namespace pinchgeo
