#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "pinchgeo/tensor_core.hpp"

namespace pinchgeo {

struct SearchBudget {
    int restarts = 32;
    std::uint64_t seed = 42;
    /// Objective evaluations allowed per local refinement.
    int max_evaluations = 3000;
};

/// Which side of the true extremum a heuristic search value lies on.
enum class BoundDirection { LowerBoundOnMax, UpperBoundOnMin };

struct SearchResult {
    double value = 0.0;
    /// Orthogonal n x n matrix; row i is the i-th basis vector of the extremal frame.
    Eigen::MatrixXd frame;
    /// Minimizing lambda for four-frame searches.
    std::optional<double> lambda;
    int restarts = 0;
    bool converged = false;
    std::uint64_t seed = 0;
    int evaluations = 0;
    BoundDirection bound = BoundDirection::LowerBoundOnMax;
};

/// Rotation parameters in exponential coordinates: exp(K) with K skew and
/// nonzero only on the listed (i, j), i < j, index pairs.
class RotationParam {
public:
    RotationParam(int n, std::vector<std::pair<int, int>> pairs);

    /// All n(n-1)/2 pairs.
    static RotationParam full(int n);
    /// Pairs (i, j) with i < k <= j: moves span(e_1..e_k) against its complement.
    static RotationParam split(int n, int k);

    int dim() const { return static_cast<int>(pairs_.size()); }
    Eigen::MatrixXd skew(const Eigen::VectorXd& params) const;
    Eigen::MatrixXd rotation(const Eigen::VectorXd& params) const;

private:
    int n_;
    std::vector<std::pair<int, int>> pairs_;
};

/// Haar-distributed element of SO(n) via QR of a Gaussian matrix.
Eigen::MatrixXd random_rotation(int n, std::mt19937_64& rng);

/// h'[a] = Q h[a] Q^T: the form expressed in the basis given by the rows of Q.
SecondFundamentalForm rotate_h(const SecondFundamentalForm& h, const Eigen::MatrixXd& q);

/// sum_{k > q} sum_{i <= q} [2 |h(e_i, e_k)|^2 - <h(e_i, e_i), h(e_k, e_k)>] in
/// the basis h is expressed in.
double lawson_simons_quantity(const SecondFundamentalForm& h, int q);

/// Multistart maximization over orthonormal bases. The value is a lower bound
/// on the true maximum.
SearchResult max_lawson_simons(const SecondFundamentalForm& h, int q, const SearchBudget& budget = {});

struct StableCurrentEntry {
    int q = 0;
    double max_value = 0.0;
    double threshold = 0.0;  ///< q(n - q) c
    double margin = 0.0;     ///< threshold - max_value
    bool holds = false;
    SearchResult search;
};

/// Per q in 1..n-1: does max over bases of the Lawson-Simons sum stay below
/// q(n-q)c? "holds" relies on a heuristic maximum.
std::vector<StableCurrentEntry> stable_current_condition(const SecondFundamentalForm& h, const AmbientSpec& ambient,
                                                         const SearchBudget& budget = {});

/// R_1313 + l^2 R_1414 + R_2323 + l^2 R_2424 - 2 l R_1234 evaluated on the frame.
double brendle_quantity(const CurvatureTensor& r, const FourFrame& frame, double lambda);

/// Minimum of the four-frame quantity over lambda in [-1, 1] for a fixed
/// frame: the grid {-1, -0.9, ..., 1} plus the interior stationary point.
std::pair<double, double> min_over_lambda(const CurvatureTensor& r, const FourFrame& frame);

/// Multistart minimization over four-frames and lambda. The value is an
/// upper bound on the true minimum. Requires n >= 4.
SearchResult min_brendle(const CurvatureTensor& r, const SearchBudget& budget = {});

struct BrendleCheck {
    SearchResult search;
    /// min over lambda of the analytic lower bound from the ambient data.
    std::optional<double> analytic_lower_bound;
    /// Positivity is certified only by the analytic bound.
    bool certified_positive = false;
};

BrendleCheck brendle_condition(const CurvatureTensor& r, double S, double H, const AmbientSpec& ambient,
                               const SearchBudget& budget = {});

}  // namespace pinchgeo
