#include "pinchgeo/frame_search.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

#include "pinchgeo/inequality_oracle.hpp"
#include "pinchgeo/nelder_mead.hpp"

namespace pinchgeo {

RotationParam::RotationParam(int n, std::vector<std::pair<int, int>> pairs) : n_(n), pairs_(std::move(pairs)) {
    for (const auto& [i, j] : pairs_) {
        if (i < 0 || j >= n_ || i >= j) {
            throw std::invalid_argument("rotation pairs need 0 <= i < j < n");
        }
    }
}

RotationParam RotationParam::full(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            pairs.emplace_back(i, j);
        }
    }
    return RotationParam(n, std::move(pairs));
}

RotationParam RotationParam::split(int n, int k) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < k; ++i) {
        for (int j = k; j < n; ++j) {
            pairs.emplace_back(i, j);
        }
    }
    return RotationParam(n, std::move(pairs));
}

Eigen::MatrixXd RotationParam::skew(const Eigen::VectorXd& params) const {
    if (params.size() != dim()) {
        throw std::invalid_argument("rotation parameter vector has the wrong length");
    }
    Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n_, n_);
    for (std::size_t a = 0; a < pairs_.size(); ++a) {
        const auto [i, j] = pairs_[a];
        k(i, j) = params[static_cast<Eigen::Index>(a)];
        k(j, i) = -params[static_cast<Eigen::Index>(a)];
    }
    return k;
}

Eigen::MatrixXd RotationParam::rotation(const Eigen::VectorXd& params) const {
    return skew(params).exp();
}

Eigen::MatrixXd random_rotation(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXd g(n, n);
    for (Eigen::Index i = 0; i < g.size(); ++i) {
        g.data()[i] = gauss(rng);
    }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    Eigen::MatrixXd q = qr.householderQ();
    const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < n; ++i) {
        if (r(i, i) < 0.0) {
            q.col(i) = -q.col(i);
        }
    }
    if (q.determinant() < 0.0) {
        q.col(0) = -q.col(0);
    }
    return q;
}

SecondFundamentalForm rotate_h(const SecondFundamentalForm& h, const Eigen::MatrixXd& q) {
    const int n = h.n();
    if (q.rows() != n || q.cols() != n) {
        throw std::invalid_argument("rotation must be n x n");
    }
    if ((q.transpose() * q - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() > kOrthonormalTol) {
        throw std::invalid_argument("rotation matrix is not orthogonal");
    }
    std::vector<Eigen::MatrixXd> blocks;
    blocks.reserve(static_cast<std::size_t>(h.p()));
    for (const auto& b : h.blocks()) {
        blocks.push_back(q * b * q.transpose());
    }
    return SecondFundamentalForm(std::move(blocks));
}

double lawson_simons_quantity(const SecondFundamentalForm& h, int q) {
    const int n = h.n();
    if (q <= 0 || q >= n) {
        throw std::invalid_argument("Lawson-Simons index q must satisfy 0 < q < n");
    }
    double total = 0.0;
    for (const auto& b : h.blocks()) {
        for (int k = q; k < n; ++k) {
            for (int i = 0; i < q; ++i) {
                total += 2.0 * b(i, k) * b(i, k) - b(i, i) * b(k, k);
            }
        }
    }
    return total;
}

namespace {

std::mt19937_64 restart_rng(std::uint64_t seed, int restart) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(restart)};
    return std::mt19937_64(seq);
}

void require_budget(const SearchBudget& budget) {
    if (budget.restarts < 1) {
        throw std::invalid_argument("search budget needs at least one restart");
    }
}

/// Minimizes objective(Q) over rotations Q = exp(K) Q0 with multistart. Restart
/// 0 starts at the identity; later restarts at Haar-random rotations.
template <class Objective>
SearchResult multistart_minimize(int n, const RotationParam& param, const SearchBudget& budget, Objective&& objective) {
    require_budget(budget);
    SearchResult best;
    best.value = std::numeric_limits<double>::infinity();
    best.seed = budget.seed;
    best.restarts = budget.restarts;
    for (int r = 0; r < budget.restarts; ++r) {
        auto rng = restart_rng(budget.seed, r);
        const Eigen::MatrixXd q0 = r == 0 ? Eigen::MatrixXd::Identity(n, n) : random_rotation(n, rng);

        double local_best = std::numeric_limits<double>::infinity();
        Eigen::MatrixXd local_frame = q0;
        auto f = [&](const Eigen::VectorXd& x) {
            const Eigen::MatrixXd q = param.rotation(x) * q0;
            const double v = objective(q);
            if (v < local_best) {
                local_best = v;
                local_frame = q;
            }
            return v;
        };
        NelderMeadOptions opts;
        opts.max_evaluations = budget.max_evaluations;
        const NelderMeadResult nm = nelder_mead(f, Eigen::VectorXd::Zero(param.dim()), opts);
        best.evaluations += nm.evaluations;
        if (local_best < best.value) {
            best.value = local_best;
            best.frame = local_frame;
            best.converged = nm.converged;
        }
    }
    return best;
}

struct LambdaMin {
    double value;
    double lambda;
};

LambdaMin minimize_quadratic_in_lambda(double a, double b, double c) {
    // a + l^2 b - 2 l c on [-1, 1].
    auto q = [&](double l) { return a + l * l * b - 2.0 * l * c; };
    LambdaMin best{q(-1.0), -1.0};
    for (int k = -9; k <= 10; ++k) {
        const double l = k / 10.0;
        const double v = q(l);
        if (v < best.value) {
            best = {v, l};
        }
    }
    if (b > 0.0) {
        const double l = std::clamp(c / b, -1.0, 1.0);
        const double v = q(l);
        if (v < best.value) {
            best = {v, l};
        }
    }
    return best;
}

LambdaMin frame_lambda_min(const CurvatureTensor& r, const Eigen::VectorXd& e1, const Eigen::VectorXd& e2,
                           const Eigen::VectorXd& e3, const Eigen::VectorXd& e4) {
    const double a = r.evaluate(e1, e3, e1, e3) + r.evaluate(e2, e3, e2, e3);
    const double b = r.evaluate(e1, e4, e1, e4) + r.evaluate(e2, e4, e2, e4);
    const double c = r.evaluate(e1, e2, e3, e4);
    return minimize_quadratic_in_lambda(a, b, c);
}

}  // namespace

SearchResult max_lawson_simons(const SecondFundamentalForm& h, int q, const SearchBudget& budget) {
    const int n = h.n();
    if (q <= 0 || q >= n) {
        throw std::invalid_argument("Lawson-Simons index q must satisfy 0 < q < n");
    }
    // The sum only sees the splitting span(e_1..e_q) + complement.
    const RotationParam param = RotationParam::split(n, q);
    SearchResult res = multistart_minimize(n, param, budget, [&](const Eigen::MatrixXd& rot) {
        return -lawson_simons_quantity(rotate_h(h, rot), q);
    });
    res.value = lawson_simons_quantity(rotate_h(h, res.frame), q);
    res.bound = BoundDirection::LowerBoundOnMax;
    return res;
}

std::vector<StableCurrentEntry> stable_current_condition(const SecondFundamentalForm& h, const AmbientSpec& ambient,
                                                         const SearchBudget& budget) {
    const double c = ambient.c();
    const int n = h.n();
    std::vector<StableCurrentEntry> out;
    for (int q = 1; q < n; ++q) {
        StableCurrentEntry e;
        e.q = q;
        e.search = max_lawson_simons(h, q, budget);
        e.max_value = e.search.value;
        e.threshold = q * (n - q) * c;
        e.margin = e.threshold - e.max_value;
        const double tol = 1e-9 * std::max({1.0, std::abs(e.threshold), std::abs(e.max_value)});
        e.holds = e.max_value < e.threshold - tol;
        out.push_back(std::move(e));
    }
    return out;
}

double brendle_quantity(const CurvatureTensor& r, const FourFrame& frame, double lambda) {
    if (!(lambda >= -1.0 && lambda <= 1.0)) {
        throw std::invalid_argument("lambda must lie in [-1, 1]");
    }
    if (frame.dim() != r.n()) {
        throw std::invalid_argument("frame dimension does not match the curvature tensor");
    }
    const auto& e1 = frame[0];
    const auto& e2 = frame[1];
    const auto& e3 = frame[2];
    const auto& e4 = frame[3];
    const double l2 = lambda * lambda;
    return r.evaluate(e1, e3, e1, e3) + l2 * r.evaluate(e1, e4, e1, e4) + r.evaluate(e2, e3, e2, e3) +
           l2 * r.evaluate(e2, e4, e2, e4) - 2.0 * lambda * r.evaluate(e1, e2, e3, e4);
}

std::pair<double, double> min_over_lambda(const CurvatureTensor& r, const FourFrame& frame) {
    if (frame.dim() != r.n()) {
        throw std::invalid_argument("frame dimension does not match the curvature tensor");
    }
    const LambdaMin m = frame_lambda_min(r, frame[0], frame[1], frame[2], frame[3]);
    return {m.value, m.lambda};
}

SearchResult min_brendle(const CurvatureTensor& r, const SearchBudget& budget) {
    const int n = r.n();
    if (n < 4) {
        throw std::invalid_argument("four-frame search needs n >= 4");
    }
    // Rotations among e_5..e_n leave the first four rows unchanged to first order.
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < n; ++j) {
            pairs.emplace_back(i, j);
        }
    }
    const RotationParam param(n, std::move(pairs));
    SearchResult res = multistart_minimize(n, param, budget, [&](const Eigen::MatrixXd& rot) {
        return frame_lambda_min(r, rot.row(0).transpose(), rot.row(1).transpose(), rot.row(2).transpose(),
                                rot.row(3).transpose())
            .value;
    });
    const auto [value, lambda] = min_over_lambda(r, FourFrame::from_rows(res.frame));
    res.value = value;
    res.lambda = lambda;
    res.bound = BoundDirection::UpperBoundOnMin;
    return res;
}

BrendleCheck brendle_condition(const CurvatureTensor& r, double S, double H, const AmbientSpec& ambient,
                               const SearchBudget& budget) {
    BrendleCheck out;
    out.search = min_brendle(r, budget);
    // (1 + l^2) B is smallest at l = 0 when B >= 0 and at |l| = 1 otherwise.
    const double bracket = four_frame_lower_bound(S, H, ambient, 0.0, r.n());
    out.analytic_lower_bound = bracket >= 0.0 ? bracket : four_frame_lower_bound(S, H, ambient, 1.0, r.n());
    out.certified_positive = *out.analytic_lower_bound > 0.0;
    return out;
}

}  // namespace pinchgeo
