#include "pinchgeo/inequality_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "pinchgeo/frame_search.hpp"
#include "pinchgeo/parallel.hpp"
#include "pinchgeo/pinching.hpp"

namespace pinchgeo {

void TrialConfig::validate() const {
    if (trials < 1) {
        throw std::invalid_argument("trials must be >= 1");
    }
    if (n_min < 2 || n_max > 10 || n_min > n_max) {
        throw std::invalid_argument("n range must lie within [2, 10]");
    }
    if (p_min < 1 || p_max > 6 || p_min > p_max) {
        throw std::invalid_argument("p range must lie within [1, 6]");
    }
    if (!(scale > 0.0) || !(tol > 0.0)) {
        throw std::invalid_argument("scale and tol must be positive");
    }
}

double four_frame_lower_bound(double S, double H, const AmbientSpec& ambient, double lambda, int n) {
    if (!(lambda >= -1.0 && lambda <= 1.0)) {
        throw std::invalid_argument("lambda must lie in [-1, 1]");
    }
    return (1.0 + lambda * lambda) * ambient_pinching_margin(S, H, ambient, n);
}

SecondFundamentalForm random_form(int n, int p, double scale, Sampling mode, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, scale);
    std::cauchy_distribution<double> cauchy(0.0, scale);
    const double clip = 1e3 * scale;
    std::vector<Eigen::MatrixXd> blocks;
    for (int a = 0; a < p; ++a) {
        Eigen::MatrixXd b(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = i; j < n; ++j) {
                const double v = mode == Sampling::HeavyTail ? std::clamp(cauchy(rng), -clip, clip) : gauss(rng);
                b(i, j) = v;
                b(j, i) = v;
            }
        }
        blocks.push_back(std::move(b));
    }
    return SecondFundamentalForm(std::move(blocks));
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint32_t suite_tag, std::size_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), suite_tag,
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    return std::mt19937_64(seq);
}

Sampling trial_sampling(const TrialConfig& cfg, std::size_t trial) {
    if (cfg.sampling != Sampling::Both) {
        return cfg.sampling;
    }
    return trial % 2 == 0 ? Sampling::Gaussian : Sampling::HeavyTail;
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::vector<double> flatten(const SecondFundamentalForm& h) {
    std::vector<double> out;
    for (const auto& b : h.blocks()) {
        for (int i = 0; i < h.n(); ++i) {
            for (int j = 0; j < h.n(); ++j) {
                out.push_back(b(i, j));
            }
        }
    }
    return out;
}

/// Per-trial scratch: checks counted, violations found, smallest headline slack.
struct TrialLog {
    std::size_t checks = 0;
    std::vector<Violation> violations;
    double min_slack = kInf;
    double tight_slack = kInf;
    std::vector<double> slack_at;
};

struct Context {
    Context(const TrialConfig& cfg_, std::size_t trial_, const SecondFundamentalForm* h_ = nullptr, int q_ = 0,
            double c_ = 0.0, std::optional<double> lambda_ = std::nullopt)
        : cfg(cfg_), trial(trial_), h(h_), q(q_), c(c_), lambda(lambda_) {}

    const TrialConfig& cfg;
    std::size_t trial;
    const SecondFundamentalForm* h;
    int q;
    double c;
    std::optional<double> lambda;
    /// Size of the inputs; rounding in a step grows with it even when both sides are small.
    double magnitude = 0.0;
};

/// Records lhs <= rhs under the relative tolerance.
bool check_le(TrialLog& log, const Context& ctx, const std::string& step, double lhs, double rhs) {
    ++log.checks;
    const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs), ctx.magnitude});
    if (lhs - rhs > ctx.cfg.tol * scale || !std::isfinite(lhs) || !std::isfinite(rhs)) {
        Violation v;
        v.trial = ctx.trial;
        v.step = step;
        v.lhs = lhs;
        v.rhs = rhs;
        v.q = ctx.q;
        v.c = ctx.c;
        v.lambda = ctx.lambda;
        if (ctx.h != nullptr) {
            v.n = ctx.h->n();
            v.p = ctx.h->p();
            v.witness = flatten(*ctx.h);
        }
        log.violations.push_back(std::move(v));
        return false;
    }
    return true;
}

bool check_eq(TrialLog& log, const Context& ctx, const std::string& step, double lhs, double rhs) {
    const bool upper = check_le(log, ctx, step, lhs, rhs);
    if (!upper) {
        return false;
    }
    --log.checks;
    return check_le(log, ctx, step, rhs, lhs);
}

template <class Trial>
ViolationReport run_trials(const std::string& suite, const TrialConfig& cfg, std::size_t trials, Trial&& trial) {
    std::vector<TrialLog> logs(trials);
    parallel_for(trials, [&](std::size_t t) { trial(t, logs[t]); });

    ViolationReport rep;
    rep.suite = suite;
    rep.seed = cfg.seed;
    rep.trials = trials;
    rep.min_slack = kInf;
    double tight = kInf;
    for (auto& log : logs) {
        rep.checks += log.checks;
        for (auto& v : log.violations) {
            rep.violations.push_back(std::move(v));
        }
        if (log.min_slack < rep.min_slack) {
            rep.min_slack = log.min_slack;
            rep.min_slack_at = log.slack_at;
        }
        tight = std::min(tight, log.tight_slack);
    }
    if (tight < kInf) {
        rep.min_tight_slack = tight;
    }
    return rep;
}

// --- Dimension-three chain ------------------------------------------------

void chain_3d_for_q(TrialLog& log, Context ctx, const SecondFundamentalForm& h, double c) {
    constexpr int n = 3;
    const int q = ctx.q;
    const int r = n - q;
    const double qd = q;
    const double rd = r;
    const double S = squared_norm_S(h);
    const double H = mean_curvature_H(h);

    double direct = 0.0;          // the double sum, straight from its definition
    double regrouped = 0.0;       // per-normal regrouping with partial traces
    double middle_bound = 0.0;    // sum of the per-normal bounds before AM-GM
    double amgm_bound = 0.0;      // after AM-GM on |T| sqrt(...)
    for (int a = 0; a < h.p(); ++a) {
        const Eigen::MatrixXd& b = h.block(a);
        double cross2 = 0.0;
        double partial = 0.0;  // sum_{i <= q} h_ii
        for (int i = 0; i < q; ++i) {
            partial += b(i, i);
            for (int k = q; k < n; ++k) {
                direct += 2.0 * b(i, k) * b(i, k) - b(i, i) * b(k, k);
                cross2 += b(i, k) * b(i, k);
            }
        }
        const double T = b.trace();
        const double rest = T - partial;  // sum_{k > q} h_kk
        const double S_a = b.squaredNorm();
        const double tilde = b.diagonal().squaredNorm();
        regrouped += 2.0 * cross2 - partial * rest;

        double sq_first = 0.0;
        double sq_rest = 0.0;
        for (int i = 0; i < q; ++i) {
            sq_first += b(i, i) * b(i, i);
        }
        for (int k = q; k < n; ++k) {
            sq_rest += b(k, k) * b(k, k);
        }
        // qr S~ >= r (sum_{i<=q} h_ii)^2 + q (sum_{k>q} h_kk)^2
        check_le(log, ctx, "partial_traces", rd * partial * partial + qd * rest * rest, qd * rd * (sq_first + sq_rest));
        // 3A^2 - 2qTA + qT^2 - qr S~ <= 0
        check_le(log, ctx, "quadratic_in_partial_trace", 3.0 * partial * partial - 2.0 * qd * T * partial + qd * T * T - qd * rd * tilde, 0.0);
        const double Z = -partial * rest;
        check_le(log, ctx, "quadratic_in_product", 3.0 * Z + (rd - qd) * T * partial + qd * T * T - qd * rd * tilde, 0.0);

        double dev_first = 0.0;
        double dev_rest = 0.0;
        for (int i = 0; i < q; ++i) {
            dev_first += b(i, i) - T / 3.0;
        }
        for (int k = q; k < n; ++k) {
            dev_rest += b(k, k) - T / 3.0;
        }
        const double spread = tilde - T * T / 3.0;
        check_le(log, ctx, "deviation_cauchy_schwarz", dev_first * dev_first / qd + dev_rest * dev_rest / rd, spread);
        check_eq(log, ctx, "deviation_identity", dev_first * dev_first / qd + dev_rest * dev_rest / rd,
                 (1.0 / qd + 1.0 / rd) * dev_first * dev_first);
        const double root = std::sqrt(std::max(0.0, qd * rd / 3.0 * spread));
        check_le(log, ctx, "deviation_bound", std::abs(dev_first), root);
        check_le(log, ctx, "product_bound", Z,
                 qd * rd / 3.0 * tilde - (qd * (rd - qd) / 9.0 + qd / 3.0) * T * T +
                     std::abs(rd - qd) / 3.0 * std::abs(T) * root);

        const double root23 = std::sqrt(std::max(0.0, 2.0 / 3.0 * spread));
        middle_bound += S_a - tilde / 3.0 - 4.0 / 9.0 * T * T + std::abs(T) / 3.0 * root23;
        amgm_bound += S_a - tilde / 3.0 - 4.0 / 9.0 * T * T + T * T / 18.0 + spread / 3.0;
    }
    check_eq(log, ctx, "regrouping", direct, regrouped);
    check_eq(log, ctx, "lawson_simons_definition", direct, lawson_simons_quantity(h, q));
    const double lhs = direct - qd * rd * c;
    check_le(log, ctx, "per_normal_bound", lhs, middle_bound - 2.0 * c);
    check_le(log, ctx, "am_gm", middle_bound, amgm_bound);
    check_eq(log, ctx, "closed_form", amgm_bound - 2.0 * c, S - 4.5 * H * H - 2.0 * c);
    const double rhs = S - 4.5 * H * H - 2.0 * c;
    check_le(log, ctx, "chain_end", lhs, rhs);
    log.min_slack = std::min(log.min_slack, rhs - lhs);
}

// --- Sectional-curvature lower bound ---------------------------------------

void sectional_instance(TrialLog& log, Context ctx, const SecondFundamentalForm& h, const Eigen::MatrixXd& rot,
                        double c, bool tight) {
    const int n = h.n();
    const auto ambient = AmbientSpec::space_form(c);
    const SecondFundamentalForm hr = rotate_h(h, rot);
    ctx.h = &hr;
    ctx.c = c;
    ctx.magnitude = (n - 1.0) * (squared_norm_S(h) + c);

    const CurvatureTensor r = gauss_curvature(h, ambient);
    const double K = sectional_curvature(r, TangentPlane::from_rows(rot));
    const double K_rotated = gauss_curvature(hr, ambient)(0, 1, 0, 1);
    check_eq(log, ctx, "sectional_frame_consistency", K, K_rotated);

    const double S = squared_norm_S(hr);
    const double H = mean_curvature_H(hr);
    const double gap = n * n / (n - 1.0);

    double extra = 0.0;  // sum over i < j, (i, j) != (1, 2)
    double middle = 0.0;
    for (int a = 0; a < hr.p(); ++a) {
        const Eigen::MatrixXd& b = hr.block(a);
        const double T = b.trace();
        const double S_a = b.squaredNorm();
        const double diag2 = b.diagonal().squaredNorm();
        const double off2 = S_a - diag2;
        check_eq(log, ctx, "trace_identity", T * T, (n - 1.0) * (diag2 + off2 + T * T / (n - 1.0) - S_a));
        double rest2 = 0.0;
        for (int i = 2; i < n; ++i) {
            rest2 += b(i, i) * b(i, i);
        }
        check_le(log, ctx, "trace_cauchy_schwarz", T * T, (n - 1.0) * ((b(0, 0) + b(1, 1)) * (b(0, 0) + b(1, 1)) + rest2));
        check_le(log, ctx, "diagonal_product_bound", off2 + T * T / (n - 1.0) - S_a, 2.0 * b(0, 0) * b(1, 1));
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (i == 0 && j == 1) {
                    continue;
                }
                extra += b(i, j) * b(i, j);
            }
        }
        double row1 = 0.0;
        double row2 = 0.0;
        double tail = 0.0;
        for (int j = 2; j < n; ++j) {
            row1 += b(0, j) * b(0, j);
            row2 += b(1, j) * b(1, j);
        }
        for (int i = 2; i < n; ++i) {
            for (int j = 2; j < n; ++j) {
                if (i != j) {
                    tail += b(i, j) * b(i, j);
                }
            }
        }
        middle += row1 + row2 + 0.5 * tail;
    }
    const double middle_bound = middle + 0.5 * (gap * H * H - S) + c;
    const double rhs = 0.5 * (2.0 * c + gap * H * H - S) + extra;
    check_le(log, ctx, "gauss_regrouped", middle_bound, K);
    check_eq(log, ctx, "regrouped_equals_bound", middle_bound, rhs);
    check_le(log, ctx, "sectional_bound", rhs, K);
    if (tight) {
        log.tight_slack = std::min(log.tight_slack, K - rhs);
    } else {
        log.min_slack = std::min(log.min_slack, K - rhs);
    }
}

}  // namespace

ViolationReport verify_chain_3d(const TrialConfig& cfg) {
    cfg.validate();
    return run_trials("chain3d", cfg, static_cast<std::size_t>(cfg.trials), [&](std::size_t t, TrialLog& log) {
        auto rng = trial_rng(cfg.seed, 1, t);
        const int p = uniform_int(rng, cfg.p_min, cfg.p_max);
        const double c = std::uniform_real_distribution<double>(0.0, 2.0)(rng);
        const SecondFundamentalForm h = random_form(3, p, cfg.scale, trial_sampling(cfg, t), rng);
        for (int q = 1; q <= 2; ++q) {
            Context ctx{cfg, t, &h, q, c};
            ctx.magnitude = squared_norm_S(h);
            chain_3d_for_q(log, ctx, h, c);
        }
    });
}

ViolationReport verify_sectional_bound(const TrialConfig& cfg) {
    cfg.validate();
    // Umbilic surfaces (n = 2) realize equality; they are appended after the random trials.
    const std::size_t umbilic = 100;
    const auto random_trials = static_cast<std::size_t>(cfg.trials);
    return run_trials("sectional", cfg, random_trials + umbilic, [&](std::size_t t, TrialLog& log) {
        auto rng = trial_rng(cfg.seed, 2, t);
        Context ctx{cfg, t};
        if (t >= random_trials) {
            const double mu = std::normal_distribution<double>(0.0, cfg.scale)(rng);
            const double c = (t % 2 == 0) ? 0.0 : 1.0;
            const int p = uniform_int(rng, cfg.p_min, cfg.p_max);
            std::vector<Eigen::MatrixXd> blocks(static_cast<std::size_t>(p), Eigen::MatrixXd::Zero(2, 2));
            blocks[0] = mu * Eigen::MatrixXd::Identity(2, 2);
            const SecondFundamentalForm h(std::move(blocks));
            sectional_instance(log, ctx, h, random_rotation(2, rng), c, true);
            return;
        }
        const int n = uniform_int(rng, cfg.n_min, cfg.n_max);
        const int p = uniform_int(rng, cfg.p_min, cfg.p_max);
        const double c = uniform_int(rng, 0, 1);
        const SecondFundamentalForm h = random_form(n, p, cfg.scale, trial_sampling(cfg, t), rng);
        sectional_instance(log, ctx, h, random_rotation(n, rng), c, false);
    });
}

ViolationReport verify_cross_term(const TrialConfig& cfg) {
    cfg.validate();
    const int n_lo = std::max(4, cfg.n_min);
    const int n_hi = std::max(4, cfg.n_max);
    return run_trials("cross_term", cfg, static_cast<std::size_t>(cfg.trials), [&](std::size_t t, TrialLog& log) {
        auto rng = trial_rng(cfg.seed, 3, t);
        const int n = uniform_int(rng, n_lo, n_hi);
        const int p = uniform_int(rng, cfg.p_min, cfg.p_max);
        const double c = uniform_int(rng, 0, 1);
        const SecondFundamentalForm h = random_form(n, p, cfg.scale, trial_sampling(cfg, t), rng);
        const Eigen::MatrixXd rot = random_rotation(n, rng);
        const SecondFundamentalForm hr = rotate_h(h, rot);
        Context ctx{cfg, t, &hr, 0, c};
        ctx.magnitude = squared_norm_S(h) + c;

        const CurvatureTensor r = gauss_curvature(h, AmbientSpec::space_form(c));
        const FourFrame frame = FourFrame::from_rows(rot);
        const double r1234 = r.evaluate(frame[0], frame[1], frame[2], frame[3]);
        check_eq(log, ctx, "frame_contraction", r1234, gauss_curvature(hr, AmbientSpec::space_form(c))(0, 1, 2, 3));

        double bound = 0.0;
        for (const auto& b : hr.blocks()) {
            bound += std::abs(b(0, 2) * b(1, 3) - b(0, 3) * b(1, 2));
        }
        check_le(log, ctx, "cross_term", std::abs(r1234), bound);
        if (p == 1) {
            check_eq(log, ctx, "cross_term_single_normal", std::abs(r1234), bound);
        }
        log.min_slack = std::min(log.min_slack, bound - std::abs(r1234));
    });
}

ViolationReport verify_four_frame(const TrialConfig& cfg) {
    cfg.validate();
    const int n_lo = std::max(4, cfg.n_min);
    const int n_hi = std::max(4, cfg.n_max);
    return run_trials("four_frame", cfg, static_cast<std::size_t>(cfg.trials), [&](std::size_t t, TrialLog& log) {
        auto rng = trial_rng(cfg.seed, 4, t);
        const int n = uniform_int(rng, n_lo, n_hi);
        const int p = uniform_int(rng, cfg.p_min, cfg.p_max);
        const double c = uniform_int(rng, 0, 1);
        const auto ambient = AmbientSpec::space_form(c);
        const SecondFundamentalForm h = random_form(n, p, cfg.scale, trial_sampling(cfg, t), rng);
        const Eigen::MatrixXd rot = random_rotation(n, rng);
        // Every fourth trial pins lambda to an endpoint of [-1, 1].
        const double lambda = t % 4 == 3 ? (t % 8 == 3 ? 1.0 : -1.0)
                                         : std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
        const SecondFundamentalForm hr = rotate_h(h, rot);
        Context ctx{cfg, t, &hr, 0, c, lambda};
        ctx.magnitude = n * (squared_norm_S(h) + c);

        const CurvatureTensor r = gauss_curvature(h, ambient);
        const double value = brendle_quantity(r, FourFrame::from_rows(rot), lambda);
        const double S = squared_norm_S(h);
        const double H = mean_curvature_H(h);
        const double gap = n * n / (n - 1.0);

        // Sectional bound on the planes (1,3), (2,3), (1,4), (2,4)
        // plus |R_1234| <= sum |h13 h24 - h14 h23|.
        auto skip_sum = [&](int si, int sj) {
            double s = 0.0;
            for (const auto& b : hr.blocks()) {
                for (int i = 0; i < n; ++i) {
                    for (int j = i + 1; j < n; ++j) {
                        if (!(i == si && j == sj)) {
                            s += b(i, j) * b(i, j);
                        }
                    }
                }
            }
            return s;
        };
        double cross = 0.0;
        for (const auto& b : hr.blocks()) {
            cross += std::abs(b(0, 2) * b(1, 3) - b(0, 3) * b(1, 2));
        }
        const double l2 = lambda * lambda;
        const double first = (1.0 + l2) * (2.0 * c + gap * H * H - S) + skip_sum(0, 2) + skip_sum(1, 2) +
                             l2 * (skip_sum(0, 3) + skip_sum(1, 3)) - 2.0 * std::abs(lambda) * cross;
        check_le(log, ctx, "four_planes_bound", first, value);

        const double bound = four_frame_lower_bound(S, H, ambient, lambda, n);
        check_le(log, ctx, "four_frame", bound, value);
        log.min_slack = std::min(log.min_slack, value - bound);
    });
}

ViolationReport verify_alpha_bound(const TrialConfig& cfg) {
    cfg.validate();
    return run_trials("alpha_bound", cfg, static_cast<std::size_t>(cfg.trials), [&](std::size_t t, TrialLog& log) {
        auto rng = trial_rng(cfg.seed, 5, t);
        const int n = uniform_int(rng, 2, 10);
        const double H = std::uniform_real_distribution<double>(0.0, 10.0)(rng);
        const double c = std::uniform_real_distribution<double>(0.0, 10.0)(rng);
        Context ctx{cfg, t, nullptr, 0, c};

        // Independent extended-precision evaluation of the printed formula.
        const long double nl = n;
        const long double Hl = H;
        const long double cl = c;
        const long double H2 = Hl * Hl;
        const long double alpha_ext = nl * cl + nl * nl * nl / (2.0L * (nl - 1.0L)) * H2 -
                                      nl * (nl - 2.0L) / (2.0L * (nl - 1.0L)) *
                                          std::sqrt(nl * nl * H2 * H2 + 4.0L * (nl - 1.0L) * cl * H2);
        const long double rhs_ext = 2.0L * cl + nl * nl * H2 / (nl - 1.0L);
        const double slack = static_cast<double>(alpha_ext - rhs_ext);

        check_eq(log, ctx, "alpha_consistency", alpha(n, H, c), static_cast<double>(alpha_ext));
        ++log.checks;
        if (slack < -1e-12) {
            Violation v;
            v.trial = t;
            v.step = "alpha_bound";
            v.lhs = static_cast<double>(rhs_ext);
            v.rhs = static_cast<double>(alpha_ext);
            v.n = n;
            v.c = c;
            v.witness = {H};
            log.violations.push_back(std::move(v));
        }
        log.min_slack = slack;
        log.slack_at = {static_cast<double>(n), H, c};
    });
}

ViolationReport verify_scalar_identity(const TrialConfig& cfg) {
    cfg.validate();
    return run_trials("scalar", cfg, static_cast<std::size_t>(cfg.trials), [&](std::size_t t, TrialLog& log) {
        auto rng = trial_rng(cfg.seed, 6, t);
        const int n = uniform_int(rng, cfg.n_min, cfg.n_max);
        const int p = uniform_int(rng, cfg.p_min, cfg.p_max);
        const double c = std::uniform_real_distribution<double>(0.0, 2.0)(rng);
        const SecondFundamentalForm h = random_form(n, p, cfg.scale, trial_sampling(cfg, t), rng);
        Context ctx{cfg, t, &h, 0, c};
        ctx.magnitude = squared_norm_S(h) + n * n * c;
        Context strict = ctx;
        strict.magnitude = 0.0;
        TrialConfig tight_cfg = cfg;
        tight_cfg.tol = std::min(cfg.tol, 1e-10);
        Context tight_ctx{tight_cfg, t, &h, 0, c};
        tight_ctx.magnitude = ctx.magnitude;

        const CurvatureTensor r = gauss_curvature(h, AmbientSpec::space_form(c));
        const double S = squared_norm_S(h);
        const double H = mean_curvature_H(h);
        const double R = scalar_curvature(r);
        const double expected = n * (n - 1.0) * c + n * n * H * H - S;
        check_eq(log, tight_ctx, "scalar_identity", R, expected);

        const double nn = n;
        const double lambda_side = S - nn * nn * H * H / (nn - 1.0) - 2.0 * c;
        const double mu_side = R - nn * nn * (nn - 2.0) / (nn - 1.0) * H * H - (nn + 1.0) * (nn - 2.0) * c;
        check_eq(log, tight_ctx, "lambda_mu_duality", lambda_side, -mu_side);

        double largest = 1.0;
        for (double v : r.entries()) {
            largest = std::max(largest, std::abs(v));
        }
        check_le(log, strict, "curvature_symmetries", r.symmetry_defect(), 1e-13 * largest);
        check_le(log, strict, "S_at_least_nH2", n * H * H, S);
        log.min_slack = std::min(log.min_slack, S - n * H * H);
    });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"chain3d", "sectional", "cross_term", "four_frame", "alpha_bound", "scalar"};
    return names;
}

int default_trials(const std::string& suite) { return suite == "alpha_bound" ? 100000 : 10000; }

ViolationReport run_suite(const std::string& suite, const TrialConfig& cfg) {
    if (suite == "chain3d") {
        return verify_chain_3d(cfg);
    }
    if (suite == "sectional") {
        return verify_sectional_bound(cfg);
    }
    if (suite == "cross_term") {
        return verify_cross_term(cfg);
    }
    if (suite == "four_frame") {
        return verify_four_frame(cfg);
    }
    if (suite == "alpha_bound") {
        return verify_alpha_bound(cfg);
    }
    if (suite == "scalar") {
        return verify_scalar_identity(cfg);
    }
    throw std::invalid_argument("unknown verification suite '" + suite + "'");
}

}  // namespace pinchgeo
