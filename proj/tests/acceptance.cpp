// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pinchgeo/app/commands.hpp"
#include "pinchgeo/frame_search.hpp"
#include "pinchgeo/immersion.hpp"
#include "pinchgeo/inequality_oracle.hpp"
#include "pinchgeo/model_spaces.hpp"
#include "pinchgeo/pinching.hpp"

using namespace pinchgeo;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, double a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

bool run(const char* id, const char* title, double limit_s, const std::function<Outcome()>& body) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double t = seconds_since(t0);
    if (limit_s > 0.0 && t > limit_s) {
        o.pass = false;
        o.detail += "; over time limit " + fmt("%.0f s", limit_s);
    }
    std::printf("[%s] %s %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), t);
    std::fflush(stdout);
    return o.pass;
}

double clifford_margin_formula(int n, double lambda) { return (n - 2.0) / (n - 1.0) * lambda * lambda; }

double margin_of(const SecondFundamentalForm& h, int n) {
    const double H = mean_curvature_H(h);
    return squared_norm_S(h) - n * n * H * H / (n - 1.0) - 2.0;
}

Outcome ac1() {
    double closed_err = 0.0;
    for (int n = 2; n <= 8; ++n) {
        for (double l : {0.25, 0.5, 1.0, 2.0, 4.0}) {
            closed_err = std::max(closed_err, std::abs(margin_of(exact_h(CliffordProduct{n, l}).h, n) -
                                                       clifford_margin_formula(n, l)));
        }
    }
    double numeric_err = 0.0;
    for (int n : {2, 3}) {
        for (double l : {0.5, 1.0, 2.0}) {
            for (const auto& pd : sample_manifold(as_immersion(CliffordProduct{n, l}, 4))) {
                numeric_err = std::max(numeric_err, std::abs(margin_of(pd.h, n) - clifford_margin_formula(n, l)));
            }
        }
    }
    return {closed_err <= 1e-10 && numeric_err <= 1e-4,
            "closed-form max error " + fmt("%.2e", closed_err) + ", numeric max error " + fmt("%.2e", numeric_err)};
}

Outcome ac2() {
    double worst = 0.0;
    double cert_worst = 0.0;
    for (int n = 2; n <= 8; ++n) {
        std::vector<EmbeddingSample> catalog;
        for (double h0 : {0.5, 1.0, 2.0}) {
            const ExactModel m = exact_h(SphericalCylinder{n, h0});
            const double S = squared_norm_S(m.h);
            const double H = mean_curvature_H(m.h);
            const double R = scalar_curvature(gauss_curvature(m.h, m.ambient));
            const double lam = lambda_pinch(std::vector<ShapePoint>{{S, H}}, n, 0.0);
            const double mu = mu_pinch(std::vector<ScalarPoint>{{R, H}}, n, 0.0);
            worst = std::max({worst, std::abs(lam), std::abs(mu)});
            catalog.push_back({model_name(SphericalCylinder{n, h0}), n, 0.0, {{R, H}}});
        }
        const InvariantCertificate cert = invariant_certificate(catalog);
        cert_worst = std::max(cert_worst, std::abs(cert.value));
        if (!cert.bounds_I0) {
            return {false, "certificate does not bound I_0"};
        }
    }
    return {worst <= 1e-12 && cert_worst <= 1e-12,
            "max |lambda|, |mu| " + fmt("%.2e", worst) + ", max |certificate| " + fmt("%.2e", cert_worst)};
}

Outcome ac3() {
    double worst = 0.0;
    for (int n = 2; n <= 10; ++n) {
        for (double c : {0.5, 1.0, 2.0}) {
            worst = std::max(worst, std::abs(alpha_min_over_H(n, c).value - 2.0 * std::sqrt(n - 1.0) * c));
        }
    }
    return {worst <= 1e-8, "max error " + fmt("%.2e", worst)};
}

std::string suite_detail(const ViolationReport& r) {
    return std::to_string(r.trials) + " trials, " + std::to_string(r.checks) + " checks, " +
           std::to_string(r.violations.size()) + " violations, min slack " + fmt("%.3e", r.min_slack);
}

TrialConfig default_config(const std::string& suite) {
    TrialConfig cfg;
    cfg.trials = default_trials(suite);
    return cfg;
}

Outcome ac4() {
    TrialConfig cfg = default_config("alpha_bound");
    cfg.trials = 100000;
    const ViolationReport r = verify_alpha_bound(cfg);
    return {r.passed() && r.min_slack >= 0.0, suite_detail(r)};
}

Outcome ac5() {
    TrialConfig cfg = default_config("chain3d");
    cfg.trials = 10000;
    cfg.p_max = 4;
    cfg.sampling = Sampling::Both;
    const ViolationReport r = verify_chain_3d(cfg);
    return {r.passed(), suite_detail(r)};
}

Outcome ac6() {
    TrialConfig cfg = default_config("sectional");
    cfg.trials = 10000;
    cfg.n_max = 8;
    cfg.p_max = 4;
    const ViolationReport r = verify_sectional_bound(cfg);
    const double tight = r.min_tight_slack.value_or(1.0);
    return {r.passed() && std::abs(tight) < 1e-8, suite_detail(r) + ", umbilic n=2 slack " + fmt("%.2e", tight)};
}

Outcome ac7() {
    bool ok = true;
    std::size_t trials = 0;
    std::size_t violations = 0;
    for (int n = 4; n <= 8; ++n) {
        TrialConfig cfg;
        cfg.trials = 10000;
        cfg.n_min = n;
        cfg.n_max = n;
        cfg.seed = 42 + static_cast<std::uint64_t>(n);
        for (const ViolationReport& r : {verify_cross_term(cfg), verify_four_frame(cfg)}) {
            ok = ok && r.passed();
            trials += r.trials;
            violations += r.violations.size();
        }
    }
    return {ok, "n = 4..8, " + std::to_string(trials) + " trials, " + std::to_string(violations) + " violations"};
}

Outcome ac8() {
    const ExactModel m = exact_h(RoundSphere{4, 1.0});
    const SearchResult res = min_brendle(gauss_curvature(m.h, m.ambient));
    const double l = res.lambda.value_or(1.0);
    return {std::abs(res.value - 2.0) <= 1e-6 && std::abs(l) <= 1e-6,
            "min " + fmt("%.12g", res.value) + " at lambda " + fmt("%.3g", l)};
}

Eigen::VectorXd invariants(const SecondFundamentalForm& h) {
    const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(h.shape_square()).eigenvalues();
    Eigen::VectorXd out(ev.size() + 2);
    out << squared_norm_S(h), mean_curvature_H(h), ev;
    return out;
}

Outcome ac9() {
    const std::vector<ModelId> models{RoundSphere{3, 1.0}, SphericalCylinder{3, 1.0}, CliffordProduct{3, 0.7}};
    double worst = 0.0;
    double ratio_lo = 1e300;
    double ratio_hi = 0.0;
    for (const ModelId& model : models) {
        const Eigen::VectorXd truth = invariants(exact_h(model).h);
        const ImmersionSpec spec = as_immersion(model, 4);
        for (const auto& pd : sample_manifold(spec)) {
            worst = std::max(worst, (invariants(pd.h) - truth).cwiseAbs().maxCoeff());
        }
        // Plain central differences halve to a quarter of the error.
        const Eigen::VectorXd u = sample_manifold(spec).front().u;
        std::vector<double> errors;
        for (double step : {1e-2, 5e-3, 2.5e-3}) {
            errors.push_back((invariants(second_fundamental_form_at(spec, u, step, false).h) - truth).norm());
        }
        for (std::size_t k = 1; k < errors.size(); ++k) {
            ratio_lo = std::min(ratio_lo, errors[k - 1] / errors[k]);
            ratio_hi = std::max(ratio_hi, errors[k - 1] / errors[k]);
        }
    }
    return {worst <= 1e-4 && ratio_lo > 3.5 && ratio_hi < 4.5,
            "max invariant error " + fmt("%.2e", worst) + ", halving ratios in [" + fmt("%.3f", ratio_lo) + ", " +
                fmt("%.3f", ratio_hi) + "]"};
}

Outcome ac10() {
    struct Case {
        SecondFundamentalForm h;
        AmbientSpec ambient;
    };
    std::vector<Case> cases;
    for (const ModelId& model : std::vector<ModelId>{RoundSphere{3, 1.0}, SphericalCylinder{3, 1.0},
                                                     CliffordProduct{3, 0.5}, CliffordProduct{3, 1.0},
                                                     CliffordProduct{3, 2.0}}) {
        const ExactModel m = exact_h(model);
        cases.push_back({m.h, m.ambient});
    }
    std::mt19937_64 rng(42);
    std::normal_distribution<double> g;
    double worst_gap = 1e300;
    for (const Case& cs : cases) {
        const auto r = gauss_curvature(cs.h, cs.ambient);
        const double bound =
            ricci_lower_bound_3d(squared_norm_S(cs.h), mean_curvature_H(cs.h), cs.ambient.c());
        double lowest = 1e300;
        for (int k = 0; k < 1000; ++k) {
            Eigen::Vector3d x(g(rng), g(rng), g(rng));
            lowest = std::min(lowest, ricci_curvature(r, x.normalized()));
        }
        worst_gap = std::min(worst_gap, lowest - bound);
    }
    // Totally geodesic S^3 in S^4.
    const SecondFundamentalForm zero(3, 1);
    const auto r0 = gauss_curvature(zero, AmbientSpec::space_form(1.0));
    const double geodesic_bound = ricci_lower_bound_3d(0.0, 0.0, 1.0);
    const double geodesic_ric = ricci_curvature(r0, Eigen::Vector3d(0.6, 0.0, 0.8));
    const double eq_err = std::abs(geodesic_bound - geodesic_ric);
    return {worst_gap >= -1e-8 && eq_err <= 1e-10 && std::abs(geodesic_bound - 2.0) <= 1e-10,
            "min(Ric - bound) " + fmt("%.3e", worst_gap) + ", geodesic |bound - Ric| " + fmt("%.1e", eq_err)};
}

std::string cli_stdout(std::vector<std::string> args, int& code) {
    args.insert(args.begin(), "pinchgeo");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    code = app::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return out.str();
}

Outcome ac11(Clock::time_point suite_start) {
    int c1 = 0, c2 = 0, c3 = 0;
    const std::string a = cli_stdout({"verify", "--seed", "42"}, c1);
    const std::string b = cli_stdout({"verify", "--seed", "42"}, c2);
    const std::string catalog = std::string(PINCHGEO_SOURCE_DIR) + "/data/catalog.json";
    const std::string r1 = cli_stdout({"analyze", catalog}, c3);
    int c4 = 0;
    const std::string r2 = cli_stdout({"analyze", catalog}, c4);
    const double total = seconds_since(suite_start);
    const bool ok = c1 == 0 && c2 == 0 && c3 == 0 && c4 == 0 && a == b && r1 == r2 && !a.empty() && total < 300.0;
    return {ok, std::string("verify outputs ") + (a == b ? "identical" : "differ") + " (" + std::to_string(a.size()) +
                    " bytes), analyze outputs " + (r1 == r2 ? "identical" : "differ") + ", acceptance run " +
                    fmt("%.1f s", total)};
}

}  // namespace

int main() {
    const auto start = Clock::now();
    bool ok = true;
    ok &= run("AC1", "Clifford sharpness margins", 30.0, ac1);
    ok &= run("AC2", "cylinder boundary and certificate", 0.0, ac2);
    ok &= run("AC3", "alpha minimum over H", 5.0, ac3);
    ok &= run("AC4", "alpha bound over 1e5 samples", 0.0, ac4);
    ok &= run("AC5", "three-dimensional chain", 60.0, ac5);
    ok &= run("AC6", "sectional lower bound", 0.0, ac6);
    ok &= run("AC7", "cross term and four-frame bound", 0.0, ac7);
    ok &= run("AC8", "unit sphere four-frame minimum", 0.0, ac8);
    ok &= run("AC9", "numeric versus exact second fundamental form", 0.0, ac9);
    ok &= run("AC10", "three-dimensional Ricci bound", 0.0, ac10);
    ok &= run("AC11", "deterministic CLI output", 300.0, [&] { return ac11(start); });
    std::printf("%s\n", ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
    return ok ? 0 : 1;
}
