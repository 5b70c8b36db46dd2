#include "pinchgeo/pinching.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace pinchgeo {

namespace {

void require_n(int n) {
    if (n < 2) {
        throw std::invalid_argument("dimension n must be >= 2");
    }
}

template <class Points>
void require_nonempty(const Points& points) {
    if (points.empty()) {
        throw std::invalid_argument("pinching functional needs at least one point");
    }
}

double gap_coefficient(int n) { return n * n / (n - 1.0); }

}  // namespace

double alpha(int n, double H, double c) {
    require_n(n);
    if (!(H >= 0.0) || !(c >= 0.0)) {
        throw std::invalid_argument("alpha needs H >= 0 and c >= 0");
    }
    const double nn = n;
    const double H2 = H * H;
    const double radical = std::sqrt(nn * nn * H2 * H2 + 4.0 * (nn - 1.0) * c * H2);
    return nn * c + nn * nn * nn / (2.0 * (nn - 1.0)) * H2 - nn * (nn - 2.0) / (2.0 * (nn - 1.0)) * radical;
}

AlphaMinimum alpha_min_over_H(int n, double c) {
    require_n(n);
    if (!(c >= 0.0)) {
        throw std::invalid_argument("alpha_min_over_H needs c >= 0");
    }
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = 0.0;
    double b = 10.0 * (1.0 + std::sqrt(c));
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = alpha(n, x1, c);
    double f2 = alpha(n, x2, c);
    for (int it = 0; it < 200 && b - a > 1e-14 * (1.0 + b); ++it) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = alpha(n, x1, c);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = alpha(n, x2, c);
        }
    }
    AlphaMinimum best{0.5 * (a + b), alpha(n, 0.5 * (a + b), c)};
    // The bracket can collapse onto the H = 0 endpoint (n = 2 or c = 0).
    const double at_zero = alpha(n, 0.0, c);
    if (at_zero <= best.value) {
        best = {0.0, at_zero};
    }
    return best;
}

double lambda_pinch(std::span<const ShapePoint> points, int n, double c) {
    require_nonempty(points);
    require_n(n);
    double worst = -std::numeric_limits<double>::infinity();
    for (const auto& pt : points) {
        worst = std::max(worst, pt.S - gap_coefficient(n) * pt.H * pt.H - 2.0 * c);
    }
    return worst;
}

double mu_pinch(std::span<const ScalarPoint> points, int n, double c) {
    require_nonempty(points);
    require_n(n);
    const double nn = n;
    double best = std::numeric_limits<double>::infinity();
    for (const auto& pt : points) {
        best = std::min(best, pt.R - nn * nn * (nn - 2.0) / (nn - 1.0) * pt.H * pt.H - (nn + 1.0) * (nn - 2.0) * c);
    }
    return best;
}

InvariantCertificate invariant_certificate(std::span<const EmbeddingSample> embeddings) {
    if (embeddings.empty()) {
        throw std::invalid_argument("invariant certificate needs at least one embedding");
    }
    InvariantCertificate cert;
    cert.value = -std::numeric_limits<double>::infinity();
    cert.bounds_I0 = true;
    for (std::size_t i = 0; i < embeddings.size(); ++i) {
        const auto& e = embeddings[i];
        const double mu = mu_pinch(e.points, e.n, e.c);
        if (mu > cert.value) {
            cert.value = mu;
            cert.best = i;
        }
        cert.bounds_I0 = cert.bounds_I0 && e.c == 0.0;
    }
    return cert;
}

double ambient_pinching_margin(double S, double H, const AmbientSpec& ambient, int n) {
    require_n(n);
    return 8.0 / 3.0 * (ambient.kmin() - 0.25 * ambient.kmax()) + gap_coefficient(n) * H * H - S;
}

double space_form_margin(double S, double H, double c, int n) {
    require_n(n);
    return 2.0 * c + gap_coefficient(n) * H * H - S;
}

double dim3_margin(double S, double H, double c) { return 2.0 * c + 4.5 * H * H - S; }

double alpha_margin(double S, double H, double c, int n) { return alpha(n, H, c) - S; }

DimensionThreshold dimension_threshold(double S, double c, int n) {
    DimensionThreshold r;
    if (n >= 4 && n <= 6) {
        r.threshold = 2.0 * std::sqrt(n - 1.0) * c;
        r.part_i = S < r.threshold;
    } else if (n >= 7) {
        r.threshold = 2.0 * std::sqrt(2.0) * c;
        r.part_ii = S < r.threshold;
    }
    return r;
}

double ricci_lower_bound_3d(double S, double H, double c) {
    const double excess = S - 3.0 * H * H;
    if (excess < -1e-12 * std::max(1.0, S)) {
        throw std::invalid_argument("inconsistent data: S < 3 H^2");
    }
    const double root = std::sqrt(std::max(0.0, excess));
    return 2.0 / 3.0 * (3.0 * c + 6.0 * H * H - S - 3.0 / std::sqrt(6.0) * H * root);
}

double dim3_mean_curvature_threshold() { return 2.0 / 3.0 * std::sqrt(std::sqrt(2.0) - 1.0); }

std::string to_string(HypothesisStatus status) {
    switch (status) {
        case HypothesisStatus::Holds: return "holds";
        case HypothesisStatus::Fails: return "fails";
        case HypothesisStatus::Boundary: return "boundary";
        case HypothesisStatus::NotApplicable: return "not_applicable";
    }
    return "unknown";
}

const HypothesisCheck* PinchingReport::find(const std::string& id) const {
    for (const auto& t : hypotheses) {
        if (t.id == id) {
            return &t;
        }
    }
    return nullptr;
}

namespace {

struct CheckBuilder {
    std::span<const SamplePoint> points;
    double tol;

    HypothesisCheck not_applicable(std::string id, std::string condition, std::string kind, std::string why) const {
        HypothesisCheck t;
        t.id = std::move(id);
        t.condition = std::move(condition);
        t.kind = std::move(kind);
        t.status = HypothesisStatus::NotApplicable;
        t.note = std::move(why);
        return t;
    }

    HypothesisCheck evaluate(std::string id, std::string condition, std::string kind,
                          const std::function<double(const SamplePoint&)>& margin) const {
        HypothesisCheck t;
        t.id = std::move(id);
        t.condition = std::move(condition);
        t.kind = std::move(kind);
        t.margin = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < points.size(); ++i) {
            const double m = margin(points[i]);
            if (m < t.margin) {
                t.margin = m;
                t.worst_point = i;
            }
        }
        if (std::abs(t.margin) <= tol) {
            t.status = HypothesisStatus::Boundary;
            t.note = "hypothesis fails (boundary case)";
        } else {
            t.status = t.margin > 0.0 ? HypothesisStatus::Holds : HypothesisStatus::Fails;
        }
        return t;
    }
};

}  // namespace

PinchingReport build_pinching_report(std::string label, std::string source, int n, int p,
                                     const AmbientSpec& ambient, std::span<const SamplePoint> points,
                                     double boundary_tol) {
    require_n(n);
    require_nonempty(points);
    PinchingReport rep;
    rep.label = std::move(label);
    rep.source = std::move(source);
    rep.n = n;
    rep.p = p;
    rep.ambient = ambient;
    rep.point_count = points.size();

    rep.S_min = rep.S_max = points[0].S;
    rep.H_min = rep.H_max = points[0].H;
    for (const auto& pt : points) {
        rep.S_min = std::min(rep.S_min, pt.S);
        rep.S_max = std::max(rep.S_max, pt.S);
        rep.H_min = std::min(rep.H_min, pt.H);
        rep.H_max = std::max(rep.H_max, pt.H);
    }

    const CheckBuilder cb{points, boundary_tol * std::max(1.0, rep.S_max)};
    const double gap = gap_coefficient(n);
    const double kmin = ambient.kmin();
    const double kmax = ambient.kmax();
    const bool space_form = ambient.is_space_form();
    const double c = kmin;

    std::vector<ShapePoint> shape;
    std::vector<ScalarPoint> scalar;
    for (const auto& pt : points) {
        shape.push_back({pt.S, pt.H});
        scalar.push_back({pt.R, pt.H});
    }
    if (space_form) {
        rep.lambda_M = lambda_pinch(shape, n, c);
        rep.mu_M = mu_pinch(scalar, n, c);
    }

    auto& th = rep.hypotheses;
    const auto thm11 = [&](const SamplePoint& pt) {
        return 8.0 / 3.0 * (kmin - 0.25 * kmax) + gap * pt.H * pt.H - pt.S;
    };

    th.push_back(cb.evaluate("compactness", "sup(S - 2 Kmin - n^2 H^2/(n-1)) < 0", "supremum",
                             [&](const SamplePoint& pt) { return 2.0 * kmin + gap * pt.H * pt.H - pt.S; }));
    th.push_back(cb.evaluate("ambient_pinching", "S < 8/3 (Kmin - Kmax/4) + n^2 H^2/(n-1)", "pointwise", thm11));

    if (space_form) {
        th.push_back(cb.evaluate("scalar_pinching", "lambda(M) = sup(S - n^2 H^2/(n-1) - 2c) < 0", "supremum",
                                 [&](const SamplePoint& pt) { return space_form_margin(pt.S, pt.H, c, n); }));
    } else {
        th.push_back(cb.not_applicable("scalar_pinching", "lambda(M) < 0", "supremum", "needs a space-form ambient"));
    }

    if (space_form && n == 3) {
        th.push_back(cb.evaluate("dim3_pinching", "S < 2c + (9/2) H^2", "pointwise",
                                 [&](const SamplePoint& pt) { return dim3_margin(pt.S, pt.H, c); }));
    } else {
        th.push_back(cb.not_applicable("dim3_pinching", "S < 2c + (9/2) H^2", "pointwise",
                                       "needs n = 3 and a space-form ambient"));
    }

    if (space_form && n == 3 && c == 1.0) {
        const double hthr = dim3_mean_curvature_threshold();
        th.push_back(cb.evaluate("dim3_unit_sphere", "H >= (2/3) sqrt(sqrt 2 - 1) and S < 2 sqrt 2", "pointwise",
                                 [&](const SamplePoint& pt) {
                                     const double s_margin = 2.0 * std::sqrt(2.0) - pt.S;
                                     // The mean-curvature bound is not strict; only its sign matters.
                                     return pt.H >= hthr ? s_margin : std::min(s_margin, pt.H - hthr);
                                 }));
    } else {
        th.push_back(cb.not_applicable("dim3_unit_sphere", "H >= (2/3) sqrt(sqrt 2 - 1) and S < 2 sqrt 2",
                                       "pointwise", "needs n = 3 in the unit sphere"));
    }

    if (n >= 4) {
        th.push_back(cb.evaluate("ambient_pinching_sup", "sup(S - 8/3 (Kmin - Kmax/4) - n^2 H^2/(n-1)) < 0", "supremum",
                                 thm11));
    } else {
        th.push_back(cb.not_applicable("ambient_pinching_sup", "sup(S - 8/3 (Kmin - Kmax/4) - n^2 H^2/(n-1)) < 0",
                                       "supremum", "needs n >= 4"));
    }

    if (space_form && n >= 4) {
        th.push_back(cb.evaluate("space_form_pinching_sup", "sup(S - n^2 H^2/(n-1)) < 2c", "supremum",
                                 [&](const SamplePoint& pt) { return space_form_margin(pt.S, pt.H, c, n); }));
    } else {
        th.push_back(cb.not_applicable("space_form_pinching_sup", "sup(S - n^2 H^2/(n-1)) < 2c", "supremum",
                                       "needs n >= 4 and a space-form ambient"));
    }

    if (space_form) {
        th.push_back(cb.evaluate("space_form_pinching", "S < 2c + n^2 H^2/(n-1)", "pointwise",
                                 [&](const SamplePoint& pt) { return space_form_margin(pt.S, pt.H, c, n); }));
    } else {
        th.push_back(cb.not_applicable("space_form_pinching", "S < 2c + n^2 H^2/(n-1)", "pointwise",
                                       "needs a space-form ambient"));
    }

    if (n % 2 == 0) {
        th.push_back(cb.evaluate("ambient_pinching_even", "sup(S - 8/3 (Kmin - Kmax/4) - n^2 H^2/(n-1)) < 0", "supremum",
                                 thm11));
    } else {
        th.push_back(cb.not_applicable("ambient_pinching_even", "sup(S - 8/3 (Kmin - Kmax/4) - n^2 H^2/(n-1)) < 0",
                                       "supremum", "needs even n"));
    }

    if (space_form && n >= 4) {
        th.push_back(cb.evaluate("alpha_pinching", "sup(S - alpha(n, H, c)) < 0", "supremum",
                                 [&](const SamplePoint& pt) { return alpha_margin(pt.S, pt.H, c, n); }));
    } else {
        th.push_back(cb.not_applicable("alpha_pinching", "sup(S - alpha(n, H, c)) < 0", "supremum",
                                       "needs n >= 4 and a space-form ambient"));
    }

    if (space_form && p == 1 && c > 0.0) {
        th.push_back(cb.evaluate("hypersurface_pinching", "S < 2c + n^2 H^2/(n-1)", "pointwise",
                                 [&](const SamplePoint& pt) { return space_form_margin(pt.S, pt.H, c, n); }));
    } else {
        th.push_back(cb.not_applicable("hypersurface_pinching", "S < 2c + n^2 H^2/(n-1)", "pointwise",
                                       "needs a hypersurface (p = 1) with c > 0"));
    }

    if (space_form && n >= 4 && c > 0.0) {
        const double thr = dimension_threshold(0.0, c, n).threshold;
        th.push_back(cb.evaluate("dimension_threshold", n <= 6 ? "sup S < 2 sqrt(n-1) c" : "S < 2 sqrt 2 c",
                                 n <= 6 ? "supremum" : "pointwise",
                                 [thr](const SamplePoint& pt) { return thr - pt.S; }));
    } else {
        th.push_back(cb.not_applicable("dimension_threshold", "S below 2 sqrt(n-1) c (n <= 6) or 2 sqrt 2 c (n >= 7)",
                                       "supremum", "needs n >= 4 and c > 0"));
    }

    if (space_form && n == 3) {
        double lowest = std::numeric_limits<double>::infinity();
        for (const auto& pt : points) {
            lowest = std::min(lowest, ricci_lower_bound_3d(pt.S, pt.H, c));
        }
        rep.ricci_3d_lower_bound = lowest;
    }
    return rep;
}

}  // namespace pinchgeo
