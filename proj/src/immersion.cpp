#include "pinchgeo/immersion.hpp"

#include <cmath>
#include <optional>
#include <sstream>

#include "pinchgeo/parallel.hpp"

namespace pinchgeo {

namespace {

std::string format_point(const Eigen::VectorXd& u) {
    std::ostringstream os;
    os.precision(10);
    os << '(';
    for (Eigen::Index i = 0; i < u.size(); ++i) {
        os << (i ? ", " : "") << u[i];
    }
    os << ')';
    return os.str();
}

}  // namespace

ImmersionSpec::ImmersionSpec(int n, AmbientSpec ambient, std::vector<Expression> map, std::vector<Interval> box,
                             std::vector<int> grid, std::string name)
    : n_(n), ambient_(ambient), map_(std::move(map)), box_(std::move(box)), grid_(std::move(grid)),
      name_(std::move(name)) {
    if (n_ < 2) {
        throw std::invalid_argument("immersion domain dimension must be >= 2");
    }
    if (!ambient_.is_space_form()) {
        throw std::invalid_argument("immersions are supported into space forms only");
    }
    if (static_cast<int>(box_.size()) != n_ || static_cast<int>(grid_.size()) != n_) {
        throw std::invalid_argument("box and grid need one entry per parameter");
    }
    for (const auto& iv : box_) {
        if (!(iv.hi > iv.lo)) {
            throw std::invalid_argument("box intervals must satisfy lo < hi");
        }
    }
    for (int g : grid_) {
        if (g < 2) {
            throw std::invalid_argument("grid needs at least 2 samples per axis");
        }
    }
    for (const auto& e : map_) {
        if (e.arity() > n_) {
            throw std::invalid_argument("map component '" + e.text() + "' uses a parameter beyond u" +
                                        std::to_string(n_));
        }
    }
    if (p() < 1) {
        throw std::invalid_argument("map has too few components for a positive codimension");
    }
}

ImmersionSpec ImmersionSpec::from_strings(int n, AmbientSpec ambient, const std::vector<std::string>& map,
                                          std::vector<Interval> box, std::vector<int> grid, std::string name) {
    std::vector<Expression> parsed;
    parsed.reserve(map.size());
    for (const auto& s : map) {
        parsed.push_back(Expression::parse(s));
    }
    return ImmersionSpec(n, ambient, std::move(parsed), std::move(box), std::move(grid), std::move(name));
}

int ImmersionSpec::p() const {
    return target_dim() - n_ - (spherical() ? 1 : 0);
}

Eigen::VectorXd ImmersionSpec::evaluate(std::span<const double> u) const {
    Eigen::VectorXd f(target_dim());
    for (int k = 0; k < target_dim(); ++k) {
        f[k] = map_[static_cast<std::size_t>(k)].evaluate(u);
    }
    return f;
}

double ImmersionSpec::default_step() const {
    double w = box_.front().width();
    for (const auto& iv : box_) {
        w = std::min(w, iv.width());
    }
    return 1e-4 * w;
}

PointError::PointError(const std::string& what, Eigen::VectorXd u)
    : std::runtime_error(what + " at u = " + format_point(u)), u_(std::move(u)) {}

namespace {

struct Differences {
    Eigen::MatrixXd first;
    std::vector<Eigen::MatrixXd> second;
};

Differences central_differences(const ImmersionSpec& spec, const Eigen::VectorXd& u, const Eigen::VectorXd& f0,
                                double h) {
    const int n = spec.n();
    const int m = spec.target_dim();
    auto f = [&](const Eigen::VectorXd& x) {
        Eigen::VectorXd v = spec.evaluate(std::span<const double>(x.data(), static_cast<std::size_t>(x.size())));
        if (!v.allFinite()) {
            throw PointError("map evaluates to a non-finite value", u);
        }
        return v;
    };
    Differences d;
    d.first.resize(m, n);
    d.second.assign(static_cast<std::size_t>(m), Eigen::MatrixXd::Zero(n, n));
    std::vector<Eigen::VectorXd> plus(static_cast<std::size_t>(n)), minus(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Eigen::VectorXd x = u;
        x[i] += h;
        plus[static_cast<std::size_t>(i)] = f(x);
        x[i] = u[i] - h;
        minus[static_cast<std::size_t>(i)] = f(x);
        d.first.col(i) = (plus[static_cast<std::size_t>(i)] - minus[static_cast<std::size_t>(i)]) / (2.0 * h);
        const Eigen::VectorXd dii = (plus[static_cast<std::size_t>(i)] - 2.0 * f0 + minus[static_cast<std::size_t>(i)]) / (h * h);
        for (int c = 0; c < m; ++c) {
            d.second[static_cast<std::size_t>(c)](i, i) = dii[c];
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Eigen::VectorXd x = u;
            x[i] += h;
            x[j] += h;
            const Eigen::VectorXd pp = f(x);
            x[j] = u[j] - h;
            const Eigen::VectorXd pm = f(x);
            x[i] = u[i] - h;
            const Eigen::VectorXd mm = f(x);
            x[j] = u[j] + h;
            const Eigen::VectorXd mp = f(x);
            const Eigen::VectorXd dij = (pp - pm - mp + mm) / (4.0 * h * h);
            for (int c = 0; c < m; ++c) {
                d.second[static_cast<std::size_t>(c)](i, j) = dij[c];
                d.second[static_cast<std::size_t>(c)](j, i) = dij[c];
            }
        }
    }
    return d;
}

}  // namespace

Jet2 jet2(const ImmersionSpec& spec, const Eigen::VectorXd& u, double step, bool richardson) {
    if (u.size() != spec.n()) {
        throw std::invalid_argument("parameter point has the wrong dimension");
    }
    if (!(step > 0.0)) {
        throw std::invalid_argument("finite-difference step must be positive");
    }
    for (int i = 0; i < spec.n(); ++i) {
        const auto& iv = spec.box()[static_cast<std::size_t>(i)];
        if (u[i] - 2.0 * step < iv.lo || u[i] + 2.0 * step > iv.hi) {
            throw PointError("point is closer than 2*step to the box boundary", u);
        }
    }
    Jet2 jet;
    jet.value = spec.evaluate(std::span<const double>(u.data(), static_cast<std::size_t>(u.size())));
    if (!jet.value.allFinite()) {
        throw PointError("map evaluates to a non-finite value", u);
    }
    Differences fine = central_differences(spec, u, jet.value, step);
    if (richardson) {
        const Differences coarse = central_differences(spec, u, jet.value, 2.0 * step);
        fine.first = (4.0 * fine.first - coarse.first) / 3.0;
        for (std::size_t c = 0; c < fine.second.size(); ++c) {
            fine.second[c] = (4.0 * fine.second[c] - coarse.second[c]) / 3.0;
        }
    }
    jet.first = std::move(fine.first);
    jet.second = std::move(fine.second);
    return jet;
}

AdaptedFrames adapted_frames(const Eigen::MatrixXd& first, const Eigen::VectorXd& position,
                             const AmbientSpec& ambient) {
    const auto m = first.rows();
    const auto n = first.cols();
    const bool spherical = ambient.c() > 0.0;
    const auto p = m - n - (spherical ? 1 : 0);
    if (p < 1) {
        throw std::invalid_argument("ambient dimension leaves no normal directions");
    }

    const Eigen::MatrixXd g = first.transpose() * first;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(g);
    const Eigen::VectorXd ev = eig.eigenvalues();
    if (!(ev.minCoeff() > 0.0) || ev.maxCoeff() / ev.minCoeff() > 1e12) {
        throw std::domain_error("immersion differential is rank deficient");
    }
    AdaptedFrames out;
    out.metric_cond = ev.maxCoeff() / ev.minCoeff();
    out.tangent_map = eig.eigenvectors() * ev.cwiseSqrt().cwiseInverse().asDiagonal() *
                      eig.eigenvectors().transpose();
    out.tangent = first * out.tangent_map;

    std::vector<Eigen::VectorXd> basis;
    for (Eigen::Index i = 0; i < n; ++i) {
        basis.emplace_back(out.tangent.col(i));
    }
    auto residual = [&basis](Eigen::VectorXd v) {
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& b : basis) {
                v -= b.dot(v) * b;
            }
        }
        return v;
    };
    if (spherical) {
        const Eigen::VectorXd r = residual(position);
        if (r.norm() < 1e-8 * std::max(1.0, position.norm())) {
            throw std::domain_error("position vector lies in the tangent space");
        }
        basis.emplace_back(r.normalized());
    }

    std::vector<bool> used(static_cast<std::size_t>(m), false);
    out.normal.resize(m, p);
    for (Eigen::Index a = 0; a < p; ++a) {
        Eigen::Index best = -1;
        Eigen::VectorXd best_vec;
        double best_norm = 0.0;
        for (Eigen::Index c = 0; c < m; ++c) {
            if (used[static_cast<std::size_t>(c)]) {
                continue;
            }
            Eigen::VectorXd v = residual(Eigen::VectorXd::Unit(m, c));
            const double nv = v.norm();
            if (nv > best_norm) {
                best_norm = nv;
                best = c;
                best_vec = std::move(v);
            }
        }
        if (best < 0 || best_norm < 1e-8) {
            throw std::domain_error("could not complete the normal frame");
        }
        used[static_cast<std::size_t>(best)] = true;
        best_vec /= best_norm;
        basis.push_back(best_vec);
        out.normal.col(a) = best_vec;
    }
    return out;
}

PointData second_fundamental_form_at(const ImmersionSpec& spec, const Eigen::VectorXd& u, double step,
                                     bool richardson) {
    const Jet2 jet = jet2(spec, u, step, richardson);
    if (spec.spherical()) {
        const double defect = jet.value.squaredNorm() - 1.0 / spec.ambient().c();
        if (std::abs(defect) > 1e-8) {
            throw PointError("map leaves the sphere of radius 1/sqrt(c)", u);
        }
    }
    AdaptedFrames frames = [&] {
        try {
            return adapted_frames(jet.first, jet.value, spec.ambient());
        } catch (const std::domain_error& e) {
            throw PointError(e.what(), u);
        }
    }();

    const int n = spec.n();
    const auto p = frames.normal.cols();
    std::vector<Eigen::MatrixXd> blocks;
    blocks.reserve(static_cast<std::size_t>(p));
    for (Eigen::Index a = 0; a < p; ++a) {
        Eigen::MatrixXd projected = Eigen::MatrixXd::Zero(n, n);
        for (std::size_t c = 0; c < jet.second.size(); ++c) {
            projected += frames.normal(static_cast<Eigen::Index>(c), a) * jet.second[c];
        }
        blocks.push_back(frames.tangent_map.transpose() * projected * frames.tangent_map);
    }
    return PointData{u, std::move(frames.tangent), std::move(frames.normal),
                     SecondFundamentalForm(std::move(blocks)), frames.metric_cond};
}

std::size_t interior_node_count(const ImmersionSpec& spec) {
    std::size_t count = 1;
    for (int g : spec.grid()) {
        count *= static_cast<std::size_t>(g - 2);
    }
    return count;
}

std::vector<PointData> sample_manifold(const ImmersionSpec& spec, const SampleOptions& options) {
    const std::size_t count = interior_node_count(spec);
    if (count == 0) {
        throw std::invalid_argument("grid has no interior nodes; use at least 3 samples per axis");
    }
    const double step = options.step > 0.0 ? options.step : spec.default_step();
    const int n = spec.n();

    std::vector<std::optional<PointData>> slots(count);
    parallel_for(count, [&](std::size_t flat) {
        Eigen::VectorXd u(n);
        std::size_t rest = flat;
        for (int axis = n - 1; axis >= 0; --axis) {
            const auto interior = static_cast<std::size_t>(spec.grid()[static_cast<std::size_t>(axis)] - 2);
            const auto idx = static_cast<double>(rest % interior + 1);
            rest /= interior;
            const auto& iv = spec.box()[static_cast<std::size_t>(axis)];
            u[axis] = iv.lo + idx * iv.width() / (spec.grid()[static_cast<std::size_t>(axis)] - 1);
        }
        try {
            slots[flat] = second_fundamental_form_at(spec, u, step, options.richardson);
        } catch (const PointError&) {
            throw;
        } catch (const std::exception& e) {
            throw PointError(e.what(), u);
        }
    });

    std::vector<PointData> points;
    points.reserve(count);
    for (auto& s : slots) {
        points.push_back(std::move(*s));
    }
    return points;
}

}  // namespace pinchgeo
