#include "pinchgeo/model_spaces.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace pinchgeo {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string literal(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string param(int index) { return "u" + std::to_string(index); }

/// Components of S^k(rho) in R^{k+1} in hyperspherical coordinates
/// u_first .. u_{first+k-1}; the last angle is the azimuth.
std::vector<std::string> hypersphere(int k, double rho, int first) {
    std::vector<std::string> comps;
    std::string prefix = literal(rho);
    for (int i = 0; i < k; ++i) {
        const std::string u = param(first + i);
        comps.push_back(prefix + "*cos(" + u + ")");
        prefix += "*sin(" + u + ")";
    }
    comps.push_back(prefix);
    return comps;
}

void append_hypersphere_box(int k, std::vector<Interval>& box) {
    for (int i = 0; i + 1 < k; ++i) {
        box.push_back({0.5, std::numbers::pi - 0.5});
    }
    box.push_back({0.0, 2.0 * std::numbers::pi});
}

}  // namespace

void validate(const ModelId& model) {
    std::visit(overloaded{
                   [](const RoundSphere& m) {
                       if (m.n < 2 || !(m.r > 0.0)) {
                           throw std::invalid_argument("RoundSphere needs n >= 2 and r > 0");
                       }
                   },
                   [](const SphericalCylinder& m) {
                       if (m.n < 2 || !(m.H0 > 0.0)) {
                           throw std::invalid_argument("SphericalCylinder needs n >= 2 and H0 > 0");
                       }
                   },
                   [](const CliffordProduct& m) {
                       if (m.n < 2 || !(m.lambda > 0.0)) {
                           throw std::invalid_argument("CliffordProduct needs n >= 2 and lambda > 0");
                       }
                   },
               },
               model);
}

std::string model_name(const ModelId& model) {
    return std::visit(overloaded{
                          [](const RoundSphere& m) {
                              return "RoundSphere{n=" + std::to_string(m.n) + ", r=" + literal(m.r) + "}";
                          },
                          [](const SphericalCylinder& m) {
                              return "SphericalCylinder{n=" + std::to_string(m.n) + ", H0=" + literal(m.H0) + "}";
                          },
                          [](const CliffordProduct& m) {
                              return "CliffordProduct{n=" + std::to_string(m.n) + ", lambda=" + literal(m.lambda) +
                                     "}";
                          },
                      },
                      model);
}

ExactModel exact_h(const ModelId& model) {
    validate(model);
    return std::visit(
        overloaded{
            [](const RoundSphere& m) {
                return ExactModel{SecondFundamentalForm::umbilic(m.n, 1.0 / m.r), AmbientSpec::space_form(0.0)};
            },
            [](const SphericalCylinder& m) {
                Eigen::VectorXd k = Eigen::VectorXd::Constant(m.n, m.n * m.H0 / (m.n - 1));
                k[m.n - 1] = 0.0;
                return ExactModel{SecondFundamentalForm::diagonal(k), AmbientSpec::space_form(0.0)};
            },
            [](const CliffordProduct& m) {
                Eigen::VectorXd k = Eigen::VectorXd::Constant(m.n, -1.0 / m.lambda);
                k[0] = m.lambda;
                return ExactModel{SecondFundamentalForm::diagonal(k), AmbientSpec::space_form(1.0)};
            },
        },
        model);
}

ImmersionSpec as_immersion(const ModelId& model, int grid) {
    validate(model);
    const std::string name = model_name(model);
    return std::visit(
        overloaded{
            [&](const RoundSphere& m) {
                std::vector<Interval> box;
                append_hypersphere_box(m.n, box);
                return ImmersionSpec::from_strings(m.n, AmbientSpec::space_form(0.0), hypersphere(m.n, m.r, 1),
                                                   std::move(box), std::vector<int>(static_cast<std::size_t>(m.n), grid),
                                                   name);
            },
            [&](const SphericalCylinder& m) {
                const double rho = (m.n - 1) / (m.n * m.H0);
                auto comps = hypersphere(m.n - 1, rho, 1);
                comps.push_back(param(m.n));
                std::vector<Interval> box;
                append_hypersphere_box(m.n - 1, box);
                box.push_back({-1.0, 1.0});
                return ImmersionSpec::from_strings(m.n, AmbientSpec::space_form(0.0), comps, std::move(box),
                                                   std::vector<int>(static_cast<std::size_t>(m.n), grid), name);
            },
            [&](const CliffordProduct& m) {
                const double norm = std::sqrt(1.0 + m.lambda * m.lambda);
                const double a = 1.0 / norm;
                const double b = m.lambda / norm;
                std::vector<std::string> comps{literal(a) + "*cos(u1)", literal(a) + "*sin(u1)"};
                for (auto& s : hypersphere(m.n - 1, b, 2)) {
                    comps.push_back(std::move(s));
                }
                std::vector<Interval> box{{0.0, 2.0 * std::numbers::pi}};
                append_hypersphere_box(m.n - 1, box);
                return ImmersionSpec::from_strings(m.n, AmbientSpec::space_form(1.0), comps, std::move(box),
                                                   std::vector<int>(static_cast<std::size_t>(m.n), grid), name);
            },
        },
        model);
}

SharpnessCertificate sharpness_certificate(int n, double eps, double lambda_for_n2) {
    if (!(eps > 0.0)) {
        throw std::invalid_argument("sharpness certificate needs eps > 0");
    }
    if (n < 2) {
        throw std::invalid_argument("sharpness certificate needs n >= 2");
    }
    constexpr double kShrink = 1e-6;
    SharpnessCertificate cert;
    cert.n = n;
    cert.eps = eps;
    cert.lambda = n == 2 ? lambda_for_n2 : std::sqrt(eps * (n - 1.0) / (n - 2.0) * (1.0 - kShrink));
    const ExactModel model = exact_h(CliffordProduct{n, cert.lambda});
    cert.S = squared_norm_S(model.h);
    cert.H = mean_curvature_H(model.h);
    // S grows like 1/eps, so the margin is formed in extended precision from the principal curvatures.
    long double S = 0.0L;
    long double trace = 0.0L;
    for (int i = 0; i < n; ++i) {
        const long double k = model.h(0, i, i);
        S += k * k;
        trace += k;
    }
    const long double nn = n;
    cert.margin = static_cast<double>(S - trace * trace / (nn - 1.0L) - 2.0L * model.ambient.c());
    if (n == 2) {
        cert.certified = std::abs(cert.margin) <= 1e-12 * std::max(1.0, cert.S) && cert.margin < eps;
    } else {
        cert.certified = cert.margin > 0.0 && cert.margin < eps;
    }
    return cert;
}

}  // namespace pinchgeo
