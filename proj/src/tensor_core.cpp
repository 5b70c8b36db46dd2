#include "pinchgeo/tensor_core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pinchgeo {

namespace {

void require(bool ok, const char* what) {
    if (!ok) {
        throw std::invalid_argument(what);
    }
}

template <std::size_t K>
void check_orthonormal(const std::array<Eigen::VectorXd, K>& v) {
    const auto dim = v[0].size();
    for (std::size_t a = 0; a < K; ++a) {
        require(v[a].size() == dim, "frame vectors must share one dimension");
        for (std::size_t b = a; b < K; ++b) {
            const double expected = (a == b) ? 1.0 : 0.0;
            if (std::abs(v[a].dot(v[b]) - expected) > kOrthonormalTol) {
                throw std::invalid_argument("frame is not orthonormal (Gram defect above 1e-10)");
            }
        }
    }
}

}  // namespace

SecondFundamentalForm::SecondFundamentalForm(int n, int p) : n_(n) {
    require(n >= 2, "tangent dimension n must be >= 2");
    require(p >= 1, "codimension p must be >= 1");
    blocks_.assign(static_cast<std::size_t>(p), Eigen::MatrixXd::Zero(n, n));
}

SecondFundamentalForm::SecondFundamentalForm(std::vector<Eigen::MatrixXd> blocks)
    : n_(blocks.empty() ? 0 : static_cast<int>(blocks.front().rows())), blocks_(std::move(blocks)) {
    require(!blocks_.empty(), "codimension p must be >= 1");
    require(n_ >= 2, "tangent dimension n must be >= 2");
    for (auto& b : blocks_) {
        require(b.rows() == n_ && b.cols() == n_, "second fundamental form blocks must be n x n");
        const double scale = std::max(1.0, b.cwiseAbs().maxCoeff());
        if ((b - b.transpose()).cwiseAbs().maxCoeff() > 1e-9 * scale) {
            throw std::invalid_argument("second fundamental form block is not symmetric");
        }
        b = 0.5 * (b + b.transpose()).eval();
    }
}

SecondFundamentalForm SecondFundamentalForm::hypersurface(const Eigen::MatrixXd& block) {
    return SecondFundamentalForm(std::vector<Eigen::MatrixXd>{block});
}

SecondFundamentalForm SecondFundamentalForm::diagonal(const Eigen::VectorXd& principal) {
    return hypersurface(principal.asDiagonal().toDenseMatrix());
}

SecondFundamentalForm SecondFundamentalForm::umbilic(int n, double mu) {
    return hypersurface(mu * Eigen::MatrixXd::Identity(n, n));
}

Eigen::MatrixXd SecondFundamentalForm::shape_square() const {
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n_, n_);
    for (const auto& b : blocks_) {
        acc += b * b;
    }
    return acc;
}

double squared_norm_S(const SecondFundamentalForm& h) {
    double s = 0.0;
    for (const auto& b : h.blocks()) {
        s += b.squaredNorm();
    }
    return s;
}

double mean_curvature_H(const SecondFundamentalForm& h) {
    double t2 = 0.0;
    for (const auto& b : h.blocks()) {
        const double t = b.trace();
        t2 += t * t;
    }
    return std::sqrt(t2) / h.n();
}

AmbientSpec AmbientSpec::space_form(double c) {
    if (!(c >= 0.0) || !std::isfinite(c)) {
        throw std::invalid_argument("space form curvature c must be finite and >= 0");
    }
    return AmbientSpec(Mode::SpaceForm, c, c);
}

AmbientSpec AmbientSpec::bounds(double kmin, double kmax) {
    if (!std::isfinite(kmin) || !std::isfinite(kmax) || kmin > kmax) {
        throw std::invalid_argument("curvature bounds need finite kmin <= kmax");
    }
    return AmbientSpec(Mode::Bounds, kmin, kmax);
}

double AmbientSpec::c() const {
    if (!is_space_form()) {
        throw std::logic_error("ambient is given by curvature bounds, not a space form");
    }
    return kmin_;
}

CurvatureTensor::CurvatureTensor(int n) : n_(n) {
    require(n >= 2, "curvature tensor dimension must be >= 2");
    const auto nn = static_cast<std::size_t>(n);
    data_.assign(nn * nn * nn * nn, 0.0);
}

CurvatureTensor CurvatureTensor::from_entries(int n, std::span<const double> entries, double tol) {
    CurvatureTensor r(n);
    require(entries.size() == r.data_.size(), "curvature tensor needs n^4 entries");
    std::copy(entries.begin(), entries.end(), r.data_.begin());
    double scale = 1.0;
    for (double v : r.data_) {
        scale = std::max(scale, std::abs(v));
    }
    if (r.symmetry_defect() > tol * scale) {
        throw std::invalid_argument("entries violate the algebraic curvature symmetries");
    }
    return r;
}

CurvatureTensor CurvatureTensor::constant_curvature(int n, double k) {
    CurvatureTensor r(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                continue;
            }
            r.at(i, j, i, j) = k;
            r.at(i, j, j, i) = -k;
        }
    }
    return r;
}

double CurvatureTensor::evaluate(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                                 const Eigen::VectorXd& c, const Eigen::VectorXd& d) const {
    require(a.size() == n_ && b.size() == n_ && c.size() == n_ && d.size() == n_,
            "vector dimension does not match the curvature tensor");
    double total = 0.0;
    std::size_t idx = 0;
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            const double ab = a[i] * b[j];
            if (ab == 0.0) {
                idx += static_cast<std::size_t>(n_) * n_;
                continue;
            }
            double inner = 0.0;
            for (int k = 0; k < n_; ++k) {
                double row = 0.0;
                for (int l = 0; l < n_; ++l) {
                    row += data_[idx++] * d[l];
                }
                inner += row * c[k];
            }
            total += ab * inner;
        }
    }
    return total;
}

double CurvatureTensor::symmetry_defect() const {
    double worst = 0.0;
    auto track = [&worst](double v) { worst = std::max(worst, std::abs(v)); };
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            for (int k = 0; k < n_; ++k) {
                for (int l = 0; l < n_; ++l) {
                    const double v = (*this)(i, j, k, l);
                    track(v + (*this)(j, i, k, l));
                    track(v + (*this)(i, j, l, k));
                    track(v - (*this)(k, l, i, j));
                    track(v + (*this)(i, k, l, j) + (*this)(i, l, j, k));
                }
            }
        }
    }
    return worst;
}

template <std::size_t K>
OrthonormalFrame<K>::OrthonormalFrame(std::array<Eigen::VectorXd, K> vectors) : vectors_(std::move(vectors)) {
    check_orthonormal(vectors_);
}

template <std::size_t K>
OrthonormalFrame<K> OrthonormalFrame<K>::from_rows(const Eigen::MatrixXd& q) {
    require(q.rows() >= static_cast<Eigen::Index>(K), "matrix has too few rows for the frame");
    std::array<Eigen::VectorXd, K> v;
    for (std::size_t i = 0; i < K; ++i) {
        v[i] = q.row(static_cast<Eigen::Index>(i)).transpose();
    }
    return OrthonormalFrame(std::move(v));
}

template class OrthonormalFrame<2>;
template class OrthonormalFrame<4>;

CurvatureTensor gauss_curvature(const SecondFundamentalForm& h, const AmbientSpec& ambient) {
    if (!ambient.is_space_form()) {
        throw std::invalid_argument(
            "Gauss assembly needs a space-form ambient; use bound-based checks for curvature bounds");
    }
    const double c = ambient.c();
    const int n = h.n();
    CurvatureTensor r = CurvatureTensor::constant_curvature(n, c);
    for (const auto& b : h.blocks()) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                for (int k = 0; k < n; ++k) {
                    for (int l = 0; l < n; ++l) {
                        r.at(i, j, k, l) += b(i, k) * b(j, l) - b(i, l) * b(j, k);
                    }
                }
            }
        }
    }
    return r;
}

double scalar_curvature(const CurvatureTensor& r) {
    double total = 0.0;
    for (int i = 0; i < r.n(); ++i) {
        for (int j = 0; j < r.n(); ++j) {
            if (i != j) {
                total += r(i, j, i, j);
            }
        }
    }
    return total;
}

double sectional_curvature(const CurvatureTensor& r, const TangentPlane& plane) {
    return r.evaluate(plane[0], plane[1], plane[0], plane[1]);
}

Eigen::MatrixXd orthonormal_completion(const Eigen::VectorXd& x, const Eigen::MatrixXd& seed) {
    const auto n = x.size();
    const Eigen::MatrixXd candidates = seed.size() == 0 ? Eigen::MatrixXd::Identity(n, n) : seed;
    require(candidates.rows() == n, "completion seed has the wrong row count");
    Eigen::MatrixXd basis(n, n);
    basis.col(0) = x;
    Eigen::Index filled = 1;
    for (Eigen::Index c = 0; c < candidates.cols() && filled < n; ++c) {
        Eigen::VectorXd v = candidates.col(c);
        // Two passes of modified Gram-Schmidt.
        for (int pass = 0; pass < 2; ++pass) {
            for (Eigen::Index k = 0; k < filled; ++k) {
                v -= basis.col(k).dot(v) * basis.col(k);
            }
        }
        const double norm = v.norm();
        if (norm > 1e-8) {
            basis.col(filled++) = v / norm;
        }
    }
    if (filled < n) {
        throw std::invalid_argument("completion seed does not span the complement");
    }
    return basis.rightCols(n - 1);
}

double ricci_curvature(const CurvatureTensor& r, const Eigen::VectorXd& x, const Eigen::MatrixXd& completion) {
    require(x.size() == r.n(), "vector dimension does not match the curvature tensor");
    if (std::abs(x.norm() - 1.0) > kOrthonormalTol) {
        throw std::invalid_argument("Ricci curvature needs a unit vector");
    }
    require(completion.rows() == r.n() && completion.cols() == r.n() - 1, "completion must be n x (n-1)");
    double total = 0.0;
    for (Eigen::Index i = 0; i < completion.cols(); ++i) {
        const Eigen::VectorXd e = completion.col(i);
        total += r.evaluate(x, e, x, e);
    }
    return total;
}

double ricci_curvature(const CurvatureTensor& r, const Eigen::VectorXd& x) {
    require(x.size() == r.n(), "vector dimension does not match the curvature tensor");
    if (std::abs(x.norm() - 1.0) > kOrthonormalTol) {
        throw std::invalid_argument("Ricci curvature needs a unit vector");
    }
    return ricci_curvature(r, x, orthonormal_completion(x));
}

}  // namespace pinchgeo
