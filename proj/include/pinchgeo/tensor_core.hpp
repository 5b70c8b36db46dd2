#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace pinchgeo {

/// Tolerance on Gram matrices of frames and planes.
inline constexpr double kOrthonormalTol = 1e-10;

/// Coefficients h^a_ij of the second fundamental form at one point, one
/// symmetric n x n block per normal direction.
class SecondFundamentalForm {
public:
    SecondFundamentalForm(int n, int p);

    /// Takes one block per normal direction. Blocks must be square, of equal
    /// size and symmetric to round-off; they are symmetrized on entry.
    explicit SecondFundamentalForm(std::vector<Eigen::MatrixXd> blocks);

    /// Single-block (hypersurface) convenience.
    static SecondFundamentalForm hypersurface(const Eigen::MatrixXd& block);
    static SecondFundamentalForm diagonal(const Eigen::VectorXd& principal);
    static SecondFundamentalForm umbilic(int n, double mu);

    int n() const { return n_; }
    int p() const { return static_cast<int>(blocks_.size()); }

    double operator()(int alpha, int i, int j) const { return blocks_[alpha](i, j); }
    const Eigen::MatrixXd& block(int alpha) const { return blocks_[alpha]; }
    const std::vector<Eigen::MatrixXd>& blocks() const { return blocks_; }

    /// Trace of block alpha (T_alpha).
    double trace(int alpha) const { return blocks_[alpha].trace(); }
    /// Sum of squares of block alpha (S_alpha).
    double block_norm2(int alpha) const { return blocks_[alpha].squaredNorm(); }
    /// Sum of squares of the diagonal of block alpha.
    double diagonal_norm2(int alpha) const { return blocks_[alpha].diagonal().squaredNorm(); }

    /// Sum over normals of h^a h^a, an n x n positive semidefinite matrix.
    Eigen::MatrixXd shape_square() const;

private:
    int n_;
    std::vector<Eigen::MatrixXd> blocks_;
};

/// Squared length of the second fundamental form.
double squared_norm_S(const SecondFundamentalForm& h);

/// Length of the mean curvature vector (1/n) sum_i h(e_i, e_i).
double mean_curvature_H(const SecondFundamentalForm& h);

/// Ambient curvature data: a space form of curvature c >= 0, or a pair of
/// sectional curvature bounds for a general ambient manifold.
class AmbientSpec {
public:
    enum class Mode { SpaceForm, Bounds };

    static AmbientSpec space_form(double c);
    static AmbientSpec bounds(double kmin, double kmax);

    Mode mode() const { return mode_; }
    bool is_space_form() const { return mode_ == Mode::SpaceForm; }
    bool is_euclidean() const { return is_space_form() && kmin_ == 0.0; }

    /// Constant curvature; throws in Bounds mode.
    double c() const;
    double kmin() const { return kmin_; }
    double kmax() const { return kmax_; }

private:
    AmbientSpec(Mode mode, double kmin, double kmax) : mode_(mode), kmin_(kmin), kmax_(kmax) {}

    Mode mode_;
    double kmin_;
    double kmax_;
};

/// Dense (0,4) curvature tensor R_ijkl in an orthonormal frame. The sign
/// convention makes R_1212 the sectional curvature of span(e1, e2).
class CurvatureTensor {
public:
    explicit CurvatureTensor(int n);

    /// Validates the algebraic curvature symmetries (pair antisymmetry, pair
    /// exchange, first Bianchi) to within `tol` times the largest entry.
    static CurvatureTensor from_entries(int n, std::span<const double> entries, double tol = 1e-12);

    /// K (delta_ik delta_jl - delta_il delta_jk).
    static CurvatureTensor constant_curvature(int n, double k);

    int n() const { return n_; }
    double operator()(int i, int j, int k, int l) const { return data_[index(i, j, k, l)]; }

    /// Full contraction R(a, b, c, d) with arbitrary vectors.
    double evaluate(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                    const Eigen::VectorXd& c, const Eigen::VectorXd& d) const;

    /// Largest violation of the four algebraic symmetries.
    double symmetry_defect() const;

    std::span<const double> entries() const { return data_; }

private:
    friend CurvatureTensor gauss_curvature(const SecondFundamentalForm&, const AmbientSpec&);

    std::size_t index(int i, int j, int k, int l) const {
        const auto n = static_cast<std::size_t>(n_);
        return ((static_cast<std::size_t>(i) * n + j) * n + k) * n + l;
    }
    double& at(int i, int j, int k, int l) { return data_[index(i, j, k, l)]; }

    int n_;
    std::vector<double> data_;
};

/// K orthonormal vectors in R^n, validated at construction.
template <std::size_t K>
class OrthonormalFrame {
public:
    explicit OrthonormalFrame(std::array<Eigen::VectorXd, K> vectors);

    /// First K rows of an orthogonal matrix.
    static OrthonormalFrame from_rows(const Eigen::MatrixXd& q);

    const Eigen::VectorXd& operator[](std::size_t i) const { return vectors_[i]; }
    int dim() const { return static_cast<int>(vectors_[0].size()); }

private:
    std::array<Eigen::VectorXd, K> vectors_;
};

using TangentPlane = OrthonormalFrame<2>;
using FourFrame = OrthonormalFrame<4>;

extern template class OrthonormalFrame<2>;
extern template class OrthonormalFrame<4>;

/// Intrinsic curvature from the Gauss equation. Only space-form ambients are
/// accepted; a Bounds ambient does not determine the ambient tensor.
CurvatureTensor gauss_curvature(const SecondFundamentalForm& h, const AmbientSpec& ambient);

/// Unnormalized double trace sum_{i != j} R_ijij.
double scalar_curvature(const CurvatureTensor& r);

double sectional_curvature(const CurvatureTensor& r, const TangentPlane& plane);

/// Ric(X) = sum_i R(X, e_i, X, e_i) over an orthonormal completion of X.
double ricci_curvature(const CurvatureTensor& r, const Eigen::VectorXd& x);

/// Same, over a caller-supplied completion: the columns of `completion` must
/// be orthonormal and orthogonal to x.
double ricci_curvature(const CurvatureTensor& r, const Eigen::VectorXd& x,
                       const Eigen::MatrixXd& completion);

/// Orthonormal basis of the complement of unit vector x, built by Gram-Schmidt
/// over the columns of `seed` (the identity when empty).
Eigen::MatrixXd orthonormal_completion(const Eigen::VectorXd& x,
                                       const Eigen::MatrixXd& seed = Eigen::MatrixXd());

}  // namespace pinchgeo
