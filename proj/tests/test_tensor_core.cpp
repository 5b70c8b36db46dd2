#include <cmath>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "pinchgeo/tensor_core.hpp"
#include "test_support.hpp"

using namespace pinchgeo;

namespace {

TangentPlane plane(int n, int i, int j) {
    Eigen::VectorXd a = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
    a[i] = 1.0;
    b[j] = 1.0;
    return TangentPlane({a, b});
}

}  // namespace

TEST(SecondFundamentalForm, RejectsAsymmetricBlock) {
    Eigen::MatrixXd m(2, 2);
    m << 1.0, 2.0, 0.0, 1.0;
    EXPECT_THROW(SecondFundamentalForm({m}), std::invalid_argument);
}

TEST(SecondFundamentalForm, RejectsMismatchedBlocks) {
    EXPECT_THROW(SecondFundamentalForm({Eigen::MatrixXd::Identity(2, 2), Eigen::MatrixXd::Identity(3, 3)}),
                 std::invalid_argument);
}

TEST(SecondFundamentalForm, ZeroFormInvariants) {
    const SecondFundamentalForm h(4, 2);
    EXPECT_EQ(squared_norm_S(h), 0.0);
    EXPECT_EQ(mean_curvature_H(h), 0.0);
}

TEST(SecondFundamentalForm, CliffordPrincipalCurvatures) {
    for (int n = 2; n <= 6; ++n) {
        for (double lambda : {0.25, 1.0, 3.0}) {
            Eigen::VectorXd k = Eigen::VectorXd::Constant(n, -1.0 / lambda);
            k[0] = lambda;
            const auto h = SecondFundamentalForm::diagonal(k);
            EXPECT_NEAR(squared_norm_S(h), lambda * lambda + (n - 1) / (lambda * lambda), 1e-12);
            EXPECT_NEAR(mean_curvature_H(h), std::abs(lambda - (n - 1) / lambda) / n, 1e-12);
        }
    }
}

TEST(SecondFundamentalForm, CylinderInvariants) {
    for (int n = 2; n <= 6; ++n) {
        const double H0 = 1.5;
        Eigen::VectorXd k = Eigen::VectorXd::Constant(n, n * H0 / (n - 1));
        k[n - 1] = 0.0;
        const auto h = SecondFundamentalForm::diagonal(k);
        EXPECT_NEAR(squared_norm_S(h), n * n * H0 * H0 / (n - 1), 1e-12);
        EXPECT_NEAR(mean_curvature_H(h), H0, 1e-12);
    }
}

TEST(SecondFundamentalForm, UmbilicAndTraceless) {
    EXPECT_NEAR(mean_curvature_H(SecondFundamentalForm::umbilic(3, 0.5)), 0.5, 1e-15);
    Eigen::MatrixXd traceless(3, 3);
    traceless << 1, 2, 0, 2, -3, 1, 0, 1, 2;
    Eigen::MatrixXd other(3, 3);
    other << 0, 1, 1, 1, 0, 1, 1, 1, 0;
    EXPECT_EQ(mean_curvature_H(SecondFundamentalForm({traceless, other})), 0.0);
}

TEST(SecondFundamentalForm, SAtLeastNH2) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 500; ++t) {
        const int n = 2 + t % 7;
        const auto h = test_support::gaussian_form(n, 1 + t % 4, rng);
        const double H = mean_curvature_H(h);
        EXPECT_GE(squared_norm_S(h), n * H * H * (1 - 1e-14));
    }
}

TEST(AmbientSpec, Validation) {
    EXPECT_THROW(AmbientSpec::space_form(-1.0), std::invalid_argument);
    EXPECT_THROW(AmbientSpec::bounds(2.0, 1.0), std::invalid_argument);
    const auto a = AmbientSpec::space_form(1.5);
    EXPECT_EQ(a.kmin(), 1.5);
    EXPECT_EQ(a.kmax(), 1.5);
    EXPECT_THROW((void)AmbientSpec::bounds(0.0, 1.0).c(), std::logic_error);
}

TEST(GaussCurvature, RoundSphere) {
    const double r = 2.0;
    const int n = 4;
    const auto R = gauss_curvature(SecondFundamentalForm::umbilic(n, 1.0 / r), AmbientSpec::space_form(0.0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                for (int l = 0; l < n; ++l) {
                    const double expected = ((i == k && j == l) - (i == l && j == k)) / (r * r);
                    EXPECT_NEAR(R(i, j, k, l), expected, 1e-15);
                }
            }
        }
    }
}

TEST(GaussCurvature, TotallyGeodesicSphere) {
    const auto R = gauss_curvature(SecondFundamentalForm(3, 2), AmbientSpec::space_form(1.0));
    EXPECT_EQ(R(0, 1, 0, 1), 1.0);
    EXPECT_EQ(R(0, 2, 0, 2), 1.0);
    EXPECT_EQ(R(1, 2, 1, 2), 1.0);
    EXPECT_EQ(scalar_curvature(R), 6.0);
}

TEST(GaussCurvature, CliffordProductOfCircleAndSphere) {
    // S^1 x S^2 with lambda = 1: planes containing the circle are flat, the S^2 plane has curvature 2.
    const auto h = SecondFundamentalForm::diagonal(Eigen::Vector3d(1.0, -1.0, -1.0));
    const auto R = gauss_curvature(h, AmbientSpec::space_form(1.0));
    EXPECT_NEAR(R(0, 1, 0, 1), 0.0, 1e-15);
    EXPECT_NEAR(R(0, 2, 0, 2), 0.0, 1e-15);
    EXPECT_NEAR(R(1, 2, 1, 2), 2.0, 1e-15);
    EXPECT_NEAR(sectional_curvature(R, plane(3, 0, 1)), 0.0, 1e-15);
}

TEST(GaussCurvature, RejectsBoundsAmbient) {
    EXPECT_THROW(gauss_curvature(SecondFundamentalForm(3, 1), AmbientSpec::bounds(0.0, 1.0)), std::invalid_argument);
}

TEST(GaussCurvature, MatchesDirectContraction) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        const int n = 2 + t % 6;
        const auto h = test_support::gaussian_form(n, 1 + t % 3, rng);
        const double c = 0.5 * (t % 3);
        const auto R = gauss_curvature(h, AmbientSpec::space_form(c));
        const Eigen::VectorXd a = test_support::unit_vector(n, rng);
        const Eigen::VectorXd b = test_support::unit_vector(n, rng);
        const Eigen::VectorXd x = test_support::unit_vector(n, rng);
        const Eigen::VectorXd d = test_support::unit_vector(n, rng);
        EXPECT_NEAR(R.evaluate(a, b, x, d), test_support::gauss_contracted(h, c, a, b, x, d), 1e-12);
    }
}

TEST(GaussCurvature, SymmetriesHold) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        const int n = 2 + t % 7;
        const auto h = test_support::gaussian_form(n, 1 + t % 4, rng);
        const auto R = gauss_curvature(h, AmbientSpec::space_form(1.0));
        double largest = 1.0;
        for (double v : R.entries()) {
            largest = std::max(largest, std::abs(v));
        }
        EXPECT_LE(R.symmetry_defect(), 1e-13 * largest);
    }
}

TEST(GaussCurvature, ScalarIdentityAndDuality) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 1000; ++t) {
        const int n = 2 + t % 7;
        const auto h = test_support::gaussian_form(n, 1 + t % 4, rng);
        const double c = std::uniform_real_distribution<double>(0.0, 2.0)(rng);
        const double S = squared_norm_S(h);
        const double H = mean_curvature_H(h);
        // Independent double trace through the direct contraction.
        double R = 0.0;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i != j) {
                    const Eigen::VectorXd ei = Eigen::VectorXd::Unit(n, i);
                    const Eigen::VectorXd ej = Eigen::VectorXd::Unit(n, j);
                    R += test_support::gauss_contracted(h, c, ei, ej, ei, ej);
                }
            }
        }
        const double scale = std::max(1.0, S + n * n * c);
        EXPECT_NEAR(scalar_curvature(gauss_curvature(h, AmbientSpec::space_form(c))), R, 1e-12 * scale);
        EXPECT_NEAR(R, n * (n - 1) * c + n * n * H * H - S, 1e-10 * scale);
        const double lambda_side = S - n * n * H * H / (n - 1.0) - 2.0 * c;
        const double mu_side = R - n * n * (n - 2.0) / (n - 1.0) * H * H - (n + 1.0) * (n - 2.0) * c;
        EXPECT_NEAR(lambda_side, -mu_side, 1e-10 * scale);
    }
}

TEST(CurvatureTensor, FromEntriesValidates) {
    const auto good = CurvatureTensor::constant_curvature(3, 1.0);
    std::vector<double> e(good.entries().begin(), good.entries().end());
    EXPECT_NO_THROW(CurvatureTensor::from_entries(3, e));
    e[10] += 0.5;  // R_0101 alone: breaks R_0101 = R_1010
    EXPECT_THROW(CurvatureTensor::from_entries(3, e), std::invalid_argument);
    EXPECT_THROW(CurvatureTensor::from_entries(3, std::vector<double>(10)), std::invalid_argument);
}

TEST(CurvatureTensor, FlatAndConstant) {
    const CurvatureTensor flat(4);
    EXPECT_EQ(scalar_curvature(flat), 0.0);
    EXPECT_EQ(ricci_curvature(flat, Eigen::Vector4d(0, 1, 0, 0)), 0.0);
    std::mt19937_64 rng(1);
    const auto R = CurvatureTensor::constant_curvature(5, 0.7);
    for (int t = 0; t < 20; ++t) {
        const Eigen::MatrixXd q = test_support::gaussian_orthogonal(5, rng);
        EXPECT_NEAR(sectional_curvature(R, TangentPlane({q.col(0), q.col(1)})), 0.7, 1e-13);
    }
}

TEST(SectionalCurvature, IndependentOfBasisOfPlane) {
    std::mt19937_64 rng(9);
    const auto h = test_support::gaussian_form(5, 3, rng);
    const auto R = gauss_curvature(h, AmbientSpec::space_form(1.0));
    const Eigen::MatrixXd q = test_support::gaussian_orthogonal(5, rng);
    const double K = sectional_curvature(R, TangentPlane({q.col(0), q.col(1)}));
    for (double angle : {0.3, 1.1, 2.5}) {
        const Eigen::VectorXd a = std::cos(angle) * q.col(0) + std::sin(angle) * q.col(1);
        const Eigen::VectorXd b = -std::sin(angle) * q.col(0) + std::cos(angle) * q.col(1);
        EXPECT_NEAR(sectional_curvature(R, TangentPlane({a, b})), K, 1e-12);
    }
}

TEST(Frames, RejectNonOrthonormal) {
    EXPECT_THROW(TangentPlane({Eigen::Vector3d(1, 0, 0), Eigen::Vector3d(1, 1, 0)}), std::invalid_argument);
    EXPECT_THROW(TangentPlane({Eigen::Vector3d(1, 0, 0), Eigen::Vector3d(0, 2, 0)}), std::invalid_argument);
    EXPECT_THROW(TangentPlane({Eigen::Vector3d(1, 0, 0), Eigen::Vector2d(0, 1)}), std::invalid_argument);
    EXPECT_NO_THROW(FourFrame::from_rows(Eigen::MatrixXd::Identity(5, 5)));
    const auto R = CurvatureTensor::constant_curvature(3, 1.0);
    EXPECT_THROW(sectional_curvature(R, plane(4, 0, 1)), std::invalid_argument);
}

TEST(RicciCurvature, UnitThreeSphere) {
    const auto R = gauss_curvature(SecondFundamentalForm(3, 1), AmbientSpec::space_form(1.0));
    std::mt19937_64 rng(2);
    for (int t = 0; t < 20; ++t) {
        EXPECT_NEAR(ricci_curvature(R, test_support::unit_vector(3, rng)), 2.0, 1e-14);
    }
}

TEST(RicciCurvature, CompletionIndependent) {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 50; ++t) {
        const int n = 3 + t % 5;
        const auto h = test_support::gaussian_form(n, 2, rng);
        const auto R = gauss_curvature(h, AmbientSpec::space_form(1.0));
        const Eigen::VectorXd x = test_support::unit_vector(n, rng);
        const Eigen::MatrixXd c1 = orthonormal_completion(x);
        const Eigen::MatrixXd c2 = orthonormal_completion(x, test_support::gaussian_orthogonal(n, rng));
        double oracle = 0.0;
        for (int k = 0; k < n - 1; ++k) {
            oracle += test_support::gauss_contracted(h, 1.0, x, c2.col(k), x, c2.col(k));
        }
        EXPECT_NEAR(ricci_curvature(R, x, c1), ricci_curvature(R, x, c2), 1e-12 * (1 + squared_norm_S(h)));
        EXPECT_NEAR(ricci_curvature(R, x), oracle, 1e-12 * (1 + squared_norm_S(h)));
    }
}

TEST(RicciCurvature, RejectsBadVectors) {
    const auto R = CurvatureTensor::constant_curvature(3, 1.0);
    EXPECT_THROW(ricci_curvature(R, Eigen::Vector3d(0, 0, 0)), std::invalid_argument);
    EXPECT_THROW(ricci_curvature(R, Eigen::Vector3d(1, 1, 0)), std::invalid_argument);
    EXPECT_THROW(ricci_curvature(R, Eigen::Vector2d(1, 0)), std::invalid_argument);
}

TEST(OrthonormalCompletion, IsOrthonormal) {
    std::mt19937_64 rng(6);
    const Eigen::VectorXd x = test_support::unit_vector(6, rng);
    const Eigen::MatrixXd c = orthonormal_completion(x);
    ASSERT_EQ(c.rows(), 6);
    ASSERT_EQ(c.cols(), 5);
    EXPECT_LT((c.transpose() * c - Eigen::MatrixXd::Identity(5, 5)).cwiseAbs().maxCoeff(), 1e-13);
    EXPECT_LT((c.transpose() * x).cwiseAbs().maxCoeff(), 1e-13);
}
