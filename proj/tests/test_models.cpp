#include <cmath>

#include <gtest/gtest.h>

#include "pinchgeo/immersion.hpp"
#include "pinchgeo/model_spaces.hpp"

using namespace pinchgeo;

namespace {

Eigen::VectorXd principal(const SecondFundamentalForm& h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h.block(0));
    return es.eigenvalues();
}

}  // namespace

TEST(ExactModels, RoundSphere) {
    const ExactModel m = exact_h(RoundSphere{3, 2.0});
    EXPECT_EQ(m.h.p(), 1);
    EXPECT_DOUBLE_EQ(squared_norm_S(m.h), 3 * 0.25);
    EXPECT_DOUBLE_EQ(mean_curvature_H(m.h), 0.5);
    EXPECT_TRUE(m.ambient.is_euclidean());
}

TEST(ExactModels, Cylinder) {
    const ExactModel m = exact_h(SphericalCylinder{4, 1.5});
    // Radius (n-1)/(n H0) = 0.5, so three principal curvatures 2 and one 0.
    EXPECT_DOUBLE_EQ(squared_norm_S(m.h), 12.0);
    EXPECT_DOUBLE_EQ(mean_curvature_H(m.h), 1.5);
}

TEST(ExactModels, CliffordProduct) {
    const ExactModel m = exact_h(CliffordProduct{3, 2.0});
    EXPECT_DOUBLE_EQ(m.ambient.c(), 1.0);
    const Eigen::VectorXd k = principal(m.h);
    EXPECT_DOUBLE_EQ(k[0], -0.5);
    EXPECT_DOUBLE_EQ(k[1], -0.5);
    EXPECT_DOUBLE_EQ(k[2], 2.0);
    EXPECT_DOUBLE_EQ(squared_norm_S(m.h), 4.5);
    EXPECT_DOUBLE_EQ(mean_curvature_H(m.h), 1.0 / 3.0);
}

TEST(ExactModels, Validation) {
    EXPECT_THROW(validate(RoundSphere{1, 1.0}), std::invalid_argument);
    EXPECT_THROW(validate(RoundSphere{3, 0.0}), std::invalid_argument);
    EXPECT_THROW(validate(SphericalCylinder{3, -1.0}), std::invalid_argument);
    EXPECT_THROW(validate(CliffordProduct{2, 0.0}), std::invalid_argument);
    EXPECT_THROW(exact_h(CliffordProduct{3, std::nan("")}), std::invalid_argument);
    EXPECT_NO_THROW(validate(CliffordProduct{2, 0.1}));
    EXPECT_EQ(model_name(CliffordProduct{3, 0.5}), "CliffordProduct{n=3, lambda=0.5}");
}

class ParametrizationAgrees : public ::testing::TestWithParam<ModelId> {};

TEST_P(ParametrizationAgrees, SampledMatchesClosedForm) {
    const ModelId model = GetParam();
    const ExactModel exact = exact_h(model);
    const ImmersionSpec spec = as_immersion(model, 4);
    EXPECT_EQ(spec.ambient().c(), exact.ambient.c());
    const Eigen::VectorXd truth = principal(exact.h);
    const auto points = sample_manifold(spec);
    ASSERT_FALSE(points.empty());
    for (const auto& pd : points) {
        ASSERT_EQ(pd.h.p(), 1);
        Eigen::VectorXd k = principal(pd.h);
        // The normal orientation is arbitrary.
        const double direct = (k - truth).cwiseAbs().maxCoeff();
        Eigen::VectorXd flipped = -k;
        std::sort(flipped.data(), flipped.data() + flipped.size());
        const double opposite = (flipped - truth).cwiseAbs().maxCoeff();
        EXPECT_LT(std::min(direct, opposite), 1e-4);
    }
}

INSTANTIATE_TEST_SUITE_P(Models, ParametrizationAgrees,
                         ::testing::Values(ModelId{RoundSphere{2, 1.0}}, ModelId{RoundSphere{3, 0.5}},
                                           ModelId{SphericalCylinder{2, 1.0}}, ModelId{SphericalCylinder{3, 2.0}},
                                           ModelId{CliffordProduct{2, 1.0}}, ModelId{CliffordProduct{3, 0.5}},
                                           ModelId{CliffordProduct{4, 1.5}}));

TEST(Sharpness, MarginBelowEps) {
    for (int n : {3, 4, 5, 8}) {
        for (double eps : {0.5, 1e-3, 1e-6}) {
            const auto cert = sharpness_certificate(n, eps);
            EXPECT_TRUE(cert.certified) << n << " " << eps;
            EXPECT_GT(cert.margin, 0.0);
            EXPECT_LT(cert.margin, eps);
            // For the Clifford family the margin is lambda^2 (n-2)/(n-1).
            EXPECT_NEAR(cert.margin, cert.lambda * cert.lambda * (n - 2.0) / (n - 1.0), 1e-12 * std::max(1.0, cert.S));
        }
    }
}

TEST(Sharpness, ExamplesInThreeDimensions) {
    const auto cert = sharpness_certificate(3, 0.5);
    EXPECT_NEAR(cert.lambda, std::sqrt(1.0 * (1.0 - 1e-6)), 1e-15);
    EXPECT_NEAR(cert.margin, 0.5 * (1.0 - 1e-6), 1e-9);
    const auto small = sharpness_certificate(4, 1e-3);
    EXPECT_TRUE(small.certified);
    EXPECT_LT(small.margin, 1e-3);
}

TEST(Sharpness, SurfacesSitOnTheBoundary) {
    for (double lambda : {0.3, 1.0, 2.5}) {
        const auto cert = sharpness_certificate(2, 0.1, lambda);
        EXPECT_NEAR(cert.margin, 0.0, 1e-12 * std::max(1.0, cert.S));
        EXPECT_TRUE(cert.certified);
    }
}

TEST(Sharpness, RejectsBadInput) {
    EXPECT_THROW(sharpness_certificate(3, 0.0), std::invalid_argument);
    EXPECT_THROW(sharpness_certificate(3, -1.0), std::invalid_argument);
    EXPECT_THROW(sharpness_certificate(1, 0.5), std::invalid_argument);
}
