#include <gtest/gtest.h>

#include <cmath>

#include "hyp/metrics.hpp"
#include "hyp/quadrature.hpp"
#include "hyp/sampling.hpp"

using namespace hyp;

TEST(Poincare, DensityClosedForm) {
    const auto m = poincare_metric();
    EXPECT_DOUBLE_EQ(m(0.0), 2.0);
    EXPECT_NEAR(m(0.5), 2.0 / (0.75 * 0.75), 1e-14);
    EXPECT_THROW(m(1.0), DomainError);
    const auto m2 = poincare_metric(2.0);
    EXPECT_NEAR(m2(1.0), 8.0 / 9.0, 1e-14);
}

class PoincareCurvature : public ::testing::TestWithParam<double> {};

TEST_P(PoincareCurvature, FiniteDifferenceIsMinusOne) {
    const double r = GetParam();
    const auto m = poincare_metric(r);
    const DiscSampler s(5, 0.95 * r);
    for (int k = 0; k < 100; ++k) EXPECT_NEAR(gauss_curvature(m, s(k)), -1.0, 1e-6);
}

INSTANTIATE_TEST_SUITE_P(Radii, PoincareCurvature, ::testing::Values(0.5, 1.0, 2.0));

TEST(Curvature, ConstantMetricIsFlat) {
    const auto m = constant_metric(0.5);
    EXPECT_NEAR(gauss_curvature(m, {3.0, -2.0}), 0.0, 1e-6);
}

TEST(Curvature, PullbackInvariance) {
    const auto m = poincare_metric();
    const auto f = blaschke_product({{0.2, 0.1}, {-0.3, 0.4}});
    const auto pb = pullback(m, f);
    for (ComplexPoint z : {ComplexPoint{0.1, 0.6}, ComplexPoint{-0.5, -0.2}, ComplexPoint{0.7, 0.0}})
        EXPECT_NEAR(gauss_curvature(pb, z), -1.0, 1e-5);
}

TEST(Curvature, ZeroSetGivesMinusInfinity) {
    auto sq = polynomial_map({0.0, 0.0, 1.0}, disc_domain(), disc_domain(), "z^2");
    sq.critical_points = {0.0};
    const auto pb = pullback(poincare_metric(), sq);
    EXPECT_EQ(gauss_curvature(pb, 0.0), -std::numeric_limits<double>::infinity());
    EXPECT_NEAR(gauss_curvature(pb, 0.4), -1.0, 1e-5);
}

TEST(Pullback, RejectsMapLeavingTheDomain) {
    const auto big = affine_map(0.0, 3.0, disc_domain(), plane_domain());
    EXPECT_THROW(pullback(poincare_metric(), big), ContractError);
}

TEST(Maps, DerivativesAreConsistent) {
    const DiscSampler s(9, 0.9);
    const auto pts = s.take(50);
    EXPECT_LT(derivative_consistency(blaschke_product({{0.5, 0.0}, {0.0, -0.7}}, 0.3), pts), 1e-6);
    EXPECT_LT(derivative_consistency(polynomial_map({1.0, 2.0, -3.0, 0.5}, disc_domain(), plane_domain()), pts), 1e-6);
    EXPECT_LT(derivative_consistency(automorphism_map(DiscAutomorphism::make(1.0, {0.1, 0.2})), pts), 1e-6);
}

TEST(Supporting, SameMetricTouchesItself) {
    const auto m = poincare_metric();
    const auto rep = verify_supporting(m, m, {0.2, 0.1}, 0.3, 100);
    EXPECT_TRUE(rep.pass);
    const auto bigger = constant_metric(10.0, disc_domain());
    EXPECT_FALSE(verify_supporting(bigger, m, 0.0, 0.3, 100).pass);
}

TEST(Quadrature, AdaptiveSimpsonAgainstClosedForms) {
    auto r = adaptive_simpson([](double x) { return std::exp(x); }, 0.0, 1.0, 1e-12);
    EXPECT_NEAR(r.value, std::exp(1.0) - 1.0, 1e-11);
    EXPECT_FALSE(r.diverged);
    r = adaptive_simpson([](double x) { return 1.0 / std::sqrt(x); }, 1e-300, 1.0, 1e-10, 30);
    EXPECT_TRUE(r.diverged);
    EXPECT_NEAR(fixed_simpson([](double x) { return x * x * x; }, 0.0, 2.0, 4), 4.0, 1e-12);
}
