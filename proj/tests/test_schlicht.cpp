#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hyp/schlicht.hpp"

using namespace hyp;

namespace {
HolomorphicMap poly(std::vector<ComplexPoint> c, const char* name) {
    return polynomial_map(std::move(c), disc_domain(), plane_domain(), name);
}
}  // namespace

TEST(Landau, IdentityAndScaledMaps) {
    EXPECT_NEAR(landau_radius_estimate(identity_map()), 1.0, 1e-5);
    EXPECT_NEAR(landau_radius_estimate(poly({0.0, 2.5}, "2.5z")), 2.5, 1e-4);
    EXPECT_NEAR(bloch_radius_estimate(identity_map()), 1.0, 1e-5);
}

TEST(Landau, BlochNeverExceedsLandau) {
    for (const auto& f : {poly({0.0, 1.0, 0.1}, "a"), poly({0.0, 1.0, -0.5}, "b"), poly({0.0, 1.0, 0.0, 1.0 / 3.0}, "c")}) {
        const double L = landau_radius_estimate(f), B = bloch_radius_estimate(f);
        EXPECT_LE(B, L + 1e-12) << f.name;
        EXPECT_GE(L, 0.5 - 0.02) << f.name;
        EXPECT_GE(B, std::sqrt(3.0) / 4.0 - 0.05) << f.name;
    }
}

TEST(Landau, SquareMapHasNoLargeSchlichtDisc) {
    // z^2 covers the disc twice: the Landau disc is the whole image, the
    // largest schlicht disc is much smaller.
    auto sq = poly({0.0, 0.0, 1.0}, "z^2");
    sq.critical_points = {0.0};
    EXPECT_NEAR(landau_radius_estimate(sq), 1.0, 1e-4);
    EXPECT_LT(bloch_radius_estimate(sq), 0.7);
}

TEST(Landau, CriticalPointBoundsTheSchlichtDisc) {
    auto f = poly({0.0, 1.0, 1.0}, "z+z^2");
    f.critical_points = {-0.5};
    const double B = bloch_radius_estimate(f);
    EXPECT_GT(B, 0.9);
    EXPECT_LE(B, landau_radius_estimate(f) + 1e-12);
}

TEST(BlochMetric, DensityAndContracts) {
    const auto f = identity_map();
    const auto rad = [](ComplexPoint w) { return 1.0 - std::abs(w); };
    const double d = bloch_metric_density(f, 2.0, 0.0, rad);
    EXPECT_NEAR(d, 4.0 / (2.0 * 1.0 * 9.0), 1e-15);
    EXPECT_THROW(bloch_metric_density(f, 1.0, 0.0, rad), ContractError);
    EXPECT_THROW(bloch_metric_density(f, 2.0, 0.999999999999, [](ComplexPoint) { return 0.0; }), ContractError);
    EXPECT_THROW(bloch_metric_density(f, 1.5, 0.0, rad, 1.0), ContractError);
    EXPECT_NO_THROW(bloch_metric_density(f, 2.0, 0.0, rad, 1.0));
}

TEST(BlochMetric, SupportingMetricTouchesFromBelow) {
    // For the identity the schlicht radius at w is 1 - |w|, attained at b = w/|w|.
    const auto f = identity_map();
    const double A = 2.0;
    const ComplexPoint z0{0.3, 0.2};
    const ComplexPoint b = z0 / std::abs(z0);
    const auto m = bloch_metric(f, A, [](ComplexPoint w) { return 1.0 - std::abs(w); });
    const auto sup = bloch_supporting_metric(f, A, b);
    EXPECT_TRUE(verify_supporting(sup, m, z0, 0.05, 200, 1e-9).pass);
}

TEST(LandauMetric, SupportingMetricTouchesFromBelow) {
    const auto f = identity_map();
    const double C = 4.0;
    const ComplexPoint z0{-0.2, 0.4};
    const ComplexPoint b = z0 / std::abs(z0);
    const auto m = landau_metric(f, C, [](ComplexPoint w) { return 1.0 - std::abs(w); });
    const auto sup = landau_supporting_metric(f, C, b);
    EXPECT_NEAR(sup(z0), m(z0), 1e-12);
    EXPECT_THROW(landau_metric(f, 0.5, [](ComplexPoint) { return 1.0; })(0.0), ContractError);
}
