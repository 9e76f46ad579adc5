#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hyp/complex_core.hpp"
#include "hyp/sampling.hpp"

using namespace hyp;

TEST(Mobius, FixesCircleAndSwapsCenterWithZero) {
    const ComplexPoint a{0.3, -0.4};
    EXPECT_NEAR(std::abs(mobius(a, a)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(mobius(a, 0.0) + a), 0.0, 1e-15);
    for (int k = 0; k < 16; ++k) {
        const ComplexPoint z = std::polar(1.0, k * std::numbers::pi / 8.0);
        EXPECT_NEAR(std::abs(mobius(a, z)), 1.0, 1e-14);
    }
}

TEST(Mobius, IsAnInvolutionUpToSign) {
    const DiscSampler s(7);
    for (int k = 0; k < 200; ++k) {
        const ComplexPoint a = s(k), z = s(k + 500);
        EXPECT_NEAR(std::abs(mobius(-a, mobius(a, z)) - z), 0.0, 1e-12);
    }
}

TEST(Mobius, DerivativeMatchesDifferenceQuotient) {
    const ComplexPoint a{-0.5, 0.2}, z{0.1, 0.3};
    const double h = 1e-6;
    const ComplexPoint fd = (mobius(a, z + h) - mobius(a, z - h)) / (2.0 * h);
    EXPECT_NEAR(std::abs(fd - mobius_derivative(a, z)), 0.0, 1e-8);
    EXPECT_NEAR(std::abs(mobius_derivative(a, a)), 1.0 / (1.0 - std::norm(a)), 1e-14);
}

TEST(Automorphism, ComposeAndInvert) {
    const auto s = DiscAutomorphism::make(0.8, {0.2, 0.5});
    const auto t = DiscAutomorphism::make(-1.1, {-0.6, 0.1});
    const auto st = compose(s, t);
    const auto inv = invert_automorphism(s);
    const DiscSampler sampler(3, 0.95);
    for (int k = 0; k < 100; ++k) {
        const ComplexPoint z = sampler(k);
        EXPECT_NEAR(std::abs(st(z) - s(t(z))), 0.0, 1e-12);
        EXPECT_NEAR(std::abs(inv(s(z)) - z), 0.0, 1e-12);
    }
}

TEST(Automorphism, RejectsCenterOutsideDisc) {
    EXPECT_THROW(DiscAutomorphism::make(0.0, 1.0), DomainError);
    EXPECT_THROW(artanh(1.0), DomainError);
}

TEST(Sampling, DeterministicAndNested) {
    const DiscSampler a(11), b(11);
    const auto small = a.take(10), large = b.take(50);
    for (int k = 0; k < 10; ++k) EXPECT_EQ(small[k], large[k]);
    for (auto z : large) EXPECT_LT(std::abs(z), 0.98);
    EXPECT_NE(DiscSampler(12)(0), a(0));
}

TEST(Infinity, Marker) {
    EXPECT_TRUE(is_point_at_infinity(point_at_infinity()));
    EXPECT_FALSE(is_finite(point_at_infinity()));
    EXPECT_TRUE(is_finite({1.0, 2.0}));
}
