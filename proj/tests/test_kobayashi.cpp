#include <gtest/gtest.h>

#include <cmath>

#include "hyp/kobayashi.hpp"
#include "hyp/paths.hpp"
#include "hyp/sampling.hpp"

using namespace hyp;

TEST(Kobayashi, DiscEqualsPoincare) {
    const auto d = kobayashi_disc();
    const DiscSampler sp(1, 0.95, 0), sq(1, 0.95, 1);
    for (int k = 0; k < 25; ++k) {
        const ComplexPoint p = sp(k), q = sq(k);
        const auto r = kobayashi_upper_bound(d, {p, 0.0}, {q, 0.0}, {});
        EXPECT_NEAR(r.value, poincare_distance(p, q), 1e-8);
        EXPECT_NEAR(chain_value(r.witness), r.value, 1e-12);
    }
}

TEST(Kobayashi, PlaneAndPuncturedPlaneCollapse) {
    for (const char* name : {"plane", "punctured-plane"}) {
        const auto d = catalog_domain(name);
        const auto r = kobayashi_upper_bound(d, KPoint{ComplexPoint{-3.0, 1.0}, 0.0}, KPoint{ComplexPoint{4.0, 2.0}, 0.0}, {});
        EXPECT_LT(r.value, 1e-6) << name;
        EXPECT_GE(r.value, 0.0);
    }
}

TEST(Kobayashi, BidiscIsMaxOfFactors) {
    const auto d = kobayashi_bidisc();
    const KPoint p{ComplexPoint{0.1, 0.2}, ComplexPoint{-0.3, 0.0}}, q{ComplexPoint{0.5, -0.1}, ComplexPoint{0.2, 0.4}};
    const double want = std::max(poincare_distance(p[0], q[0]), poincare_distance(p[1], q[1]));
    const auto r = kobayashi_upper_bound(d, p, q, {});
    EXPECT_NEAR(r.value, want, 1e-8);
}

TEST(Kobayashi, PuncturedBidiscBoundsFromTheConstruction) {
    for (int n = 1; n <= 20; ++n) {
        const auto b = punctured_bidisc_bound(n);
        EXPECT_NEAR(b.value, std::ldexp(1.0, 1 - n), 1e-12);
        ASSERT_EQ(b.chains.size(), 1u);
        EXPECT_EQ(b.chains[0].links.size(), 2u);
    }
    EXPECT_NEAR(punctured_bidisc_bound(10).value, std::ldexp(1.0, -9), 1e-15);
    EXPECT_THROW(punctured_bidisc_bound(0), DomainError);
}

TEST(Kobayashi, PuncturedBidiscSearchIsNoWorseThanTheConstruction) {
    const auto d = kobayashi_punctured_bidisc();
    for (int n : {2, 5}) {
        const double al = bidisc_alpha(n);
        const auto r = kobayashi_upper_bound(d, {0.0, al}, {al, 0.0}, {});
        EXPECT_LE(r.value, punctured_bidisc_bound(n).value + 1e-12);
        EXPECT_FALSE(d.membership({0.0, 0.0}));
    }
}

TEST(Kobayashi, CauchyEscape) {
    const auto rep = cauchy_escape_demo(20);
    EXPECT_TRUE(rep.pass);
    EXPECT_FALSE(rep.limit_in_domain);
    ASSERT_EQ(rep.rows.size(), 19u);
    for (const auto& row : rep.rows) EXPECT_LT(row.tail, row.tail_limit);
}

TEST(Kobayashi, ChainValueChecksLinks) {
    DiscChain c;
    c.endpoints = {KPoint{0.0, 0.0}, KPoint{0.5, 0.0}};
    c.links = {{"identity", [](ComplexPoint z) { return KPoint{z, 0.0}; }, 0.5}};
    EXPECT_NEAR(chain_value(c), std::log(3.0), 1e-15);
    c.endpoints[1] = KPoint{0.6, 0.0};
    EXPECT_THROW(chain_value(c), ContractError);
}

TEST(Kobayashi, PushForwardDoesNotIncreaseValue) {
    const auto d = kobayashi_disc();
    const auto r = kobayashi_upper_bound(d, KPoint{0.1, 0.0}, KPoint{ComplexPoint{-0.4, 0.3}, 0.0}, {});
    const auto img = push_forward(r.witness, [](const KPoint& p) { return KPoint{0.5 * p[0] * p[0], 0.0}; });
    EXPECT_NEAR(chain_value(img), chain_value(r.witness), 1e-12);
    EXPECT_LE(poincare_distance(img.endpoints.front()[0], img.endpoints.back()[0]), chain_value(img) + 1e-12);
}

TEST(Kobayashi, UnknownDomain) { EXPECT_THROW(catalog_domain("torus"), ContractError); }
