#include <gtest/gtest.h>

#include <cmath>

#include "hyp/verifiers.hpp"

using namespace hyp;

TEST(Schwarz, CenteredCatalogPasses) {
    for (const auto& c : disc_map_catalog()) {
        const auto r = schwarz_check(c.map, 500);
        if (c.centered) {
            EXPECT_EQ(r.status, "checked") << c.map.name;
            EXPECT_TRUE(r.pass) << c.map.name;
        } else {
            EXPECT_EQ(r.status, "precondition") << c.map.name;
        }
    }
}

TEST(Schwarz, RotationAttainsEquality) {
    const auto r = schwarz_check(automorphism_map(DiscAutomorphism::make(0.7, 0.0)), 200);
    EXPECT_TRUE(r.pass);
    EXPECT_TRUE(r.near_equality);
}

TEST(Schwarz, ExpandingMapFails) {
    const auto f = polynomial_map({0.0, 1.5}, disc_domain(), plane_domain(), "1.5z");
    EXPECT_FALSE(schwarz_check(f, 100).pass);
}

TEST(SchwarzPick, CatalogAndNearEquality) {
    for (const auto& c : disc_map_catalog()) {
        const auto r = schwarz_pick_check(c.map, 1000);
        EXPECT_TRUE(r.pass) << c.map.name << " " << r.worst_violation;
        EXPECT_LE(r.worst_violation, 1e-9);
        if (c.automorphism) EXPECT_GE(r.worst_violation, -1e-7) << c.map.name;
        else EXPECT_LT(r.worst_violation, -1e-7) << c.map.name;
    }
}

TEST(SchwarzPick, MapLeavingTheDiscIsAPreconditionFailure) {
    const auto f = polynomial_map({0.5, 1.0}, disc_domain(), plane_domain(), "0.5+z");
    const auto r = schwarz_pick_check(f, 200);
    EXPECT_EQ(r.status, "precondition");
    EXPECT_FALSE(r.pass);
}

TEST(Contraction, PoincareUnderBlaschke) {
    const auto m = poincare_metric();
    const DistanceFunction rho = [](ComplexPoint p, ComplexPoint q) { return poincare_distance(p, q); };
    const auto f = blaschke_product({{0.3, 0.2}, {-0.5, 0.1}}, 0.4);
    const auto r = contraction_check(m, m, f, rho, rho, 300);
    EXPECT_EQ(r.status, "checked");
    EXPECT_TRUE(r.pass);
}

TEST(Contraction, HypothesisFailureIsReported) {
    const auto m = poincare_metric();
    const auto big = constant_metric(100.0, disc_domain());
    const DistanceFunction rho = [](ComplexPoint p, ComplexPoint q) { return poincare_distance(p, q); };
    const auto r = contraction_check(m, big, identity_map(), rho, rho, 50);
    EXPECT_EQ(r.status, "hypothesis");
    EXPECT_FALSE(r.pass);
}

TEST(Reports, DeterministicJson) {
    const auto f = disc_map_catalog()[7].map;
    EXPECT_EQ(dump_canonical(to_json(schwarz_pick_check(f, 100, 3))), dump_canonical(to_json(schwarz_pick_check(f, 100, 3))));
}
