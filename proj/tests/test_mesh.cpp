#include <gtest/gtest.h>

#include <cmath>

#include "hyp/mesh.hpp"
#include "hyp/paths.hpp"
#include "hyp/sampling.hpp"

using namespace hyp;

TEST(Mesh, DiscMatchesClosedForm) {
    const auto m = poincare_metric();
    const auto D = disc_domain();
    const auto mesh = build_mesh(m, D, *D.bounds, 0.02);
    SplitRandom rng(4);
    for (int k = 0; k < 10; ++k) {
        const ComplexPoint p = rng.in_disc(0.8), q = rng.in_disc(0.8);
        const double exact = poincare_distance(p, q);
        const double approx = mesh_path_distance(mesh, m, D, p, q);
        EXPECT_GE(approx, exact * (1.0 - 1e-6));
        EXPECT_LE(approx, exact * 1.02);
    }
}

TEST(Mesh, NonincreasingUnderRefinement) {
    const auto m = poincare_metric();
    const auto D = disc_domain();
    const ComplexPoint p{-0.31, 0.47}, q{0.52, -0.18};
    double prev = std::numeric_limits<double>::infinity();
    for (double res : {0.04, 0.02, 0.01}) {
        const double v = mesh_distance(m, D, p, q, res);
        EXPECT_LE(v, prev * (1.0 + 1e-9));
        prev = v;
    }
}

TEST(Mesh, EuclideanPlaneUpperBoundsTheStraightLine) {
    const auto m = constant_metric(0.5);
    const auto P = plane_domain();
    EXPECT_NEAR(mesh_distance(m, P, 0.0, {3.0, 0.0}, 0.05), 3.0, 1e-9);
    const double v = mesh_distance(m, P, 0.0, {1.0, 2.0}, 0.05);
    EXPECT_GE(v, std::sqrt(5.0) - 1e-12);
    EXPECT_LE(v, std::sqrt(5.0) * (1.0 + 1e-4));
}

TEST(Mesh, SamePointAndOutsidePoints) {
    const auto m = poincare_metric();
    const auto D = disc_domain();
    EXPECT_EQ(mesh_distance(m, D, 0.3, 0.3, 0.05), 0.0);
    EXPECT_THROW(mesh_distance(m, D, 0.0, 1.5, 0.05), DomainError);
}

TEST(Mesh, SeparatedComponentsAreUnreachable) {
    DomainDescriptor two;
    two.name = "two-discs";
    two.contains = [](ComplexPoint z) { return std::abs(z + 2.0) < 1.0 || std::abs(z - 2.0) < 1.0; };
    two.boundary_distance = [](ComplexPoint z) {
        return std::max(0.0, std::max(1.0 - std::abs(z + 2.0), 1.0 - std::abs(z - 2.0)));
    };
    two.bounds = Box{-3.0, 3.0, -1.0, 1.0};
    const auto m = constant_metric(0.5, two);
    EXPECT_THROW(mesh_distance(m, two, -2.0, 2.0, 0.05), UnreachableError);
}

TEST(Mesh, BallExtentMatchesPoincareBall) {
    const auto m = poincare_metric();
    const auto D = disc_domain();
    const double r = 1.0;
    const double extent = ball_extent(m, D, 0.0, r, 0.01);
    EXPECT_NEAR(extent, std::tanh(0.5 * r), 0.02);
    EXPECT_LE(extent, std::tanh(0.5 * r) + 1e-9);
}

TEST(Mesh, StencilIsPrimitive) {
    const auto s = detail::half_stencil(4);
    for (auto [a, b] : s) EXPECT_EQ(std::gcd(std::abs(a), b), 1);
    EXPECT_EQ(detail::half_stencil(1).size(), 4u);
}
