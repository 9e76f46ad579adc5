#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyp/complex_core.hpp"

namespace hyp {

/// Axis-aligned rectangle [x_min, x_max] x [y_min, y_max].
struct Box {
    double x_min, x_max, y_min, y_max;

    bool contains(ComplexPoint z) const {
        return z.real() >= x_min && z.real() <= x_max && z.imag() >= y_min && z.imag() <= y_max;
    }

    static Box around(ComplexPoint c, double half_width) {
        return {c.real() - half_width, c.real() + half_width, c.imag() - half_width, c.imag() + half_width};
    }
};

/// An open connected planar set described by membership and distance to its
/// boundary. Punctures are part of the boundary and never members.
struct DomainDescriptor {
    std::string name;
    std::function<bool(ComplexPoint)> contains;
    /// Euclidean distance to the boundary (punctures included); 1-Lipschitz,
    /// +inf for the whole plane.
    std::function<double(ComplexPoint)> boundary_distance;
    std::vector<ComplexPoint> punctures;
    bool includes_infinity_boundary = false;
    /// Bounding box when the domain is bounded.
    std::optional<Box> bounds;
};

/// The disc |z| < r.
inline DomainDescriptor disc_domain(double r = 1.0) {
    if (!(r > 0.0)) throw DomainError("disc_domain: radius must be positive");
    DomainDescriptor d;
    d.name = r == 1.0 ? "disc" : "disc(" + std::to_string(r) + ")";
    d.contains = [r](ComplexPoint z) { return std::abs(z) < r; };
    d.boundary_distance = [r](ComplexPoint z) { return std::max(0.0, r - std::abs(z)); };
    d.bounds = Box{-r, r, -r, r};
    return d;
}

inline DomainDescriptor plane_domain() {
    DomainDescriptor d;
    d.name = "plane";
    d.contains = [](ComplexPoint z) { return is_finite(z); };
    d.boundary_distance = [](ComplexPoint) { return std::numeric_limits<double>::infinity(); };
    d.includes_infinity_boundary = true;
    return d;
}

/// The plane minus finitely many points.
inline DomainDescriptor punctured_plane_domain(std::vector<ComplexPoint> punctures) {
    DomainDescriptor d;
    d.name = "punctured-plane";
    d.punctures = punctures;
    d.contains = [punctures](ComplexPoint z) {
        return is_finite(z) && std::none_of(punctures.begin(), punctures.end(), [z](ComplexPoint p) { return p == z; });
    };
    d.boundary_distance = [punctures](ComplexPoint z) {
        double best = std::numeric_limits<double>::infinity();
        for (ComplexPoint p : punctures) best = std::min(best, std::abs(z - p));
        return best;
    };
    d.includes_infinity_boundary = true;
    return d;
}

}  // namespace hyp
