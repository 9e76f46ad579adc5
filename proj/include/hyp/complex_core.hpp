#pragma once

// Complex arithmetic helpers, Moebius maps of the unit disc and the disc
// automorphism group.

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "hyp/errors.hpp"

namespace hyp {

using ComplexPoint = std::complex<double>;

inline constexpr ComplexPoint kI{0.0, 1.0};

/// Largest modulus accepted where a density of the disc is evaluated.
inline constexpr double kMetricRadiusLimit = 1.0 - 1e-12;

/// Sentinel for the point at infinity. Only the chart z -> 1/z of the
/// C\{0,1} metric consumes it.
inline ComplexPoint point_at_infinity() {
    const double inf = std::numeric_limits<double>::infinity();
    return {inf, inf};
}

inline bool is_point_at_infinity(ComplexPoint z) { return std::isinf(z.real()) && std::isinf(z.imag()); }

inline bool is_finite(ComplexPoint z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// phi_a(z) = (z - a) / (1 - conj(a) z), an automorphism of the unit disc for |a| < 1.
inline ComplexPoint mobius(ComplexPoint a, ComplexPoint z) {
    if (!(std::abs(a) < 1.0)) throw DomainError("mobius: |a| must be < 1");
    if (std::abs(z) > 1.0 + 1e-12) throw DomainError("mobius: |z| must be <= 1");
    const ComplexPoint den = 1.0 - std::conj(a) * z;
    if (den == 0.0) throw DomainError("mobius: degenerate denominator");
    return (z - a) / den;
}

/// d/dz phi_a(z) = (1 - |a|^2) / (1 - conj(a) z)^2.
inline ComplexPoint mobius_derivative(ComplexPoint a, ComplexPoint z) {
    const ComplexPoint den = 1.0 - std::conj(a) * z;
    if (den == 0.0) throw DomainError("mobius_derivative: degenerate denominator");
    return (1.0 - std::norm(a)) / (den * den);
}

/// Inverse hyperbolic tangent on (-1, 1).
inline double artanh(double x) {
    if (!(std::abs(x) < 1.0)) throw DomainError("artanh: |x| must be < 1");
    return std::atanh(x);
}

/// z -> e^{i theta} (z - b) / (1 - conj(b) z).
struct DiscAutomorphism {
    double rotation_angle = 0.0;
    ComplexPoint mobius_center{0.0, 0.0};

    static DiscAutomorphism identity() { return {}; }

    static DiscAutomorphism make(double angle, ComplexPoint center) {
        if (!(std::abs(center) < 1.0)) throw DomainError("DiscAutomorphism: |center| must be < 1");
        return {angle, center};
    }

    ComplexPoint rotation() const { return std::polar(1.0, rotation_angle); }

    ComplexPoint operator()(ComplexPoint z) const { return rotation() * mobius(mobius_center, z); }

    ComplexPoint derivative(ComplexPoint z) const { return rotation() * mobius_derivative(mobius_center, z); }
};

inline ComplexPoint apply_automorphism(const DiscAutomorphism& t, ComplexPoint z) { return t(z); }

inline DiscAutomorphism invert_automorphism(const DiscAutomorphism& t) {
    return {-t.rotation_angle, -t.rotation() * t.mobius_center};
}

/// (outer o inner)(z) = outer(inner(z)).
inline DiscAutomorphism compose(const DiscAutomorphism& outer, const DiscAutomorphism& inner) {
    // The composite sends b to 0 and has derivative e^{i theta} / (1 - |b|^2) there.
    const ComplexPoint b = invert_automorphism(inner)(invert_automorphism(outer)(0.0));
    const ComplexPoint d = outer.derivative(inner(b)) * inner.derivative(b);
    return {std::arg(d * (1.0 - std::norm(b))), b};
}

}  // namespace hyp
