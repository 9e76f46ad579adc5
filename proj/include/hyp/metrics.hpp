#pragma once

// Conformal pseudometrics ds^2 = 2 lambda(z) |dz|^2.
//
// Every density in this library is the lambda of that expression, never the
// full coefficient 2 lambda. The Poincare metric 4r^2|dz|^2 / (r^2 - |z|^2)^2
// therefore has density 2r^2 / (r^2 - |z|^2)^2.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyp/complex_core.hpp"
#include "hyp/domain.hpp"
#include "hyp/report.hpp"

namespace hyp {

/// A holomorphic map between planar domains together with its derivative.
struct HolomorphicMap {
    std::string name;
    std::function<ComplexPoint(ComplexPoint)> eval;
    std::function<ComplexPoint(ComplexPoint)> deriv;
    DomainDescriptor source;
    DomainDescriptor target;
    /// Known zeros of the derivative in the source.
    std::vector<ComplexPoint> critical_points;

    ComplexPoint operator()(ComplexPoint z) const { return eval(z); }
};

struct ConformalMetric {
    std::string name;
    std::function<double(ComplexPoint)> density;
    DomainDescriptor domain;
    std::optional<std::function<double(ComplexPoint)>> analytic_curvature;
    /// Isolated zeros of the density.
    std::vector<ComplexPoint> zero_set;

    double operator()(ComplexPoint z) const { return density(z); }
};

// ---------------------------------------------------------------------------
// Map constructors

inline HolomorphicMap identity_map(const DomainDescriptor& domain = disc_domain()) {
    return {"identity", [](ComplexPoint z) { return z; }, [](ComplexPoint) { return ComplexPoint{1.0, 0.0}; },
            domain, domain, {}};
}

inline HolomorphicMap constant_map(ComplexPoint value, const DomainDescriptor& source,
                                   const DomainDescriptor& target) {
    return {"constant", [value](ComplexPoint) { return value; }, [](ComplexPoint) { return ComplexPoint{}; },
            source, target, {}};
}

/// z -> offset + scale * z.
inline HolomorphicMap affine_map(ComplexPoint offset, ComplexPoint scale, const DomainDescriptor& source,
                                 const DomainDescriptor& target) {
    return {"affine", [=](ComplexPoint z) { return offset + scale * z; }, [=](ComplexPoint) { return scale; },
            source, target, {}};
}

inline HolomorphicMap automorphism_map(const DiscAutomorphism& t) {
    return {"automorphism", [t](ComplexPoint z) { return t(z); }, [t](ComplexPoint z) { return t.derivative(z); },
            disc_domain(), disc_domain(), {}};
}

/// e^{i angle} prod_k phi_{a_k}(z).
inline HolomorphicMap blaschke_product(std::vector<ComplexPoint> zeros, double angle = 0.0) {
    for (ComplexPoint a : zeros)
        if (!(std::abs(a) < 1.0)) throw DomainError("blaschke_product: zeros must lie in the disc");
    const ComplexPoint rot = std::polar(1.0, angle);
    auto eval = [zeros, rot](ComplexPoint z) {
        ComplexPoint p = rot;
        for (ComplexPoint a : zeros) p *= mobius(a, z);
        return p;
    };
    auto deriv = [zeros, rot](ComplexPoint z) {
        ComplexPoint sum{};
        for (std::size_t k = 0; k < zeros.size(); ++k) {
            ComplexPoint term = mobius_derivative(zeros[k], z);
            for (std::size_t j = 0; j < zeros.size(); ++j)
                if (j != k) term *= mobius(zeros[j], z);
            sum += term;
        }
        return rot * sum;
    };
    return {"blaschke" + std::to_string(zeros.size()), eval, deriv, disc_domain(), disc_domain(), {}};
}

/// Polynomial sum_k coeffs[k] z^k.
inline HolomorphicMap polynomial_map(std::vector<ComplexPoint> coeffs, const DomainDescriptor& source,
                                     const DomainDescriptor& target, std::string name = "polynomial") {
    auto eval = [coeffs](ComplexPoint z) {
        ComplexPoint acc{};
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
        return acc;
    };
    auto deriv = [coeffs](ComplexPoint z) {
        ComplexPoint acc{};
        for (std::size_t k = coeffs.size(); k-- > 1;) acc = acc * z + static_cast<double>(k) * coeffs[k];
        return acc;
    };
    return {std::move(name), eval, deriv, source, target, {}};
}

/// (outer o inner)(z).
inline HolomorphicMap compose(const HolomorphicMap& outer, const HolomorphicMap& inner) {
    auto eval = [outer, inner](ComplexPoint z) { return outer.eval(inner.eval(z)); };
    auto deriv = [outer, inner](ComplexPoint z) { return outer.deriv(inner.eval(z)) * inner.deriv(z); };
    HolomorphicMap out{outer.name + "o" + inner.name, eval, deriv, inner.source, outer.target,
                       inner.critical_points};
    return out;
}

/// Largest relative gap between deriv and a central difference of eval at the given points.
inline double derivative_consistency(const HolomorphicMap& f, const std::vector<ComplexPoint>& points,
                                     double h = 1e-5) {
    double worst = 0.0;
    for (ComplexPoint z : points) {
        const ComplexPoint fd = (f.eval(z + h) - f.eval(z - h)) / (2.0 * h);
        const ComplexPoint d = f.deriv(z);
        worst = std::max(worst, std::abs(fd - d) / std::max(1.0, std::abs(d)));
    }
    return worst;
}

// ---------------------------------------------------------------------------
// Metrics

/// Poincare metric of the disc |z| < r, curvature identically -1.
inline ConformalMetric poincare_metric(double r = 1.0) {
    if (!(r > 0.0)) throw DomainError("poincare_metric: radius must be positive");
    ConformalMetric m;
    m.name = "poincare";
    m.domain = disc_domain(r);
    m.density = [r](ComplexPoint z) {
        const double az = std::abs(z);
        if (!(az <= r * kMetricRadiusLimit)) throw DomainError("poincare_metric: point outside the disc");
        const double d = r * r - az * az;
        return 2.0 * r * r / (d * d);
    };
    m.analytic_curvature = [](ComplexPoint) { return -1.0; };
    return m;
}

/// lambda == c on a domain; c = 1/2 gives the Euclidean length element |dz|.
inline ConformalMetric constant_metric(double c, const DomainDescriptor& domain = plane_domain()) {
    if (!(c > 0.0)) throw DomainError("constant_metric: density must be positive");
    ConformalMetric m;
    m.name = "constant";
    m.domain = domain;
    m.density = [c, contains = domain.contains](ComplexPoint z) {
        if (!contains(z)) throw DomainError("constant_metric: point outside the domain");
        return c;
    };
    m.analytic_curvature = [](ComplexPoint) { return 0.0; };
    return m;
}

namespace detail {

/// Deterministic sunflower layout of n points in the disc |z - c| <= radius.
inline std::vector<ComplexPoint> sunflower(ComplexPoint c, double radius, int n) {
    std::vector<ComplexPoint> pts;
    pts.reserve(static_cast<std::size_t>(std::max(n, 0)));
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < n; ++i) {
        const double rr = radius * std::sqrt((i + 0.5) / n);
        pts.push_back(c + std::polar(rr, i * golden));
    }
    return pts;
}

}  // namespace detail

/// f^*(ds^2): density lambda(f(z)) |f'(z)|^2 on f.source.
///
/// Throws ContractError when a sampled image point of f falls outside m.domain.
inline ConformalMetric pullback(const ConformalMetric& m, const HolomorphicMap& f) {
    const Box probe = f.source.bounds.value_or(Box{-1.0, 1.0, -1.0, 1.0});
    for (int i = 0; i <= 8; ++i) {
        for (int j = 0; j <= 8; ++j) {
            const ComplexPoint z{probe.x_min + (probe.x_max - probe.x_min) * i / 8.0,
                                 probe.y_min + (probe.y_max - probe.y_min) * j / 8.0};
            if (!f.source.contains(z) || f.source.boundary_distance(z) < 1e-6) continue;
            if (!m.domain.contains(f.eval(z)))
                throw ContractError("pullback: map '" + f.name + "' leaves the domain of metric '" + m.name + "'");
        }
    }
    ConformalMetric out;
    out.name = m.name + "*" + f.name;
    out.domain = f.source;
    out.density = [m, f](ComplexPoint z) {
        const double d2 = std::norm(f.deriv(z));
        const double lam = m.density(f.eval(z));
        return d2 == 0.0 ? 0.0 : lam * d2;
    };
    if (m.analytic_curvature) {
        out.analytic_curvature = [k = *m.analytic_curvature, f](ComplexPoint z) { return k(f.eval(z)); };
    }
    out.zero_set = f.critical_points;
    return out;
}

enum class CurvatureMode { analytic, finite_difference };

/// Gauss curvature -(1/lambda) d^2/dz dzbar log lambda.
///
/// The finite-difference route uses the 5-point Laplacian of log lambda at
/// steps h and h/2 with one Richardson extrapolation; h is the requested step
/// clipped to a tenth of the boundary distance. Returns -inf on or within 10h
/// of the zero set.
inline double gauss_curvature(const ConformalMetric& m, ComplexPoint z,
                              CurvatureMode mode = CurvatureMode::finite_difference, double step = 1e-4) {
    if (!m.domain.contains(z)) throw DomainError("gauss_curvature: point outside the domain");
    const double bd = m.domain.boundary_distance(z);
    const double h = std::min(step, bd / 10.0);
    for (ComplexPoint zero : m.zero_set)
        if (std::abs(z - zero) < 10.0 * h) return -std::numeric_limits<double>::infinity();
    const double lam = m.density(z);
    if (lam == 0.0) return -std::numeric_limits<double>::infinity();
    if (mode == CurvatureMode::analytic && m.analytic_curvature) return (*m.analytic_curvature)(z);
    if (!(h > 0.0)) throw DomainError("gauss_curvature: point on the boundary");

    const double g0 = std::log(lam);
    auto laplacian = [&](double s) {
        const ComplexPoint pts[4] = {z + s, z - s, z + kI * s, z - kI * s};
        double sum = -4.0 * g0;
        for (ComplexPoint p : pts) {
            if (!m.domain.contains(p)) throw DomainError("gauss_curvature: stencil leaves the domain");
            sum += std::log(m.density(p));
        }
        return sum / (s * s);
    };
    const double coarse = laplacian(h);
    const double fine = laplacian(0.5 * h);
    const double lap = (4.0 * fine - coarse) / 3.0;
    return -lap / (4.0 * lam);
}

/// Checks that `candidate` touches `m` from below at z0: candidate <= m + tol
/// on the disc |z - z0| <= radius and |candidate(z0) - m(z0)| <= tol.
inline VerificationReport verify_supporting(const ConformalMetric& candidate, const ConformalMetric& m,
                                            ComplexPoint z0, double radius, int samples, double tol = 1e-9) {
    VerificationReport rep;
    rep.check_name = "supporting";
    rep.params = {{"candidate", candidate.name}, {"metric", m.name}, {"z0", {z0.real(), z0.imag()}},
                  {"radius", radius}};
    rep.tolerance = tol;
    rep.record(std::abs(candidate(z0) - m(z0)), {{"z", {z0.real(), z0.imag()}}, {"kind", "base"}});
    for (ComplexPoint z : detail::sunflower(z0, radius, samples))
        rep.record(candidate(z) - m(z), {{"z", {z.real(), z.imag()}}, {"kind", "disc"}});
    return rep.finalize();
}

}  // namespace hyp
