#pragma once

// Paths, length functionals and the closed-form geometry of the Poincare disc.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "hyp/complex_core.hpp"
#include "hyp/metrics.hpp"
#include "hyp/quadrature.hpp"

namespace hyp {

/// Piecewise C^1 curve on [0, 1]. The velocity may jump at the breakpoints.
struct PathSpec {
    std::function<ComplexPoint(double)> point;
    std::function<ComplexPoint(double)> velocity;
    std::vector<double> breakpoints;

    ComplexPoint operator()(double t) const { return point(t); }
};

inline PathSpec constant_path(ComplexPoint p) {
    return {[p](double) { return p; }, [](double) { return ComplexPoint{}; }, {}};
}

inline PathSpec segment_path(ComplexPoint a, ComplexPoint b) {
    return {[a, b](double t) { return a + t * (b - a); }, [a, b](double) { return b - a; }, {}};
}

/// Circular arc c + radius e^{i theta}, theta running from theta0 to theta1.
inline PathSpec arc_path(ComplexPoint c, double radius, double theta0, double theta1) {
    return {[=](double t) { return c + std::polar(radius, theta0 + t * (theta1 - theta0)); },
            [=](double t) { return kI * (theta1 - theta0) * std::polar(radius, theta0 + t * (theta1 - theta0)); },
            {}};
}

/// Polyline through the vertices, vertex k reached at t = k / (n - 1).
inline PathSpec polyline_path(std::vector<ComplexPoint> vertices) {
    if (vertices.size() < 2) throw ContractError("polyline_path: need at least two vertices");
    const auto pieces = static_cast<double>(vertices.size() - 1);
    auto locate = [vertices, pieces](double t) {
        const double s = std::clamp(t, 0.0, 1.0) * pieces;
        const auto k = std::min(static_cast<std::size_t>(s), vertices.size() - 2);
        return std::pair{k, s - static_cast<double>(k)};
    };
    PathSpec path;
    path.point = [vertices, locate](double t) {
        auto [k, u] = locate(t);
        return vertices[k] + u * (vertices[k + 1] - vertices[k]);
    };
    path.velocity = [vertices, locate, pieces](double t) {
        auto [k, u] = locate(t);
        (void)u;
        return pieces * (vertices[k + 1] - vertices[k]);
    };
    for (std::size_t k = 1; k + 1 < vertices.size(); ++k) path.breakpoints.push_back(static_cast<double>(k) / pieces);
    return path;
}

inline PathSpec reversed(const PathSpec& g) {
    PathSpec out{[g](double t) { return g.point(1.0 - t); }, [g](double t) { return -g.velocity(1.0 - t); }, {}};
    for (auto it = g.breakpoints.rbegin(); it != g.breakpoints.rend(); ++it) out.breakpoints.push_back(1.0 - *it);
    return out;
}

/// g1 * g2: g1 on [0, 1/2], g2 on [1/2, 1].
inline PathSpec concatenate(const PathSpec& g1, const PathSpec& g2) {
    PathSpec out;
    out.point = [g1, g2](double t) { return t <= 0.5 ? g1.point(2.0 * t) : g2.point(2.0 * t - 1.0); };
    out.velocity = [g1, g2](double t) {
        return t <= 0.5 ? 2.0 * g1.velocity(2.0 * t) : 2.0 * g2.velocity(2.0 * t - 1.0);
    };
    for (double b : g1.breakpoints) out.breakpoints.push_back(0.5 * b);
    out.breakpoints.push_back(0.5);
    for (double b : g2.breakpoints) out.breakpoints.push_back(0.5 + 0.5 * b);
    return out;
}

/// Worst relative gap between velocity and a central difference of point,
/// sampled away from breakpoints.
inline double velocity_consistency(const PathSpec& g, int samples = 64, double h = 1e-6) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double t = (i + 0.5) / samples;
        const bool near_break = std::any_of(g.breakpoints.begin(), g.breakpoints.end(),
                                            [t, h](double b) { return std::abs(t - b) < 2.0 * h; });
        if (near_break) continue;
        const ComplexPoint fd = (g.point(t + h) - g.point(t - h)) / (2.0 * h);
        const ComplexPoint v = g.velocity(t);
        worst = std::max(worst, std::abs(fd - v) / std::max(1.0, std::abs(v)));
    }
    return worst;
}

struct LengthResult {
    double value = 0.0;
    /// The quadrature did not converge (singular density on the path).
    bool diverged = false;
};

/// Length of a path: integral of sqrt(2 lambda(gamma)) |gamma'| over [0, 1],
/// adaptive Simpson to absolute tolerance tol, split at the breakpoints first.
inline LengthResult path_length(const ConformalMetric& m, const PathSpec& g, double tol = 1e-9) {
    std::vector<double> knots{0.0};
    for (double b : g.breakpoints)
        if (b > 0.0 && b < 1.0) knots.push_back(b);
    knots.push_back(1.0);
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

    auto integrand = [&](double t) {
        const ComplexPoint z = g.point(t);
        if (!m.domain.contains(z)) throw DomainError("path_length: path exits the domain of '" + m.name + "'");
        const double speed = std::abs(g.velocity(t));
        if (speed == 0.0) return 0.0;
        return std::sqrt(2.0 * m.density(z)) * speed;
    };
    const std::function<double(double)> f = integrand;
    LengthResult out;
    const double piece_tol = tol / static_cast<double>(knots.size() - 1);
    for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
        const auto q = adaptive_simpson(f, knots[k], knots[k + 1], piece_tol, 30);
        out.value += q.value;
        out.diverged = out.diverged || q.diverged;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Poincare disc closed forms

namespace detail {
inline void require_open_disc(ComplexPoint p, const char* what) {
    if (!(std::abs(p) < 1.0)) throw DomainError(std::string(what) + ": point outside the open unit disc");
}
}  // namespace detail

/// The three equal closed forms of the Poincare distance.
struct DistanceForms {
    double log_ratio;    ///< log((|1 - p*q| + |p - q|) / (|1 - p*q| - |p - q|))
    double log_mobius;   ///< log((1 + |phi_p(q)|) / (1 - |phi_p(q)|))
    double artanh_form;  ///< 2 artanh |phi_p(q)|
};

inline DistanceForms poincare_distance_forms(ComplexPoint p, ComplexPoint q) {
    detail::require_open_disc(p, "poincare_distance");
    detail::require_open_disc(q, "poincare_distance");
    const double a = std::abs(1.0 - std::conj(p) * q);
    const double b = std::abs(p - q);
    const double mu = b / a;
    return {std::log((a + b) / (a - b)), std::log((1.0 + mu) / (1.0 - mu)), 2.0 * artanh(mu)};
}

/// rho(p, q) = 2 artanh |phi_p(q)|.
inline double poincare_distance(ComplexPoint p, ComplexPoint q) {
    detail::require_open_disc(p, "poincare_distance");
    detail::require_open_disc(q, "poincare_distance");
    return 2.0 * artanh(std::abs(p - q) / std::abs(1.0 - std::conj(p) * q));
}

/// mu(p, q) = |phi_q(p)|, with rho = 2 artanh(mu).
inline double mobius_distance(ComplexPoint p, ComplexPoint q) {
    detail::require_open_disc(p, "mobius_distance");
    detail::require_open_disc(q, "mobius_distance");
    return std::abs(p - q) / std::abs(1.0 - std::conj(q) * p);
}

/// t -> phi_{-p}(t phi_p(q)): the chord from 0 to phi_p(q) carried back to p.
inline PathSpec geodesic(ComplexPoint p, ComplexPoint q) {
    detail::require_open_disc(p, "geodesic");
    detail::require_open_disc(q, "geodesic");
    if (p == q) throw ContractError("geodesic: endpoints coincide");
    const ComplexPoint w = mobius(p, q);
    return {[p, w](double t) { return mobius(-p, t * w); },
            [p, w](double t) { return mobius_derivative(-p, t * w) * w; },
            {}};
}

struct EuclideanDisc {
    ComplexPoint center;
    double radius;
};

/// Circle through three non-collinear points.
inline EuclideanDisc circumcircle(ComplexPoint a, ComplexPoint b, ComplexPoint c) {
    const double ax = a.real(), ay = a.imag(), bx = b.real(), by = b.imag(), cx = c.real(), cy = c.imag();
    const double d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
    if (d == 0.0) throw DomainError("circumcircle: collinear points");
    const double a2 = ax * ax + ay * ay, b2 = bx * bx + by * by, c2 = cx * cx + cy * cy;
    const ComplexPoint center{(a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d,
                              (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d};
    return {center, std::abs(a - center)};
}

/// The Poincare ball of the given radius as a Euclidean disc: the image of
/// |w| = tanh(radius / 2) under phi_{-center}, fixed by three points.
inline EuclideanDisc poincare_ball(ComplexPoint center, double radius) {
    detail::require_open_disc(center, "poincare_ball");
    if (!(radius >= 0.0)) throw DomainError("poincare_ball: radius must be nonnegative");
    if (radius == 0.0) return {center, 0.0};
    const double s = std::tanh(0.5 * radius);
    return circumcircle(mobius(-center, s), mobius(-center, kI * s), mobius(-center, -s));
}

using DistanceFunction = std::function<double(ComplexPoint, ComplexPoint)>;

/// sup over dyadic partitions with up to 2^depth pieces of the summed
/// distances between consecutive path points.
inline double inner_length(const DistanceFunction& d, const PathSpec& g, int depth) {
    double best = 0.0;
    for (int level = 0; level <= depth; ++level) {
        const long pieces = 1L << level;
        double sum = 0.0;
        ComplexPoint prev = g.point(0.0);
        for (long k = 1; k <= pieces; ++k) {
            const ComplexPoint cur = g.point(static_cast<double>(k) / static_cast<double>(pieces));
            sum += d(prev, cur);
            prev = cur;
        }
        best = std::max(best, sum);
    }
    return best;
}

}  // namespace hyp
