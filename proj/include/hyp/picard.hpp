#pragma once

// The negatively curved metric on C \ {0, 1}
//
//   lambda(z) = 4 (1 + |z|^2) / (|z|^2 |z - 1|^2 A1^2 A2^2 A3^2),
//   A1 = log(C|z|^2 / (1 + |z|^2)),
//   A2 = log(C|z - 1|^2 / (2 (1 + |z|^2))),
//   A3 = log(C / (1 + |z|^2)),
//
// and its quantitative consequences: Ahlfors-type derivative bounds, the
// Landau radius bound, the Schottky bound and completeness probes.
//
// Each A_i vanishes on a circle (|z| = 1/sqrt(C-1), a circle around 1, and
// |z| = sqrt(C-1)), where the density is infinite. The three circles split
// C \ {0, 1} into four regular components; on each of them the metric is
// smooth, complete and has curvature below the calibrated bound. The domain
// descriptor below therefore treats the circles as boundary.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "hyp/complex_core.hpp"
#include "hyp/domain.hpp"
#include "hyp/errors.hpp"
#include "hyp/mesh.hpp"
#include "hyp/metrics.hpp"
#include "hyp/paths.hpp"
#include "hyp/quadrature.hpp"
#include "hyp/report.hpp"
#include "hyp/sampling.hpp"

namespace hyp {

struct CalibrationGrid {
    int annulus_radii = 40;
    int annulus_angles = 32;
    double annulus_min = 1e-6;
    double annulus_max = 1e-1;
    int infinity_radii = 40;
    int infinity_angles = 32;
    double infinity_min = 10.0;
    double infinity_max = 1e6;
    Box bulk{-4.0, 5.0, -4.0, 4.0};
    double bulk_spacing = 0.05;
    /// Bulk samples closer than this to 0 or 1 are left to the annuli.
    double puncture_exclusion = 0.1;

    std::vector<ComplexPoint> samples() const;
};

struct CurvatureCertificate {
    double C = 0.0;
    CalibrationGrid grid;
    double margin = 0.0;
    double max_curvature = 0.0;
    ComplexPoint argmax{};
    std::int64_t sample_count = 0;
};

struct PpcMetricParams {
    double C = 16.0;
    std::optional<CurvatureCertificate> certificate;

    static PpcMetricParams make(double C) {
        if (!(C > 9.0)) throw DomainError("PpcMetricParams: C must exceed 9");
        return {C, std::nullopt};
    }
};

inline Json to_json(const CalibrationGrid& g) {
    return {{"annulus_radii", g.annulus_radii},
            {"annulus_angles", g.annulus_angles},
            {"annulus_min", g.annulus_min},
            {"annulus_max", g.annulus_max},
            {"infinity_radii", g.infinity_radii},
            {"infinity_angles", g.infinity_angles},
            {"infinity_min", g.infinity_min},
            {"infinity_max", g.infinity_max},
            {"bulk", {g.bulk.x_min, g.bulk.x_max, g.bulk.y_min, g.bulk.y_max}},
            {"bulk_spacing", g.bulk_spacing},
            {"puncture_exclusion", g.puncture_exclusion}};
}

inline Json to_json(const CurvatureCertificate& c) {
    return {{"C", c.C},
            {"grid", to_json(c.grid)},
            {"margin", c.margin},
            {"max_curvature", c.max_curvature},
            {"argmax", {c.argmax.real(), c.argmax.imag()}},
            {"sample_count", c.sample_count}};
}

inline std::vector<ComplexPoint> CalibrationGrid::samples() const {
    std::vector<ComplexPoint> out;
    auto log_space = [](double lo, double hi, int n, int k) {
        return n == 1 ? lo : lo * std::pow(hi / lo, static_cast<double>(k) / (n - 1));
    };
    for (ComplexPoint a : {ComplexPoint{0.0, 0.0}, ComplexPoint{1.0, 0.0}})
        for (int i = 0; i < annulus_radii; ++i)
            for (int j = 0; j < annulus_angles; ++j)
                out.push_back(a + std::polar(log_space(annulus_min, annulus_max, annulus_radii, i),
                                             2.0 * std::numbers::pi * (j + 0.5) / annulus_angles));
    for (int i = 0; i < infinity_radii; ++i)
        for (int j = 0; j < infinity_angles; ++j)
            out.push_back(std::polar(log_space(infinity_min, infinity_max, infinity_radii, i),
                                     2.0 * std::numbers::pi * (j + 0.5) / infinity_angles));
    const int nx = static_cast<int>(std::round((bulk.x_max - bulk.x_min) / bulk_spacing));
    const int ny = static_cast<int>(std::round((bulk.y_max - bulk.y_min) / bulk_spacing));
    for (int i = 0; i <= nx; ++i) {
        for (int j = 0; j <= ny; ++j) {
            const ComplexPoint z{bulk.x_min + i * bulk_spacing, bulk.y_min + j * bulk_spacing};
            if (std::abs(z) < puncture_exclusion || std::abs(z - 1.0) < puncture_exclusion) continue;
            out.push_back(z);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Density and curvature

/// The circles where A1, A2 and A3 vanish.
struct PpcSingularCircles {
    double inner_zero_radius;  ///< A1 = 0: |z| = 1/sqrt(C-1)
    double one_center;         ///< A2 = 0: |z - one_center| = one_radius
    double one_radius;
    double outer_radius;       ///< A3 = 0: |z| = sqrt(C-1)

    explicit PpcSingularCircles(double C)
        : inner_zero_radius(1.0 / std::sqrt(C - 1.0)),
          one_center(C / (C - 2.0)),
          one_radius(std::sqrt(4.0 * C - 4.0) / (C - 2.0)),
          outer_radius(std::sqrt(C - 1.0)) {}
};

enum class PpcComponent { near_zero, near_one, bulk, near_infinity };

inline PpcComponent ppc_component(ComplexPoint z, double C) {
    const PpcSingularCircles s(C);
    if (std::abs(z) < s.inner_zero_radius) return PpcComponent::near_zero;
    if (std::abs(z - s.one_center) < s.one_radius) return PpcComponent::near_one;
    if (std::abs(z) > s.outer_radius) return PpcComponent::near_infinity;
    return PpcComponent::bulk;
}

namespace detail {

struct PpcTerms {
    double a;    // |z|^2
    double b;    // |z - 1|^2
    double c;    // |z + 1|^2
    double A1, A2, A3;
};

/// z given as z = base + delta with base in {0, 1}; the offset z - 1 is passed separately.
inline PpcTerms ppc_terms(ComplexPoint z, ComplexPoint z_minus_one, double C) {
    PpcTerms t;
    t.a = std::norm(z);
    t.b = std::norm(z_minus_one);
    t.c = std::norm(z + 1.0);
    if (t.a == 0.0 || t.b == 0.0) throw DomainError("ppc: point is a puncture");
    t.A1 = std::log(C * t.a / (1.0 + t.a));
    t.A2 = std::log(C * t.b / (2.0 * (1.0 + t.a)));
    t.A3 = std::log(C / (1.0 + t.a));
    if (t.A1 == 0.0 || t.A2 == 0.0 || t.A3 == 0.0)
        throw CalibrationError("ppc: a logarithmic factor vanishes at the evaluation point");
    return t;
}

inline double ppc_density_terms(const PpcTerms& t) {
    return 4.0 * (1.0 + t.a) / (t.a * t.b * t.A1 * t.A1 * t.A2 * t.A2 * t.A3 * t.A3);
}

inline double ppc_curvature_terms(const PpcTerms& t) {
    const double d = 2.0 * std::pow(1.0 + t.a, 3);
    const double A1s = t.A1 * t.A1, A2s = t.A2 * t.A2, A3s = t.A3 * t.A3;
    return -t.a * t.b * A1s * A2s * A3s / (2.0 * d)  //
           - t.b * A2s * A3s * (1.0 + t.a * t.A1) / d  //
           - t.a * A1s * A3s * (t.c + t.b * t.A2) / d  //
           - t.a * t.b * A1s * A2s * (t.a + t.A3) / d;
}

inline void require_finite_point(ComplexPoint z) {
    if (is_point_at_infinity(z)) throw DomainError("ppc: the point at infinity is a puncture");
    if (!is_finite(z)) throw DomainError("ppc: non-finite point");
}

}  // namespace detail

/// Density lambda of the C\{0,1} metric. For |z| > 2 the value is obtained
/// in the chart w = 1/z (the metric is invariant under z -> 1/z, so
/// lambda(z) = lambda(1/z) / |z|^4).
inline double ppc_density(ComplexPoint z, const PpcMetricParams& params) {
    detail::require_finite_point(z);
    if (std::abs(z) > 2.0) {
        const ComplexPoint w = 1.0 / z;
        return detail::ppc_density_terms(detail::ppc_terms(w, w - 1.0, params.C)) / std::pow(std::norm(z), 2);
    }
    return detail::ppc_density_terms(detail::ppc_terms(z, z - 1.0, params.C));
}

/// Density at base + delta for base 0 or 1.
inline double ppc_density_near(ComplexPoint base, ComplexPoint delta, const PpcMetricParams& params) {
    if (base == 0.0) return detail::ppc_density_terms(detail::ppc_terms(delta, delta - 1.0, params.C));
    if (base == 1.0) return detail::ppc_density_terms(detail::ppc_terms(1.0 + delta, delta, params.C));
    throw DomainError("ppc_density_near: base must be 0 or 1");
}

/// Closed-form Gauss curvature. K(z) = K(1/z) by the inversion symmetry.
inline double ppc_curvature(ComplexPoint z, const PpcMetricParams& params) {
    detail::require_finite_point(z);
    if (std::abs(z) > 2.0) {
        const ComplexPoint w = 1.0 / z;
        return detail::ppc_curvature_terms(detail::ppc_terms(w, w - 1.0, params.C));
    }
    return detail::ppc_curvature_terms(detail::ppc_terms(z, z - 1.0, params.C));
}

/// lim_{z->0} K = lim_{z->inf} K = -(1/2) log^2(C/2) log^2 C.
inline double ppc_curvature_limit_zero(double C) {
    return -0.5 * std::pow(std::log(C / 2.0), 2) * std::pow(std::log(C), 2);
}

/// lim_{z->1} K = -(1/4) log^4(C/2).
inline double ppc_curvature_limit_one(double C) { return -0.25 * std::pow(std::log(C / 2.0), 4); }

/// C \ {0, 1} with the three singular circles of the metric as extra boundary.
inline DomainDescriptor ppc_domain(const PpcMetricParams& params) {
    const PpcSingularCircles s(params.C);
    DomainDescriptor d;
    d.name = "ppc";
    d.punctures = {0.0, 1.0};
    d.includes_infinity_boundary = true;
    d.boundary_distance = [s](ComplexPoint z) {
        if (!is_finite(z)) return 0.0;
        const double r = std::abs(z);
        return std::min({r, std::abs(z - 1.0), std::abs(r - s.inner_zero_radius),
                         std::abs(std::abs(z - s.one_center) - s.one_radius), std::abs(r - s.outer_radius)});
    };
    d.contains = [bd = d.boundary_distance](ComplexPoint z) { return is_finite(z) && bd(z) > 0.0; };
    return d;
}

inline ConformalMetric ppc_metric(const PpcMetricParams& params) {
    ConformalMetric m;
    m.name = "ppc";
    m.domain = ppc_domain(params);
    m.density = [params](ComplexPoint z) { return ppc_density(z, params); };
    m.analytic_curvature = [params](ComplexPoint z) { return ppc_curvature(z, params); };
    return m;
}

// ---------------------------------------------------------------------------
// Calibration

struct CalibrationConfig {
    std::vector<double> candidates{9.5, 10.0, 12.0, 16.0, 24.0, 32.0, 48.0, 64.0};
    double range_lo = 9.0;
    double range_hi = std::numeric_limits<double>::infinity();
    CalibrationGrid grid;
    double margin = 1e-3;
};

/// Largest closed-form curvature over the calibration grid for one C.
inline CurvatureCertificate curvature_certificate(double C, const CalibrationGrid& grid, double margin) {
    const auto params = PpcMetricParams::make(C);
    CurvatureCertificate cert;
    cert.C = C;
    cert.grid = grid;
    cert.margin = margin;
    cert.max_curvature = -std::numeric_limits<double>::infinity();
    for (ComplexPoint z : grid.samples()) {
        const double k = ppc_curvature(z, params);
        if (k > cert.max_curvature) {
            cert.max_curvature = k;
            cert.argmax = z;
        }
        ++cert.sample_count;
    }
    return cert;
}

/// Smallest candidate C in the range whose sampled curvature stays below -1 - margin.
inline PpcMetricParams calibrate_C(const CalibrationConfig& config = {}) {
    if (!(config.range_lo >= 9.0)) throw DomainError("calibrate_C: search range must lie in (9, inf)");
    std::vector<double> cands;
    for (double c : config.candidates)
        if (c > 9.0 && c >= config.range_lo && c <= config.range_hi) cands.push_back(c);
    std::sort(cands.begin(), cands.end());
    std::string offending = "no candidate C in range";
    for (double C : cands) {
        CurvatureCertificate cert;
        try {
            cert = curvature_certificate(C, config.grid, config.margin);
        } catch (const CalibrationError& e) {
            offending = "C=" + std::to_string(C) + ": " + e.what();
            continue;
        }
        if (cert.max_curvature < -1.0 - config.margin) {
            PpcMetricParams p = PpcMetricParams::make(C);
            p.certificate = cert;
            return p;
        }
        offending = "C=" + std::to_string(C) + ": K=" + std::to_string(cert.max_curvature) + " at (" +
                    std::to_string(cert.argmax.real()) + ", " + std::to_string(cert.argmax.imag()) + ")";
    }
    throw CalibrationError("calibrate_C: no candidate certified; last offending sample " + offending);
}

// ---------------------------------------------------------------------------
// Completeness probes

/// Partial lengths along a path running into a boundary point or infinity.
struct GrowthReport {
    std::vector<double> t_samples;
    /// 1 - t at each sample.
    std::vector<double> gaps;
    std::vector<double> lengths;
    /// Iterated-log feature the lengths are regressed on.
    std::vector<double> features;
    bool divergence_flag = false;
    double fit_intercept = 0.0;
    double fit_slope = 0.0;
    double tail_slope = 0.0;
    double fit_residual = 0.0;
    std::string fitted_growth;
};

inline Json to_json(const GrowthReport& g) {
    return {{"t_samples", g.t_samples},       {"gaps", g.gaps},
            {"lengths", g.lengths},           {"features", g.features},
            {"divergence_flag", g.divergence_flag}, {"fit_intercept", g.fit_intercept},
            {"fit_slope", g.fit_slope},       {"tail_slope", g.tail_slope},
            {"fit_residual", g.fit_residual}, {"fitted_growth", g.fitted_growth}};
}

/// A path z(s) = target + r0 s e^{i angle} (s = 1 - t) into a finite
/// target point, described in the variable tau = log(1 - t).
struct RadialProbe {
    /// Line element sqrt(2 lambda) |dz/dtau| at tau <= 0.
    std::function<double(double)> speed;
    /// Feature u(tau) used for the iterated-log fit.
    std::function<double(double)> feature;
};

namespace detail {

inline std::pair<double, double> least_squares(const std::vector<double>& x, const std::vector<double>& y,
                                               std::size_t from) {
    const std::size_t n = x.size() - from;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = from; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double den = n * sxx - sx * sx;
    const double slope = den == 0.0 ? 0.0 : (n * sxy - sx * sy) / den;
    return {(sy - slope * sx) / n, slope};
}

}  // namespace detail

/// Integrates the probe out to t = t_max, sampling at 1 - t = 10^{-k/4}.
///
/// divergence_flag is set when the fitted slope of length against the
/// feature is positive, the slope over the last half of the samples keeps at
/// least half of it, and every partial length clears the threshold
/// L_0 + (slope/2)(u - u_0). fit_residual reports how well the growth
/// follows the feature and does not enter the flag.
inline GrowthReport completeness_probe(const RadialProbe& probe, double t_max) {
    if (!(t_max > 0.0 && t_max < 1.0)) throw DomainError("completeness_probe: t_max must lie in (0, 1)");
    const double tau_end = std::log1p(-t_max);
    GrowthReport rep;
    const std::function<double(double)> f = probe.speed;
    double tau_prev = 0.0, total = 0.0;
    for (int k = 1;; ++k) {
        double tau = -k * std::log(10.0) / 4.0;
        const bool last = tau <= tau_end;
        if (last) tau = tau_end;
        const auto q = adaptive_simpson(f, tau, tau_prev, 1e-11, 40);
        total += q.value;
        tau_prev = tau;
        rep.gaps.push_back(std::exp(tau));
        rep.t_samples.push_back(-std::expm1(tau));
        rep.lengths.push_back(total);
        rep.features.push_back(probe.feature(tau));
        if (last) break;
    }
    const auto [a, b] = detail::least_squares(rep.features, rep.lengths, 0);
    rep.fit_intercept = a;
    rep.fit_slope = b;
    rep.tail_slope = detail::least_squares(rep.features, rep.lengths, rep.features.size() / 2).second;
    double worst = 0.0, scale = 0.0;
    bool above = true;
    for (std::size_t i = 0; i < rep.lengths.size(); ++i) {
        worst = std::max(worst, std::abs(rep.lengths[i] - (a + b * rep.features[i])));
        scale = std::max(scale, std::abs(rep.lengths[i]));
        const double threshold = rep.lengths[0] + 0.5 * b * (rep.features[i] - rep.features[0]);
        above = above && rep.lengths[i] >= threshold - 1e-12;
    }
    rep.fit_residual = scale > 0.0 ? worst / scale : 0.0;
    rep.divergence_flag = b > 0.0 && rep.tail_slope >= 0.5 * b && above;
    rep.fitted_growth = "L(t) ~ " + std::to_string(a) + " + " + std::to_string(b) + " * u(t)";
    return rep;
}

/// Straight path from target + r0 e^{i angle} into the target under an
/// arbitrary metric; the feature is log(1 + log(r0 / |z - target|)).
inline RadialProbe radial_probe(const ConformalMetric& m, ComplexPoint target, double r0, double angle) {
    const ComplexPoint dir = std::polar(1.0, angle);
    return {[m, target, r0, dir](double tau) {
                const double r = r0 * std::exp(tau);
                const ComplexPoint z = target + r * dir;
                if (!m.domain.contains(z)) throw DomainError("completeness_probe: path leaves the domain");
                return std::sqrt(2.0 * m.density(z)) * r;
            },
            [](double tau) { return std::log(1.0 - tau); }};
}

enum class PpcTarget { zero, one, infinity };

/// Probe of the C\{0,1} metric towards 0, 1 or infinity. The path starts
/// half-way between the target and the nearest singular circle, so it stays
/// in the regular component of the target. Lengths are regressed on log|A_i|
/// along the path, the factor that drives the divergence.
inline RadialProbe ppc_probe(const PpcMetricParams& params, PpcTarget target) {
    const PpcSingularCircles s(params.C);
    const double C = params.C;
    switch (target) {
        case PpcTarget::zero: {
            const double r0 = 0.5 * s.inner_zero_radius;
            return {[=](double tau) {
                        const double r = r0 * std::exp(tau);
                        return std::sqrt(2.0 * ppc_density_near(0.0, -r, params)) * r;
                    },
                    [=](double tau) {
                        const double r = r0 * std::exp(tau);
                        return std::log(std::abs(std::log(C * r * r / (1.0 + r * r))));
                    }};
        }
        case PpcTarget::one: {
            const double r0 = 0.5 * (s.one_center + s.one_radius - 1.0);
            return {[=](double tau) {
                        const double r = r0 * std::exp(tau);
                        return std::sqrt(2.0 * ppc_density_near(1.0, r, params)) * r;
                    },
                    [=](double tau) {
                        const double r = r0 * std::exp(tau);
                        const double a = (1.0 + r) * (1.0 + r);
                        return std::log(std::abs(std::log(C * r * r / (2.0 * (1.0 + a)))));
                    }};
        }
        case PpcTarget::infinity: {
            // z = -R0 / s. In the chart w = 1/z this is the path into w = 0 and
            // the line element is sqrt(2 lambda(w)) |dw| by the inversion symmetry.
            const double w0 = 0.5 / s.outer_radius;
            return {[=](double tau) {
                        const double r = w0 * std::exp(tau);
                        return std::sqrt(2.0 * ppc_density_near(0.0, -r, params)) * r;
                    },
                    [=](double tau) {
                        const double r = w0 * std::exp(tau);
                        const double zz = 1.0 / (r * r);
                        return std::log(std::abs(std::log(C / (1.0 + zz))));
                    }};
        }
    }
    throw DomainError("ppc_probe: unknown target");
}

inline GrowthReport completeness_probe(const PpcMetricParams& params, PpcTarget target, double t_max = 1.0 - 1e-15) {
    return completeness_probe(ppc_probe(params, target), t_max);
}

// ---------------------------------------------------------------------------
// Ahlfors inequality and its consequences

/// Pointwise check of f^*(ds^2) <= |L|^{-1} d rho^2 on samples of the disc.
///
/// The recorded violation is the ratio 2 lambda(f(z)) |f'(z)|^2 (1 - |z|^2)^2 |L| / 4 minus 1.
/// When the metric has an analytic curvature, K(f(z)) <= L is checked first
/// and a failure is reported with status "precondition".
inline VerificationReport ahlfors_check(const ConformalMetric& m, double curvature_bound, const HolomorphicMap& f,
                                        int samples, std::uint64_t seed = 1, double tol = 1e-6) {
    if (!(curvature_bound < 0.0)) throw DomainError("ahlfors_check: curvature bound must be negative");
    VerificationReport rep;
    rep.check_name = "ahlfors";
    rep.params = {{"metric", m.name}, {"map", f.name}, {"curvature_bound", curvature_bound}};
    rep.tolerance = tol;
    rep.seed = seed;
    const DiscSampler sampler(seed);
    const double L = std::abs(curvature_bound);

    if (m.analytic_curvature) {
        VerificationReport pre = rep;
        pre.status = "precondition";
        for (int k = 0; k < samples; ++k) {
            const ComplexPoint w = f(sampler(static_cast<std::uint64_t>(k)));
            if (!m.domain.contains(w)) {
                pre.record(std::numeric_limits<double>::infinity(), {{"image", {w.real(), w.imag()}}});
                continue;
            }
            pre.record((*m.analytic_curvature)(w)-curvature_bound, {{"image", {w.real(), w.imag()}}});
        }
        if (pre.worst_violation > 1e-9) {
            pre.tolerance = 1e-9;
            return pre.finalize();
        }
    }

    for (int k = 0; k < samples; ++k) {
        const ComplexPoint z = sampler(static_cast<std::uint64_t>(k));
        const ComplexPoint w = f(z);
        const double one_minus = 1.0 - std::norm(z);
        const double lhs = 2.0 * m.density(w) * std::norm(f.deriv(z));
        const double ratio = lhs * one_minus * one_minus * L / 4.0;
        rep.record(ratio - 1.0, {{"z", {z.real(), z.imag()}}, {"image", {w.real(), w.imag()}}});
    }
    return rep.finalize();
}

/// Largest |f'(z0)| allowed for a map of the disc of radius r about z0 into
/// C\{0,1}: sqrt(2 / lambda(f(z0))) / r.
struct DerivativeBound {
    double bound = 0.0;
    double derivative = 0.0;
    bool holds = false;
    bool precondition_ok = true;
};

inline DerivativeBound little_picard_derivative_bound(const HolomorphicMap& f, ComplexPoint z0, double r,
                                                      const PpcMetricParams& params, double tol = 1e-12) {
    if (!(r > 0.0)) throw DomainError("little_picard_derivative_bound: radius must be positive");
    DerivativeBound out;
    for (ComplexPoint u : detail::sunflower(0.0, r, 256)) {
        const ComplexPoint w = f(z0 + u);
        if (std::abs(w) < 1e-6 || std::abs(w - 1.0) < 1e-6) out.precondition_ok = false;
    }
    out.bound = std::sqrt(2.0 / ppc_density(f(z0), params)) / r;
    out.derivative = std::abs(f.deriv(z0));
    out.holds = out.precondition_ok && out.derivative <= out.bound + tol;
    return out;
}

/// Radius bound for maps with f(0) = a0, f'(0) = a1 omitting 0 and 1.
inline double landau_radius_bound(ComplexPoint a0, ComplexPoint a1, const PpcMetricParams& params) {
    if (a1 == 0.0) throw ContractError("landau_radius_bound: f'(0) must be nonzero");
    return std::sqrt(2.0 / ppc_density(a0, params)) / std::abs(a1);
}

struct SchottkyResult {
    double M = 0.0;
    double M1 = 0.0;
    double ball_radius = 0.0;
    std::vector<ComplexPoint> base_points;
    std::vector<double> extents;
};

/// M = C_mag + M1, M1 the largest Euclidean extent of metric balls of radius
/// rho(0, r/R) about base points |a| < C_mag (8 angles x {1/4, 1/2, 3/4} C_mag).
/// A sampled stand-in for the uniform constant.
inline SchottkyResult schottky_bound(double R, double r, double C_mag, const PpcMetricParams& params,
                                     double resolution, MeshOptions options = {}) {
    if (!(R > 0.0) || !(r >= 0.0) || !(r < R)) throw DomainError("schottky_bound: need 0 <= r < R");
    if (!(C_mag > 0.0)) throw DomainError("schottky_bound: C_mag must be positive");
    SchottkyResult out;
    out.ball_radius = r == 0.0 ? 0.0 : poincare_distance(0.0, r / R);
    out.M = C_mag;
    if (out.ball_radius == 0.0) return out;
    const ConformalMetric m = ppc_metric(params);
    for (double frac : {0.25, 0.5, 0.75}) {
        for (int k = 0; k < 8; ++k) {
            const ComplexPoint a = std::polar(frac * C_mag, k * std::numbers::pi / 4.0);
            if (std::abs(a) < 0.1 || std::abs(a - 1.0) < 0.1) continue;
            if (m.domain.boundary_distance(a) < 4.0 * resolution) continue;
            out.base_points.push_back(a);
        }
    }
    out.extents = ball_extents(m, m.domain, out.base_points, out.ball_radius, resolution, options);
    for (double e : out.extents) out.M1 = std::max(out.M1, e);
    out.M = C_mag + out.M1;
    return out;
}

// ---------------------------------------------------------------------------
// Witness maps D -> C \ {0, 1}

/// True when the sampled image of the closed unit disc stays inside the
/// regular component of f(0) and away from the punctures.
inline bool maps_into_component(const HolomorphicMap& f, const PpcMetricParams& params, int samples = 512) {
    const ComplexPoint c0 = f(0.0);
    if (!ppc_domain(params).contains(c0)) return false;
    const PpcComponent home = ppc_component(c0, params.C);
    const auto dom = ppc_domain(params);
    std::vector<ComplexPoint> pts = detail::sunflower(0.0, 1.0, samples);
    for (int k = 0; k < samples; ++k) pts.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / samples));
    for (ComplexPoint z : pts) {
        const ComplexPoint w = f(z);
        if (!dom.contains(w) || ppc_component(w, params.C) != home) return false;
    }
    return true;
}

/// Affine maps z -> a + b z and one exponential map, each sending the disc
/// into a single regular component for C = 16.
inline std::vector<HolomorphicMap> ppc_witness_catalog() {
    const auto D = disc_domain();
    const auto T = punctured_plane_domain({0.0, 1.0});
    std::vector<HolomorphicMap> out;
    const std::pair<ComplexPoint, ComplexPoint> affine[] = {
        {3.0, 0.5},           {-1.0, 0.6},          {{0.0, 2.0}, 1.0},   {-2.0, 1.0},
        {0.1, 0.05},          {1.1, 0.05},          {10.0, 4.0},         {{0.0, -8.0}, 3.0},
        {{0.5, 0.5}, 0.2},    {{-1.0, -1.0}, 0.5},
    };
    for (const auto& [a, b] : affine) {
        auto f = affine_map(a, b, D, T);
        char buf[96];
        std::snprintf(buf, sizeof buf, "(%g%+gi)+(%g%+gi)z", a.real(), a.imag(), b.real(), b.imag());
        f.name = buf;
        out.push_back(f);
    }
    out.push_back({"2i*exp(z/2)", [](ComplexPoint z) { return 2.0 * kI * std::exp(0.5 * z); },
                   [](ComplexPoint z) { return kI * std::exp(0.5 * z); }, D, T, {}});
    return out;
}

}  // namespace hyp
