#pragma once

// Sampled checks of the Schwarz lemma, the Schwarz-Pick lemma and distance
// contraction under metric-decreasing maps, plus the built-in map catalog.

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "hyp/complex_core.hpp"
#include "hyp/metrics.hpp"
#include "hyp/paths.hpp"
#include "hyp/report.hpp"
#include "hyp/sampling.hpp"

namespace hyp {

inline constexpr double kClosedFormTolerance = 1e-9;

namespace detail {
inline Json point_json(ComplexPoint z) { return Json::array({z.real(), z.imag()}); }
}  // namespace detail

/// |f(z)| <= |z| on the samples and |f'(0)| <= 1, for f(0) = 0.
inline VerificationReport schwarz_check(const HolomorphicMap& f, int samples, std::uint64_t seed = 1,
                                        double tol = kClosedFormTolerance) {
    VerificationReport rep;
    rep.check_name = "schwarz";
    rep.params = {{"map", f.name}, {"samples", samples}};
    rep.seed = seed;
    rep.tolerance = tol;
    const ComplexPoint f0 = f(0.0);
    if (std::abs(f0) > 1e-12) {
        rep.status = "precondition";
        rep.record(std::abs(f0), {{"f(0)", detail::point_json(f0)}});
        return rep.finalize();
    }
    rep.record(std::abs(f.deriv(0.0)) - 1.0, {{"z", detail::point_json(0.0)}, {"kind", "derivative"}});
    const DiscSampler s(seed);
    for (int k = 0; k < samples; ++k) {
        const ComplexPoint z = s(static_cast<std::uint64_t>(k));
        rep.record(std::abs(f(z)) - std::abs(z), {{"z", detail::point_json(z)}, {"kind", "modulus"}});
    }
    return rep.finalize();
}

/// rho(f(p), f(q)) - rho(p, q) over sampled pairs, and the normalized
/// pointwise form |f'(z)| (1 - |z|^2) / (1 - |f(z)|^2) - 1.
inline VerificationReport schwarz_pick_check(const HolomorphicMap& f, int pair_samples, std::uint64_t seed = 1,
                                             double tol = kClosedFormTolerance) {
    VerificationReport rep;
    rep.check_name = "schwarz-pick";
    rep.params = {{"map", f.name}, {"pair_samples", pair_samples}};
    rep.seed = seed;
    rep.tolerance = tol;
    const DiscSampler sp(seed, 0.98, 0), sq(seed, 0.98, 1);
    for (int k = 0; k < pair_samples; ++k) {
        const ComplexPoint p = sp(static_cast<std::uint64_t>(k)), q = sq(static_cast<std::uint64_t>(k));
        const ComplexPoint fp = f(p), fq = f(q);
        if (!(std::abs(fp) < 1.0) || !(std::abs(fq) < 1.0)) {
            VerificationReport pre = rep;
            pre.status = "precondition";
            pre.record(std::max(std::abs(fp), std::abs(fq)) - 1.0, {{"p", detail::point_json(p)}, {"q", detail::point_json(q)}});
            return pre.finalize();
        }
        rep.record(poincare_distance(fp, fq) - poincare_distance(p, q),
                   {{"p", detail::point_json(p)}, {"q", detail::point_json(q)}, {"kind", "distance"}});
        const double ratio = std::abs(f.deriv(p)) * (1.0 - std::norm(p)) / (1.0 - std::norm(fp));
        rep.record(ratio - 1.0, {{"z", detail::point_json(p)}, {"kind", "derivative"}});
    }
    return rep.finalize();
}

/// d2(f(x), f(y)) <= d1(x, y) on sampled pairs of the disc, after checking
/// the pointwise hypothesis f^*(ds2^2) <= ds1^2 at the sample points.
inline VerificationReport contraction_check(const ConformalMetric& m1, const ConformalMetric& m2, const HolomorphicMap& f,
                                            const DistanceFunction& d1, const DistanceFunction& d2, int pair_samples,
                                            std::uint64_t seed = 1, double tol = kClosedFormTolerance,
                                            double sample_radius = 0.9) {
    VerificationReport rep;
    rep.check_name = "contraction";
    rep.params = {{"source_metric", m1.name}, {"target_metric", m2.name}, {"map", f.name}, {"pair_samples", pair_samples}};
    rep.seed = seed;
    rep.tolerance = tol;
    const DiscSampler sp(seed, sample_radius, 0), sq(seed, sample_radius, 1);

    VerificationReport hypothesis = rep;
    hypothesis.status = "hypothesis";
    hypothesis.tolerance = kClosedFormTolerance;
    for (int k = 0; k < pair_samples; ++k) {
        for (ComplexPoint z : {sp(static_cast<std::uint64_t>(k)), sq(static_cast<std::uint64_t>(k))}) {
            const double pulled = m2(f(z)) * std::norm(f.deriv(z));
            const double base = m1(z);
            hypothesis.record(pulled / base - 1.0, {{"z", detail::point_json(z)}});
        }
    }
    if (hypothesis.worst_violation > hypothesis.tolerance) return hypothesis.finalize();

    for (int k = 0; k < pair_samples; ++k) {
        const ComplexPoint p = sp(static_cast<std::uint64_t>(k)), q = sq(static_cast<std::uint64_t>(k));
        rep.record(d2(f(p), f(q)) - d1(p, q), {{"p", detail::point_json(p)}, {"q", detail::point_json(q)}});
    }
    return rep.finalize();
}

// ---------------------------------------------------------------------------
// Built-in catalog of self-maps of the disc

struct CatalogMap {
    HolomorphicMap map;
    /// Automorphisms: the Schwarz-Pick inequalities are equalities.
    bool automorphism = false;
    /// f(0) = 0, so the Schwarz lemma applies.
    bool centered = false;
};

inline std::vector<CatalogMap> disc_map_catalog() {
    const auto D = disc_domain();
    std::vector<CatalogMap> out;
    auto named = [](HolomorphicMap m, std::string name) {
        m.name = std::move(name);
        return m;
    };
    out.push_back({identity_map(), true, true});
    out.push_back({named(automorphism_map(DiscAutomorphism::make(0.7, 0.0)), "rotation"), true, true});
    out.push_back({named(automorphism_map(DiscAutomorphism::make(0.0, {0.5, 0.0})), "mobius(0.5)"), true, false});
    out.push_back({named(automorphism_map(DiscAutomorphism::make(1.3, {-0.2, 0.6})), "automorphism(1.3,-0.2+0.6i)"), true, false});
    out.push_back({named(automorphism_map(DiscAutomorphism::make(-2.0, {0.0, -0.85})), "automorphism(-2,-0.85i)"), true, false});
    auto sq = polynomial_map({0.0, 0.0, 1.0}, D, D, "z^2");
    sq.critical_points = {0.0};
    out.push_back({sq, false, true});
    out.push_back({polynomial_map({0.0, 0.5}, D, D, "z/2"), false, true});
    out.push_back({blaschke_product({{0.3, 0.2}, {-0.5, 0.1}}, 0.4), false, false});
    out.push_back({named(blaschke_product({0.0, {0.6, -0.3}}), "blaschke2(0)"), false, true});
    out.push_back({blaschke_product({{0.1, 0.7}, {-0.4, -0.4}, {0.8, 0.0}}, -1.0), false, false});
    return out;
}

}  // namespace hyp
