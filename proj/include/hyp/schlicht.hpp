#pragma once

// Largest discs and schlicht discs in f(D) for maps continuous on the closed
// disc, and the Bloch and Landau metric densities built from them.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <queue>
#include <unordered_map>
#include <vector>

#include "hyp/complex_core.hpp"
#include "hyp/errors.hpp"
#include "hyp/metrics.hpp"

namespace hyp {

struct SchlichtGrid {
    /// Candidate centers f(w), w on rings j / rings (j < rings) times angles.
    int rings = 48;
    int angles = 96;
    /// Bloch search uses every stride-th ring and angle of the candidate grid.
    int bloch_stride = 3;
    /// Cartesian grid on [-1, 1]^2 for the preimage components.
    int injectivity_resolution = 241;
    int radius_iterations = 14;
};

namespace detail {

inline std::vector<ComplexPoint> boundary_polyline(const HolomorphicMap& f, int samples) {
    std::vector<ComplexPoint> b;
    b.reserve(static_cast<std::size_t>(samples) + 1);
    for (int k = 0; k < samples; ++k) b.push_back(f(std::polar(1.0, 2.0 * std::numbers::pi * k / samples)));
    b.push_back(b.front());
    return b;
}

inline double segment_distance(ComplexPoint c, ComplexPoint a, ComplexPoint b) {
    const ComplexPoint d = b - a;
    const double len2 = std::norm(d);
    double t = len2 == 0.0 ? 0.0 : ((c - a) * std::conj(d)).real() / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(c - (a + t * d));
}

inline double polyline_distance(ComplexPoint c, const std::vector<ComplexPoint>& poly) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k + 1 < poly.size(); ++k) best = std::min(best, segment_distance(c, poly[k], poly[k + 1]));
    return best;
}

inline std::vector<ComplexPoint> candidate_points(const SchlichtGrid& g, int stride) {
    std::vector<ComplexPoint> w{0.0};
    for (int j = stride; j < g.rings; j += stride)
        for (int k = 0; k < g.angles; k += stride)
            w.push_back(std::polar(static_cast<double>(j) / g.rings, 2.0 * std::numbers::pi * k / g.angles));
    return w;
}

/// Samples of f and |f'| on the Cartesian grid restricted to the closed disc.
struct ImageGrid {
    int n = 0;
    double step = 0.0;
    std::vector<ComplexPoint> z, fz;
    std::vector<double> dfz;
    std::vector<char> inside;

    ImageGrid(const HolomorphicMap& f, int resolution) : n(resolution), step(2.0 / (resolution - 1)) {
        const auto total = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
        z.resize(total);
        fz.resize(total);
        dfz.resize(total);
        inside.resize(total);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const auto k = index(i, j);
                z[k] = {-1.0 + i * step, -1.0 + j * step};
                inside[k] = std::abs(z[k]) <= 1.0;
                if (inside[k]) {
                    fz[k] = f(z[k]);
                    dfz[k] = std::abs(f.deriv(z[k]));
                }
            }
        }
    }

    std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j); }

    std::size_t nearest(ComplexPoint w) const {
        const int i = std::clamp(static_cast<int>(std::lround((w.real() + 1.0) / step)), 0, n - 1);
        const int j = std::clamp(static_cast<int>(std::lround((w.imag() + 1.0) / step)), 0, n - 1);
        return index(i, j);
    }
};

/// Grid points of the component of f^{-1}(D(c, s)) containing the grid node `start`.
inline std::vector<std::size_t> preimage_component(const ImageGrid& g, std::size_t start, ComplexPoint c, double s) {
    std::vector<std::size_t> comp;
    if (!g.inside[start] || !(std::abs(g.fz[start] - c) < s)) return comp;
    std::vector<char> seen(g.z.size(), 0);
    std::queue<std::size_t> q;
    q.push(start);
    seen[start] = 1;
    while (!q.empty()) {
        const std::size_t k = q.front();
        q.pop();
        comp.push_back(k);
        const int i = static_cast<int>(k / g.n), j = static_cast<int>(k % g.n);
        const int di[4] = {1, -1, 0, 0}, dj[4] = {0, 0, 1, -1};
        for (int e = 0; e < 4; ++e) {
            const int a = i + di[e], b = j + dj[e];
            if (a < 0 || b < 0 || a >= g.n || b >= g.n) continue;
            const std::size_t nb = g.index(a, b);
            if (seen[nb] || !g.inside[nb] || !(std::abs(g.fz[nb] - c) < s)) continue;
            seen[nb] = 1;
            q.push(nb);
        }
    }
    return comp;
}

/// Pairwise test: two grid points whose images are closer than the local
/// image spacing while the points themselves are far apart (relative to
/// the inverse derivative) witness non-injectivity. Image points are
/// bucketed so only nearby images are compared.
inline bool grid_injective(const ImageGrid& g, const std::vector<std::size_t>& comp,
                           const std::vector<ComplexPoint>& critical_points) {
    if (comp.empty()) return false;
    double dmax = 0.0, dmin = std::numeric_limits<double>::infinity();
    for (std::size_t k : comp) {
        dmax = std::max(dmax, g.dfz[k]);
        dmin = std::min(dmin, g.dfz[k]);
    }
    if (!(dmin > 1e-3 * dmax)) return false;
    for (ComplexPoint c : critical_points) {
        if (std::abs(c) > 1.0) continue;
        const std::size_t k = g.nearest(c);
        if (std::find(comp.begin(), comp.end(), k) != comp.end()) return false;
    }
    const double cell = 2.0 * g.step * dmax;
    auto key = [cell](ComplexPoint w) {
        const auto x = static_cast<std::int64_t>(std::floor(w.real() / cell));
        const auto y = static_cast<std::int64_t>(std::floor(w.imag() / cell));
        return std::pair{x, y};
    };
    auto pack = [](std::int64_t x, std::int64_t y) { return static_cast<std::uint64_t>(x) * 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint64_t>(y); };
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
    buckets.reserve(comp.size());
    for (std::size_t k : comp) {
        const auto [x, y] = key(g.fz[k]);
        buckets[pack(x, y)].push_back(k);
    }
    for (std::size_t k : comp) {
        const auto [x, y] = key(g.fz[k]);
        for (std::int64_t dx = -1; dx <= 1; ++dx) {
            for (std::int64_t dy = -1; dy <= 1; ++dy) {
                const auto it = buckets.find(pack(x + dx, y + dy));
                if (it == buckets.end()) continue;
                for (std::size_t l : it->second) {
                    if (l <= k) continue;
                    const double image_gap = std::abs(g.fz[k] - g.fz[l]);
                    const double close = 0.5 * g.step * (g.dfz[k] + g.dfz[l]);
                    if (image_gap > close) continue;
                    const double local = 2.0 * close / std::min(g.dfz[k], g.dfz[l]) + 2.0 * g.step;
                    if (std::abs(g.z[k] - g.z[l]) > local) return false;
                }
            }
        }
    }
    return true;
}

}  // namespace detail

/// max over candidate centers f(w) of the distance from f(w) to the sampled
/// boundary curve f(dD). Approximates L(f) = sup radius of a disc in f(D).
inline double landau_radius_estimate(const HolomorphicMap& f, int boundary_samples = 4096,
                                     const SchlichtGrid& grid = {}) {
    if (boundary_samples < 3) throw DomainError("landau_radius_estimate: need at least 3 boundary samples");
    const auto poly = detail::boundary_polyline(f, boundary_samples);
    double best = 0.0;
    for (ComplexPoint w : detail::candidate_points(grid, 1)) best = std::max(best, detail::polyline_distance(f(w), poly));
    return best;
}

/// Largest s such that, for a candidate w, f maps the component of
/// f^{-1}(D(f(w), s)) containing w injectively (pairwise grid test).
/// Candidates are a subset of the Landau candidates and s never exceeds the
/// boundary distance of f(w), so the result is at most the Landau estimate.
inline double bloch_radius_estimate(const HolomorphicMap& f, const SchlichtGrid& grid = {},
                                    int boundary_samples = 4096) {
    const auto poly = detail::boundary_polyline(f, boundary_samples);
    const detail::ImageGrid img(f, grid.injectivity_resolution);

    struct Candidate {
        ComplexPoint w;
        double s_max;
    };
    std::vector<Candidate> cands;
    for (ComplexPoint w : detail::candidate_points(grid, grid.bloch_stride))
        cands.push_back({w, detail::polyline_distance(f(w), poly)});
    std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) { return a.s_max > b.s_max; });

    double best = 0.0;
    for (const Candidate& c : cands) {
        if (c.s_max <= best) break;
        const ComplexPoint center = f(c.w);
        const std::size_t start = img.nearest(c.w);
        auto ok = [&](double s) {
            return detail::grid_injective(img, detail::preimage_component(img, start, center, s), f.critical_points);
        };
        if (ok(c.s_max)) {
            best = c.s_max;
            continue;
        }
        double lo = best, hi = c.s_max;
        if (!ok(lo > 0.0 ? lo : 0.5 * img.step)) continue;
        for (int it = 0; it < grid.radius_iterations; ++it) {
            const double mid = 0.5 * (lo + hi);
            (ok(mid) ? lo : hi) = mid;
        }
        best = std::max(best, lo);
    }
    return best;
}

/// Bloch metric density A^2 |f'|^2 / (2 s (A^2 - s)^2) with s = schlicht_radius(f(z)).
inline double bloch_metric_density(const HolomorphicMap& f, double A, ComplexPoint z,
                                   const std::function<double(ComplexPoint)>& schlicht_radius) {
    const double s = schlicht_radius(f(z));
    const double A2 = A * A;
    if (!(s > 0.0)) throw ContractError("bloch_metric_density: schlicht radius vanishes at the evaluation point");
    if (s == A2) throw ContractError("bloch_metric_density: schlicht radius equals A^2");
    return A2 * std::norm(f.deriv(z)) / (2.0 * s * (A2 - s) * (A2 - s));
}

/// Same density with the monotonicity window A^2 > 3 B checked against a Bloch estimate.
inline double bloch_metric_density(const HolomorphicMap& f, double A, ComplexPoint z,
                                   const std::function<double(ComplexPoint)>& schlicht_radius, double bloch_estimate) {
    if (!(A * A > 3.0 * bloch_estimate)) throw ContractError("bloch_metric_density: need A^2 > 3 B(f)");
    return bloch_metric_density(f, A, z, schlicht_radius);
}

/// Supporting Bloch density: the schlicht radius of f(z) replaced by
/// |f(z) - b| for a boundary point b of the schlicht disc about f(z0).
inline ConformalMetric bloch_supporting_metric(const HolomorphicMap& f, double A, ComplexPoint b) {
    ConformalMetric m;
    m.name = "bloch-supporting";
    m.domain = f.source;
    m.density = [f, A, b](ComplexPoint z) { return bloch_metric_density(f, A, z, [b](ComplexPoint w) { return std::abs(w - b); }); };
    m.zero_set = f.critical_points;
    return m;
}

/// Bloch metric of f with a caller-supplied schlicht radius function.
inline ConformalMetric bloch_metric(const HolomorphicMap& f, double A,
                                    std::function<double(ComplexPoint)> schlicht_radius) {
    ConformalMetric m;
    m.name = "bloch";
    m.domain = f.source;
    m.density = [f, A, schlicht_radius](ComplexPoint z) { return bloch_metric_density(f, A, z, schlicht_radius); };
    m.zero_set = f.critical_points;
    return m;
}

/// Landau metric density 1 / (2 (s log(C/s))^2) |f'|^2 with s = radius(f(z)), pulled back by f.
inline ConformalMetric landau_metric(const HolomorphicMap& f, double C, std::function<double(ComplexPoint)> radius) {
    ConformalMetric m;
    m.name = "landau";
    m.domain = f.source;
    m.density = [f, C, radius](ComplexPoint z) {
        const double s = radius(f(z));
        if (!(s > 0.0) || !(s < C)) throw ContractError("landau_metric: radius outside (0, C)");
        const double q = s * std::log(C / s);
        return std::norm(f.deriv(z)) / (2.0 * q * q);
    };
    m.zero_set = f.critical_points;
    return m;
}

/// Supporting Landau density: radius(f(z)) replaced by |f(z) - b| for a
/// boundary point b of f(D) nearest to f(z0).
inline ConformalMetric landau_supporting_metric(const HolomorphicMap& f, double C, ComplexPoint b) {
    auto m = landau_metric(f, C, [b](ComplexPoint w) { return std::abs(w - b); });
    m.name = "landau-supporting";
    return m;
}

}  // namespace hyp
