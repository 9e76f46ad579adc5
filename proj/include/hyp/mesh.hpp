#pragma once

// Grid graphs whose edge weights are metric lengths of straight segments.
// Shortest paths on them give upper estimates of the induced distance
// d(p, q) = inf L(gamma).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <thread>
#include <utility>
#include <vector>

#include "hyp/complex_core.hpp"
#include "hyp/domain.hpp"
#include "hyp/errors.hpp"
#include "hyp/metrics.hpp"
#include "hyp/quadrature.hpp"

namespace hyp {

struct MeshOptions {
    /// Neighbours are the primitive lattice vectors (a, b) with max(|a|, |b|) <= reach.
    /// reach = 1 is the 8-neighbour grid.
    int reach = 4;
    /// Nodes closer than exclusion * resolution to the boundary are dropped.
    double exclusion = 2.0;
    double relative_tol = 1e-7;
    /// Off-grid points are joined to every node within this Euclidean
    /// distance (at least the stencil reach), so a finer mesh on the same box
    /// contains every path of a coarser one.
    double attach_radius = 0.25;
    unsigned threads = 0;
};

struct MetricMesh {
    Box box;
    double resolution = 0.0;
    int nx = 0, ny = 0;
    MeshOptions options;
    std::vector<ComplexPoint> nodes;
    /// Grid slot (ix * ny + iy) -> node index or -1.
    std::vector<std::int32_t> slot;
    /// CSR adjacency, both directions stored.
    std::vector<std::int64_t> offsets;
    std::vector<std::int32_t> targets;
    std::vector<double> weights;

    std::size_t edge_count() const { return targets.size() / 2; }
};

namespace detail {

/// Half of the primitive stencil vectors (the other half are their negatives).
inline std::vector<std::pair<int, int>> half_stencil(int reach) {
    std::vector<std::pair<int, int>> out;
    for (int a = -reach; a <= reach; ++a) {
        for (int b = 0; b <= reach; ++b) {
            if (b == 0 && a <= 0) continue;
            if (std::gcd(std::abs(a), b) != 1) continue;
            out.emplace_back(a, b);
        }
    }
    return out;
}

/// Metric length of the straight segment [a, b]; +inf when the segment is
/// not certified to stay inside the domain. fa and fb, when given, are the
/// line elements sqrt(2 lambda) at the endpoints.
inline double segment_length(const ConformalMetric& m, const DomainDescriptor& domain, ComplexPoint a,
                             ComplexPoint b, double relative_tol, double fa = -1.0, double fb = -1.0) {
    const double len = std::abs(b - a);
    if (len == 0.0) return 0.0;
    // boundary_distance is 1-Lipschitz, so this certifies the whole segment.
    if (!(domain.boundary_distance(0.5 * (a + b)) > 0.5 * len)) return std::numeric_limits<double>::infinity();
    const std::function<double(double)> f = [&](double t) { return std::sqrt(2.0 * m.density(a + t * (b - a))); };
    if (fa < 0.0) fa = f(0.0);
    if (fb < 0.0) fb = f(1.0);
    // Simpson on one and on two panels; accept the extrapolated value when they agree.
    const double fq1 = f(0.25), fm = f(0.5), fq3 = f(0.75);
    const double one = (fa + 4.0 * fm + fb) / 6.0;
    const double two = (fa + 4.0 * fq1 + 2.0 * fm + 4.0 * fq3 + fb) / 12.0;
    if (std::isfinite(two) && std::abs(two - one) <= 15.0 * relative_tol * two) return (two + (two - one) / 15.0) * len;
    const auto q = adaptive_simpson(f, 0.0, 1.0, relative_tol * std::max(fm, 1e-300), 25);
    return q.value * len;
}

}  // namespace detail

/// Grid over `box` clipped to the domain, with metric-weighted edges.
/// Edge weights are computed in parallel and stored by edge index, so the
/// result does not depend on thread scheduling.
inline MetricMesh build_mesh(const ConformalMetric& m, const DomainDescriptor& domain, const Box& box,
                             double resolution, MeshOptions options = {}) {
    if (!(resolution > 0.0)) throw DomainError("build_mesh: resolution must be positive");
    MetricMesh mesh;
    mesh.box = box;
    mesh.resolution = resolution;
    mesh.options = options;
    mesh.nx = static_cast<int>(std::floor((box.x_max - box.x_min) / resolution + 1e-9)) + 1;
    mesh.ny = static_cast<int>(std::floor((box.y_max - box.y_min) / resolution + 1e-9)) + 1;
    mesh.slot.assign(static_cast<std::size_t>(mesh.nx) * mesh.ny, -1);
    const double keep = options.exclusion * resolution;
    for (int ix = 0; ix < mesh.nx; ++ix) {
        for (int iy = 0; iy < mesh.ny; ++iy) {
            const ComplexPoint z{box.x_min + ix * resolution, box.y_min + iy * resolution};
            if (!domain.contains(z) || !(domain.boundary_distance(z) >= keep)) continue;
            mesh.slot[static_cast<std::size_t>(ix) * mesh.ny + iy] = static_cast<std::int32_t>(mesh.nodes.size());
            mesh.nodes.push_back(z);
        }
    }

    // Undirected candidate edges in deterministic order.
    const auto stencil = detail::half_stencil(options.reach);
    std::vector<std::pair<std::int32_t, std::int32_t>> edges;
    for (int ix = 0; ix < mesh.nx; ++ix) {
        for (int iy = 0; iy < mesh.ny; ++iy) {
            const std::int32_t u = mesh.slot[static_cast<std::size_t>(ix) * mesh.ny + iy];
            if (u < 0) continue;
            for (auto [a, b] : stencil) {
                const int jx = ix + a, jy = iy + b;
                if (jx < 0 || jx >= mesh.nx || jy < 0 || jy >= mesh.ny) continue;
                const std::int32_t v = mesh.slot[static_cast<std::size_t>(jx) * mesh.ny + jy];
                if (v >= 0) edges.emplace_back(u, v);
            }
        }
    }

    std::vector<double> speed(mesh.nodes.size());
    for (std::size_t v = 0; v < mesh.nodes.size(); ++v) speed[v] = std::sqrt(2.0 * m.density(mesh.nodes[v]));

    std::vector<double> w(edges.size());
    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, edges.size() / 4096)));
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t e = begin; e < end; ++e)
            w[e] = detail::segment_length(m, domain, mesh.nodes[edges[e].first], mesh.nodes[edges[e].second],
                                          options.relative_tol, speed[static_cast<std::size_t>(edges[e].first)],
                                          speed[static_cast<std::size_t>(edges[e].second)]);
    };
    if (threads <= 1) {
        work(0, edges.size());
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (edges.size() + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::size_t begin = t * chunk, end = std::min(edges.size(), begin + chunk);
            if (begin < end) pool.emplace_back(work, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    std::vector<std::int64_t> degree(mesh.nodes.size() + 1, 0);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (!std::isfinite(w[e])) continue;
        ++degree[static_cast<std::size_t>(edges[e].first) + 1];
        ++degree[static_cast<std::size_t>(edges[e].second) + 1];
    }
    std::partial_sum(degree.begin(), degree.end(), degree.begin());
    mesh.offsets = degree;
    mesh.targets.resize(static_cast<std::size_t>(mesh.offsets.back()));
    mesh.weights.resize(mesh.targets.size());
    std::vector<std::int64_t> fill(mesh.offsets.begin(), mesh.offsets.end() - 1);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (!std::isfinite(w[e])) continue;
        auto [u, v] = edges[e];
        mesh.targets[static_cast<std::size_t>(fill[u])] = v;
        mesh.weights[static_cast<std::size_t>(fill[u]++)] = w[e];
        mesh.targets[static_cast<std::size_t>(fill[v])] = u;
        mesh.weights[static_cast<std::size_t>(fill[v]++)] = w[e];
    }
    return mesh;
}

namespace detail {

/// Mesh nodes joined to an off-grid point by certified straight segments.
inline double attach_radius(const MetricMesh& mesh) {
    return std::max(mesh.options.attach_radius, mesh.options.reach * mesh.resolution * std::sqrt(2.0));
}

inline std::vector<std::pair<std::int32_t, double>> attach(const MetricMesh& mesh, const ConformalMetric& m,
                                                           const DomainDescriptor& domain, ComplexPoint p) {
    std::vector<std::pair<std::int32_t, double>> out;
    const double h = mesh.resolution;
    const double R = attach_radius(mesh);
    const int x0 = std::max(0, static_cast<int>(std::floor((p.real() - R - mesh.box.x_min) / h)));
    const int x1 = std::min(mesh.nx - 1, static_cast<int>(std::ceil((p.real() + R - mesh.box.x_min) / h)));
    const int y0 = std::max(0, static_cast<int>(std::floor((p.imag() - R - mesh.box.y_min) / h)));
    const int y1 = std::min(mesh.ny - 1, static_cast<int>(std::ceil((p.imag() + R - mesh.box.y_min) / h)));
    for (int ix = x0; ix <= x1; ++ix) {
        for (int iy = y0; iy <= y1; ++iy) {
            const std::int32_t v = mesh.slot[static_cast<std::size_t>(ix) * mesh.ny + iy];
            if (v < 0) continue;
            const ComplexPoint node = mesh.nodes[static_cast<std::size_t>(v)];
            if (std::abs(node - p) > R) continue;
            const double w = segment_length(m, domain, p, node, mesh.options.relative_tol);
            if (std::isfinite(w)) out.emplace_back(v, w);
        }
    }
    return out;
}

/// Dijkstra from seeded nodes; stops once the frontier exceeds `cutoff`.
inline std::vector<double> dijkstra(const MetricMesh& mesh, const std::vector<std::pair<std::int32_t, double>>& seeds,
                                    double cutoff) {
    std::vector<double> dist(mesh.nodes.size(), std::numeric_limits<double>::infinity());
    using Item = std::pair<double, std::int32_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    for (auto [v, w] : seeds) {
        if (w < dist[static_cast<std::size_t>(v)]) {
            dist[static_cast<std::size_t>(v)] = w;
            heap.emplace(w, v);
        }
    }
    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (d > dist[static_cast<std::size_t>(u)]) continue;
        if (d > cutoff) break;
        for (std::int64_t e = mesh.offsets[static_cast<std::size_t>(u)];
             e < mesh.offsets[static_cast<std::size_t>(u) + 1]; ++e) {
            const std::int32_t v = mesh.targets[static_cast<std::size_t>(e)];
            const double nd = d + mesh.weights[static_cast<std::size_t>(e)];
            if (nd < dist[static_cast<std::size_t>(v)]) {
                dist[static_cast<std::size_t>(v)] = nd;
                heap.emplace(nd, v);
            }
        }
    }
    return dist;
}

}  // namespace detail

/// Shortest mesh path between two off-grid points of the domain.
inline double mesh_path_distance(const MetricMesh& mesh, const ConformalMetric& m, const DomainDescriptor& domain,
                                 ComplexPoint p, ComplexPoint q) {
    if (!domain.contains(p) || !domain.contains(q)) throw DomainError("mesh_distance: point outside the domain");
    if (p == q) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    if (std::abs(p - q) <= detail::attach_radius(mesh))
        best = detail::segment_length(m, domain, p, q, mesh.options.relative_tol);
    const auto from_p = detail::attach(mesh, m, domain, p);
    const auto to_q = detail::attach(mesh, m, domain, q);
    if (!from_p.empty() && !to_q.empty()) {
        const auto dist = detail::dijkstra(mesh, from_p, best);
        for (auto [v, w] : to_q) best = std::min(best, dist[static_cast<std::size_t>(v)] + w);
    }
    if (!std::isfinite(best)) throw UnreachableError("mesh_distance: points lie in different mesh components");
    return best;
}

/// Box used when a domain carries no bounds of its own.
inline Box default_mesh_box(const DomainDescriptor& domain, ComplexPoint p, ComplexPoint q) {
    if (domain.bounds) return *domain.bounds;
    const ComplexPoint c = 0.5 * (p + q);
    const double half = std::max(1.0, 1.5 * std::abs(p - q));
    return Box::around(c, half);
}

/// Mesh approximation of the induced distance between p and q.
inline double mesh_distance(const ConformalMetric& m, const DomainDescriptor& domain, ComplexPoint p, ComplexPoint q,
                            double resolution, MeshOptions options = {}) {
    if (!domain.contains(p) || !domain.contains(q)) throw DomainError("mesh_distance: point outside the domain");
    if (p == q) return 0.0;
    const MetricMesh mesh = build_mesh(m, domain, default_mesh_box(domain, p, q), resolution, options);
    return mesh_path_distance(mesh, m, domain, p, q);
}

/// Largest Euclidean offset |z - c| over mesh nodes within metric distance
/// `radius` of c, for each center c. One mesh is shared by all centers: it
/// covers the bounding box of the centers plus a pad, and the pad doubles
/// until no ball reaches an edge of the box that is not a domain bound.
inline std::vector<double> ball_extents(const ConformalMetric& m, const DomainDescriptor& domain,
                                        const std::vector<ComplexPoint>& centers, double radius, double resolution,
                                        MeshOptions options = {}) {
    if (!(radius >= 0.0)) throw DomainError("ball_extent: radius must be nonnegative");
    for (ComplexPoint c : centers)
        if (!domain.contains(c)) throw DomainError("ball_extent: center outside the domain");
    std::vector<double> out(centers.size(), 0.0);
    if (radius == 0.0 || centers.empty()) return out;
    Box hull{centers[0].real(), centers[0].real(), centers[0].imag(), centers[0].imag()};
    for (ComplexPoint c : centers) {
        hull.x_min = std::min(hull.x_min, c.real());
        hull.x_max = std::max(hull.x_max, c.real());
        hull.y_min = std::min(hull.y_min, c.imag());
        hull.y_max = std::max(hull.y_max, c.imag());
    }
    double pad = std::max(0.5, 4.0 * options.reach * resolution);
    for (int attempt = 0; attempt < 16; ++attempt, pad *= 2.0) {
        Box box{hull.x_min - pad, hull.x_max + pad, hull.y_min - pad, hull.y_max + pad};
        bool clipped[4] = {false, false, false, false};
        if (domain.bounds) {
            const Box& b = *domain.bounds;
            if (b.x_min >= box.x_min) { box.x_min = b.x_min; clipped[0] = true; }
            if (b.x_max <= box.x_max) { box.x_max = b.x_max; clipped[1] = true; }
            if (b.y_min >= box.y_min) { box.y_min = b.y_min; clipped[2] = true; }
            if (b.y_max <= box.y_max) { box.y_max = b.y_max; clipped[3] = true; }
        }
        const MetricMesh mesh = build_mesh(m, domain, box, resolution, options);
        const double margin = (options.reach + 1) * resolution;
        bool touches = false;
        for (std::size_t i = 0; i < centers.size() && !touches; ++i) {
            const auto seeds = detail::attach(mesh, m, domain, centers[i]);
            if (seeds.empty()) throw UnreachableError("ball_extent: center is not connected to the mesh");
            const auto dist = detail::dijkstra(mesh, seeds, radius);
            double extent = 0.0;
            for (std::size_t v = 0; v < mesh.nodes.size(); ++v) {
                if (!(dist[v] <= radius)) continue;
                const ComplexPoint z = mesh.nodes[v];
                extent = std::max(extent, std::abs(z - centers[i]));
                touches = touches || (!clipped[0] && z.real() - box.x_min < margin) ||
                          (!clipped[1] && box.x_max - z.real() < margin) ||
                          (!clipped[2] && z.imag() - box.y_min < margin) ||
                          (!clipped[3] && box.y_max - z.imag() < margin);
            }
            out[i] = extent;
        }
        if (!touches) return out;
    }
    throw UnreachableError("ball_extent: ball did not fit in the largest mesh box");
}

inline double ball_extent(const ConformalMetric& m, const DomainDescriptor& domain, ComplexPoint center,
                          double radius, double resolution, MeshOptions options = {}) {
    return ball_extents(m, domain, {center}, radius, resolution, options)[0];
}

}  // namespace hyp
