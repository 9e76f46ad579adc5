#pragma once

// Upper bounds for the Kobayashi pseudodistance from chains of holomorphic
// discs on a small catalog of one- and two-dimensional domains.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyp/complex_core.hpp"
#include "hyp/errors.hpp"
#include "hyp/paths.hpp"
#include "hyp/report.hpp"
#include "hyp/sampling.hpp"

namespace hyp {

/// A point of C or C^2; one-dimensional domains leave the second coordinate at 0.
using KPoint = std::array<ComplexPoint, 2>;

inline double kdistance(const KPoint& a, const KPoint& b) { return std::max(std::abs(a[0] - b[0]), std::abs(a[1] - b[1])); }

/// One holomorphic disc f: D -> M with f(0) = start and f(a) = end.
struct DiscLink {
    std::string family;
    std::function<KPoint(ComplexPoint)> map;
    ComplexPoint a{};
};

struct DiscChain {
    std::vector<DiscLink> links;
    /// p_0, ..., p_k.
    std::vector<KPoint> endpoints;
};

/// sum_n rho(0, a_n). Throws ContractError when a link misses its endpoints by more than 1e-10.
inline double chain_value(const DiscChain& c) {
    if (c.endpoints.size() != c.links.size() + 1) throw ContractError("chain_value: need one more endpoint than links");
    double total = 0.0;
    for (std::size_t n = 0; n < c.links.size(); ++n) {
        const DiscLink& l = c.links[n];
        if (!(std::abs(l.a) < 1.0)) throw ContractError("chain_value: link parameter outside the disc");
        const KPoint& from = c.endpoints[n];
        const KPoint& to = c.endpoints[n + 1];
        const double tol0 = 1e-10 * std::max(1.0, std::max(std::abs(from[0]), std::abs(from[1])));
        const double tol1 = 1e-10 * std::max(1.0, std::max(std::abs(to[0]), std::abs(to[1])));
        if (kdistance(l.map(0.0), from) > tol0 || kdistance(l.map(l.a), to) > tol1)
            throw ContractError("chain_value: broken link " + std::to_string(n + 1));
        total += 2.0 * artanh(std::abs(l.a));
    }
    return total;
}

/// Pushes every link of a chain through a holomorphic map M -> N.
inline DiscChain push_forward(const DiscChain& c, const std::function<KPoint(const KPoint&)>& f) {
    DiscChain out;
    for (const DiscLink& l : c.links)
        out.links.push_back({l.family, [m = l.map, f](ComplexPoint z) { return f(m(z)); }, l.a});
    for (const KPoint& p : c.endpoints) out.endpoints.push_back(f(p));
    return out;
}

/// A parametrized family of discs: link(from, to, params, build) returns a
/// disc through both points, or nothing if the family has no such member.
/// Parameters live in [0, 1]. With build == false only `a` is filled in.
struct DiscFamily {
    std::string name;
    int param_count = 0;
    std::function<std::optional<DiscLink>(const KPoint&, const KPoint&, std::span<const double>, bool)> link;
};

struct CatalogDomain {
    std::string name;
    int dimension = 1;
    std::function<bool(const KPoint&)> membership;
    std::vector<DiscFamily> families;
    /// Bounding box of the first coordinate used to seed intermediate points.
    double seed_radius = 1.0;
    bool bounded = true;
};

struct KobayashiConfig {
    int max_links = 4;
    int multi_starts = 16;
    int max_sweeps = 200;
    /// Smallest link parameter the plane families may use.
    double epsilon_floor = 1e-12;
    std::int64_t max_evaluations = 5'000'000;
    std::uint64_t seed = 1;
};

namespace detail {

inline double rho0(ComplexPoint a) { return 2.0 * artanh(std::abs(a)); }

/// eps in [floor, 1/2], log-spaced in the parameter.
inline double epsilon_from(double u, double floor) { return 0.5 * std::pow(2.0 * floor, std::clamp(u, 0.0, 1.0)); }

inline bool in_disc(const KPoint& p, int dim) {
    return std::abs(p[0]) < 1.0 && (dim < 2 || std::abs(p[1]) < 1.0);
}

/// z -> phi_{-p}(z w / a) for w = phi_p(q) with |w| <= |a|.
inline std::function<ComplexPoint(ComplexPoint)> disc_through(ComplexPoint p, ComplexPoint q, ComplexPoint a) {
    const ComplexPoint w = mobius(p, q);
    return [p, w, a](ComplexPoint z) { return mobius(-p, w * z / a); };
}

/// Disc families of the bidisc: both coordinates follow automorphic discs
/// with a common parameter a = m + t (1 - m), m = max_j |phi_{p_j}(q_j)|.
inline std::optional<DiscLink> bidisc_diagonal(const KPoint& p, const KPoint& q, double t, bool avoid_origin,
                                               bool build = true) {
    if (!in_disc(p, 2) || !in_disc(q, 2)) return std::nullopt;
    const ComplexPoint w0 = mobius(p[0], q[0]), w1 = mobius(p[1], q[1]);
    const double m = std::max(std::abs(w0), std::abs(w1));
    const double a = m + std::clamp(t, 0.0, 0.999) * (1.0 - m);
    if (!(a < 1.0)) return std::nullopt;
    if (a == 0.0) {
        return DiscLink{"diagonal", [p](ComplexPoint) { return p; }, 0.0};
    }
    if (avoid_origin) {
        // Coordinate j vanishes at z with w_j z / a = -p_j.
        auto zero = [a](ComplexPoint pj, ComplexPoint wj) -> std::optional<ComplexPoint> {
            if (wj == 0.0) {
                if (pj == 0.0) return ComplexPoint{std::numeric_limits<double>::quiet_NaN(), 0.0};  // identically 0
                return std::nullopt;
            }
            const ComplexPoint z = -pj * a / wj;
            if (!(std::abs(z) < 1.0)) return std::nullopt;
            return z;
        };
        const auto z0 = zero(p[0], w0), z1 = zero(p[1], w1);
        if (z0 && z1) {
            const bool any0 = std::isnan(z0->real()), any1 = std::isnan(z1->real());
            if (any0 || any1 || std::abs(*z0 - *z1) < 1e-14) return std::nullopt;
        }
    }
    if (!build) return DiscLink{"diagonal", {}, a};
    auto f0 = disc_through(p[0], q[0], a), f1 = disc_through(p[1], q[1], a);
    return DiscLink{"diagonal", [f0, f1](ComplexPoint z) { return KPoint{f0(z), f1(z)}; }, a};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Catalog

/// D with automorphic discs z -> phi_{-p}(z w / a), a = |w| + t (1 - |w|).
inline CatalogDomain kobayashi_disc() {
    CatalogDomain d;
    d.name = "disc";
    d.membership = [](const KPoint& p) { return std::abs(p[0]) < 1.0; };
    d.families.push_back({"automorphism", 1, [](const KPoint& p, const KPoint& q, std::span<const double> x, bool build)
                                                  -> std::optional<DiscLink> {
                              if (!(std::abs(p[0]) < 1.0) || !(std::abs(q[0]) < 1.0)) return std::nullopt;
                              const double m = std::abs(mobius(p[0], q[0]));
                              const double a = m + std::clamp(x[0], 0.0, 0.999) * (1.0 - m);
                              if (a == 0.0) return DiscLink{"automorphism", [p](ComplexPoint) { return p; }, 0.0};
                              if (!build) return DiscLink{"automorphism", {}, a};
                              auto f = detail::disc_through(p[0], q[0], a);
                              return DiscLink{"automorphism", [f](ComplexPoint z) { return KPoint{f(z), 0.0}; }, a};
                          }});
    return d;
}

/// C with affine discs z -> p + (q - p) z / eps, a = eps.
inline CatalogDomain kobayashi_plane(double epsilon_floor = 1e-12) {
    CatalogDomain d;
    d.name = "plane";
    d.bounded = false;
    d.membership = [](const KPoint& p) { return is_finite(p[0]); };
    d.families.push_back({"affine", 1, [epsilon_floor](const KPoint& p, const KPoint& q, std::span<const double> x, bool build)
                                           -> std::optional<DiscLink> {
                              if (p[0] == q[0]) return DiscLink{"affine", [p](ComplexPoint) { return p; }, 0.0};
                              const double eps = detail::epsilon_from(x[0], epsilon_floor);
                              if (!build) return DiscLink{"affine", {}, eps};
                              const ComplexPoint s = (q[0] - p[0]) / eps;
                              return DiscLink{"affine", [p, s](ComplexPoint z) { return KPoint{p[0] + s * z, 0.0}; }, eps};
                          }});
    return d;
}

/// C \ {0} with discs z -> exp(log p + (log q - log p) z / eps), a = eps.
inline CatalogDomain kobayashi_punctured_plane(double epsilon_floor = 1e-12) {
    CatalogDomain d;
    d.name = "punctured-plane";
    d.bounded = false;
    d.membership = [](const KPoint& p) { return is_finite(p[0]) && p[0] != 0.0; };
    d.families.push_back({"exp-affine", 1, [epsilon_floor](const KPoint& p, const KPoint& q, std::span<const double> x, bool build)
                                               -> std::optional<DiscLink> {
                              if (p[0] == 0.0 || q[0] == 0.0) return std::nullopt;
                              if (p[0] == q[0]) return DiscLink{"exp-affine", [p](ComplexPoint) { return p; }, 0.0};
                              const double eps = detail::epsilon_from(x[0], epsilon_floor);
                              if (!build) return DiscLink{"exp-affine", {}, eps};
                              const ComplexPoint lp = std::log(p[0]);
                              const ComplexPoint s = (std::log(q[0]) - lp) / eps;
                              const ComplexPoint p0 = p[0], q0 = q[0];
                              return DiscLink{"exp-affine",
                                              [lp, s, p0, q0, eps](ComplexPoint z) {
                                                  // Pin the endpoints exactly; exp(log w) may differ from w by an ulp.
                                                  if (z == 0.0) return KPoint{p0, 0.0};
                                                  if (z == ComplexPoint{eps, 0.0}) return KPoint{q0, 0.0};
                                                  return KPoint{std::exp(lp + s * z), 0.0};
                                              },
                                              eps};
                          }});
    return d;
}

/// D x D with diagonal discs; the value of one link is max(rho(p1, q1), rho(p2, q2)).
inline CatalogDomain kobayashi_bidisc() {
    CatalogDomain d;
    d.name = "bidisc";
    d.dimension = 2;
    d.membership = [](const KPoint& p) { return detail::in_disc(p, 2); };
    d.families.push_back({"diagonal", 1, [](const KPoint& p, const KPoint& q, std::span<const double> x, bool build) {
                              return detail::bidisc_diagonal(p, q, x[0], false, build);
                          }});
    return d;
}

/// D^2 \ {(0, 0)} with horizontal discs z -> (phi(z), c), c != 0 (the D x D^* family),
/// vertical discs z -> (c, phi(z)), c != 0 (the D^* x D family), and diagonal
/// discs that miss the origin.
inline CatalogDomain kobayashi_punctured_bidisc() {
    CatalogDomain d;
    d.name = "punctured-bidisc";
    d.dimension = 2;
    d.membership = [](const KPoint& p) { return detail::in_disc(p, 2) && !(p[0] == 0.0 && p[1] == 0.0); };
    auto slice = [](int moving) {
        return [moving](const KPoint& p, const KPoint& q, std::span<const double> x, bool build) -> std::optional<DiscLink> {
            const int fixed = 1 - moving;
            if (!detail::in_disc(p, 2) || !detail::in_disc(q, 2)) return std::nullopt;
            if (p[fixed] != q[fixed] || p[fixed] == 0.0) return std::nullopt;
            const double m = std::abs(mobius(p[moving], q[moving]));
            const double a = m + std::clamp(x[0], 0.0, 0.999) * (1.0 - m);
            const std::string name = moving == 0 ? "horizontal" : "vertical";
            if (a == 0.0) return DiscLink{name, [p](ComplexPoint) { return p; }, 0.0};
            if (!build) return DiscLink{name, {}, a};
            auto f = detail::disc_through(p[moving], q[moving], a);
            const ComplexPoint c = p[fixed];
            return DiscLink{name,
                            [f, c, moving](ComplexPoint z) {
                                KPoint out;
                                out[moving] = f(z);
                                out[1 - moving] = c;
                                return out;
                            },
                            a};
        };
    };
    d.families.push_back({"horizontal", 1, slice(0)});
    d.families.push_back({"vertical", 1, slice(1)});
    d.families.push_back({"diagonal", 1, [](const KPoint& p, const KPoint& q, std::span<const double> x, bool build) {
                              return detail::bidisc_diagonal(p, q, x[0], true, build);
                          }});
    return d;
}

inline CatalogDomain catalog_domain(const std::string& name, double epsilon_floor = 1e-12) {
    if (name == "disc") return kobayashi_disc();
    if (name == "plane") return kobayashi_plane(epsilon_floor);
    if (name == "punctured-plane") return kobayashi_punctured_plane(epsilon_floor);
    if (name == "bidisc") return kobayashi_bidisc();
    if (name == "punctured-bidisc") return kobayashi_punctured_bidisc();
    throw ContractError("unknown catalog domain '" + name + "'");
}

/// Samples 64 points near the boundary circle |z| = 0.999 for every family
/// member joining the given points; true if all images are members.
inline bool family_maps_into(const CatalogDomain& d, const DiscFamily& fam, const KPoint& p, const KPoint& q,
                             std::span<const double> params) {
    const auto link = fam.link(p, q, params, true);
    if (!link) return true;
    for (int k = 0; k < 64; ++k)
        if (!d.membership(link->map(std::polar(0.999, 2.0 * std::numbers::pi * k / 64)))) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Search

struct KobayashiResult {
    double value = std::numeric_limits<double>::infinity();
    DiscChain witness;
};

namespace detail {

/// Chain with k links: free intermediate points, per-link family parameters.
class ChainProblem {
public:
    ChainProblem(const CatalogDomain& d, KPoint p, KPoint q, int links)
        : d_(d), p_(p), q_(q), links_(links) {
        for (const auto& f : d.families) params_per_link_ += f.param_count;
    }

    int point_vars() const { return 2 * d_.dimension * (links_ - 1); }
    int size() const { return point_vars() + links_ * params_per_link_; }

    KPoint point(std::span<const double> x, int n) const {
        if (n == 0) return p_;
        if (n == links_) return q_;
        KPoint out{0.0, 0.0};
        const std::size_t base = static_cast<std::size_t>(2 * d_.dimension * (n - 1));
        for (int j = 0; j < d_.dimension; ++j) out[j] = {x[base + 2 * j], x[base + 2 * j + 1]};
        return out;
    }

    /// Best link per position, or nothing if some link is infeasible.
    std::optional<std::pair<double, DiscChain>> evaluate(std::span<const double> x, bool build) const {
        double total = 0.0;
        DiscChain chain;
        for (int n = 0; n <= links_; ++n) {
            const KPoint pt = point(x, n);
            if (!d_.membership(pt)) return std::nullopt;
            if (build) chain.endpoints.push_back(pt);
        }
        for (int n = 0; n < links_; ++n) {
            std::size_t off = static_cast<std::size_t>(point_vars() + n * params_per_link_);
            std::optional<DiscLink> best;
            double best_value = std::numeric_limits<double>::infinity();
            for (const auto& fam : d_.families) {
                auto link = fam.link(point(x, n), point(x, n + 1), x.subspan(off, static_cast<std::size_t>(fam.param_count)), build);
                off += static_cast<std::size_t>(fam.param_count);
                if (!link || !(std::abs(link->a) < 1.0)) continue;
                const double v = rho0(link->a);
                if (v < best_value) {
                    best_value = v;
                    best = std::move(link);
                }
            }
            if (!best) return std::nullopt;
            total += best_value;
            if (build) chain.links.push_back(std::move(*best));
        }
        return std::pair{total, std::move(chain)};
    }

    bool is_param(int i) const { return i >= point_vars(); }

private:
    const CatalogDomain& d_;
    KPoint p_, q_;
    int links_;
    int params_per_link_ = 0;
};

}  // namespace detail

/// Minimized chain value over the domain's disc families with 1..max_links
/// links. Coordinate descent from the straight-line start, the coordinate
/// corners (two-dimensional domains) and quasi-random multi-starts; the
/// reduction over starts is by index order. The value is an upper bound.
inline KobayashiResult kobayashi_upper_bound(const CatalogDomain& d, const KPoint& p, const KPoint& q,
                                             const KobayashiConfig& config = {}) {
    if (!d.membership(p) || !d.membership(q)) throw DomainError("kobayashi_upper_bound: point outside " + d.name);
    KobayashiResult best;
    if (kdistance(p, q) == 0.0) {
        best.value = 0.0;
        best.witness.endpoints = {p};
        return best;
    }
    std::int64_t evaluations = 0;
    const double span = std::max(kdistance(p, q), 1e-3);

    for (int k = 1; k <= config.max_links; ++k) {
        const detail::ChainProblem prob(d, p, q, k);
        const int n = prob.size();

        std::vector<std::vector<double>> starts;
        auto base_start = [&](const std::vector<KPoint>& mids) {
            std::vector<double> x(static_cast<std::size_t>(n), 0.0);
            for (int m = 1; m < k; ++m)
                for (int j = 0; j < d.dimension; ++j) {
                    const std::size_t b = static_cast<std::size_t>(2 * d.dimension * (m - 1) + 2 * j);
                    x[b] = mids[static_cast<std::size_t>(m - 1)][j].real();
                    x[b + 1] = mids[static_cast<std::size_t>(m - 1)][j].imag();
                }
            for (int i = prob.point_vars(); i < n; ++i) x[static_cast<std::size_t>(i)] = 0.0;
            return x;
        };
        std::vector<KPoint> line;
        for (int m = 1; m < k; ++m) {
            const double t = static_cast<double>(m) / k;
            line.push_back({p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])});
        }
        starts.push_back(base_start(line));
        if (d.dimension == 2 && k >= 2) {
            for (const KPoint corner : {KPoint{q[0], p[1]}, KPoint{p[0], q[1]}}) {
                std::vector<KPoint> mids(static_cast<std::size_t>(k - 1), corner);
                starts.push_back(base_start(mids));
            }
        }
        const DiscSampler s0(config.seed, 1.0, 0), s1(config.seed, 1.0, 1);
        for (int s = 0; s < config.multi_starts && k >= 2; ++s) {
            std::vector<KPoint> mids;
            for (int m = 1; m < k; ++m) {
                const auto idx = static_cast<std::uint64_t>(s * 8 + m);
                KPoint pt{0.0, 0.0};
                for (int j = 0; j < d.dimension; ++j) {
                    const ComplexPoint u = (j == 0 ? s0 : s1)(idx);
                    pt[j] = d.bounded ? 0.98 * u : line.empty() ? u : line[static_cast<std::size_t>(m - 1)][j] + span * u;
                }
                mids.push_back(pt);
            }
            starts.push_back(base_start(mids));
        }

        for (auto& x : starts) {
            auto eval = [&](const std::vector<double>& v) {
                ++evaluations;
                const auto r = prob.evaluate(v, false);
                return r ? r->first : std::numeric_limits<double>::infinity();
            };
            double fx = eval(x);
            double step = 0.25;
            for (int sweep = 0; sweep < config.max_sweeps && step > 1e-10; ++sweep) {
                bool improved = false;
                for (int i = 0; i < n; ++i) {
                    const double h = prob.is_param(i) ? step : step * (d.bounded ? 1.0 : span);
                    for (double dir : {1.0, -1.0}) {
                        double& xi = x[static_cast<std::size_t>(i)];
                        const double old = xi;
                        xi += dir * h;
                        if (prob.is_param(i)) xi = std::clamp(xi, 0.0, 1.0);
                        const double fy = xi == old ? fx : eval(x);
                        if (fy < fx) {
                            fx = fy;
                            improved = true;
                            break;
                        }
                        xi = old;
                    }
                }
                if (!improved) step *= 0.5;
                if (evaluations > config.max_evaluations) break;
            }
            if (fx < best.value) {
                auto r = prob.evaluate(x, true);
                best.value = r->first;
                best.witness = std::move(r->second);
            }
            if (evaluations > config.max_evaluations) break;
        }
        if (evaluations > config.max_evaluations) break;
    }
    if (!std::isfinite(best.value))
        throw BudgetError("kobayashi_upper_bound: no feasible chain within budget", best.value);
    return best;
}

// ---------------------------------------------------------------------------
// The punctured bidisc example

/// alpha_n = tanh(2^{-n-1}), so rho(0, alpha_n) = 2^{-n}.
inline double bidisc_alpha(int n) { return std::tanh(std::ldexp(1.0, -n - 1)); }

namespace detail {

inline DiscLink slice_link(const KPoint& from, const KPoint& to, int moving) {
    auto fam = kobayashi_punctured_bidisc().families[static_cast<std::size_t>(moving)];
    const double zero[1] = {0.0};
    auto l = fam.link(from, to, zero, true);
    if (!l) throw ContractError("slice_link: points do not share the fixed coordinate");
    return *l;
}

}  // namespace detail

struct BidiscBound {
    double value = 0.0;
    std::vector<DiscChain> chains;
};

/// Two-link chain from a_n = (0, alpha_n) to b_n = (alpha_n, 0) through
/// (alpha_n, alpha_n): a horizontal disc then a vertical disc. Value 2^{1-n}.
inline BidiscBound punctured_bidisc_bound(int n) {
    if (n < 1) throw DomainError("punctured_bidisc_bound: n must be positive");
    const double al = bidisc_alpha(n);
    const KPoint a{0.0, al}, c{al, al}, b{al, 0.0};
    DiscChain chain;
    chain.endpoints = {a, c, b};
    chain.links = {detail::slice_link(a, c, 0), detail::slice_link(c, b, 1)};
    return {chain_value(chain), {chain}};
}

/// Chain from b_n = (alpha_n, 0) to a_{n+1} = (0, alpha_{n+1}) through
/// (alpha_n, alpha_{n+1}). Value 2^{-n} + 2^{-n-1}.
inline DiscChain bidisc_bridge_chain(int n) {
    const double al = bidisc_alpha(n), next = bidisc_alpha(n + 1);
    const KPoint b{al, 0.0}, c{al, next}, a{0.0, next};
    DiscChain chain;
    chain.endpoints = {b, c, a};
    chain.links = {detail::slice_link(b, c, 1), detail::slice_link(c, a, 0)};
    return chain;
}

struct CauchyRow {
    int n;
    double d_ab;      ///< bound for d(a_n, b_n)
    double d_bridge;  ///< bound for d(b_n, a_{n+1})
    double tail;      ///< sum of both bounds over n..N-1
    double tail_limit;  ///< 2^{3-n}
};

struct CauchyReport {
    std::vector<CauchyRow> rows;
    bool limit_in_domain = true;
    bool pass = false;
};

/// Bounds along a_1, b_1, a_2, b_2, ... whose tail sums stay below 2^{3-n},
/// while the limit (0, 0) is not a member of the punctured bidisc.
inline CauchyReport cauchy_escape_demo(int N) {
    if (N < 2) throw DomainError("cauchy_escape_demo: N must be at least 2");
    CauchyReport rep;
    for (int n = 1; n < N; ++n)
        rep.rows.push_back({n, punctured_bidisc_bound(n).value, chain_value(bidisc_bridge_chain(n)), 0.0,
                            std::ldexp(1.0, 3 - n)});
    double tail = 0.0;
    for (auto it = rep.rows.rbegin(); it != rep.rows.rend(); ++it) {
        tail += it->d_ab + it->d_bridge;
        it->tail = tail;
    }
    rep.limit_in_domain = kobayashi_punctured_bidisc().membership({0.0, 0.0});
    rep.pass = !rep.limit_in_domain;
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        const auto& r = rep.rows[i];
        rep.pass = rep.pass && r.d_ab <= std::ldexp(1.0, 1 - r.n) + 1e-12 && r.tail < r.tail_limit;
        if (i > 0) rep.pass = rep.pass && r.d_ab <= rep.rows[i - 1].d_ab;
    }
    return rep;
}

inline Json to_json(const CauchyReport& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"n", row.n}, {"d_ab", row.d_ab}, {"d_bridge", row.d_bridge}, {"tail", row.tail},
                        {"tail_limit", row.tail_limit}});
    return {{"rows", rows}, {"limit_in_domain", r.limit_in_domain}, {"pass", r.pass}};
}

inline Json to_json(const DiscChain& c) {
    Json links = Json::array();
    for (const auto& l : c.links) links.push_back({{"family", l.family}, {"a", {l.a.real(), l.a.imag()}}});
    Json pts = Json::array();
    for (const auto& p : c.endpoints) pts.push_back({p[0].real(), p[0].imag(), p[1].real(), p[1].imag()});
    return {{"links", links}, {"endpoints", pts}};
}

}  // namespace hyp
