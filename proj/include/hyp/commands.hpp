#pragma once

// Command implementations behind the `hyp` executable. Each returns the JSON
// document, the text for standard output and the process exit code.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <regex>
#include <string>
#include <vector>

#include "hyp/config.hpp"
#include "hyp/figure.hpp"
#include "hyp/kobayashi.hpp"
#include "hyp/mesh.hpp"
#include "hyp/paths.hpp"
#include "hyp/picard.hpp"
#include "hyp/report.hpp"
#include "hyp/schlicht.hpp"
#include "hyp/verifiers.hpp"

namespace hyp {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int { kExitPass = 0, kExitCheckFailed = 1, kExitUsage = 2, kExitDomain = 3 };

struct CommandOutcome {
    Json document = Json::object();
    std::string text;
    int exit_code = kExitPass;
};

inline Json envelope(const std::string& command, const RunConfig& config, Json reports) {
    return {{"tool_version", kToolVersion}, {"command", command}, {"config", to_json(config)}, {"reports", std::move(reports)}};
}

/// Parses "x", "x,y", "x+yi", "x-yi" or "yi".
inline ComplexPoint parse_complex(const std::string& text) {
    static const std::regex pair(R"(^\s*([^,]+?)\s*,\s*([^,]+?)\s*$)");
    static const std::regex algebraic(
        R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*(?:([+-])\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*i)?\s*$)");
    static const std::regex imaginary(R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*i\s*$)");
    std::smatch mm;
    auto num = [&](const std::string& s) { return detail::parse_double("point", detail::trim(s)); };
    if (std::regex_match(text, mm, pair)) return {num(mm[1]), num(mm[2])};
    if (std::regex_match(text, mm, imaginary)) {
        const std::string c = mm[1];
        return {0.0, c.empty() || c == "+" ? 1.0 : c == "-" ? -1.0 : num(c)};
    }
    if (std::regex_match(text, mm, algebraic) && (mm[1].matched || mm[2].matched)) {
        const double re = mm[1].matched ? num(mm[1]) : 0.0;
        double im = 0.0;
        if (mm[2].matched) {
            im = mm[3].matched ? num(mm[3]) : 1.0;
            if (mm[2] == "-") im = -im;
        }
        return {re, im};
    }
    throw ContractError("cannot parse point '" + text + "'");
}

/// A point of C or C^2: coordinates separated by ';'.
inline KPoint parse_kpoint(const std::string& text) {
    const auto semi = text.find(';');
    if (semi == std::string::npos) return {parse_complex(text), 0.0};
    return {parse_complex(text.substr(0, semi)), parse_complex(text.substr(semi + 1))};
}

namespace detail {

inline Json check_report(const std::string& name, Json params, double worst, double tol, Json witness = Json::object(),
                         std::int64_t samples = 1) {
    VerificationReport r;
    r.check_name = name;
    r.params = std::move(params);
    r.worst_violation = worst;
    r.worst_witness = std::move(witness);
    r.tolerance = tol;
    r.sample_count = samples;
    r.finalize();
    return to_json(r);
}

inline bool all_pass(const Json& reports) {
    for (const auto& r : reports)
        if (!r.at("pass").get<bool>()) return false;
    return true;
}

inline std::vector<HolomorphicMap> normalized_catalog() {
    const auto D = disc_domain();
    const auto P = plane_domain();
    std::vector<HolomorphicMap> out;
    out.push_back(identity_map());
    out.push_back(polynomial_map({0.0, std::polar(1.0, 0.9)}, D, P, "e^{0.9i}z"));
    out.push_back(polynomial_map({0.0, 1.0, 0.1}, D, P, "z+0.1z^2"));
    out.push_back(polynomial_map({0.0, 1.0, 0.05}, D, P, "z+0.05z^2"));
    out.push_back(polynomial_map({0.0, 1.0, -0.5}, D, P, "z-z^2/2"));
    out.push_back(polynomial_map({0.0, 1.0, 0.0, 1.0 / 3.0}, D, P, "z+z^3/3"));
    auto sq = polynomial_map({0.0, 1.0, 1.0}, D, P, "z+z^2");
    sq.critical_points = {-0.5};
    out.push_back(sq);
    out.push_back({"exp(z)-1", [](ComplexPoint z) { return std::exp(z) - 1.0; }, [](ComplexPoint z) { return std::exp(z); },
                   D, P, {}});
    return out;
}

/// Maps D -> C \ {0, 1} with |f(0)| < 4 for the Schottky check.
inline std::vector<HolomorphicMap> schottky_witnesses() {
    const auto D = disc_domain();
    const auto T = punctured_plane_domain({0.0, 1.0});
    std::vector<HolomorphicMap> out;
    const std::pair<ComplexPoint, ComplexPoint> affine[] = {
        {3.0, 0.5}, {-1.0, 0.6}, {{0.0, 2.0}, 1.0}, {-2.0, 1.0}, {0.1, 0.05}, {1.1, 0.05},
        {{0.5, 0.5}, 0.2}, {{-1.0, -1.0}, 0.5}, {{0.0, -3.0}, 1.5}, {-3.5, 2.0},
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

inline double max_modulus(const HolomorphicMap& f, double r, int samples = 720) {
    double best = 0.0;
    for (ComplexPoint z : sunflower(0.0, r, samples)) best = std::max(best, std::abs(f(z)));
    for (int k = 0; k < samples; ++k) best = std::max(best, std::abs(f(std::polar(r, 2.0 * std::numbers::pi * k / samples))));
    return best;
}

inline PpcMetricParams calibrated(const RunConfig& cfg) {
    CalibrationConfig cc;
    cc.candidates = cfg.ppc_C_search;
    return calibrate_C(cc);
}

}  // namespace detail

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"schwarz",  "schwarz-pick",   "ahlfors-disc",    "ahlfors-ppc", "landau",
                                                "schottky", "kobayashi-disc", "kobayashi-plane", "bidisc",      "completeness"};
    return names;
}

/// Runs one named suite. Unknown names raise ContractError.
inline Json run_suite(const std::string& suite, const RunConfig& cfg) {
    Json reports = Json::array();
    const auto tol = cfg.tolerances;
    if (suite == "schwarz") {
        for (const auto& c : disc_map_catalog())
            if (c.centered) reports.push_back(to_json(schwarz_check(c.map, cfg.samples, cfg.seed, tol.closed_form)));
    } else if (suite == "schwarz-pick") {
        for (const auto& c : disc_map_catalog()) {
            auto r = schwarz_pick_check(c.map, cfg.samples, cfg.seed, tol.closed_form);
            Json j = to_json(r);
            j["params"]["automorphism"] = c.automorphism;
            if (c.automorphism && !r.near_equality) j["pass"] = false;
            reports.push_back(j);
        }
    } else if (suite == "ahlfors-disc") {
        const auto m = poincare_metric();
        for (const auto& c : disc_map_catalog()) reports.push_back(to_json(ahlfors_check(m, -1.0, c.map, cfg.samples, cfg.seed, tol.ahlfors)));
        SplitRandom rng(cfg.seed);
        for (int k = 0; k < 50; ++k) {
            const int degree = 1 + static_cast<int>(rng.uniform() * 3.0);
            std::vector<ComplexPoint> zeros;
            for (int j = 0; j < degree; ++j) zeros.push_back(rng.in_disc(0.95));
            auto f = blaschke_product(zeros, rng.uniform(0.0, 2.0 * std::numbers::pi));
            f.name = "random-blaschke-" + std::to_string(k);
            reports.push_back(to_json(ahlfors_check(m, -1.0, f, std::max(1, cfg.samples / 10), cfg.seed, tol.ahlfors)));
        }
    } else if (suite == "ahlfors-ppc") {
        const auto params = detail::calibrated(cfg);
        const auto m = ppc_metric(params);
        for (const auto& f : ppc_witness_catalog()) {
            Json j = to_json(ahlfors_check(m, -1.0, f, cfg.samples, cfg.seed, tol.ahlfors));
            j["params"]["C"] = params.C;
            j["params"]["single_component"] = maps_into_component(f, params);
            reports.push_back(j);
        }
    } else if (suite == "landau") {
        for (const auto& f : detail::normalized_catalog()) {
            const double L = landau_radius_estimate(f);
            const double B = bloch_radius_estimate(f);
            reports.push_back(detail::check_report("landau-estimate", {{"map", f.name}, {"estimate", L}}, 0.48 - L, 0.0));
            reports.push_back(detail::check_report("bloch-estimate", {{"map", f.name}, {"estimate", B}},
                                                   std::sqrt(3.0) / 4.0 - 0.05 - B, 0.0));
        }
        const auto params = detail::calibrated(cfg);
        for (const auto& f : ppc_witness_catalog()) {
            const double bound = landau_radius_bound(f(0.0), f.deriv(0.0), params);
            reports.push_back(detail::check_report("landau-radius-bound", {{"map", f.name}, {"bound", bound}, {"C", params.C}},
                                                   1.0 - bound, 0.0));
        }
    } else if (suite == "schottky") {
        const auto params = detail::calibrated(cfg);
        const auto S = schottky_bound(1.0, 0.5, 4.0, params, cfg.mesh_resolution);
        for (const auto& f : detail::schottky_witnesses()) {
            const double mx = detail::max_modulus(f, 0.5);
            reports.push_back(detail::check_report(
                "schottky", {{"map", f.name}, {"M", S.M}, {"M1", S.M1}, {"max_modulus", mx}, {"R", 1.0}, {"r", 0.5},
                             {"C_mag", 4.0}, {"resolution", cfg.mesh_resolution}, {"C", params.C}},
                mx - S.M, tol.schottky));
        }
    } else if (suite == "kobayashi-disc") {
        const auto d = kobayashi_disc();
        KobayashiConfig kc;
        kc.seed = cfg.seed;
        const DiscSampler sp(cfg.seed, 0.95, 0), sq(cfg.seed, 0.95, 1);
        VerificationReport r;
        r.check_name = "kobayashi-disc";
        r.tolerance = 1e-8;
        r.seed = cfg.seed;
        for (int k = 0; k < 100; ++k) {
            const ComplexPoint p = sp(static_cast<std::uint64_t>(k)), q = sq(static_cast<std::uint64_t>(k));
            const auto res = kobayashi_upper_bound(d, {p, 0.0}, {q, 0.0}, kc);
            r.record(std::abs(res.value - poincare_distance(p, q)), {{"p", {p.real(), p.imag()}}, {"q", {q.real(), q.imag()}}});
        }
        reports.push_back(to_json(r.finalize()));
    } else if (suite == "kobayashi-plane") {
        KobayashiConfig kc;
        kc.seed = cfg.seed;
        SplitRandom rng(cfg.seed);
        for (const std::string name : {"plane", "punctured-plane"}) {
            const auto d = catalog_domain(name, kc.epsilon_floor);
            VerificationReport r;
            r.check_name = "kobayashi-" + name;
            r.tolerance = 0.0;
            r.seed = cfg.seed;
            for (int k = 0; k < 20; ++k) {
                ComplexPoint p{rng.uniform(-5, 5), rng.uniform(-5, 5)}, q{rng.uniform(-5, 5), rng.uniform(-5, 5)};
                const auto res = kobayashi_upper_bound(d, {p, 0.0}, {q, 0.0}, kc);
                r.record(res.value - 1e-6, {{"p", {p.real(), p.imag()}}, {"q", {q.real(), q.imag()}}, {"value", res.value}});
            }
            reports.push_back(to_json(r.finalize()));
        }
        // The explicit witness with eps = 5e-7 has value 2 artanh(eps) = 2 eps + O(eps^3).
        const double eps = 5e-7;
        const double witness = 2.0 * artanh(eps);
        reports.push_back(detail::check_report("plane-witness", {{"epsilon", eps}, {"value", witness}},
                                               witness - 2.0 * eps, 1e-15));
    } else if (suite == "bidisc") {
        double worst = -std::numeric_limits<double>::infinity();
        Json bounds = Json::array();
        for (int n = 1; n <= 20; ++n) {
            const double v = punctured_bidisc_bound(n).value;
            bounds.push_back(v);
            worst = std::max(worst, std::abs(v - std::ldexp(1.0, 1 - n)));
        }
        reports.push_back(detail::check_report("punctured-bidisc", {{"bounds", bounds}, {"n10", bounds[9]}}, worst, 1e-12,
                                               Json::object(), 20));
        const auto demo = cauchy_escape_demo(20);
        reports.push_back(detail::check_report("cauchy-escape", to_json(demo), demo.pass ? -1.0 : 1.0, 0.0));
    } else if (suite == "completeness") {
        const auto params = detail::calibrated(cfg);
        const std::pair<const char*, PpcTarget> targets[] = {
            {"0", PpcTarget::zero}, {"1", PpcTarget::one}, {"infinity", PpcTarget::infinity}};
        for (const auto& [name, t] : targets) {
            const auto g = completeness_probe(params, t);
            reports.push_back(detail::check_report("completeness", {{"target", name}, {"growth", to_json(g)}, {"C", params.C}},
                                                   g.divergence_flag ? g.fit_residual - 0.05 : 1.0, 0.0));
        }
        const auto control = completeness_probe(radial_probe(constant_metric(0.5, disc_domain()), 1.0, 1.0, std::numbers::pi),
                                                1.0 - 1e-15);
        reports.push_back(detail::check_report("completeness-control", {{"target", "boundary of the disc"}, {"growth", to_json(control)}},
                                               control.divergence_flag ? 1.0 : -1.0, 0.0));
    } else {
        throw ContractError("unknown suite '" + suite + "'");
    }
    return reports;
}

inline CommandOutcome cmd_verify(const std::string& suite, const RunConfig& cfg) {
    CommandOutcome out;
    Json reports = run_suite(suite, cfg);
    out.exit_code = detail::all_pass(reports) ? kExitPass : kExitCheckFailed;
    out.document = envelope("verify " + suite, cfg, std::move(reports));
    out.text = dump_canonical(out.document) + "\n";
    return out;
}

/// Distance between two points of the disc or of C \ {0, 1}.
inline CommandOutcome cmd_distance(const std::string& domain, ComplexPoint p, ComplexPoint q, const std::string& method,
                                   const RunConfig& cfg) {
    CommandOutcome out;
    Json r = {{"domain", domain}, {"method", method}, {"resolution", cfg.mesh_resolution},
              {"p", {p.real(), p.imag()}}, {"q", {q.real(), q.imag()}}};
    double value = 0.0;
    if (method != "closed" && method != "mesh") throw ContractError("unknown method '" + method + "'");
    if (domain == "disc") {
        const double closed = poincare_distance(p, q);
        const double mesh = mesh_distance(poincare_metric(), disc_domain(), p, q, cfg.mesh_resolution);
        r["closed_form"] = closed;
        r["mesh"] = mesh;
        r["relative_gap"] = closed == 0.0 ? 0.0 : (mesh - closed) / closed;
        value = method == "closed" ? closed : mesh;
    } else if (domain == "ppc") {
        if (method == "closed") throw ContractError("no closed form for the ppc domain; use --method mesh");
        const auto params = detail::calibrated(cfg);
        const auto m = ppc_metric(params);
        if (!m.domain.contains(p) || !m.domain.contains(q)) throw DomainError("distance: point is a puncture or on a singular circle");
        value = mesh_distance(m, m.domain, p, q, cfg.mesh_resolution);
        r["mesh"] = value;
        r["C"] = params.C;
    } else {
        throw ContractError("unknown domain '" + domain + "'");
    }
    r["value"] = value;
    out.document = envelope("distance", cfg, Json::array({r}));
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g\n", value);
    out.text = buf;
    return out;
}

inline CommandOutcome cmd_calibrate(double lo, double hi, const RunConfig& cfg) {
    CommandOutcome out;
    CalibrationConfig cc;
    cc.candidates = cfg.ppc_C_search;
    cc.range_lo = lo;
    cc.range_hi = hi;
    try {
        const auto params = calibrate_C(cc);
        out.document = envelope("calibrate", cfg, Json::array({{{"C", params.C}, {"certificate", to_json(*params.certificate)}}}));
    } catch (const CalibrationError& e) {
        out.document = envelope("calibrate", cfg, Json::array({{{"error", e.what()}}}));
        out.exit_code = kExitCheckFailed;
    }
    out.text = dump_canonical(out.document) + "\n";
    return out;
}

inline CommandOutcome cmd_kobayashi(const std::string& domain, const KPoint& p, const KPoint& q, int max_links,
                                    const RunConfig& cfg) {
    CommandOutcome out;
    KobayashiConfig kc;
    kc.max_links = max_links;
    kc.seed = cfg.seed;
    const auto d = catalog_domain(domain, kc.epsilon_floor);
    const auto res = kobayashi_upper_bound(d, p, q, kc);
    Json r = {{"domain", domain}, {"value", res.value}, {"witness", to_json(res.witness)}, {"max_links", max_links}};
    if (domain == "disc") r["closed_form"] = poincare_distance(p[0], q[0]);
    out.document = envelope("kobayashi", cfg, Json::array({r}));
    out.text = dump_canonical(out.document) + "\n";
    return out;
}

}  // namespace hyp
