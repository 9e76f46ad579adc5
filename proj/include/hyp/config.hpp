#pragma once

// Run configuration: defaults, a flat `key = value` file, command-line overrides.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hyp/errors.hpp"
#include "hyp/report.hpp"

namespace hyp {

struct Tolerances {
    double closed_form = 1e-9;
    /// Relative part of the mesh tolerance 1e-3 (1 + value).
    double mesh = 1e-3;
    double ahlfors = 1e-6;
    double schottky = 1e-2;
};

struct RunConfig {
    std::uint64_t seed = 1;
    int samples = 1000;
    Tolerances tolerances;
    double mesh_resolution = 0.02;
    std::vector<double> ppc_C_search{9.5, 10.0, 12.0, 16.0, 24.0, 32.0, 48.0, 64.0};
    std::string output_dir = ".";

    void validate() const {
        if (!(tolerances.closed_form > 0.0 && tolerances.mesh > 0.0 && tolerances.ahlfors > 0.0 && tolerances.schottky > 0.0))
            throw ContractError("config: tolerances must be positive");
        if (!(mesh_resolution > 0.0)) throw ContractError("config: mesh_resolution must be positive");
        if (samples <= 0) throw ContractError("config: samples must be positive");
        if (ppc_C_search.empty()) throw ContractError("config: ppc_C_search is empty");
    }
};

inline Json to_json(const RunConfig& c) {
    return {{"seed", c.seed},
            {"samples", c.samples},
            {"tolerances",
             {{"closed_form", c.tolerances.closed_form},
              {"mesh", c.tolerances.mesh},
              {"ahlfors", c.tolerances.ahlfors},
              {"schottky", c.tolerances.schottky}}},
            {"mesh_resolution", c.mesh_resolution},
            {"ppc_C_search", c.ppc_C_search},
            {"output_dir", c.output_dir}};
}

namespace detail {

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline double parse_double(const std::string& key, const std::string& v) {
    std::size_t used = 0;
    double out = 0.0;
    try {
        out = std::stod(v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != v.size() || v.empty()) throw ContractError("config: '" + key + "' expects a number, got '" + v + "'");
    return out;
}

inline std::vector<double> parse_list(const std::string& key, const std::string& v) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_double(key, trim(item)));
    return out;
}

}  // namespace detail

/// Applies one `key = value` setting.
inline void apply_setting(RunConfig& c, const std::string& key, const std::string& value) {
    using detail::parse_double;
    if (key == "seed") {
        const double s = parse_double(key, value);
        if (s < 0 || s != static_cast<double>(static_cast<std::uint64_t>(s))) throw ContractError("config: bad seed");
        c.seed = static_cast<std::uint64_t>(s);
    } else if (key == "samples") {
        c.samples = static_cast<int>(parse_double(key, value));
    } else if (key == "tolerance.closed_form") {
        c.tolerances.closed_form = parse_double(key, value);
    } else if (key == "tolerance.mesh") {
        c.tolerances.mesh = parse_double(key, value);
    } else if (key == "tolerance.ahlfors") {
        c.tolerances.ahlfors = parse_double(key, value);
    } else if (key == "tolerance.schottky") {
        c.tolerances.schottky = parse_double(key, value);
    } else if (key == "mesh_resolution") {
        c.mesh_resolution = parse_double(key, value);
    } else if (key == "ppc_C_search") {
        c.ppc_C_search = detail::parse_list(key, value);
    } else if (key == "output_dir") {
        c.output_dir = value;
    } else {
        throw ContractError("config: unknown key '" + key + "'");
    }
}

/// Parses a flat config text: one `key = value` per line, `#` starts a comment.
inline RunConfig parse_config(const std::string& text, RunConfig base = {}) {
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ContractError("config line " + std::to_string(lineno) + ": expected key = value");
        apply_setting(base, detail::trim(line.substr(0, eq)), detail::trim(line.substr(eq + 1)));
    }
    base.validate();
    return base;
}

inline RunConfig load_config_file(const std::string& path, RunConfig base = {}) {
    std::ifstream in(path);
    if (!in) throw ContractError("config: cannot read '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), std::move(base));
}

/// Defaults, then the file named by HYP_CONFIG when set.
inline RunConfig load_config_from_env() {
    const char* path = std::getenv("HYP_CONFIG");
    if (path == nullptr || *path == '\0') return {};
    return load_config_file(path);
}

}  // namespace hyp
