#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <string>

#include "json.hpp"

namespace hyp {

using Json = nlohmann::json;

/// Outcome of a named inequality check over a sample set.
///
/// worst_violation is signed: values <= 0 mean the inequality held with
/// slack at every sample, and pass is exactly worst_violation <= tolerance.
struct VerificationReport {
    std::string check_name;
    Json params = Json::object();
    std::int64_t sample_count = 0;
    double worst_violation = -std::numeric_limits<double>::infinity();
    Json worst_witness = Json::object();
    double tolerance = 0.0;
    bool pass = false;
    std::uint64_t seed = 0;
    /// "checked", "precondition" or "hypothesis".
    std::string status = "checked";
    /// Worst violation above -1e-7: consistent with the equality case, never a proof of it.
    bool near_equality = false;

    void record(double violation, Json witness) {
        if (violation > worst_violation || sample_count == 0) {
            worst_violation = violation;
            worst_witness = std::move(witness);
        }
        ++sample_count;
    }

    VerificationReport& finalize() {
        pass = worst_violation <= tolerance;
        near_equality = worst_violation > -1e-7;
        return *this;
    }
};

inline Json to_json(const VerificationReport& r) {
    return Json{{"check_name", r.check_name},   {"params", r.params},
                {"sample_count", r.sample_count}, {"worst_violation", r.worst_violation},
                {"worst_witness", r.worst_witness}, {"tolerance", r.tolerance},
                {"pass", r.pass},                 {"seed", r.seed},
                {"status", r.status},             {"near_equality", r.near_equality}};
}

namespace detail {

inline std::string format_double(double v) {
    if (std::isnan(v)) return "\"nan\"";
    if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline void dump_canonical(const Json& j, int depth, std::string& out) {
    const std::string pad(2 * (depth + 1), ' ');
    const std::string close_pad(2 * depth, ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) { out += "{}"; return; }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += pad + Json(it.key()).dump() + ": ";
                dump_canonical(it.value(), depth + 1, out);
            }
            out += "\n" + close_pad + "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) { out += "[]"; return; }
            out += "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out += ",\n";
                out += pad;
                dump_canonical(j[i], depth + 1, out);
            }
            out += "\n" + close_pad + "]";
            return;
        }
        case Json::value_t::number_float:
            out += format_double(j.get<double>());
            return;
        default:
            out += j.dump();
    }
}

}  // namespace detail

/// Sorted keys, two-space indent, floats with 17 significant digits.
inline std::string dump_canonical(const Json& j) {
    std::string out;
    detail::dump_canonical(j, 0, out);
    out += '\n';
    return out;
}

}  // namespace hyp
