#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hyp/hyp.hpp"

namespace {

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

std::pair<double, double> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw hyp::ContractError("--range expects LO:HI");
    const std::string lo = text.substr(0, colon), hi = text.substr(colon + 1);
    const double a = lo.empty() ? 0.0 : hyp::detail::parse_double("range", lo);
    const double b = hi.empty() ? std::numeric_limits<double>::infinity() : hyp::detail::parse_double("range", hi);
    if (!(a < b)) throw hyp::ContractError("--range needs LO < HI");
    return {a, b};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hyperbolic geometry checks: figures, verification suites, distances, calibration, Kobayashi chains"};
    app.require_subcommand(1);

    std::optional<std::uint64_t> seed;
    std::optional<int> samples;
    std::optional<double> resolution;
    std::string out_path;

    auto* figure = app.add_subcommand("figure", "Write an SVG of Poincare balls and geodesics");
    std::string figure_name;
    figure->add_option("name", figure_name, "disc1 or disc2")->required();
    figure->add_option("--out", out_path, "Output SVG path (default <name>.svg in output_dir)");

    auto* verify = app.add_subcommand("verify", "Run a verification suite and print its JSON report");
    std::string suite;
    verify->add_option("suite", suite, "Suite name")->required();
    verify->add_option("--seed", seed, "Sampling seed");
    verify->add_option("--samples", samples, "Sample count");
    verify->add_option("--resolution", resolution, "Mesh resolution");
    verify->add_option("--out", out_path, "Also write the JSON report here");

    auto* distance = app.add_subcommand("distance", "Distance between two points of disc or ppc");
    std::string domain, p_text, q_text, method = "closed";
    distance->add_option("domain", domain, "disc or ppc")->required();
    distance->add_option("p", p_text, "First point, re,im or a+bi")->required();
    distance->add_option("q", q_text, "Second point")->required();
    distance->add_option("--method", method, "closed or mesh");
    distance->add_option("--resolution", resolution, "Mesh resolution");
    distance->add_option("--out", out_path, "Also write the JSON report here");

    auto* calibrate = app.add_subcommand("calibrate", "Certify the constant C of the C \\ {0,1} metric");
    std::string range = "9:";
    calibrate->add_option("--range", range, "Search interval LO:HI for C");
    calibrate->add_option("--out", out_path, "Also write the JSON report here");

    auto* kobayashi = app.add_subcommand("kobayashi", "Upper bound on the Kobayashi distance by disc chains");
    std::string kdomain, kp, kq;
    int max_links = 4;
    kobayashi->add_option("domain", kdomain, "disc, plane, punctured-plane, bidisc or punctured-bidisc")->required();
    kobayashi->add_option("p", kp, "First point; use z1;z2 in dimension two")->required();
    kobayashi->add_option("q", kq, "Second point")->required();
    kobayashi->add_option("--max-links", max_links, "Maximum chain length");
    kobayashi->add_option("--seed", seed, "Multi-start seed");
    kobayashi->add_option("--out", out_path, "Also write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? hyp::kExitPass : hyp::kExitUsage;
    }

    try {
        hyp::RunConfig cfg = hyp::load_config_from_env();
        if (seed) cfg.seed = *seed;
        if (samples) cfg.samples = *samples;
        if (resolution) cfg.mesh_resolution = *resolution;
        cfg.validate();

        hyp::CommandOutcome outcome;
        if (*figure) {
            const auto spec = hyp::FigureSpec::named(figure_name);
            const std::string path = out_path.empty() ? cfg.output_dir + "/" + figure_name + ".svg" : out_path;
            hyp::cmd_figure(spec, path);
            std::cout << path << "\n";
            return hyp::kExitPass;
        }
        if (*verify) {
            const auto& names = hyp::suite_names();
            if (std::find(names.begin(), names.end(), suite) == names.end())
                throw hyp::ContractError("unknown suite '" + suite + "'");
            outcome = hyp::cmd_verify(suite, cfg);
        } else if (*distance) {
            outcome = hyp::cmd_distance(domain, hyp::parse_complex(p_text), hyp::parse_complex(q_text), method, cfg);
        } else if (*calibrate) {
            const auto [lo, hi] = parse_range(range);
            outcome = hyp::cmd_calibrate(lo, hi, cfg);
        } else if (*kobayashi) {
            if (max_links < 1) throw hyp::ContractError("--max-links must be at least 1");
            outcome = hyp::cmd_kobayashi(kdomain, hyp::parse_kpoint(kp), hyp::parse_kpoint(kq), max_links, cfg);
        }
        if (!out_path.empty()) write_file(out_path, hyp::dump_canonical(outcome.document) + "\n");
        std::cout << outcome.text << std::flush;
        return outcome.exit_code;
    } catch (const hyp::ContractError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return hyp::kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return hyp::kExitDomain;
    }
}
