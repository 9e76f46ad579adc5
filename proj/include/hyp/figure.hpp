#pragma once

// SVG pictures of Poincare balls and geodesics in the unit disc.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyp/complex_core.hpp"
#include "hyp/errors.hpp"
#include "hyp/paths.hpp"

namespace hyp {

enum class FigureKind { disc1, disc2, custom };

struct FigureSpec {
    FigureKind kind = FigureKind::disc1;
    ComplexPoint center{};
    std::vector<double> ball_radii{0.5, 1.0, 1.5, 2.0, 2.5, 3.0};
    /// Number of geodesics through the center, evenly spaced in angle over a half turn.
    int geodesic_count = 8;
    int size_px = 480;

    static FigureSpec disc1() { return {}; }

    static FigureSpec disc2() {
        FigureSpec s;
        s.kind = FigureKind::disc2;
        s.center = {0.5, 0.5};
        return s;
    }

    static FigureSpec named(const std::string& name) {
        if (name == "disc1") return disc1();
        if (name == "disc2") return disc2();
        throw ContractError("unknown figure '" + name + "'");
    }

    void validate() const {
        if (!(std::abs(center) < 1.0)) throw DomainError("FigureSpec: center outside the disc");
        for (double r : ball_radii)
            if (!(r > 0.0)) throw DomainError("FigureSpec: ball radii must be positive");
        if (geodesic_count < 0 || size_px <= 0) throw DomainError("FigureSpec: bad geodesic count or size");
    }
};

/// Euclidean circles of the balls, in the order of spec.ball_radii.
inline std::vector<EuclideanDisc> figure_balls(const FigureSpec& spec) {
    spec.validate();
    std::vector<EuclideanDisc> out;
    for (double r : spec.ball_radii) out.push_back(poincare_ball(spec.center, r));
    return out;
}

/// Geodesics through the center: images under phi_{-center} of diameters at
/// angles k pi / count, each sampled at `samples` points.
inline std::vector<std::vector<ComplexPoint>> figure_geodesics(const FigureSpec& spec, int samples = 129) {
    spec.validate();
    std::vector<std::vector<ComplexPoint>> out;
    for (int k = 0; k < spec.geodesic_count; ++k) {
        const ComplexPoint dir = std::polar(1.0, k * std::numbers::pi / spec.geodesic_count);
        std::vector<ComplexPoint> line;
        for (int i = 0; i < samples; ++i) {
            const double t = -1.0 + 2.0 * i / (samples - 1);
            line.push_back(mobius(-spec.center, t * dir));
        }
        out.push_back(std::move(line));
    }
    return out;
}

namespace detail {
inline std::string fmt6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v == 0.0 ? 0.0 : v);
    return buf;
}
}  // namespace detail

/// Deterministic SVG 1.1 document. Balls are drawn largest first with
/// alternating fills, then the dashed unit circle and the geodesics.
inline std::string render_svg(const FigureSpec& spec) {
    using detail::fmt6;
    const auto balls = figure_balls(spec);
    std::vector<std::size_t> order(balls.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return balls[a].radius > balls[b].radius; });

    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(spec.size_px) +
         "\" height=\"" + std::to_string(spec.size_px) + "\" viewBox=\"-1.1 -1.1 2.2 2.2\">\n";
    s += "  <g transform=\"scale(1,-1)\">\n";
    int shade = 0;
    for (std::size_t i : order) {
        const auto& b = balls[i];
        s += "    <circle cx=\"" + fmt6(b.center.real()) + "\" cy=\"" + fmt6(b.center.imag()) + "\" r=\"" +
             fmt6(b.radius) + "\" fill=\"" + (shade++ % 2 == 0 ? "#c8d7ea" : "#ffffff") +
             "\" stroke=\"#1f3b63\" stroke-width=\"0.004\"/>\n";
    }
    s += "    <circle cx=\"0.000000\" cy=\"0.000000\" r=\"1.000000\" fill=\"none\" stroke=\"#000000\" "
         "stroke-width=\"0.006\" stroke-dasharray=\"0.03 0.02\"/>\n";
    for (const auto& line : figure_geodesics(spec)) {
        s += "    <polyline fill=\"none\" stroke=\"#8b1a1a\" stroke-width=\"0.005\" points=\"";
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (i) s += ' ';
            s += fmt6(line[i].real()) + "," + fmt6(line[i].imag());
        }
        s += "\"/>\n";
    }
    s += "    <circle cx=\"" + fmt6(spec.center.real()) + "\" cy=\"" + fmt6(spec.center.imag()) +
         "\" r=\"0.012000\" fill=\"#000000\"/>\n";
    s += "  </g>\n</svg>\n";
    return s;
}

/// Writes the SVG; throws std::runtime_error when the file cannot be written.
inline void cmd_figure(const FigureSpec& spec, const std::string& path) {
    const std::string svg = render_svg(spec);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << svg;
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace hyp
