#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "hyp/complex_core.hpp"

namespace hyp {

/// Radical inverse of i in the given base.
inline double radical_inverse(std::uint64_t i, std::uint64_t base) {
    double inv = 1.0 / static_cast<double>(base), f = inv, r = 0.0;
    while (i > 0) {
        r += f * static_cast<double>(i % base);
        i /= base;
        f *= inv;
    }
    return r;
}

/// Scrambled Halton points in the closed disc |z| <= radius.
///
/// The seed fixes a Cranley-Patterson rotation, so sample k is the same for
/// every request size: a larger sample set extends a smaller one.
class DiscSampler {
public:
    explicit DiscSampler(std::uint64_t seed, double radius = 0.98, int stream = 0)
        : radius_(radius), base_u_(stream == 0 ? 2 : 5), base_v_(stream == 0 ? 3 : 7) {
        std::mt19937_64 gen(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(stream));
        shift_u_ = static_cast<double>(gen() >> 11) * 0x1.0p-53;
        shift_v_ = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    }

    ComplexPoint operator()(std::uint64_t k) const {
        double u = radical_inverse(k + 1, base_u_) + shift_u_;
        double v = radical_inverse(k + 1, base_v_) + shift_v_;
        u -= std::floor(u);
        v -= std::floor(v);
        return std::polar(radius_ * std::sqrt(u), 2.0 * std::numbers::pi * v);
    }

    std::vector<ComplexPoint> take(std::size_t n) const {
        std::vector<ComplexPoint> out;
        out.reserve(n);
        for (std::size_t k = 0; k < n; ++k) out.push_back((*this)(k));
        return out;
    }

private:
    double radius_;
    std::uint64_t base_u_, base_v_;
    double shift_u_ = 0.0, shift_v_ = 0.0;
};

/// Uniform doubles from a seed, reproducible across standard libraries.
class SplitRandom {
public:
    explicit SplitRandom(std::uint64_t seed) : gen_(seed) {}
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    ComplexPoint in_disc(double radius) {
        const double r = radius * std::sqrt(uniform());
        return std::polar(r, 2.0 * std::numbers::pi * uniform());
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace hyp
