#pragma once

#include <cmath>
#include <functional>
#include <limits>

namespace hyp {

struct QuadratureResult {
    double value = 0.0;
    /// Set when the recursion limit was reached or the integrand went non-finite.
    bool diverged = false;
    int evaluations = 0;
};

namespace detail {

struct SimpsonState {
    const std::function<double(double)>& f;
    int max_depth;
    QuadratureResult result;
};

inline double simpson_recurse(SimpsonState& s, double a, double fa, double m, double fm, double b, double fb,
                              double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = s.f(lm);
    const double frm = s.f(rm);
    s.result.evaluations += 2;
    if (!std::isfinite(flm) || !std::isfinite(frm)) {
        s.result.diverged = true;
        return whole;
    }
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    if (depth >= s.max_depth) {
        s.result.diverged = true;
        return left + right + delta / 15.0;
    }
    return simpson_recurse(s, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth + 1) +
           simpson_recurse(s, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth + 1);
}

}  // namespace detail

/// Adaptive Simpson on [a, b] to absolute tolerance tol.
inline QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                                         int max_depth = 40) {
    detail::SimpsonState s{f, max_depth, {}};
    if (a == b) return s.result;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    s.result.evaluations = 3;
    if (!std::isfinite(fa) || !std::isfinite(fm) || !std::isfinite(fb)) {
        s.result.diverged = true;
        s.result.value = std::numeric_limits<double>::infinity();
        return s.result;
    }
    // The first level is always split.
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    s.result.evaluations += 2;
    if (!std::isfinite(flm) || !std::isfinite(frm)) {
        s.result.diverged = true;
        s.result.value = std::numeric_limits<double>::infinity();
        return s.result;
    }
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    s.result.value = detail::simpson_recurse(s, a, fa, lm, flm, m, fm, left, 0.5 * tol, 1) +
                     detail::simpson_recurse(s, m, fm, rm, frm, b, fb, right, 0.5 * tol, 1);
    return s.result;
}

/// Composite Simpson with a fixed panel count (even); used as an independent reference.
inline double fixed_simpson(const std::function<double(double)>& f, double a, double b, int panels) {
    if (panels % 2) ++panels;
    const double h = (b - a) / panels;
    double sum = f(a) + f(b);
    for (int i = 1; i < panels; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    return sum * h / 3.0;
}

}  // namespace hyp
