#pragma once

// tanh-sinh (double-exponential) quadrature on (0,1). The transform pushes the
// endpoints out double-exponentially, so algebraic endpoint singularities of
// the t^{s-1}(1-t)^{r-1} kind integrate to near machine precision. Integrands
// receive both t and 1-t computed without cancellation.

#include <cmath>
#include <cstddef>

#include "heunc/errors.hpp"
#include "heunc/scalar.hpp"

namespace heunc {

struct QuadratureResult {
    Cx value{};
    double est_error = 0.0;
    int levels = 0;
};

namespace detail {

struct DeNode {
    double t, one_minus_t, weight;
};

inline DeNode de_node(double u) {
    const double w = 0.5 * kPi * std::sinh(u);
    DeNode n;
    if (w >= 0.0) {
        const double e = std::exp(-2.0 * w);
        n.t = 1.0 / (1.0 + e);
        n.one_minus_t = e / (1.0 + e);
    } else {
        const double e = std::exp(2.0 * w);
        n.t = e / (1.0 + e);
        n.one_minus_t = 1.0 / (1.0 + e);
    }
    const double ch = std::cosh(w);
    n.weight = 0.25 * kPi * std::cosh(u) / (ch * ch);
    return n;
}

} // namespace detail

/// Integral over (0,1) of f(t, 1-t) (complex-valued f).
template <typename F>
QuadratureResult integrate01(F&& f, double tol = 1e-12, int max_level = 12) {
    constexpr double kUmax = 4.0;
    double h = 1.0;
    const auto n0 = detail::de_node(0.0);
    Cx total = f(n0.t, n0.one_minus_t) * n0.weight;
    for (int k = 1; k * h <= kUmax; ++k) {
        for (double sgn : {1.0, -1.0}) {
            const auto n = detail::de_node(sgn * k * h);
            if (n.weight > 1e-320) total += f(n.t, n.one_minus_t) * n.weight;
        }
    }
    Cx prev = total * h;
    double change = std::abs(prev);
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        for (int k = 1; k * h <= kUmax; k += 2) {
            for (double sgn : {1.0, -1.0}) {
                const auto n = detail::de_node(sgn * k * h);
                if (n.weight > 1e-320) total += f(n.t, n.one_minus_t) * n.weight;
            }
        }
        const Cx cur = total * h;
        change = std::abs(cur - prev);
        if (level >= 3 && change <= tol * std::max(1.0, std::abs(cur)))
            return {cur, change, level};
        prev = cur;
    }
    throw QuadratureFailure("integrate01: tolerance not reached at the level cap");
}

/// Integral over (a,b) of a smooth-enough g(x); endpoint singularities are
/// still tamed by the same transform.
template <typename F>
QuadratureResult integrate_ab(F&& g, double a, double b, double tol = 1e-12,
                              int max_level = 12) {
    const double L = b - a;
    auto r = integrate01([&](double t, double omt) { return g(a + L * t, b - L * omt); },
                         tol, max_level);
    r.value *= L;
    r.est_error *= std::abs(L);
    return r;
}

} // namespace heunc
