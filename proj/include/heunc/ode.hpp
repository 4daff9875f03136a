#pragma once

// Embedded Dormand-Prince 5(4) integrator over complex state vectors,
// specialized to integration along straight segments in the complex plane
// with a step cap supplied by the caller (used to stay clear of
// singularities).

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>

#include "heunc/errors.hpp"
#include "heunc/scalar.hpp"

namespace heunc {

template <std::size_t N>
using OdeState = std::array<Cx, N>;

struct OdeStats {
    std::size_t n_accepted = 0;
    std::size_t n_rejected = 0;
    std::size_t n_fev = 0;
    double accumulated_error = 0.0; // sum of accepted local error estimates
};

namespace detail {

// Dormand-Prince coefficients (RK5(4)7M).
inline constexpr double A21 = 0.2;
inline constexpr double A31 = 3.0 / 40.0, A32 = 9.0 / 40.0;
inline constexpr double A41 = 44.0 / 45.0, A42 = -56.0 / 15.0, A43 = 32.0 / 9.0;
inline constexpr double A51 = 19372.0 / 6561.0, A52 = -25360.0 / 2187.0,
                        A53 = 64448.0 / 6561.0, A54 = -212.0 / 729.0;
inline constexpr double A61 = 9017.0 / 3168.0, A62 = -355.0 / 33.0,
                        A63 = 46732.0 / 5247.0, A64 = 49.0 / 176.0,
                        A65 = -5103.0 / 18656.0;
inline constexpr double A71 = 35.0 / 384.0, A73 = 500.0 / 1113.0,
                        A74 = 125.0 / 192.0, A75 = -2187.0 / 6784.0,
                        A76 = 11.0 / 84.0;
inline constexpr double C2 = 0.2, C3 = 0.3, C4 = 0.8, C5 = 8.0 / 9.0;
inline constexpr double E1 = 71.0 / 57600.0, E3 = -71.0 / 16695.0,
                        E4 = 71.0 / 1920.0, E5 = -17253.0 / 339200.0,
                        E6 = 22.0 / 525.0, E7 = -1.0 / 40.0;

} // namespace detail

/// Integrate dY/dt = f(t, Y) from t=0 to t=1 (the segment parameter).
/// `max_step(t)` caps the step size in t; rtol/atol control the embedded
/// error test. Throws StepFailure if the step size underflows.
template <std::size_t N, typename F, typename StepCap>
OdeState<N> integrate_unit_interval(F&& f, OdeState<N> y, double rtol, double atol,
                                    StepCap&& max_step, OdeStats* stats = nullptr) {
    using namespace detail;
    using State = OdeState<N>;
    auto axpy = [](const State& base, double h, std::initializer_list<std::pair<double, const State*>> terms) {
        State r = base;
        for (auto& [c, k] : terms)
            for (std::size_t i = 0; i < N; ++i) r[i] += h * c * (*k)[i];
        return r;
    };

    double t = 0.0;
    double h = std::min(0.1, max_step(0.0));
    State k1 = f(t, y);
    std::size_t fev = 1;
    OdeStats local;
    while (t < 1.0) {
        h = std::min({h, max_step(t), 1.0 - t});
        if (h < 1e-14) throw StepFailure("integrate: step size underflow");
        const State k2 = f(t + C2 * h, axpy(y, h, {{A21, &k1}}));
        const State k3 = f(t + C3 * h, axpy(y, h, {{A31, &k1}, {A32, &k2}}));
        const State k4 = f(t + C4 * h, axpy(y, h, {{A41, &k1}, {A42, &k2}, {A43, &k3}}));
        const State k5 = f(t + C5 * h, axpy(y, h, {{A51, &k1}, {A52, &k2}, {A53, &k3}, {A54, &k4}}));
        const State k6 = f(t + h, axpy(y, h, {{A61, &k1}, {A62, &k2}, {A63, &k3}, {A64, &k4}, {A65, &k5}}));
        const State y5 = axpy(y, h, {{A71, &k1}, {A73, &k3}, {A74, &k4}, {A75, &k5}, {A76, &k6}});
        const State k7 = f(t + h, y5);
        fev += 6;

        double err = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const Cx e = h * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] +
                              E6 * k6[i] + E7 * k7[i]);
            const double sc = atol + rtol * std::max(std::abs(y[i]), std::abs(y5[i]));
            err = std::max(err, std::abs(e) / sc);
        }
        if (err <= 1.0) {
            t += h;
            y = y5;
            k1 = k7; // FSAL
            local.n_accepted++;
            local.accumulated_error += err * rtol * h;
            const double fac = (err > 0.0) ? 0.9 * std::pow(err, -0.2) : 5.0;
            h *= std::min(5.0, std::max(0.2, fac));
        } else {
            local.n_rejected++;
            h *= std::max(0.2, 0.9 * std::pow(err, -0.2));
        }
    }
    local.n_fev = fev;
    if (stats) {
        stats->n_accepted += local.n_accepted;
        stats->n_rejected += local.n_rejected;
        stats->n_fev += local.n_fev;
        stats->accumulated_error += local.accumulated_error;
    }
    return y;
}

} // namespace heunc
