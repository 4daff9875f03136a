#pragma once

// Analytic continuation of local solutions along polylines in the complex
// plane by integrating the first-order system equivalent of the Heun
// equation, with Wronskian (Abel identity) drift as an accuracy monitor.

#include <cmath>
#include <utility>
#include <vector>

#include "heunc/errors.hpp"
#include "heunc/local.hpp"
#include "heunc/ode.hpp"
#include "heunc/params.hpp"
#include "heunc/scalar.hpp"

namespace heunc {

struct ContinuationPath {
    std::vector<Cx> waypoints;
    double min_singularity_distance = 0.1;

    /// Distance from point p to segment [a, b].
    static double segment_distance(Cx p, Cx a, Cx b) {
        const Cx d = b - a;
        const double L2 = std::norm(d);
        if (L2 == 0.0) return std::abs(p - a);
        double t = ((p - a).real() * d.real() + (p - a).imag() * d.imag()) / L2;
        t = std::max(0.0, std::min(1.0, t));
        return std::abs(p - (a + t * d));
    }

    /// Throws PathTooCloseToSingularity if any segment comes within
    /// min_singularity_distance of a singularity.
    void validate(const std::vector<Cx>& singularities) const {
        if (waypoints.size() < 2)
            throw PathTooCloseToSingularity("continuation path needs at least two waypoints");
        for (std::size_t i = 0; i + 1 < waypoints.size(); ++i)
            for (const Cx& c : singularities)
                if (segment_distance(c, waypoints[i], waypoints[i + 1]) <
                    min_singularity_distance)
                    throw PathTooCloseToSingularity(
                        "continuation path passes within the minimum distance of a singularity");
    }
};

struct ContinuationResult {
    Cx value{};
    Cx derivative{};
    double est_error = 0.0;
    double wronskian_drift = 0.0;
    OdeStats stats{};
};

namespace detail {

/// y'' = -P(z) y' - Q(z) y for the general Heun equation.
struct HeunSystem {
    HeunParams p;

    std::vector<Cx> singularities() const { return {Cx(0.0), Cx(1.0), p.a}; }

    Cx P(Cx z) const {
        return p.gamma / z + p.delta / (z - 1.0) + p.epsilon / (z - p.a);
    }
    Cx Q(Cx z) const {
        return (p.alpha * p.beta * z - p.q) / (z * (z - 1.0) * (z - p.a));
    }
};

inline double distance_to_singularities(Cx z, const std::vector<Cx>& sing) {
    double d = std::numeric_limits<double>::infinity();
    for (const Cx& c : sing) d = std::min(d, std::abs(z - c));
    return d;
}

} // namespace detail

/// Continue the state (value, derivative) of a solution of the equation given
/// by `p` along the polyline. A companion state is co-integrated and the
/// Wronskian is compared against Abel's identity
///   W(z) = W(z0) (z0/z)^gamma ((z0-1)/(z-1))^delta ((z0-a)/(z-a))^epsilon
/// with the logarithms tracked continuously segment by segment.
inline ContinuationResult continue_state(const HeunParams& p, const ContinuationPath& path,
                                         Cx value, Cx derivative, double tol) {
    const detail::HeunSystem sys{p};
    const auto sing = sys.singularities();
    path.validate(sing);

    // companion state for the Wronskian monitor, chosen so W(z0) != 0 even
    // when the continued solution has a zero at the start point
    const bool use01 = std::abs(value) >= std::abs(derivative);
    OdeState<4> Y{value, derivative, use01 ? Cx(0.0) : Cx(1.0),
                  use01 ? Cx(1.0) : Cx(0.0)};
    const Cx W0 = Y[0] * Y[3] - Y[2] * Y[1];
    Cx abel_log(0.0);
    OdeStats stats;
    const double rtol = tol, atol = tol * 1e-2;

    for (std::size_t i = 0; i + 1 < path.waypoints.size(); ++i) {
        const Cx z0 = path.waypoints[i], z1 = path.waypoints[i + 1];
        const Cx dz = z1 - z0;
        const double L = std::abs(dz);
        if (L == 0.0) continue;
        auto f = [&](double t, const OdeState<4>& y) {
            const Cx z = z0 + t * dz;
            const Cx P = sys.P(z), Q = sys.Q(z);
            return OdeState<4>{dz * y[1], dz * (-P * y[1] - Q * y[0]),
                               dz * y[3], dz * (-P * y[3] - Q * y[2])};
        };
        auto cap = [&](double t) {
            const Cx z = z0 + t * dz;
            return 0.5 * detail::distance_to_singularities(z, sing) / L;
        };
        Y = integrate_unit_interval<4>(f, Y, rtol, atol, cap, &stats);
        // straight segments avoiding the singularities wind by less than pi,
        // so the principal log of the endpoint ratio is the continuous change
        abel_log += p.gamma * std::log(z1 / z0) +
                    p.delta * std::log((z1 - 1.0) / (z0 - 1.0)) +
                    p.epsilon * std::log((z1 - p.a) / (z0 - p.a));
    }

    ContinuationResult out;
    out.value = Y[0];
    out.derivative = Y[1];
    out.stats = stats;
    out.est_error = stats.accumulated_error;
    const Cx Wn = Y[0] * Y[3] - Y[2] * Y[1];
    const Cx Wpred = W0 * std::exp(-abel_log);
    out.wronskian_drift = std::abs(Wn / Wpred - 1.0);
    return out;
}

/// Continue the tagged local solution from the first waypoint (which must lie
/// inside its convergence disc) to the last.
inline ContinuationResult continue_solution(LocalSolutionId id, const SubclassParams& s,
                                            const ContinuationPath& path, double tol,
                                            CutSide side = CutSide::error) {
    if (path.waypoints.size() < 2)
        throw PathTooCloseToSingularity("continuation path needs at least two waypoints");
    LocalSolution sol(id, s);
    if (!sol.in_disc(path.waypoints.front()))
        throw OutOfDisc("continue_solution: path start outside the series disc");
    const Eval012 seed = sol.evaluate012(path.waypoints.front(), tol * 1e-2, side);
    return continue_state(s.to_heun(), path, seed.value, seed.d1, tol);
}

} // namespace heunc
