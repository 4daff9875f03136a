#pragma once

#include <cmath>
#include <complex>
#include <limits>

#include "heunc/errors.hpp"

namespace heunc {

using Cx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Tolerance under which a complex value counts as an integer (pole and
/// admissibility detection).
inline constexpr double kIntegerTol = 1e-9;

/// Relative safety margin kept away from every convergence-disc boundary.
inline constexpr double kDiscMargin = 1e-3;

inline bool is_finite(Cx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Distance from z to the nearest integer on the real axis (complex distance).
inline double integer_distance(Cx z) {
    double re = z.real();
    double dr = re - std::round(re);
    return std::hypot(dr, z.imag());
}

inline bool near_integer(Cx z, double tol = kIntegerTol) {
    return integer_distance(z) <= tol;
}

/// z within tolerance of {0, -1, -2, ...}.
inline bool near_nonpositive_integer(Cx z, double tol = kIntegerTol) {
    return near_integer(z, tol) && std::round(z.real()) <= 0.5;
}

/// Which side of a principal cut to take when the base lands exactly on it.
enum class CutSide {
    error,  // raise BranchCut
    above,  // limit from Im > 0
    below,  // limit from Im < 0
};

/// Principal power w^s = exp(s Log w), cut along (-inf, 0] of the base.
/// On the cut the behaviour is controlled by `side`.
inline Cx principal_pow(Cx w, Cx s, CutSide side = CutSide::error) {
    if (s == Cx(0.0)) return Cx(1.0);
    if (w.imag() == 0.0 && w.real() <= 0.0) {
        if (w.real() == 0.0) throw BranchCut("principal power of zero base");
        switch (side) {
        case CutSide::error:
            throw BranchCut("principal power evaluated on the branch cut");
        case CutSide::above:
            return std::exp(s * Cx(std::log(-w.real()), kPi));
        case CutSide::below:
            return std::exp(s * Cx(std::log(-w.real()), -kPi));
        }
    }
    return std::exp(s * std::log(w));
}

/// Principal logarithm with the same cut-side override.
inline Cx principal_log(Cx w, CutSide side = CutSide::error) {
    if (w.imag() == 0.0 && w.real() <= 0.0) {
        if (w.real() == 0.0) throw BranchCut("log of zero");
        switch (side) {
        case CutSide::error:
            throw BranchCut("principal log evaluated on the branch cut");
        case CutSide::above:
            return Cx(std::log(-w.real()), kPi);
        case CutSide::below:
            return Cx(std::log(-w.real()), -kPi);
        }
    }
    return std::log(w);
}

} // namespace heunc
