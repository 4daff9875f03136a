#pragma once

// Parameter tuples of the Heun equation
//
//   y'' + (gamma/z + delta/(z-1) + epsilon/(z-a)) y'
//       + (alpha beta z - q) / (z (z-1) (z-a)) y = 0
//
// with epsilon = alpha + beta + 1 - gamma - delta, and of the subclass
// a = -1, q = 0, delta = epsilon = (alpha + beta + 1 - gamma)/2.

#include <algorithm>
#include <string>

#include "heunc/errors.hpp"
#include "heunc/scalar.hpp"

namespace heunc {

struct HeunParams {
    Cx a;      // third finite singularity
    Cx q;      // accessory parameter
    Cx alpha;
    Cx beta;
    Cx gamma;
    Cx delta;
    Cx epsilon; // always alpha + beta + 1 - gamma - delta

    HeunParams(Cx a_, Cx q_, Cx alpha_, Cx beta_, Cx gamma_, Cx delta_)
        : a(a_), q(q_), alpha(alpha_), beta(beta_), gamma(gamma_), delta(delta_),
          epsilon(alpha_ + beta_ + 1.0 - gamma_ - delta_) {
        if (std::abs(a) <= kIntegerTol || std::abs(a - 1.0) <= kIntegerTol)
            throw InadmissibleError("HeunParams: a must differ from 0 and 1");
    }

    /// Convergence radius of the Frobenius series at 0: min{1, |a|}.
    double radius() const { return std::min(1.0, std::abs(a)); }
};

struct SubclassParams {
    Cx alpha;
    Cx beta;
    Cx gamma;

    SubclassParams(Cx alpha_, Cx beta_, Cx gamma_)
        : alpha(alpha_), beta(beta_), gamma(gamma_) {}

    /// delta = epsilon = (alpha + beta + 1 - gamma)/2.
    Cx delta() const { return (alpha + beta + 1.0 - gamma) / 2.0; }

    /// The induced full parameter tuple (a = -1, q = 0).
    HeunParams to_heun() const {
        return HeunParams(Cx(-1.0), Cx(0.0), alpha, beta, gamma, delta());
    }

    /// gamma, delta, epsilon, alpha - beta all non-integer (within tolerance).
    bool admissible(double tol = kIntegerTol) const {
        const Cx d = delta();
        return !near_integer(gamma, tol) && !near_integer(d, tol) &&
               !near_integer(alpha - beta, tol);
    }

    /// Re(1 - delta) > 0, the domain where the closed-form connection coefficients hold.
    bool connection_domain() const { return (1.0 - delta()).real() > 0.0; }

    /// Human-readable reason a parameter set is rejected; empty when fine.
    std::string admissibility_message(double tol = kIntegerTol) const {
        const Cx d = delta();
        if (near_integer(gamma, tol))
            return "gamma is within " + std::to_string(tol) + " of an integer";
        if (near_integer(d, tol))
            return "delta = (alpha+beta+1-gamma)/2 is within tolerance of an integer";
        if (near_integer(alpha - beta, tol))
            return "alpha - beta is within tolerance of an integer";
        return {};
    }

    void require_admissible() const {
        const std::string msg = admissibility_message();
        if (!msg.empty()) throw InadmissibleError("inadmissible parameters: " + msg);
    }
};

} // namespace heunc
