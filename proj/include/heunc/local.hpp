#pragma once

// The eight local solutions of the subclass equation
//
//   y'' + (gamma/z + delta/(z-1) + delta/(z+1)) y' + alpha beta /((z-1)(z+1)) y = 0
//
// as prefactor * Hl(series variable) objects, plus evaluation of the general
// local Heun function and residuals of the alternate local-solution
// representations.

#include <array>
#include <cmath>
#include <memory>
#include <string>

#include "heunc/errors.hpp"
#include "heunc/params.hpp"
#include "heunc/scalar.hpp"
#include "heunc/series.hpp"

namespace heunc {

enum class LocalSolutionId {
    y01, y02,      // expansion about 0, exponents 0 and 1-gamma
    yp1, yp2,      // about +1, exponents 0 and 1-delta
    ym1, ym2,      // about -1, exponents 0 and 1-delta
    yi1, yi2,      // about infinity, exponents alpha and beta
};

inline const char* to_string(LocalSolutionId id) {
    switch (id) {
    case LocalSolutionId::y01: return "y01";
    case LocalSolutionId::y02: return "y02";
    case LocalSolutionId::yp1: return "y+1";
    case LocalSolutionId::yp2: return "y+2";
    case LocalSolutionId::ym1: return "y-1";
    case LocalSolutionId::ym2: return "y-2";
    case LocalSolutionId::yi1: return "yinf1";
    case LocalSolutionId::yi2: return "yinf2";
    }
    return "?";
}

/// Parse "y01", "y+1"/"yp1", "y-2"/"ym2", "yinf1"/"yi1", ...
inline LocalSolutionId parse_solution_id(const std::string& s) {
    if (s == "y01") return LocalSolutionId::y01;
    if (s == "y02") return LocalSolutionId::y02;
    if (s == "y+1" || s == "yp1") return LocalSolutionId::yp1;
    if (s == "y+2" || s == "yp2") return LocalSolutionId::yp2;
    if (s == "y-1" || s == "ym1") return LocalSolutionId::ym1;
    if (s == "y-2" || s == "ym2") return LocalSolutionId::ym2;
    if (s == "yinf1" || s == "yi1") return LocalSolutionId::yi1;
    if (s == "yinf2" || s == "yi2") return LocalSolutionId::yi2;
    throw InadmissibleError("unknown local solution id: " + s);
}

constexpr std::array<LocalSolutionId, 8> kAllSolutions = {
    LocalSolutionId::y01, LocalSolutionId::y02, LocalSolutionId::yp1,
    LocalSolutionId::yp2, LocalSolutionId::ym1, LocalSolutionId::ym2,
    LocalSolutionId::yi1, LocalSolutionId::yi2,
};

/// Value and first two z-derivatives of a local solution.
struct Eval012 {
    Cx value{};
    Cx d1{};
    Cx d2{};
    double tail_bound = 0.0;
};

/// One local solution: prefactor (base(z))^power times an Hl series in the
/// mapped variable w(z). The series coefficients are memoized, so keep the
/// object alive across a sweep.
class LocalSolution {
public:
    LocalSolution(LocalSolutionId id, const SubclassParams& s)
        : id_(id), sub_(s), series_(make_series(id, s)) {}

    LocalSolutionId id() const { return id_; }
    const FrobeniusSeries& series() const { return *series_; }

    /// Strict convergence-disc test (with the global safety margin).
    bool in_disc(Cx z) const {
        const Cx w = map_w(z);
        return std::abs(w) < series_->radius() * (1.0 - kDiscMargin);
    }

    Cx evaluate(Cx z, double tol, CutSide side = CutSide::error) const {
        return evaluate012(z, tol, side, false).value;
    }

    /// Value plus first and second derivative with respect to z.
    Eval012 evaluate012(Cx z, double tol, CutSide side = CutSide::error,
                        bool derivatives = true) const {
        if (!in_disc(z))
            throw OutOfDisc(std::string("eval_local(") + to_string(id_) +
                            "): point outside the series convergence disc");
        const Cx w = map_w(z);
        const SeriesValue sv = series_->evaluate(w, tol, derivatives);
        Eval012 out;

        // prefactor p(z) = base^power with base linear in z (or z itself)
        Cx p(1.0), p1(0.0), p2(0.0);
        const Cx b = pref_base(z);
        const Cx s = pref_power();
        if (s != Cx(0.0)) {
            const Cx bp = pref_base_d();     // d base / dz (constant)
            p = principal_pow(b, s, side);
            if (derivatives) {
                p1 = s * bp * p / b;
                p2 = s * (s - 1.0) * bp * bp * p / (b * b);
            }
        }
        out.tail_bound = sv.tail_bound * std::abs(p);
        // chain rule through w(z)
        const Cx w1 = map_w_d1(z);
        if (!derivatives) {
            out.value = p * sv.value;
            return out;
        }
        const Cx w2 = map_w_d2(z);
        const Cx f = sv.value;
        const Cx f1 = sv.d1 * w1;
        const Cx f2 = sv.d2 * w1 * w1 + sv.d1 * w2;
        out.value = p * f;
        out.d1 = p1 * f + p * f1;
        out.d2 = p2 * f + 2.0 * p1 * f1 + p * f2;
        return out;
    }

private:
    static std::shared_ptr<FrobeniusSeries> make_series(LocalSolutionId id,
                                                        const SubclassParams& s) {
        const Cx al = s.alpha, be = s.beta, ga = s.gamma, de = s.delta();
        switch (id) {
        case LocalSolutionId::y01:
            return std::make_shared<FrobeniusSeries>(
                HeunParams(Cx(-1), Cx(0), al, be, ga, de), Cx(0), Cx(0));
        case LocalSolutionId::y02:
            return std::make_shared<FrobeniusSeries>(
                HeunParams(Cx(-1), Cx(0), 1.0 + al - ga, 1.0 + be - ga, 2.0 - ga, de),
                Cx(0), 1.0 - ga);
        case LocalSolutionId::yp1:
            return std::make_shared<FrobeniusSeries>(
                HeunParams(Cx(2), al * be, al, be, de, ga), Cx(1), Cx(0));
        case LocalSolutionId::yp2:
            return std::make_shared<FrobeniusSeries>(
                HeunParams(Cx(2), al * be + (1.0 - de) * (de + 2.0 * ga),
                           1.0 + al - de, 1.0 + be - de, 2.0 - de, ga),
                Cx(1), 1.0 - de);
        case LocalSolutionId::ym1:
            return std::make_shared<FrobeniusSeries>(
                HeunParams(Cx(0.5), al * be / 2.0, al, be, de, de), Cx(-1), Cx(0));
        case LocalSolutionId::ym2:
            return std::make_shared<FrobeniusSeries>(
                HeunParams(Cx(0.5),
                           ((ga + de - al) * (2.0 * ga + de - be) - ga * be) / 2.0,
                           ga + de - be, ga + de - al, 2.0 - de, de),
                Cx(-1), 1.0 - de);
        case LocalSolutionId::yi1:
            return std::make_shared<FrobeniusSeries>(
                HeunParams(Cx(-1), Cx(0), al, al + 1.0 - ga, 1.0 + al - be, de),
                Cx(0), -al); // center infinity; see map_w
        case LocalSolutionId::yi2:
            return std::make_shared<FrobeniusSeries>(
                HeunParams(Cx(-1), Cx(0), be, be + 1.0 - ga, 1.0 + be - al, de),
                Cx(0), -be);
        }
        throw Error("unreachable");
    }

    Cx map_w(Cx z) const {
        switch (id_) {
        case LocalSolutionId::y01: case LocalSolutionId::y02: return z;
        case LocalSolutionId::yp1: case LocalSolutionId::yp2: return 1.0 - z;
        case LocalSolutionId::ym1: case LocalSolutionId::ym2: return (z + 1.0) / 2.0;
        case LocalSolutionId::yi1: case LocalSolutionId::yi2: return 1.0 / z;
        }
        return {};
    }
    Cx map_w_d1(Cx z) const {
        switch (id_) {
        case LocalSolutionId::y01: case LocalSolutionId::y02: return Cx(1.0);
        case LocalSolutionId::yp1: case LocalSolutionId::yp2: return Cx(-1.0);
        case LocalSolutionId::ym1: case LocalSolutionId::ym2: return Cx(0.5);
        case LocalSolutionId::yi1: case LocalSolutionId::yi2: return -1.0 / (z * z);
        }
        return {};
    }
    Cx map_w_d2(Cx z) const {
        switch (id_) {
        case LocalSolutionId::yi1: case LocalSolutionId::yi2: return 2.0 / (z * z * z);
        default: return Cx(0.0);
        }
    }
    Cx pref_base(Cx z) const {
        switch (id_) {
        case LocalSolutionId::y02: return z;
        case LocalSolutionId::yp2: return 1.0 - z;
        case LocalSolutionId::ym2: return z + 1.0;
        case LocalSolutionId::yi1: case LocalSolutionId::yi2: return z;
        default: return Cx(1.0);
        }
    }
    Cx pref_base_d() const {
        return (id_ == LocalSolutionId::yp2) ? Cx(-1.0) : Cx(1.0);
    }
    Cx pref_power() const {
        const Cx de = sub_.delta();
        switch (id_) {
        case LocalSolutionId::y02: return 1.0 - sub_.gamma;
        case LocalSolutionId::yp2: case LocalSolutionId::ym2: return 1.0 - de;
        case LocalSolutionId::yi1: return -sub_.alpha;
        case LocalSolutionId::yi2: return -sub_.beta;
        default: return Cx(0.0);
        }
    }

    LocalSolutionId id_;
    SubclassParams sub_;
    std::shared_ptr<FrobeniusSeries> series_;
};

/// The y-2 accessory parameter exactly as printed in the defining display.
inline Cx ym2_accessory_literal(const SubclassParams& s) {
    const Cx ga = s.gamma, de = s.delta(), al = s.alpha, be = s.beta;
    return ((ga + de - al) * (2.0 * ga + de - be) - ga * be) / 2.0;
}

/// The same accessory obtained by specializing the general y_{a2} form at
/// a = -1, q = 0, epsilon = delta. Equal to the literal form whenever
/// 2 delta = alpha + beta + 1 - gamma (the subclass constraint).
inline Cx ym2_accessory_from_general(const SubclassParams& s) {
    const Cx ga = s.gamma, de = s.delta();
    const Cx a(-1.0), q(0.0), ep = de;
    return (-q + a * (ga + de - s.alpha) * (ga + de - s.beta) + ga * (ep - 1.0)) / (a - 1.0);
}

/// Convenience one-shot evaluation (builds the series afresh; use
/// LocalSolution directly for sweeps).
inline Cx eval_local(LocalSolutionId id, const SubclassParams& s, Cx z, double tol,
                     CutSide side = CutSide::error) {
    return LocalSolution(id, s).evaluate(z, tol, side);
}

/// Truncated local Heun function Hl(a, q; alpha, beta, gamma, delta; z),
/// |z| < min{1, |a|}.
inline Cx eval_general_hl(const HeunParams& p, Cx z, double tol) {
    if (std::abs(z) >= p.radius() * (1.0 - kDiscMargin))
        throw OutOfDisc("eval_general_hl: |z| >= min{1,|a|}");
    FrobeniusSeries s(p, Cx(0), Cx(0));
    return s.evaluate(z, tol).value;
}

// ---------------------------------------------------------------------------
// Alternate representations of local solutions (the relations the connection
// matrices are built from) as numeric residuals.
// ---------------------------------------------------------------------------

/// |y11 - z^{1-gamma} Hl(...)|: the exponent-0 solution at z=1 against its
/// index-shifted representation. The shifted accessory parameter is derived
/// from the index transformation at 0 (q -> q + (1-gamma)(epsilon + a delta)),
/// which gives -q + alpha beta + (1-gamma)(1-a)delta.
inline double maier_y11_shift_residual(const HeunParams& p, Cx z, double tol = 1e-12,
                                       CutSide side = CutSide::error) {
    const HeunParams lhs(1.0 - p.a, p.alpha * p.beta - p.q,
                         p.alpha, p.beta, p.delta, p.gamma);
    const Cx acc = -p.q + p.alpha * p.beta + (1.0 - p.gamma) * (1.0 - p.a) * p.delta;
    const HeunParams rhs(1.0 - p.a, acc, 1.0 + p.alpha - p.gamma,
                         1.0 + p.beta - p.gamma, p.delta, 2.0 - p.gamma);
    const Cx l = eval_general_hl(lhs, 1.0 - z, tol);
    const Cx r = principal_pow(z, 1.0 - p.gamma, side) * eval_general_hl(rhs, 1.0 - z, tol);
    return std::abs(l - r);
}

/// |y_{a1} - (z/a)^{1-gamma} Hl(...)|: the exponent-0 solution at z=a against
/// its index-shifted representation.
inline double maier_ya1_shift_residual(const HeunParams& p, Cx z, double tol = 1e-12,
                                       CutSide side = CutSide::error) {
    const Cx am1 = p.a - 1.0;
    const HeunParams lhs(p.a / am1, (p.a * p.alpha * p.beta - p.q) / am1,
                         p.alpha, p.beta, p.epsilon, p.delta);
    const Cx Q = (p.a * (1.0 + p.alpha - p.gamma) * (1.0 + p.beta - p.gamma) - p.q -
                  (1.0 - p.gamma) * (p.alpha + p.beta + 1.0 - p.gamma + am1 * p.delta)) /
                 am1;
    const HeunParams rhs(p.a / am1, Q, 1.0 + p.alpha - p.gamma, 1.0 + p.beta - p.gamma,
                         p.epsilon, p.delta);
    const Cx w = (z - p.a) / (1.0 - p.a);
    const Cx l = eval_general_hl(lhs, w, tol);
    const Cx r = principal_pow(z / p.a, 1.0 - p.gamma, side) * eval_general_hl(rhs, w, tol);
    return std::abs(l - r);
}

/// |y11 - z^{-alpha} Hl(...; 1 - 1/z)|: the exponent-0 solution at z=1 against
/// its infinity-flavoured representation.
inline double maier_y11_inf_residual(const HeunParams& p, Cx z, double tol = 1e-12,
                                     CutSide side = CutSide::error) {
    const HeunParams lhs(1.0 - p.a, p.alpha * p.beta - p.q,
                         p.alpha, p.beta, p.delta, p.gamma);
    const HeunParams rhs(1.0 - 1.0 / p.a,
                         (-p.q + p.alpha * ((p.a - 1.0) * p.delta + p.beta)) / p.a,
                         p.alpha, p.alpha + 1.0 - p.gamma, p.delta,
                         1.0 + p.alpha - p.beta);
    const Cx l = eval_general_hl(lhs, 1.0 - z, tol);
    const Cx r = principal_pow(z, -p.alpha, side) * eval_general_hl(rhs, 1.0 - 1.0 / z, tol);
    return std::abs(l - r);
}

/// The a = -1 relation: |y_{a1} - (-z)^{-alpha} Hl(...; (1/z - a)/(1 - a))|.
/// Requires p.a = -1 (general accessory q allowed).
inline double maier_aneg1_assertion_residual(const HeunParams& p, Cx z,
                                             double tol = 1e-12,
                                             CutSide side = CutSide::error) {
    if (std::abs(p.a + 1.0) > kIntegerTol)
        throw InadmissibleError("the a=-1 relation requires a = -1");
    const Cx am1 = p.a - 1.0;
    const HeunParams lhs(p.a / am1, (p.a * p.alpha * p.beta - p.q) / am1,
                         p.alpha, p.beta, p.epsilon, p.delta);
    const Cx oma = 1.0 - p.a; // = 2
    const HeunParams rhs(1.0 / oma,
                         (-p.q + p.alpha * ((p.alpha + 1.0 - p.gamma - p.delta) * oma + p.beta)) / oma,
                         p.alpha, p.alpha + 1.0 - p.gamma, p.epsilon, p.delta);
    const Cx l = eval_general_hl(lhs, (z - p.a) / oma, tol);
    const Cx r = principal_pow(-z, -p.alpha, side) *
                 eval_general_hl(rhs, (1.0 / z - p.a) / oma, tol);
    return std::abs(l - r);
}

} // namespace heunc
