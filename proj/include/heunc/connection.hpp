#pragma once

// Closed-form connection coefficients of the subclass and the four 2x2
// connection matrices between the local fundamental pairs.

#include <array>
#include <string>

#include "heunc/errors.hpp"
#include "heunc/local.hpp"
#include "heunc/params.hpp"
#include "heunc/scalar.hpp"
#include "heunc/specfun.hpp"

namespace heunc {

/// q1(alpha,beta,gamma) =
///   Gamma((gamma+1-alpha-beta)/2) Gamma((gamma+1)/2)
///   / (Gamma((gamma+1-alpha)/2) Gamma((gamma+1-beta)/2)),
/// the coefficient of the exponent-0 partner. Requires Re(1-delta) > 0,
/// equivalently Re((gamma+1-alpha-beta)/2) > 0.
inline Cx q1(Cx alpha, Cx beta, Cx gamma) {
    const Cx g2 = (gamma + 1.0) / 2.0;
    return gauss_2f1_at_one(alpha / 2.0, beta / 2.0, g2);
}

/// q2(alpha,beta,gamma) = 2^{1-delta} Gamma(delta-1) Gamma((gamma+1)/2)
///   / (Gamma(alpha/2) Gamma(beta/2)), delta = (alpha+beta+1-gamma)/2,
/// the coefficient of the exponent-(1-delta) partner. 1/Gamma is treated as
/// entire: exact 0 when alpha/2 or beta/2 sits at a non-positive integer.
inline Cx q2(Cx alpha, Cx beta, Cx gamma) {
    const Cx de = (alpha + beta + 1.0 - gamma) / 2.0;
    if ((1.0 - de).real() <= 0.0)
        throw DivergenceError("q2: outside the connection domain Re(1-delta) > 0");
    if (near_nonpositive_integer(de - 1.0))
        throw PoleError("q2: Gamma(delta-1) at a pole");
    if (near_nonpositive_integer(alpha / 2.0) || near_nonpositive_integer(beta / 2.0))
        return Cx(0.0);
    // grouping keeps the alpha <-> beta symmetry bit-exact
    const Cx lg = (log_gamma(de - 1.0) + log_gamma((gamma + 1.0) / 2.0)) -
                  (log_gamma(alpha / 2.0) + log_gamma(beta / 2.0));
    return principal_pow(Cx(2.0), 1.0 - de) * std::exp(lg);
}

struct ConnectionPair {
    Cx c11{};
    Cx c12{};
};

/// (c11, c12) with y01 = c11 y+1 + c12 y+2 = c11 y-1 + c12 y-2 (the plus- and
/// minus-side coefficients coincide).
inline ConnectionPair connection_pair(const SubclassParams& s) {
    s.require_admissible();
    if (!s.connection_domain())
        throw DivergenceError("connection_pair: Re(1-delta) > 0 required");
    return {q1(s.alpha, s.beta, s.gamma), q2(s.alpha, s.beta, s.gamma)};
}

enum class MatrixKind { zero_plus, zero_minus, inf_plus, inf_minus };

inline const char* to_string(MatrixKind k) {
    switch (k) {
    case MatrixKind::zero_plus: return "0+";
    case MatrixKind::zero_minus: return "0-";
    case MatrixKind::inf_plus: return "inf+";
    case MatrixKind::inf_minus: return "inf-";
    }
    return "?";
}

inline MatrixKind parse_matrix_kind(const std::string& s) {
    if (s == "0+") return MatrixKind::zero_plus;
    if (s == "0-") return MatrixKind::zero_minus;
    if (s == "inf+" || s == "∞+") return MatrixKind::inf_plus;
    if (s == "inf-" || s == "∞-") return MatrixKind::inf_minus;
    throw InadmissibleError("unknown connection matrix kind: " + s);
}

/// Realization of the (-)^w phases: (-) = e^{+i pi} or e^{-i pi}.
enum class BranchTag { phase_plus, phase_minus };

inline const char* to_string(BranchTag t) {
    return t == BranchTag::phase_plus ? "plus" : "minus";
}

inline Cx unit_phase(BranchTag t, Cx w) {
    const double sgn = (t == BranchTag::phase_plus) ? 1.0 : -1.0;
    return std::exp(Cx(0.0, sgn * kPi) * w);
}

/// Branch tags under which each matrix connects the principal-branch series
/// values in the upper-half-plane continuation sector (limits from Im z > 0 on
/// the cuts). Resolved empirically by the continuation oracle and frozen here;
/// the lower-half-plane sector flips every tag.
inline BranchTag default_branch(MatrixKind k) {
    switch (k) {
    case MatrixKind::zero_plus: return BranchTag::phase_plus;  // no phase appears
    case MatrixKind::zero_minus: return BranchTag::phase_plus;
    case MatrixKind::inf_plus: return BranchTag::phase_minus;
    case MatrixKind::inf_minus: return BranchTag::phase_plus;
    }
    return BranchTag::phase_plus;
}

/// The (alpha, beta, gamma) triples feeding q1/q2 in each row of a matrix.
struct RowTriple {
    Cx alpha, beta, gamma;
    bool domain_ok = false; // q1/q2 preconditions hold for this triple
};

struct ConnectionMatrix {
    MatrixKind kind{};
    BranchTag branch_tag{};
    std::array<std::array<Cx, 2>, 2> entries{};     // row-major
    std::array<RowTriple, 2> rows{};
    std::array<LocalSolutionId, 2> from{};          // pair being expanded
    std::array<LocalSolutionId, 2> to{};            // basis pair

    Cx determinant() const {
        return entries[0][0] * entries[1][1] - entries[0][1] * entries[1][0];
    }
};

namespace detail {

inline RowTriple make_row(Cx a, Cx b, Cx g) {
    RowTriple r{a, b, g, false};
    const Cx de = (a + b + 1.0 - g) / 2.0;
    r.domain_ok = (1.0 - de).real() > 0.0 && !near_nonpositive_integer(de - 1.0) &&
                  !near_nonpositive_integer((g + 1.0) / 2.0);
    return r;
}

inline void require_row(const RowTriple& r, int idx) {
    if (!r.domain_ok)
        throw DivergenceError("connection matrix row " + std::to_string(idx + 1) +
                              ": shifted triple leaves the connection-coefficient domain");
}

} // namespace detail

/// The connection matrix of `kind`:
///   (y01, y02)^T    = C_{0+-}  (y+-1, y+-2)^T
///   (yinf1, yinf2)^T = C_{inf+-} (y+-1, y+-2)^T
/// with the (-)^w phases realized per branch_tag.
inline ConnectionMatrix matrix(MatrixKind kind, const SubclassParams& s,
                               BranchTag tag) {
    s.require_admissible();
    const Cx al = s.alpha, be = s.beta, ga = s.gamma, de = s.delta();
    ConnectionMatrix m;
    m.kind = kind;
    m.branch_tag = tag;
    switch (kind) {
    case MatrixKind::zero_plus:
    case MatrixKind::zero_minus: {
        m.from = {LocalSolutionId::y01, LocalSolutionId::y02};
        m.to = (kind == MatrixKind::zero_plus)
                   ? std::array<LocalSolutionId, 2>{LocalSolutionId::yp1, LocalSolutionId::yp2}
                   : std::array<LocalSolutionId, 2>{LocalSolutionId::ym1, LocalSolutionId::ym2};
        m.rows[0] = detail::make_row(al, be, ga);
        m.rows[1] = detail::make_row(1.0 + al - ga, 1.0 + be - ga, 2.0 - ga);
        detail::require_row(m.rows[0], 0);
        detail::require_row(m.rows[1], 1);
        m.entries[0][0] = q1(al, be, ga);
        m.entries[0][1] = q2(al, be, ga);
        Cx r21 = q1(1.0 + al - ga, 1.0 + be - ga, 2.0 - ga);
        Cx r22 = q2(1.0 + al - ga, 1.0 + be - ga, 2.0 - ga);
        if (kind == MatrixKind::zero_minus) {
            const Cx ph = unit_phase(tag, 1.0 - ga);
            r21 *= ph;
            r22 *= ph;
        }
        m.entries[1][0] = r21;
        m.entries[1][1] = r22;
        break;
    }
    case MatrixKind::inf_plus: {
        m.from = {LocalSolutionId::yi1, LocalSolutionId::yi2};
        m.to = {LocalSolutionId::yp1, LocalSolutionId::yp2};
        m.rows[0] = detail::make_row(al, al + 1.0 - ga, 1.0 + al - be);
        m.rows[1] = detail::make_row(be, be + 1.0 - ga, 1.0 + be - al);
        detail::require_row(m.rows[0], 0);
        detail::require_row(m.rows[1], 1);
        const Cx ph = unit_phase(tag, de - 1.0);
        m.entries[0][0] = q1(al, al + 1.0 - ga, 1.0 + al - be);
        m.entries[0][1] = ph * q2(al, al + 1.0 - ga, 1.0 + al - be);
        m.entries[1][0] = q1(be, be + 1.0 - ga, 1.0 + be - al);
        m.entries[1][1] = ph * q2(be, be + 1.0 - ga, 1.0 + be - al);
        break;
    }
    case MatrixKind::inf_minus: {
        m.from = {LocalSolutionId::yi1, LocalSolutionId::yi2};
        m.to = {LocalSolutionId::ym1, LocalSolutionId::ym2};
        m.rows[0] = detail::make_row(al, al + 1.0 - ga, 1.0 + al - be);
        m.rows[1] = detail::make_row(be, be + 1.0 - ga, 1.0 + be - al);
        detail::require_row(m.rows[0], 0);
        detail::require_row(m.rows[1], 1);
        m.entries[0][0] = unit_phase(tag, -al) * q1(al, al + 1.0 - ga, 1.0 + al - be);
        m.entries[0][1] = unit_phase(tag, de - al - 1.0) * q2(al, al + 1.0 - ga, 1.0 + al - be);
        m.entries[1][0] = unit_phase(tag, -be) * q1(be, be + 1.0 - ga, 1.0 + be - al);
        m.entries[1][1] = unit_phase(tag, de - be - 1.0) * q2(be, be + 1.0 - ga, 1.0 + be - al);
        break;
    }
    }
    return m;
}

inline ConnectionMatrix matrix(MatrixKind kind, const SubclassParams& s) {
    return matrix(kind, s, default_branch(kind));
}

} // namespace heunc
