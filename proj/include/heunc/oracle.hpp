#pragma once

// Independent numerical verification machinery: the limit sequences behind the
// c12 coefficient, quadrature checks of the Beta and tail-integral lemmas, the
// gamma-ratio asymptotics check, series-overlap and continuation-based
// residuals for the connection matrices, and a seeded admissible-parameter
// sampler.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "heunc/connection.hpp"
#include "heunc/continuation.hpp"
#include "heunc/extrapolate.hpp"
#include "heunc/local.hpp"
#include "heunc/params.hpp"
#include "heunc/quadrature.hpp"
#include "heunc/scalar.hpp"
#include "heunc/series.hpp"
#include "heunc/specfun.hpp"

namespace heunc {

// ---------------------------------------------------------------------------
// Limit sequences
// ---------------------------------------------------------------------------

struct LimitSequenceRow {
    std::size_t n = 0;
    Cx raw{};          // weighted sequence value at this n
    Cx extrapolant{};  // Richardson over {n, n/2, n/4, n/8} when available
    bool has_extrapolant = false;
};

struct LimitSequenceResult {
    Cx even_limit{};   // estimates c+12 + c-12 = 2 q2
    Cx odd_limit{};    // estimates c+12 - c-12 = 0
    double even_agreement = 0.0;
    std::vector<LimitSequenceRow> table; // even-sequence table for reporting
    bool order_flag_ok = true;  // raw error halves from n to 2n (observed-order check)
};

namespace detail {

/// Gamma(2n+1) Gamma(delta-1) / Gamma(2n-1+delta) * A_{2n}  (even weight),
/// Gamma(2n+2) Gamma(delta-1) / Gamma(2n+delta)   * A_{2n+1} (odd weight).
inline Cx weighted_even(const std::vector<Cx>& A, Cx de, std::size_t n) {
    const double tn = 2.0 * static_cast<double>(n);
    const Cx w = std::exp(log_gamma(Cx(tn + 1.0)) + log_gamma(de - 1.0) -
                          log_gamma(tn - 1.0 + de));
    return w * A[2 * n];
}

inline Cx weighted_odd(const std::vector<Cx>& A, Cx de, std::size_t n) {
    if (A[2 * n + 1] == Cx(0.0)) return Cx(0.0);
    const double tn = 2.0 * static_cast<double>(n);
    const Cx w = std::exp(log_gamma(Cx(tn + 2.0)) + log_gamma(de - 1.0) -
                          log_gamma(tn + de));
    return w * A[2 * n + 1];
}

} // namespace detail

/// Richardson-extrapolated limits of the weighted coefficient sequences. The
/// coefficients come from the general three-term recurrence (not the closed
/// form), so the result is an oracle independent of q2's Gamma expression.
/// Throws NonConvergence when the final two extrapolation levels disagree by
/// more than `tol` (relative).
inline LimitSequenceResult limit_sequence_c12(const SubclassParams& s, std::size_t n_max,
                                              double tol = 1e-6,
                                              bool require_convergence = true) {
    s.require_admissible();
    if (!s.connection_domain())
        throw DivergenceError("limit_sequence_c12: Re(1-delta) > 0 required");
    if (n_max < 8) throw InadmissibleError("limit_sequence_c12: n_max must be >= 8");

    const Cx de = s.delta();
    const std::vector<Cx> A = general_coefficients(s.to_heun(), 2 * n_max + 1);

    std::vector<std::size_t> nodes;
    for (std::size_t n = n_max; nodes.size() < 4 && n >= 2; n /= 2) nodes.push_back(n);

    std::vector<Cx> even_vals, odd_vals;
    std::vector<double> hs;
    for (std::size_t n : nodes) {
        even_vals.push_back(detail::weighted_even(A, de, n));
        odd_vals.push_back(detail::weighted_odd(A, de, n));
        hs.push_back(1.0 / static_cast<double>(n));
    }
    const Extrapolation even_ex = richardson(even_vals, hs);
    const Extrapolation odd_ex = richardson(odd_vals, hs);

    LimitSequenceResult out;
    out.even_limit = even_ex.limit;
    out.odd_limit = odd_ex.limit;
    out.even_agreement = even_ex.agreement;
    if (require_convergence &&
        even_ex.agreement > tol * std::max(1.0, std::abs(even_ex.limit)))
        throw NonConvergence("limit_sequence_c12: extrapolants disagree beyond tolerance");

    // observed-order check: raw error should roughly halve from n/2 to n
    const Cx L = even_ex.limit;
    const double e_half = std::abs(even_vals[1] - L);
    const double e_full = std::abs(even_vals[0] - L);
    if (e_half > 0.0) {
        const double ratio = e_full / e_half;
        out.order_flag_ok = (ratio >= 0.4 && ratio <= 0.6);
    }

    for (std::size_t n = 1; n <= n_max; ++n) {
        LimitSequenceRow row;
        row.n = n;
        row.raw = detail::weighted_even(A, de, n);
        if (n >= 8 && n % 8 == 0) {
            std::vector<Cx> v;
            std::vector<double> h;
            for (std::size_t m = n; v.size() < 4 && m >= 1; m /= 2) {
                v.push_back(detail::weighted_even(A, de, m));
                h.push_back(1.0 / static_cast<double>(m));
            }
            row.extrapolant = richardson(v, h).limit;
            row.has_extrapolant = true;
        }
        out.table.push_back(row);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Lemma checks
// ---------------------------------------------------------------------------

/// |B(x,y) - quadrature of int_0^1 t^{x-1}(1-t)^{y-1} dt|.
inline double lemma1_beta_gap(Cx x, Cx y, double tol = 1e-12) {
    if (x.real() <= 0.0 || y.real() <= 0.0)
        throw DivergenceError("lemma1_beta_gap: Re x, Re y > 0 required");
    const auto quad = integrate01(
        [&](double t, double omt) {
            return std::exp((x - 1.0) * std::log(t) + (y - 1.0) * std::log(omt));
        },
        tol);
    return std::abs(beta(x, y) - quad.value);
}

struct Lemma2Point {
    double z = 0.0;
    double error = 0.0; // |Gamma(z+a)/Gamma(z+b) z^{b-a} - 1|
};

struct Lemma2Result {
    Cx a{}, b{};
    std::vector<Lemma2Point> points;
    bool monotone = true;
};

/// Gamma-ratio asymptotics: error of Gamma(z+a)/Gamma(z+b) ~ z^{a-b} along a
/// list of growing real z.
inline Lemma2Result lemma2_ratio_check(Cx a, Cx b, const std::vector<double>& zs) {
    Lemma2Result out;
    out.a = a;
    out.b = b;
    double prev = std::numeric_limits<double>::infinity();
    for (double z : zs) {
        const Cx v = std::exp(log_gamma(z + a) - log_gamma(z + b) +
                              (b - a) * std::log(Cx(z)));
        const double e = std::abs(v - 1.0);
        out.monotone = out.monotone && (e < prev);
        prev = e;
        out.points.push_back({z, e});
    }
    return out;
}

struct Lemma3Result {
    Cx lhs{}; // quadrature of int_1^rho (z-1)^alpha z^{-k-1} dz
    Cx rhs{}; // Gamma(k-alpha) Gamma(alpha+1) / Gamma(k+1)
    double gap = 0.0;
};

/// Tail-integral check: lhs by endpoint-aware quadrature (substitution
/// t = z-1, graded toward the t^alpha singularity), rhs by gammas; the gap is
/// O(rho^{-k}).
inline Lemma3Result lemma3_integral_check(Cx alpha, unsigned k, double rho,
                                          double tol = 1e-10) {
    if (!(rho > 1.0 && rho < 2.0))
        throw InadmissibleError("lemma3_integral_check: rho must lie in (1,2)");
    if (!(static_cast<double>(k) > alpha.real() && alpha.real() > 0.0))
        throw InadmissibleError("lemma3_integral_check: need k > Re alpha > 0");
    const double L = rho - 1.0;
    const double kk = static_cast<double>(k);
    const auto quad = integrate01(
        [&](double t, double) {
            const double tt = L * t;
            return std::exp(alpha * std::log(tt) - (kk + 1.0) * std::log1p(tt));
        },
        tol, 14);
    Lemma3Result out;
    out.lhs = quad.value * L;
    out.rhs = std::exp(log_gamma(kk - alpha) + log_gamma(alpha + 1.0) -
                       log_gamma(Cx(kk + 1.0)));
    out.gap = std::abs(out.lhs - out.rhs);
    return out;
}

// ---------------------------------------------------------------------------
// Connection-identity residuals
// ---------------------------------------------------------------------------

struct RowResidual {
    double max_residual = 0.0;
    double mean_residual = 0.0;
    std::size_t n_points = 0;
};

struct MatrixResidualReport {
    MatrixKind kind{};
    BranchTag branch_tag{};
    std::array<RowResidual, 2> rows{};
    double max_residual = 0.0;
};

namespace detail {

inline void fold(RowResidual& r, double v) {
    r.max_residual = std::max(r.max_residual, v);
    r.mean_residual += v;
    r.n_points++;
}

inline void finish(RowResidual& r) {
    if (r.n_points) r.mean_residual /= static_cast<double>(r.n_points);
}

} // namespace detail

/// Default verification samples per matrix kind and branch tag. The infinity
/// matrices are sampled inside the overlap lens {|z| > 1} and the target
/// pair's disc, on the half-plane side the tag belongs to.
inline std::vector<Cx> default_matrix_samples(MatrixKind kind, BranchTag tag) {
    const double side = [&] {
        switch (kind) {
        case MatrixKind::zero_plus: return 0.0;
        case MatrixKind::zero_minus: return tag == BranchTag::phase_plus ? 1.0 : -1.0;
        case MatrixKind::inf_plus: return tag == BranchTag::phase_minus ? 1.0 : -1.0;
        case MatrixKind::inf_minus: return tag == BranchTag::phase_plus ? 1.0 : -1.0;
        }
        return 0.0;
    }();
    std::vector<Cx> out;
    switch (kind) {
    case MatrixKind::zero_plus:
        for (double x : {0.15, 0.3, 0.45, 0.6, 0.75}) out.push_back(Cx(x));
        break;
    case MatrixKind::zero_minus:
        for (double x : {-0.85, -0.75, -0.65, -0.55}) out.push_back(Cx(x));
        break;
    case MatrixKind::inf_plus:
        for (double deg : {6.0, 14.0, 22.0, 30.0})
            out.push_back(1.6 * std::exp(Cx(0.0, side * deg * kPi / 180.0)));
        break;
    case MatrixKind::inf_minus:
        for (Cx z : {Cx(-1.3, 0.4), Cx(-1.45, 0.35), Cx(-1.6, 0.3), Cx(-1.25, 0.55)})
            out.push_back(Cx(z.real(), side * z.imag()));
        break;
    }
    return out;
}

/// Series-overlap residual of both rows of the connection matrix at the given
/// samples (defaults chosen per kind/tag when empty, so each tag is checked
/// on the half-plane sector it belongs to). For the 0- matrix the row-2
/// prefactor z^{1-gamma} is evaluated as the limit from that half-plane. To
/// discriminate between tags instead, pass one tag's samples with the other
/// tag.
inline MatrixResidualReport verify_matrix(MatrixKind kind, const SubclassParams& s,
                                          std::vector<Cx> samples = {},
                                          std::optional<BranchTag> tag_opt = std::nullopt,
                                          double tol = 1e-12) {
    const BranchTag tag = tag_opt.value_or(default_branch(kind));
    if (samples.empty()) samples = default_matrix_samples(kind, tag);
    const ConnectionMatrix m = matrix(kind, s, tag);
    const CutSide side = (tag == BranchTag::phase_plus) ? CutSide::above : CutSide::below;

    LocalSolution from0(m.from[0], s), from1(m.from[1], s);
    LocalSolution to0(m.to[0], s), to1(m.to[1], s);

    MatrixResidualReport rep;
    rep.kind = kind;
    rep.branch_tag = tag;
    for (const Cx& z : samples) {
        const Cx b0 = to0.evaluate(z, tol, side);
        const Cx b1 = to1.evaluate(z, tol, side);
        const double r0 = std::abs(from0.evaluate(z, tol, side) -
                                   (m.entries[0][0] * b0 + m.entries[0][1] * b1));
        const double r1 = std::abs(from1.evaluate(z, tol, side) -
                                   (m.entries[1][0] * b0 + m.entries[1][1] * b1));
        detail::fold(rep.rows[0], r0);
        detail::fold(rep.rows[1], r1);
    }
    detail::finish(rep.rows[0]);
    detail::finish(rep.rows[1]);
    rep.max_residual = std::max(rep.rows[0].max_residual, rep.rows[1].max_residual);
    return rep;
}

/// Residual of the two-point connection identities
///   y01 = c11 y+1 + c12 y+2   at plus_points (in (0,1)),
///   y01 = c11 y-1 + c12 y-2   at minus_points (inside the y- disc),
/// reported per side.
struct ConnectionResiduals {
    RowResidual plus_side;
    RowResidual minus_side;
};

inline ConnectionResiduals verify_connection(const SubclassParams& s,
                                             const std::vector<Cx>& plus_points,
                                             const std::vector<Cx>& minus_points,
                                             double tol = 1e-12) {
    const ConnectionPair c = connection_pair(s);
    LocalSolution f(LocalSolutionId::y01, s);
    LocalSolution p1(LocalSolutionId::yp1, s), p2(LocalSolutionId::yp2, s);
    LocalSolution m1(LocalSolutionId::ym1, s), m2(LocalSolutionId::ym2, s);
    ConnectionResiduals out;
    for (const Cx& z : plus_points)
        detail::fold(out.plus_side,
                     std::abs(f.evaluate(z, tol) - c.c11 * p1.evaluate(z, tol) -
                              c.c12 * p2.evaluate(z, tol)));
    for (const Cx& z : minus_points)
        detail::fold(out.minus_side,
                     std::abs(f.evaluate(z, tol) - c.c11 * m1.evaluate(z, tol) -
                              c.c12 * m2.evaluate(z, tol)));
    detail::finish(out.plus_side);
    detail::finish(out.minus_side);
    return out;
}

// ---------------------------------------------------------------------------
// Continuation-based verification (the branch-resolution oracle)
// ---------------------------------------------------------------------------

/// Continue y01 (or y02 for the 0- matrix) along an upper- or lower-half-plane
/// polyline out of its disc and compare with the matrix-based evaluation (at
/// the given branch tag) at the endpoint. The residual is small only when the
/// tag matches the continuation sector, so running both tags on one sector
/// resolves the (-)^w phases empirically.
inline double continuation_route_residual(MatrixKind kind, const SubclassParams& s,
                                          BranchTag tag, bool upper_path = true,
                                          double tol = 1e-11) {
    const double up = upper_path ? 1.0 : -1.0;
    const Cx J(0.0, up);
    const ConnectionMatrix m = matrix(kind, s, tag);
    const CutSide side = upper_path ? CutSide::above : CutSide::below;

    ContinuationPath path;
    Cx sample;
    LocalSolutionId germ = LocalSolutionId::y01;
    switch (kind) {
    case MatrixKind::zero_plus:
        // stays on the real axis; no phase to resolve, plain in-disc overlap
        path.waypoints = {Cx(0.3), Cx(0.45)};
        sample = Cx(0.45);
        break;
    case MatrixKind::zero_minus:
        germ = LocalSolutionId::y02;
        path.waypoints = {Cx(0.4), Cx(0.4) + 0.5 * J, Cx(-0.7) + 0.5 * J, Cx(-0.7) + 0.05 * J};
        sample = Cx(-0.7) + 0.05 * J;
        break;
    case MatrixKind::inf_plus:
        path.waypoints = {Cx(0.5), Cx(0.5) + 0.9 * J, Cx(1.8) + 0.9 * J};
        sample = Cx(1.8) + 0.9 * J;
        break;
    case MatrixKind::inf_minus:
        path.waypoints = {Cx(0.5), Cx(0.5) + 0.9 * J, Cx(-1.8) + 0.9 * J, Cx(-1.3) + 0.4 * J};
        sample = Cx(-1.3) + 0.4 * J;
        break;
    }
    path.min_singularity_distance = 0.25;

    const ContinuationResult cont = continue_solution(germ, s, path, tol);

    Cx predicted;
    if (kind == MatrixKind::zero_plus || kind == MatrixKind::zero_minus) {
        // expand the germ over the target basis at the sample
        LocalSolution t0(m.to[0], s), t1(m.to[1], s);
        const Cx b0 = t0.evaluate(sample, 1e-13, side);
        const Cx b1 = t1.evaluate(sample, 1e-13, side);
        const int row = (germ == LocalSolutionId::y01) ? 0 : 1;
        predicted = m.entries[row][0] * b0 + m.entries[row][1] * b1;
    } else {
        // y01 = [q1 q2] C^{-1} (yi1, yi2)^T with (yi1, yi2) evaluated by
        // series (the sample lies outside the target pair's disc)
        const ConnectionPair c = connection_pair(s);
        LocalSolution i1(LocalSolutionId::yi1, s), i2(LocalSolutionId::yi2, s);
        const Cx v1 = i1.evaluate(sample, 1e-13, side);
        const Cx v2 = i2.evaluate(sample, 1e-13, side);
        const Cx det = m.determinant();
        const Cx w0 = (m.entries[1][1] * v1 - m.entries[0][1] * v2) / det;
        const Cx w1 = (-m.entries[1][0] * v1 + m.entries[0][0] * v2) / det;
        predicted = c.c11 * w0 + c.c12 * w1;
    }
    return std::abs(cont.value - predicted);
}

/// Run both candidate tags against the same (upper by default) continuation
/// sector and pick the one that matches.
struct BranchResolution {
    BranchTag chosen{};
    double residual_plus = 0.0;
    double residual_minus = 0.0;
};

inline BranchResolution resolve_branch(MatrixKind kind, const SubclassParams& s,
                                       bool upper_path = true, double tol = 1e-11) {
    BranchResolution r;
    r.residual_plus =
        continuation_route_residual(kind, s, BranchTag::phase_plus, upper_path, tol);
    r.residual_minus =
        continuation_route_residual(kind, s, BranchTag::phase_minus, upper_path, tol);
    r.chosen = (r.residual_plus <= r.residual_minus) ? BranchTag::phase_plus
                                                     : BranchTag::phase_minus;
    return r;
}

// ---------------------------------------------------------------------------
// Seeded admissible-parameter sampler
// ---------------------------------------------------------------------------

/// Pseudo-random subclass parameters with gamma, delta, epsilon, alpha-beta at
/// least `margin` away from the integers and Re delta <= re_delta_max.
inline SubclassParams sample_admissible(std::mt19937_64& rng, double margin = 1e-2,
                                        double re_delta_max = 0.9, bool complex_parts = true) {
    std::uniform_real_distribution<double> re(0.15, 1.7);
    std::uniform_real_distribution<double> im(-0.2, 0.2);
    for (int tries = 0; tries < 10000; ++tries) {
        const Cx al(re(rng), complex_parts ? im(rng) : 0.0);
        const Cx be(re(rng), complex_parts ? im(rng) : 0.0);
        const Cx ga(re(rng), complex_parts ? 0.5 * im(rng) : 0.0);
        SubclassParams s(al, be, ga);
        const Cx de = s.delta();
        if (de.real() > re_delta_max || de.real() < 0.05) continue;
        if (integer_distance(ga) < margin || integer_distance(de) < margin ||
            integer_distance(al - be) < margin)
            continue;
        if (integer_distance(al / 2.0) < margin || integer_distance(be / 2.0) < margin)
            continue; // keep q2 clear of the trivial zero
        return s;
    }
    throw Error("sample_admissible: rejection sampling failed");
}

} // namespace heunc
