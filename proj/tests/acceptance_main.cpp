// Acceptance suite: runs every advertised guarantee at its stated tolerance
// and prints one pass/fail line per criterion. Exit status is the number of
// failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "heunc/heunc.hpp"
#include "support.hpp"

using namespace heunc;

namespace {

int g_failures = 0;

void report(int idx, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %-38s %s\n", pass ? "PASS" : "FAIL", idx,
                name.c_str(), detail.c_str());
    if (!pass) ++g_failures;
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

std::vector<SubclassParams> random_sets(std::size_t count, unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::vector<SubclassParams> out;
    while (out.size() < count) out.push_back(sample_admissible(rng, 1e-2, 0.9));
    return out;
}

// 1. y01 = c11 y+-1 + c12 y+-2 on both overlaps, 10 random sets, 20 points,
//    residual <= 1e-8, total runtime <= 10 s.
void criterion1() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto sets = random_sets(10, 1001);
    std::vector<Cx> plus_pts, minus_pts;
    for (int i = 0; i < 20; ++i) {
        plus_pts.push_back(Cx(0.1 + 0.8 * (i + 0.5) / 20.0));
        minus_pts.push_back(Cx(-0.95 + 0.4 * (i + 0.5) / 20.0));
    }
    double worst = 0.0;
    for (const SubclassParams& s : sets) {
        const ConnectionResiduals r = verify_connection(s, plus_pts, minus_pts, 1e-13);
        worst = std::max({worst, r.plus_side.max_residual, r.minus_side.max_residual});
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(1, "two-point connection identity", worst <= 1e-8 && secs <= 10.0,
           "max residual " + sci(worst) + ", " + sci(secs) + " s");
}

// 2. Extrapolated even sequence = 2 q2 to 1e-6 relative at n_max = 200 for
//    5 sets; odd extrapolant <= 1e-10.
void criterion2() {
    const auto sets = random_sets(5, 2002);
    double worst_even = 0.0, worst_odd = 0.0;
    for (const SubclassParams& s : sets) {
        const auto r = limit_sequence_c12(s, 200);
        const Cx target = 2.0 * q2(s.alpha, s.beta, s.gamma);
        worst_even = std::max(worst_even,
                              std::abs(r.even_limit - target) / std::abs(target));
        worst_odd = std::max(worst_odd, std::abs(r.odd_limit));
    }
    report(2, "limit-sequence reproduction", worst_even <= 1e-6 && worst_odd <= 1e-10,
           "even rel " + sci(worst_even) + ", odd " + sci(worst_odd));
}

// 3. Recurrence coefficients equal the closed form to 1e-12 relative for
//    n <= 50 across 20 sets; odd coefficients exactly zero.
void criterion3() {
    const auto sets = random_sets(20, 3003);
    double worst = 0.0;
    bool odd_ok = true;
    for (const SubclassParams& s : sets) {
        const auto A = general_coefficients(s.to_heun(), 101);
        for (std::size_t n = 0; n <= 50; ++n) {
            const Cx cf = subclass_coefficient(s, n);
            worst = std::max(worst, std::abs(A[2 * n] - cf) / std::max(1.0, std::abs(cf)));
            odd_ok = odd_ok && (A[2 * n + 1] == Cx(0.0));
        }
    }
    report(3, "recurrence vs closed-form coefficients", worst <= 1e-12 && odd_ok,
           "max rel " + sci(worst) + std::string(odd_ok ? ", odd exactly 0" : ", odd NONZERO"));
}

// 4. eval_local(y01) equals direct summation of 2F1(alpha/2, beta/2;
//    (gamma+1)/2; z^2) to 1e-12 at 10 points, |z| <= 0.8.
void criterion4() {
    const SubclassParams s(Cx(0.5), Cx(0.8), Cx(0.9));
    LocalSolution y01(LocalSolutionId::y01, s);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        const Cx z(-0.8 + 1.6 * i / 9.0);
        const Cx direct = testsup::gauss_2f1_series(s.alpha / 2.0, s.beta / 2.0,
                                                    (s.gamma + 1.0) / 2.0, z * z);
        worst = std::max(worst, std::abs(y01.evaluate(z, 1e-14) - direct));
    }
    report(4, "even-series 2F1 identity", worst <= 1e-12, "max abs " + sci(worst));
}

// 5. Lemma suite.
void criterion5() {
    std::mt19937_64 rng(5005);
    std::uniform_real_distribution<double> re(0.3, 2.5), im(-0.5, 0.5);
    double worst1 = 0.0;
    for (int i = 0; i < 10; ++i)
        worst1 = std::max(worst1, lemma1_beta_gap(Cx(re(rng), im(rng)),
                                                  Cx(re(rng), im(rng))));
    const bool l1 = worst1 <= 1e-10;

    bool l2 = true;
    for (const auto& [a, b] : std::vector<std::pair<Cx, Cx>>{
             {Cx(0.5), Cx(-0.3)}, {Cx(1.1), Cx(0.4)}, {Cx(2.0), Cx(-1.0)},
             {Cx(0.3, 0.4), Cx(-0.2, -0.1)}}) {
        const auto r = lemma2_ratio_check(a, b, {10, 20, 40, 80});
        l2 = l2 && r.monotone && r.points.back().error <= 1e-2;
    }

    const double rho = 1.5;
    std::vector<double> gaps;
    for (unsigned k : {20u, 30u, 40u, 50u, 60u})
        gaps.push_back(lemma3_integral_check(Cx(0.3), k, rho).gap);
    double C = 0.0;
    for (int i = 0; i < 3; ++i) C = std::max(C, gaps[i] * std::pow(rho, 20.0 + 10.0 * i));
    bool l3 = gaps[4] <= std::max(1e-6, 3.0 * C * std::pow(rho, -60.0));
    const double target = std::pow(rho, -10.0);
    for (int i = 1; i < 4; ++i) {
        const double ratio = gaps[i] / gaps[i - 1];
        l3 = l3 && ratio > 0.2 * target && ratio < 5.0 * target;
    }
    report(5, "lemma suite (beta/ratio/tail)", l1 && l2 && l3,
           "beta " + sci(worst1) + ", tail(60) " + sci(gaps[4]));
}

// 6. Alternate-representation residuals <= 1e-9 at 5 points per identity for
//    a generic parameter set and a subclass set.
void criterion6() {
    double worst = 0.0;
    const HeunParams gen(Cx(3.0), Cx(0.7), Cx(0.5), Cx(0.8), Cx(0.9), Cx(1.1));
    for (Cx z : {Cx(0.6), Cx(0.99), Cx(1.3), Cx(0.8, 0.3), Cx(1.1, -0.2)})
        worst = std::max(worst, maier_y11_shift_residual(gen, z, 1e-13));
    for (Cx z : {Cx(2.2), Cx(2.8), Cx(2.4, 0.5), Cx(2.6, -0.4), Cx(3.3)})
        worst = std::max(worst, maier_ya1_shift_residual(gen, z, 1e-13));
    for (Cx z : {Cx(0.8), Cx(1.2), Cx(1.0, 0.4), Cx(0.9, -0.3), Cx(1.4)})
        worst = std::max(worst, maier_y11_inf_residual(gen, z, 1e-13));
    const HeunParams am1(Cx(-1.0), Cx(0.35), Cx(0.5), Cx(0.8), Cx(0.9), Cx(1.1));
    for (Cx z : {Cx(-1.5, 0.5), Cx(-1.8, -0.3), Cx(-1.4, 0.1), Cx(-1.6, 0.4), Cx(-1.45, -0.2)})
        worst = std::max(worst, maier_aneg1_assertion_residual(am1, z, 1e-13));

    const SubclassParams s(Cx(0.5), Cx(0.8), Cx(0.9));
    const HeunParams sub = s.to_heun();
    for (Cx z : {Cx(0.6), Cx(0.99), Cx(1.3), Cx(0.8, 0.3), Cx(1.1, -0.2)})
        worst = std::max(worst, maier_y11_shift_residual(sub, z, 1e-13));
    for (Cx z : {Cx(-1.5, 0.5), Cx(-1.8, -0.3), Cx(-1.4, 0.1), Cx(-1.6, 0.4), Cx(-1.45, -0.2)})
        worst = std::max(worst, maier_aneg1_assertion_residual(sub, z, 1e-13));
    for (Cx z : {Cx(-1.4, 0.3), Cx(-1.3, -0.4), Cx(-1.6, 0.2), Cx(-1.5, 0.35), Cx(-1.45, -0.3)})
        worst = std::max(worst, maier_ya1_shift_residual(sub, z, 1e-13));
    report(6, "alternate-representation residuals", worst <= 1e-9, "max " + sci(worst));
}

// 7. Continuation consistency: in-disc 1e-10; Wronskian drift <= 1e-8 on all
//    suite paths; null-homotopic loop returns to 1e-8.
void criterion7() {
    const SubclassParams s(Cx(0.5), Cx(0.8), Cx(0.9));
    double drift = 0.0;

    ContinuationPath in_disc{{Cx(0.2), Cx(0.4)}, 0.1};
    const auto r1 = continue_solution(LocalSolutionId::y01, s, in_disc, 1e-12);
    LocalSolution y01(LocalSolutionId::y01, s);
    const double in_err = std::abs(r1.value - y01.evaluate(Cx(0.4), 1e-14));
    drift = std::max(drift, r1.wronskian_drift);

    ContinuationPath far{{Cx(0.5), Cx(0.95)}, 0.02};
    const auto r2 = continue_solution(LocalSolutionId::y01, s, far, 1e-12);
    const ConnectionPair c = connection_pair(s);
    LocalSolution p1(LocalSolutionId::yp1, s), p2(LocalSolutionId::yp2, s);
    const double far_err = std::abs(r2.value - c.c11 * p1.evaluate(Cx(0.95), 1e-14) -
                                    c.c12 * p2.evaluate(Cx(0.95), 1e-14));
    drift = std::max(drift, r2.wronskian_drift);

    ContinuationPath loop{{Cx(0.3), Cx(0.3, 0.3), Cx(0.7, 0.3), Cx(0.7, -0.3),
                           Cx(0.3, -0.3), Cx(0.3)},
                          0.15};
    const Eval012 seed = y01.evaluate012(Cx(0.3), 1e-14);
    const auto r3 = continue_state(s.to_heun(), loop, seed.value, seed.d1, 1e-12);
    const double loop_err = std::hypot(std::abs(r3.value - seed.value),
                                       std::abs(r3.derivative - seed.d1));
    drift = std::max(drift, r3.wronskian_drift);

    for (double sgn : {1.0, -1.0}) { // the infinity verification paths
        ContinuationPath pp{{Cx(0.5), Cx(0.5, sgn * 0.9), Cx(1.8, sgn * 0.9)}, 0.25};
        drift = std::max(drift, continue_solution(LocalSolutionId::y01, s, pp, 1e-12)
                                    .wronskian_drift);
        ContinuationPath pm{{Cx(0.5), Cx(0.5, sgn * 0.9), Cx(-1.8, sgn * 0.9),
                             Cx(-1.3, sgn * 0.4)},
                            0.25};
        drift = std::max(drift, continue_solution(LocalSolutionId::y01, s, pm, 1e-12)
                                    .wronskian_drift);
    }

    report(7, "continuation consistency",
           in_err <= 1e-10 && far_err <= 1e-8 && loop_err <= 1e-8 && drift <= 1e-8,
           "in-disc " + sci(in_err) + ", far " + sci(far_err) + ", loop " +
               sci(loop_err) + ", drift " + sci(drift));
}

// 8. C0+/C0- rows verified to 1e-8; Cinf rows reported under both tags, the
//    winner reaches 1e-6 and coincides with the frozen defaults.
void criterion8() {
    const auto sets = random_sets(10, 8008);
    std::vector<Cx> plus_pts, minus_pts;
    for (int i = 0; i < 20; ++i) {
        plus_pts.push_back(Cx(0.1 + 0.8 * (i + 0.5) / 20.0));
        minus_pts.push_back(Cx(-0.95 + 0.4 * (i + 0.5) / 20.0));
    }
    double worst0 = 0.0;
    bool inf_ok = true;
    double best_seen = 0.0;
    for (const SubclassParams& s : sets) {
        worst0 = std::max(worst0,
                          verify_matrix(MatrixKind::zero_plus, s, plus_pts).max_residual);
        worst0 = std::max(worst0,
                          verify_matrix(MatrixKind::zero_minus, s, minus_pts).max_residual);
        for (MatrixKind k : {MatrixKind::inf_plus, MatrixKind::inf_minus}) {
            // both tag settings on the canonical upper-sector samples: the
            // residuals decide the tag, which must be the frozen default
            const auto upper = default_matrix_samples(k, default_branch(k));
            const auto rp = verify_matrix(k, s, upper, BranchTag::phase_plus);
            const auto rm = verify_matrix(k, s, upper, BranchTag::phase_minus);
            const BranchTag winner = rp.max_residual <= rm.max_residual
                                         ? BranchTag::phase_plus
                                         : BranchTag::phase_minus;
            const double best = std::min(rp.max_residual, rm.max_residual);
            inf_ok = inf_ok && best <= 1e-6 && winner == default_branch(k);
            best_seen = std::max(best_seen, best);
        }
    }
    // the continuation oracle agrees with the frozen tags
    const SubclassParams s0(Cx(0.5), Cx(0.8), Cx(0.9));
    for (MatrixKind k : {MatrixKind::zero_minus, MatrixKind::inf_plus, MatrixKind::inf_minus})
        inf_ok = inf_ok && resolve_branch(k, s0).chosen == default_branch(k);
    report(8, "connection matrices (rows + branches)", worst0 <= 1e-8 && inf_ok,
           "C0 rows max " + sci(worst0) + ", inf winner residual max " + sci(best_seen) +
               (inf_ok ? ", tags = frozen defaults" : ", TAG MISMATCH"));
}

// 9. Gamma kernel: recurrence/reflection self-consistency and half-integer
//    closed forms at 1e-12 relative on the test box.
void criterion9() {
    std::mt19937_64 rng(9009);
    std::uniform_real_distribution<double> box(-5.0, 5.0);
    double worst = 0.0;
    int tested = 0;
    while (tested < 200) {
        const Cx z(box(rng), box(rng));
        if (integer_distance(z) < 0.1) continue;
        ++tested;
        const Cx g = gamma(z);
        worst = std::max(worst, std::abs(gamma(z + 1.0) - z * g) / std::abs(z * g));
        worst = std::max(worst,
                         std::abs(g * gamma(1.0 - z) * std::sin(kPi * z) / kPi - 1.0));
    }
    const double s2pi = std::sqrt(kPi);
    const std::vector<std::pair<Cx, Cx>> closed = {
        {Cx(0.5), Cx(s2pi)},
        {Cx(1.5), Cx(s2pi / 2.0)},
        {Cx(2.5), Cx(0.75 * s2pi)},
        {Cx(-0.5), Cx(-2.0 * s2pi)},
        {Cx(-1.5), Cx(4.0 * s2pi / 3.0)},
        {Cx(4.0), Cx(6.0)},
    };
    for (const auto& [z, v] : closed)
        worst = std::max(worst, std::abs(gamma(z) - v) / std::abs(v));
    report(9, "gamma kernel self-consistency", worst <= 1e-12, "max rel " + sci(worst));
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    std::printf("%d/9 criteria passed\n", 9 - g_failures);
    return g_failures;
}
