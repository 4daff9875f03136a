#pragma once

// Test-only oracles, independent of the library implementation paths they
// check: a long-double Levin-u accelerated summation of 2F1 at unit argument,
// direct geometric summation of 2F1 inside the unit disc, and a bare-bones
// re-implementation of the coefficient recurrence.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "heunc/params.hpp"
#include "heunc/scalar.hpp"

namespace testsup {

using heunc::Cx;
using LCx = std::complex<long double>;

struct AcceleratedSum {
    Cx value{};
    double est_error = 0.0;
};

/// 2F1(p, q; r; 1) by Levin-u acceleration of the defining series in long
/// double. Honest to ~5e-12 relative even at Re(r-p-q) = 0.3.
inline AcceleratedSum gauss_2f1_at_one_by_summation(Cx p, Cx q, Cx r) {
    const LCx lp(p.real(), p.imag()), lq(q.real(), q.imag()), lr(r.real(), r.imag());
    constexpr int M = 60;
    std::vector<LCx> a(M + 2), S(M + 2);
    a[0] = 1;
    for (int i = 0; i <= M; ++i)
        a[i + 1] = a[i] * (lp + (long double)i) * (lq + (long double)i) /
                   ((1.0L + i) * (lr + (long double)i));
    S[0] = a[0];
    for (int i = 1; i <= M + 1; ++i) S[i] = S[i - 1] + a[i];

    auto binom = [](int n, int k) {
        long double b = 1;
        for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
        return b;
    };
    LCx best = S[M + 1], prev = 0;
    long double best_err = 1e30L;
    for (int k = 3; k <= 36; ++k) {
        LCx num = 0, den = 0;
        for (int j = 0; j <= k; ++j) {
            const LCx om = (long double)(j + 1) * a[j + 1];
            const long double c = binom(k, j) * ((j % 2) ? -1.0L : 1.0L) *
                                  powl((long double)(j + 1) / (k + 1), k - 1);
            num += c * S[j] / om;
            den += c / om;
        }
        if (den == LCx(0)) continue;
        const LCx val = num / den;
        if (k > 3) {
            const long double e = std::abs(val - prev);
            if (e < best_err) {
                best_err = e;
                best = val;
            }
        }
        prev = val;
    }
    return {Cx((double)best.real(), (double)best.imag()), (double)best_err};
}

/// 2F1(p, q; r; z) by direct summation, |z| < 1.
inline Cx gauss_2f1_series(Cx p, Cx q, Cx r, Cx z, double tol = 1e-16) {
    Cx term(1.0), sum(1.0);
    for (int n = 0; n < 100000; ++n) {
        term *= (p + (double)n) * (q + (double)n) /
                ((1.0 + n) * (r + (double)n)) * z;
        sum += term;
        if (std::abs(term) < tol * std::abs(sum) && n > 4) break;
    }
    return sum;
}

/// Bare-bones coefficient recurrence (loop written independently of the
/// library's series machinery).
inline std::vector<Cx> brute_coefficients(Cx a, Cx q, Cx al, Cx be, Cx ga, Cx de,
                                          std::size_t n) {
    const Cx ep = al + be + 1.0 - ga - de;
    std::vector<Cx> A{Cx(1.0)};
    if (n == 0) return A;
    A.push_back(q / (a * ga));
    for (std::size_t k = 1; k < n; ++k) {
        const double kd = (double)k;
        const Cx P = (kd + 1.0) * (kd + ga);
        const Cx Q = kd * (kd - 1.0 + ga) * (1.0 + a) + kd * (a * de + ep);
        const Cx R = (kd - 1.0 + al) * (kd - 1.0 + be);
        A.push_back(((Q + q) * A[k] - R * A[k - 1]) / (a * P));
    }
    return A;
}

/// Plain truncated summation of a coefficient list at z.
inline Cx brute_sum(const std::vector<Cx>& A, Cx z) {
    Cx s(0.0), zp(1.0);
    for (const Cx& a : A) {
        s += a * zp;
        zp *= z;
    }
    return s;
}

/// Random complex in a box, seeded by the caller.
inline Cx random_box(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return Cx(d(rng), d(rng));
}

} // namespace testsup
