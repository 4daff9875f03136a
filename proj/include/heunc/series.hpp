#pragma once

// Frobenius-series machinery: the three-term coefficient recurrence, the
// closed-form even coefficients of the subclass, and a memoizing series
// object with a tail-bounded truncation rule.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <mutex>
#include <vector>

#include "heunc/errors.hpp"
#include "heunc/params.hpp"
#include "heunc/scalar.hpp"
#include "heunc/specfun.hpp"

namespace heunc {

/// A_0 ... A_n of Hl(a, q; alpha, beta, gamma, delta; z) via
///   a P_k A_{k+1} = [Q_k + q] A_k - R_k A_{k-1},
///   P_k = (k+1)(k+gamma), Q_k = k(k-1+gamma)(1+a) + k(a delta + epsilon),
///   R_k = (k-1+alpha)(k-1+beta), A_0 = 1, a gamma A_1 = q.
inline std::vector<Cx> general_coefficients(const HeunParams& p, std::size_t n) {
    std::vector<Cx> A;
    A.reserve(n + 1);
    A.push_back(Cx(1.0));
    if (n == 0) return A;
    if (near_nonpositive_integer(p.gamma))
        throw RecurrenceBreakdown("general_coefficients: gamma at a non-positive integer");
    A.push_back(p.q / (p.a * p.gamma));
    for (std::size_t k = 1; k < n; ++k) {
        const double kd = static_cast<double>(k);
        const Cx gk = kd + p.gamma;
        if (std::abs(gk) <= kIntegerTol)
            throw RecurrenceBreakdown("general_coefficients: a*P_k within tolerance of 0");
        const Cx P = (kd + 1.0) * gk;
        const Cx Q = kd * (kd - 1.0 + p.gamma) * (1.0 + p.a) + kd * (p.a * p.delta + p.epsilon);
        const Cx R = (kd - 1.0 + p.alpha) * (kd - 1.0 + p.beta);
        A.push_back(((Q + p.q) * A[k] - R * A[k - 1]) / (p.a * P));
    }
    return A;
}

/// Closed-form even coefficient A_{2n} of the subclass series,
///   A_{2n} = (alpha/2)_n (beta/2)_n / (n! ((gamma+1)/2)_n);
/// the odd coefficients vanish identically.
inline Cx subclass_coefficient(const SubclassParams& s, std::size_t n) {
    Cx a(1.0);
    const Cx g2 = (s.gamma + 1.0) / 2.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double kd = static_cast<double>(k);
        const Cx den = g2 + kd;
        if (std::abs(den) <= kIntegerTol)
            throw RecurrenceBreakdown("subclass_coefficient: (gamma+1)/2 hits a non-positive integer");
        a *= (s.alpha / 2.0 + kd) * (s.beta / 2.0 + kd) / ((kd + 1.0) * den);
    }
    return a;
}

/// Result of one truncated series evaluation.
struct SeriesValue {
    Cx value{};
    Cx d1{};          // derivative with respect to the series variable w
    Cx d2{};          // second derivative with respect to w
    double tail_bound = 0.0; // geometric estimate of the truncation remainder
    std::size_t terms = 0;   // index of the last term used
};

/// Frobenius power-series core of one local solution: the coefficient stream
/// of an Hl factor with lazy, monotonically extended memoization. Extension is
/// serialized by a mutex; finished prefixes are only ever appended to.
class FrobeniusSeries {
public:
    FrobeniusSeries(HeunParams p, Cx center, Cx exponent)
        : params_(std::move(p)), center_(center), exponent_(exponent) {}

    const HeunParams& params() const { return params_; }
    Cx center() const { return center_; }
    Cx exponent() const { return exponent_; }
    double radius() const { return params_.radius(); }

    /// Coefficient A_k (extends the cache as needed).
    Cx coefficient(std::size_t k) const {
        std::lock_guard<std::mutex> lock(mutex_);
        ensure(k);
        return coeffs_[k];
    }

    /// Truncated sum of the series (and its w-derivatives) at w, stopping at
    /// index K >= 8 once |t_K| + |t_{K-1}| < tol |S| (two consecutive small
    /// terms, robust to the even/odd vanishing pattern; derivative-weighted
    /// when derivatives are requested). Reports the geometric tail bound
    /// |t_K| r/(1-r), r = |w|/radius. The caller is responsible for the disc
    /// precondition.
    SeriesValue evaluate(Cx w, double tol, bool derivatives = false) const {
        std::lock_guard<std::mutex> lock(mutex_);
        SeriesValue out;
        if (w == Cx(0.0)) {
            ensure(0);
            out.value = coeffs_[0];
            if (derivatives) {
                ensure(2);
                out.d1 = coeffs_[1];
                out.d2 = 2.0 * coeffs_[2];
            }
            return out;
        }
        const double r = std::abs(w) / radius();
        Cx wp(1.0);                    // w^k
        Cx wk1(0.0), wk2(0.0);         // w^{k-1}, w^{k-2}
        Cx s0(0.0), s1(0.0), s2(0.0);
        double tprev = 0.0;
        const double aw2 = std::norm(w);
        std::size_t k = 0;
        for (;; ++k) {
            ensure(k);
            const Cx term = coeffs_[k] * wp;
            s0 += term;
            if (derivatives && k >= 1) s1 += static_cast<double>(k) * coeffs_[k] * wk1;
            if (derivatives && k >= 2)
                s2 += static_cast<double>(k) * static_cast<double>(k - 1) * coeffs_[k] * wk2;
            wk2 = wk1;
            wk1 = wp;
            wp *= w;
            double tmag = std::abs(term);
            if (derivatives) {
                const double kd = static_cast<double>(k);
                tmag *= std::max(1.0, kd * std::max(1.0, kd - 1.0) / aw2);
            }
            if (k >= 8 && tmag + tprev < tol * std::abs(s0)) break;
            tprev = tmag;
            if (k > kMaxTerms)
                throw Error("FrobeniusSeries: series did not converge within the term cap");
        }
        out.value = s0;
        out.d1 = s1;
        out.d2 = s2;
        out.terms = k;
        out.tail_bound = (r < 1.0) ? std::abs(coeffs_[k]) * std::pow(std::abs(w), static_cast<double>(k)) * r / (1.0 - r)
                                   : std::numeric_limits<double>::infinity();
        return out;
    }

private:
    static constexpr std::size_t kMaxTerms = 60000;

    void ensure(std::size_t k) const {
        if (coeffs_.empty()) {
            coeffs_.push_back(Cx(1.0));
        }
        while (coeffs_.size() <= k) {
            const std::size_t m = coeffs_.size(); // computing A_m
            if (m == 1) {
                if (near_nonpositive_integer(params_.gamma))
                    throw RecurrenceBreakdown("FrobeniusSeries: gamma at a non-positive integer");
                coeffs_.push_back(params_.q / (params_.a * params_.gamma));
                continue;
            }
            const double kd = static_cast<double>(m - 1);
            const Cx gk = kd + params_.gamma;
            if (std::abs(gk) <= kIntegerTol)
                throw RecurrenceBreakdown("FrobeniusSeries: a*P_k within tolerance of 0");
            const Cx P = (kd + 1.0) * gk;
            const Cx Q = kd * (kd - 1.0 + params_.gamma) * (1.0 + params_.a) +
                         kd * (params_.a * params_.delta + params_.epsilon);
            const Cx R = (kd - 1.0 + params_.alpha) * (kd - 1.0 + params_.beta);
            coeffs_.push_back(((Q + params_.q) * coeffs_[m - 1] - R * coeffs_[m - 2]) /
                              (params_.a * P));
        }
    }

    HeunParams params_;
    Cx center_;
    Cx exponent_;
    mutable std::vector<Cx> coeffs_;
    mutable std::mutex mutex_;
};

} // namespace heunc
