#pragma once

/**
 * @file powersum.hpp
 * @brief Independent evaluators of the power sum
 *        S_{p,(a,d)}(n) = sum_{s=0}^{n} (a + s d)^p.
 *
 * Each evaluator is a separate code path; powersum_direct is the oracle
 * the others are verified against:
 *
 *   powersum_direct          plain summation
 *   powersum_stirling        d^p sum_k k! C(n+1, k+1) S_p^k(a/d)
 *   powersum_bernoulli_diff  d^p/(p+1) (B_{p+1}(n + a/d + 1) - B_{p+1}(a/d))
 *   powersum_bernoulli_sum   d^p/(p+1) sum_s C(p+1, s) (n+1)^{p+1-s} B_s(a/d)
 *   powersum_rstirling       the Stirling formula through the r-Stirling
 *                            accessor; needs a/d a non-negative integer, p > 0
 *   powersum_whitney         sum_k k! d^k C(n+1, k+1) W_{d,a}(p, k); needs
 *                            coprime integers a >= 0, d >= 1
 *
 * In the Whitney route the modulus argument is the common difference d and
 * the shift is the first term a (giving W_{m,r} = W_{d,a} with the d^k
 * prefactor). The assignment is forced by W_{m,r}(p,k) = m^{p-k} S_p^k(r/m)
 * together with the Stirling formula's S_p^k(a/d), and is pinned against
 * the direct-summation oracle in the test suite; the transposed reading
 * disagrees already at p=2, a=1, d=2, n=3.
 */

#include <stdexcept>
#include <string>

#include "apsum/rational.hpp"
#include "apsum/series.hpp"

namespace apsum {

/// A formula's stated preconditions exclude this query; the caller must
/// pick another evaluator.
struct NotApplicableError : std::runtime_error {
    explicit NotApplicableError(const std::string& why) : std::runtime_error(why) {}
};

struct Applicability {
    bool applicable;
    std::string reason;  // empty when applicable
};

/// Direct summation; the oracle for this module.
Rational powersum_direct(const SumQuery& q);

Rational powersum_stirling(const SumQuery& q);

Rational powersum_bernoulli_diff(const SumQuery& q);

Rational powersum_bernoulli_sum(const SumQuery& q);

Applicability rstirling_applicability(const SumQuery& q);

/// Throws NotApplicableError unless a/d is a non-negative integer and p > 0.
Rational powersum_rstirling(const SumQuery& q);

Applicability whitney_applicability(const SumQuery& q);

/// Throws NotApplicableError unless a, d are coprime integers with
/// a >= 0 and d >= 1.
Rational powersum_whitney(const SumQuery& q);

/// EGF sum_{k=0}^{n} e^{(a+kd)z}: the coefficient of z^p times p! equals
/// S_{p,(a,d)}(n) for all p up to the order.
TruncatedSeries powersum_egf(const Rational& a, const Rational& d, long n, int order);

}  // namespace apsum
