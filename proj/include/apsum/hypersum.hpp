#pragma once

/**
 * @file hypersum.hpp
 * @brief Evaluators and generating-function verifiers for the hyper-sums
 *        S^{(r)}_{p,(a,d)}(n): the r-fold cumulative sums of power sums.
 *
 * S^{(0)} is the plain power sum; S^{(r)}(n) = sum_{j=0}^{n} S^{(r-1)}(j).
 * hypersum_recursive implements that definition and is the oracle for
 * everything else here. Three EGF constructions of
 * sum_p S^{(r)}_p z^p / p! are provided and must agree coefficient for
 * coefficient:
 *
 *   hypersum_egf_direct      sum_k C(n+r-k, r) e^{(a+kd)z}
 *   hypersum_egf_hypergeom   C(n+r+1, r+1) e^{az} 2F1(1, -n; r+2; 1-e^{dz})
 *   hypersum_egf_laurent     e^{(a+d(r+n+1))z}/(e^{dz}-1)^{r+1}
 *                              - sum_{k=0}^{r} C(n+k,k)
 *                                  e^{(a+(r-k)d)z}/(e^{dz}-1)^{r-k+1},
 *                            whose negative powers must cancel exactly
 *
 * The ordinary and double generating functions are verified as
 * cleared-denominator identities, never by inverting a non-unit.
 */

#include <stdexcept>
#include <string>
#include <vector>

#include "apsum/rational.hpp"
#include "apsum/series.hpp"

namespace apsum {

/// The Laurent assembly left a nonzero negative-power coefficient.
/// The identity guarantees cancellation, so this signals a bug.
struct PrincipalPartResidue : std::logic_error {
    explicit PrincipalPartResidue(const std::string& what) : std::logic_error(what) {}
};

/// The recursive definition, memoized over (r, n) per (p, a, d);
/// the oracle for this module.
Rational hypersum_recursive(const SumQuery& q);

/// sum_{i=0}^{n} C(n+r-i, r) (a+id)^p.
Rational hypersum_binomial(const SumQuery& q);

/// The higher-order-Bernoulli formula:
///   p! d^p [ B^{(r+1)}_{p+r+1}(a/d + r + n + 1) / (p+r+1)!
///            - sum_{k=0}^{r} C(n+k,k) B^{(r-k+1)}_{p+r+1-k}(a/d + r - k)
///                            / (p+r+1-k)! ].
Rational hypersum_genbernoulli(const SumQuery& q);

TruncatedSeries hypersum_egf_direct(const Rational& a, const Rational& d, long n, long r,
                                    int order);

TruncatedSeries hypersum_egf_hypergeom(const Rational& a, const Rational& d, long n, long r,
                                       int order);

/// The raw Laurent combination, computed at working order order + r + 1
/// so that every reported coefficient is exact. Depth is r + 1.
LaurentSeries hypersum_egf_laurent_assembly(const Rational& a, const Rational& d, long n,
                                            long r, int order);

/// Regular part of the assembly, truncated to the requested order.
/// Throws PrincipalPartResidue if any negative power survives.
TruncatedSeries hypersum_egf_laurent(const Rational& a, const Rational& d, long n, long r,
                                     int order);

/// One compared coefficient that failed an identity check.
struct CoefficientMismatch {
    std::string where;  // e.g. "z^3" or "t^2 z^4"
    std::string expected;
    std::string actual;
};

struct IdentityCheckReport {
    bool pass = true;
    long coefficients_checked = 0;
    std::vector<CoefficientMismatch> mismatches;
};

/// Cleared form of the ordinary generating function identity
///   (sum_{r} S^{(r)} z^r) (1-z)^{n+1} = sum_{i=0}^{n} (1-z)^i (a+id)^p,
/// compared on z^0..z^R. Multiplying by a polynomial in z only moves
/// degrees up, so every coefficient in that window is fully determined
/// by the oracle values S^{(0)}..S^{(R)}.
IdentityCheckReport hypersum_ogf_check(long p, const Rational& a, const Rational& d, long n,
                                       int r_order);

/// Cleared form of the double generating function identity
///   (sum_{r,p} S^{(r)}_p z^p t^r / p!) (1-t)^{n+1} (1 - (1-t) e^{dz})
///     = e^{az} - (1-t)^{n+1} e^{(a+(n+1)d)z},
/// compared on the full window t^0..t^R, z^0..z^N (determined for the
/// same reason: the clearing factors carry only non-negative powers).
IdentityCheckReport hypersum_doublegf_check(const Rational& a, const Rational& d, long n,
                                            int t_order, int z_order);

}  // namespace apsum
