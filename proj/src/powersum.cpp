#include "apsum/powersum.hpp"

#include "apsum/bernoulli.hpp"
#include "apsum/stirling.hpp"

namespace apsum {

Rational powersum_direct(const SumQuery& q) {
    Rational acc;
    Rational term = q.a;
    for (long s = 0; s <= q.n; ++s) {
        acc += ratpow(term, q.p);
        term += q.d;
    }
    return acc;
}

Rational powersum_stirling(const SumQuery& q) {
    const Rational x = q.a / q.d;
    Rational acc;
    for (long k = 0; k <= q.p; ++k)
        acc += Rational(factorial(k) * binomial(q.n + 1, k + 1)) *
               weighted_stirling(q.p, k, x);
    return ratpow(q.d, q.p) * acc;
}

Rational powersum_bernoulli_diff(const SumQuery& q) {
    const Rational x = q.a / q.d;
    const BernoulliPoly b = bernoulli_poly(q.p + 1);
    const Rational diff = evaluate(b, x + Rational(q.n + 1)) - evaluate(b, x);
    return ratpow(q.d, q.p) / Rational(q.p + 1) * diff;
}

Rational powersum_bernoulli_sum(const SumQuery& q) {
    const Rational x = q.a / q.d;
    Rational acc;
    for (long s = 0; s <= q.p; ++s)
        acc += Rational(binomial(q.p + 1, s)) * ratpow(Rational(q.n + 1), q.p + 1 - s) *
               evaluate(bernoulli_poly(s), x);
    return ratpow(q.d, q.p) / Rational(q.p + 1) * acc;
}

Applicability rstirling_applicability(const SumQuery& q) {
    const Rational ratio = q.a / q.d;
    if (!ratio.is_integer() || ratio.sign() < 0)
        return {false, "a/d = " + ratio.str() + " is not a non-negative integer"};
    if (q.p == 0)
        return {false, "the r-Stirling formula is stated for p > 0"};
    if (!ratio.numerator().fits_slong_p())
        return {false, "a/d is too large for the r-Stirling accessor"};
    return {true, ""};
}

Rational powersum_rstirling(const SumQuery& q) {
    const Applicability ok = rstirling_applicability(q);
    if (!ok.applicable)
        throw NotApplicableError(ok.reason);
    const long r = (q.a / q.d).numerator().get_si();
    Rational acc;
    for (long k = 0; k <= q.p; ++k)
        acc += Rational(factorial(k) * binomial(q.n + 1, k + 1) * r_stirling2(q.p, k, r));
    return ratpow(q.d, q.p) * acc;
}

Applicability whitney_applicability(const SumQuery& q) {
    if (!q.a.is_integer() || !q.d.is_integer())
        return {false, "a and d must be integers, got a = " + q.a.str() +
                           ", d = " + q.d.str()};
    if (q.d.sign() < 0)
        return {false, "the Whitney modulus (= d) must be positive, got d = " + q.d.str()};
    if (q.a.sign() < 0)
        return {false, "the Whitney shift (= a) must be non-negative, got a = " + q.a.str()};
    Integer g;
    mpz_gcd(g.get_mpz_t(), q.a.numerator().get_mpz_t(), q.d.numerator().get_mpz_t());
    if (g != 1)
        return {false, "a and d must be coprime, gcd = " + g.get_str()};
    if (!q.a.numerator().fits_slong_p() || !q.d.numerator().fits_slong_p())
        return {false, "a or d is too large for the Whitney accessor"};
    return {true, ""};
}

Rational powersum_whitney(const SumQuery& q) {
    const Applicability ok = whitney_applicability(q);
    if (!ok.applicable)
        throw NotApplicableError(ok.reason);
    const long m = q.d.numerator().get_si();  // modulus: the common difference
    const long r = q.a.numerator().get_si();  // shift: the first term
    Rational acc;
    for (long k = 0; k <= q.p; ++k)
        acc += Rational(factorial(k) * binomial(q.n + 1, k + 1) * whitney(m, r, q.p, k)) *
               ratpow(q.d, k);
    return acc;
}

TruncatedSeries powersum_egf(const Rational& a, const Rational& d, long n, int order) {
    if (d.is_zero())
        throw std::invalid_argument("powersum_egf: d must be nonzero");
    if (n < 0)
        throw std::invalid_argument("powersum_egf: n must be non-negative");
    TruncatedSeries acc(order);
    Rational c = a;
    for (long k = 0; k <= n; ++k) {
        acc += exp_series(c, order);
        c += d;
    }
    return acc;
}

}  // namespace apsum
