#pragma once

/**
 * @file bernoulli.hpp
 * @brief Classical and higher-order Bernoulli polynomials, exact.
 *
 * B_n^{(alpha)}(x) is defined by (z/(e^z-1))^alpha e^{xz}
 * = sum_n B_n^{(alpha)}(x) z^n/n!; alpha = 1 gives the classical
 * polynomials. Three routes are provided and cross-checked in the test
 * suite: monomial coefficients from series division (gen_bernoulli_poly),
 * Horner evaluation of those (gen_bernoulli / evaluate), and the
 * weighted-Stirling sum B_n(x) = sum_k (-1)^k k!/(k+1) S_n^k(x)
 * (bernoulli_via_stirling).
 */

#include <vector>

#include "apsum/rational.hpp"

namespace apsum {

/// Dense monomial-basis coefficients of B_n^{(alpha)}(x).
class BernoulliPoly {
public:
    BernoulliPoly(long alpha, std::vector<Rational> coeffs)
        : alpha_(alpha), c_(std::move(coeffs)) {
        if (alpha < 0)
            throw std::invalid_argument("BernoulliPoly: negative order");
        if (c_.empty())
            throw std::invalid_argument("BernoulliPoly: empty coefficients");
    }

    long alpha() const { return alpha_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    /// Coefficient of x^k.
    const Rational& coeff(long k) const { return c_.at(static_cast<size_t>(k)); }
    const std::vector<Rational>& coeffs() const { return c_; }

    friend bool operator==(const BernoulliPoly&, const BernoulliPoly&) = default;

private:
    long alpha_;
    std::vector<Rational> c_;
};

/// B_n^{(alpha)}(x) as a polynomial, from the series
/// (z/(e^z-1))^alpha: coeff of x^k is C(n,k) * Bhat_{n-k}^{(alpha)}
/// with Bhat_m^{(alpha)} = m! [z^m] (z/(e^z-1))^alpha. Memoized.
BernoulliPoly gen_bernoulli_poly(long alpha, long n);

/// Classical Bernoulli polynomial B_n(x) (alpha = 1).
BernoulliPoly bernoulli_poly(long n);

/// Exact Horner evaluation.
Rational evaluate(const BernoulliPoly& p, const Rational& x);

/// B_n^{(alpha)}(x) at a point.
Rational gen_bernoulli(long alpha, long n, const Rational& x);

/// B_n(x) through the weighted-Stirling representation
/// sum_{k=0}^{n} (-1)^k k!/(k+1) S_n^k(x); an independent route used to
/// cross-check bernoulli_poly.
Rational bernoulli_via_stirling(long n, const Rational& x);

}  // namespace apsum
