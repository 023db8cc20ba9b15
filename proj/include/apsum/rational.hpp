#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalars and elementary combinatorial primitives.
 *
 * Rational is the universal scalar of the library. It is a thin wrapper
 * around GMP's mpq_class that pins down the canonical form used
 * everywhere (reduced, positive denominator, zero as 0/1) and the
 * canonical text form ("num/den", or a bare integer when den = 1).
 */

#include <cassert>
#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace apsum {

/// Arbitrary-precision integer.
using Integer = mpz_class;

class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(const Integer& n) : v_(n) {}

    /// Builds num/den in canonical form. Throws std::domain_error when den = 0.
    Rational(const Integer& num, const Integer& den) : v_(num, den) {
        if (::sgn(den) == 0)
            throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
        debug_check();
    }

    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    /// Parses "N", "-N" or "N/D". D must be unsigned digits and nonzero;
    /// the value is canonicalized (so "3/6" parses to 1/2).
    static Rational parse(std::string_view text);

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }

    bool is_zero() const { return ::sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return ::sgn(v_); }

    /// Canonical text form: "-1/2", "14", "0".
    std::string str() const;

    Rational operator-() const {
        Rational r;
        r.v_ = -v_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r;
        r.v_ = a.v_ + b.v_;
        r.debug_check();
        return r;
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational r;
        r.v_ = a.v_ - b.v_;
        r.debug_check();
        return r;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r;
        r.v_ = a.v_ * b.v_;
        r.debug_check();
        return r;
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero())
            throw std::domain_error("Rational: division by zero");
        Rational r;
        r.v_ = a.v_ / b.v_;
        r.debug_check();
        return r;
    }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    Rational reciprocal() const {
        if (is_zero())
            throw std::domain_error("Rational: reciprocal of zero");
        return Rational(denominator(), numerator());
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return ::cmp(a.v_, b.v_) == 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return ::cmp(a.v_, b.v_) <=> 0;
    }

private:
    mpq_class v_;

    void debug_check() const {
#ifndef NDEBUG
        // canonical form: positive denominator, coprime, 0 stored as 0/1
        assert(::sgn(v_.get_den()) > 0);
        Integer g;
        mpz_gcd(g.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
        assert(g == 1);
        assert(!is_zero() || v_.get_den() == 1);
#endif
    }
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// n! for n >= 0.
Integer factorial(long n);

/// C(n, k); 0 outside 0 <= k <= n (including negative n).
Integer binomial(long n, long k);

/// Rising factorial x(x+1)...(x+n-1), with pochhammer(x, 0) = 1.
Rational pochhammer(const Rational& x, long n);

/// x^p for p >= 0, with the convention 0^0 = 1.
Rational ratpow(const Rational& x, long p);

/// Parameters of one (hyper-)sum instance: the sum of (a + s*d)^p for
/// s = 0..n, iterated r times cumulatively (r = 0 is the plain sum).
struct SumQuery {
    long p;
    Rational a;
    Rational d;
    long n;
    long r;

    SumQuery(long p_, Rational a_, Rational d_, long n_, long r_ = 0)
        : p(p_), a(std::move(a_)), d(std::move(d_)), n(n_), r(r_) {
        if (d.is_zero())
            throw std::invalid_argument("SumQuery: d must be nonzero");
        if (p < 0 || n < 0 || r < 0)
            throw std::invalid_argument("SumQuery: p, n, r must be non-negative");
    }
};

}  // namespace apsum
