#pragma once

/**
 * @file series.hpp
 * @brief Exact truncated power series, Laurent series and bivariate series
 *        over Rational.
 *
 * A TruncatedSeries of order N carries the coefficients of z^0..z^N.
 * Arithmetic between series of different orders truncates to the smaller
 * order. A LaurentSeries adds a finite principal part (negative powers);
 * a BivariateSeries is a truncated series in t whose coefficients are
 * truncated series in z.
 */

#include <stdexcept>
#include <vector>

#include "apsum/rational.hpp"

namespace apsum {

struct ZeroConstantTerm : std::domain_error {
    ZeroConstantTerm()
        : std::domain_error("series inversion requires a nonzero constant term") {}
};

struct NonzeroConstantTerm : std::domain_error {
    NonzeroConstantTerm()
        : std::domain_error("series argument must have zero constant term") {}
};

class TruncatedSeries {
public:
    /// Zero series of the given order.
    explicit TruncatedSeries(int order) : c_(static_cast<size_t>(order) + 1) {
        if (order < 0)
            throw std::invalid_argument("TruncatedSeries: negative order");
    }

    /// Takes coeffs[k] as the coefficient of z^k; order = coeffs.size() - 1.
    explicit TruncatedSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty())
            throw std::invalid_argument("TruncatedSeries: empty coefficient vector");
    }

    static TruncatedSeries constant(const Rational& value, int order) {
        TruncatedSeries s(order);
        s.c_[0] = value;
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    const Rational& operator[](int k) const { return c_.at(static_cast<size_t>(k)); }
    Rational& operator[](int k) { return c_.at(static_cast<size_t>(k)); }

    const std::vector<Rational>& coeffs() const { return c_; }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Rational> c_;
};

/// e^{cz} truncated at the given order: coefficients c^k / k!.
TruncatedSeries exp_series(const Rational& c, int order);

/// (e^{dz} - 1) / z truncated at the given order; constant term is d.
/// This is the unit factor of e^{dz} - 1 = z * unit.
TruncatedSeries expm1_over_z(const Rational& d, int order);

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const Rational& c, const TruncatedSeries& s);
inline TruncatedSeries operator*(const TruncatedSeries& s, const Rational& c) { return c * s; }
TruncatedSeries operator-(const TruncatedSeries& s);

inline TruncatedSeries& operator+=(TruncatedSeries& a, const TruncatedSeries& b) {
    return a = a + b;
}
inline TruncatedSeries& operator-=(TruncatedSeries& a, const TruncatedSeries& b) {
    return a = a - b;
}
inline TruncatedSeries& operator*=(TruncatedSeries& a, const TruncatedSeries& b) {
    return a = a * b;
}

/// Multiplicative inverse up to the truncation order.
/// Throws ZeroConstantTerm when s[0] = 0.
TruncatedSeries invert(const TruncatedSeries& s);

/// s^k by repeated Cauchy product; pow(s, 0) = 1 at the same order.
TruncatedSeries pow(const TruncatedSeries& s, long k);

/// Drops coefficients above the requested order (which must not exceed s.order()).
TruncatedSeries truncated(const TruncatedSeries& s, int order);

/// Series with a finite principal part: coefficients of z^{-depth}..z^{top}.
class LaurentSeries {
public:
    /// coeffs[i] is the coefficient of z^{i - depth}.
    LaurentSeries(int depth, std::vector<Rational> coeffs)
        : depth_(depth), c_(std::move(coeffs)) {
        if (depth < 0)
            throw std::invalid_argument("LaurentSeries: negative depth");
        if (c_.size() < static_cast<size_t>(depth) + 1)
            throw std::invalid_argument("LaurentSeries: too few coefficients");
    }

    /// Depth-0 embedding of a plain truncated series.
    static LaurentSeries from_regular(const TruncatedSeries& s) {
        return LaurentSeries(0, s.coeffs());
    }

    int depth() const { return depth_; }
    int top_order() const { return static_cast<int>(c_.size()) - 1 - depth_; }

    /// Coefficient of z^k for -depth <= k <= top_order.
    const Rational& coeff(int k) const { return c_.at(static_cast<size_t>(k + depth_)); }

    const std::vector<Rational>& coeffs() const { return c_; }

    bool principal_part_is_zero() const;

    /// The z^0..z^top part as a TruncatedSeries.
    TruncatedSeries regular_part() const;

    friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;

private:
    int depth_;
    std::vector<Rational> c_;
};

// Addition aligns principal parts (max depth) and truncates to the
// smaller top order, mirroring TruncatedSeries semantics.
LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries operator*(const Rational& c, const LaurentSeries& s);

/// z^{-m} * numer / denom_unit, where denom_unit must be a unit
/// (nonzero constant term). This is how quotients by e^{dz} - 1 powers
/// are formed: the denominator is factored as z^m * unit first.
LaurentSeries laurent_from_quotient(const TruncatedSeries& numer, int denom_zero_order,
                                    const TruncatedSeries& denom_unit);

/// Terminating Gaussian hypergeometric series 2F1(1, -n; c; u) for a
/// series argument u with u[0] = 0. The sum stops at k = n because
/// (-n)_k vanishes beyond. Throws NonzeroConstantTerm when u[0] != 0.
TruncatedSeries gauss2f1_terminating(long n, const Rational& c, const TruncatedSeries& u);

/// Truncated series in t with z-series coefficients.
class BivariateSeries {
public:
    BivariateSeries(int t_order, int z_order);

    int t_order() const { return static_cast<int>(rows_.size()) - 1; }
    int z_order() const { return rows_.front().order(); }

    const TruncatedSeries& t_coeff(int r) const { return rows_.at(static_cast<size_t>(r)); }
    TruncatedSeries& t_coeff(int r) { return rows_.at(static_cast<size_t>(r)); }

    /// Coefficient of t^r z^p.
    const Rational& coeff(int r, int p) const { return t_coeff(r)[p]; }

    friend bool operator==(const BivariateSeries&, const BivariateSeries&) = default;

private:
    std::vector<TruncatedSeries> rows_;
};

BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b);
BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b);

/// Multiplies by an exact polynomial in t with z-series coefficients.
/// The t-order of s is preserved: contributions to t^j come only from
/// rows r <= j, so every kept coefficient is fully determined.
BivariateSeries mul_t_polynomial(const BivariateSeries& s,
                                 const std::vector<TruncatedSeries>& poly);

/// Same, for a polynomial in t with scalar coefficients.
BivariateSeries mul_t_polynomial(const BivariateSeries& s, const std::vector<Rational>& poly);

/// Expansion of the hyper-sum double generating function
///   sum_{s=0}^{n} (1-t)^{-(n+1-s)} e^{(a+sd)z}
/// to the given t- and z-orders. Each (1-t)^{-m} with m >= 1 expands
/// t-adically as sum_r C(m-1+r, r) t^r, so no non-unit division occurs.
BivariateSeries bivariate_expand(long n, const Rational& a, const Rational& d, int t_order,
                                 int z_order);

}  // namespace apsum
