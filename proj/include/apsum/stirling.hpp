#pragma once

/**
 * @file stirling.hpp
 * @brief Weighted Stirling numbers of the second kind and their integer
 *        specializations (classical Stirling, r-Stirling, r-Whitney).
 *
 * The weighted Stirling number S_n^i(x) = (1/i!) Delta^i x^n is computed
 * two independent ways: by the triangular recurrence
 *     S_{n+1}^i(x) = S_n^{i-1}(x) + (x+i) S_n^i(x)
 * (weighted_stirling, via memoized tables) and by the explicit
 * alternating sum (weighted_stirling_explicit), which serves as the
 * recurrence's oracle.
 */

#include <stdexcept>
#include <vector>

#include "apsum/rational.hpp"

namespace apsum {

struct IndexOutOfRange : std::out_of_range {
    explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

/// An integer-specialization accessor produced a non-integer value.
/// This signals an arithmetic bug, never a bad input.
struct NonIntegerResult : std::logic_error {
    explicit NonIntegerResult(const std::string& what) : std::logic_error(what) {}
};

/// Triangle of S_n^i(x) for one fixed weight x, grown on demand.
/// Completed rows are immutable; concurrent reads of built rows are safe.
class WeightedStirlingTable {
public:
    explicit WeightedStirlingTable(Rational weight);

    const Rational& weight() const { return x_; }
    long max_n() const { return static_cast<long>(rows_.size()) - 1; }

    /// Builds rows up to n (no-op if already built).
    void extend(long n);

    /// S_n^i(x); extends the table as needed. Returns 0 outside
    /// 0 <= i <= n (and 0 for n < 0).
    Rational value(long n, long i);

    /// Read-only access to an already-built entry, 0 out of range in i.
    const Rational& at(long n, long i) const;

private:
    Rational x_;
    std::vector<std::vector<Rational>> rows_;
};

/// S_n^i(x) by the memoized recurrence; 0 outside 0 <= i <= n.
Rational weighted_stirling(long n, long i, const Rational& x);

/// S_n^i(x) by the explicit sum (1/i!) sum_j (-1)^{i-j} C(i,j) (x+j)^n.
/// Throws IndexOutOfRange for i < 0 or i > n.
Rational weighted_stirling_explicit(long n, long i, const Rational& x);

/// Classical Stirling number of the second kind, S_n^k(0).
Integer stirling2(long n, long k);

/// r-Stirling number {n+r over k+r}_r = S_n^k(r): partitions of an
/// (n+r)-set into k+r blocks with the first r elements in distinct blocks.
Integer r_stirling2(long n, long k, long r);

/// r-Whitney number of the second kind W_{m,r}(n, i) = m^{n-i} S_n^i(r/m),
/// the coefficients of (mx+r)^n in the scaled falling-factorial basis
/// m^i x(x-1)...(x-i+1). Requires m >= 1, r >= 0.
Integer whitney(long m, long r, long n, long i);

}  // namespace apsum
