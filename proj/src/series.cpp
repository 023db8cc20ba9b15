#include "apsum/series.hpp"

#include <algorithm>

namespace apsum {

TruncatedSeries exp_series(const Rational& c, int order) {
    TruncatedSeries s(order);
    Rational term = 1;
    s[0] = term;
    for (int k = 1; k <= order; ++k) {
        term *= c;
        term /= Rational(k);
        s[k] = term;
    }
    return s;
}

TruncatedSeries expm1_over_z(const Rational& d, int order) {
    TruncatedSeries s(order);
    Rational term = d;  // d^{k+1} / (k+1)!
    s[0] = term;
    for (int k = 1; k <= order; ++k) {
        term *= d;
        term /= Rational(k + 1);
        s[k] = term;
    }
    return s;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int ord = std::min(a.order(), b.order());
    TruncatedSeries r(ord);
    for (int k = 0; k <= ord; ++k)
        r[k] = a[k] + b[k];
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int ord = std::min(a.order(), b.order());
    TruncatedSeries r(ord);
    for (int k = 0; k <= ord; ++k)
        r[k] = a[k] - b[k];
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int ord = std::min(a.order(), b.order());
    TruncatedSeries r(ord);
    for (int i = 0; i <= ord; ++i) {
        if (a[i].is_zero())
            continue;
        for (int j = 0; i + j <= ord; ++j) {
            if (b[j].is_zero())
                continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

TruncatedSeries operator*(const Rational& c, const TruncatedSeries& s) {
    TruncatedSeries r(s.order());
    for (int k = 0; k <= s.order(); ++k)
        r[k] = c * s[k];
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& s) { return Rational(-1) * s; }

TruncatedSeries invert(const TruncatedSeries& s) {
    if (s[0].is_zero())
        throw ZeroConstantTerm();
    const int ord = s.order();
    TruncatedSeries t(ord);
    const Rational lead = s[0].reciprocal();
    t[0] = lead;
    for (int n = 1; n <= ord; ++n) {
        Rational acc;
        for (int k = 1; k <= n; ++k)
            acc += s[k] * t[n - k];
        t[n] = -(lead * acc);
    }
    return t;
}

TruncatedSeries pow(const TruncatedSeries& s, long k) {
    if (k < 0)
        throw std::invalid_argument("pow: negative exponent");
    TruncatedSeries acc = TruncatedSeries::constant(1, s.order());
    TruncatedSeries base = s;
    while (k > 0) {
        if (k & 1)
            acc *= base;
        k >>= 1;
        if (k > 0)
            base *= base;
    }
    return acc;
}

TruncatedSeries truncated(const TruncatedSeries& s, int order) {
    if (order < 0 || order > s.order())
        throw std::invalid_argument("truncated: order out of range");
    return TruncatedSeries(
        std::vector<Rational>(s.coeffs().begin(), s.coeffs().begin() + order + 1));
}

bool LaurentSeries::principal_part_is_zero() const {
    for (int i = 0; i < depth_; ++i)
        if (!c_[static_cast<size_t>(i)].is_zero())
            return false;
    return true;
}

TruncatedSeries LaurentSeries::regular_part() const {
    return TruncatedSeries(std::vector<Rational>(c_.begin() + depth_, c_.end()));
}

namespace {

LaurentSeries laurent_combine(const LaurentSeries& a, const LaurentSeries& b, int bsign) {
    const int depth = std::max(a.depth(), b.depth());
    const int top = std::min(a.top_order(), b.top_order());
    std::vector<Rational> c(static_cast<size_t>(depth + top) + 1);
    for (int k = -depth; k <= top; ++k) {
        Rational v;
        if (k >= -a.depth())
            v += a.coeff(k);
        if (k >= -b.depth())
            v += (bsign > 0 ? b.coeff(k) : -b.coeff(k));
        c[static_cast<size_t>(k + depth)] = v;
    }
    return LaurentSeries(depth, std::move(c));
}

}  // namespace

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    return laurent_combine(a, b, +1);
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
    return laurent_combine(a, b, -1);
}

LaurentSeries operator*(const Rational& c, const LaurentSeries& s) {
    std::vector<Rational> r = s.coeffs();
    for (auto& x : r)
        x *= c;
    return LaurentSeries(s.depth(), std::move(r));
}

LaurentSeries laurent_from_quotient(const TruncatedSeries& numer, int denom_zero_order,
                                    const TruncatedSeries& denom_unit) {
    if (denom_zero_order < 0)
        throw std::invalid_argument("laurent_from_quotient: negative shift");
    const TruncatedSeries q = numer * invert(denom_unit);
    return LaurentSeries(denom_zero_order, q.coeffs());
}

TruncatedSeries gauss2f1_terminating(long n, const Rational& c, const TruncatedSeries& u) {
    if (n < 0)
        throw std::invalid_argument("gauss2f1_terminating: negative upper parameter");
    if (!u[0].is_zero())
        throw NonzeroConstantTerm();
    const int ord = u.order();
    TruncatedSeries acc = TruncatedSeries::constant(1, ord);
    TruncatedSeries u_pow = TruncatedSeries::constant(1, ord);
    const long kmax = std::min(n, static_cast<long>(ord));
    for (long k = 1; k <= kmax; ++k) {
        const Rational den = pochhammer(c, k) * Rational(factorial(k));
        if (den.is_zero())
            throw std::domain_error("gauss2f1_terminating: lower parameter hits a pole");
        const Rational coef =
            pochhammer(Rational(1), k) * pochhammer(Rational(-n), k) / den;
        u_pow *= u;
        acc += coef * u_pow;
    }
    return acc;
}

BivariateSeries::BivariateSeries(int t_order, int z_order)
    : rows_(static_cast<size_t>(t_order) + 1, TruncatedSeries(z_order)) {
    if (t_order < 0)
        throw std::invalid_argument("BivariateSeries: negative t order");
}

BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b) {
    const int tr = std::min(a.t_order(), b.t_order());
    const int zr = std::min(a.z_order(), b.z_order());
    BivariateSeries r(tr, zr);
    for (int i = 0; i <= tr; ++i)
        r.t_coeff(i) = truncated(a.t_coeff(i), zr) + truncated(b.t_coeff(i), zr);
    return r;
}

BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b) {
    const int tr = std::min(a.t_order(), b.t_order());
    const int zr = std::min(a.z_order(), b.z_order());
    BivariateSeries r(tr, zr);
    for (int i = 0; i <= tr; ++i)
        r.t_coeff(i) = truncated(a.t_coeff(i), zr) - truncated(b.t_coeff(i), zr);
    return r;
}

BivariateSeries mul_t_polynomial(const BivariateSeries& s,
                                 const std::vector<TruncatedSeries>& poly) {
    if (poly.empty())
        throw std::invalid_argument("mul_t_polynomial: empty polynomial");
    int zr = s.z_order();
    for (const auto& p : poly)
        zr = std::min(zr, p.order());
    BivariateSeries r(s.t_order(), zr);
    for (int j = 0; j <= s.t_order(); ++j) {
        const int dmax = std::min<int>(j, static_cast<int>(poly.size()) - 1);
        for (int deg = 0; deg <= dmax; ++deg)
            r.t_coeff(j) += poly[static_cast<size_t>(deg)] * s.t_coeff(j - deg);
    }
    return r;
}

BivariateSeries mul_t_polynomial(const BivariateSeries& s, const std::vector<Rational>& poly) {
    if (poly.empty())
        throw std::invalid_argument("mul_t_polynomial: empty polynomial");
    BivariateSeries r(s.t_order(), s.z_order());
    for (int j = 0; j <= s.t_order(); ++j) {
        const int dmax = std::min<int>(j, static_cast<int>(poly.size()) - 1);
        for (int deg = 0; deg <= dmax; ++deg)
            r.t_coeff(j) += poly[static_cast<size_t>(deg)] * s.t_coeff(j - deg);
    }
    return r;
}

BivariateSeries bivariate_expand(long n, const Rational& a, const Rational& d, int t_order,
                                 int z_order) {
    if (n < 0)
        throw std::invalid_argument("bivariate_expand: negative n");
    BivariateSeries out(t_order, z_order);
    for (long s = 0; s <= n; ++s) {
        const TruncatedSeries e = exp_series(a + Rational(s) * d, z_order);
        // (1-t)^{-(n+1-s)} = sum_r C(n-s+r, r) t^r
        for (int r = 0; r <= t_order; ++r)
            out.t_coeff(r) += Rational(binomial(n - s + r, r)) * e;
    }
    return out;
}

}  // namespace apsum
