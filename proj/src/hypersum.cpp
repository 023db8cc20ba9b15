#include "apsum/hypersum.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "apsum/bernoulli.hpp"

namespace apsum {

namespace {

using HyperKey = std::tuple<long, Rational, Rational>;  // (p, a, d)

// table[r][j] = S^{(r)}(j); row 0 is the running power sum, each later
// row the prefix sums of the one above.
using HyperTable = std::vector<std::vector<Rational>>;

std::map<HyperKey, HyperTable>& hyper_cache() {
    static std::map<HyperKey, HyperTable> cache;
    return cache;
}
std::mutex hyper_mutex;

void extend_table(HyperTable& t, const SumQuery& q) {
    const size_t want_rows = static_cast<size_t>(q.r) + 1;
    const size_t want_cols = static_cast<size_t>(q.n) + 1;

    if (t.empty())
        t.push_back({ratpow(q.a, q.p)});  // S^{(0)}(0)

    // widen existing rows
    const size_t have_cols = t.front().size();
    if (want_cols > have_cols) {
        for (size_t j = have_cols; j < want_cols; ++j)
            t[0].push_back(t[0][j - 1] +
                           ratpow(q.a + Rational(static_cast<long>(j)) * q.d, q.p));
        for (size_t k = 1; k < t.size(); ++k)
            for (size_t j = have_cols; j < want_cols; ++j)
                t[k].push_back(t[k][j - 1] + t[k - 1][j]);
    }

    // add new rows
    while (t.size() < want_rows) {
        const auto& prev = t.back();
        std::vector<Rational> row(prev.size());
        row[0] = prev[0];
        for (size_t j = 1; j < prev.size(); ++j)
            row[j] = row[j - 1] + prev[j];
        t.push_back(std::move(row));
    }
}

}  // namespace

Rational hypersum_recursive(const SumQuery& q) {
    std::lock_guard<std::mutex> lock(hyper_mutex);
    HyperTable& t = hyper_cache()[HyperKey(q.p, q.a, q.d)];
    extend_table(t, q);
    return t[static_cast<size_t>(q.r)][static_cast<size_t>(q.n)];
}

Rational hypersum_binomial(const SumQuery& q) {
    Rational acc;
    Rational term = q.a;
    for (long i = 0; i <= q.n; ++i) {
        acc += Rational(binomial(q.n + q.r - i, q.r)) * ratpow(term, q.p);
        term += q.d;
    }
    return acc;
}

Rational hypersum_genbernoulli(const SumQuery& q) {
    const Rational x = q.a / q.d;
    const long top = q.p + q.r + 1;
    Rational acc = gen_bernoulli(q.r + 1, top, x + Rational(q.r + q.n + 1)) /
                   Rational(factorial(top));
    for (long k = 0; k <= q.r; ++k)
        acc -= Rational(binomial(q.n + k, k)) *
               gen_bernoulli(q.r - k + 1, top - k, x + Rational(q.r - k)) /
               Rational(factorial(top - k));
    return Rational(factorial(q.p)) * ratpow(q.d, q.p) * acc;
}

TruncatedSeries hypersum_egf_direct(const Rational& a, const Rational& d, long n, long r,
                                    int order) {
    if (d.is_zero() || n < 0 || r < 0)
        throw std::invalid_argument("hypersum_egf_direct: invalid parameters");
    TruncatedSeries acc(order);
    Rational c = a;
    for (long k = 0; k <= n; ++k) {
        acc += Rational(binomial(n + r - k, r)) * exp_series(c, order);
        c += d;
    }
    return acc;
}

TruncatedSeries hypersum_egf_hypergeom(const Rational& a, const Rational& d, long n, long r,
                                       int order) {
    if (d.is_zero() || n < 0 || r < 0)
        throw std::invalid_argument("hypersum_egf_hypergeom: invalid parameters");
    // u = 1 - e^{dz} has zero constant term, so the 2F1 terminates in
    // both senses: at k = n and at the truncation order.
    TruncatedSeries u = -exp_series(d, order);
    u[0] += Rational(1);
    const TruncatedSeries f = gauss2f1_terminating(n, Rational(r + 2), u);
    return Rational(binomial(n + r + 1, r + 1)) * (exp_series(a, order) * f);
}

LaurentSeries hypersum_egf_laurent_assembly(const Rational& a, const Rational& d, long n,
                                            long r, int order) {
    if (d.is_zero() || n < 0 || r < 0)
        throw std::invalid_argument("hypersum_egf_laurent_assembly: invalid parameters");
    const int work = order + static_cast<int>(r) + 1;
    const TruncatedSeries unit = expm1_over_z(d, work);

    // e^{(a + d(r+n+1)) z} / (e^{dz}-1)^{r+1}
    LaurentSeries acc = laurent_from_quotient(
        exp_series(a + Rational(r + n + 1) * d, work), static_cast<int>(r) + 1,
        pow(unit, r + 1));

    for (long k = 0; k <= r; ++k) {
        const int m = static_cast<int>(r - k) + 1;
        const LaurentSeries term = laurent_from_quotient(
            exp_series(a + Rational(r - k) * d, work), m, pow(unit, m));
        acc = acc - Rational(binomial(n + k, k)) * term;
    }
    return acc;
}

TruncatedSeries hypersum_egf_laurent(const Rational& a, const Rational& d, long n, long r,
                                     int order) {
    const LaurentSeries assembly = hypersum_egf_laurent_assembly(a, d, n, r, order);
    if (!assembly.principal_part_is_zero()) {
        std::string parts;
        for (int k = -assembly.depth(); k < 0; ++k)
            if (!assembly.coeff(k).is_zero())
                parts += " [z^" + std::to_string(k) + "] = " + assembly.coeff(k).str();
        throw PrincipalPartResidue("hypersum_egf_laurent: principal part not cancelled:" +
                                   parts);
    }
    return truncated(assembly.regular_part(), order);
}

namespace {

// coefficients of (1-z)^m, degree m
std::vector<Rational> one_minus_z_pow(long m) {
    std::vector<Rational> c(static_cast<size_t>(m) + 1);
    for (long j = 0; j <= m; ++j) {
        c[static_cast<size_t>(j)] = Rational(binomial(m, j));
        if (j % 2 == 1)
            c[static_cast<size_t>(j)] = -c[static_cast<size_t>(j)];
    }
    return c;
}

void compare_coefficient(IdentityCheckReport& report, const std::string& where,
                         const Rational& expected, const Rational& actual) {
    ++report.coefficients_checked;
    if (expected != actual) {
        report.pass = false;
        report.mismatches.push_back({where, expected.str(), actual.str()});
    }
}

}  // namespace

IdentityCheckReport hypersum_ogf_check(long p, const Rational& a, const Rational& d, long n,
                                       int r_order) {
    if (r_order < 0)
        throw std::invalid_argument("hypersum_ogf_check: negative order");

    // oracle values S^{(0)}..S^{(R)}
    std::vector<Rational> lhs(static_cast<size_t>(r_order) + 1);
    for (int r = 0; r <= r_order; ++r)
        lhs[static_cast<size_t>(r)] = hypersum_recursive(SumQuery(p, a, d, n, r));

    const std::vector<Rational> clear = one_minus_z_pow(n + 1);

    // rhs polynomial sum_i (1-z)^i (a+id)^p, degree <= n
    std::vector<Rational> rhs(static_cast<size_t>(n) + 1);
    Rational term = a;
    for (long i = 0; i <= n; ++i) {
        const Rational w = ratpow(term, p);
        const std::vector<Rational> zi = one_minus_z_pow(i);
        for (size_t j = 0; j < zi.size(); ++j)
            rhs[j] += w * zi[j];
        term += d;
    }

    IdentityCheckReport report;
    for (int j = 0; j <= r_order; ++j) {
        Rational prod;
        for (size_t i = 0; i < clear.size() && static_cast<int>(i) <= j; ++i)
            prod += clear[i] * lhs[static_cast<size_t>(j) - i];
        const Rational expect =
            j <= n ? rhs[static_cast<size_t>(j)] : Rational(0);
        compare_coefficient(report, "z^" + std::to_string(j), expect, prod);
    }
    return report;
}

IdentityCheckReport hypersum_doublegf_check(const Rational& a, const Rational& d, long n,
                                            int t_order, int z_order) {
    if (t_order < 0 || z_order < 0)
        throw std::invalid_argument("hypersum_doublegf_check: negative order");

    // left side: the oracle double EGF, rows r = 0..R, entries S^{(r)}_p / p!
    BivariateSeries lhs(t_order, z_order);
    for (int r = 0; r <= t_order; ++r) {
        Rational pfac = 1;
        for (int p = 0; p <= z_order; ++p) {
            if (p > 0)
                pfac *= Rational(p);
            lhs.t_coeff(r)[p] = hypersum_recursive(SumQuery(p, a, d, n, r)) / pfac;
        }
    }

    // clear by (1-t)^{n+1} and by 1 - (1-t) e^{dz} = (1 - e^{dz}) + t e^{dz}
    const TruncatedSeries e_d = exp_series(d, z_order);
    TruncatedSeries one_minus_e = -e_d;
    one_minus_e[0] += Rational(1);
    BivariateSeries cleared =
        mul_t_polynomial(mul_t_polynomial(lhs, one_minus_z_pow(n + 1)),
                         std::vector<TruncatedSeries>{one_minus_e, e_d});

    // right side: e^{az} - (1-t)^{n+1} e^{(a+(n+1)d)z}
    const TruncatedSeries e_a = exp_series(a, z_order);
    const TruncatedSeries e_top = exp_series(a + Rational(n + 1) * d, z_order);
    const std::vector<Rational> binoms = one_minus_z_pow(n + 1);

    IdentityCheckReport report;
    for (int j = 0; j <= t_order; ++j) {
        TruncatedSeries expect(z_order);
        if (j == 0)
            expect += e_a;
        if (j <= n + 1)
            expect -= binoms[static_cast<size_t>(j)] * e_top;
        for (int m = 0; m <= z_order; ++m)
            compare_coefficient(report,
                                "t^" + std::to_string(j) + " z^" + std::to_string(m),
                                expect[m], cleared.coeff(j, m));
    }
    return report;
}

}  // namespace apsum
