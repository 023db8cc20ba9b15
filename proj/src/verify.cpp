#include "apsum/verify.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "apsum/bernoulli.hpp"
#include "apsum/hypersum.hpp"
#include "apsum/powersum.hpp"
#include "apsum/series.hpp"
#include "apsum/stirling.hpp"

namespace apsum {

namespace {

struct Grid {
    // power-sum agreement
    long ps_p, ps_n;
    std::vector<std::pair<Rational, Rational>> ps_pairs;
    // hyper-sum agreement
    long hs_p, hs_n, hs_r;
    std::vector<std::pair<Rational, Rational>> hs_pairs;
    // EGF triple agreement
    int egf_order;
    long egf_n, egf_r;
    std::vector<std::pair<Rational, Rational>> egf_pairs;
    // special numbers
    long st_n;
    std::vector<Rational> st_weights;
    long wh_n;
    // cleared GF identities
    int gf_order;
    long gf_n;
    std::vector<std::pair<Rational, Rational>> gf_pairs;
    // Bernoulli
    long bern_n;
    std::vector<Rational> bern_points;
};

Grid small_grid() {
    Grid g;
    g.ps_p = 6;
    g.ps_n = 8;
    g.ps_pairs = {{0, 1}, {1, 2}, {-1, 2}, {Rational(1, 2), Rational(1, 3)}};
    g.hs_p = 6;
    g.hs_n = 8;
    g.hs_r = 3;
    g.hs_pairs = g.ps_pairs;
    g.egf_order = 8;
    g.egf_n = 3;
    g.egf_r = 3;
    g.egf_pairs = {{0, 1}, {1, 2}};
    g.st_n = 8;
    g.st_weights = {Rational(0), Rational(1, 2), Rational(2), Rational(-1, 3)};
    g.wh_n = 8;
    g.gf_order = 8;
    g.gf_n = 3;
    g.gf_pairs = {{0, 1}, {1, 2}};
    g.bern_n = 8;
    g.bern_points = {Rational(0), Rational(1), Rational(1, 2), Rational(-2, 3), Rational(3)};
    return g;
}

Grid full_grid() {
    Grid g;
    g.ps_p = 8;
    g.ps_n = 12;
    g.ps_pairs = {{0, 1},  {1, 1},
                  {1, 2},  {2, 3},
                  {-1, 2}, {Rational(1, 2), Rational(1, 3)},
                  {5, -2}};
    g.hs_p = 6;
    g.hs_n = 10;
    g.hs_r = 5;
    g.hs_pairs = {{0, 1}, {1, 1}, {1, 2}, {-1, 2}, {Rational(1, 2), Rational(1, 3)}};
    g.egf_order = 10;
    g.egf_n = 5;
    g.egf_r = 4;
    g.egf_pairs = {{0, 1}, {1, 2}};
    g.st_n = 12;
    g.st_weights = {Rational(0),      Rational(1),      Rational(2),
                    Rational(1, 2),   Rational(-1, 3),  Rational(5, 2)};
    g.wh_n = 10;
    g.gf_order = 10;
    g.gf_n = 4;
    g.gf_pairs = {{0, 1}, {1, 2}, {Rational(1, 2), Rational(1, 3)}};
    g.bern_n = 12;
    g.bern_points = {Rational(0), Rational(1), Rational(1, 2), Rational(-2, 3), Rational(3)};
    return g;
}

constexpr size_t kMismatchCap = 8;

class Recorder {
public:
    explicit Recorder(VerifyReport& report) : report_(report) {}

    /// Starts a record; subsequent fail() calls attach to it.
    void begin(std::string check, std::string params, std::string source) {
        current_ = CheckRecord{std::move(check), std::move(params), std::move(source),
                               true, {}};
        overflow_ = 0;
    }

    void fail(const std::string& detail) {
        current_.pass = false;
        if (current_.mismatches.size() < kMismatchCap)
            current_.mismatches.push_back(detail);
        else
            ++overflow_;
    }

    void expect_equal(const std::string& where, const Rational& expected,
                      const Rational& actual) {
        if (expected != actual)
            fail(where + ": expected " + expected.str() + ", got " + actual.str());
    }

    void commit() {
        if (overflow_ > 0)
            current_.mismatches.push_back("(+" + std::to_string(overflow_) +
                                          " more mismatches)");
        (current_.pass ? report_.passed : report_.failed)++;
        report_.records.push_back(std::move(current_));
    }

private:
    VerifyReport& report_;
    CheckRecord current_;
    size_t overflow_ = 0;
};

std::string pair_params(const Rational& a, const Rational& d, const std::string& rest) {
    return "a=" + a.str() + " d=" + d.str() + (rest.empty() ? "" : " " + rest);
}

// ---- plumbing properties --------------------------------------------------

void check_pascal(Recorder& rec) {
    rec.begin("binomial-pascal", "n<=30", "Pascal recurrence");
    for (long n = 1; n <= 30; ++n)
        for (long k = 0; k <= n; ++k) {
            const Integer lhs = binomial(n, k);
            const Integer rhs = binomial(n - 1, k - 1) + binomial(n - 1, k);
            if (lhs != rhs)
                rec.fail("n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
    rec.commit();
}

Rational random_rational(std::mt19937& rng) {
    const long num = static_cast<long>(rng() % 21) - 10;
    const long den = static_cast<long>(rng() % 10) + 1;
    return Rational(num, den);
}

void check_pochhammer_splitting(Recorder& rec) {
    rec.begin("pochhammer-splitting", "random x, m+n<=16, seed 2024",
              "rising-factorial splitting identity");
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        const Rational x = random_rational(rng);
        const long m = static_cast<long>(rng() % 9);
        const long n = static_cast<long>(rng() % 9);
        const Rational whole = pochhammer(x, m + n);
        const Rational split = pochhammer(x, m) * pochhammer(x + Rational(m), n);
        if (whole != split)
            rec.fail("x=" + x.str() + " m=" + std::to_string(m) + " n=" + std::to_string(n));
    }
    rec.commit();
}

void check_rational_roundtrip(const Grid& g, Recorder& rec) {
    rec.begin("rational-roundtrip", "grid scalars and derived values",
              "parse(str(x)) == x");
    std::vector<Rational> values = g.bern_points;
    for (const auto& [a, d] : g.ps_pairs) {
        values.push_back(a);
        values.push_back(d);
        values.push_back(a / d);
        values.push_back(powersum_direct(SumQuery(5, a, d, 7)));
    }
    std::mt19937 rng(7);
    for (int i = 0; i < 16; ++i)
        values.push_back(random_rational(rng));
    for (const Rational& v : values) {
        const std::string s = v.str();
        if (Rational::parse(s) != v || Rational::parse(s).str() != s)
            rec.fail("value " + s);
    }
    rec.commit();
}

TruncatedSeries random_series(std::mt19937& rng, int order) {
    TruncatedSeries s(order);
    for (int k = 0; k <= order; ++k)
        s[k] = random_rational(rng);
    return s;
}

void check_series_ring_axioms(Recorder& rec) {
    rec.begin("series-ring-axioms", "random series, order<=10, seed 99",
              "ring axioms");
    std::mt19937 rng(99);
    for (int trial = 0; trial < 12; ++trial) {
        const int order = static_cast<int>(rng() % 11);
        const TruncatedSeries s = random_series(rng, order);
        const TruncatedSeries t = random_series(rng, order);
        const TruncatedSeries u = random_series(rng, order);
        if ((s + t) + u != s + (t + u))
            rec.fail("associativity of + at trial " + std::to_string(trial));
        if ((s * t) * u != s * (t * u))
            rec.fail("associativity of * at trial " + std::to_string(trial));
        if (s * (t + u) != s * t + s * u)
            rec.fail("distributivity at trial " + std::to_string(trial));
        if (s * t != t * s)
            rec.fail("commutativity at trial " + std::to_string(trial));
    }
    rec.commit();
}

void check_series_inversion(Recorder& rec) {
    rec.begin("series-inversion", "random unit series, order<=10, seed 41",
              "s * invert(s) == 1");
    std::mt19937 rng(41);
    for (int trial = 0; trial < 12; ++trial) {
        const int order = static_cast<int>(rng() % 11);
        TruncatedSeries s = random_series(rng, order);
        if (s[0].is_zero())
            s[0] = Rational(1 + static_cast<long>(rng() % 5));
        if (s * invert(s) != TruncatedSeries::constant(1, order))
            rec.fail("trial " + std::to_string(trial));
    }
    rec.commit();
}

void check_exp_additivity(const Grid& g, Recorder& rec) {
    rec.begin("series-exp-additivity", "grid scalars, order 10",
              "exp(c1+c2) == exp(c1)*exp(c2)");
    for (const Rational& c1 : g.bern_points)
        for (const Rational& c2 : g.bern_points)
            if (exp_series(c1 + c2, 10) != exp_series(c1, 10) * exp_series(c2, 10))
                rec.fail("c1=" + c1.str() + " c2=" + c2.str());
    rec.commit();
}

// ---- special numbers ------------------------------------------------------

void check_stirling_recurrence_vs_explicit(const Grid& g, Recorder& rec) {
    for (const Rational& x : g.st_weights) {
        rec.begin("stirling-recurrence-vs-explicit",
                  "x=" + x.str() + " n<=" + std::to_string(g.st_n),
                  "explicit alternating sum");
        for (long n = 0; n <= g.st_n; ++n)
            for (long i = 0; i <= n; ++i)
                rec.expect_equal("n=" + std::to_string(n) + " i=" + std::to_string(i),
                                 weighted_stirling_explicit(n, i, x),
                                 weighted_stirling(n, i, x));
        rec.commit();
    }
}

void check_stirling_egf(const Grid& g, Recorder& rec) {
    const int order = static_cast<int>(g.st_n);
    for (size_t w = 0; w < g.st_weights.size() && w < 3; ++w) {
        const Rational& x = g.st_weights[w];
        rec.begin("stirling-egf", "x=" + x.str() + " i<=5 order=" + std::to_string(order),
                  "EGF (1/i!) e^{xz} (e^z-1)^i");
        for (long i = 0; i <= 5; ++i) {
            TruncatedSeries em1 = exp_series(Rational(1), order);
            em1[0] -= Rational(1);
            const TruncatedSeries egf = Rational(1) / Rational(factorial(i)) *
                                        (exp_series(x, order) * pow(em1, i));
            Rational nfac = 1;
            for (long n = 0; n <= order; ++n) {
                if (n > 0)
                    nfac *= Rational(n);
                rec.expect_equal("i=" + std::to_string(i) + " n=" + std::to_string(n),
                                 weighted_stirling(n, i, x),
                                 nfac * egf[static_cast<int>(n)]);
            }
        }
        rec.commit();
    }
}

void check_whitney_egf(const Grid& g, Recorder& rec) {
    const int order = static_cast<int>(g.wh_n);
    for (long m = 1; m <= 3; ++m)
        for (long r = 0; r <= 2; ++r) {
            rec.begin("whitney-egf",
                      "m=" + std::to_string(m) + " r=" + std::to_string(r) + " i<=4 n<=" +
                          std::to_string(g.wh_n),
                      "EGF (1/(m^i i!)) e^{rz} (e^{mz}-1)^i");
            for (long i = 0; i <= 4; ++i) {
                TruncatedSeries em1 = exp_series(Rational(m), order);
                em1[0] -= Rational(1);
                const Rational norm =
                    Rational(1) / (ratpow(Rational(m), i) * Rational(factorial(i)));
                const TruncatedSeries egf = norm * (exp_series(Rational(r), order) * pow(em1, i));
                Rational nfac = 1;
                for (long n = 0; n <= g.wh_n; ++n) {
                    if (n > 0)
                        nfac *= Rational(n);
                    rec.expect_equal(
                        "i=" + std::to_string(i) + " n=" + std::to_string(n),
                        Rational(whitney(m, r, n, i)), nfac * egf[static_cast<int>(n)]);
                }
            }
            rec.commit();
        }
}

void check_special_integrality(const Grid& g, Recorder& rec) {
    rec.begin("special-integrality",
              "r-Stirling n<=" + std::to_string(g.st_n) + " r<=3; Whitney m<=3 r<=2 n<=" +
                  std::to_string(g.wh_n),
              "integer-valued accessors");
    try {
        for (long r = 0; r <= 3; ++r)
            for (long n = 0; n <= g.st_n; ++n)
                for (long k = 0; k <= n; ++k)
                    (void)r_stirling2(n, k, r);
        for (long m = 1; m <= 3; ++m)
            for (long r = 0; r <= 2; ++r)
                for (long n = 0; n <= g.wh_n; ++n)
                    for (long i = 0; i <= n; ++i)
                        (void)whitney(m, r, n, i);
    } catch (const NonIntegerResult& e) {
        rec.fail(e.what());
    }
    rec.commit();
}

// ---- Bernoulli ------------------------------------------------------------

void check_bernoulli_stirling_representation(const Grid& g, Recorder& rec) {
    rec.begin("bernoulli-stirling-representation",
              "n<=" + std::to_string(g.bern_n) + ", " + std::to_string(g.bern_points.size()) +
                  " points",
              "series-division polynomial");
    rec.expect_equal("B_1(0)", Rational(-1, 2), bernoulli_via_stirling(1, Rational(0)));
    rec.expect_equal("B_1(0) via polynomial", Rational(-1, 2),
                     evaluate(bernoulli_poly(1), Rational(0)));
    for (long n = 0; n <= g.bern_n; ++n)
        for (const Rational& x : g.bern_points)
            rec.expect_equal("n=" + std::to_string(n) + " x=" + x.str(),
                             evaluate(bernoulli_poly(n), x), bernoulli_via_stirling(n, x));
    rec.commit();
}

void check_bernoulli_gf_consistency(const Grid& g, Recorder& rec) {
    const int order = 10;
    for (long alpha = 0; alpha <= 3; ++alpha) {
        rec.begin("bernoulli-gf-consistency",
                  "alpha=" + std::to_string(alpha) + " order=" + std::to_string(order),
                  "series (z/(e^z-1))^alpha e^{xz}");
        for (size_t w = 0; w < g.bern_points.size() && w < 3; ++w) {
            const Rational& x = g.bern_points[w];
            const TruncatedSeries direct =
                pow(invert(expm1_over_z(Rational(1), order)), alpha) * exp_series(x, order);
            Rational nfac = 1;
            for (long n = 0; n <= order; ++n) {
                if (n > 0)
                    nfac *= Rational(n);
                rec.expect_equal("x=" + x.str() + " n=" + std::to_string(n),
                                 nfac * direct[static_cast<int>(n)],
                                 gen_bernoulli(alpha, n, x));
            }
        }
        rec.commit();
    }
}

// ---- power sums -----------------------------------------------------------

void check_powersum_agreement(const Grid& g, Recorder& rec) {
    for (const auto& [a, d] : g.ps_pairs) {
        rec.begin("powersum-agreement",
                  pair_params(a, d, "p<=" + std::to_string(g.ps_p) + " n<=" +
                                        std::to_string(g.ps_n)),
                  "direct-summation oracle");
        for (long p = 0; p <= g.ps_p; ++p)
            for (long n = 0; n <= g.ps_n; ++n) {
                const SumQuery q(p, a, d, n);
                const Rational want = powersum_direct(q);
                const std::string at = "p=" + std::to_string(p) + " n=" + std::to_string(n);
                rec.expect_equal(at + " stirling", want, powersum_stirling(q));
                rec.expect_equal(at + " bernoulli-diff", want, powersum_bernoulli_diff(q));
                rec.expect_equal(at + " bernoulli-sum", want, powersum_bernoulli_sum(q));
                if (rstirling_applicability(q).applicable)
                    rec.expect_equal(at + " rstirling", want, powersum_rstirling(q));
                if (whitney_applicability(q).applicable)
                    rec.expect_equal(at + " whitney", want, powersum_whitney(q));
            }
        rec.commit();
    }
}

void check_powersum_egf(const Grid& g, Recorder& rec) {
    const int order = static_cast<int>(std::min<long>(10, g.ps_p + 2));
    long n = 3;
    for (const auto& [a, d] : g.ps_pairs) {
        rec.begin("powersum-egf",
                  pair_params(a, d, "n=" + std::to_string(n) + " order=" +
                                        std::to_string(order)),
                  "direct-summation oracle");
        const TruncatedSeries egf = powersum_egf(a, d, n, order);
        Rational pfac = 1;
        for (long p = 0; p <= order; ++p) {
            if (p > 0)
                pfac *= Rational(p);
            rec.expect_equal("p=" + std::to_string(p),
                             powersum_direct(SumQuery(p, a, d, n)),
                             pfac * egf[static_cast<int>(p)]);
        }
        rec.commit();
        ++n;  // vary n across pairs
    }
}

void check_powersum_homogeneity(const Grid& g, Recorder& rec) {
    const std::vector<Rational> lambdas = {Rational(2), Rational(-1, 3)};
    rec.begin("powersum-homogeneity", "lambda in {2, -1/3}, p<=6 n<=6",
              "S_{p,(la,ld)}(n) == l^p S_{p,(a,d)}(n)");
    for (const auto& [a, d] : g.ps_pairs)
        for (const Rational& lambda : lambdas)
            for (long p = 0; p <= 6; ++p)
                for (long n = 0; n <= 6; ++n) {
                    const Rational scaled =
                        powersum_stirling(SumQuery(p, lambda * a, lambda * d, n));
                    const Rational base = powersum_direct(SumQuery(p, a, d, n));
                    rec.expect_equal(pair_params(a, d, "lambda=" + lambda.str() +
                                                           " p=" + std::to_string(p) +
                                                           " n=" + std::to_string(n)),
                                     ratpow(lambda, p) * base, scaled);
                }
    rec.commit();
}

// ---- hyper sums -----------------------------------------------------------

void check_hypersum_agreement(const Grid& g, Recorder& rec) {
    for (const auto& [a, d] : g.hs_pairs) {
        rec.begin("hypersum-agreement",
                  pair_params(a, d, "p<=" + std::to_string(g.hs_p) + " n<=" +
                                        std::to_string(g.hs_n) + " r<=" +
                                        std::to_string(g.hs_r)),
                  "recursive oracle");
        for (long p = 0; p <= g.hs_p; ++p)
            for (long n = 0; n <= g.hs_n; ++n)
                for (long r = 0; r <= g.hs_r; ++r) {
                    const SumQuery q(p, a, d, n, r);
                    const Rational want = hypersum_recursive(q);
                    const std::string at = "p=" + std::to_string(p) + " n=" +
                                           std::to_string(n) + " r=" + std::to_string(r);
                    rec.expect_equal(at + " binomial", want, hypersum_binomial(q));
                    rec.expect_equal(at + " genbernoulli", want, hypersum_genbernoulli(q));
                }
        rec.commit();
    }
}

void check_hypersum_reduction(const Grid& g, Recorder& rec) {
    for (const auto& [a, d] : g.hs_pairs) {
        rec.begin("hypersum-reduction",
                  pair_params(a, d, "r=0 paths and p=0 values"),
                  "power-sum module / n+1");
        for (long p = 0; p <= g.hs_p; ++p)
            for (long n = 0; n <= g.hs_n; ++n) {
                const SumQuery q(p, a, d, n, 0);
                const Rational want = powersum_direct(q);
                const std::string at = "p=" + std::to_string(p) + " n=" + std::to_string(n);
                rec.expect_equal(at + " recursive@r=0", want, hypersum_recursive(q));
                rec.expect_equal(at + " binomial@r=0", want, hypersum_binomial(q));
                rec.expect_equal(at + " genbernoulli@r=0", want, hypersum_genbernoulli(q));
            }
        for (long n = 0; n <= g.hs_n; ++n)
            rec.expect_equal("p=0 n=" + std::to_string(n), Rational(n + 1),
                             powersum_direct(SumQuery(0, a, d, n)));
        rec.commit();
    }
}

void check_hypersum_column_recursion(const Grid& g, Recorder& rec) {
    for (const auto& [a, d] : g.hs_pairs) {
        rec.begin("hypersum-column-recursion",
                  pair_params(a, d, "p<=4 n<=" + std::to_string(g.hs_n) + " r<=" +
                                        std::to_string(g.hs_r)),
                  "defining recursion S^{(r)}(n) - S^{(r)}(n-1) == S^{(r-1)}(n)");
        for (long p = 0; p <= 4; ++p)
            for (long r = 1; r <= g.hs_r; ++r)
                for (long n = 1; n <= g.hs_n; ++n) {
                    const std::string at = "p=" + std::to_string(p) + " n=" +
                                           std::to_string(n) + " r=" + std::to_string(r);
                    rec.expect_equal(at + " binomial",
                                     hypersum_binomial(SumQuery(p, a, d, n, r - 1)),
                                     hypersum_binomial(SumQuery(p, a, d, n, r)) -
                                         hypersum_binomial(SumQuery(p, a, d, n - 1, r)));
                    rec.expect_equal(at + " genbernoulli",
                                     hypersum_genbernoulli(SumQuery(p, a, d, n, r - 1)),
                                     hypersum_genbernoulli(SumQuery(p, a, d, n, r)) -
                                         hypersum_genbernoulli(SumQuery(p, a, d, n - 1, r)));
                }
        rec.commit();
    }
}

void check_hockey_stick(Recorder& rec) {
    rec.begin("hockey-stick", "n<=12 r<=6", "binomial telescoping, term-by-term sum");
    for (long n = 0; n <= 12; ++n)
        for (long r = 1; r <= 6; ++r)
            for (long i = 0; i <= n; ++i) {
                Integer sum = 0;
                for (long j = i; j <= n; ++j)
                    sum += binomial(j - i + r - 1, r - 1);
                if (sum != binomial(n + r - i, r))
                    rec.fail("n=" + std::to_string(n) + " r=" + std::to_string(r) +
                             " i=" + std::to_string(i));
            }
    rec.commit();
}

void check_egf_triple(const Grid& g, Recorder& rec) {
    for (const auto& [a, d] : g.egf_pairs) {
        rec.begin("hypersum-egf-triple",
                  pair_params(a, d, "n<=" + std::to_string(g.egf_n) + " r<=" +
                                        std::to_string(g.egf_r) + " order=" +
                                        std::to_string(g.egf_order)),
                  "three independent EGF constructions");
        for (long n = 0; n <= g.egf_n; ++n)
            for (long r = 0; r <= g.egf_r; ++r) {
                const std::string at = "n=" + std::to_string(n) + " r=" + std::to_string(r);
                const TruncatedSeries direct =
                    hypersum_egf_direct(a, d, n, r, g.egf_order);
                const TruncatedSeries hyp =
                    hypersum_egf_hypergeom(a, d, n, r, g.egf_order);
                if (direct != hyp)
                    rec.fail(at + ": hypergeometric EGF differs from direct EGF");
                const LaurentSeries assembly =
                    hypersum_egf_laurent_assembly(a, d, n, r, g.egf_order);
                if (!assembly.principal_part_is_zero())
                    rec.fail(at + ": Laurent principal part is nonzero");
                else if (truncated(assembly.regular_part(), g.egf_order) != direct)
                    rec.fail(at + ": Laurent EGF differs from direct EGF");
            }
        rec.commit();
    }
}

void check_egf_values(const Grid& g, Recorder& rec) {
    for (const auto& [a, d] : g.egf_pairs) {
        rec.begin("hypersum-egf-values",
                  pair_params(a, d, "n<=3 r<=2 order=" + std::to_string(g.egf_order)),
                  "recursive oracle");
        for (long n = 0; n <= 3; ++n)
            for (long r = 0; r <= 2; ++r) {
                const TruncatedSeries egf = hypersum_egf_direct(a, d, n, r, g.egf_order);
                Rational pfac = 1;
                for (long p = 0; p <= g.egf_order; ++p) {
                    if (p > 0)
                        pfac *= Rational(p);
                    rec.expect_equal("n=" + std::to_string(n) + " r=" + std::to_string(r) +
                                         " p=" + std::to_string(p),
                                     hypersum_recursive(SumQuery(p, a, d, n, r)),
                                     pfac * egf[static_cast<int>(p)]);
                }
            }
        rec.commit();
    }
}

void check_ogf_cleared(const Grid& g, Recorder& rec) {
    for (const auto& [a, d] : g.gf_pairs)
        for (long p = 0; p <= 4; ++p) {
            rec.begin("hypersum-ogf-cleared",
                      pair_params(a, d, "p=" + std::to_string(p) + " n<=" +
                                            std::to_string(g.gf_n) + " R=" +
                                            std::to_string(g.gf_order)),
                      "recursive oracle, cleared identity");
            for (long n = 0; n <= g.gf_n; ++n) {
                const IdentityCheckReport r = hypersum_ogf_check(p, a, d, n, g.gf_order);
                for (const auto& mm : r.mismatches)
                    rec.fail("n=" + std::to_string(n) + " " + mm.where + ": expected " +
                             mm.expected + ", got " + mm.actual);
            }
            rec.commit();
        }
}

void check_doublegf_cleared(const Grid& g, Recorder& rec) {
    for (const auto& [a, d] : g.gf_pairs) {
        rec.begin("hypersum-doublegf-cleared",
                  pair_params(a, d, "n<=" + std::to_string(g.gf_n) + " R=N=" +
                                        std::to_string(g.gf_order)),
                  "recursive oracle, cleared identity");
        for (long n = 0; n <= g.gf_n; ++n) {
            const IdentityCheckReport r =
                hypersum_doublegf_check(a, d, n, g.gf_order, g.gf_order);
            for (const auto& mm : r.mismatches)
                rec.fail("n=" + std::to_string(n) + " " + mm.where + ": expected " +
                         mm.expected + ", got " + mm.actual);
        }
        rec.commit();
    }
}

void check_doublegf_expand(const Grid& g, Recorder& rec) {
    for (const auto& [a, d] : g.gf_pairs) {
        rec.begin("doublegf-expand",
                  pair_params(a, d, "n<=3 t<=3 z<=4"),
                  "recursive oracle / power-sum EGF");
        for (long n = 0; n <= 3; ++n) {
            const BivariateSeries b = bivariate_expand(n, a, d, 3, 4);
            if (b.t_coeff(0) != powersum_egf(a, d, n, 4))
                rec.fail("n=" + std::to_string(n) + ": [t^0] differs from power-sum EGF");
            for (int r = 0; r <= 3; ++r) {
                Rational pfac = 1;
                for (int p = 0; p <= 4; ++p) {
                    if (p > 0)
                        pfac *= Rational(p);
                    rec.expect_equal("n=" + std::to_string(n) + " r=" + std::to_string(r) +
                                         " p=" + std::to_string(p),
                                     hypersum_recursive(SumQuery(p, a, d, n, r)),
                                     pfac * b.coeff(r, p));
                }
            }
        }
        rec.commit();
    }
}

}  // namespace

VerifyReport run_verify(const std::string& grid_name) {
    Grid g;
    if (grid_name == "small")
        g = small_grid();
    else if (grid_name == "full")
        g = full_grid();
    else
        throw std::invalid_argument("run_verify: unknown grid \"" + grid_name + "\"");

    VerifyReport report;
    report.grid = grid_name;
    const auto t0 = std::chrono::steady_clock::now();
    Recorder rec(report);

    check_pascal(rec);
    check_pochhammer_splitting(rec);
    check_rational_roundtrip(g, rec);
    check_series_ring_axioms(rec);
    check_series_inversion(rec);
    check_exp_additivity(g, rec);
    check_stirling_recurrence_vs_explicit(g, rec);
    check_stirling_egf(g, rec);
    check_whitney_egf(g, rec);
    check_special_integrality(g, rec);
    check_bernoulli_stirling_representation(g, rec);
    check_bernoulli_gf_consistency(g, rec);
    check_powersum_agreement(g, rec);
    check_powersum_egf(g, rec);
    check_powersum_homogeneity(g, rec);
    check_hypersum_agreement(g, rec);
    check_hypersum_reduction(g, rec);
    check_hypersum_column_recursion(g, rec);
    check_hockey_stick(rec);
    check_egf_triple(g, rec);
    check_egf_values(g, rec);
    check_ogf_cleared(g, rec);
    check_doublegf_cleared(g, rec);
    check_doublegf_expand(g, rec);

    const auto t1 = std::chrono::steady_clock::now();
    report.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
    return report;
}

}  // namespace apsum
