#include <doctest.h>

#include "apsum/hypersum.hpp"
#include "apsum/powersum.hpp"

using apsum::binomial;
using apsum::hypersum_binomial;
using apsum::hypersum_doublegf_check;
using apsum::hypersum_egf_direct;
using apsum::hypersum_egf_hypergeom;
using apsum::hypersum_egf_laurent;
using apsum::hypersum_egf_laurent_assembly;
using apsum::hypersum_genbernoulli;
using apsum::hypersum_ogf_check;
using apsum::hypersum_recursive;
using apsum::LaurentSeries;
using apsum::Rational;
using apsum::SumQuery;
using apsum::TruncatedSeries;

namespace {

std::vector<Rational> egf_values(const TruncatedSeries& s) {
    std::vector<Rational> v;
    Rational pfac = 1;
    for (int p = 0; p <= s.order(); ++p) {
        if (p > 0)
            pfac *= Rational(p);
        v.push_back(pfac * s[p]);
    }
    return v;
}

}  // namespace

TEST_SUITE_BEGIN("hypersum");

TEST_CASE("recursive oracle") {
    CHECK(hypersum_recursive(SumQuery(1, Rational(0), Rational(1), 3, 1)) == Rational(10));
    CHECK(hypersum_recursive(SumQuery(2, Rational(1), Rational(2), 3, 0)) == Rational(84));
    CHECK(hypersum_recursive(SumQuery(0, Rational(5), Rational(3), 3, 2)) == Rational(20));
    // interleaved queries exercise the memo table growth in both directions
    CHECK(hypersum_recursive(SumQuery(1, Rational(0), Rational(1), 2, 4)) == Rational(7));
    CHECK(hypersum_recursive(SumQuery(1, Rational(0), Rational(1), 5, 1)) == Rational(35));
    CHECK(hypersum_recursive(SumQuery(1, Rational(0), Rational(1), 5, 4)) ==
          hypersum_binomial(SumQuery(1, Rational(0), Rational(1), 5, 4)));
}

TEST_CASE("binomial formula") {
    CHECK(hypersum_binomial(SumQuery(1, Rational(0), Rational(1), 3, 1)) == Rational(10));
    // p = 0 collapses to the hockey-stick value C(n+r+1, r+1)
    for (long n = 0; n <= 6; ++n)
        for (long r = 0; r <= 4; ++r)
            CHECK(hypersum_binomial(SumQuery(0, Rational(9), Rational(-4), n, r)) ==
                  Rational(binomial(n + r + 1, r + 1)));
    // r = 0 collapses to the plain power sum
    for (long p = 0; p <= 4; ++p)
        CHECK(hypersum_binomial(SumQuery(p, Rational(1, 2), Rational(1, 3), 5, 0)) ==
              apsum::powersum_direct(SumQuery(p, Rational(1, 2), Rational(1, 3), 5)));
}

TEST_CASE("generalized-Bernoulli formula") {
    CHECK(hypersum_genbernoulli(SumQuery(1, Rational(0), Rational(1), 3, 1)) == Rational(10));
    CHECK(hypersum_genbernoulli(SumQuery(2, Rational(0), Rational(1), 3, 0)) == Rational(14));
    CHECK(hypersum_genbernoulli(SumQuery(0, Rational(1), Rational(1), 2, 1)) == Rational(6));
}

TEST_CASE("three evaluators agree on a mixed grid") {
    const std::pair<Rational, Rational> pairs[] = {
        {Rational(0), Rational(1)},
        {Rational(1), Rational(2)},
        {Rational(-1), Rational(2)},
        {Rational(1, 2), Rational(1, 3)},
    };
    for (const auto& [a, d] : pairs)
        for (long p = 0; p <= 4; ++p)
            for (long n = 0; n <= 6; ++n)
                for (long r = 0; r <= 3; ++r) {
                    const SumQuery q(p, a, d, n, r);
                    const Rational want = hypersum_recursive(q);
                    CHECK(hypersum_binomial(q) == want);
                    CHECK(hypersum_genbernoulli(q) == want);
                }
}

TEST_CASE("column recursion ties consecutive depths together") {
    const Rational a(1, 2), d(1, 3);
    for (long p = 0; p <= 3; ++p)
        for (long r = 1; r <= 3; ++r)
            for (long n = 1; n <= 6; ++n)
                CHECK(hypersum_binomial(SumQuery(p, a, d, n, r)) -
                          hypersum_binomial(SumQuery(p, a, d, n - 1, r)) ==
                      hypersum_binomial(SumQuery(p, a, d, n, r - 1)));
}

TEST_CASE("direct EGF") {
    CHECK(egf_values(hypersum_egf_direct(Rational(0), Rational(1), 2, 1, 2)) ==
          std::vector<Rational>{Rational(6), Rational(4), Rational(6)});
    // r = 0 equals the power-sum EGF
    CHECK(hypersum_egf_direct(Rational(1, 2), Rational(2), 4, 0, 6) ==
          apsum::powersum_egf(Rational(1, 2), Rational(2), 4, 6));
    // n = 0 is a single exponential
    CHECK(hypersum_egf_direct(Rational(3, 4), Rational(1), 0, 5, 6) ==
          apsum::exp_series(Rational(3, 4), 6));
}

TEST_CASE("hypergeometric EGF") {
    CHECK(hypersum_egf_hypergeom(Rational(3, 4), Rational(1), 0, 5, 6) ==
          apsum::exp_series(Rational(3, 4), 6));
    CHECK(egf_values(hypersum_egf_hypergeom(Rational(0), Rational(1), 2, 1, 2)) ==
          std::vector<Rational>{Rational(6), Rational(4), Rational(6)});
    CHECK(egf_values(hypersum_egf_hypergeom(Rational(0), Rational(1), 1, 0, 1)) ==
          std::vector<Rational>{Rational(2), Rational(1)});
}

TEST_CASE("Laurent EGF") {
    CHECK(egf_values(hypersum_egf_laurent(Rational(0), Rational(1), 2, 0, 3)) ==
          std::vector<Rational>{Rational(3), Rational(3), Rational(5), Rational(9)});
    CHECK(egf_values(hypersum_egf_laurent(Rational(0), Rational(1), 2, 1, 2)) ==
          std::vector<Rational>{Rational(6), Rational(4), Rational(6)});

    const LaurentSeries assembly =
        hypersum_egf_laurent_assembly(Rational(1, 2), Rational(1, 3), 3, 2, 6);
    CHECK(assembly.depth() == 3);
    CHECK(assembly.top_order() == 6);
    CHECK(assembly.principal_part_is_zero());
}

TEST_CASE("the three EGF routes coincide") {
    const std::pair<Rational, Rational> pairs[] = {
        {Rational(0), Rational(1)},
        {Rational(1), Rational(2)},
        {Rational(1, 2), Rational(-1, 3)},
    };
    for (const auto& [a, d] : pairs)
        for (long n = 0; n <= 3; ++n)
            for (long r = 0; r <= 3; ++r) {
                const TruncatedSeries direct = hypersum_egf_direct(a, d, n, r, 8);
                CHECK(hypersum_egf_hypergeom(a, d, n, r, 8) == direct);
                CHECK(hypersum_egf_laurent(a, d, n, r, 8) == direct);
            }
}

TEST_CASE("EGF coefficients match the oracle values") {
    const TruncatedSeries egf = hypersum_egf_direct(Rational(1), Rational(2), 4, 2, 9);
    const std::vector<Rational> values = egf_values(egf);
    for (long p = 0; p <= 9; ++p)
        CHECK(values[static_cast<size_t>(p)] ==
              hypersum_recursive(SumQuery(p, Rational(1), Rational(2), 4, 2)));
}

TEST_CASE("ordinary GF cleared identity") {
    CHECK(hypersum_ogf_check(1, Rational(0), Rational(1), 2, 8).pass);
    CHECK(hypersum_ogf_check(0, Rational(1), Rational(1), 0, 5).pass);
    CHECK(hypersum_ogf_check(2, Rational(1), Rational(2), 3, 10).pass);
    CHECK(hypersum_ogf_check(3, Rational(1, 2), Rational(1, 3), 4, 10).pass);
    const auto report = hypersum_ogf_check(2, Rational(-1), Rational(2), 3, 9);
    CHECK(report.pass);
    CHECK(report.coefficients_checked == 10);
    CHECK(report.mismatches.empty());
}

TEST_CASE("double GF cleared identity") {
    CHECK(hypersum_doublegf_check(Rational(0), Rational(1), 2, 4, 4).pass);
    CHECK(hypersum_doublegf_check(Rational(7, 3), Rational(2), 0, 4, 4).pass);
    CHECK(hypersum_doublegf_check(Rational(1), Rational(2), 3, 3, 5).pass);
    const auto report = hypersum_doublegf_check(Rational(1, 2), Rational(1, 3), 2, 5, 5);
    CHECK(report.pass);
    CHECK(report.coefficients_checked == 36);
}

TEST_SUITE_END();
