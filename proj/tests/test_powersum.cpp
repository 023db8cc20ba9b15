#include <doctest.h>

#include "apsum/powersum.hpp"

using apsum::powersum_bernoulli_diff;
using apsum::powersum_bernoulli_sum;
using apsum::powersum_direct;
using apsum::powersum_egf;
using apsum::powersum_rstirling;
using apsum::powersum_stirling;
using apsum::powersum_whitney;
using apsum::Rational;
using apsum::rstirling_applicability;
using apsum::SumQuery;
using apsum::TruncatedSeries;
using apsum::whitney_applicability;

TEST_SUITE_BEGIN("powersum");

TEST_CASE("direct summation") {
    CHECK(powersum_direct(SumQuery(0, Rational(0), Rational(1), 4)) == Rational(5));
    CHECK(powersum_direct(SumQuery(2, Rational(1), Rational(2), 3)) == Rational(84));
    CHECK(powersum_direct(SumQuery(3, Rational(0), Rational(1), 0)) == Rational(0));
    CHECK(powersum_direct(SumQuery(2, Rational(1, 2), Rational(1, 3), 2)) ==
          Rational(1, 4) + Rational(25, 36) + Rational(49, 36));
}

TEST_CASE("Stirling formula") {
    CHECK(powersum_stirling(SumQuery(1, Rational(0), Rational(1), 10)) == Rational(55));
    CHECK(powersum_stirling(SumQuery(2, Rational(1), Rational(2), 3)) == Rational(84));
    CHECK(powersum_stirling(SumQuery(0, Rational(7), Rational(3), 5)) == Rational(6));
}

TEST_CASE("Bernoulli difference formula") {
    CHECK(powersum_bernoulli_diff(SumQuery(1, Rational(0), Rational(1), 10)) == Rational(55));
    CHECK(powersum_bernoulli_diff(SumQuery(2, Rational(0), Rational(1), 3)) == Rational(14));
    CHECK(powersum_bernoulli_diff(SumQuery(0, Rational(1, 2), Rational(1, 3), 2)) ==
          Rational(3));
}

TEST_CASE("Bernoulli sum formula") {
    CHECK(powersum_bernoulli_sum(SumQuery(1, Rational(0), Rational(1), 3)) == Rational(6));
    CHECK(powersum_bernoulli_sum(SumQuery(2, Rational(1), Rational(2), 3)) == Rational(84));
    CHECK(powersum_bernoulli_sum(SumQuery(0, Rational(-5), Rational(7), 9)) == Rational(10));
}

TEST_CASE("r-Stirling route and its preconditions") {
    CHECK(powersum_rstirling(SumQuery(2, Rational(2), Rational(1), 2)) == Rational(29));
    CHECK(powersum_rstirling(SumQuery(1, Rational(0), Rational(1), 4)) == Rational(10));
    // divisibility holds for rational d too: a/d = 3 here
    CHECK(powersum_rstirling(SumQuery(2, Rational(1), Rational(1, 3), 2)) ==
          powersum_direct(SumQuery(2, Rational(1), Rational(1, 3), 2)));

    CHECK_FALSE(rstirling_applicability(SumQuery(2, Rational(1), Rational(2), 3)).applicable);
    CHECK_THROWS_AS(powersum_rstirling(SumQuery(2, Rational(1), Rational(2), 3)),
                    apsum::NotApplicableError);
    // negative ratio and the p = 0 corner are excluded
    CHECK_FALSE(rstirling_applicability(SumQuery(2, Rational(-1), Rational(1), 3)).applicable);
    CHECK_FALSE(rstirling_applicability(SumQuery(0, Rational(2), Rational(1), 3)).applicable);
}

TEST_CASE("Whitney route and its preconditions") {
    CHECK(powersum_whitney(SumQuery(2, Rational(1), Rational(2), 3)) == Rational(84));
    CHECK(powersum_whitney(SumQuery(0, Rational(3), Rational(2), 4)) == Rational(5));
    CHECK(powersum_whitney(SumQuery(1, Rational(1), Rational(1), 3)) == Rational(10));

    CHECK_FALSE(whitney_applicability(SumQuery(2, Rational(1, 2), Rational(1, 3), 3))
                    .applicable);  // not integers
    CHECK_FALSE(whitney_applicability(SumQuery(2, Rational(2), Rational(4), 3))
                    .applicable);  // not coprime
    CHECK_FALSE(whitney_applicability(SumQuery(2, Rational(-1), Rational(2), 3))
                    .applicable);  // negative shift
    CHECK_FALSE(whitney_applicability(SumQuery(2, Rational(5), Rational(-2), 3))
                    .applicable);  // negative modulus
    CHECK_THROWS_AS(powersum_whitney(SumQuery(2, Rational(2), Rational(4), 3)),
                    apsum::NotApplicableError);
}

TEST_CASE("all closed forms agree with the oracle on a mixed grid") {
    const std::pair<Rational, Rational> pairs[] = {
        {Rational(0), Rational(1)},       {Rational(1), Rational(2)},
        {Rational(-1), Rational(2)},      {Rational(1, 2), Rational(1, 3)},
        {Rational(5), Rational(-2)},
    };
    for (const auto& [a, d] : pairs)
        for (long p = 0; p <= 5; ++p)
            for (long n = 0; n <= 6; ++n) {
                const SumQuery q(p, a, d, n);
                const Rational want = powersum_direct(q);
                CHECK(powersum_stirling(q) == want);
                CHECK(powersum_bernoulli_diff(q) == want);
                CHECK(powersum_bernoulli_sum(q) == want);
                if (rstirling_applicability(q).applicable)
                    CHECK(powersum_rstirling(q) == want);
                if (whitney_applicability(q).applicable)
                    CHECK(powersum_whitney(q) == want);
            }
}

TEST_CASE("homogeneity in (a, d)") {
    const Rational lambdas[] = {Rational(2), Rational(-1, 3), Rational(7, 5)};
    for (const Rational& lambda : lambdas)
        for (long p = 0; p <= 5; ++p)
            for (long n = 0; n <= 5; ++n) {
                const Rational base = powersum_direct(SumQuery(p, Rational(1), Rational(2), n));
                const Rational scaled =
                    powersum_stirling(SumQuery(p, lambda, Rational(2) * lambda, n));
                CHECK(scaled == apsum::ratpow(lambda, p) * base);
            }
}

TEST_CASE("EGF coefficients encode the sums") {
    const TruncatedSeries s = powersum_egf(Rational(0), Rational(1), 2, 3);
    CHECK(s[0] == Rational(3));
    CHECK(Rational(1) * s[1] == Rational(3));
    CHECK(Rational(2) * s[2] == Rational(5));
    CHECK(Rational(6) * s[3] == Rational(9));

    CHECK(powersum_egf(Rational(0), Rational(1), 0, 2) ==
          TruncatedSeries::constant(1, 2));

    CHECK_THROWS_AS(powersum_egf(Rational(1), Rational(0), 3, 2), std::invalid_argument);

    Rational pfac = 1;
    const TruncatedSeries t = powersum_egf(Rational(1, 2), Rational(-1, 3), 4, 10);
    for (long p = 0; p <= 10; ++p) {
        if (p > 0)
            pfac *= Rational(p);
        CHECK(pfac * t[static_cast<int>(p)] ==
              powersum_direct(SumQuery(p, Rational(1, 2), Rational(-1, 3), 4)));
    }
}

TEST_SUITE_END();
