// Acceptance suite: runs every top-level guarantee of the library on its
// documented grid and prints one PASS/FAIL line per criterion. The CLI
// binary under test is passed with --cli <path> (used by the determinism
// and round-trip criterion).

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "apsum/bernoulli.hpp"
#include "apsum/hypersum.hpp"
#include "apsum/jsonio.hpp"
#include "apsum/powersum.hpp"
#include "apsum/series.hpp"
#include "apsum/stirling.hpp"

using apsum::Rational;
using apsum::SumQuery;
using apsum::TruncatedSeries;

namespace {

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> run;  // fills a detail string on failure
};

using Pair = std::pair<Rational, Rational>;

const std::vector<Pair> kPowerPairs = {
    {Rational(0), Rational(1)},  {Rational(1), Rational(1)},
    {Rational(1), Rational(2)},  {Rational(2), Rational(3)},
    {Rational(-1), Rational(2)}, {Rational(1, 2), Rational(1, 3)},
    {Rational(5), Rational(-2)}};

const std::vector<Pair> kHyperPairs = {{Rational(0), Rational(1)},
                                       {Rational(1), Rational(1)},
                                       {Rational(1), Rational(2)},
                                       {Rational(-1), Rational(2)},
                                       {Rational(1, 2), Rational(1, 3)}};

const std::vector<Pair> kEgfPairs = {{Rational(0), Rational(1)}, {Rational(1), Rational(2)}};

const std::vector<Pair> kGfPairs = {{Rational(0), Rational(1)},
                                    {Rational(1), Rational(2)},
                                    {Rational(1, 2), Rational(1, 3)}};

const std::vector<Rational> kBernPoints = {Rational(0), Rational(1), Rational(1, 2),
                                           Rational(-2, 3), Rational(3)};

bool criterion_powersum_agreement(std::string& detail) {
    const auto t0 = std::chrono::steady_clock::now();
    long conditional_hits = 0;
    for (const auto& [a, d] : kPowerPairs)
        for (long p = 0; p <= 8; ++p)
            for (long n = 0; n <= 12; ++n) {
                const SumQuery q(p, a, d, n);
                const Rational want = apsum::powersum_direct(q);
                if (apsum::powersum_stirling(q) != want ||
                    apsum::powersum_bernoulli_diff(q) != want ||
                    apsum::powersum_bernoulli_sum(q) != want) {
                    detail = "disagreement at a=" + a.str() + " d=" + d.str() +
                             " p=" + std::to_string(p) + " n=" + std::to_string(n);
                    return false;
                }
                if (apsum::rstirling_applicability(q).applicable) {
                    ++conditional_hits;
                    if (apsum::powersum_rstirling(q) != want) {
                        detail = "r-Stirling disagreement at p=" + std::to_string(p);
                        return false;
                    }
                }
                if (apsum::whitney_applicability(q).applicable) {
                    ++conditional_hits;
                    if (apsum::powersum_whitney(q) != want) {
                        detail = "Whitney disagreement at p=" + std::to_string(p);
                        return false;
                    }
                }
            }
    if (conditional_hits == 0) {
        detail = "conditional formulas were never applicable";
        return false;
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= 10.0) {
        detail = "runtime " + std::to_string(secs) + " s exceeds the 10 s budget";
        return false;
    }
    return true;
}

bool criterion_hypersum_agreement(std::string& detail) {
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& [a, d] : kHyperPairs)
        for (long p = 0; p <= 6; ++p)
            for (long n = 0; n <= 10; ++n)
                for (long r = 0; r <= 5; ++r) {
                    const SumQuery q(p, a, d, n, r);
                    const Rational want = apsum::hypersum_recursive(q);
                    if (apsum::hypersum_binomial(q) != want ||
                        apsum::hypersum_genbernoulli(q) != want) {
                        detail = "disagreement at a=" + a.str() + " d=" + d.str() +
                                 " p=" + std::to_string(p) + " n=" + std::to_string(n) +
                                 " r=" + std::to_string(r);
                        return false;
                    }
                }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= 20.0) {
        detail = "runtime " + std::to_string(secs) + " s exceeds the 20 s budget";
        return false;
    }
    return true;
}

bool criterion_egf_triple(std::string& detail) {
    const int order = 10;
    for (const auto& [a, d] : kEgfPairs)
        for (long n = 0; n <= 5; ++n)
            for (long r = 0; r <= 4; ++r) {
                const TruncatedSeries direct = apsum::hypersum_egf_direct(a, d, n, r, order);
                if (apsum::hypersum_egf_hypergeom(a, d, n, r, order) != direct) {
                    detail = "hypergeometric route differs at n=" + std::to_string(n) +
                             " r=" + std::to_string(r);
                    return false;
                }
                const apsum::LaurentSeries assembly =
                    apsum::hypersum_egf_laurent_assembly(a, d, n, r, order);
                if (!assembly.principal_part_is_zero()) {
                    detail = "nonzero principal part at n=" + std::to_string(n) +
                             " r=" + std::to_string(r);
                    return false;
                }
                if (apsum::truncated(assembly.regular_part(), order) != direct) {
                    detail = "Laurent route differs at n=" + std::to_string(n) +
                             " r=" + std::to_string(r);
                    return false;
                }
            }
    return true;
}

bool criterion_gf_cleared(std::string& detail) {
    for (const auto& [a, d] : kGfPairs)
        for (long n = 0; n <= 4; ++n) {
            for (long p = 0; p <= 5; ++p) {
                const auto r = apsum::hypersum_ogf_check(p, a, d, n, 10);
                if (!r.pass) {
                    detail = "OGF mismatch at a=" + a.str() + " d=" + d.str() +
                             " p=" + std::to_string(p) + " n=" + std::to_string(n) + " (" +
                             r.mismatches.front().where + ")";
                    return false;
                }
            }
            const auto r = apsum::hypersum_doublegf_check(a, d, n, 10, 10);
            if (!r.pass) {
                detail = "double-GF mismatch at a=" + a.str() + " d=" + d.str() +
                         " n=" + std::to_string(n) + " (" + r.mismatches.front().where + ")";
                return false;
            }
        }
    return true;
}

bool criterion_stirling_bernoulli(std::string& detail) {
    if (apsum::bernoulli_via_stirling(1, Rational(0)) != Rational(-1, 2) ||
        apsum::evaluate(apsum::bernoulli_poly(1), Rational(0)) != Rational(-1, 2)) {
        detail = "B_1(0) != -1/2";
        return false;
    }
    for (long n = 0; n <= 12; ++n)
        for (const Rational& x : kBernPoints)
            if (apsum::bernoulli_via_stirling(n, x) !=
                apsum::evaluate(apsum::bernoulli_poly(n), x)) {
                detail = "representation mismatch at n=" + std::to_string(n) +
                         " x=" + x.str();
                return false;
            }
    return true;
}

bool criterion_reductions(std::string& detail) {
    for (const auto& [a, d] : kHyperPairs) {
        for (long p = 0; p <= 6; ++p)
            for (long n = 0; n <= 10; ++n) {
                const SumQuery q(p, a, d, n, 0);
                const Rational want = apsum::powersum_direct(q);
                if (apsum::hypersum_recursive(q) != want ||
                    apsum::hypersum_binomial(q) != want ||
                    apsum::hypersum_genbernoulli(q) != want) {
                    detail = "r=0 reduction fails at a=" + a.str() + " d=" + d.str() +
                             " p=" + std::to_string(p) + " n=" + std::to_string(n);
                    return false;
                }
            }
        for (long n = 0; n <= 12; ++n) {
            const SumQuery q(0, a, d, n);
            const Rational want(n + 1);
            if (apsum::powersum_direct(q) != want || apsum::powersum_stirling(q) != want ||
                apsum::powersum_bernoulli_diff(q) != want ||
                apsum::powersum_bernoulli_sum(q) != want) {
                detail = "p=0 power sum != n+1 at a=" + a.str() + " d=" + d.str() +
                         " n=" + std::to_string(n);
                return false;
            }
        }
    }
    return true;
}

bool criterion_special_numbers(std::string& detail) {
    const Rational weights[] = {Rational(0),    Rational(1),     Rational(2),
                                Rational(1, 2), Rational(-1, 3), Rational(5, 2)};
    for (const Rational& x : weights)
        for (long n = 0; n <= 12; ++n)
            for (long i = 0; i <= n; ++i)
                if (apsum::weighted_stirling(n, i, x) !=
                    apsum::weighted_stirling_explicit(n, i, x)) {
                    detail = "recurrence vs explicit mismatch at x=" + x.str() +
                             " n=" + std::to_string(n) + " i=" + std::to_string(i);
                    return false;
                }

    // EGF coefficient extraction, weighted Stirling
    const int order = 12;
    const Rational egf_weights[] = {Rational(0), Rational(1, 2), Rational(2)};
    for (const Rational& x : egf_weights)
        for (long i = 0; i <= 5; ++i) {
            TruncatedSeries em1 = apsum::exp_series(Rational(1), order);
            em1[0] -= Rational(1);
            const TruncatedSeries egf = Rational(1) / Rational(apsum::factorial(i)) *
                                        (apsum::exp_series(x, order) * apsum::pow(em1, i));
            Rational nfac = 1;
            for (long n = 0; n <= order; ++n) {
                if (n > 0)
                    nfac *= Rational(n);
                if (apsum::weighted_stirling(n, i, x) != nfac * egf[static_cast<int>(n)]) {
                    detail = "weighted EGF mismatch at x=" + x.str() +
                             " i=" + std::to_string(i) + " n=" + std::to_string(n);
                    return false;
                }
            }
        }

    // EGF coefficient extraction + integrality, r-Whitney / r-Stirling
    try {
        for (long m = 1; m <= 3; ++m)
            for (long r = 0; r <= 2; ++r)
                for (long i = 0; i <= 4; ++i) {
                    TruncatedSeries em1 = apsum::exp_series(Rational(m), 10);
                    em1[0] -= Rational(1);
                    const TruncatedSeries egf =
                        (Rational(1) /
                         (apsum::ratpow(Rational(m), i) * Rational(apsum::factorial(i)))) *
                        (apsum::exp_series(Rational(r), 10) * apsum::pow(em1, i));
                    Rational nfac = 1;
                    for (long n = 0; n <= 10; ++n) {
                        if (n > 0)
                            nfac *= Rational(n);
                        if (Rational(apsum::whitney(m, r, n, i)) !=
                            nfac * egf[static_cast<int>(n)]) {
                            detail = "Whitney EGF mismatch at m=" + std::to_string(m) +
                                     " r=" + std::to_string(r) + " i=" + std::to_string(i) +
                                     " n=" + std::to_string(n);
                            return false;
                        }
                    }
                }
        for (long r = 0; r <= 3; ++r)
            for (long n = 0; n <= 12; ++n)
                for (long k = 0; k <= n; ++k)
                    (void)apsum::r_stirling2(n, k, r);  // throws if non-integral
    } catch (const apsum::NonIntegerResult& e) {
        detail = e.what();
        return false;
    }
    return true;
}

std::string run_command(const std::string& cmd, int& exit_code) {
    std::array<char, 4096> buf;
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        throw std::runtime_error("popen failed for: " + cmd);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    const int rc = pclose(pipe);
    exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return out;
}

bool looks_like_rational(const std::string& s) {
    if (s.empty())
        return false;
    size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size())
        return false;
    bool seen_slash = false;
    for (; i < s.size(); ++i) {
        if (s[i] == '/' && !seen_slash && i + 1 < s.size()) {
            seen_slash = true;
            continue;
        }
        if (s[i] < '0' || s[i] > '9')
            return false;
    }
    return true;
}

void collect_rational_strings(const apsum::Json& j, std::vector<std::string>& out) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (looks_like_rational(s))
            out.push_back(s);
    } else if (j.is_array() || j.is_object()) {
        for (const auto& item : j)
            collect_rational_strings(item, out);
    }
}

std::string g_cli_path;

bool criterion_cli_roundtrip(std::string& detail) {
    if (g_cli_path.empty()) {
        detail = "no --cli path given";
        return false;
    }
    int rc1 = 0, rc2 = 0;
    const std::string cmd = g_cli_path + " verify --grid small --json";
    const std::string first = run_command(cmd, rc1);
    const std::string second = run_command(cmd, rc2);
    if (rc1 != 0 || rc2 != 0) {
        detail = "verify exited with " + std::to_string(rc1) + "/" + std::to_string(rc2);
        return false;
    }
    if (first != second) {
        detail = "verify --json output differs between consecutive runs";
        return false;
    }

    std::vector<std::string> strings;
    collect_rational_strings(apsum::Json::parse(first), strings);

    int rc3 = 0;
    const std::string sum_out = run_command(
        g_cli_path + " sum --p 3 --a -1/2 --d 5/3 --n 6 --method all --json", rc3);
    if (rc3 != 0) {
        detail = "sum --json exited with " + std::to_string(rc3);
        return false;
    }
    const apsum::Json sum_json = apsum::Json::parse(sum_out);
    collect_rational_strings(sum_json["results"], strings);
    if (sum_json["agree"] != true) {
        detail = "sum --json reported disagreement";
        return false;
    }

    int rc4 = 0;
    const std::string ser_out = run_command(
        g_cli_path + " series --kind egf-2f1 --order 8 --a 1/2 --d -1/3 --n 4 --r 2 --json",
        rc4);
    if (rc4 != 0) {
        detail = "series --json exited with " + std::to_string(rc4);
        return false;
    }
    collect_rational_strings(apsum::Json::parse(ser_out)["coeffs"], strings);

    int rc5 = 0;
    const std::string tri_out =
        run_command(g_cli_path + " stirling --n 8 --x -3/7 --json", rc5);
    if (rc5 != 0) {
        detail = "stirling --json exited with " + std::to_string(rc5);
        return false;
    }
    collect_rational_strings(apsum::Json::parse(tri_out)["rows"], strings);

    int rc6 = 0;
    const std::string bern_out =
        run_command(g_cli_path + " bernoulli --n 12 --alpha 3 --json", rc6);
    if (rc6 != 0) {
        detail = "bernoulli --json exited with " + std::to_string(rc6);
        return false;
    }
    collect_rational_strings(apsum::Json::parse(bern_out)["coeffs"], strings);

    if (strings.size() < 20) {
        detail = "too few rational strings harvested (" + std::to_string(strings.size()) +
                 ")";
        return false;
    }
    for (const std::string& s : strings) {
        try {
            if (Rational::parse(s).str() != s) {
                detail = "string \"" + s + "\" is not canonical";
                return false;
            }
        } catch (const std::exception& e) {
            detail = "string \"" + s + "\" failed to parse: " + e.what();
            return false;
        }
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli")
            g_cli_path = argv[i + 1];

    const std::vector<Criterion> criteria = {
        {"five-way power-sum agreement, p<=8 n<=12, 7 (a,d) pairs, exact",
         criterion_powersum_agreement},
        {"three-way hyper-sum agreement, p<=6 n<=10 r<=5, 5 (a,d) pairs, exact",
         criterion_hypersum_agreement},
        {"EGF triple agreement to order 10, n<=5 r<=4, zero principal part",
         criterion_egf_triple},
        {"OGF and double-GF cleared identities, R,N<=10, n<=4", criterion_gf_cleared},
        {"Bernoulli Stirling-representation identity, n<=12, 5 points, B_1(0)=-1/2",
         criterion_stirling_bernoulli},
        {"r=0 and p=0 reduction checks", criterion_reductions},
        {"special-numbers cross-checks: recurrence vs explicit, EGFs, integrality",
         criterion_special_numbers},
        {"CLI determinism and rational round-trip", criterion_cli_roundtrip},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::cout << "[" << (i + 1) << "/" << criteria.size() << "] "
                  << (ok ? "PASS" : "FAIL") << " " << criteria[i].name;
        if (!ok)
            std::cout << " -- " << detail;
        std::cout << "\n";
        if (!ok)
            ++failures;
    }
    if (failures == 0) {
        std::cout << "ACCEPTANCE: all " << criteria.size() << " criteria passed\n";
        return 0;
    }
    std::cout << "ACCEPTANCE: " << failures << " of " << criteria.size()
              << " criteria FAILED\n";
    return 1;
}
