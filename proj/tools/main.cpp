// apsum command-line front end: single values, triangles, series dumps
// and the cross-formula verification suite, with optional JSON output.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage error, 3 a single-value query whose method preconditions fail.

#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "apsum/bernoulli.hpp"
#include "apsum/hypersum.hpp"
#include "apsum/jsonio.hpp"
#include "apsum/powersum.hpp"
#include "apsum/series.hpp"
#include "apsum/stirling.hpp"
#include "apsum/verify.hpp"

namespace {

using apsum::Json;
using apsum::Rational;
using apsum::SumQuery;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational parse_rational_flag(const std::string& text, const std::string& flag) {
    try {
        return Rational::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

Rational parse_nonzero_d(const std::string& text) {
    const Rational d = parse_rational_flag(text, "--d");
    if (d.is_zero())
        throw UsageError("--d: must be nonzero");
    return d;
}

struct MethodResult {
    std::string method;
    std::optional<Rational> value;
    std::string reason;  // set when not applicable
};

struct MethodTable {
    std::vector<MethodResult> results;
    bool agree = true;
};

MethodTable evaluate_methods(
    const std::vector<std::pair<std::string, std::function<Rational()>>>& methods) {
    MethodTable table;
    std::optional<Rational> reference;
    for (const auto& [name, fn] : methods) {
        MethodResult r;
        r.method = name;
        try {
            r.value = fn();
        } catch (const apsum::NotApplicableError& e) {
            r.reason = e.what();
        }
        if (r.value) {
            if (!reference)
                reference = r.value;
            else if (*reference != *r.value)
                table.agree = false;
        }
        table.results.push_back(std::move(r));
    }
    return table;
}

Json query_json(const SumQuery& q, bool with_r) {
    Json j;
    j["p"] = q.p;
    j["a"] = q.a.str();
    j["d"] = q.d.str();
    j["n"] = q.n;
    if (with_r)
        j["r"] = q.r;
    return j;
}

int print_method_table(const SumQuery& q, bool with_r, const MethodTable& table,
                       bool single_method, bool as_json) {
    if (as_json) {
        Json j;
        j["query"] = query_json(q, with_r);
        Json results = Json::array();
        for (const auto& r : table.results) {
            Json e;
            e["method"] = r.method;
            e["value"] = r.value ? Json(r.value->str()) : Json(nullptr);
            e["applicable"] = static_cast<bool>(r.value);
            results.push_back(std::move(e));
        }
        j["results"] = std::move(results);
        j["agree"] = table.agree;
        std::cout << j.dump(2) << "\n";
    } else if (single_method) {
        const auto& r = table.results.front();
        if (r.value)
            std::cout << r.value->str() << "\n";
        else
            std::cout << "not applicable: " << r.reason << "\n";
    } else {
        for (const auto& r : table.results) {
            if (r.value)
                std::cout << r.method << " " << r.value->str() << "\n";
            else
                std::cout << r.method << " not applicable (" << r.reason << ")\n";
        }
        std::cout << (table.agree ? "AGREE" : "DISAGREE") << "\n";
    }
    if (!table.agree)
        return 1;
    if (single_method && !table.results.front().value)
        return 3;
    return 0;
}

int run_sum(long p, const std::string& a_str, const std::string& d_str, long n,
            const std::string& method, bool as_json) {
    const Rational a = parse_rational_flag(a_str, "--a");
    const Rational d = parse_nonzero_d(d_str);
    const SumQuery q(p, a, d, n);

    const std::vector<std::pair<std::string, std::function<Rational()>>> all = {
        {"direct", [&] { return apsum::powersum_direct(q); }},
        {"stirling", [&] { return apsum::powersum_stirling(q); }},
        {"bernoulli-diff", [&] { return apsum::powersum_bernoulli_diff(q); }},
        {"bernoulli-sum", [&] { return apsum::powersum_bernoulli_sum(q); }},
        {"rstirling", [&] { return apsum::powersum_rstirling(q); }},
        {"whitney", [&] { return apsum::powersum_whitney(q); }},
    };

    std::vector<std::pair<std::string, std::function<Rational()>>> chosen;
    if (method == "all") {
        chosen = all;
    } else {
        for (const auto& m : all)
            if (m.first == method)
                chosen.push_back(m);
        if (chosen.empty())
            throw UsageError("--method: unknown method \"" + method + "\"");
    }
    return print_method_table(q, false, evaluate_methods(chosen), method != "all", as_json);
}

int run_hypersum(long p, const std::string& a_str, const std::string& d_str, long n, long r,
                 const std::string& method, bool as_json) {
    const Rational a = parse_rational_flag(a_str, "--a");
    const Rational d = parse_nonzero_d(d_str);
    const SumQuery q(p, a, d, n, r);

    const std::vector<std::pair<std::string, std::function<Rational()>>> all = {
        {"recursive", [&] { return apsum::hypersum_recursive(q); }},
        {"binomial", [&] { return apsum::hypersum_binomial(q); }},
        {"genbernoulli", [&] { return apsum::hypersum_genbernoulli(q); }},
    };

    std::vector<std::pair<std::string, std::function<Rational()>>> chosen;
    if (method == "all") {
        chosen = all;
    } else {
        for (const auto& m : all)
            if (m.first == method)
                chosen.push_back(m);
        if (chosen.empty())
            throw UsageError("--method: unknown method \"" + method + "\"");
    }
    return print_method_table(q, true, evaluate_methods(chosen), method != "all", as_json);
}

void print_triangle(const std::string& kind, const Json& params,
                    const std::vector<std::vector<std::string>>& rows, bool as_json) {
    if (as_json) {
        Json j;
        j["kind"] = kind;
        for (auto it = params.begin(); it != params.end(); ++it)
            j[it.key()] = it.value();
        j["rows"] = rows;
        std::cout << j.dump(2) << "\n";
        return;
    }
    size_t width = 0;
    for (const auto& row : rows)
        for (const auto& cell : row)
            width = std::max(width, cell.size());
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i > 0)
                std::cout << ' ';
            std::cout << std::string(width - row[i].size(), ' ') << row[i];
        }
        std::cout << "\n";
    }
}

int run_stirling(long n_max, const std::optional<std::string>& x_str,
                 const std::optional<long>& r, const std::optional<std::string>& whitney_mr,
                 bool as_json) {
    std::vector<std::vector<std::string>> rows;
    if (whitney_mr) {
        const auto comma = whitney_mr->find(',');
        if (comma == std::string::npos)
            throw UsageError("--whitney: expected M,R");
        long m = 0, rr = 0;
        try {
            m = std::stol(whitney_mr->substr(0, comma));
            rr = std::stol(whitney_mr->substr(comma + 1));
        } catch (const std::exception&) {
            throw UsageError("--whitney: expected integers M,R");
        }
        if (m < 1 || rr < 0)
            throw UsageError("--whitney: need M >= 1 and R >= 0");
        for (long n = 0; n <= n_max; ++n) {
            std::vector<std::string> row;
            for (long i = 0; i <= n; ++i)
                row.push_back(apsum::whitney(m, rr, n, i).get_str());
            rows.push_back(std::move(row));
        }
        print_triangle("whitney", Json{{"m", m}, {"r", rr}, {"n", n_max}}, rows, as_json);
        return 0;
    }
    if (r) {
        if (*r < 0)
            throw UsageError("--r: must be non-negative");
        for (long n = 0; n <= n_max; ++n) {
            std::vector<std::string> row;
            for (long k = 0; k <= n; ++k)
                row.push_back(apsum::r_stirling2(n, k, *r).get_str());
            rows.push_back(std::move(row));
        }
        print_triangle("rstirling", Json{{"r", *r}, {"n", n_max}}, rows, as_json);
        return 0;
    }
    const Rational x =
        x_str ? parse_rational_flag(*x_str, "--x") : Rational(0);
    for (long n = 0; n <= n_max; ++n) {
        std::vector<std::string> row;
        for (long i = 0; i <= n; ++i)
            row.push_back(apsum::weighted_stirling(n, i, x).str());
        rows.push_back(std::move(row));
    }
    print_triangle("weighted", Json{{"x", x.str()}, {"n", n_max}}, rows, as_json);
    return 0;
}

int run_bernoulli(long n, long alpha, const std::optional<std::string>& at_str, bool as_json) {
    if (alpha < 0)
        throw UsageError("--alpha: must be non-negative");
    const apsum::BernoulliPoly poly = apsum::gen_bernoulli_poly(alpha, n);
    if (at_str) {
        const Rational x = parse_rational_flag(*at_str, "--at");
        const Rational v = apsum::evaluate(poly, x);
        if (as_json) {
            Json j;
            j["n"] = n;
            j["alpha"] = alpha;
            j["x"] = x.str();
            j["value"] = v.str();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << v.str() << "\n";
        }
        return 0;
    }
    if (as_json) {
        std::cout << apsum::to_json(poly).dump(2) << "\n";
    } else {
        for (long k = 0; k <= poly.degree(); ++k) {
            if (k > 0)
                std::cout << ' ';
            std::cout << poly.coeff(k).str();
        }
        std::cout << "\n";
    }
    return 0;
}

int run_series(const std::string& kind, int order, const std::string& a_str,
               const std::string& d_str, long n, long r, bool as_json) {
    const Rational a = parse_rational_flag(a_str, "--a");
    const Rational d = parse_nonzero_d(d_str);
    if (r < 0)
        throw UsageError("--r: must be non-negative");

    apsum::TruncatedSeries s(order);
    if (kind == "powersum-egf")
        s = apsum::powersum_egf(a, d, n, order);
    else if (kind == "egf-direct")
        s = apsum::hypersum_egf_direct(a, d, n, r, order);
    else if (kind == "egf-2f1")
        s = apsum::hypersum_egf_hypergeom(a, d, n, r, order);
    else if (kind == "egf-laurent")
        s = apsum::hypersum_egf_laurent(a, d, n, r, order);
    else
        throw UsageError("--kind: unknown series kind \"" + kind + "\"");

    if (as_json) {
        Json j;
        j["kind"] = kind;
        j["query"] = {{"a", a.str()}, {"d", d.str()}, {"n", n}, {"r", r}};
        j["order"] = order;
        j["coeffs"] = apsum::to_json(s);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << apsum::to_json(s).dump() << "\n";
    }
    return 0;
}

int run_verify_cmd(const std::string& grid, bool as_json) {
    if (grid != "small" && grid != "full")
        throw UsageError("--grid: expected small or full");
    const apsum::VerifyReport report = apsum::run_verify(grid);
    if (as_json) {
        std::cout << apsum::to_json(report).dump(2) << "\n";
    } else {
        for (const auto& r : report.records) {
            std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.check << " | " << r.params
                      << " | expected from: " << r.source << "\n";
            for (const auto& m : r.mismatches)
                std::cout << "    " << m << "\n";
        }
        std::cout << report.passed << "/" << (report.passed + report.failed)
                  << " checks passed on grid \"" << report.grid << "\" in "
                  << static_cast<long>(report.wall_seconds * 1000.0) << " ms\n";
    }
    return report.failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact power sums and hyper-sums of arithmetic progressions"};
    app.require_subcommand(1);

    bool as_json = false;
    const auto add_json_flag = [&as_json](CLI::App* cmd) {
        cmd->add_flag("--json", as_json, "emit JSON instead of plain text");
    };

    // sum
    long sum_p = 0, sum_n = 0;
    std::string sum_a, sum_d, sum_method = "direct";
    auto* sum_cmd = app.add_subcommand("sum", "power sum of an arithmetic progression");
    add_json_flag(sum_cmd);
    sum_cmd->add_option("--p", sum_p, "power p >= 0")->required()->check(CLI::NonNegativeNumber);
    sum_cmd->add_option("--a", sum_a, "first term (rational, e.g. -1/2)")->required();
    sum_cmd->add_option("--d", sum_d, "common difference (nonzero rational)")->required();
    sum_cmd->add_option("--n", sum_n, "index of the last term, n >= 0")
        ->required()
        ->check(CLI::NonNegativeNumber);
    sum_cmd->add_option("--method", sum_method,
                        "direct|stirling|bernoulli-diff|bernoulli-sum|rstirling|whitney|all");

    // hypersum
    long hyp_p = 0, hyp_n = 0, hyp_r = 0;
    std::string hyp_a, hyp_d, hyp_method = "recursive";
    auto* hyp_cmd = app.add_subcommand("hypersum", "iterated cumulative power sum");
    add_json_flag(hyp_cmd);
    hyp_cmd->add_option("--p", hyp_p, "power p >= 0")->required()->check(CLI::NonNegativeNumber);
    hyp_cmd->add_option("--a", hyp_a, "first term (rational)")->required();
    hyp_cmd->add_option("--d", hyp_d, "common difference (nonzero rational)")->required();
    hyp_cmd->add_option("--n", hyp_n, "index of the last term, n >= 0")
        ->required()
        ->check(CLI::NonNegativeNumber);
    hyp_cmd->add_option("--r", hyp_r, "iteration depth r >= 0")
        ->required()
        ->check(CLI::NonNegativeNumber);
    hyp_cmd->add_option("--method", hyp_method, "recursive|binomial|genbernoulli|all");

    // stirling
    long st_n = 0;
    std::optional<std::string> st_x;
    std::optional<long> st_r;
    std::optional<std::string> st_whitney;
    auto* st_cmd = app.add_subcommand("stirling", "Stirling-type triangles");
    add_json_flag(st_cmd);
    st_cmd->add_option("--n", st_n, "largest row index")->required()->check(
        CLI::NonNegativeNumber);
    auto* st_x_opt = st_cmd->add_option("--x", st_x, "weight x (rational triangle)");
    auto* st_r_opt = st_cmd->add_option("--r", st_r, "r-Stirling triangle {n+r over k+r}_r");
    auto* st_w_opt = st_cmd->add_option("--whitney", st_whitney, "Whitney triangle, M,R");
    st_x_opt->excludes(st_r_opt)->excludes(st_w_opt);
    st_r_opt->excludes(st_x_opt)->excludes(st_w_opt);
    st_w_opt->excludes(st_x_opt)->excludes(st_r_opt);

    // bernoulli
    long bern_n = 0, bern_alpha = 1;
    std::optional<std::string> bern_at;
    auto* bern_cmd =
        app.add_subcommand("bernoulli", "Bernoulli polynomial coefficients or values");
    add_json_flag(bern_cmd);
    bern_cmd->add_option("--n", bern_n, "degree n >= 0")->required()->check(
        CLI::NonNegativeNumber);
    bern_cmd->add_option("--alpha", bern_alpha, "order alpha >= 0 (default 1, classical)");
    bern_cmd->add_option("--at", bern_at, "evaluate at the given rational point");

    // series
    std::string ser_kind, ser_a, ser_d;
    int ser_order = 0;
    long ser_n = 0, ser_r = 0;
    auto* ser_cmd = app.add_subcommand("series", "exact EGF coefficient dumps");
    add_json_flag(ser_cmd);
    ser_cmd->add_option("--kind", ser_kind, "egf-direct|egf-2f1|egf-laurent|powersum-egf")
        ->required();
    ser_cmd->add_option("--order", ser_order, "truncation order N >= 0")
        ->required()
        ->check(CLI::NonNegativeNumber);
    ser_cmd->add_option("--a", ser_a, "first term (rational)")->required();
    ser_cmd->add_option("--d", ser_d, "common difference (nonzero rational)")->required();
    ser_cmd->add_option("--n", ser_n, "index of the last term")->required()->check(
        CLI::NonNegativeNumber);
    ser_cmd->add_option("--r", ser_r, "iteration depth (egf-* kinds; default 0)");

    // verify
    std::string ver_grid = "small";
    auto* ver_cmd = app.add_subcommand("verify", "run the cross-formula verification suite");
    add_json_flag(ver_cmd);
    ver_cmd->add_option("--grid", ver_grid, "small|full (default small)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sum_cmd->parsed())
            return run_sum(sum_p, sum_a, sum_d, sum_n, sum_method, as_json);
        if (hyp_cmd->parsed())
            return run_hypersum(hyp_p, hyp_a, hyp_d, hyp_n, hyp_r, hyp_method, as_json);
        if (st_cmd->parsed())
            return run_stirling(st_n, st_x, st_r, st_whitney, as_json);
        if (bern_cmd->parsed())
            return run_bernoulli(bern_n, bern_alpha, bern_at, as_json);
        if (ser_cmd->parsed())
            return run_series(ser_kind, ser_order, ser_a, ser_d, ser_n, ser_r, as_json);
        if (ver_cmd->parsed())
            return run_verify_cmd(ver_grid, as_json);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const apsum::NotApplicableError& e) {
        std::cerr << "not applicable: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
