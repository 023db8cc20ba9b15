#include "apsum/bernoulli.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "apsum/series.hpp"
#include "apsum/stirling.hpp"

namespace apsum {

namespace {

BernoulliPoly make_gen_bernoulli_poly(long alpha, long n) {
    // (z/(e^z-1))^alpha = pow(invert((e^z-1)/z), alpha), all unit series.
    const TruncatedSeries unit = expm1_over_z(Rational(1), static_cast<int>(n));
    const TruncatedSeries v = pow(invert(unit), alpha);
    std::vector<Rational> coeffs(static_cast<size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) {
        const long m = n - k;  // Bhat_m multiplies x^k
        const Rational bhat = Rational(factorial(m)) * v[static_cast<int>(m)];
        coeffs[static_cast<size_t>(k)] = Rational(binomial(n, k)) * bhat;
    }
    return BernoulliPoly(alpha, std::move(coeffs));
}

std::map<std::pair<long, long>, BernoulliPoly> poly_cache;
std::mutex poly_mutex;

}  // namespace

BernoulliPoly gen_bernoulli_poly(long alpha, long n) {
    if (alpha < 0 || n < 0)
        throw std::invalid_argument("gen_bernoulli_poly: negative arguments");
    std::lock_guard<std::mutex> lock(poly_mutex);
    const auto key = std::make_pair(alpha, n);
    auto it = poly_cache.find(key);
    if (it == poly_cache.end())
        it = poly_cache.emplace(key, make_gen_bernoulli_poly(alpha, n)).first;
    return it->second;
}

BernoulliPoly bernoulli_poly(long n) { return gen_bernoulli_poly(1, n); }

Rational evaluate(const BernoulliPoly& p, const Rational& x) {
    Rational acc;
    for (long k = p.degree(); k >= 0; --k)
        acc = acc * x + p.coeff(k);
    return acc;
}

Rational gen_bernoulli(long alpha, long n, const Rational& x) {
    return evaluate(gen_bernoulli_poly(alpha, n), x);
}

Rational bernoulli_via_stirling(long n, const Rational& x) {
    if (n < 0)
        throw std::invalid_argument("bernoulli_via_stirling: negative degree");
    Rational acc;
    for (long k = 0; k <= n; ++k) {
        const Rational term =
            Rational(factorial(k)) / Rational(k + 1) * weighted_stirling(n, k, x);
        if (k % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

}  // namespace apsum
