#include "apsum/stirling.hpp"

#include <map>
#include <mutex>

namespace apsum {

WeightedStirlingTable::WeightedStirlingTable(Rational weight) : x_(std::move(weight)) {
    rows_.push_back({Rational(1)});  // S_0^0 = 1
}

void WeightedStirlingTable::extend(long n) {
    while (max_n() < n) {
        const auto& prev = rows_.back();
        const long m = max_n();  // building row m+1
        std::vector<Rational> row(static_cast<size_t>(m) + 2);
        for (long i = 0; i <= m + 1; ++i) {
            Rational v;
            if (i >= 1)
                v += prev[static_cast<size_t>(i - 1)];
            if (i <= m)
                v += (x_ + Rational(i)) * prev[static_cast<size_t>(i)];
            row[static_cast<size_t>(i)] = v;
        }
        rows_.push_back(std::move(row));
    }
}

Rational WeightedStirlingTable::value(long n, long i) {
    if (n < 0 || i < 0 || i > n)
        return Rational(0);
    extend(n);
    return rows_[static_cast<size_t>(n)][static_cast<size_t>(i)];
}

const Rational& WeightedStirlingTable::at(long n, long i) const {
    static const Rational zero(0);
    if (n < 0 || n > max_n())
        throw IndexOutOfRange("WeightedStirlingTable::at: row not built");
    if (i < 0 || i > n)
        return zero;
    return rows_[static_cast<size_t>(n)][static_cast<size_t>(i)];
}

namespace {

// Tables are keyed per weight; lazy growth is serialized by a mutex so
// the public entry point is safe to call concurrently.
std::map<Rational, WeightedStirlingTable>& table_cache() {
    static std::map<Rational, WeightedStirlingTable> cache;
    return cache;
}
std::mutex table_mutex;

}  // namespace

Rational weighted_stirling(long n, long i, const Rational& x) {
    if (n < 0 || i < 0 || i > n)
        return Rational(0);
    std::lock_guard<std::mutex> lock(table_mutex);
    auto [it, inserted] = table_cache().try_emplace(x, x);
    return it->second.value(n, i);
}

Rational weighted_stirling_explicit(long n, long i, const Rational& x) {
    if (i < 0 || i > n)
        throw IndexOutOfRange("weighted_stirling_explicit: need 0 <= i <= n");
    Rational acc;
    for (long j = 0; j <= i; ++j) {
        const Rational term = Rational(binomial(i, j)) * ratpow(x + Rational(j), n);
        if ((i - j) % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc / Rational(factorial(i));
}

namespace {

Integer integral_value(const Rational& v, const char* what) {
    if (!v.is_integer())
        throw NonIntegerResult(std::string(what) + ": non-integer value " + v.str());
    return v.numerator();
}

}  // namespace

Integer stirling2(long n, long k) {
    if (n < 0 || k < 0)
        throw std::invalid_argument("stirling2: negative arguments");
    return integral_value(weighted_stirling(n, k, Rational(0)), "stirling2");
}

Integer r_stirling2(long n, long k, long r) {
    if (r < 0)
        throw std::invalid_argument("r_stirling2: negative r");
    if (n < 0 || k < 0 || k > n)
        return 0;
    return integral_value(weighted_stirling(n, k, Rational(r)), "r_stirling2");
}

Integer whitney(long m, long r, long n, long i) {
    if (m < 1)
        throw std::invalid_argument("whitney: m must be positive");
    if (r < 0 || n < 0)
        throw std::invalid_argument("whitney: r and n must be non-negative");
    if (i < 0 || i > n)
        return 0;
    const Rational v =
        ratpow(Rational(m), n - i) * weighted_stirling(n, i, Rational(r, m));
    return integral_value(v, "whitney");
}

}  // namespace apsum
