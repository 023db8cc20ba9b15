#include "apsum/rational.hpp"

#include <algorithm>

namespace apsum {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    const auto fail = [&] {
        return std::invalid_argument("not a rational literal: \"" + std::string(text) + "\"");
    };

    std::string_view num = text;
    std::string_view den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }

    std::string_view num_digits = num;
    if (!num_digits.empty() && num_digits.front() == '+')
        num.remove_prefix(1), num_digits.remove_prefix(1);
    else if (!num_digits.empty() && num_digits.front() == '-')
        num_digits.remove_prefix(1);
    if (!all_digits(num_digits))
        throw fail();

    Integer n(std::string(num), 10);
    if (den.data() == nullptr)
        return Rational(n);

    if (!all_digits(den))
        throw fail();
    Integer d(std::string(den), 10);
    if (d == 0)
        throw std::invalid_argument("rational literal has zero denominator: \"" +
                                    std::string(text) + "\"");
    return Rational(n, d);
}

std::string Rational::str() const {
    std::string s = v_.get_num().get_str();
    if (v_.get_den() != 1) {
        s += '/';
        s += v_.get_den().get_str();
    }
    return s;
}

Integer factorial(long n) {
    if (n < 0)
        throw std::invalid_argument("factorial: negative argument");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rational pochhammer(const Rational& x, long n) {
    if (n < 0)
        throw std::invalid_argument("pochhammer: negative length");
    Rational acc = 1;
    for (long k = 0; k < n; ++k)
        acc *= x + Rational(k);
    return acc;
}

Rational ratpow(const Rational& x, long p) {
    if (p < 0)
        throw std::invalid_argument("ratpow: negative exponent");
    // mpz_pow_ui defines 0^0 = 1, which is the convention wanted here.
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), x.numerator().get_mpz_t(), static_cast<unsigned long>(p));
    mpz_pow_ui(den.get_mpz_t(), x.denominator().get_mpz_t(), static_cast<unsigned long>(p));
    return Rational(num, den);
}

}  // namespace apsum
