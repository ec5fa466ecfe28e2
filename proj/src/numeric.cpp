#include "stardense/numeric.hpp"

#include <cstddef>

namespace stardense {

BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;  // exact: the running product is always divisible
    }
    return result;
}

BigInt factorial(long long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt result = 1;
    for (long long i = 2; i <= n; ++i) result *= i;
    return result;
}

BigInt falling_factorial(long long d, long long k) {
    BigInt result = 1;
    for (long long i = 0; i < k; ++i) result *= d - i;
    return result;
}

double ipow(double base, unsigned exp) {
    double result = 1.0;
    for (unsigned i = 0; i < exp; ++i) result *= base;
    return result;
}

BigInt ipow(const BigInt& base, unsigned exp) {
    BigInt result = 1;
    for (unsigned i = 0; i < exp; ++i) result *= base;
    return result;
}

Rational ipow(const Rational& base, unsigned exp) {
    Rational result = 1;
    for (unsigned i = 0; i < exp; ++i) result *= base;
    return result;
}

HighFloat ipow(const HighFloat& base, unsigned exp) {
    HighFloat result = 1;
    for (unsigned i = 0; i < exp; ++i) result *= base;
    return result;
}

std::optional<Rational> exact_sqrt(const Rational& x) {
    if (x < 0) return std::nullopt;
    const BigInt num = boost::multiprecision::numerator(x);
    const BigInt den = boost::multiprecision::denominator(x);
    const BigInt rn = boost::multiprecision::sqrt(num);  // floor sqrt
    const BigInt rd = boost::multiprecision::sqrt(den);
    if (rn * rn != num || rd * rd != den) return std::nullopt;
    return Rational(rn, rd);
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (num.empty() || den.empty())
            throw std::invalid_argument("parse_rational: malformed fraction '" + text + "'");
        return Rational(BigInt(num), BigInt(den));
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(BigInt(text));
    // Finite decimal: digits after the dot scale the denominator.  The sign
    // is split off and leading zeros dropped so the digit string is not
    // mistaken for an octal literal.
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    bool negative = false;
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
        negative = digits[0] == '-';
        digits.erase(digits.begin());
    }
    while (digits.size() > 1 && digits[0] == '0') digits.erase(digits.begin());
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("parse_rational: malformed decimal '" + text + "'");
    const std::size_t frac_len = text.size() - dot - 1;
    BigInt den = 1;
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    Rational value(BigInt(digits), den);
    return negative ? -value : value;
}

std::string format_rational(const Rational& x) {
    const BigInt num = boost::multiprecision::numerator(x);
    const BigInt den = boost::multiprecision::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::uint64_t SplitMix64::next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double SplitMix64::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

}  // namespace stardense
