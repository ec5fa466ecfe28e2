#pragma once

// Shared numeric foundation: arbitrary-precision integers and rationals
// (Boost.Multiprecision), a wide binary float for ill-conditioned root
// finding, deterministic helpers for powers/binomials, and a tiny
// counter-based random source that behaves identically on every platform.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace stardense {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// ~50 decimal digits; used where 53-bit doubles lose the signal
// (root finding with steep exponents at large k).
using HighFloat = boost::multiprecision::cpp_bin_float_50;

// C(n, k) as an exact integer; 0 outside the Pascal triangle.
BigInt binomial(long long n, long long k);

// n! as an exact integer; n must be >= 0.
BigInt factorial(long long n);

// Falling factorial d * (d-1) * ... * (d-k+1).
BigInt falling_factorial(long long d, long long k);

// Deterministic integer powers: plain left-fold multiply so the rounding
// sequence is identical everywhere (std::pow may differ across libms).
double ipow(double base, unsigned exp);
BigInt ipow(const BigInt& base, unsigned exp);
Rational ipow(const Rational& base, unsigned exp);
HighFloat ipow(const HighFloat& base, unsigned exp);

// Exact square root of a nonnegative rational, when one exists.
std::optional<Rational> exact_sqrt(const Rational& x);

double to_double(const Rational& x);

// Accepts "p/q", plain integers, and finite decimals ("9/25", "-3", "0.36").
Rational parse_rational(const std::string& text);

// Canonical "p/q" (or "p" when the denominator is 1).
std::string format_rational(const Rational& x);

// SplitMix64: a tiny counter-based generator.  Every draw is a pure
// function of (seed, counter), so streams are reproducible and splittable
// without shared state.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();

    // Uniform in [0, 1) with 53 random bits.
    double next_unit();

private:
    std::uint64_t state_;
};

}  // namespace stardense
