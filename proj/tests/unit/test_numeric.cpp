#include "doctest.h"
#include "stardense/numeric.hpp"

using namespace stardense;

TEST_CASE("binomial basics") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(12, 3) == 220);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(7, -1) == 0);
    CHECK(binomial(52, 26) == BigInt("495918532948104"));
}

TEST_CASE("pascal recurrence on a block") {
    for (long long n = 1; n <= 40; ++n)
        for (long long k = 1; k <= n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("factorial and falling factorial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(falling_factorial(7, 3) == 7 * 6 * 5);
    CHECK(falling_factorial(3, 5) == 0);  // runs through zero
    // C(d, k) * k! is the falling factorial
    for (long long d = 0; d <= 12; ++d)
        for (long long k = 0; k <= 12; ++k)
            CHECK(binomial(d, k) * factorial(k) == falling_factorial(d, k));
}

TEST_CASE("integer powers") {
    CHECK(ipow(2.0, 10) == 1024.0);
    CHECK(ipow(BigInt(3), 20) == BigInt("3486784401"));
    CHECK(ipow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(ipow(0.0, 0) == 1.0);
}

TEST_CASE("exact square roots") {
    CHECK(exact_sqrt(Rational(9, 25)) == Rational(3, 5));
    CHECK(exact_sqrt(Rational(16, 25)) == Rational(4, 5));
    CHECK(exact_sqrt(Rational(0)) == Rational(0));
    CHECK(exact_sqrt(Rational(1)) == Rational(1));
    CHECK(!exact_sqrt(Rational(1, 2)).has_value());
    CHECK(!exact_sqrt(Rational(-1, 4)).has_value());
}

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("9/25") == Rational(9, 25));
    CHECK(parse_rational("-3") == Rational(-3));
    CHECK(parse_rational("0.36") == Rational(9, 25));
    CHECK(parse_rational("1.5") == Rational(3, 2));
    CHECK(parse_rational("2/4") == Rational(1, 2));
    CHECK(format_rational(Rational(9, 25)) == "9/25");
    CHECK(format_rational(Rational(4)) == "4");
    CHECK(format_rational(Rational(-1, 40)) == "-1/40");
    CHECK_THROWS(parse_rational(""));
    CHECK_THROWS(parse_rational("1/"));
}

TEST_CASE("splitmix64 is a fixed function of the seed") {
    SplitMix64 rng(0);
    // First outputs of the reference implementation for seed 0.
    CHECK(rng.next_u64() == 0xe220a8397b1dcdafULL);
    CHECK(rng.next_u64() == 0x6e789e6aa1b965f4ULL);
    SplitMix64 a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
    SplitMix64 c(7);
    for (int i = 0; i < 1000; ++i) {
        const double u = c.next_unit();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}
