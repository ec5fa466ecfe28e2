#include <cmath>
#include <vector>

#include "doctest.h"
#include "stardense/bounds.hpp"
#include "stardense/crossover.hpp"

using namespace stardense;
using namespace stardense::crossover;

TEST_CASE("q vanishes exactly at the dyadic root for the cube exponent") {
    // (3/2)^4 - (1/2)^-2 - 1 - (1/4)(1/2)^2 = 5.0625 - 4 - 1 - 0.0625: every
    // intermediate is a dyadic double, so the cancellation is exact.
    CHECK(q_eval(3, 0.5) == 0.0);
    CHECK(q_eval(2, 0.0) == 0.0);
    CHECK(q_eval(7, 0.0) == 0.0);
    CHECK(q_eval(2, 0.3) > 0);
    CHECK(q_eval(2, 0.8) < 0);
}

TEST_CASE("q argument validation") {
    CHECK_THROWS_AS(q_eval(1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(q_eval(3, -0.1), std::domain_error);
    CHECK_THROWS_AS(q_eval(3, 1.0), std::domain_error);
    CHECK_THROWS_AS(q_taylor_coeff(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(q_taylor_coeff(4, 3), std::invalid_argument);
    CHECK_THROWS_AS(find_crossover(1), std::invalid_argument);
    CHECK_THROWS_AS(find_crossover(3, 0.0), std::invalid_argument);
}

TEST_CASE("known crossover roots") {
    const auto two = find_crossover(2);
    CHECK(two.eps == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(two.gamma == doctest::Approx(0.5).epsilon(1e-12));
    // k^2 (1 - gamma_k) is exactly 2 at k = 2.
    CHECK(4 * (1 - two.gamma) == doctest::Approx(2.0).epsilon(1e-11));

    const auto three = find_crossover(3);
    CHECK(three.eps == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(three.gamma == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("bisection invariants and monotone roots") {
    double previous = 1.0;
    for (int k = 2; k <= 12; ++k) {
        const auto r = find_crossover(k);
        CHECK(r.k == k);
        CHECK(r.bracket_hi - r.bracket_lo <= 1e-13);
        CHECK(r.bracket_lo <= r.eps);
        CHECK(r.eps <= r.bracket_hi);
        CHECK(q_eval(k, r.bracket_lo) >= 0);
        CHECK(q_eval(k, r.bracket_hi) <= 0);
        CHECK(std::fabs(r.residual) <= 1e-9);
        CHECK(r.gamma == 1 - r.eps * r.eps);
        CHECK(r.eps < previous);  // roots shrink as the exponent grows
        previous = r.eps;
    }
    // The 50-digit evaluation path used past k = 40 stays consistent.
    for (int k : {41, 64}) {
        const auto r = find_crossover(k);
        CHECK(r.bracket_hi - r.bracket_lo <= 1e-13);
        CHECK(std::fabs(r.residual) <= 1e-9);
    }
}

TEST_CASE("tail coefficients match a truncated series evaluation") {
    for (int k = 2; k <= 6; ++k)
        for (double eps : {0.1, 0.25, 0.5}) {
            double series = (k - 1) * eps * eps + (k - 1) * eps * eps * eps;
            double pw = eps * eps * eps * eps;
            for (int i = 4; i <= 200; ++i) {
                series -= to_double(Rational(q_taylor_coeff(k, i))) * pw;
                pw *= eps;
            }
            CHECK(series == doctest::Approx(q_eval(k, eps)).epsilon(1e-10));
        }
}

TEST_CASE("tail coefficients dominate their binomial floor") {
    for (int k = 2; k <= 64; ++k)
        for (int i = 4; i <= 200; ++i) {
            const BigInt q = q_taylor_coeff(k, i);
            CHECK(q >= binomial(k, i - 1) + binomial(k - 1, i - 3));
            CHECK(q >= 0);
        }
    for (int i = 4; i <= 50; ++i)
        CHECK(q_taylor_coeff(2, i) == 1);
}

TEST_CASE("q is positive below each root and negative above") {
    for (int k = 2; k <= 12; ++k) {
        const double root = find_crossover(k).eps;
        for (int step = 1; step < 1000; ++step) {
            const double eps = step * 1e-3;
            if (std::fabs(eps - root) <= 1e-6)
                continue;  // the k = 3 grid hits its root exactly
            if (eps < root)
                CHECK(q_eval(k, eps) > 0);
            else
                CHECK(q_eval(k, eps) < 0);
        }
    }
}

TEST_CASE("alpha solves its defining equation") {
    const double alpha = alpha_constant();
    CHECK(std::fabs(alpha - 1.5936) <= 1e-4);
    CHECK(std::fabs(0.5 * alpha + std::exp(-alpha) - 1) <= 1e-14);
    // Coarser tolerances still land on the same four leading decimals.
    CHECK(std::floor(alpha_constant(1e-10) * 1e4 + 0.5) == 15936.0);
    CHECK_THROWS_AS(alpha_constant(0.0), std::invalid_argument);
}

TEST_CASE("asymptote rows carry consistent derived columns") {
    const auto rows = asymptote_table({2, 3, 8});
    REQUIRE(rows.size() == 3);
    const double alpha_sq = alpha_constant() * alpha_constant();
    CHECK(rows[0].k == 2);
    CHECK(rows[0].k2_one_minus_gamma == doctest::Approx(2.0).epsilon(1e-11));
    CHECK(rows[0].deviation_from_alpha_sq == doctest::Approx(alpha_sq - 2.0).epsilon(1e-9));
    for (const auto& row : rows) {
        const double ke = row.k * row.eps;
        CHECK(row.k2_one_minus_gamma == doctest::Approx(ke * ke).epsilon(1e-14));
        CHECK(row.gamma == doctest::Approx(1 - row.eps * row.eps).epsilon(1e-14));
        CHECK(row.deviation_from_alpha_sq ==
              doctest::Approx(std::fabs(ke * ke - alpha_sq)).epsilon(1e-12));
    }
}

TEST_CASE("bound winner flips across each crossover density") {
    // Below gamma_k the anticlique branch carries the star bound, above it
    // the clique branch does; straddle each root by a decisive margin.
    for (int k : {2, 3, 4, 5}) {
        const double gamma_k = find_crossover(k).gamma;
        CHECK(bounds::star_bound(k, gamma_k - 1e-6).winner == bounds::Winner::Anticlique);
        CHECK(bounds::star_bound(k, gamma_k + 1e-6).winner == bounds::Winner::Clique);
    }
}
