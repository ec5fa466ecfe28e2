#pragma once

// Locates the density where the two branches of the star bound swap
// winners.  The sign of
//
//   Q(k, eps) = (1+eps)^(k+1) - (1-eps)^(1-k) - 2 eps - eps^2 (1-eps)^(k-1)
//
// decides the winner at edge density gamma = 1 - eps^2: Q is positive for
// eps below its unique root eps_k in (0, 1) and negative above, so
// gamma_k = 1 - eps_k^2 is the crossover density for exponent k.  As k
// grows, k * eps_k approaches the root alpha of a/2 + exp(-a) = 1, giving
// the asymptote gamma_k ~ 1 - (alpha/k)^2.

#include <vector>

#include "stardense/numeric.hpp"

namespace stardense::crossover {

// Q(k, eps) for k >= 2 and 0 <= eps < 1.  Evaluated in double precision
// for small k; larger k are computed in 50-digit floats internally to
// absorb the cancellation between the two large power terms.
double q_eval(int k, double eps);

// Exact coefficient q_i (i >= 4) of the expansion
//   Q(k, eps) = (k-1) eps^2 + (k-1) eps^3 - sum_{i >= 4} q_i eps^i,
// namely binomial(k+i-2, i) - binomial(k+1, i) + (-1)^i binomial(k-1, i-2);
// always at least binomial(k, i-1) + binomial(k-1, i-3), hence nonnegative.
BigInt q_taylor_coeff(int k, int i);

struct CrossoverResult {
    int k = 0;
    double eps = 0;         // root of Q(k, .)
    double gamma = 0;       // 1 - eps^2, the crossover density
    double residual = 0;    // |Q(k, eps)| at the reported root
    double bracket_lo = 0;  // final bracket with Q(lo) >= 0 >= Q(hi)
    double bracket_hi = 0;

    double bracket_width() const { return bracket_hi - bracket_lo; }
};

// Bracket the sign change of Q(k, .) by a coarse scan from eps = 1e-3
// (scanning downward geometrically if the root is smaller still), then
// bisect until the bracket is narrower than tol.
CrossoverResult find_crossover(int k, double tol = 1e-13);

// The root alpha ~ 1.5936 of a/2 + exp(-a) = 1, bisected on [1, 2] until
// the bracket is narrower than tol.
double alpha_constant(double tol = 1e-15);

struct AsymptoteRow {
    int k = 0;
    double eps = 0;
    double gamma = 0;
    double k2_one_minus_gamma = 0;       // k^2 (1 - gamma_k) = (k eps_k)^2
    double deviation_from_alpha_sq = 0;  // |(k eps_k)^2 - alpha^2|
};

// One row per requested k, measuring how fast k^2 (1 - gamma_k)
// approaches alpha^2.
std::vector<AsymptoteRow> asymptote_table(const std::vector<int>& ks);

}  // namespace stardense::crossover
