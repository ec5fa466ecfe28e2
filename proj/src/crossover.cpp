#include "stardense/crossover.hpp"

#include <cmath>
#include <stdexcept>

namespace stardense::crossover {

namespace {

// Above this k the two power terms of Q agree to so many digits near the
// root that the evaluation moves to 50-digit floats.
constexpr int kDoubleCutoff = 40;

void validate_q_args(int k, double eps) {
    if (k < 2)
        throw std::invalid_argument("q_eval needs k >= 2");
    if (!(eps >= 0 && eps < 1))
        throw std::domain_error("q_eval needs 0 <= eps < 1");
}

template <class F>
F q_eval_generic(int k, F eps) {
    const F one(1);
    // (1-eps)^(1-k) with 1-k <= -1, written via the positive power.
    const F up = ipow(one + eps, unsigned(k + 1));
    const F down = ipow(one - eps, unsigned(k - 1));
    return ((up - one / down) - 2 * eps) - eps * eps * down;
}

}  // namespace

double q_eval(int k, double eps) {
    validate_q_args(k, eps);
    if (k <= kDoubleCutoff)
        return q_eval_generic<double>(k, eps);
    return static_cast<double>(q_eval_generic<HighFloat>(k, HighFloat(eps)));
}

BigInt q_taylor_coeff(int k, int i) {
    if (k < 2)
        throw std::invalid_argument("q_taylor_coeff needs k >= 2");
    if (i < 4)
        throw std::invalid_argument("q_taylor_coeff covers the tail i >= 4");
    const BigInt value =
        binomial(k + i - 2, i) - binomial(k + 1, i) + (i % 2 == 0 ? 1 : -1) * binomial(k - 1, i - 2);
    return value;
}

CrossoverResult find_crossover(int k, double tol) {
    if (k < 2)
        throw std::invalid_argument("find_crossover needs k >= 2");
    if (!(tol > 0))
        throw std::invalid_argument("find_crossover needs a positive tolerance");

    // Coarse bracket.  Q grows like (k-1) eps^2 from zero, so it is
    // positive just right of the origin; march up in 1e-3 steps until the
    // sign flips.  If even the first step is already past the root (very
    // large k) shrink geometrically to recover a positive left end.
    double lo = 1e-3;
    while (lo > 1e-300 && q_eval(k, lo) <= 0)
        lo /= 2;
    if (lo <= 1e-300)
        throw std::runtime_error("no positive region found near zero");
    double hi = lo;
    while (true) {
        const double next = hi + 1e-3 < 1 ? hi + 1e-3 : 0.5 * (hi + 1);
        if (1 - next < 1e-12)
            throw std::runtime_error("no sign change found below eps = 1");
        if (q_eval(k, next) <= 0) {
            hi = next;
            break;
        }
        lo = hi = next;
    }

    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (q_eval(k, mid) >= 0)
            lo = mid;
        else
            hi = mid;
    }

    CrossoverResult r;
    r.k = k;
    r.eps = 0.5 * (lo + hi);
    r.gamma = 1 - r.eps * r.eps;
    r.residual = std::fabs(q_eval(k, r.eps));
    r.bracket_lo = lo;
    r.bracket_hi = hi;
    return r;
}

double alpha_constant(double tol) {
    if (!(tol > 0))
        throw std::invalid_argument("alpha_constant needs a positive tolerance");
    // a/2 + exp(-a) - 1 is increasing past ln 2 and changes sign on [1, 2].
    auto g = [](double a) { return 0.5 * a + std::exp(-a) - 1; };
    double lo = 1, hi = 2;
    if (!(g(lo) < 0 && g(hi) > 0))
        throw std::runtime_error("initial alpha bracket lost its sign change");
    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) < 0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<AsymptoteRow> asymptote_table(const std::vector<int>& ks) {
    const double alpha = alpha_constant();
    const double alpha_sq = alpha * alpha;
    std::vector<AsymptoteRow> rows;
    rows.reserve(ks.size());
    for (int k : ks) {
        const auto c = find_crossover(k);
        AsymptoteRow row;
        row.k = k;
        row.eps = c.eps;
        row.gamma = c.gamma;
        // k^2 (1 - gamma) computed as (k eps)^2: the product is O(alpha),
        // so no significance is lost to the subtraction 1 - gamma.
        const double ke = k * c.eps;
        row.k2_one_minus_gamma = ke * ke;
        row.deviation_from_alpha_sq = std::fabs(ke * ke - alpha_sq);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace stardense::crossover
