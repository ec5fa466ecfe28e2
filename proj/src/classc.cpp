#include "stardense/classc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace stardense::classc {

namespace {

constexpr int kMaxBisectIters = 200;
// Accepted triples must meet the constraint equation this tightly.
constexpr double kResidualTol = 1e-11;
// Tolerance on the secant monotonicity diagnostic; endpoint secants over
// very short intervals carry a little cancellation noise.
constexpr double kMonotoneTol = 1e-6;
constexpr double kDegenerateTol = 1e-13;

double secant(const FunctionOracle& f, double u, double v) {
    return (f.value(v) - f.value(u)) / (v - u);
}

double c1_value_impl(const FunctionOracle& f, double a, double y, double b) {
    const double d = b - y;
    const double fy = f.value(y);
    const double outer = f.value(b) - d * f.deriv1(b) + 0.5 * d * d * f.deriv2(b) - fy;
    const double inner = f.value(b) - d * f.deriv1(y) + d * d * f.deriv2(y) - fy;
    return 2 * d * outer + (y - a) * inner;
}

double c2_value_impl(const FunctionOracle& f, double a, double y, double b) {
    const double d = y - a;
    const double fy = f.value(y);
    const double outer = f.value(a) + d * f.deriv1(a) + 0.5 * d * d * f.deriv2(a) - fy;
    const double inner = f.value(a) + d * f.deriv1(y) + d * d * f.deriv2(y) - fy;
    return 2 * d * outer + (b - y) * inner;
}

void require_exact(const FunctionOracle& f) {
    if (!f.exact())
        throw std::invalid_argument("exact inequality value needs an exact function oracle");
}

void require_triple_order(double a, double y, double b) {
    if (!(a < y && y < b) || a < 0 || b > 1)
        throw std::invalid_argument("triple must satisfy 0 <= a < y < b <= 1");
}

// Shared bisection for both constraint solves.  g must be nonincreasing
// over [lo, hi] with g(lo) >= 0 >= g(hi); returns the root.
template <class G>
double bisect_root(G&& g, double lo, double hi) {
    for (int it = 0; it < kMaxBisectIters && hi - lo > 1e-16; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (g(mid) >= 0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

std::optional<TripleCheck> solve_condition(const FunctionOracle& f, Condition cond, double fixed_lo,
                                           double fixed_hi) {
    // C1: fixed pair (y, b), solve for a in [0, y).  The constraint gap
    //   g(a) = secant(y,b) - secant(a,y) - (F'(b) - F'(y))
    // is nonincreasing in a for convex F.
    // C2: fixed pair (a, y), solve for b in (y, 1].  The gap
    //   g(b) = secant(y,b) - secant(a,y) - (F'(y) - F'(a))
    // is nondecreasing in b; negate it so both cases share one solver.
    const bool is_c1 = cond == Condition::C1;
    const double y = is_c1 ? fixed_lo : fixed_hi;

    auto gap = [&](double x) {
        if (is_c1) {
            const double target = f.deriv1(fixed_hi) - f.deriv1(y);
            return secant(f, y, fixed_hi) - secant(f, x, y) - target;
        }
        const double target = f.deriv1(y) - f.deriv1(fixed_lo);
        return -(secant(f, y, x) - secant(f, fixed_lo, y) - target);
    };

    // Search interval for the free variable, shaved slightly off the fixed
    // endpoint where the secant denominator vanishes.
    const double shave = 1e-9 * std::max(y, is_c1 ? y : 1.0 - y);
    const double lo = is_c1 ? 0.0 : y + shave;
    const double hi = is_c1 ? y - shave : 1.0;
    if (!(lo < hi))
        return std::nullopt;

    const double g_lo = gap(lo);
    const double g_hi = gap(hi);
    const double scale = std::max({1.0, std::fabs(g_lo), std::fabs(g_hi)});

    // Convexity guarantees g_lo >= g_hi (both branches are arranged to be
    // nonincreasing); a clear reversal means the secant slopes of F are
    // not monotone.
    if (g_lo < g_hi - kMonotoneTol * scale)
        throw std::domain_error("non-convex function: secant slopes are not monotone");

    // An (almost) affine F satisfies the constraint identically, singling
    // out no strict triple.  Probe two interior points: secants there are
    // well conditioned, unlike at the shaved endpoint, and a monotone gap
    // that vanishes at both must be flat throughout.
    if (std::fabs(gap(lo + 0.25 * (hi - lo))) <= kDegenerateTol * scale &&
        std::fabs(gap(lo + 0.75 * (hi - lo))) <= kDegenerateTol * scale)
        return std::nullopt;

    // The nonincreasing gap crosses zero inside the interval iff
    // g_lo >= 0 >= g_hi; otherwise no admissible triple exists here.
    if (g_lo < 0 || g_hi > 0)
        return std::nullopt;

    const double root = bisect_root(gap, lo, hi);
    TripleCheck r;
    r.condition = cond;
    if (is_c1) {
        r.a = root;
        r.y = fixed_lo;
        r.b = fixed_hi;
    } else {
        r.a = fixed_lo;
        r.y = fixed_hi;
        r.b = root;
    }
    r.slope_residual = std::fabs(gap(root));
    if (r.slope_residual > kResidualTol)
        return std::nullopt;
    r.inequality_value = is_c1 ? c1_value_impl(f, r.a, r.y, r.b) : c2_value_impl(f, r.a, r.y, r.b);
    return r;
}

}  // namespace

double c1_inequality_value(const FunctionOracle& f, double a, double y, double b) {
    require_triple_order(a, y, b);
    return c1_value_impl(f, a, y, b);
}

double c2_inequality_value(const FunctionOracle& f, double a, double y, double b) {
    require_triple_order(a, y, b);
    return c2_value_impl(f, a, y, b);
}

Rational c1_inequality_value_q(const FunctionOracle& f, const Rational& a, const Rational& y,
                               const Rational& b) {
    require_exact(f);
    if (!(a < y && y < b) || a < 0 || b > 1)
        throw std::invalid_argument("triple must satisfy 0 <= a < y < b <= 1");
    const Rational d = b - y;
    const Rational fy = f.value_q(y);
    const Rational outer =
        f.value_q(b) - d * f.deriv1_q(b) + d * d * f.deriv2_q(b) / 2 - fy;
    const Rational inner = f.value_q(b) - d * f.deriv1_q(y) + d * d * f.deriv2_q(y) - fy;
    return 2 * d * outer + (y - a) * inner;
}

Rational c2_inequality_value_q(const FunctionOracle& f, const Rational& a, const Rational& y,
                               const Rational& b) {
    require_exact(f);
    if (!(a < y && y < b) || a < 0 || b > 1)
        throw std::invalid_argument("triple must satisfy 0 <= a < y < b <= 1");
    const Rational d = y - a;
    const Rational fy = f.value_q(y);
    const Rational outer =
        f.value_q(a) + d * f.deriv1_q(a) + d * d * f.deriv2_q(a) / 2 - fy;
    const Rational inner = f.value_q(a) + d * f.deriv1_q(y) + d * d * f.deriv2_q(y) - fy;
    return 2 * d * outer + (b - y) * inner;
}

std::optional<TripleCheck> c1_check(const FunctionOracle& f, double y, double b) {
    if (!(0 < y && y < b && b <= 1))
        throw std::invalid_argument("c1_check needs 0 < y < b <= 1");
    return solve_condition(f, Condition::C1, y, b);
}

std::optional<TripleCheck> c2_check(const FunctionOracle& f, double a, double y) {
    if (!(0 <= a && a < y && y < 1))
        throw std::invalid_argument("c2_check needs 0 <= a < y < 1");
    return solve_condition(f, Condition::C2, a, y);
}

ScanReport membership_scan(const FunctionOracle& f, int grid) {
    if (grid < 2)
        throw std::invalid_argument("membership_scan needs a grid of at least 2");
    ScanReport report;
    report.grid = grid;
    report.min_value = std::numeric_limits<double>::infinity();

    auto absorb = [&](const std::optional<TripleCheck>& t) {
        if (!t)
            return;
        (t->condition == Condition::C1 ? report.c1_found : report.c2_found) += 1;
        if (t->inequality_value < report.min_value) {
            report.min_value = t->inequality_value;
            report.min_triple = *t;
        }
    };

    for (int i = 1; i < grid; ++i)
        for (int j = i + 1; j <= grid; ++j)
            absorb(c1_check(f, double(i) / grid, double(j) / grid));
    for (int i = 0; i + 1 < grid; ++i)
        for (int j = i + 1; j < grid; ++j)
            absorb(c2_check(f, double(i) / grid, double(j) / grid));

    report.any = report.c1_found + report.c2_found > 0;
    if (!report.any || report.min_value > 0) {
        report.verdict = ScanVerdict::Consistent;
    } else if (report.min_value > -1e-12) {
        report.verdict = ScanVerdict::Borderline;
    } else {
        report.verdict = ScanVerdict::Violation;
        report.violation = report.min_triple;
    }
    return report;
}

Rational auxiliary_poly_value(int m, const Rational& x, bool allow_below_one) {
    if (m < 0)
        throw std::invalid_argument("auxiliary_poly_value needs m >= 0");
    if (x < 1 && !allow_below_one)
        throw std::domain_error("auxiliary_poly_value is intended for x >= 1");
    Rational total = 0;
    Rational xi = 1;
    for (int i = 0; i <= m; ++i) {
        total += Rational(m + 1 - i) * Rational(3 * i - m) * xi;
        xi *= x;
    }
    return total;
}

double j_eval(const FunctionOracle& f, double gamma, double t) {
    if (!(gamma > 0 && gamma < 1))
        throw std::invalid_argument("j_eval needs gamma strictly inside (0, 1)");
    const double sqrt_gamma = std::sqrt(gamma);
    const double eta = 1 - std::sqrt(1 - gamma);
    if (t < eta - 1e-12 || t > sqrt_gamma + 1e-12)
        throw std::domain_error("j_eval needs t in [eta, sqrt(gamma)]");
    t = std::clamp(t, eta, sqrt_gamma);
    const double z = (gamma - t * t) / (2 * t);
    return t * f.value(std::min(t + z, 1.0)) + z * f.value(t);
}

Rational j_eval_exact(const FunctionOracle& f, const Rational& gamma, const Rational& t) {
    require_exact(f);
    if (!(gamma > 0 && gamma < 1))
        throw std::invalid_argument("j_eval_exact needs gamma strictly inside (0, 1)");
    if (t <= 0 || t * t > gamma || t * t - 2 * t + gamma > 0)
        throw std::domain_error("j_eval_exact needs t in [eta, sqrt(gamma)]");
    const Rational z = (gamma - t * t) / (2 * t);
    return t * f.value_q(t + z) + z * f.value_q(t);
}

JBoundaryReport j_boundary_check(const FunctionOracle& f, double gamma, int samples) {
    if (samples < 1)
        throw std::invalid_argument("j_boundary_check needs at least one sample");
    if (!(gamma > 0 && gamma < 1))
        throw std::invalid_argument("j_boundary_check needs gamma strictly inside (0, 1)");
    JBoundaryReport report;
    report.sqrt_gamma = std::sqrt(gamma);
    report.eta = 1 - std::sqrt(1 - gamma);

    const double f0 = f.value(0);
    auto j_shifted = [&](double t) {
        const double z = (gamma - t * t) / (2 * t);
        return t * (f.value(std::min(t + z, 1.0)) - f0) + z * (f.value(t) - f0);
    };

    report.boundary_max = std::max(j_shifted(report.eta), j_shifted(report.sqrt_gamma));
    double best = -std::numeric_limits<double>::infinity();
    double best_t = report.eta;
    const double span = report.sqrt_gamma - report.eta;
    for (int i = 0; i < samples; ++i) {
        const double t = samples == 1 ? report.eta + 0.5 * span
                                      : report.eta + span * i / (samples - 1);
        const double v = j_shifted(t);
        if (v > best) {
            best = v;
            best_t = t;
        }
    }
    report.worst_t = best_t;
    report.worst_excess = best - report.boundary_max;
    report.holds = report.worst_excess <= 1e-9;
    return report;
}

}  // namespace stardense::classc
