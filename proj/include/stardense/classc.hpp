#pragma once

// Curvature condition checks for twice-differentiable convex F on [0,1].
// Membership in the admissible class C is witnessed by two families of
// constrained triples a < y < b:
//
//   C1: secant(y,b) - secant(a,y) = F'(b) - F'(y), with required inequality
//       2(b-y)[F(b) - (b-y)F'(b) + (b-y)^2 F''(b)/2 - F(y)]
//         + (y-a)[F(b) - (b-y)F'(y) + (b-y)^2 F''(y) - F(y)] >= 0
//
//   C2: secant(y,b) - secant(a,y) = F'(y) - F'(a), with required inequality
//       2(y-a)[F(a) + (y-a)F'(a) + (y-a)^2 F''(a)/2 - F(y)]
//         + (b-y)[F(a) + (y-a)F'(y) + (y-a)^2 F''(y) - F(y)] >= 0
//
// For convex F the constraint left side is monotone in the free variable
// (a for C1, b for C2), so each check is a bisection solve followed by an
// evaluation of the inequality at the solved triple.  The J-functional
// J(t) = t F(t + z(t)) + z(t) F(t) with z(t) = (gamma - t^2) / (2t) probes
// whether the extremal value sits on the boundary of t in
// [eta, sqrt(gamma)].

#include <optional>

#include "stardense/function_oracle.hpp"
#include "stardense/numeric.hpp"

namespace stardense::classc {

enum class Condition { C1, C2 };

struct TripleCheck {
    Condition condition = Condition::C1;
    double a = 0, y = 0, b = 0;
    double slope_residual = 0;    // absolute defect of the constraint equation
    double inequality_value = 0;  // the required-nonnegative expression
};

// The two inequality expressions with no constraint attached.
double c1_inequality_value(const FunctionOracle& f, double a, double y, double b);
double c2_inequality_value(const FunctionOracle& f, double a, double y, double b);
Rational c1_inequality_value_q(const FunctionOracle& f, const Rational& a, const Rational& y,
                               const Rational& b);
Rational c2_inequality_value_q(const FunctionOracle& f, const Rational& a, const Rational& y,
                               const Rational& b);

// Solve the C1 constraint for a in [0, y) at fixed 0 < y < b <= 1.  Absent
// when no root exists (the a = 0 value already falls below the target) or
// the constraint degenerates (linear F).  Throws on detected non-convexity.
std::optional<TripleCheck> c1_check(const FunctionOracle& f, double y, double b);

// Solve the C2 constraint for b in (y, 1] at fixed 0 <= a < y < 1.
std::optional<TripleCheck> c2_check(const FunctionOracle& f, double a, double y);

enum class ScanVerdict { Consistent, Borderline, Violation };

struct ScanReport {
    int grid = 0;
    std::size_t c1_found = 0;
    std::size_t c2_found = 0;
    bool any = false;
    double min_value = 0;  // +infinity when no triple was found
    TripleCheck min_triple;
    ScanVerdict verdict = ScanVerdict::Consistent;
    std::optional<TripleCheck> violation;  // set when verdict == Violation
};

// Run both checks over all grid-aligned parameter pairs (multiples of
// 1/grid).  Consistent requires every found value strictly positive;
// values in (-1e-12, 0] are flagged Borderline; anything lower is a
// Violation with the offending triple recorded.
ScanReport membership_scan(const FunctionOracle& f, int grid);

// sum_{i=0}^{m} (m+1-i)(3i-m) x^i, exactly; nonnegative for x >= 1 and
// zero at x = 1.  Arguments below 1 are rejected unless explicitly allowed.
Rational auxiliary_poly_value(int m, const Rational& x, bool allow_below_one = false);

// J(t) for t in [eta, sqrt(gamma)], gamma strictly inside (0, 1).
double j_eval(const FunctionOracle& f, double gamma, double t);

// Exact variant; the domain test needs no square roots because
// t ∈ [eta, sqrt(gamma)] is equivalent to t^2 <= gamma and t^2 - 2t + gamma <= 0.
Rational j_eval_exact(const FunctionOracle& f, const Rational& gamma, const Rational& t);

struct JBoundaryReport {
    bool holds = false;      // sampled max exceeds the boundary by <= 1e-9
    double worst_t = 0;      // sample with the largest J value
    double worst_excess = 0; // sampled max minus boundary max (can be negative)
    double boundary_max = 0;
    double eta = 0;
    double sqrt_gamma = 0;
};

// Does max J live on the boundary of [eta, sqrt(gamma)]?  F is shifted so
// F(0) = 0 before evaluation; samples are uniform over the interval (a
// single sample probes the midpoint).
JBoundaryReport j_boundary_check(const FunctionOracle& f, double gamma, int samples);

}  // namespace stardense::classc
