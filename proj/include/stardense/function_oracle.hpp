#pragma once

// Scalar functions F on [0,1] used in densities, bounds, and curvature
// condition checks.  An oracle exposes the value and first two derivatives
// in double precision, optionally a third derivative, and -- for the power
// and piecewise-linear kinds -- exact rational evaluation.  Affine
// transforms (shift, reflect about 1/2, rescale of the argument) wrap an
// existing oracle and preserve exactness.

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "stardense/numeric.hpp"

namespace stardense {

class FunctionOracle {
public:
    double value(double x) const;
    double deriv1(double x) const;
    double deriv2(double x) const;

    bool has_deriv3() const;
    double deriv3(double x) const;  // only when has_deriv3()

    // Exact rational evaluation; only when exact().
    bool exact() const;
    Rational value_q(const Rational& x) const;
    Rational deriv1_q(const Rational& x) const;
    Rational deriv2_q(const Rational& x) const;

    bool declared_convex() const;
    std::string description() const;

    // x^k for k >= 1.
    static FunctionOracle power(int k);

    // Linear interpolation through points with strictly increasing x
    // covering [0, 1]; convex exactly when the slopes are nondecreasing.
    static FunctionOracle piecewise_linear(std::vector<std::pair<Rational, Rational>> points);

    // Caller-supplied double-precision callbacks (no exact mode).
    static FunctionOracle custom(std::string name, std::function<double(double)> value,
                                 std::function<double(double)> deriv1,
                                 std::function<double(double)> deriv2, bool convex,
                                 std::function<double(double)> deriv3 = nullptr);

    // x -> F(x) + a + b x
    FunctionOracle shifted(const Rational& a, const Rational& b) const;
    // x -> F(1 - x)
    FunctionOracle reflected() const;
    // x -> F(r + (s - r) x) with 0 <= r, s <= 1
    FunctionOracle rescaled(const Rational& r, const Rational& s) const;

    class Impl;

private:
    explicit FunctionOracle(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

// "power:k" or "pwl:x0,y0;x1,y1;..." with rational or decimal literals.
FunctionOracle parse_function_spec(const std::string& spec);

}  // namespace stardense
