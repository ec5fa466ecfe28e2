#pragma once

// The two-branch upper bound for star densities at a fixed edge density
// gamma: a clique block of side sqrt(gamma) gives gamma^((k+1)/2), and a
// dominating hub of measure eta = 1 - sqrt(1-gamma) gives
// eta + (1-eta) eta^k.  The bound is the larger branch; the same scheme
// applies to a general convex F via (1-sqrt(gamma)) F(0)
// + sqrt(gamma) F(sqrt(gamma)) versus (1-eta) F(eta) + eta F(1).

#include "stardense/function_oracle.hpp"
#include "stardense/numeric.hpp"
#include "stardense/step_graphon.hpp"

namespace stardense::bounds {

enum class Winner { Clique, Anticlique, Tie };

const char* winner_name(Winner w);

template <class S>
struct BoundReportT {
    S gamma{};
    S eta{};
    S clique_branch{};
    S anticlique_branch{};
    S bound{};
    Winner winner = Winner::Tie;
};

using BoundReport = BoundReportT<double>;
using BoundReportQ = BoundReportT<Rational>;

// Branches within 1e-12 of each other report a tie.
inline constexpr double kTieTol = 1e-12;

// Star-density bound for k-stars, k >= 1.
BoundReport star_bound(int k, double gamma);

// General functional bound.
BoundReport f_bound(const FunctionOracle& f, double gamma);

// Exact variant; gamma and 1 - gamma must both be perfect rational squares.
BoundReportQ f_bound_exact(const FunctionOracle& f, const Rational& gamma);

template <class S>
struct GoodnessT {
    bool holds = false;
    S slack{};  // bound minus functional; negative slack breaks goodness
    BoundReportT<S> report;
};

// Does the F-bound at the graphon's own edge density dominate the
// F-functional?  Slack down to -1e-9 is forgiven in both modes.
GoodnessT<double> is_good(const graphons::StepGraphon& w, const FunctionOracle& f);
GoodnessT<Rational> is_good(const graphons::StepGraphonQ& w, const FunctionOracle& f);

}  // namespace stardense::bounds
