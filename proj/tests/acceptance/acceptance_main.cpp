// Acceptance gate: eleven end-to-end checks, one verdict line each.  Every
// criterion runs even if an earlier one fails; the exit code is the number
// of failures (clamped to 1).  All tolerances and time budgets are pinned
// here so a green run certifies the same contract everywhere.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "stardense/bounds.hpp"
#include "stardense/classc.hpp"
#include "stardense/counting.hpp"
#include "stardense/crossover.hpp"
#include "stardense/function_oracle.hpp"
#include "stardense/numeric.hpp"
#include "stardense/search.hpp"
#include "stardense/step_graphon.hpp"
#include "stardense/threshold_graph.hpp"

namespace {

using namespace stardense;

// Tolerances and budgets, pinned.
constexpr double kCountBudgetSeconds = 10.0;
constexpr double kRootTol = 1e-10;
constexpr double kBranchTol = 1e-10;
constexpr double kAlphaTol = 1e-10;
constexpr double kDensitySlack = 1e-9;
constexpr double kAttainTol = 1e-12;
constexpr double kPropertyBudgetSeconds = 60.0;
constexpr double kOracleBudgetSeconds = 300.0;
const double kRampExcessFloor = 1.0 / 40 - 1e-9;
constexpr double kGapCeiling = 0.02;
constexpr double kDeviationCeiling = 0.1;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(double x) {
    std::ostringstream out;
    out << std::setprecision(6) << x;
    return out.str();
}

FunctionOracle ramp_oracle() { return parse_function_spec("pwl:0,0;1/5,0;3/5,1;1,3"); }

// 1. Exact star counts and degree moments of the three n=13, m=61
//    constructions, and the search maxima over all threshold graphs there.
Outcome exact_counts_13_61() {
    const auto qc = graphs::quasi_complete(13, 61);
    const auto qs = graphs::quasi_star(13, 61);
    const auto witness = graphs::extremal_witness_13_61();
    bool pass = graphs::count_stars(qc, 3) == 1610 && graphs::count_stars(qs, 3) == 1620 &&
                graphs::count_stars(witness, 3) == 1622 &&
                graphs::degree_moment(qc, 3) == 13202 &&
                graphs::degree_moment(qs, 3) == 13172 &&
                graphs::degree_moment(witness, 3) == 13238;
    const auto stars = search::max_over_threshold(13, 61, 3, search::Objective::StarCount);
    const auto moments = search::max_over_threshold(13, 61, 3, search::Objective::DegreeMoment);
    pass = pass && stars.max_value == 1622 && moments.max_value == 13238;
    return {pass, "counts 1610/1620/1622, moments 13202/13172/13238, maxima " +
                      stars.max_value.str() + "/" + moments.max_value.str()};
}

// 2. Crossover densities: gamma_2 = 1/2 and gamma_3 = 3/4 to 1e-10, and the
//    two bound branches agree at gamma_k for k = 2..12.
Outcome crossover_roots() {
    const double g2 = crossover::find_crossover(2).gamma;
    const double g3 = crossover::find_crossover(3).gamma;
    bool pass = std::fabs(g2 - 0.5) <= kRootTol && std::fabs(g3 - 0.75) <= kRootTol;
    double worst_gap = 0;
    for (int k = 2; k <= 12; ++k) {
        const double gamma = crossover::find_crossover(k).gamma;
        const double eta = 1.0 - std::sqrt(1.0 - gamma);
        const double clique = std::pow(gamma, (k + 1) / 2.0);
        const double anticlique = eta + (1.0 - eta) * std::pow(eta, k);
        worst_gap = std::max(worst_gap, std::fabs(clique - anticlique));
    }
    pass = pass && worst_gap <= kBranchTol;
    return {pass, "gamma_2 " + fmt(g2) + ", gamma_3 " + fmt(g3) + ", worst branch gap " +
                      fmt(worst_gap)};
}

// 3. The limiting constant alpha: rounds to 1.5936 and satisfies
//    alpha/2 + exp(-alpha) = 1 to 1e-10.
Outcome alpha_value() {
    const double alpha = crossover::alpha_constant(1e-10);
    const double residual = std::fabs(alpha / 2 + std::exp(-alpha) - 1.0);
    const bool pass = std::floor(alpha * 1e4 + 0.5) == 15936.0 && residual <= kAlphaTol;
    return {pass, "alpha " + fmt(alpha) + ", residual " + fmt(residual)};
}

// 4. Exact rational run of the two-hinge ramp at density 9/25: bound 3/5,
//    functional 5/8 on the L-shaped graphon, goodness fails by exactly 1/40.
Outcome exact_ramp_case() {
    const auto ramp = ramp_oracle();
    const auto report = bounds::f_bound_exact(ramp, Rational(9, 25));
    const auto shape = graphons::l_shaped(Rational(2, 5), Rational(1, 4));
    const Rational functional = graphons::f_functional(shape, ramp);
    const auto verdict = bounds::is_good(shape, ramp);
    const bool pass = report.bound == Rational(3, 5) && functional == Rational(5, 8) &&
                      !verdict.holds && verdict.slack == Rational(-1, 40);
    return {pass, "bound " + report.bound.str() + ", functional " + functional.str() +
                      ", slack " + verdict.slack.str()};
}

// 5. Property suite: 10^4 seeded random step graphons never exceed the star
//    bound for k = 2..8, and the extremal graphons attain it on a 99-point
//    density grid.  Budget: 60 s.
Outcome bound_property_suite() {
    const auto start = std::chrono::steady_clock::now();
    std::size_t violations = 0;
    double worst_excess = -1.0;
    for (std::uint64_t seed = 0; seed < 10000; ++seed) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        const double gamma = unif(rng);
        const int parts = 1 + static_cast<int>(rng() % 6);
        const auto w = graphons::random_step_graphon(parts, gamma, seed);
        const double density = graphons::edge_density(w);
        for (int k = 2; k <= 8; ++k) {
            const double excess =
                graphons::star_density(w, k) - bounds::star_bound(k, density).bound;
            worst_excess = std::max(worst_excess, excess);
            if (excess > kDensitySlack) ++violations;
        }
    }
    double worst_attain = 0;
    for (int k = 2; k <= 8; ++k) {
        for (int i = 1; i <= 99; ++i) {
            const double gamma = i / 100.0;
            const auto report = bounds::star_bound(k, gamma);
            const auto kind = report.winner == bounds::Winner::Anticlique
                                  ? graphons::ExtremalKind::Anticlique
                                  : graphons::ExtremalKind::Clique;
            const auto w = graphons::extremal_graphon(kind, gamma);
            worst_attain =
                std::max(worst_attain, std::fabs(graphons::star_density(w, k) - report.bound));
        }
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                               .count();
    const bool pass =
        violations == 0 && worst_attain <= kAttainTol && elapsed < kPropertyBudgetSeconds;
    return {pass, "0 of 70000 violations expected, got " + std::to_string(violations) +
                      "; worst excess " + fmt(worst_excess) + ", worst attainment gap " +
                      fmt(worst_attain) + ", " + fmt(elapsed) + " s"};
}

// 6. The threshold-graph search equals an unrestricted brute force over all
//    graphs for every n <= 7, every m, k in {2,3}, both objectives.
//    Budget: 300 s.
Outcome oracle_equivalence() {
    const auto start = std::chrono::steady_clock::now();
    std::size_t cases = 0;
    std::size_t mismatches = 0;
    for (int n = 1; n <= 7; ++n) {
        const long long slots = static_cast<long long>(n) * (n - 1) / 2;
        for (long long m = 0; m <= slots; ++m) {
            for (int k = 2; k <= 3; ++k) {
                for (auto objective :
                     {search::Objective::StarCount, search::Objective::DegreeMoment}) {
                    const auto brute = search::brute_force_max(n, m, k, objective);
                    const auto fast = search::max_over_threshold(n, m, k, objective);
                    ++cases;
                    if (brute.max_value != fast.max_value) ++mismatches;
                }
            }
        }
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                               .count();
    const bool pass = mismatches == 0 && elapsed < kOracleBudgetSeconds;
    return {pass, std::to_string(cases) + " cases, " + std::to_string(mismatches) +
                      " mismatches, " + fmt(elapsed) + " s"};
}

// 7. Cherry identity: stars_2 = moment_2/2 - m exactly on every threshold
//    graph with at most 10 vertices.
Outcome cherry_identity() {
    std::size_t graphs_checked = 0;
    std::size_t breaks = 0;
    for (int n = 1; n <= 10; ++n) {
        const std::uint32_t sequences = 1u << (n - 1);
        for (std::uint32_t mask = 0; mask < sequences; ++mask) {
            std::string flags(static_cast<std::size_t>(n - 1), 'I');
            for (int bit = 0; bit < n - 1; ++bit)
                if (mask >> bit & 1u) flags[static_cast<std::size_t>(bit)] = 'D';
            const auto g = graphs::ThresholdGraph::from_string(flags);
            ++graphs_checked;
            if (graphs::count_stars(g, 2) * 2 != graphs::degree_moment(g, 2) - 2 * g.m())
                ++breaks;
        }
    }
    return {breaks == 0, std::to_string(graphs_checked) + " graphs, " + std::to_string(breaks) +
                             " identity breaks"};
}

// 8. Convexity-class evidence: the grid scan of x^k stays strictly positive
//    for k = 2..10; the auxiliary polynomial is nonnegative at rational
//    points >= 1 for m <= 40; every series coefficient q_i is nonnegative
//    for k <= 64, i <= 200.
Outcome class_evidence() {
    bool scans_positive = true;
    double min_seen = std::numeric_limits<double>::infinity();
    for (int k = 2; k <= 10; ++k) {
        const auto report = classc::membership_scan(FunctionOracle::power(k), 100);
        scans_positive = scans_positive && report.any && report.min_value > 0;
        min_seen = std::min(min_seen, report.min_value);
    }
    bool poly_nonneg = true;
    const std::vector<Rational> points = {Rational(1), Rational(3, 2), Rational(2), Rational(5),
                                          Rational(10)};
    for (int m = 0; m <= 40; ++m)
        for (const auto& x : points)
            poly_nonneg = poly_nonneg && classc::auxiliary_poly_value(m, x) >= 0;
    bool coeffs_nonneg = true;
    for (int k = 2; k <= 64; ++k)
        for (int i = 4; i <= 200; ++i)
            coeffs_nonneg = coeffs_nonneg && crossover::q_taylor_coeff(k, i) >= 0;
    const bool pass = scans_positive && poly_nonneg && coeffs_nonneg;
    return {pass, "scan minimum " + fmt(min_seen) + ", polynomial nonnegative " +
                      (poly_nonneg ? "yes" : "no") + ", coefficients nonnegative " +
                      (coeffs_nonneg ? "yes" : "no")};
}

// 9. Interior check of the one-parameter interpolation: holds for x^k over
//    k = 2..8 and densities 0.1..0.9, and fails for the ramp at 9/25 by at
//    least 1/40.
Outcome interpolation_boundary() {
    bool powers_hold = true;
    for (int k = 2; k <= 8; ++k)
        for (int i = 1; i <= 9; ++i)
            powers_hold = powers_hold &&
                          classc::j_boundary_check(FunctionOracle::power(k), i / 10.0, 1000).holds;
    const auto ramp = classc::j_boundary_check(ramp_oracle(), 9.0 / 25, 1000);
    const bool pass = powers_hold && !ramp.holds && ramp.worst_excess >= kRampExcessFloor;
    return {pass, std::string("powers hold ") + (powers_hold ? "yes" : "no") + ", ramp excess " +
                      fmt(ramp.worst_excess) + " at t " + fmt(ramp.worst_t)};
}

// 10. Finite constructions scale toward the k=3 star bound: the normalized
//     count 3! max(quasi-complete, quasi-star)/n^4 has a smaller gap at
//     n = 1500 than at n = 750 and lands within 0.02.
Outcome finite_convergence() {
    const auto scaled = [](int n, double gamma) {
        const long long slots = static_cast<long long>(n) * (n - 1) / 2;
        const long long m = std::llround(gamma * static_cast<double>(slots));
        const BigInt best = std::max(graphs::count_stars(graphs::quasi_complete(n, m), 3),
                                     graphs::count_stars(graphs::quasi_star(n, m), 3));
        const double n4 = std::pow(static_cast<double>(n), 4);
        return 6.0 * best.convert_to<double>() / n4;
    };
    bool pass = true;
    std::string gaps;
    for (double gamma : {0.2, 0.5, 0.9}) {
        const double bound = bounds::star_bound(3, gamma).bound;
        const double gap_half = std::fabs(scaled(750, gamma) - bound);
        const double gap_full = std::fabs(scaled(1500, gamma) - bound);
        pass = pass && gap_full < gap_half && gap_full < kGapCeiling;
        if (!gaps.empty()) gaps += ", ";
        gaps += fmt(gap_half) + " -> " + fmt(gap_full);
    }
    return {pass, "gaps at n=750 -> n=1500: " + gaps};
}

// 11. High-k asymptotics: |k^2 (1 - gamma_k) - alpha^2| strictly decreases
//     along k = 50, 100, 200, 400 and ends below 0.1.
Outcome asymptotic_deviation() {
    const auto rows = crossover::asymptote_table({50, 100, 200, 400});
    bool pass = true;
    std::string trail;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i > 0) {
            pass = pass &&
                   rows[i].deviation_from_alpha_sq < rows[i - 1].deviation_from_alpha_sq;
            trail += " -> ";
        }
        trail += fmt(rows[i].deviation_from_alpha_sq);
    }
    pass = pass && rows.back().deviation_from_alpha_sq < kDeviationCeiling;
    return {pass, "deviations " + trail};
}

}  // namespace

int main() {
    struct Criterion {
        const char* title;
        Outcome (*run)();
    };
    const std::vector<Criterion> criteria = {
        {"exact counts and search maxima at n=13, m=61", exact_counts_13_61},
        {"crossover densities and branch equality", crossover_roots},
        {"alpha constant and its defining equation", alpha_value},
        {"exact rational ramp bound, functional, goodness", exact_ramp_case},
        {"random graphons below the bound, extremal ones attain it", bound_property_suite},
        {"brute force agrees with threshold search up to n=7", oracle_equivalence},
        {"cherry identity on all threshold graphs up to n=10", cherry_identity},
        {"scan positivity, polynomial and coefficient nonnegativity", class_evidence},
        {"interior interpolation check: powers pass, ramp fails", interpolation_boundary},
        {"finite constructions converge to the k=3 bound", finite_convergence},
        {"high-k crossover deviations shrink toward alpha^2", asymptotic_deviation},
    };

    int failures = 0;
    const auto total_start = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome outcome;
        const auto start = std::chrono::steady_clock::now();
        try {
            outcome = criteria[i].run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        // Criteria 1, 5, and 6 carry their own time budgets.
        if (i == 0 && elapsed >= kCountBudgetSeconds) outcome.pass = false;
        std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << std::setw(2) << i + 1 << "  "
                  << criteria[i].title << " (" << outcome.detail << "; " << fmt(elapsed)
                  << " s)\n";
        if (!outcome.pass) ++failures;
    }
    const double total =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - total_start).count();
    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(failures))
              << " (" << fmt(total) << " s total)\n";
    return failures == 0 ? 0 : 1;
}
