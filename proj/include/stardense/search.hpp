#pragma once

// Exact maximization of star counts / degree moments at fixed (n, m).
//
// Degree-sorted ("shifted") optima live among threshold graphs, and a
// threshold graph is determined by which creation steps dominate, so the
// candidate space is exactly the subsets of {1..n-1} with sum m.  These are
// enumerated by descending largest part with sum-feasibility pruning.  A
// separate brute-force maximizer over *all* labeled graphs (n <= 8) serves
// as an independent oracle.

#include <cstdint>
#include <functional>
#include <vector>

#include "stardense/counting.hpp"
#include "stardense/dense_graph.hpp"
#include "stardense/numeric.hpp"
#include "stardense/threshold_graph.hpp"

namespace stardense::search {

enum class Objective { StarCount, DegreeMoment };

const char* objective_name(Objective objective);

// Visit every threshold graph with n vertices and m edges.  Deterministic
// order: the set of dominating steps, largest element first, larger values
// before smaller at every branch.
void for_each_threshold(int n, long long m,
                        const std::function<void(const graphs::ThresholdGraph&)>& visit);

std::vector<graphs::ThresholdGraph> enumerate_threshold(int n, long long m);

struct SearchResult {
    int n = 0;
    long long m = 0;
    int k = 0;
    Objective objective = Objective::StarCount;
    BigInt max_value;
    std::vector<graphs::ThresholdGraph> witnesses;  // all maximizers, enumeration order
    std::uint64_t explored = 0;                     // candidates evaluated
    double elapsed_seconds = 0.0;
};

// Exact maximum of the objective over all threshold graphs at (n, m).
// With threads > 1 the top-level branches (choices of largest dominating
// step) are farmed out and merged in branch order, so results do not depend
// on scheduling.
SearchResult max_over_threshold(int n, long long m, int k, Objective objective, int threads = 1);

struct BruteForceResult {
    int n = 0;
    long long m = 0;
    int k = 0;
    Objective objective = Objective::StarCount;
    BigInt max_value;
    std::vector<std::pair<int, int>> witness_edges;  // first maximizer in slot order
    std::uint64_t explored = 0;
    double elapsed_seconds = 0.0;
};

// Exact maximum over every labeled graph with n vertices and m edges, by
// enumerating all m-subsets of the C(n,2) vertex pairs.  max_n defaults to
// 7; it can be raised to 8 at a substantial cost in running time.
BruteForceResult brute_force_max(int n, long long m, int k, Objective objective, int max_n = 7);

}  // namespace stardense::search
