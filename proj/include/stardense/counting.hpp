#pragma once

// Star counts and degree moments.  A k-star is one center plus k leaves, so
// a graph holds sum_v C(d(v), k) of them; the companion statistic is the
// k-th degree power sum.  Both are exact integers at any size.

#include <vector>

#include "stardense/dense_graph.hpp"
#include "stardense/numeric.hpp"
#include "stardense/threshold_graph.hpp"

namespace stardense::graphs {

// sum_v C(d(v), k); k = 0 counts vertices, k = 1 counts edge endpoints (2m).
BigInt count_stars(const std::vector<int>& degrees, int k);
BigInt count_stars(const ThresholdGraph& g, int k);
BigInt count_stars(const DenseSmallGraph& g, int k);

// sum_v d(v)^k with 0^0 = 1.
BigInt degree_moment(const std::vector<int>& degrees, int k);
BigInt degree_moment(const ThresholdGraph& g, int k);
BigInt degree_moment(const DenseSmallGraph& g, int k);

struct CountReport {
    int n = 0;
    long long m = 0;
    int k = 0;
    BigInt star_count;
    BigInt moment;
};

CountReport make_count_report(const ThresholdGraph& g, int k);

}  // namespace stardense::graphs
