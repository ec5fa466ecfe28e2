#include <algorithm>
#include <vector>

#include "doctest.h"
#include "stardense/search.hpp"

using namespace stardense;
using namespace stardense::search;
using graphs::ThresholdGraph;

namespace {

// Independent oracle: number of partitions of m into distinct parts <= top,
// by straightforward dynamic programming over parts.
long long distinct_partition_count(int top, long long m) {
    std::vector<long long> ways(m + 1, 0);
    ways[0] = 1;
    for (int p = 1; p <= top; ++p)
        for (long long s = m; s >= p; --s) ways[s] += ways[s - p];
    return ways[m];
}

}  // namespace

TEST_CASE("enumeration on spot cases") {
    const auto one = enumerate_threshold(3, 2);
    REQUIRE(one.size() == 1);
    CHECK(one[0].to_string() == "ID");

    const auto two = enumerate_threshold(4, 3);
    REQUIRE(two.size() == 2);
    // Largest dominating step first: {3}, then {2,1}.
    CHECK(two[0].to_string() == "IID");
    CHECK(two[1].to_string() == "DDI");

    CHECK(enumerate_threshold(1, 0).size() == 1);
    CHECK(enumerate_threshold(5, 0).size() == 1);
    CHECK_THROWS(enumerate_threshold(4, 7));
}

TEST_CASE("enumeration count matches the partition oracle") {
    for (int n = 1; n <= 12; ++n) {
        const long long top = n * (n - 1) / 2;
        long long total = 0;
        for (long long m = 0; m <= top; ++m) {
            const auto graphs_at_m = enumerate_threshold(n, m);
            CHECK(static_cast<long long>(graphs_at_m.size()) ==
                  distinct_partition_count(n - 1, m));
            for (const auto& g : graphs_at_m) {
                CHECK(g.n() == n);
                CHECK(g.m() == m);
            }
            total += static_cast<long long>(graphs_at_m.size());
        }
        // Every subset of {1..n-1} shows up exactly once across all m.
        CHECK(total == (1LL << (n - 1)));
    }
}

TEST_CASE("enumeration yields no duplicates") {
    for (long long m = 0; m <= 21; ++m) {
        auto graphs_at_m = enumerate_threshold(7, m);
        std::vector<std::string> keys;
        for (const auto& g : graphs_at_m) keys.push_back(g.to_string());
        std::sort(keys.begin(), keys.end());
        CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
    }
}

TEST_CASE("maximum for the 4-star by hand") {
    const auto result = max_over_threshold(5, 4, 2, Objective::StarCount);
    CHECK(result.max_value == 6);
    REQUIRE(result.witnesses.size() == 1);
    CHECK(result.witnesses[0].to_string() == "IIID");
    CHECK(result.explored == static_cast<std::uint64_t>(enumerate_threshold(5, 4).size()));
}

TEST_CASE("brute force on forced graphs") {
    // Six edges on four vertices is K4: 4 * C(3,2) cherries.
    const auto k4 = brute_force_max(4, 6, 2, Objective::StarCount);
    CHECK(k4.max_value == 12);
    CHECK(k4.explored == 1);

    const auto star = brute_force_max(5, 4, 2, Objective::StarCount);
    CHECK(star.max_value == 6);
    CHECK(star.witness_edges.size() == 4);

    CHECK_THROWS(brute_force_max(9, 3, 2, Objective::StarCount, 8));
    CHECK_THROWS(brute_force_max(8, 3, 2, Objective::StarCount));  // default cap is 7
    CHECK(brute_force_max(8, 3, 2, Objective::StarCount, 8).max_value == 3);
}

TEST_CASE("threshold maximum equals the all-graphs maximum (spot sizes)") {
    for (int n = 4; n <= 6; ++n) {
        for (long long m = 0; m <= n * (n - 1) / 2; ++m) {
            for (const int k : {2, 3}) {
                for (const Objective obj : {Objective::StarCount, Objective::DegreeMoment}) {
                    const auto fast = max_over_threshold(n, m, k, obj);
                    const auto slow = brute_force_max(n, m, k, obj);
                    CHECK(fast.max_value == slow.max_value);
                }
            }
        }
    }
}

TEST_CASE("the 13-vertex search finds the witness") {
    const auto result = max_over_threshold(13, 61, 3, Objective::StarCount);
    CHECK(result.max_value == 1622);
    bool found = false;
    for (const auto& w : result.witnesses)
        if (w.to_string() == "DDDDDDDIIDDD") found = true;
    CHECK(found);

    // The canonical candidates are dominated.
    CHECK(result.max_value >= count_stars(graphs::quasi_complete(13, 61), 3));
    CHECK(result.max_value >= count_stars(graphs::quasi_star(13, 61), 3));

    const auto moment = max_over_threshold(13, 61, 3, Objective::DegreeMoment);
    CHECK(moment.max_value == 13238);
}

TEST_CASE("thread count does not change the answer") {
    for (const int threads : {1, 2, 4}) {
        const auto result = max_over_threshold(11, 34, 3, Objective::StarCount, threads);
        const auto base = max_over_threshold(11, 34, 3, Objective::StarCount, 1);
        CHECK(result.max_value == base.max_value);
        REQUIRE(result.witnesses.size() == base.witnesses.size());
        for (std::size_t i = 0; i < base.witnesses.size(); ++i)
            CHECK(result.witnesses[i] == base.witnesses[i]);
        CHECK(result.explored == base.explored);
    }
}

TEST_CASE("objective labels") {
    CHECK(std::string(objective_name(Objective::StarCount)) == "star-count");
    CHECK(std::string(objective_name(Objective::DegreeMoment)) == "degree-moment");
}
