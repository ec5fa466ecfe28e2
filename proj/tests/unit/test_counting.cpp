#include <vector>

#include "doctest.h"
#include "stardense/counting.hpp"

using namespace stardense;
using namespace stardense::graphs;

namespace {

std::vector<ThresholdGraph> all_threshold(int n) {
    std::vector<ThresholdGraph> out;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<CreationStep> steps;
        for (int j = 0; j < n - 1; ++j)
            steps.push_back((mask >> j) & 1 ? CreationStep::Dominating : CreationStep::Isolated);
        out.emplace_back(std::move(steps));
    }
    return out;
}

}  // namespace

TEST_CASE("counts on tiny graphs by hand") {
    const auto p3 = ThresholdGraph::from_string("ID");
    CHECK(count_stars(p3, 2) == 1);  // the single cherry through the center
    CHECK(count_stars(p3, 1) == 4);
    CHECK(degree_moment(p3, 2) == 1 + 1 + 4);

    const auto star4 = quasi_star(5, 4);
    CHECK(count_stars(star4, 2) == 6);  // C(4,2) at the hub
}

TEST_CASE("reference counts at n = 13, m = 61, k = 3") {
    CHECK(count_stars(quasi_complete(13, 61), 3) == 1610);
    CHECK(count_stars(quasi_star(13, 61), 3) == 1620);
    CHECK(count_stars(extremal_witness_13_61(), 3) == 1622);

    CHECK(degree_moment(quasi_complete(13, 61), 3) == 13202);
    CHECK(degree_moment(quasi_star(13, 61), 3) == 13172);
    CHECK(degree_moment(extremal_witness_13_61(), 3) == 13238);
}

TEST_CASE("trivial star orders") {
    for (int n = 1; n <= 8; ++n) {
        for (const auto& g : all_threshold(n)) {
            CHECK(count_stars(g, 0) == n);
            CHECK(count_stars(g, 1) == 2 * g.m());
            CHECK(degree_moment(g, 0) == n);
            CHECK(degree_moment(g, 1) == 2 * g.m());
        }
    }
}

TEST_CASE("cherry count from the second moment") {
    // sum C(d,2) = (sum d^2)/2 - m, on every threshold graph up to n = 8
    for (int n = 1; n <= 8; ++n) {
        for (const auto& g : all_threshold(n)) {
            const BigInt lhs = count_stars(g, 2) * 2;
            const BigInt rhs = degree_moment(g, 2) - 2 * g.m();
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("ordered stars never exceed the moment") {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& g : all_threshold(n)) {
            for (int k = 0; k <= 5; ++k) {
                const auto report = make_count_report(g, k);
                CHECK(report.star_count * factorial(k) <= report.moment);
                CHECK(report.n == n);
                CHECK(report.m == g.m());
            }
        }
    }
}

TEST_CASE("edge-list representation agrees with the creation sequence") {
    for (int n = 1; n <= 8; ++n) {
        for (const auto& g : all_threshold(n)) {
            const DenseSmallGraph dense(n, adjacency(g));
            CHECK(dense.m() == g.m());
            for (int k = 0; k <= 4; ++k) {
                CHECK(count_stars(dense, k) == count_stars(g, k));
                CHECK(degree_moment(dense, k) == degree_moment(g, k));
            }
        }
    }
}

TEST_CASE("large instances stay exact") {
    // K_1000: n * C(999, 3) three-stars
    const auto complete = quasi_complete(1000, 999 * 1000 / 2);
    CHECK(count_stars(complete, 3) == BigInt(1000) * binomial(999, 3));
    CHECK(degree_moment(complete, 3) == BigInt(1000) * ipow(BigInt(999), 3));
    CHECK(count_stars(complete, 3) == BigInt("165668499000"));
}

TEST_CASE("domain errors") {
    CHECK_THROWS(count_stars(ThresholdGraph::from_string("ID"), -1));
    CHECK_THROWS(degree_moment(ThresholdGraph::from_string("ID"), -1));
}
