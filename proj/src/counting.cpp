#include "stardense/counting.hpp"

#include <stdexcept>

namespace stardense::graphs {

BigInt count_stars(const std::vector<int>& degrees, int k) {
    if (k < 0) throw std::invalid_argument("count_stars: k must be >= 0");
    BigInt total = 0;
    for (int d : degrees) total += binomial(d, k);
    return total;
}

BigInt count_stars(const ThresholdGraph& g, int k) { return count_stars(g.degrees(), k); }

BigInt count_stars(const DenseSmallGraph& g, int k) { return count_stars(g.degrees(), k); }

BigInt degree_moment(const std::vector<int>& degrees, int k) {
    if (k < 0) throw std::invalid_argument("degree_moment: k must be >= 0");
    BigInt total = 0;
    for (int d : degrees) total += ipow(BigInt(d), static_cast<unsigned>(k));
    return total;
}

BigInt degree_moment(const ThresholdGraph& g, int k) { return degree_moment(g.degrees(), k); }

BigInt degree_moment(const DenseSmallGraph& g, int k) { return degree_moment(g.degrees(), k); }

CountReport make_count_report(const ThresholdGraph& g, int k) {
    CountReport report;
    report.n = g.n();
    report.m = g.m();
    report.k = k;
    report.star_count = count_stars(g, k);
    report.moment = degree_moment(g, k);
    return report;
}

}  // namespace stardense::graphs
