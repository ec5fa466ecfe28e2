#include "stardense/threshold_graph.hpp"

#include <stdexcept>

namespace stardense::graphs {

ThresholdGraph::ThresholdGraph(std::vector<CreationStep> steps)
    : steps_(std::move(steps)), n_(static_cast<int>(steps_.size()) + 1), m_(0) {
    // Degrees in one backward pass: a vertex placed at step j ends with
    // (j if dominating else 0) + #dominating steps after j.
    degrees_.assign(n_, 0);
    int doms_after = 0;
    for (int j = n_ - 1; j >= 1; --j) {
        const bool dom = steps_[j - 1] == CreationStep::Dominating;
        degrees_[j] = (dom ? j : 0) + doms_after;
        if (dom) {
            m_ += j;
            ++doms_after;
        }
    }
    degrees_[0] = doms_after;
}

ThresholdGraph ThresholdGraph::from_string(const std::string& text) {
    std::vector<CreationStep> steps;
    steps.reserve(text.size());
    for (char c : text) {
        if (c == 'I' || c == 'i')
            steps.push_back(CreationStep::Isolated);
        else if (c == 'D' || c == 'd')
            steps.push_back(CreationStep::Dominating);
        else
            throw std::invalid_argument("ThresholdGraph::from_string: expected 'I'/'D', got '" +
                                        std::string(1, c) + "'");
    }
    return ThresholdGraph(std::move(steps));
}

std::string ThresholdGraph::to_string() const {
    std::string text;
    text.reserve(steps_.size());
    for (CreationStep s : steps_)
        text.push_back(s == CreationStep::Dominating ? 'D' : 'I');
    return text;
}

ThresholdGraph complement(const ThresholdGraph& g) {
    std::vector<CreationStep> steps = g.steps();
    for (CreationStep& s : steps)
        s = (s == CreationStep::Dominating) ? CreationStep::Isolated : CreationStep::Dominating;
    return ThresholdGraph(std::move(steps));
}

ThresholdGraph quasi_complete(int n, long long m) {
    if (n < 1) throw std::invalid_argument("quasi_complete: n must be >= 1");
    const long long max_m = static_cast<long long>(n) * (n - 1) / 2;
    if (m < 0 || m > max_m)
        throw std::invalid_argument("quasi_complete: m out of range for n");

    // Largest a with C(a,2) <= m; then b = m - C(a,2) satisfies 0 <= b < a.
    long long a = 1;
    while (a + 1 <= n && (a + 1) * a / 2 <= m) ++a;
    const long long b = m - a * (a - 1) / 2;

    std::vector<CreationStep> steps;
    steps.reserve(n - 1);
    for (long long j = 0; j < a - b - 1; ++j) steps.push_back(CreationStep::Dominating);
    if (static_cast<int>(steps.size()) < n - 1) steps.push_back(CreationStep::Isolated);
    for (long long j = 0; j < b; ++j) steps.push_back(CreationStep::Dominating);
    while (static_cast<int>(steps.size()) < n - 1) steps.push_back(CreationStep::Isolated);
    return ThresholdGraph(std::move(steps));
}

ThresholdGraph quasi_star(int n, long long m) {
    const long long max_m = static_cast<long long>(n) * (n - 1) / 2;
    if (m < 0 || m > max_m)
        throw std::invalid_argument("quasi_star: m out of range for n");
    return complement(quasi_complete(n, max_m - m));
}

ThresholdGraph extremal_witness_13_61() {
    // Build order: clique on 8 (7 dominating steps), the two degree-3
    // vertices while still isolated, then the three high-degree vertices
    // dominate everything.
    return ThresholdGraph::from_string("DDDDDDDIIDDD");
}

std::vector<std::pair<int, int>> adjacency(const ThresholdGraph& g, int max_n) {
    if (g.n() > max_n)
        throw std::invalid_argument("adjacency: vertex count exceeds cap");
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < g.n(); ++j) {
        if (g.steps()[j - 1] != CreationStep::Dominating) continue;
        for (int i = 0; i < j; ++i) edges.emplace_back(i, j);
    }
    return edges;
}

}  // namespace stardense::graphs
