#pragma once

// Explicit edge-list graphs capped at 8 vertices.  This is the substrate of
// the brute-force maximizer: small enough that every labeled graph on a
// fixed edge count can be enumerated outright.

#include <utility>
#include <vector>

namespace stardense::graphs {

class DenseSmallGraph {
public:
    static constexpr int kMaxVertices = 8;

    DenseSmallGraph(int n, std::vector<std::pair<int, int>> edges);

    int n() const { return n_; }
    long long m() const { return static_cast<long long>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& degrees() const { return degrees_; }

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;  // normalized (i < j), sorted, distinct
    std::vector<int> degrees_;
};

}  // namespace stardense::graphs
