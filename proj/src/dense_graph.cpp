#include "stardense/dense_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace stardense::graphs {

DenseSmallGraph::DenseSmallGraph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("DenseSmallGraph: vertex count out of range");
    for (auto& [u, v] : edges_) {
        if (u == v || u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("DenseSmallGraph: bad edge endpoint");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("DenseSmallGraph: duplicate edge");
    degrees_.assign(n_, 0);
    for (const auto& [u, v] : edges_) {
        ++degrees_[u];
        ++degrees_[v];
    }
}

}  // namespace stardense::graphs
