#pragma once

// Threshold graphs encoded by creation sequences.  A graph on n vertices is
// described by n-1 flags: step j (1-based) adds a vertex that is either
// isolated (no edges yet) or dominating (adjacent to all j existing
// vertices).  Every edge is created exactly when the later of its endpoints
// arrives as a dominating vertex, so the edge count is the sum of the
// dominating step indices and all neighborhoods are nested by degree.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace stardense::graphs {

enum class CreationStep : std::uint8_t { Isolated = 0, Dominating = 1 };

class ThresholdGraph {
public:
    // Graph with a single vertex (empty creation sequence).
    ThresholdGraph() : n_(1), m_(0) {}

    // steps[j-1] describes the vertex added at step j; n = steps.size() + 1.
    explicit ThresholdGraph(std::vector<CreationStep> steps);

    // Compact text form, e.g. "ID" = isolated then dominating (a path P3).
    static ThresholdGraph from_string(const std::string& text);

    int n() const { return n_; }
    long long m() const { return m_; }
    const std::vector<CreationStep>& steps() const { return steps_; }
    const std::vector<int>& degrees() const { return degrees_; }

    std::string to_string() const;

    bool operator==(const ThresholdGraph& other) const { return steps_ == other.steps_; }

private:
    std::vector<CreationStep> steps_;
    int n_;
    long long m_;
    std::vector<int> degrees_;
};

// Flip every flag: the complement of a threshold graph is threshold, with
// degrees n-1-d in the same vertex order.
ThresholdGraph complement(const ThresholdGraph& g);

// The canonical dense extremal candidate: writing m = C(a,2) + b with
// 0 <= b < a, a clique on a vertices, one extra vertex adjacent to b clique
// vertices, and n-a-1 isolated vertices.
ThresholdGraph quasi_complete(int n, long long m);

// The sparse counterpart: complement of quasi_complete(n, C(n,2) - m).
ThresholdGraph quasi_star(int n, long long m);

// A 13-vertex, 61-edge threshold graph that beats both canonical candidates
// for 3-stars: a clique on 11 vertices plus two extra vertices each adjacent
// to the same three clique vertices.
ThresholdGraph extremal_witness_13_61();

// Explicit edge list (vertex 0 is the seed vertex; vertex j arrives at step
// j).  Guarded by a vertex cap because callers normally want this only for
// small graphs.
std::vector<std::pair<int, int>> adjacency(const ThresholdGraph& g, int max_n = 64);

}  // namespace stardense::graphs
