#include "stardense/search.hpp"

#include <atomic>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace stardense::search {

namespace {

using graphs::CreationStep;
using graphs::ThresholdGraph;

long long max_edges(int n) { return static_cast<long long>(n) * (n - 1) / 2; }

void check_domain(int n, long long m, const char* who) {
    if (n < 1) throw std::invalid_argument(std::string(who) + ": n must be >= 1");
    if (m < 0 || m > max_edges(n))
        throw std::invalid_argument(std::string(who) + ": m out of range for n");
}

ThresholdGraph graph_from_parts(int n, const std::vector<int>& parts) {
    std::vector<CreationStep> steps(n - 1, CreationStep::Isolated);
    for (int p : parts) steps[p - 1] = CreationStep::Dominating;
    return ThresholdGraph(std::move(steps));
}

// Extend a partial choice of dominating steps (descending, all < `limit`+1)
// until the remaining sum hits zero.  `visit` sees each completed graph.
void extend(int n, long long remaining, int limit, std::vector<int>& parts,
            const std::function<void(const ThresholdGraph&)>& visit) {
    if (remaining == 0) {
        visit(graph_from_parts(n, parts));
        return;
    }
    // Largest candidate next part; smaller parts can contribute at most
    // p*(p+1)/2 in total, so prune branches that cannot reach the target.
    const int hi = static_cast<int>(std::min<long long>(limit, remaining));
    for (int p = hi; p >= 1; --p) {
        if (static_cast<long long>(p) * (p + 1) / 2 < remaining) break;
        parts.push_back(p);
        extend(n, remaining - p, p - 1, parts, visit);
        parts.pop_back();
    }
}

BigInt evaluate(const ThresholdGraph& g, int k, Objective objective) {
    return objective == Objective::StarCount ? graphs::count_stars(g, k)
                                             : graphs::degree_moment(g, k);
}

struct BranchResult {
    BigInt best;
    std::vector<ThresholdGraph> witnesses;
    std::uint64_t explored = 0;
    bool any = false;
};

// First-level branches: the choice of largest dominating step (or no branch
// at all when m = 0).  Each entry is (part, remaining sum).
std::vector<std::pair<int, long long>> top_branches(int n, long long m) {
    std::vector<std::pair<int, long long>> branches;
    const int hi = static_cast<int>(std::min<long long>(n - 1, m));
    for (int p = hi; p >= 1; --p) {
        if (static_cast<long long>(p) * (p + 1) / 2 < m) break;
        branches.emplace_back(p, m - p);
    }
    return branches;
}

BranchResult run_branch(int n, int k, Objective objective, int part, long long remaining) {
    BranchResult result;
    std::vector<int> parts{part};
    extend(n, remaining, part - 1, parts,
           [&](const ThresholdGraph& g) {
               BigInt value = evaluate(g, k, objective);
               ++result.explored;
               if (!result.any || value > result.best) {
                   result.best = std::move(value);
                   result.witnesses.assign(1, g);
                   result.any = true;
               } else if (value == result.best) {
                   result.witnesses.push_back(g);
               }
           });
    return result;
}

}  // namespace

const char* objective_name(Objective objective) {
    return objective == Objective::StarCount ? "star-count" : "degree-moment";
}

void for_each_threshold(int n, long long m,
                        const std::function<void(const ThresholdGraph&)>& visit) {
    check_domain(n, m, "for_each_threshold");
    std::vector<int> parts;
    extend(n, m, n - 1, parts, visit);
}

std::vector<ThresholdGraph> enumerate_threshold(int n, long long m) {
    std::vector<ThresholdGraph> all;
    for_each_threshold(n, m, [&](const ThresholdGraph& g) { all.push_back(g); });
    return all;
}

SearchResult max_over_threshold(int n, long long m, int k, Objective objective, int threads) {
    check_domain(n, m, "max_over_threshold");
    if (k < 0) throw std::invalid_argument("max_over_threshold: k must be >= 0");
    const auto t0 = std::chrono::steady_clock::now();

    SearchResult result;
    result.n = n;
    result.m = m;
    result.k = k;
    result.objective = objective;

    std::vector<BranchResult> partials;
    if (m == 0) {
        BranchResult only;
        const ThresholdGraph empty_graph = graph_from_parts(n, {});
        only.best = evaluate(empty_graph, k, objective);
        only.witnesses.push_back(empty_graph);
        only.explored = 1;
        only.any = true;
        partials.push_back(std::move(only));
    } else {
        const auto branches = top_branches(n, m);
        partials.resize(branches.size());
        if (threads <= 1 || branches.size() <= 1) {
            for (std::size_t i = 0; i < branches.size(); ++i)
                partials[i] = run_branch(n, k, objective, branches[i].first, branches[i].second);
        } else {
            // Work-stealing over branch indices; results land in fixed slots,
            // so the fold below is independent of thread scheduling.
            std::atomic<std::size_t> next{0};
            auto worker = [&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= branches.size()) return;
                    partials[i] = run_branch(n, k, objective, branches[i].first, branches[i].second);
                }
            };
            std::vector<std::thread> pool;
            const std::size_t count =
                std::min<std::size_t>(static_cast<std::size_t>(threads), branches.size());
            for (std::size_t t = 0; t < count; ++t) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
        }
    }

    bool any = false;
    for (const BranchResult& part : partials) {
        result.explored += part.explored;
        if (!part.any) continue;
        if (!any || part.best > result.max_value) {
            result.max_value = part.best;
            result.witnesses = part.witnesses;
            any = true;
        } else if (part.best == result.max_value) {
            result.witnesses.insert(result.witnesses.end(), part.witnesses.begin(),
                                    part.witnesses.end());
        }
    }
    if (!any) throw std::logic_error("max_over_threshold: no candidate found");

    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

BruteForceResult brute_force_max(int n, long long m, int k, Objective objective, int max_n) {
    if (max_n > graphs::DenseSmallGraph::kMaxVertices)
        throw std::invalid_argument("brute_force_max: cap exceeds supported vertex count");
    if (n < 1 || n > max_n)
        throw std::invalid_argument("brute_force_max: n out of range (raise max_n up to 8)");
    check_domain(n, m, "brute_force_max");
    if (k < 0) throw std::invalid_argument("brute_force_max: k must be >= 0");
    const auto t0 = std::chrono::steady_clock::now();

    // All vertex pairs in lexicographic slot order.
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    const int s = static_cast<int>(slots.size());
    const int mm = static_cast<int>(m);

    // Per-degree objective contributions fit comfortably in 64 bits here.
    std::vector<std::uint64_t> table(n, 0);
    for (int d = 0; d < n; ++d) {
        const BigInt value = objective == Objective::StarCount
                                 ? binomial(d, k)
                                 : ipow(BigInt(d), static_cast<unsigned>(k));
        table[d] = value.convert_to<std::uint64_t>();
    }

    std::vector<int> comb(mm);
    std::iota(comb.begin(), comb.end(), 0);
    std::vector<int> deg(n);

    std::uint64_t best = 0;
    std::vector<int> best_comb;
    bool any = false;
    std::uint64_t explored = 0;

    for (;;) {
        deg.assign(n, 0);
        for (int idx : comb) {
            ++deg[slots[idx].first];
            ++deg[slots[idx].second];
        }
        std::uint64_t value = 0;
        for (int v = 0; v < n; ++v) value += table[deg[v]];
        ++explored;
        if (!any || value > best) {
            best = value;
            best_comb = comb;
            any = true;
        }
        // Advance to the next m-combination of {0..s-1}.
        int i = mm - 1;
        while (i >= 0 && comb[i] == s - mm + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < mm; ++j) comb[j] = comb[j - 1] + 1;
    }

    BruteForceResult result;
    result.n = n;
    result.m = m;
    result.k = k;
    result.objective = objective;
    result.max_value = BigInt(best);
    for (int idx : best_comb) result.witness_edges.push_back(slots[idx]);
    result.explored = explored;
    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

}  // namespace stardense::search
