#pragma once

#include "trackcut/graph.hpp"

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace trackcut {

/// Seeded source with platform-independent draws (the standard distributions
/// are implementation-defined, the engine is not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [lo, hi] by rejection sampling.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    /// True with probability num / den.
    bool chance(std::int64_t num, std::int64_t den) { return uniform(1, den) <= num; }

    template <class T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::swap(items[i - 1], items[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(i) - 1))]);
        }
    }

private:
    std::mt19937_64 engine_;
};

/// Weights uniform in [1, max_weight]; max_weight = 1 gives unit weights.
std::vector<Weight> random_weights(Rng& rng, int n, Weight max_weight);

/// Connected graph: random labelled spanning tree plus distinct extra edges
/// up to `m` in total (capped at the complete graph).
WeightedGraph random_connected_graph(Rng& rng, int n, int m, Weight max_weight = 1);

/// Forest: each vertex i > 0 is joined to a random earlier vertex with
/// probability keep_num / keep_den, then labels are shuffled.
WeightedGraph random_forest(Rng& rng, int n, int keep_num, int keep_den, Weight max_weight = 1);

/// Up to `count` distinct tree paths with at least two vertices each.
std::vector<Path> random_forest_paths(Rng& rng, const WeightedGraph& forest, int count);

/// Connected graph with girth > r: a random tree plus `attempts` candidate
/// edges, each kept only if it closes no cycle of length <= r.
WeightedGraph random_girth_graph(Rng& rng, int n, int r, int attempts, Weight max_weight = 1);

/// Random k-tree on n >= k + 1 vertices (chordal by construction), labels shuffled.
WeightedGraph random_k_tree(Rng& rng, int n, int k, Weight max_weight = 1);

/// Distinct unordered vertex pairs.
std::vector<std::pair<int, int>> random_pairs(Rng& rng, int n, int count);

}  // namespace trackcut
