#pragma once

#include "trackcut/ftfvs.hpp"
#include "trackcut/graph.hpp"
#include "trackcut/multicut.hpp"
#include "trackcut/preprocess.hpp"

#include <cstddef>
#include <optional>
#include <vector>

// Brute-force exact solvers. Subsets are tried by increasing total weight,
// ties broken by the lexicographically smallest sorted member list; the first
// feasible one is returned. Exceeding a cap throws CapExceeded.

namespace trackcut {

inline constexpr int kDefaultOracleCap = 16;
inline constexpr int kDefaultTrackingOracleCap = 10;
inline constexpr std::size_t kDefaultPathCap = 2'000'000;

VertexSelection exact_fvs(const WeightedGraph& g, int cap = kDefaultOracleCap);

/// nullopt when the girth is at most r. Vertices on a cycle of length
/// exactly r + 1 belong to every solution and are fixed up front; `cap`
/// bounds the number of remaining free vertices.
std::optional<VertexSelection> exact_ftfvs(const FtfvsInstance& inst, int cap = kDefaultOracleCap);

VertexSelection exact_tracking(const TrackingInstance& inst, int cap = kDefaultTrackingOracleCap,
                               std::size_t max_paths = kDefaultPathCap);

VertexSelection exact_multicut(const McfInstance& inst, int cap = kDefaultOracleCap);

struct VertexCoverDecision {
    bool exists = false;
    /// A minimum-cardinality cover (also returned when it is larger than k).
    VertexSelection witness;
};
VertexCoverDecision exact_vertex_cover(const WeightedGraph& g, int k, int cap = kDefaultOracleCap);

/// Minimum total weight vertex cover.
VertexSelection min_weight_vertex_cover(const WeightedGraph& g, int cap = kDefaultOracleCap);

/// All simple s-t paths in lexicographic order of their vertex sequences.
std::vector<Path> enumerate_st_paths(const TrackingInstance& inst,
                                     std::size_t max_paths = kDefaultPathCap);

/// Every simple cycle once, starting at its smallest vertex, oriented so the
/// second vertex is smaller than the last.
std::vector<Path> enumerate_cycles(const WeightedGraph& g, std::size_t max_cycles = kDefaultPathCap);

/// Vertices lying on some cycle of length exactly `length`.
std::vector<int> vertices_on_cycles_of_length(const WeightedGraph& g, int length);

}  // namespace trackcut
