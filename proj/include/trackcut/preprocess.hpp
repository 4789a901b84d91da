#pragma once

#include "trackcut/graph.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace trackcut {

/// Graph with a distinguished source and target (s != t).
class TrackingInstance {
public:
    TrackingInstance(WeightedGraph graph, int source, int target);

    const WeightedGraph& graph() const noexcept { return graph_; }
    int source() const noexcept { return source_; }
    int target() const noexcept { return target_; }

    friend bool operator==(const TrackingInstance&, const TrackingInstance&) = default;

private:
    WeightedGraph graph_;
    int source_;
    int target_;
};

struct DisjointPathsOptions {
    /// Exhaustive search refuses graphs above this size (CapExceeded).
    int max_vertices = 64;
};

/// An a1-b1 path and an a2-b2 path sharing no vertex, if any exist. a1 = b1
/// (or a2 = b2) denotes a single-vertex path. Requires {a1,b1} and {a2,b2} to
/// be disjoint.
std::optional<std::pair<Path, Path>> find_two_disjoint_paths(const WeightedGraph& g, int a1, int b1,
                                                             int a2, int b2,
                                                             DisjointPathsOptions options = {});

bool two_disjoint_paths(const WeightedGraph& g, int a1, int b1, int a2, int b2,
                        DisjointPathsOptions options = {});

/// Some simple s-t path visits v. Decided by a unit vertex-capacity max-flow
/// from v to {s, t}.
bool vertex_on_st_path(const TrackingInstance& inst, int v);

/// Some simple s-t path traverses e (in either direction).
bool edge_on_st_path(const TrackingInstance& inst, Edge e);

/// Result of exhaustively deleting vertices and edges that lie on no s-t
/// path. `kept[i]` is the original id of vertex i of `instance`.
struct Reduction {
    TrackingInstance instance;
    std::vector<int> kept;

    std::vector<int> to_original(std::span<const int> reduced_vertices) const;
};

/// Throws Error("no s-t path exists") when s and t are disconnected.
Reduction reduce(const TrackingInstance& inst);

/// a, b is a local s-t pair for the subgraph on `sub_vertices`: there are
/// vertex-disjoint paths s..a and b..t meeting sub_vertices only in a
/// respectively b. Single-vertex paths (a = s, b = t) are allowed.
bool is_local_st_pair(const TrackingInstance& inst, std::span<const int> sub_vertices, int a, int b);

/// The access paths witnessing is_local_st_pair.
std::optional<std::pair<Path, Path>> local_st_pair_paths(const TrackingInstance& inst,
                                                         std::span<const int> sub_vertices, int a,
                                                         int b);

}  // namespace trackcut
