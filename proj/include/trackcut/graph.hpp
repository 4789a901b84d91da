#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace trackcut {

using Weight = std::int64_t;

/// Undirected edge, stored with first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Simple undirected graph on vertices 0..n-1 with positive integer vertex
/// weights. Immutable after construction; every "modifying" operation returns
/// a new graph.
class WeightedGraph {
public:
    WeightedGraph() = default;

    /// Validates simplicity, index range and weights; throws GraphError.
    /// An empty weight vector means unit weights.
    WeightedGraph(int n, std::vector<Edge> edges, std::vector<Weight> weights = {});

    int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    /// Canonical (first < second), lexicographically sorted.
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    /// Sorted ascending.
    std::span<const int> neighbors(int v) const { return adjacency_.at(v); }
    int degree(int v) const { return static_cast<int>(adjacency_.at(v).size()); }

    Weight weight(int v) const { return weights_.at(v); }
    const std::vector<Weight>& weights() const noexcept { return weights_; }
    Weight total_weight(std::span<const int> vertices) const;

    bool has_edge(int u, int v) const;
    bool contains(int v) const noexcept { return v >= 0 && v < vertex_count(); }
    bool has_uniform_weights() const;

    /// Same vertex indexing; every edge incident to a listed vertex is dropped,
    /// leaving those vertices isolated.
    WeightedGraph without_vertices(std::span<const int> removed) const;

    WeightedGraph without_edge(Edge e) const;

    /// Compact induced subgraph on `kept` (sorted, distinct); vertex i of the
    /// result is kept[i] of this graph.
    WeightedGraph induced(std::span<const int> kept) const;

    WeightedGraph with_weights(std::vector<Weight> weights) const;

    friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

private:
    std::vector<std::vector<int>> adjacency_;
    std::vector<Edge> edges_;
    std::vector<Weight> weights_;
};

/// Ordered sequence of distinct vertices. Used for simple paths and, with the
/// closing edge implied, for cycles.
struct Path {
    std::vector<int> vertices;

    std::size_t size() const noexcept { return vertices.size(); }
    bool empty() const noexcept { return vertices.empty(); }
    int front() const { return vertices.front(); }
    int back() const { return vertices.back(); }

    friend auto operator<=>(const Path&, const Path&) = default;
    friend bool operator==(const Path&, const Path&) = default;
};

/// The orientation whose vertex sequence is lexicographically smaller.
Path normalized(Path path);

bool is_simple_path(const WeightedGraph& g, const Path& path);

/// Simple cycle of length >= 3 including the closing edge back() - front().
bool is_simple_cycle(const WeightedGraph& g, const Path& cycle);

/// Pairwise vertex-disjoint set of paths, sorted.
struct PathGroup {
    std::vector<Path> paths;

    friend auto operator<=>(const PathGroup&, const PathGroup&) = default;
    friend bool operator==(const PathGroup&, const PathGroup&) = default;
};

/// Normalizes every path and sorts, so equal multisets compare equal.
PathGroup canonical_group(std::vector<Path> paths);
bool is_vertex_disjoint(const PathGroup& group);
std::vector<int> group_vertices(const PathGroup& group);

/// Vertex subset with its recomputed total weight.
class VertexSelection {
public:
    VertexSelection() = default;
    VertexSelection(const WeightedGraph& g, std::vector<int> members);

    const std::vector<int>& members() const noexcept { return members_; }
    Weight total_weight() const noexcept { return total_weight_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(int v) const;

    friend bool operator==(const VertexSelection&, const VertexSelection&) = default;

private:
    std::vector<int> members_;
    Weight total_weight_ = 0;
};

/// Depth-first search from the lowest vertex index (neighbors ascending); the
/// first back edge closes the cycle. The cycle starts at the ancestor end of
/// the back edge.
std::optional<Path> find_cycle(const WeightedGraph& g);

bool is_forest(const WeightedGraph& g);

/// Throws GraphError if `f` contains a cycle. A single-vertex path when u = v.
std::optional<Path> unique_forest_path(const WeightedGraph& f, int u, int v);

bool is_acyclic_after_removal(const WeightedGraph& g, const VertexSelection& removed);
bool is_acyclic_after_removal(const WeightedGraph& g, std::span<const int> removed);

/// Component id per vertex, ids assigned in order of lowest member.
std::vector<int> component_labels(const WeightedGraph& g);

bool connected(const WeightedGraph& g, int u, int v);

/// Length of the shortest cycle; nullopt for forests.
std::optional<int> girth(const WeightedGraph& g);
std::optional<Path> shortest_cycle(const WeightedGraph& g);

}  // namespace trackcut
