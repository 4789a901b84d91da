#pragma once

#include "trackcut/graph.hpp"
#include "trackcut/lp.hpp"
#include "trackcut/rational.hpp"

#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace trackcut {

using TerminalPair = std::pair<int, int>;

/// Vertex multicut instance. The forest variant lists the paths to cut; the
/// chordal variant lists terminal pairs to separate.
struct McfInstance {
    WeightedGraph graph;
    std::vector<Path> cut_paths;
    std::vector<TerminalPair> terminal_pairs;

    /// `f` must be a forest and every path a simple path of it (hence the
    /// unique path between its ends). Paths are stored normalized.
    static McfInstance forest(WeightedGraph f, std::vector<Path> paths);

    /// Pairs whose ends lie in different trees are discarded; the rest become
    /// their unique connecting paths.
    static McfInstance forest_from_pairs(WeightedGraph f, std::span<const TerminalPair> pairs);

    /// Requires a chordal graph and pairs with distinct endpoints.
    static McfInstance chordal(WeightedGraph g, std::vector<TerminalPair> pairs);
};

/// Every cut path is hit and every terminal pair is disconnected.
bool is_multicut(const McfInstance& inst, std::span<const int> members);

/// LP relaxation over all vertices: one ">= 1" row per cut path.
CoveringLP forest_mcf_lp(const McfInstance& inst);

/// Prefix sums of xhat from the lowest-index vertex of each tree:
/// d_root = xhat_root, d_child = d_parent + xhat_child.
std::vector<Rational> forest_distances(const WeightedGraph& f, std::span<const Rational> xhat);

/// Maximal subinterval [lo, hi) of [0, 1) on which bin membership is constant.
struct BinGroup {
    Rational lo;
    Rational hi;
    std::vector<int> members;
    Weight weight = 0;
};

/// Vertex u belongs to bin B_r iff r lies in [<d_u - xhat_u>, <d_u>), read
/// cyclically when <d_u> - xhat_u < 0; xhat_u >= 1 means every bin. Groups
/// are returned in increasing order of lo and partition [0, 1).
std::vector<BinGroup> enumerate_bin_groups(const WeightedGraph& g, std::span<const Rational> xhat,
                                           std::span<const Rational> distances);

/// Bin rounding with c = 2 for the forest variant. `frac` must be feasible
/// (optimal for the ratio guarantee) for forest_mcf_lp(inst). Returns the
/// members of the minimum-weight group, ties to the smallest lo.
VertexSelection round_weighted_forest(const McfInstance& inst, const FractionalSolution& frac);

/// Called after every exchange step with the current vector and the vertex
/// that was zeroed.
using ExchangeObserver = std::function<void(const std::vector<Rational>& x, int zeroed)>;

/// Turns an optimal fractional LP solution of an equal-weight forest instance
/// into an integral one of the same value: repeatedly take the deepest
/// fractional vertex u (lowest index on ties), move its value onto its parent
/// p as min(x_p + x_u, 1) and zero u.
std::vector<Rational> integralize_forest_solution(const McfInstance& inst, std::vector<Rational> x,
                                                  const ExchangeObserver& observer = {});

/// Exact optimum for equal weights. Throws std::invalid_argument when the
/// weights differ (use round_weighted_forest instead).
VertexSelection solve_unweighted_forest(const McfInstance& inst);

/// Multicut LP for the chordal variant solved by lazy constraint generation:
/// the separation step finds a shortest s_i-t_i path under vertex lengths x
/// and adds it while its length is below 1.
struct ChordalLpResult {
    CoveringLP lp;
    FractionalSolution solution;
    int rounds = 0;
};
ChordalLpResult solve_chordal_lp(const McfInstance& inst);

/// Bin rounding with c = 4 (uncapped): vertices with 4 x_v >= 1 are taken
/// outright, bins on the rest use shortest-path distances from the lowest
/// vertex of each component.
VertexSelection round_chordal(const McfInstance& inst, const FractionalSolution& frac);

/// Vertex-weighted shortest distances from `root` (both endpoints counted);
/// nullopt for unreachable vertices.
std::vector<std::optional<Rational>> vertex_weighted_distances(const WeightedGraph& g,
                                                               std::span<const Rational> length,
                                                               int root);

/// Maximum cardinality search order, reversed into an elimination order;
/// nullopt if it is not a perfect elimination order (graph not chordal).
std::optional<std::vector<int>> perfect_elimination_order(const WeightedGraph& g);
bool is_chordal(const WeightedGraph& g);

struct CliqueTree {
    std::vector<std::vector<int>> cliques;  // each sorted
    std::vector<std::pair<int, int>> edges;  // between clique indices
};

/// Maximal cliques joined by a maximum-weight spanning tree of the clique
/// intersection graph. Throws GraphError on non-chordal input.
CliqueTree clique_tree(const WeightedGraph& g);

/// For every vertex, the cliques containing it induce a connected subtree.
bool has_subtree_property(const CliqueTree& tree, int vertex_count);

/// Star with one leaf per vertex of g (same index), center n of weight
/// sum(w), and one cut path (u, center, v) per edge.
McfInstance vc_to_mcf_star(const WeightedGraph& g);

}  // namespace trackcut
