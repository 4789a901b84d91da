#pragma once

#include "trackcut/graph.hpp"
#include "trackcut/lp.hpp"
#include "trackcut/pipeline.hpp"

#include <optional>
#include <span>
#include <vector>

namespace trackcut {

struct FtfvsOptions {
    /// Family enumeration is n^O(r); larger r is rejected.
    int max_r = 4;
};

/// Find a vertex set meeting every cycle in at least r + 1 vertices.
class FtfvsInstance {
public:
    /// Throws std::invalid_argument for r < 1 or r > options.max_r.
    FtfvsInstance(WeightedGraph graph, int r, FtfvsOptions options = {});

    const WeightedGraph& graph() const noexcept { return graph_; }
    int r() const noexcept { return r_; }

    friend bool operator==(const FtfvsInstance& a, const FtfvsInstance& b) {
        return a.r_ == b.r_ && a.graph_ == b.graph_;
    }

private:
    WeightedGraph graph_;
    int r_;
};

/// girth > r (forests are always feasible).
bool check_feasible(const FtfvsInstance& inst);

/// Constraint groups for cycles meeting the fvs `s` in k <= r vertices.
/// Each group is the set of components of C \ (X u Y) with X = V(C) n S and
/// Y a choice of r - k further cycle vertices. Provenance records X in cycle
/// order, C starting at X's first vertex, and Y sorted. Throws
/// InfeasibleInstance if some such cycle has at most r vertices.
ConstraintFamily enumerate_family(const FtfvsInstance& inst, const VertexSelection& s);

/// A cycle meeting `cand` in at most r vertices, if any.
std::optional<Path> ftfvs_violation(const FtfvsInstance& inst, std::span<const int> cand);
bool verify_ftfvs(const FtfvsInstance& inst, const VertexSelection& cand);

struct FtfvsResult {
    VertexSelection solution;
    VertexSelection fvs;
    ConstraintFamily family;
    FractionalSolution lp;
    std::vector<Path> cut_paths;  // threshold survivors
    MulticutStage multicut;
    std::vector<StageTiming> stages;
};

/// Full pipeline. Throws InfeasibleInstance (witness = a shortest cycle) when
/// the girth is at most r, and std::logic_error if the assembled set fails
/// verification.
FtfvsResult solve_ftfvs_detailed(const FtfvsInstance& inst);
VertexSelection solve_ftfvs(const FtfvsInstance& inst);

/// Reduction from vertex cover. Vertices 0..n-1 are the originals; each edge
/// {u, v} (in edge order) then contributes a_1..a_{r-1}, b_1..b_l, c_1..c_l
/// with l = ceil(r/2) + 1; the cycle x_1..x_{r+1} comes last.
struct HardnessGadget {
    FtfvsInstance instance;
    int k_prime = 0;
    /// Vertices outside the original graph; every optimal solution holds all of them.
    std::vector<int> added;
};
HardnessGadget gen_hardness_gadget(const WeightedGraph& vc_graph, int k, int r);

}  // namespace trackcut
