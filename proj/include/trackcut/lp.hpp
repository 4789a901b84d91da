#pragma once

#include "trackcut/graph.hpp"
#include "trackcut/rational.hpp"

#include <optional>
#include <span>
#include <vector>

namespace trackcut {

/// Per-vertex rational values over a sorted variable set. Vertices outside
/// the set read as zero.
struct VertexValues {
    std::vector<int> vertices;
    std::vector<Rational> values;

    Rational at(int v) const;
    Rational sum_over(std::span<const int> vs) const;

    /// Values indexed by vertex id 0..n-1.
    std::vector<Rational> dense(int n) const;
};

/// minimize sum c_v x_v  s.t.  sum_{v in C} x_v >= 1 for every constraint C,
///                              0 <= x_v <= 1.
class CoveringLP {
public:
    CoveringLP() = default;

    /// `objective[i]` is the (nonnegative) cost of `variables[i]`.
    CoveringLP(std::vector<int> variables, std::vector<Rational> objective);

    /// Weights taken from the graph for each listed vertex.
    static CoveringLP over(const WeightedGraph& g, std::vector<int> variables);

    /// Rejects empty constraints and members that are not variables. The
    /// stored constraint is sorted and duplicate-free.
    void add_constraint(std::vector<int> vertices);

    const std::vector<int>& variables() const noexcept { return variables_; }
    const std::vector<Rational>& objective() const noexcept { return objective_; }
    const std::vector<std::vector<int>>& constraints() const noexcept { return constraints_; }
    std::optional<std::size_t> index_of(int vertex) const;

private:
    std::vector<int> variables_;
    std::vector<Rational> objective_;
    std::vector<std::vector<int>> constraints_;
};

struct FractionalSolution {
    VertexValues x;
    Rational objective_value;

    Rational value(int v) const { return x.at(v); }
    bool is_integral() const;
};

/// Optimal basic solution in exact arithmetic. The dual (a packing LP whose
/// origin is feasible) is solved by primal simplex with Bland's rule, and x is
/// read off the final reduced costs. Throws std::logic_error if the recovered
/// x fails the exact feasibility or optimality re-check.
FractionalSolution solve(const CoveringLP& lp);

/// Exact check of bounds and every constraint.
bool is_feasible(const CoveringLP& lp, const VertexValues& x);

Rational objective_of(const CoveringLP& lp, const VertexValues& x);

/// Every path of every group whose vertex sum is >= theta, deduplicated by
/// (normalized) vertex sequence, in sorted order.
std::vector<Path> threshold_filter(const FractionalSolution& sol, std::span<const PathGroup> groups,
                                   const Rational& theta);

/// x_v -> min(c * x_v, 1); requires c >= 1.
VertexValues scale_and_cap(const VertexValues& x, const Rational& c);

}  // namespace trackcut
