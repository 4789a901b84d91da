#pragma once

#include "trackcut/graph.hpp"
#include "trackcut/lp.hpp"

#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace trackcut {

/// Where a constraint group came from: the distinguished vertices of the
/// cycle (the fvs subset X in cycle order, or the local pair (a, b)), the
/// cycle itself, and the extra excluded non-fvs vertices Y.
struct Provenance {
    std::vector<int> distinguished;
    Path cycle;
    std::vector<int> excluded;
};

/// Covering constraints "at least one vertex among the group's paths".
/// Groups are unique and sorted; provenance[i] belongs to groups[i].
struct ConstraintFamily {
    std::vector<PathGroup> groups;
    std::vector<Provenance> provenance;

    std::size_t size() const noexcept { return groups.size(); }
    bool empty() const noexcept { return groups.empty(); }
};

/// Collects (group, provenance) pairs, keeping the first provenance of each
/// distinct group, and emits them in canonical order.
class FamilyBuilder {
public:
    void add(PathGroup group, Provenance provenance);
    ConstraintFamily finish() &&;

private:
    std::vector<std::pair<PathGroup, Provenance>> entries_;
};

/// Union of two families; on equal groups the provenance from `first` wins.
ConstraintFamily merge_families(ConstraintFamily first, ConstraintFamily second);

/// Maximal runs of the cycle avoiding `removed`, as paths in cycle order.
/// At least one cycle vertex must be removed.
std::vector<Path> cycle_components(const Path& cycle, std::span<const char> removed);

/// Rotation starting at the smallest vertex, direction with the smaller
/// second vertex; equal for equal vertex-and-edge sets.
Path canonical_cycle(const Path& cycle);

/// Memoized tree paths of a forest, one BFS per requested source.
class ForestPathTable {
public:
    /// Throws GraphError if `f` has a cycle.
    explicit ForestPathTable(const WeightedGraph& f);

    /// x..y inclusive; nullopt when they lie in different trees.
    std::optional<std::vector<int>> path(int x, int y);

private:
    const std::vector<int>& parents(int root);

    const WeightedGraph& forest_;
    std::vector<std::vector<int>> parent_;
};

/// Variables V \ fvs weighted by w; one constraint per group over the union
/// of its paths.
CoveringLP build_lp_s_tuples(const WeightedGraph& g, const VertexSelection& fvs,
                             const ConstraintFamily& family);

/// Multicut stage on the forest G \ fvs: exact integral solve when all
/// weights are equal, bin rounding of the LP optimum otherwise.
struct MulticutStage {
    VertexSelection cut;
    Rational lp_opt;
    bool unweighted = false;
};
MulticutStage forest_multicut_stage(const WeightedGraph& g, const VertexSelection& fvs,
                                    std::vector<Path> paths);

struct StageTiming {
    std::string name;
    long long millis = 0;
};

class StageClock {
public:
    explicit StageClock(std::vector<StageTiming>& sink) : sink_(sink) {}

    void start(std::string name) {
        name_ = std::move(name);
        begin_ = std::chrono::steady_clock::now();
    }
    void stop() {
        const auto elapsed = std::chrono::steady_clock::now() - begin_;
        sink_.push_back(
            {name_, std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()});
    }

private:
    std::vector<StageTiming>& sink_;
    std::string name_;
    std::chrono::steady_clock::time_point begin_;
};

}  // namespace trackcut
