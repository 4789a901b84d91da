#pragma once

#include "trackcut/graph.hpp"
#include "trackcut/lp.hpp"
#include "trackcut/pipeline.hpp"
#include "trackcut/preprocess.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace trackcut {

struct TrackingOptions {
    /// Exhaustive verification gives up (CapExceeded) beyond this many s-t paths.
    std::size_t max_paths = 2'000'000;
};

/// The trackers met along `path`, in path order.
using TrackerSequence = std::vector<int>;
TrackerSequence tracker_sequence(const Path& path, std::span<const char> is_tracker);

/// Two distinct s-t paths with equal tracker sequences. They share the access
/// paths s..a and b..t and differ on the two arcs of `cycle` between a and b;
/// (a, b) is a local s-t pair for the cycle and no tracker lies on the cycle
/// apart from a and b.
struct TrackingWitness {
    Path first;
    Path second;
    Path cycle;
    int a = -1;
    int b = -1;
};

/// nullopt iff `cand` is a tracking set.
std::optional<TrackingWitness> find_tracking_violation(const TrackingInstance& inst,
                                                       std::span<const int> cand,
                                                       TrackingOptions options = {});
bool is_tracking_set(const TrackingInstance& inst, std::span<const int> cand,
                     TrackingOptions options = {});
bool is_tracking_set(const TrackingInstance& inst, const VertexSelection& cand,
                     TrackingOptions options = {});

/// Cycles through exactly one fvs vertex a: a plus the forest path between
/// two of its forest neighbours. For each further cycle vertex b such that
/// (a, b) or (b, a) is a local s-t pair, the group is C \ {a, b}. Provenance
/// lists the pair in local-pair order.
ConstraintFamily enumerate_one_fvs_cycles(const TrackingInstance& inst, const VertexSelection& s);

/// Cycles through exactly two fvs vertices a, b formed by two segments with
/// disjoint interiors (forest paths between their neighbours, or the edge
/// a-b), kept when a, b is a local s-t pair in some order.
ConstraintFamily enumerate_two_fvs_cycles(const TrackingInstance& inst, const VertexSelection& s);

struct TrackingResult {
    VertexSelection solution;  // original vertex ids
    /// Everything below refers to the reduced instance.
    std::vector<int> kept;
    VertexSelection fvs;
    bool early_exit = false;
    ConstraintFamily family;
    std::optional<FractionalSolution> lp;
    std::vector<Path> cut_paths;
    std::optional<MulticutStage> multicut;
    std::vector<StageTiming> stages;
};

/// reduce, fvs, early exit if the fvs already tracks, otherwise candidate
/// cycles, LP, threshold 1/2, forest multicut, union. Throws Error when s and
/// t are disconnected and std::logic_error if the result fails verification.
TrackingResult solve_tracking_detailed(const TrackingInstance& inst, TrackingOptions options = {});
VertexSelection solve_tracking(const TrackingInstance& inst, TrackingOptions options = {});

/// Quantities bounded above by any tracking set's weight.
struct TrackingLowerBounds {
    Rational lp_opt;     // candidate-cycle LP on the reduced instance
    Weight fvs_opt = 0;  // exact minimum fvs of the reduced instance
};
TrackingLowerBounds tracking_lower_bounds(const TrackingInstance& inst);

/// Both lower bounds are at most `t_star_weight`.
bool lower_bound_check(const TrackingInstance& inst, Weight t_star_weight);

}  // namespace trackcut
