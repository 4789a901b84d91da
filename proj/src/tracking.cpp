#include "trackcut/tracking.hpp"

#include "trackcut/errors.hpp"
#include "trackcut/fvs.hpp"
#include "trackcut/oracles.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace trackcut {

TrackerSequence tracker_sequence(const Path& path, std::span<const char> is_tracker) {
    TrackerSequence seq;
    for (int v : path.vertices) {
        if (is_tracker[v]) seq.push_back(v);
    }
    return seq;
}

namespace {

std::vector<char> tracker_mask(const WeightedGraph& g, std::span<const int> cand) {
    std::vector<char> mask(g.vertex_count(), 0);
    for (int v : cand) mask.at(v) = 1;
    return mask;
}

std::optional<TrackingWitness> witness_from_cycle(const TrackingInstance& inst, const Path& cycle,
                                                  int a, int b, const std::vector<char>& tracker) {
    for (int v : cycle.vertices) {
        if (v != a && v != b && tracker[v]) return std::nullopt;
    }
    const auto access = local_st_pair_paths(inst, cycle.vertices, a, b);
    if (!access) return std::nullopt;
    const auto& c = cycle.vertices;
    const auto len = c.size();
    const auto ia = static_cast<std::size_t>(std::find(c.begin(), c.end(), a) - c.begin());
    const auto ib = static_cast<std::size_t>(std::find(c.begin(), c.end(), b) - c.begin());

    auto assemble = [&](int direction) {
        Path p = access->first;
        std::size_t i = ia;
        while (i != ib) {
            i = (i + len + direction) % len;
            p.vertices.push_back(c[i]);
        }
        p.vertices.insert(p.vertices.end(), access->second.vertices.begin() + 1,
                          access->second.vertices.end());
        return p;
    };
    Path first = assemble(+1);
    Path second = assemble(-1);
    if (second < first) std::swap(first, second);
    return TrackingWitness{std::move(first), std::move(second), cycle, a, b};
}

// Both paths leave s together; a is where they split, b the first later
// vertex of `p1` that `p2` also visits.
std::optional<TrackingWitness> witness_from_prefix(const TrackingInstance& inst, const Path& p1,
                                                   const Path& p2, const std::vector<char>& tracker) {
    const auto& x = p1.vertices;
    const auto& y = p2.vertices;
    std::size_t split = 0;
    while (split + 1 < x.size() && split + 1 < y.size() && x[split + 1] == y[split + 1]) ++split;
    std::map<int, std::size_t> pos_in_y;
    for (std::size_t i = 0; i < y.size(); ++i) pos_in_y[y[i]] = i;
    std::size_t jx = split + 1;
    while (jx < x.size() && !pos_in_y.contains(x[jx])) ++jx;
    if (jx >= x.size()) return std::nullopt;
    const std::size_t jy = pos_in_y[x[jx]];
    if (jy <= split) return std::nullopt;
    Path cycle;
    for (std::size_t i = split; i <= jx; ++i) cycle.vertices.push_back(x[i]);
    for (std::size_t i = jy - 1; i > split; --i) cycle.vertices.push_back(y[i]);
    if (!is_simple_cycle(inst.graph(), cycle)) return std::nullopt;
    return witness_from_cycle(inst, cycle, x[split], x[jx], tracker);
}

Path reversed(Path p) {
    std::reverse(p.vertices.begin(), p.vertices.end());
    return p;
}

std::optional<TrackingWitness> witness_from_pair(const TrackingInstance& inst, const Path& p1,
                                                 const Path& p2, const std::vector<char>& tracker) {
    for (const auto& [u, v] : {std::pair{&p1, &p2}, std::pair{&p2, &p1}}) {
        if (auto w = witness_from_prefix(inst, *u, *v, tracker)) return w;
    }
    // Same construction from the t side, read back in s-t orientation.
    const TrackingInstance flipped(inst.graph(), inst.target(), inst.source());
    const Path r1 = reversed(p1);
    const Path r2 = reversed(p2);
    for (const auto& [u, v] : {std::pair{&r1, &r2}, std::pair{&r2, &r1}}) {
        if (auto w = witness_from_prefix(flipped, *u, *v, tracker)) {
            if (auto back = witness_from_cycle(inst, w->cycle, w->b, w->a, tracker)) return back;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<TrackingWitness> find_tracking_violation(const TrackingInstance& inst,
                                                       std::span<const int> cand,
                                                       TrackingOptions options) {
    const auto tracker = tracker_mask(inst.graph(), cand);
    const auto paths = enumerate_st_paths(inst, options.max_paths);
    std::map<TrackerSequence, std::size_t> first_with;
    std::vector<std::pair<std::size_t, std::size_t>> collisions;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        auto [it, fresh] = first_with.try_emplace(tracker_sequence(paths[i], tracker), i);
        if (!fresh) collisions.emplace_back(it->second, i);
    }
    if (collisions.empty()) return std::nullopt;

    constexpr std::size_t kPairAttempts = 64;
    for (std::size_t k = 0; k < collisions.size() && k < kPairAttempts; ++k) {
        const auto& [i, j] = collisions[k];
        if (auto w = witness_from_pair(inst, paths[i], paths[j], tracker)) return w;
    }
    for (const auto& cycle : enumerate_cycles(inst.graph(), options.max_paths)) {
        for (int a : cycle.vertices) {
            for (int b : cycle.vertices) {
                if (a == b) continue;
                if (auto w = witness_from_cycle(inst, cycle, a, b, tracker)) return w;
            }
        }
    }
    throw std::logic_error("colliding s-t paths found but no local-pair witness cycle exists");
}

bool is_tracking_set(const TrackingInstance& inst, std::span<const int> cand, TrackingOptions options) {
    const auto tracker = tracker_mask(inst.graph(), cand);
    std::set<TrackerSequence> seen;
    for (const auto& p : enumerate_st_paths(inst, options.max_paths)) {
        if (!seen.insert(tracker_sequence(p, tracker)).second) return false;
    }
    return true;
}

bool is_tracking_set(const TrackingInstance& inst, const VertexSelection& cand,
                     TrackingOptions options) {
    return is_tracking_set(inst, cand.members(), options);
}

namespace {

// Adds C \ {a, b} when a, b is a local pair in either order; returns whether
// it did.
bool add_if_local(const TrackingInstance& inst, FamilyBuilder& builder,
                  std::set<std::tuple<Path, int, int>>& seen, const Path& cycle, int a, int b) {
    if (!seen.emplace(canonical_cycle(cycle), std::min(a, b), std::max(a, b)).second) return false;
    int first = a;
    int second = b;
    if (!is_local_st_pair(inst, cycle.vertices, a, b)) {
        if (!is_local_st_pair(inst, cycle.vertices, b, a)) return false;
        std::swap(first, second);
    }
    std::vector<char> removed(inst.graph().vertex_count(), 0);
    removed[a] = removed[b] = 1;
    builder.add(canonical_group(cycle_components(cycle, removed)),
                Provenance{{first, second}, cycle, {}});
    return true;
}

struct ForestView {
    std::vector<char> in_s;
    WeightedGraph forest;
};

ForestView forest_view(const WeightedGraph& g, const VertexSelection& s) {
    if (!is_acyclic_after_removal(g, s)) {
        throw std::invalid_argument("candidate-cycle enumeration needs a feedback vertex set");
    }
    std::vector<char> in_s(g.vertex_count(), 0);
    for (int v : s.members()) in_s.at(v) = 1;
    return ForestView{std::move(in_s), g.without_vertices(s.members())};
}

std::vector<int> forest_neighbors(const WeightedGraph& g, const std::vector<char>& in_s, int v) {
    std::vector<int> out;
    for (int u : g.neighbors(v)) {
        if (!in_s[u]) out.push_back(u);
    }
    return out;
}

}  // namespace

ConstraintFamily enumerate_one_fvs_cycles(const TrackingInstance& inst, const VertexSelection& s) {
    const auto& g = inst.graph();
    auto view = forest_view(g, s);
    ForestPathTable paths(view.forest);
    FamilyBuilder builder;
    std::set<std::tuple<Path, int, int>> seen;
    for (int a : s.members()) {
        const auto nbrs = forest_neighbors(g, view.in_s, a);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                const auto seg = paths.path(nbrs[i], nbrs[j]);
                if (!seg) continue;
                Path cycle{{a}};
                cycle.vertices.insert(cycle.vertices.end(), seg->begin(), seg->end());
                for (int b : *seg) add_if_local(inst, builder, seen, cycle, a, b);
            }
        }
    }
    return std::move(builder).finish();
}

ConstraintFamily enumerate_two_fvs_cycles(const TrackingInstance& inst, const VertexSelection& s) {
    const auto& g = inst.graph();
    auto view = forest_view(g, s);
    ForestPathTable paths(view.forest);
    FamilyBuilder builder;
    std::set<std::tuple<Path, int, int>> seen;
    std::vector<char> mark(g.vertex_count(), 0);
    const auto& fvs = s.members();
    for (std::size_t i = 0; i < fvs.size(); ++i) {
        for (std::size_t j = i + 1; j < fvs.size(); ++j) {
            const int a = fvs[i];
            const int b = fvs[j];
            // Interiors of a..b segments; the empty one stands for the edge a-b.
            std::vector<std::vector<int>> segments;
            if (g.has_edge(a, b)) segments.emplace_back();
            const auto nb = forest_neighbors(g, view.in_s, b);
            for (int x : forest_neighbors(g, view.in_s, a)) {
                for (int y : nb) {
                    if (auto seg = paths.path(x, y)) segments.push_back(std::move(*seg));
                }
            }
            for (std::size_t p = 0; p < segments.size(); ++p) {
                for (int v : segments[p]) mark[v] = 1;
                for (std::size_t q = p + 1; q < segments.size(); ++q) {
                    const bool clash = std::any_of(segments[q].begin(), segments[q].end(),
                                                   [&](int v) { return mark[v] != 0; });
                    if (clash) continue;
                    Path cycle{{a}};
                    cycle.vertices.insert(cycle.vertices.end(), segments[p].begin(), segments[p].end());
                    cycle.vertices.push_back(b);
                    cycle.vertices.insert(cycle.vertices.end(), segments[q].rbegin(), segments[q].rend());
                    add_if_local(inst, builder, seen, cycle, a, b);
                }
                for (int v : segments[p]) mark[v] = 0;
            }
        }
    }
    return std::move(builder).finish();
}

TrackingResult solve_tracking_detailed(const TrackingInstance& inst, TrackingOptions options) {
    TrackingResult result;
    StageClock clock(result.stages);

    clock.start("reduce");
    const Reduction red = reduce(inst);
    result.kept = red.kept;
    const auto& reduced = red.instance;
    const auto& g = reduced.graph();
    clock.stop();

    clock.start("fvs");
    result.fvs = approx_fvs(g);
    clock.stop();

    auto finish = [&](const VertexSelection& local) {
        result.solution = VertexSelection(inst.graph(), red.to_original(local.members()));
    };

    clock.start("early-exit");
    result.early_exit = is_tracking_set(reduced, result.fvs, options);
    clock.stop();
    if (result.early_exit) {
        finish(result.fvs);
        return result;
    }

    clock.start("family");
    result.family = merge_families(enumerate_one_fvs_cycles(reduced, result.fvs),
                                   enumerate_two_fvs_cycles(reduced, result.fvs));
    clock.stop();

    clock.start("lp");
    result.lp = solve(build_lp_s_tuples(g, result.fvs, result.family));
    clock.stop();

    clock.start("threshold");
    result.cut_paths = threshold_filter(*result.lp, result.family.groups, Rational(1, 2));
    clock.stop();

    clock.start("multicut");
    result.multicut = forest_multicut_stage(g, result.fvs, result.cut_paths);
    clock.stop();

    clock.start("verify");
    std::vector<int> members = result.fvs.members();
    const auto& cut = result.multicut->cut.members();
    members.insert(members.end(), cut.begin(), cut.end());
    const VertexSelection local(g, std::move(members));
    if (!is_tracking_set(reduced, local, options)) {
        throw std::logic_error("assembled set is not a tracking set");
    }
    finish(local);
    clock.stop();
    return result;
}

VertexSelection solve_tracking(const TrackingInstance& inst, TrackingOptions options) {
    return solve_tracking_detailed(inst, options).solution;
}

TrackingLowerBounds tracking_lower_bounds(const TrackingInstance& inst) {
    const Reduction red = reduce(inst);
    const auto& g = red.instance.graph();
    const auto fvs = approx_fvs(g);
    const auto family = merge_families(enumerate_one_fvs_cycles(red.instance, fvs),
                                       enumerate_two_fvs_cycles(red.instance, fvs));
    return TrackingLowerBounds{solve(build_lp_s_tuples(g, fvs, family)).objective_value,
                               exact_fvs(g).total_weight()};
}

bool lower_bound_check(const TrackingInstance& inst, Weight t_star_weight) {
    const auto bounds = tracking_lower_bounds(inst);
    return bounds.lp_opt <= t_star_weight && bounds.fvs_opt <= t_star_weight;
}

}  // namespace trackcut
