#include "trackcut/oracles.hpp"

#include "trackcut/errors.hpp"
#include "trackcut/tracking.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <set>
#include <string>

namespace trackcut {

namespace {

void require_cap(int size, int cap, const char* what) {
    if (size > cap) {
        throw CapExceeded(std::string(what) + ": " + std::to_string(size) +
                          " vertices exceed the oracle cap of " + std::to_string(cap));
    }
}

using Predicate = std::function<bool(const std::vector<int>&)>;

// Minimum-weight feasible set containing `forced`, chosen among subsets of `free`.
std::optional<VertexSelection> first_feasible(const WeightedGraph& g, const std::vector<int>& free,
                                              const std::vector<int>& forced, const Predicate& ok) {
    const std::size_t f = free.size();
    std::vector<std::pair<Weight, std::vector<int>>> subsets;
    subsets.reserve(std::size_t{1} << f);
    for (std::size_t mask = 0; mask < (std::size_t{1} << f); ++mask) {
        std::vector<int> members = forced;
        for (std::size_t i = 0; i < f; ++i) {
            if (mask >> i & 1U) members.push_back(free[i]);
        }
        std::sort(members.begin(), members.end());
        const Weight w = g.total_weight(members);
        subsets.emplace_back(w, std::move(members));
    }
    std::sort(subsets.begin(), subsets.end());
    for (const auto& [w, members] : subsets) {
        if (ok(members)) return VertexSelection(g, members);
    }
    return std::nullopt;
}

std::vector<int> all_vertices(const WeightedGraph& g) {
    std::vector<int> vs(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) vs[v] = v;
    return vs;
}

bool is_vertex_cover(const WeightedGraph& g, const std::vector<int>& members) {
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : members) in[v] = 1;
    return std::all_of(g.edges().begin(), g.edges().end(),
                       [&](const Edge& e) { return in[e.first] || in[e.second]; });
}

}  // namespace

VertexSelection exact_fvs(const WeightedGraph& g, int cap) {
    require_cap(g.vertex_count(), cap, "exact_fvs");
    return *first_feasible(g, all_vertices(g), {}, [&](const std::vector<int>& m) {
        return is_acyclic_after_removal(g, m);
    });
}

std::vector<int> vertices_on_cycles_of_length(const WeightedGraph& g, int length) {
    const int n = g.vertex_count();
    std::vector<char> on(n, 0);
    if (length < 3) return {};
    std::vector<int> path;
    std::vector<char> used(n, 0);
    // Paths start at the cycle's smallest vertex, so each cycle is met from there.
    std::function<void(int)> extend = [&](int x) {
        const int start = path.front();
        if (static_cast<int>(path.size()) == length) {
            if (g.has_edge(x, start)) {
                for (int v : path) on[v] = 1;
            }
            return;
        }
        for (int y : g.neighbors(x)) {
            if (y <= start || used[y]) continue;
            used[y] = 1;
            path.push_back(y);
            extend(y);
            path.pop_back();
            used[y] = 0;
        }
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        used[s] = 1;
        extend(s);
        used[s] = 0;
    }
    std::vector<int> out;
    for (int v = 0; v < n; ++v) {
        if (on[v]) out.push_back(v);
    }
    return out;
}

std::optional<VertexSelection> exact_ftfvs(const FtfvsInstance& inst, int cap) {
    if (!check_feasible(inst)) return std::nullopt;
    const auto& g = inst.graph();
    const auto forced = vertices_on_cycles_of_length(g, inst.r() + 1);
    const auto everyone = all_vertices(g);
    std::vector<int> free;
    std::set_difference(everyone.begin(), everyone.end(), forced.begin(), forced.end(),
                        std::back_inserter(free));
    require_cap(static_cast<int>(free.size()), cap, "exact_ftfvs (free vertices)");
    return first_feasible(g, free, forced, [&](const std::vector<int>& m) {
        return !ftfvs_violation(inst, m).has_value();
    });
}

VertexSelection exact_tracking(const TrackingInstance& inst, int cap, std::size_t max_paths) {
    const auto& g = inst.graph();
    require_cap(g.vertex_count(), cap, "exact_tracking");
    const auto paths = enumerate_st_paths(inst, max_paths);
    std::vector<char> tracker(g.vertex_count(), 0);
    return *first_feasible(g, all_vertices(g), {}, [&](const std::vector<int>& m) {
        std::fill(tracker.begin(), tracker.end(), 0);
        for (int v : m) tracker[v] = 1;
        std::set<std::vector<int>> seen;
        for (const auto& p : paths) {
            if (!seen.insert(tracker_sequence(p, tracker)).second) return false;
        }
        return true;
    });
}

VertexSelection exact_multicut(const McfInstance& inst, int cap) {
    const auto& g = inst.graph;
    require_cap(g.vertex_count(), cap, "exact_multicut");
    return *first_feasible(g, all_vertices(g), {},
                           [&](const std::vector<int>& m) { return is_multicut(inst, m); });
}

VertexCoverDecision exact_vertex_cover(const WeightedGraph& g, int k, int cap) {
    require_cap(g.vertex_count(), cap, "exact_vertex_cover");
    const WeightedGraph unit = g.with_weights(std::vector<Weight>(g.vertex_count(), 1));
    auto cover = *first_feasible(unit, all_vertices(unit), {},
                                 [&](const std::vector<int>& m) { return is_vertex_cover(g, m); });
    const bool exists = static_cast<int>(cover.size()) <= k;
    return VertexCoverDecision{exists, VertexSelection(g, cover.members())};
}

VertexSelection min_weight_vertex_cover(const WeightedGraph& g, int cap) {
    require_cap(g.vertex_count(), cap, "min_weight_vertex_cover");
    return *first_feasible(g, all_vertices(g), {},
                           [&](const std::vector<int>& m) { return is_vertex_cover(g, m); });
}

std::vector<Path> enumerate_st_paths(const TrackingInstance& inst, std::size_t max_paths) {
    const auto& g = inst.graph();
    const int t = inst.target();
    std::vector<Path> out;
    std::vector<char> used(g.vertex_count(), 0);
    Path current{{inst.source()}};
    used[inst.source()] = 1;
    std::function<void(int)> walk = [&](int x) {
        if (x == t) {
            if (out.size() == max_paths) {
                throw CapExceeded("more than " + std::to_string(max_paths) +
                                  " s-t paths; exhaustive verification infeasible");
            }
            out.push_back(current);
            return;
        }
        for (int y : g.neighbors(x)) {
            if (used[y]) continue;
            used[y] = 1;
            current.vertices.push_back(y);
            walk(y);
            current.vertices.pop_back();
            used[y] = 0;
        }
    };
    walk(inst.source());
    return out;
}

std::vector<Path> enumerate_cycles(const WeightedGraph& g, std::size_t max_cycles) {
    const int n = g.vertex_count();
    std::vector<Path> out;
    std::vector<char> used(n, 0);
    Path current;
    std::function<void(int)> walk = [&](int x) {
        const int start = current.front();
        for (int y : g.neighbors(x)) {
            if (y == start && current.size() >= 3 && current.vertices[1] < x) {
                if (out.size() == max_cycles) {
                    throw CapExceeded("more than " + std::to_string(max_cycles) + " cycles");
                }
                out.push_back(current);
            }
            if (y <= start || used[y]) continue;
            used[y] = 1;
            current.vertices.push_back(y);
            walk(y);
            current.vertices.pop_back();
            used[y] = 0;
        }
    };
    for (int s = 0; s < n; ++s) {
        current = Path{{s}};
        used[s] = 1;
        walk(s);
        used[s] = 0;
    }
    return out;
}

}  // namespace trackcut
