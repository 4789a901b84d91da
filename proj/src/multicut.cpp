#include "trackcut/multicut.hpp"

#include "trackcut/errors.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace trackcut {

McfInstance McfInstance::forest(WeightedGraph f, std::vector<Path> paths) {
    if (!is_forest(f)) {
        throw GraphError("multicut-in-forests instance graph contains a cycle");
    }
    for (auto& p : paths) {
        if (!is_simple_path(f, p)) {
            throw GraphError("cut path is not a simple path of the forest");
        }
        p = normalized(std::move(p));
    }
    return McfInstance{std::move(f), std::move(paths), {}};
}

McfInstance McfInstance::forest_from_pairs(WeightedGraph f, std::span<const TerminalPair> pairs) {
    std::vector<Path> paths;
    for (const auto& [s, t] : pairs) {
        if (s == t) throw GraphError("terminal pair with identical endpoints");
        if (auto p = unique_forest_path(f, s, t)) paths.push_back(std::move(*p));
    }
    return forest(std::move(f), std::move(paths));
}

McfInstance McfInstance::chordal(WeightedGraph g, std::vector<TerminalPair> pairs) {
    if (!is_chordal(g)) {
        throw GraphError("multicut instance graph is not chordal");
    }
    for (const auto& [s, t] : pairs) {
        if (!g.contains(s) || !g.contains(t)) throw GraphError("terminal out of range");
        if (s == t) throw GraphError("terminal pair with identical endpoints");
    }
    return McfInstance{std::move(g), {}, std::move(pairs)};
}

bool is_multicut(const McfInstance& inst, std::span<const int> members) {
    std::vector<char> in(inst.graph.vertex_count(), 0);
    for (int v : members) in.at(v) = 1;
    for (const auto& p : inst.cut_paths) {
        if (std::none_of(p.vertices.begin(), p.vertices.end(), [&](int v) { return in[v] != 0; })) {
            return false;
        }
    }
    if (inst.terminal_pairs.empty()) return true;
    const auto labels = component_labels(inst.graph.without_vertices(members));
    for (const auto& [s, t] : inst.terminal_pairs) {
        if (!in[s] && !in[t] && labels[s] == labels[t]) return false;
    }
    return true;
}

CoveringLP forest_mcf_lp(const McfInstance& inst) {
    std::vector<int> all(inst.graph.vertex_count());
    for (int v = 0; v < inst.graph.vertex_count(); ++v) all[v] = v;
    auto lp = CoveringLP::over(inst.graph, std::move(all));
    for (const auto& p : inst.cut_paths) lp.add_constraint(p.vertices);
    return lp;
}

namespace {

// BFS tree of each component rooted at its lowest vertex.
struct RootedForest {
    std::vector<int> parent;  // -1 for roots
    std::vector<int> depth;
    std::vector<int> order;   // BFS order, parents before children
};

RootedForest root_forest(const WeightedGraph& f) {
    const int n = f.vertex_count();
    RootedForest rf{std::vector<int>(n, -1), std::vector<int>(n, -1), {}};
    for (int root = 0; root < n; ++root) {
        if (rf.depth[root] >= 0) continue;
        rf.depth[root] = 0;
        std::queue<int> queue;
        queue.push(root);
        while (!queue.empty()) {
            const int x = queue.front();
            queue.pop();
            rf.order.push_back(x);
            for (int y : f.neighbors(x)) {
                if (rf.depth[y] < 0) {
                    rf.depth[y] = rf.depth[x] + 1;
                    rf.parent[y] = x;
                    queue.push(y);
                }
            }
        }
    }
    return rf;
}

bool in_bin(const Rational& xhat, const Rational& d, const Rational& r) {
    if (xhat >= 1) return true;
    if (xhat <= 0) return false;
    const Rational hi = fractional_part(d);
    const Rational lo = fractional_part(d - xhat);
    if (hi - xhat >= 0) return lo <= r && r < hi;
    return r >= lo || r < hi;
}

}  // namespace

std::vector<Rational> forest_distances(const WeightedGraph& f, std::span<const Rational> xhat) {
    if (!is_forest(f)) throw GraphError("forest_distances requires an acyclic graph");
    if (xhat.size() != static_cast<std::size_t>(f.vertex_count())) {
        throw std::invalid_argument("xhat must have one entry per vertex");
    }
    const auto rf = root_forest(f);
    std::vector<Rational> d(f.vertex_count());
    for (int v : rf.order) {
        d[v] = xhat[v];
        if (rf.parent[v] >= 0) d[v] += d[rf.parent[v]];
    }
    return d;
}

std::vector<BinGroup> enumerate_bin_groups(const WeightedGraph& g, std::span<const Rational> xhat,
                                           std::span<const Rational> distances) {
    const int n = g.vertex_count();
    if (xhat.size() != static_cast<std::size_t>(n) || distances.size() != xhat.size()) {
        throw std::invalid_argument("xhat and distances must have one entry per vertex");
    }
    std::vector<Rational> cuts{Rational(0)};
    for (int u = 0; u < n; ++u) {
        if (xhat[u] <= 0 || xhat[u] >= 1) continue;
        cuts.push_back(fractional_part(distances[u]));
        cuts.push_back(fractional_part(distances[u] - xhat[u]));
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<BinGroup> groups;
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        const Rational hi = i + 1 < cuts.size() ? cuts[i + 1] : Rational(1);
        std::vector<int> members;
        for (int u = 0; u < n; ++u) {
            if (in_bin(xhat[u], distances[u], cuts[i])) members.push_back(u);
        }
        if (!groups.empty() && groups.back().members == members) {
            groups.back().hi = hi;
            continue;
        }
        const Weight w = g.total_weight(members);
        groups.push_back(BinGroup{cuts[i], hi, std::move(members), w});
    }
    return groups;
}

VertexSelection round_weighted_forest(const McfInstance& inst, const FractionalSolution& frac) {
    const int n = inst.graph.vertex_count();
    const auto xhat = scale_and_cap(frac.x, Rational(2)).dense(n);
    const auto d = forest_distances(inst.graph, xhat);
    const auto groups = enumerate_bin_groups(inst.graph, xhat, d);
    const auto best = std::min_element(groups.begin(), groups.end(), [](const auto& a, const auto& b) {
        return a.weight < b.weight;
    });
    if (!is_multicut(inst, best->members)) {
        throw std::logic_error("minimum-weight bin does not cut every path; is the LP solution feasible?");
    }
    return VertexSelection(inst.graph, best->members);
}

std::vector<Rational> integralize_forest_solution(const McfInstance& inst, std::vector<Rational> x,
                                                  const ExchangeObserver& observer) {
    const auto rf = root_forest(inst.graph);
    for (;;) {
        int u = -1;
        for (int v = 0; v < inst.graph.vertex_count(); ++v) {
            if (x[v] > 0 && x[v] < 1 && (u < 0 || rf.depth[v] > rf.depth[u])) u = v;
        }
        if (u < 0) break;
        if (const int p = rf.parent[u]; p >= 0) {
            x[p] = std::min(Rational(x[p] + x[u]), Rational(1));
        }
        x[u] = 0;
        if (observer) observer(x, u);
    }
    return x;
}

VertexSelection solve_unweighted_forest(const McfInstance& inst) {
    if (!inst.graph.has_uniform_weights()) {
        throw std::invalid_argument(
            "solve_unweighted_forest needs equal weights; use round_weighted_forest");
    }
    const auto lp = forest_mcf_lp(inst);
    const auto frac = solve(lp);
    const auto x = integralize_forest_solution(inst, frac.x.dense(inst.graph.vertex_count()));
    std::vector<int> members;
    for (int v = 0; v < inst.graph.vertex_count(); ++v) {
        if (x[v] == 1) members.push_back(v);
    }
    VertexSelection result(inst.graph, std::move(members));
    if (Rational(result.total_weight()) != frac.objective_value ||
        !is_multicut(inst, result.members())) {
        throw std::logic_error("exchange did not preserve an optimal feasible solution");
    }
    return result;
}

McfInstance vc_to_mcf_star(const WeightedGraph& g) {
    const int n = g.vertex_count();
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, n);
    std::vector<Weight> w = g.weights();
    Weight total = 0;
    for (Weight x : w) total += x;
    w.push_back(std::max<Weight>(1, total));
    WeightedGraph star(n + 1, std::move(edges), std::move(w));
    std::vector<Path> paths;
    for (const auto& [u, v] : g.edges()) paths.push_back(Path{{u, n, v}});
    return McfInstance::forest(std::move(star), std::move(paths));
}

}  // namespace trackcut
