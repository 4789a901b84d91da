#include "trackcut/errors.hpp"
#include "trackcut/multicut.hpp"

#include <algorithm>
#include <stdexcept>

namespace trackcut {

std::optional<std::vector<int>> perfect_elimination_order(const WeightedGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> label(n, 0);
    std::vector<char> numbered(n, 0);
    std::vector<int> visit;
    visit.reserve(n);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (!numbered[v] && (pick < 0 || label[v] > label[pick])) pick = v;
        }
        numbered[pick] = 1;
        visit.push_back(pick);
        for (int w : g.neighbors(pick)) {
            if (!numbered[w]) ++label[w];
        }
    }
    std::vector<int> order(visit.rbegin(), visit.rend());
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) position[order[i]] = i;
    for (int v : order) {
        int first_later = -1;
        for (int w : g.neighbors(v)) {
            if (position[w] > position[v] && (first_later < 0 || position[w] < position[first_later])) {
                first_later = w;
            }
        }
        if (first_later < 0) continue;
        for (int w : g.neighbors(v)) {
            if (position[w] > position[v] && w != first_later && !g.has_edge(first_later, w)) {
                return std::nullopt;
            }
        }
    }
    return order;
}

bool is_chordal(const WeightedGraph& g) {
    return perfect_elimination_order(g).has_value();
}

CliqueTree clique_tree(const WeightedGraph& g) {
    const auto order = perfect_elimination_order(g);
    if (!order) throw GraphError("clique_tree: graph is not chordal");
    const int n = g.vertex_count();
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) position[(*order)[i]] = i;

    std::vector<std::vector<int>> candidates;
    for (int v : *order) {
        std::vector<int> clique{v};
        for (int w : g.neighbors(v)) {
            if (position[w] > position[v]) clique.push_back(w);
        }
        std::sort(clique.begin(), clique.end());
        candidates.push_back(std::move(clique));
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    CliqueTree tree;
    for (const auto& c : candidates) {
        const bool dominated = std::any_of(candidates.begin(), candidates.end(), [&](const auto& d) {
            return d.size() > c.size() && std::includes(d.begin(), d.end(), c.begin(), c.end());
        });
        if (!dominated) tree.cliques.push_back(c);
    }

    // Prim on |C_i ∩ C_j|; zero-weight edges join different components.
    const auto k = tree.cliques.size();
    auto overlap = [&](std::size_t i, std::size_t j) {
        std::vector<int> common;
        std::set_intersection(tree.cliques[i].begin(), tree.cliques[i].end(), tree.cliques[j].begin(),
                              tree.cliques[j].end(), std::back_inserter(common));
        return static_cast<int>(common.size());
    };
    std::vector<char> in_tree(k, 0);
    std::vector<int> best(k, -1);
    std::vector<int> link(k, -1);
    if (k > 0) best[0] = 0;
    for (std::size_t step = 0; step < k; ++step) {
        std::size_t pick = k;
        for (std::size_t i = 0; i < k; ++i) {
            if (!in_tree[i] && (pick == k || best[i] > best[pick])) pick = i;
        }
        in_tree[pick] = 1;
        if (link[pick] >= 0) tree.edges.emplace_back(link[pick], static_cast<int>(pick));
        for (std::size_t i = 0; i < k; ++i) {
            if (in_tree[i]) continue;
            const int w = overlap(pick, i);
            if (w > best[i]) {
                best[i] = w;
                link[i] = static_cast<int>(pick);
            }
        }
    }
    return tree;
}

bool has_subtree_property(const CliqueTree& tree, int vertex_count) {
    for (int v = 0; v < vertex_count; ++v) {
        std::vector<char> holds(tree.cliques.size(), 0);
        int nodes = 0;
        for (std::size_t i = 0; i < tree.cliques.size(); ++i) {
            const auto& c = tree.cliques[i];
            if (std::binary_search(c.begin(), c.end(), v)) {
                holds[i] = 1;
                ++nodes;
            }
        }
        int links = 0;
        for (const auto& [a, b] : tree.edges) {
            if (holds[a] && holds[b]) ++links;
        }
        // A forest on `nodes` vertices is connected iff it has nodes - 1 edges.
        if (nodes > 0 && links != nodes - 1) return false;
    }
    return true;
}

namespace {

struct ShortestPaths {
    std::vector<std::optional<Rational>> dist;
    std::vector<int> parent;
};

ShortestPaths dijkstra(const WeightedGraph& g, std::span<const Rational> length, int root) {
    const int n = g.vertex_count();
    ShortestPaths sp{std::vector<std::optional<Rational>>(n), std::vector<int>(n, -1)};
    std::vector<char> done(n, 0);
    sp.dist[root] = length[root];
    for (;;) {
        int x = -1;
        for (int v = 0; v < n; ++v) {
            if (!done[v] && sp.dist[v] && (x < 0 || *sp.dist[v] < *sp.dist[x])) x = v;
        }
        if (x < 0) break;
        done[x] = 1;
        for (int y : g.neighbors(x)) {
            if (done[y]) continue;
            Rational candidate = *sp.dist[x] + length[y];
            if (!sp.dist[y] || candidate < *sp.dist[y]) {
                sp.dist[y] = std::move(candidate);
                sp.parent[y] = x;
            }
        }
    }
    return sp;
}

}  // namespace

std::vector<std::optional<Rational>> vertex_weighted_distances(const WeightedGraph& g,
                                                               std::span<const Rational> length,
                                                               int root) {
    if (length.size() != static_cast<std::size_t>(g.vertex_count())) {
        throw std::invalid_argument("one length per vertex required");
    }
    return dijkstra(g, length, root).dist;
}

ChordalLpResult solve_chordal_lp(const McfInstance& inst) {
    const int n = inst.graph.vertex_count();
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    ChordalLpResult result{CoveringLP::over(inst.graph, all), {}, 0};
    for (;;) {
        result.solution = solve(result.lp);
        ++result.rounds;
        const auto x = result.solution.x.dense(n);
        bool added = false;
        for (const auto& [s, t] : inst.terminal_pairs) {
            const auto sp = dijkstra(inst.graph, x, s);
            if (!sp.dist[t] || *sp.dist[t] >= 1) continue;
            std::vector<int> path;
            for (int v = t; v != -1; v = sp.parent[v]) path.push_back(v);
            result.lp.add_constraint(std::move(path));
            added = true;
        }
        if (!added) break;
    }
    return result;
}

VertexSelection round_chordal(const McfInstance& inst, const FractionalSolution& frac) {
    const int n = inst.graph.vertex_count();
    std::vector<Rational> xhat(n);
    std::vector<int> taken;
    for (int v = 0; v < n; ++v) {
        xhat[v] = 4 * frac.value(v);
        if (xhat[v] >= 1) {
            taken.push_back(v);
            xhat[v] = 0;
        }
    }
    const WeightedGraph rest = inst.graph.without_vertices(taken);
    const auto labels = component_labels(rest);
    std::vector<Rational> d(n, Rational(0));
    std::vector<char> rooted(n, 0);
    for (int root = 0; root < n; ++root) {
        if (rooted[labels[root]]) continue;
        rooted[labels[root]] = 1;
        const auto dist = vertex_weighted_distances(rest, xhat, root);
        for (int v = 0; v < n; ++v) {
            if (labels[v] == labels[root]) d[v] = *dist[v];
        }
    }
    const auto groups = enumerate_bin_groups(inst.graph, xhat, d);
    const auto best = std::min_element(groups.begin(), groups.end(), [](const auto& a, const auto& b) {
        return a.weight < b.weight;
    });
    std::vector<int> members = taken;
    members.insert(members.end(), best->members.begin(), best->members.end());
    if (!is_multicut(inst, members)) {
        throw std::logic_error("chordal bin rounding left a terminal pair connected");
    }
    return VertexSelection(inst.graph, std::move(members));
}

}  // namespace trackcut
