#include "trackcut/graph.hpp"

#include "trackcut/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

namespace trackcut {

WeightedGraph::WeightedGraph(int n, std::vector<Edge> edges, std::vector<Weight> weights) {
    if (n < 0) {
        throw GraphError("negative vertex count");
    }
    if (weights.empty()) {
        weights.assign(static_cast<std::size_t>(n), 1);
    }
    if (weights.size() != static_cast<std::size_t>(n)) {
        throw GraphError("expected " + std::to_string(n) + " weights, got " +
                         std::to_string(weights.size()));
    }
    for (int v = 0; v < n; ++v) {
        if (weights[v] < 1) {
            throw GraphError("vertex " + std::to_string(v) + " has nonpositive weight " +
                             std::to_string(weights[v]));
        }
    }
    for (auto& e : edges) {
        if (e.first < 0 || e.first >= n || e.second < 0 || e.second >= n) {
            throw GraphError("edge {" + std::to_string(e.first) + "," + std::to_string(e.second) +
                             "} has an endpoint outside [0," + std::to_string(n) + ")");
        }
        if (e.first == e.second) {
            throw GraphError("self-loop on vertex " + std::to_string(e.first));
        }
        e = make_edge(e.first, e.second);
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
        throw GraphError("duplicate edge {" + std::to_string(dup->first) + "," +
                         std::to_string(dup->second) + "}");
    }
    adjacency_.assign(static_cast<std::size_t>(n), {});
    for (const auto& [u, v] : edges) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& list : adjacency_) {
        std::sort(list.begin(), list.end());
    }
    edges_ = std::move(edges);
    weights_ = std::move(weights);
}

Weight WeightedGraph::total_weight(std::span<const int> vertices) const {
    Weight sum = 0;
    for (int v : vertices) {
        sum += weights_.at(v);
    }
    return sum;
}

bool WeightedGraph::has_edge(int u, int v) const {
    if (!contains(u) || !contains(v)) {
        return false;
    }
    const auto& list = adjacency_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

bool WeightedGraph::has_uniform_weights() const {
    return std::adjacent_find(weights_.begin(), weights_.end(), std::not_equal_to<>()) ==
           weights_.end();
}

WeightedGraph WeightedGraph::without_vertices(std::span<const int> removed) const {
    std::vector<char> gone(adjacency_.size(), 0);
    for (int v : removed) {
        gone.at(v) = 1;
    }
    std::vector<Edge> kept;
    kept.reserve(edges_.size());
    for (const auto& e : edges_) {
        if (!gone[e.first] && !gone[e.second]) {
            kept.push_back(e);
        }
    }
    return WeightedGraph(vertex_count(), std::move(kept), weights_);
}

WeightedGraph WeightedGraph::without_edge(Edge e) const {
    e = make_edge(e.first, e.second);
    std::vector<Edge> kept;
    kept.reserve(edges_.size());
    for (const auto& f : edges_) {
        if (f != e) {
            kept.push_back(f);
        }
    }
    return WeightedGraph(vertex_count(), std::move(kept), weights_);
}

WeightedGraph WeightedGraph::induced(std::span<const int> kept) const {
    std::vector<int> index(adjacency_.size(), -1);
    std::vector<Weight> w;
    w.reserve(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) {
        index.at(kept[i]) = static_cast<int>(i);
        w.push_back(weights_[kept[i]]);
    }
    std::vector<Edge> e;
    for (const auto& [u, v] : edges_) {
        if (index[u] >= 0 && index[v] >= 0) {
            e.emplace_back(index[u], index[v]);
        }
    }
    return WeightedGraph(static_cast<int>(kept.size()), std::move(e), std::move(w));
}

WeightedGraph WeightedGraph::with_weights(std::vector<Weight> weights) const {
    return WeightedGraph(vertex_count(), edges_, std::move(weights));
}

Path normalized(Path path) {
    if (std::lexicographical_compare(path.vertices.rbegin(), path.vertices.rend(),
                                     path.vertices.begin(), path.vertices.end())) {
        std::reverse(path.vertices.begin(), path.vertices.end());
    }
    return path;
}

namespace {

bool distinct_valid(const WeightedGraph& g, const std::vector<int>& seq) {
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : seq) {
        if (!g.contains(v) || seen[v]) {
            return false;
        }
        seen[v] = 1;
    }
    return true;
}

}  // namespace

bool is_simple_path(const WeightedGraph& g, const Path& path) {
    if (path.empty() || !distinct_valid(g, path.vertices)) {
        return false;
    }
    for (std::size_t i = 1; i < path.size(); ++i) {
        if (!g.has_edge(path.vertices[i - 1], path.vertices[i])) {
            return false;
        }
    }
    return true;
}

bool is_simple_cycle(const WeightedGraph& g, const Path& cycle) {
    return cycle.size() >= 3 && is_simple_path(g, cycle) && g.has_edge(cycle.back(), cycle.front());
}

PathGroup canonical_group(std::vector<Path> paths) {
    for (auto& p : paths) {
        p = normalized(std::move(p));
    }
    std::sort(paths.begin(), paths.end());
    return PathGroup{std::move(paths)};
}

std::vector<int> group_vertices(const PathGroup& group) {
    std::vector<int> all;
    for (const auto& p : group.paths) {
        all.insert(all.end(), p.vertices.begin(), p.vertices.end());
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

bool is_vertex_disjoint(const PathGroup& group) {
    std::size_t total = 0;
    for (const auto& p : group.paths) {
        total += p.size();
    }
    return group_vertices(group).size() == total;
}

VertexSelection::VertexSelection(const WeightedGraph& g, std::vector<int> members)
    : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (int v : members_) {
        if (!g.contains(v)) {
            throw GraphError("selection member " + std::to_string(v) + " is not a vertex");
        }
    }
    total_weight_ = g.total_weight(members_);
}

bool VertexSelection::contains(int v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

std::optional<Path> find_cycle(const WeightedGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 finished
    std::vector<int> parent(n, -1);
    std::vector<std::size_t> cursor(n, 0);
    for (int root = 0; root < n; ++root) {
        if (state[root] != 0) {
            continue;
        }
        std::vector<int> stack{root};
        state[root] = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            const auto nbrs = g.neighbors(v);
            if (cursor[v] == nbrs.size()) {
                state[v] = 2;
                stack.pop_back();
                continue;
            }
            const int w = nbrs[cursor[v]++];
            if (w == parent[v]) {
                continue;
            }
            if (state[w] == 1) {
                Path cycle;
                for (int x = v; x != w; x = parent[x]) {
                    cycle.vertices.push_back(x);
                }
                cycle.vertices.push_back(w);
                std::reverse(cycle.vertices.begin(), cycle.vertices.end());
                return cycle;
            }
            if (state[w] == 0) {
                parent[w] = v;
                state[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return std::nullopt;
}

bool is_forest(const WeightedGraph& g) {
    // A graph is a forest iff |E| = |V| - #components.
    const auto labels = component_labels(g);
    const int components = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
    return static_cast<int>(g.edge_count()) == g.vertex_count() - components;
}

std::optional<Path> unique_forest_path(const WeightedGraph& f, int u, int v) {
    if (!is_forest(f)) {
        throw GraphError("unique_forest_path requires an acyclic graph");
    }
    if (!f.contains(u) || !f.contains(v)) {
        throw GraphError("unique_forest_path endpoint out of range");
    }
    std::vector<int> parent(f.vertex_count(), -2);
    std::queue<int> queue;
    parent[u] = -1;
    queue.push(u);
    while (!queue.empty() && parent[v] == -2) {
        const int x = queue.front();
        queue.pop();
        for (int y : f.neighbors(x)) {
            if (parent[y] == -2) {
                parent[y] = x;
                queue.push(y);
            }
        }
    }
    if (parent[v] == -2) {
        return std::nullopt;
    }
    Path path;
    for (int x = v; x != -1; x = parent[x]) {
        path.vertices.push_back(x);
    }
    std::reverse(path.vertices.begin(), path.vertices.end());
    return path;
}

bool is_acyclic_after_removal(const WeightedGraph& g, std::span<const int> removed) {
    std::vector<char> gone(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : removed) {
        gone.at(v) = 1;
    }
    std::vector<int> dsu(g.vertex_count());
    std::iota(dsu.begin(), dsu.end(), 0);
    auto find = [&](int x) {
        while (dsu[x] != x) {
            x = dsu[x] = dsu[dsu[x]];
        }
        return x;
    };
    for (const auto& [a, b] : g.edges()) {
        if (gone[a] || gone[b]) {
            continue;
        }
        const int ra = find(a);
        const int rb = find(b);
        if (ra == rb) {
            return false;
        }
        dsu[ra] = rb;
    }
    return true;
}

bool is_acyclic_after_removal(const WeightedGraph& g, const VertexSelection& removed) {
    return is_acyclic_after_removal(g, std::span<const int>(removed.members()));
}

std::vector<int> component_labels(const WeightedGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> label(n, -1);
    int next = 0;
    for (int root = 0; root < n; ++root) {
        if (label[root] >= 0) {
            continue;
        }
        std::vector<int> stack{root};
        label[root] = next;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            for (int y : g.neighbors(x)) {
                if (label[y] < 0) {
                    label[y] = next;
                    stack.push_back(y);
                }
            }
        }
        ++next;
    }
    return label;
}

bool connected(const WeightedGraph& g, int u, int v) {
    const auto label = component_labels(g);
    return label.at(u) == label.at(v);
}

std::optional<Path> shortest_cycle(const WeightedGraph& g) {
    const int n = g.vertex_count();
    int best = std::numeric_limits<int>::max();
    Path best_cycle;
    std::vector<int> dist(n);
    std::vector<int> parent(n);
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        dist[root] = 0;
        std::queue<int> queue;
        queue.push(root);
        while (!queue.empty()) {
            const int x = queue.front();
            queue.pop();
            if (2 * dist[x] + 1 >= best) {
                break;
            }
            for (int y : g.neighbors(x)) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push(y);
                } else if (y != parent[x] && dist[y] >= dist[x]) {
                    const int length = dist[x] + dist[y] + 1;
                    if (length >= best) {
                        continue;
                    }
                    // At the global minimum both tree paths meet only at the root.
                    std::vector<int> left;
                    std::vector<int> right;
                    for (int z = x; z != -1; z = parent[z]) left.push_back(z);
                    for (int z = y; z != -1; z = parent[z]) right.push_back(z);
                    std::vector<int> cycle(left.rbegin(), left.rend());
                    cycle.insert(cycle.end(), right.begin(), right.end() - 1);
                    Path candidate{std::move(cycle)};
                    if (is_simple_cycle(g, candidate)) {
                        best = length;
                        best_cycle = std::move(candidate);
                    }
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) {
        return std::nullopt;
    }
    return best_cycle;
}

std::optional<int> girth(const WeightedGraph& g) {
    auto cycle = shortest_cycle(g);
    if (!cycle) {
        return std::nullopt;
    }
    return static_cast<int>(cycle->size());
}

}  // namespace trackcut
