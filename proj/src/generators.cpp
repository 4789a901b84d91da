#include "trackcut/generators.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>

namespace trackcut {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("Rng::uniform: empty range");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
}

std::vector<Weight> random_weights(Rng& rng, int n, Weight max_weight) {
    std::vector<Weight> w(n, 1);
    if (max_weight > 1) {
        for (auto& x : w) x = rng.uniform(1, max_weight);
    }
    return w;
}

namespace {

std::vector<int> shuffled_labels(Rng& rng, int n) {
    std::vector<int> label(n);
    for (int i = 0; i < n; ++i) label[i] = i;
    rng.shuffle(label);
    return label;
}

// Tree edges on shuffled labels: vertex i attaches to a random j < i.
std::vector<Edge> random_tree_edges(Rng& rng, int n) {
    const auto label = shuffled_labels(rng, n);
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) {
        edges.push_back(make_edge(label[i], label[static_cast<int>(rng.uniform(0, i - 1))]));
    }
    return edges;
}

// Hop distance in the graph given by adjacency sets, or -1.
int hop_distance(const std::vector<std::set<int>>& adj, int from, int to) {
    std::vector<int> dist(adj.size(), -1);
    std::queue<int> queue;
    dist[from] = 0;
    queue.push(from);
    while (!queue.empty()) {
        const int x = queue.front();
        queue.pop();
        if (x == to) return dist[x];
        for (int y : adj[x]) {
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                queue.push(y);
            }
        }
    }
    return -1;
}

}  // namespace

WeightedGraph random_connected_graph(Rng& rng, int n, int m, Weight max_weight) {
    if (n < 1) throw std::invalid_argument("random_connected_graph needs n >= 1");
    auto edges = random_tree_edges(rng, n);
    std::set<Edge> present(edges.begin(), edges.end());
    const long long complete = static_cast<long long>(n) * (n - 1) / 2;
    const long long target = std::min<long long>(m, complete);
    while (static_cast<long long>(present.size()) < target) {
        const int u = static_cast<int>(rng.uniform(0, n - 1));
        const int v = static_cast<int>(rng.uniform(0, n - 1));
        if (u == v) continue;
        if (present.insert(make_edge(u, v)).second) edges.push_back(make_edge(u, v));
    }
    return WeightedGraph(n, std::move(edges), random_weights(rng, n, max_weight));
}

WeightedGraph random_forest(Rng& rng, int n, int keep_num, int keep_den, Weight max_weight) {
    const auto label = shuffled_labels(rng, n);
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) {
        const int j = static_cast<int>(rng.uniform(0, i - 1));
        if (rng.chance(keep_num, keep_den)) edges.push_back(make_edge(label[i], label[j]));
    }
    return WeightedGraph(n, std::move(edges), random_weights(rng, n, max_weight));
}

std::vector<Path> random_forest_paths(Rng& rng, const WeightedGraph& forest, int count) {
    const int n = forest.vertex_count();
    std::set<Path> chosen;
    std::vector<Path> out;
    if (n < 2 || forest.edge_count() == 0) return out;
    for (int attempt = 0; attempt < 50 * count && static_cast<int>(out.size()) < count; ++attempt) {
        const int u = static_cast<int>(rng.uniform(0, n - 1));
        const int v = static_cast<int>(rng.uniform(0, n - 1));
        if (u == v) continue;
        auto p = unique_forest_path(forest, u, v);
        if (!p) continue;
        Path norm = normalized(std::move(*p));
        if (chosen.insert(norm).second) out.push_back(std::move(norm));
    }
    return out;
}

WeightedGraph random_girth_graph(Rng& rng, int n, int r, int attempts, Weight max_weight) {
    auto edges = random_tree_edges(rng, n);
    std::vector<std::set<int>> adj(n);
    for (const auto& [u, v] : edges) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    for (int i = 0; i < attempts && n >= 2; ++i) {
        const int u = static_cast<int>(rng.uniform(0, n - 1));
        const int v = static_cast<int>(rng.uniform(0, n - 1));
        if (u == v || adj[u].contains(v)) continue;
        // The new edge closes a cycle of length dist(u, v) + 1.
        if (hop_distance(adj, u, v) < r) continue;
        adj[u].insert(v);
        adj[v].insert(u);
        edges.push_back(make_edge(u, v));
    }
    return WeightedGraph(n, std::move(edges), random_weights(rng, n, max_weight));
}

WeightedGraph random_k_tree(Rng& rng, int n, int k, Weight max_weight) {
    if (k < 1 || n < k + 1) throw std::invalid_argument("random_k_tree needs k >= 1 and n >= k + 1");
    const auto label = shuffled_labels(rng, n);
    std::set<Edge> edges;
    std::vector<std::vector<int>> cliques;  // k-cliques available for attachment
    for (int i = 0; i <= k; ++i) {
        for (int j = i + 1; j <= k; ++j) edges.insert(make_edge(label[i], label[j]));
    }
    for (int skip = 0; skip <= k; ++skip) {
        std::vector<int> c;
        for (int i = 0; i <= k; ++i) {
            if (i != skip) c.push_back(label[i]);
        }
        cliques.push_back(std::move(c));
    }
    for (int i = k + 1; i < n; ++i) {
        const int v = label[i];
        const auto base = cliques[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(cliques.size()) - 1))];
        for (int u : base) edges.insert(make_edge(u, v));
        for (std::size_t drop = 0; drop < base.size(); ++drop) {
            std::vector<int> c{v};
            for (std::size_t j = 0; j < base.size(); ++j) {
                if (j != drop) c.push_back(base[j]);
            }
            cliques.push_back(std::move(c));
        }
    }
    return WeightedGraph(n, std::vector<Edge>(edges.begin(), edges.end()),
                         random_weights(rng, n, max_weight));
}

std::vector<std::pair<int, int>> random_pairs(Rng& rng, int n, int count) {
    std::set<Edge> chosen;
    std::vector<std::pair<int, int>> out;
    const long long possible = static_cast<long long>(n) * (n - 1) / 2;
    while (static_cast<int>(out.size()) < count && static_cast<long long>(chosen.size()) < possible) {
        const int u = static_cast<int>(rng.uniform(0, n - 1));
        const int v = static_cast<int>(rng.uniform(0, n - 1));
        if (u == v || !chosen.insert(make_edge(u, v)).second) continue;
        out.emplace_back(u, v);
    }
    return out;
}

}  // namespace trackcut
