#include "trackcut/preprocess.hpp"

#include "trackcut/errors.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace trackcut {

TrackingInstance::TrackingInstance(WeightedGraph graph, int source, int target)
    : graph_(std::move(graph)), source_(source), target_(target) {
    if (!graph_.contains(source_) || !graph_.contains(target_)) {
        throw GraphError("source/target outside the vertex range");
    }
    if (source_ == target_) {
        throw GraphError("source and target must differ");
    }
}

namespace {

// Shortest path from `from` to `to` avoiding blocked vertices; nullopt if none.
std::optional<Path> bfs_path(const WeightedGraph& g, int from, int to, const std::vector<char>& blocked) {
    if (blocked[from] || blocked[to]) {
        return std::nullopt;
    }
    std::vector<int> parent(g.vertex_count(), -2);
    parent[from] = -1;
    std::queue<int> queue;
    queue.push(from);
    while (!queue.empty() && parent[to] == -2) {
        const int x = queue.front();
        queue.pop();
        for (int y : g.neighbors(x)) {
            if (!blocked[y] && parent[y] == -2) {
                parent[y] = x;
                queue.push(y);
            }
        }
    }
    if (parent[to] == -2) {
        return std::nullopt;
    }
    Path p;
    for (int x = to; x != -1; x = parent[x]) p.vertices.push_back(x);
    std::reverse(p.vertices.begin(), p.vertices.end());
    return p;
}

class DisjointPathSearch {
public:
    DisjointPathSearch(const WeightedGraph& g, int a1, int b1, int a2, int b2)
        : g_(g), b1_(b1), a2_(a2), b2_(b2), on_path_(g.vertex_count(), 0) {
        on_path_[a2] = on_path_[b2] = 1;  // the first path never enters them
        path_.push_back(a1);
        on_path_[a1] = 1;
    }

    std::optional<std::pair<Path, Path>> run() {
        if (extend(path_.back())) {
            return std::make_pair(Path{path_}, *second_);
        }
        return std::nullopt;
    }

private:
    bool extend(int x) {
        if (x == b1_) {
            on_path_[a2_] = on_path_[b2_] = 0;
            second_ = bfs_path(g_, a2_, b2_, on_path_);
            on_path_[a2_] = on_path_[b2_] = 1;
            return second_.has_value();
        }
        for (int y : g_.neighbors(x)) {
            if (on_path_[y]) continue;
            on_path_[y] = 1;
            path_.push_back(y);
            if (extend(y)) return true;
            path_.pop_back();
            on_path_[y] = 0;
        }
        return false;
    }

    const WeightedGraph& g_;
    int b1_, a2_, b2_;
    std::vector<char> on_path_;
    std::vector<int> path_;
    std::optional<Path> second_;
};

// Unit-capacity max-flow on an explicit residual graph.
class UnitFlow {
public:
    explicit UnitFlow(int nodes) : head_(nodes, -1) {}

    void add_arc(int from, int to, int capacity) {
        arcs_.push_back({to, head_[from], capacity});
        head_[from] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({from, head_[to], 0});
        head_[to] = static_cast<int>(arcs_.size()) - 1;
    }

    int max_flow(int source, int sink, int limit) {
        int flow = 0;
        while (flow < limit) {
            std::vector<int> via(head_.size(), -1);
            std::vector<char> seen(head_.size(), 0);
            std::queue<int> queue;
            queue.push(source);
            seen[source] = 1;
            while (!queue.empty() && !seen[sink]) {
                const int x = queue.front();
                queue.pop();
                for (int a = head_[x]; a != -1; a = arcs_[a].next) {
                    if (arcs_[a].capacity > 0 && !seen[arcs_[a].to]) {
                        seen[arcs_[a].to] = 1;
                        via[arcs_[a].to] = a;
                        queue.push(arcs_[a].to);
                    }
                }
            }
            if (!seen[sink]) break;
            for (int x = sink; x != source; x = arcs_[via[x] ^ 1].to) {
                arcs_[via[x]].capacity -= 1;
                arcs_[via[x] ^ 1].capacity += 1;
            }
            ++flow;
        }
        return flow;
    }

private:
    struct Arc {
        int to;
        int next;
        int capacity;
    };
    std::vector<int> head_;
    std::vector<Arc> arcs_;
};

}  // namespace

std::optional<std::pair<Path, Path>> find_two_disjoint_paths(const WeightedGraph& g, int a1, int b1,
                                                             int a2, int b2,
                                                             DisjointPathsOptions options) {
    if (g.vertex_count() > options.max_vertices) {
        throw CapExceeded("two_disjoint_paths: " + std::to_string(g.vertex_count()) +
                          " vertices exceeds the exhaustive-search cap of " +
                          std::to_string(options.max_vertices));
    }
    for (int v : {a1, b1, a2, b2}) {
        if (!g.contains(v)) throw GraphError("two_disjoint_paths: endpoint out of range");
    }
    if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) {
        throw GraphError("two_disjoint_paths: endpoint pairs must be disjoint");
    }
    // Cheap necessary conditions first.
    std::vector<char> blocked(g.vertex_count(), 0);
    blocked[a2] = blocked[b2] = 1;
    if (!bfs_path(g, a1, b1, blocked)) return std::nullopt;
    blocked[a2] = blocked[b2] = 0;
    blocked[a1] = blocked[b1] = 1;
    if (!bfs_path(g, a2, b2, blocked)) return std::nullopt;
    return DisjointPathSearch(g, a1, b1, a2, b2).run();
}

bool two_disjoint_paths(const WeightedGraph& g, int a1, int b1, int a2, int b2,
                        DisjointPathsOptions options) {
    return find_two_disjoint_paths(g, a1, b1, a2, b2, options).has_value();
}

bool vertex_on_st_path(const TrackingInstance& inst, int v) {
    const auto& g = inst.graph();
    if (!g.contains(v)) throw GraphError("vertex out of range");
    const int s = inst.source();
    const int t = inst.target();
    if (v == s || v == t) {
        return connected(g, s, t);
    }
    // Split every vertex x into x_in = 2x, x_out = 2x + 1 with capacity 1;
    // the sink collects one unit from s and one from t.
    const int n = g.vertex_count();
    const int sink = 2 * n;
    UnitFlow flow(2 * n + 1);
    for (int x = 0; x < n; ++x) {
        flow.add_arc(2 * x, 2 * x + 1, x == v ? 2 : 1);
        for (int y : g.neighbors(x)) {
            flow.add_arc(2 * x + 1, 2 * y, 1);
        }
    }
    flow.add_arc(2 * s + 1, sink, 1);
    flow.add_arc(2 * t + 1, sink, 1);
    return flow.max_flow(2 * v, sink, 2) == 2;
}

bool edge_on_st_path(const TrackingInstance& inst, Edge e) {
    const auto& g = inst.graph();
    if (!g.has_edge(e.first, e.second)) {
        throw GraphError("edge_on_st_path: not an edge of the graph");
    }
    const int s = inst.source();
    const int t = inst.target();
    for (auto [x, y] : {std::pair{e.first, e.second}, std::pair{e.second, e.first}}) {
        // Traverse x -> y: an s..x path and a disjoint y..t path.
        if (x == t || y == s) continue;
        if (two_disjoint_paths(g, s, x, y, t)) return true;
    }
    return false;
}

std::vector<int> Reduction::to_original(std::span<const int> reduced_vertices) const {
    std::vector<int> out;
    out.reserve(reduced_vertices.size());
    for (int v : reduced_vertices) out.push_back(kept.at(v));
    std::sort(out.begin(), out.end());
    return out;
}

Reduction reduce(const TrackingInstance& inst) {
    const int s = inst.source();
    const int t = inst.target();
    if (!connected(inst.graph(), s, t)) {
        throw Error("no s-t path exists");
    }
    WeightedGraph g = inst.graph();
    std::vector<char> present(g.vertex_count(), 1);
    for (bool changed = true; changed;) {
        changed = false;
        const TrackingInstance current(g, s, t);
        std::vector<int> dead;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (present[v] && !vertex_on_st_path(current, v)) {
                present[v] = 0;
                dead.push_back(v);
            }
        }
        if (!dead.empty()) {
            g = g.without_vertices(dead);
            changed = true;
            continue;
        }
        const TrackingInstance pruned(g, s, t);
        for (const auto& e : g.edges()) {
            if (!edge_on_st_path(pruned, e)) {
                g = g.without_edge(e);
                changed = true;
                break;
            }
        }
    }
    std::vector<int> kept;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (present[v]) kept.push_back(v);
    }
    const auto index_of = [&](int v) {
        return static_cast<int>(std::lower_bound(kept.begin(), kept.end(), v) - kept.begin());
    };
    return Reduction{TrackingInstance(g.induced(kept), index_of(s), index_of(t)), std::move(kept)};
}

std::optional<std::pair<Path, Path>> local_st_pair_paths(const TrackingInstance& inst,
                                                         std::span<const int> sub_vertices, int a,
                                                         int b) {
    const auto& g = inst.graph();
    const int s = inst.source();
    const int t = inst.target();
    if (!g.contains(a) || !g.contains(b)) throw GraphError("local pair vertex out of range");
    if (a == b || b == s || a == t) {
        return std::nullopt;
    }
    std::vector<int> deleted;
    for (int v : sub_vertices) {
        if (v == a || v == b) continue;
        if (v == s || v == t) return std::nullopt;
        deleted.push_back(v);
    }
    return find_two_disjoint_paths(g.without_vertices(deleted), s, a, b, t);
}

bool is_local_st_pair(const TrackingInstance& inst, std::span<const int> sub_vertices, int a, int b) {
    return local_st_pair_paths(inst, sub_vertices, a, b).has_value();
}

}  // namespace trackcut
