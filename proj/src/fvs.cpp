#include "trackcut/fvs.hpp"

#include "trackcut/rational.hpp"

#include <algorithm>
#include <optional>

namespace trackcut {

namespace {

class LocalRatio {
public:
    explicit LocalRatio(const WeightedGraph& g)
        : g_(g), alive_(g.vertex_count(), 1), degree_(g.vertex_count(), 0) {
        residual_.reserve(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) residual_.emplace_back(g.weight(v));
    }

    std::vector<int> run() {
        for (;;) {
            prune();
            if (std::none_of(alive_.begin(), alive_.end(), [](char a) { return a != 0; })) break;
            if (auto cycle = semidisjoint_cycle()) {
                Rational gamma = residual_[cycle->front()];
                for (int v : *cycle) gamma = std::min(gamma, residual_[v]);
                for (int v : *cycle) residual_[v] -= gamma;
            } else {
                std::optional<Rational> gamma;
                for (int v = 0; v < g_.vertex_count(); ++v) {
                    if (!alive_[v]) continue;
                    Rational ratio = residual_[v] / (degree_[v] - 1);
                    if (!gamma || ratio < *gamma) gamma = std::move(ratio);
                }
                for (int v = 0; v < g_.vertex_count(); ++v) {
                    if (alive_[v]) residual_[v] -= *gamma * (degree_[v] - 1);
                }
            }
            for (int v = 0; v < g_.vertex_count(); ++v) {
                if (alive_[v] && residual_[v] == 0) {
                    alive_[v] = 0;
                    picked_.push_back(v);
                }
            }
        }
        return reverse_delete();
    }

private:
    void refresh_degrees() {
        for (int v = 0; v < g_.vertex_count(); ++v) {
            degree_[v] = 0;
            if (!alive_[v]) continue;
            for (int w : g_.neighbors(v)) degree_[v] += alive_[w];
        }
    }

    void prune() {
        refresh_degrees();
        std::vector<int> queue;
        for (int v = 0; v < g_.vertex_count(); ++v) {
            if (alive_[v] && degree_[v] <= 1) queue.push_back(v);
        }
        while (!queue.empty()) {
            const int v = queue.back();
            queue.pop_back();
            if (!alive_[v]) continue;
            alive_[v] = 0;
            for (int w : g_.neighbors(v)) {
                if (alive_[w] && --degree_[w] <= 1) queue.push_back(w);
            }
        }
        refresh_degrees();
    }

    int other_alive_neighbor(int v, int not_this) const {
        for (int w : g_.neighbors(v)) {
            if (alive_[w] && w != not_this) return w;
        }
        return -1;
    }

    // A cycle in which every vertex but at most one has degree 2.
    std::optional<std::vector<int>> semidisjoint_cycle() const {
        std::vector<char> seen(g_.vertex_count(), 0);
        for (int v = 0; v < g_.vertex_count(); ++v) {
            if (!alive_[v] || degree_[v] != 2 || seen[v]) continue;
            std::vector<int> chain{v};
            seen[v] = 1;
            int ends[2] = {-1, -1};
            bool closed = false;
            for (int dir = 0; dir < 2 && !closed; ++dir) {
                int prev = v;
                int cur = -1;
                for (int w : g_.neighbors(v)) {
                    if (!alive_[w]) continue;
                    if (dir == 0) {
                        cur = w;
                        break;
                    }
                    cur = w;  // dir 1 takes the last alive neighbor
                }
                while (degree_[cur] == 2) {
                    if (cur == v) {
                        closed = true;
                        break;
                    }
                    seen[cur] = 1;
                    chain.push_back(cur);
                    const int next = other_alive_neighbor(cur, prev);
                    prev = cur;
                    cur = next;
                }
                ends[dir] = cur;
            }
            if (closed) {
                std::sort(chain.begin(), chain.end());
                chain.erase(std::unique(chain.begin(), chain.end()), chain.end());
                return chain;
            }
            if (ends[0] == ends[1]) {
                chain.push_back(ends[0]);
                return chain;
            }
        }
        return std::nullopt;
    }

    std::vector<int> reverse_delete() const {
        std::vector<char> in(g_.vertex_count(), 0);
        for (int v : picked_) in[v] = 1;
        for (auto it = picked_.rbegin(); it != picked_.rend(); ++it) {
            in[*it] = 0;
            std::vector<int> rest;
            for (int v = 0; v < g_.vertex_count(); ++v) {
                if (in[v]) rest.push_back(v);
            }
            if (!is_acyclic_after_removal(g_, std::span<const int>(rest))) in[*it] = 1;
        }
        std::vector<int> out;
        for (int v = 0; v < g_.vertex_count(); ++v) {
            if (in[v]) out.push_back(v);
        }
        return out;
    }

    const WeightedGraph& g_;
    std::vector<char> alive_;
    std::vector<int> degree_;
    std::vector<Rational> residual_;
    std::vector<int> picked_;
};

}  // namespace

VertexSelection approx_fvs(const WeightedGraph& g) {
    return VertexSelection(g, LocalRatio(g).run());
}

}  // namespace trackcut
