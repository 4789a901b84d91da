#include "trackcut/ftfvs.hpp"

#include "combinations.hpp"
#include "trackcut/errors.hpp"
#include "trackcut/fvs.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

namespace trackcut {

FtfvsInstance::FtfvsInstance(WeightedGraph graph, int r, FtfvsOptions options)
    : graph_(std::move(graph)), r_(r) {
    if (r < 1) throw std::invalid_argument("fault tolerance r must be at least 1");
    if (r > options.max_r) {
        throw std::invalid_argument("r = " + std::to_string(r) + " exceeds the configured cap " +
                                    std::to_string(options.max_r));
    }
}

bool check_feasible(const FtfvsInstance& inst) {
    const auto g = girth(inst.graph());
    return !g || *g > inst.r();
}

namespace {

// Closes cycles through an ordered fvs subset v_0..v_{k-1}. Each v_i picks a
// predecessor p_i and successor s_i among its neighbours; a successor outside
// S starts a forest segment ending at p_{i+1}, a successor inside S must be
// v_{i+1} itself with p_{i+1} = v_i.
class OrderedCycleSearch {
public:
    using Emit = std::function<void(const std::vector<int>&)>;

    OrderedCycleSearch(const WeightedGraph& g, const std::vector<char>& in_s, ForestPathTable& paths,
                       Emit emit)
        : g_(g), in_s_(in_s), paths_(paths), emit_(std::move(emit)), used_(g.vertex_count(), 0) {}

    void run(const std::vector<int>& order) {
        order_ = order;
        const int k = static_cast<int>(order.size());
        const int v0 = order[0];
        for (int p : g_.neighbors(v0)) {
            if (in_s_[p] && !(k >= 2 && p == order.back())) continue;
            p0_ = p;
            cycle_ = {v0};
            step(0, p);
        }
    }

private:
    void step(int i, int p_i) {
        const int k = static_cast<int>(order_.size());
        const int v = order_[i];
        const int next = (i + 1) % k;
        const int vn = order_[next];
        for (int s : g_.neighbors(v)) {
            if (s == p_i) continue;
            if (in_s_[s]) {
                if (k == 1 || s != vn) continue;
                if (next == 0) {
                    if (p0_ == v) emit_(cycle_);
                } else {
                    cycle_.push_back(vn);
                    step(next, v);
                    cycle_.pop_back();
                }
                continue;
            }
            if (next == 0) {
                if (!in_s_[p0_]) extend(s, p0_, next);
            } else {
                for (int pn : g_.neighbors(vn)) {
                    if (!in_s_[pn]) extend(s, pn, next);
                }
            }
        }
    }

    void extend(int from, int to, int next) {
        const auto seg = paths_.path(from, to);
        if (!seg) return;
        for (int x : *seg) {
            if (used_[x]) return;
        }
        for (int x : *seg) used_[x] = 1;
        cycle_.insert(cycle_.end(), seg->begin(), seg->end());
        if (next == 0) {
            emit_(cycle_);
        } else {
            cycle_.push_back(order_[next]);
            step(next, to);
            cycle_.pop_back();
        }
        cycle_.resize(cycle_.size() - seg->size());
        for (int x : *seg) used_[x] = 0;
    }

    const WeightedGraph& g_;
    const std::vector<char>& in_s_;
    ForestPathTable& paths_;
    Emit emit_;
    std::vector<char> used_;
    std::vector<int> order_;
    std::vector<int> cycle_;
    int p0_ = -1;
};

}  // namespace

ConstraintFamily enumerate_family(const FtfvsInstance& inst, const VertexSelection& s) {
    const auto& g = inst.graph();
    const int r = inst.r();
    if (!is_acyclic_after_removal(g, s)) {
        throw std::invalid_argument("enumerate_family: s is not a feedback vertex set");
    }
    const auto& fvs = s.members();
    std::vector<char> in_s(g.vertex_count(), 0);
    for (int v : fvs) in_s[v] = 1;
    const WeightedGraph forest = g.without_vertices(fvs);
    ForestPathTable paths(forest);

    FamilyBuilder builder;
    std::set<Path> seen;
    std::vector<int> order;
    std::vector<char> removed(g.vertex_count(), 0);

    auto on_cycle = [&](const std::vector<int>& seq) {
        Path cycle{seq};
        if (!seen.insert(canonical_cycle(cycle)).second) return;
        if (!is_simple_cycle(g, cycle)) {
            throw std::logic_error("family enumeration produced a non-cycle");
        }
        if (static_cast<int>(cycle.size()) <= r) {
            throw InfeasibleInstance("cycle of length <= r", cycle.vertices);
        }
        const int k = static_cast<int>(order.size());
        std::vector<int> outside;
        for (int v : cycle.vertices) {
            if (!in_s[v]) outside.push_back(v);
        }
        for (int v : order) removed[v] = 1;
        detail::for_each_combination(static_cast<int>(outside.size()), r - k, [&](const auto& idx) {
            std::vector<int> y;
            for (int i : idx) y.push_back(outside[i]);
            for (int v : y) removed[v] = 1;
            builder.add(canonical_group(cycle_components(cycle, removed)),
                        Provenance{order, cycle, y});
            for (int v : y) removed[v] = 0;
            return false;
        });
        for (int v : order) removed[v] = 0;
    };

    OrderedCycleSearch search(g, in_s, paths, on_cycle);
    const int max_k = std::min<int>(r, static_cast<int>(fvs.size()));
    for (int k = 1; k <= max_k; ++k) {
        detail::for_each_combination(static_cast<int>(fvs.size()), k, [&](const auto& idx) {
            std::vector<int> subset;
            for (int i : idx) subset.push_back(fvs[i]);
            do {
                order = subset;
                search.run(order);
            } while (std::next_permutation(subset.begin(), subset.end()));
            return false;
        });
    }
    return std::move(builder).finish();
}

namespace {

// Cycles meeting `cand` in at most r vertices, searched on the graph whose
// nodes are the candidate vertices and the (tree) components of G - cand.
class ViolationSearch {
public:
    ViolationSearch(const WeightedGraph& g, std::span<const int> cand, int r)
        : g_(g), r_(r), in_cand_(g.vertex_count(), 0), rest_(g.without_vertices(cand)) {
        for (int v : cand) in_cand_.at(v) = 1;
        labels_ = component_labels(rest_);
        const int comps = labels_.empty() ? 0 : *std::max_element(labels_.begin(), labels_.end()) + 1;
        comp_used_.assign(comps, 0);
        attachments_.assign(comps, {});
        for (int t : cand) {
            for (int u : g.neighbors(t)) {
                if (!in_cand_[u]) attachments_[labels_[u]].emplace_back(t, u);
            }
        }
        cand_.assign(cand.begin(), cand.end());
        std::sort(cand_.begin(), cand_.end());
    }

    std::optional<Path> run() {
        if (auto c = find_cycle(rest_)) return c;
        cand_used_.assign(g_.vertex_count(), 0);
        for (int t0 : cand_) {
            t0_ = t0;
            chain_ = {t0};
            links_.clear();
            cand_used_[t0] = 1;
            if (dfs(t0)) return build();
            cand_used_[t0] = 0;
        }
        return std::nullopt;
    }

private:
    static constexpr std::pair<int, int> kDirect{-1, -1};

    bool dfs(int t) {
        if (try_close(t)) return true;
        if (static_cast<int>(chain_.size()) >= r_) return false;
        for (int y : g_.neighbors(t)) {
            if (in_cand_[y]) {
                if (y <= t0_ || cand_used_[y]) continue;
                if (push(y, kDirect, -1)) return true;
                continue;
            }
            const int comp = labels_[y];
            if (comp_used_[comp]) continue;
            for (const auto& [t2, u2] : attachments_[comp]) {
                if (t2 <= t0_ || cand_used_[t2]) continue;
                if (push(t2, {y, u2}, comp)) return true;
            }
        }
        return false;
    }

    bool push(int t, std::pair<int, int> link, int comp) {
        chain_.push_back(t);
        links_.push_back(link);
        cand_used_[t] = 1;
        if (comp >= 0) comp_used_[comp] = 1;
        if (dfs(t)) return true;
        if (comp >= 0) comp_used_[comp] = 0;
        cand_used_[t] = 0;
        links_.pop_back();
        chain_.pop_back();
        return false;
    }

    bool try_close(int t) {
        const bool single = chain_.size() == 1;
        if (!single && g_.has_edge(t, t0_) && !(chain_.size() == 2 && links_[0] == kDirect)) {
            links_.push_back(kDirect);
            return true;
        }
        for (int u : g_.neighbors(t)) {
            if (in_cand_[u] || comp_used_[labels_[u]]) continue;
            for (int u2 : g_.neighbors(t0_)) {
                if (in_cand_[u2] || labels_[u2] != labels_[u]) continue;
                if (single && u == u2) continue;
                links_.emplace_back(u, u2);
                return true;
            }
        }
        return false;
    }

    Path build() {
        Path cycle;
        for (std::size_t i = 0; i < chain_.size(); ++i) {
            cycle.vertices.push_back(chain_[i]);
            const auto& link = links_[i];
            if (link == kDirect) continue;
            const auto seg = unique_forest_path(rest_, link.first, link.second);
            cycle.vertices.insert(cycle.vertices.end(), seg->vertices.begin(), seg->vertices.end());
        }
        if (!is_simple_cycle(g_, cycle)) {
            throw std::logic_error("violation search built an invalid cycle");
        }
        return cycle;
    }

    const WeightedGraph& g_;
    int r_;
    std::vector<char> in_cand_;
    WeightedGraph rest_;
    std::vector<int> labels_;
    std::vector<std::vector<std::pair<int, int>>> attachments_;
    std::vector<char> comp_used_;
    std::vector<char> cand_used_;
    std::vector<int> cand_;
    int t0_ = -1;
    std::vector<int> chain_;
    // links_[i] joins chain_[i] to chain_[i + 1]; the last one closes at t0.
    std::vector<std::pair<int, int>> links_;
};

}  // namespace

std::optional<Path> ftfvs_violation(const FtfvsInstance& inst, std::span<const int> cand) {
    return ViolationSearch(inst.graph(), cand, inst.r()).run();
}

bool verify_ftfvs(const FtfvsInstance& inst, const VertexSelection& cand) {
    return !ftfvs_violation(inst, cand.members()).has_value();
}

FtfvsResult solve_ftfvs_detailed(const FtfvsInstance& inst) {
    const auto& g = inst.graph();
    FtfvsResult result;
    StageClock clock(result.stages);

    clock.start("feasibility");
    if (!check_feasible(inst)) {
        throw InfeasibleInstance("graph has a cycle of length <= r", shortest_cycle(g)->vertices);
    }
    clock.stop();

    clock.start("fvs");
    result.fvs = approx_fvs(g);
    clock.stop();

    clock.start("family");
    result.family = enumerate_family(inst, result.fvs);
    clock.stop();

    clock.start("lp");
    result.lp = solve(build_lp_s_tuples(g, result.fvs, result.family));
    clock.stop();

    clock.start("threshold");
    result.cut_paths = threshold_filter(result.lp, result.family.groups, Rational(1, inst.r()));
    clock.stop();

    clock.start("multicut");
    result.multicut = forest_multicut_stage(g, result.fvs, result.cut_paths);
    clock.stop();

    clock.start("verify");
    std::vector<int> members = result.fvs.members();
    members.insert(members.end(), result.multicut.cut.members().begin(),
                   result.multicut.cut.members().end());
    result.solution = VertexSelection(g, std::move(members));
    if (!verify_ftfvs(inst, result.solution)) {
        throw std::logic_error("assembled set is not an r-fault tolerant fvs");
    }
    clock.stop();
    return result;
}

VertexSelection solve_ftfvs(const FtfvsInstance& inst) {
    return solve_ftfvs_detailed(inst).solution;
}

HardnessGadget gen_hardness_gadget(const WeightedGraph& vc_graph, int k, int r) {
    if (r < 2) throw std::invalid_argument("hardness gadget needs r >= 2");
    const int n = vc_graph.vertex_count();
    const int m = static_cast<int>(vc_graph.edge_count());
    const int ell = (r + 1) / 2 + 1;
    int next = n;
    std::vector<Edge> edges;
    auto fresh = [&](int count) {
        std::vector<int> ids(count + 1);  // 1-based
        for (int i = 1; i <= count; ++i) ids[i] = next++;
        return ids;
    };
    auto chain = [&](const std::vector<int>& ids) {
        for (std::size_t i = 2; i < ids.size(); ++i) edges.push_back(make_edge(ids[i - 1], ids[i]));
    };

    for (const auto& [u, v] : vc_graph.edges()) {
        const auto a = fresh(r - 1);
        const auto b = fresh(ell);
        const auto c = fresh(ell);
        edges.push_back(make_edge(u, a[1]));
        chain(a);
        edges.push_back(make_edge(a[r - 1], v));
        chain(b);
        chain(c);
        edges.push_back(make_edge(a[1], b[1]));
        edges.push_back(make_edge(a[r / 2], b[ell]));
        edges.push_back(make_edge(a[(r + 1) / 2], c[1]));
        edges.push_back(make_edge(a[r - 1], c[ell]));
    }
    const auto x = fresh(r + 1);
    chain(x);
    edges.push_back(make_edge(x[r + 1], x[1]));
    for (int v = 0; v < n; ++v) edges.push_back(make_edge(x[1], v));

    WeightedGraph gadget(next, std::move(edges));
    if (const auto gi = girth(gadget); gi && *gi < r + 1) {
        throw std::logic_error("gadget has a cycle shorter than r + 1");
    }
    std::vector<int> added;
    for (int v = n; v < next; ++v) added.push_back(v);
    return HardnessGadget{
        FtfvsInstance(std::move(gadget), r, FtfvsOptions{std::max(FtfvsOptions{}.max_r, r)}),
        k + r + 1 + m * (2 * ell + r - 1), std::move(added)};
}

}  // namespace trackcut
