#include "trackcut/pipeline.hpp"

#include "trackcut/errors.hpp"
#include "trackcut/multicut.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace trackcut {

void FamilyBuilder::add(PathGroup group, Provenance provenance) {
    entries_.emplace_back(std::move(group), std::move(provenance));
}

ConstraintFamily FamilyBuilder::finish() && {
    std::map<PathGroup, Provenance> unique;
    for (auto& [group, prov] : entries_) {
        unique.try_emplace(std::move(group), std::move(prov));
    }
    ConstraintFamily family;
    for (auto& [group, prov] : unique) {
        family.groups.push_back(group);
        family.provenance.push_back(std::move(prov));
    }
    return family;
}

ConstraintFamily merge_families(ConstraintFamily first, ConstraintFamily second) {
    FamilyBuilder builder;
    for (auto* fam : {&first, &second}) {
        for (std::size_t i = 0; i < fam->size(); ++i) {
            builder.add(std::move(fam->groups[i]), std::move(fam->provenance[i]));
        }
    }
    return std::move(builder).finish();
}

std::vector<Path> cycle_components(const Path& cycle, std::span<const char> removed) {
    const auto len = cycle.vertices.size();
    std::size_t start = len;
    for (std::size_t i = 0; i < len; ++i) {
        if (removed[cycle.vertices[i]]) {
            start = i;
            break;
        }
    }
    if (start == len) {
        throw std::invalid_argument("cycle_components: no cycle vertex is removed");
    }
    std::vector<Path> parts;
    Path current;
    for (std::size_t step = 1; step <= len; ++step) {
        const int v = cycle.vertices[(start + step) % len];
        if (removed[v]) {
            if (!current.empty()) parts.push_back(std::move(current));
            current = Path{};
        } else {
            current.vertices.push_back(v);
        }
    }
    return parts;
}

Path canonical_cycle(const Path& cycle) {
    const auto& c = cycle.vertices;
    const auto len = c.size();
    const auto pos = static_cast<std::size_t>(std::min_element(c.begin(), c.end()) - c.begin());
    Path forward;
    Path backward;
    for (std::size_t i = 0; i < len; ++i) {
        forward.vertices.push_back(c[(pos + i) % len]);
        backward.vertices.push_back(c[(pos + len - i) % len]);
    }
    return std::min(forward, backward);
}

ForestPathTable::ForestPathTable(const WeightedGraph& f)
    : forest_(f), parent_(static_cast<std::size_t>(f.vertex_count())) {
    if (!is_forest(f)) throw GraphError("path table requires a forest");
}

const std::vector<int>& ForestPathTable::parents(int root) {
    auto& par = parent_.at(root);
    if (!par.empty()) return par;
    // -2 marks vertices outside root's tree.
    par.assign(forest_.vertex_count(), -2);
    par[root] = -1;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
        const int x = queue.front();
        queue.pop();
        for (int y : forest_.neighbors(x)) {
            if (par[y] == -2) {
                par[y] = x;
                queue.push(y);
            }
        }
    }
    return par;
}

std::optional<std::vector<int>> ForestPathTable::path(int x, int y) {
    const auto& par = parents(x);
    if (par.at(y) == -2) return std::nullopt;
    std::vector<int> out;
    for (int v = y; v != -1; v = par[v]) out.push_back(v);
    std::reverse(out.begin(), out.end());
    return out;
}

CoveringLP build_lp_s_tuples(const WeightedGraph& g, const VertexSelection& fvs,
                             const ConstraintFamily& family) {
    std::vector<int> rest;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!fvs.contains(v)) rest.push_back(v);
    }
    auto lp = CoveringLP::over(g, std::move(rest));
    for (const auto& group : family.groups) {
        lp.add_constraint(group_vertices(group));
    }
    return lp;
}

MulticutStage forest_multicut_stage(const WeightedGraph& g, const VertexSelection& fvs,
                                    std::vector<Path> paths) {
    const auto inst = McfInstance::forest(g.without_vertices(fvs.members()), std::move(paths));
    MulticutStage stage;
    stage.unweighted = g.has_uniform_weights();
    if (stage.unweighted) {
        stage.cut = solve_unweighted_forest(inst);
        stage.lp_opt = Rational(stage.cut.total_weight());
    } else {
        const auto frac = solve(forest_mcf_lp(inst));
        stage.lp_opt = frac.objective_value;
        stage.cut = round_weighted_forest(inst, frac);
    }
    return stage;
}

}  // namespace trackcut
