#include "test_support.hpp"
#include "trackcut/errors.hpp"
#include "trackcut/generators.hpp"
#include "trackcut/lp.hpp"
#include "trackcut/multicut.hpp"
#include "trackcut/oracles.hpp"

#include <gtest/gtest.h>

using namespace trackcut;
using namespace trackcut::testing;

namespace {

std::vector<Rational> qs(std::initializer_list<Rational> v) { return v; }

FractionalSolution frac_of(const WeightedGraph& g, std::vector<Rational> dense) {
    std::vector<int> vars(g.vertex_count());
    Rational obj = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        vars[v] = v;
        obj += dense[v] * g.weight(v);
    }
    return {VertexValues{vars, std::move(dense)}, obj};
}

// center 0, leaves 1..leaves
WeightedGraph star(int leaves, std::vector<Weight> w = {}) {
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return WeightedGraph(leaves + 1, e, std::move(w));
}

Rational depth_potential(const WeightedGraph& f, const std::vector<Rational>& x) {
    const auto labels = component_labels(f);
    Rational total = 0;
    for (int v = 0; v < f.vertex_count(); ++v) {
        int root = v;
        for (int u = 0; u < v; ++u) {
            if (labels[u] == labels[v]) {
                root = u;
                break;
            }
        }
        total += x[v] * static_cast<int>(unique_forest_path(f, root, v)->size() - 1);
    }
    return total;
}

}  // namespace

TEST(McfInstance, ValidatesForestInput) {
    EXPECT_THROW(McfInstance::forest(cycle_graph(3), {}), GraphError);
    EXPECT_THROW(McfInstance::forest(path_graph(3), {Path{{0, 2}}}), GraphError);
    const auto inst = McfInstance::forest(path_graph(3), {Path{{2, 1, 0}}});
    EXPECT_EQ(inst.cut_paths.front().vertices, (std::vector<int>{0, 1, 2}));
    WeightedGraph two(4, {{0, 1}, {2, 3}});
    const std::vector<TerminalPair> pairs{{0, 3}, {1, 0}};
    const auto fp = McfInstance::forest_from_pairs(two, pairs);
    ASSERT_EQ(fp.cut_paths.size(), 1U);
    EXPECT_EQ(fp.cut_paths.front().vertices, (std::vector<int>{0, 1}));
}

TEST(ForestDistances, Examples) {
    WeightedGraph single(1, {});
    EXPECT_EQ(forest_distances(single, qs({Rational(1, 2)})), qs({Rational(1, 2)}));
    EXPECT_EQ(forest_distances(path_graph(3), qs({Rational(1, 4), Rational(1, 4), Rational(1, 2)})),
              qs({Rational(1, 4), Rational(1, 2), Rational(1)}));
    const auto d = forest_distances(star(3), qs({0, Rational(1, 3), Rational(1, 5), 1}));
    EXPECT_EQ(d, qs({0, Rational(1, 3), Rational(1, 5), 1}));
    EXPECT_THROW(forest_distances(cycle_graph(3), qs({0, 0, 0})), GraphError);
}

TEST(BinGroups, Examples) {
    const auto g = path_graph(2);
    const auto zero = qs({0, 0});
    auto groups = enumerate_bin_groups(g, zero, forest_distances(g, zero));
    ASSERT_EQ(groups.size(), 1U);
    EXPECT_EQ(groups[0].lo, 0);
    EXPECT_EQ(groups[0].hi, 1);
    EXPECT_TRUE(groups[0].members.empty());

    WeightedGraph one(1, {});
    const auto full = qs({1});
    groups = enumerate_bin_groups(one, full, forest_distances(one, full));
    ASSERT_EQ(groups.size(), 1U);
    EXPECT_EQ(groups[0].members, (std::vector<int>{0}));

    const auto halves = qs({Rational(1, 2), Rational(1, 2)});
    groups = enumerate_bin_groups(g, halves, forest_distances(g, halves));
    ASSERT_EQ(groups.size(), 2U);
    EXPECT_EQ(groups[0].hi, Rational(1, 2));
    EXPECT_EQ(groups[0].members, (std::vector<int>{0}));
    EXPECT_EQ(groups[1].lo, Rational(1, 2));
    EXPECT_EQ(groups[1].members, (std::vector<int>{1}));
}

TEST(BinGroups, MatchMembershipAtSampledOffsets) {
    // Independent evaluation of the bin definition at the midpoint of every group.
    Rng rng(8);
    for (int trial = 0; trial < 60; ++trial) {
        const auto f = random_forest(rng, static_cast<int>(rng.uniform(1, 9)), 4, 5, 3);
        std::vector<Rational> xhat(f.vertex_count());
        for (auto& x : xhat) x = Rational(static_cast<int>(rng.uniform(0, 6)), 6);
        const auto d = forest_distances(f, xhat);
        const auto groups = enumerate_bin_groups(f, xhat, d);
        EXPECT_LE(groups.size(), static_cast<std::size_t>(2 * f.vertex_count() + 1));
        Rational cursor = 0;
        for (const auto& grp : groups) {
            EXPECT_EQ(grp.lo, cursor);
            EXPECT_LT(grp.lo, grp.hi);
            cursor = grp.hi;
            const Rational r = (grp.lo + grp.hi) / 2;
            std::vector<int> expected;
            for (int u = 0; u < f.vertex_count(); ++u) {
                const Rational hi = fractional_part(d[u]);
                const Rational lo = hi - xhat[u];
                const bool in = xhat[u] >= 1 || (lo >= 0 ? (lo <= r && r < hi) : (r < hi || r >= lo + 1));
                if (in) expected.push_back(u);
            }
            EXPECT_EQ(grp.members, expected);
            EXPECT_EQ(grp.weight, f.total_weight(grp.members));
        }
        EXPECT_EQ(cursor, 1);
    }
}

TEST(RoundWeightedForest, Examples) {
    const auto g = path_graph(3);
    const auto inst = McfInstance::forest(g, {Path{{0, 1, 2}}});
    EXPECT_EQ(round_weighted_forest(inst, frac_of(g, qs({0, 1, 0}))).members(), (std::vector<int>{1}));

    const auto empty = McfInstance::forest(g, {});
    EXPECT_TRUE(round_weighted_forest(empty, frac_of(g, qs({0, 0, 0}))).empty());

    const auto st = star(4);
    const auto shared = McfInstance::forest(st, {Path{{1, 0, 2}}, Path{{3, 0, 4}}});
    EXPECT_EQ(round_weighted_forest(shared, frac_of(st, qs({1, 0, 0, 0, 0}))).members(),
              (std::vector<int>{0}));
    EXPECT_EQ(solve(forest_mcf_lp(shared)).objective_value, 1);
}

TEST(SolveUnweightedForest, Examples) {
    EXPECT_EQ(solve_unweighted_forest(McfInstance::forest(path_graph(3), {Path{{0, 1, 2}}})).total_weight(), 1);
    const auto st = star(6);
    const auto three = McfInstance::forest(st, {Path{{1, 0, 2}}, Path{{3, 0, 4}}, Path{{5, 0, 6}}});
    EXPECT_EQ(solve_unweighted_forest(three).members(), (std::vector<int>{0}));
    WeightedGraph two(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
    const auto disjoint = McfInstance::forest(two, {Path{{0, 1, 2}}, Path{{3, 4, 5}}});
    EXPECT_EQ(solve_unweighted_forest(disjoint).total_weight(), 2);
    EXPECT_EQ(exact_multicut(disjoint).total_weight(), 2);
    EXPECT_THROW(solve_unweighted_forest(McfInstance::forest(path_graph(2, {1, 2}), {})),
                 std::invalid_argument);
}

TEST(SolveUnweightedForest, ExchangeKeepsOptimumAndLowersPotential) {
    Rng rng(404);
    int exchanges = 0;
    for (int trial = 0; trial < 80; ++trial) {
        const auto f = random_forest(rng, static_cast<int>(rng.uniform(2, 14)), 9, 10, 1);
        const auto inst = McfInstance::forest(f, random_forest_paths(rng, f, static_cast<int>(rng.uniform(1, 6))));
        const auto lp = forest_mcf_lp(inst);
        const auto frac = solve(lp);
        const int n = f.vertex_count();
        std::vector<int> all(n);
        for (int v = 0; v < n; ++v) all[v] = v;
        Rational potential = depth_potential(f, frac.x.dense(n));
        const auto final_x = integralize_forest_solution(
            inst, frac.x.dense(n), [&](const std::vector<Rational>& x, int zeroed) {
                ++exchanges;
                EXPECT_EQ(x[zeroed], 0);
                const VertexValues vals{all, x};
                EXPECT_TRUE(is_feasible(lp, vals));
                EXPECT_EQ(objective_of(lp, vals), frac.objective_value);
                const Rational next = depth_potential(f, x);
                EXPECT_LT(next, potential);
                potential = next;
            });
        for (const auto& v : final_x) EXPECT_TRUE(v == 0 || v == 1);
        const auto cut = solve_unweighted_forest(inst);
        EXPECT_EQ(Rational(cut.total_weight()), frac.objective_value);
        EXPECT_EQ(cut.total_weight(), exact_multicut(inst).total_weight());
    }
    RecordProperty("exchanges", exchanges);
}

TEST(RoundWeightedForest, EveryBinGroupCutsAndAveragingHolds) {
    Rng rng(2718);
    for (int trial = 0; trial < 80; ++trial) {
        const auto f = random_forest(rng, static_cast<int>(rng.uniform(2, 14)), 9, 10, 6);
        const auto inst = McfInstance::forest(f, random_forest_paths(rng, f, static_cast<int>(rng.uniform(1, 6))));
        const auto frac = solve(forest_mcf_lp(inst));
        const auto xhat = scale_and_cap(frac.x, 2).dense(f.vertex_count());
        const auto groups = enumerate_bin_groups(f, xhat, forest_distances(f, xhat));
        Rational averaged = 0;
        for (int v = 0; v < f.vertex_count(); ++v) averaged += xhat[v] * f.weight(v);
        Weight best = groups.front().weight;
        for (const auto& g : groups) {
            EXPECT_TRUE(is_multicut(inst, g.members)) << "group [" << g.lo << ", " << g.hi << ")";
            best = std::min(best, g.weight);
        }
        EXPECT_LE(Rational(best), averaged);
        const auto cut = round_weighted_forest(inst, frac);
        EXPECT_EQ(cut.total_weight(), best);
        EXPECT_TRUE(is_multicut(inst, cut.members()));
        EXPECT_LE(Rational(cut.total_weight()), 2 * frac.objective_value);
        EXPECT_LE(frac.objective_value, Rational(exact_multicut(inst).total_weight()));
    }
}

TEST(VcToMcfStar, Examples) {
    const auto edge = vc_to_mcf_star(path_graph(2));
    EXPECT_EQ(edge.graph.vertex_count(), 3);
    EXPECT_EQ(edge.graph.weight(2), 2);
    EXPECT_EQ(edge.cut_paths, (std::vector<Path>{Path{{0, 2, 1}}}));

    const auto tri = vc_to_mcf_star(cycle_graph(3));
    EXPECT_EQ(tri.graph.vertex_count(), 4);
    EXPECT_EQ(tri.cut_paths.size(), 3U);
    EXPECT_EQ(exact_multicut(tri).total_weight(), 2);
    EXPECT_EQ(min_weight_vertex_cover(cycle_graph(3)).total_weight(), 2);

    EXPECT_TRUE(vc_to_mcf_star(WeightedGraph(3, {})).cut_paths.empty());
}

TEST(VcToMcfStar, LeafSetsAreCoversExactly) {
    Rng rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = static_cast<int>(rng.uniform(2, 6));
        const auto g = random_connected_graph(rng, n, static_cast<int>(rng.uniform(n - 1, 8)), 4);
        const auto inst = vc_to_mcf_star(g);
        for (unsigned mask = 0; mask < (1U << n); ++mask) {
            std::vector<int> leaves;
            for (int v = 0; v < n; ++v) {
                if (mask >> v & 1U) leaves.push_back(v);
            }
            EXPECT_EQ(is_multicut(inst, leaves), is_vertex_cover(g, leaves));
        }
        EXPECT_EQ(exact_multicut(inst).total_weight(), min_weight_vertex_cover(g).total_weight());
    }
}
