#include "test_support.hpp"
#include "trackcut/errors.hpp"
#include "trackcut/ftfvs.hpp"
#include "trackcut/fvs.hpp"
#include "trackcut/generators.hpp"
#include "trackcut/oracles.hpp"

#include <gtest/gtest.h>

using namespace trackcut;
using namespace trackcut::testing;

namespace {

PathGroup grp(std::vector<std::vector<int>> paths) {
    std::vector<Path> ps;
    for (auto& p : paths) ps.push_back(Path{std::move(p)});
    return canonical_group(std::move(ps));
}

}  // namespace

TEST(FtfvsInstance, ValidatesR) {
    EXPECT_THROW(FtfvsInstance(cycle_graph(5), 0), std::invalid_argument);
    EXPECT_THROW(FtfvsInstance(cycle_graph(5), 5), std::invalid_argument);
    EXPECT_NO_THROW(FtfvsInstance(cycle_graph(8), 5, FtfvsOptions{6}));
}

TEST(CheckFeasible, Examples) {
    EXPECT_FALSE(check_feasible(FtfvsInstance(cycle_graph(3), 3)));
    EXPECT_TRUE(check_feasible(FtfvsInstance(cycle_graph(3), 2)));
    EXPECT_TRUE(check_feasible(FtfvsInstance(path_graph(5), 4)));
}

TEST(EnumerateFamily, Examples) {
    const FtfvsInstance forest(path_graph(4), 2);
    EXPECT_TRUE(enumerate_family(forest, VertexSelection(path_graph(4), {})).empty());

    const auto c5 = cycle_graph(5);
    const VertexSelection s(c5, {0});
    const auto f1 = enumerate_family(FtfvsInstance(c5, 1), s);
    EXPECT_EQ(f1.groups, (std::vector<PathGroup>{grp({{1, 2, 3, 4}})}));
    ASSERT_EQ(f1.provenance.size(), 1U);
    EXPECT_EQ(f1.provenance[0].distinguished, (std::vector<int>{0}));
    EXPECT_TRUE(f1.provenance[0].excluded.empty());

    const auto f2 = enumerate_family(FtfvsInstance(c5, 2), s);
    EXPECT_EQ(group_set(f2), (std::set<PathGroup>{grp({{2, 3, 4}}), grp({{1}, {3, 4}}), grp({{1, 2}, {4}}),
                                                  grp({{1, 2, 3}})}));
    EXPECT_THROW(enumerate_family(FtfvsInstance(c5, 1), VertexSelection(c5, {})), std::invalid_argument);
}

TEST(EnumerateFamily, ShortCycleIsInfeasible) {
    const auto c4 = cycle_graph(4);
    EXPECT_THROW(enumerate_family(FtfvsInstance(c4, 4), VertexSelection(c4, {0})), InfeasibleInstance);
}

TEST(BuildLp, Examples) {
    const auto c5 = cycle_graph(5);
    const VertexSelection s(c5, {0});
    const auto empty = build_lp_s_tuples(c5, s, ConstraintFamily{});
    EXPECT_EQ(solve(empty).objective_value, 0);
    EXPECT_EQ(empty.variables(), (std::vector<int>{1, 2, 3, 4}));

    const auto lp = build_lp_s_tuples(c5, s, enumerate_family(FtfvsInstance(c5, 1), s));
    EXPECT_EQ(lp.constraints(), (std::vector<std::vector<int>>{{1, 2, 3, 4}}));
    EXPECT_EQ(solve(lp).objective_value, 1);

    WeightedGraph two(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    ConstraintFamily fam;
    fam.groups = {grp({{1, 2}}), grp({{4, 5}})};
    fam.provenance.resize(2);
    EXPECT_EQ(solve(build_lp_s_tuples(two, VertexSelection(two, {0, 3}), fam)).objective_value, 2);
}

TEST(SolveFtfvs, Examples) {
    EXPECT_TRUE(solve_ftfvs(FtfvsInstance(path_graph(6), 3)).empty());
    const auto c5 = solve_ftfvs(FtfvsInstance(cycle_graph(5), 1));
    EXPECT_EQ(c5.size(), 2U);
    EXPECT_EQ(exact_ftfvs(FtfvsInstance(cycle_graph(5), 1))->total_weight(), 2);
    WeightedGraph two(8, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7}});
    EXPECT_EQ(solve_ftfvs(FtfvsInstance(two, 1)).total_weight(), 4);
}

TEST(SolveFtfvs, InfeasibleCarriesShortestCycle) {
    try {
        solve_ftfvs(FtfvsInstance(complete_graph(4), 3));
        FAIL() << "expected InfeasibleInstance";
    } catch (const InfeasibleInstance& e) {
        EXPECT_EQ(e.witness().size(), 3U);
        EXPECT_TRUE(is_simple_cycle(complete_graph(4), Path{e.witness()}));
    }
}

TEST(VerifyFtfvs, Examples) {
    const FtfvsInstance c5(cycle_graph(5), 1);
    EXPECT_TRUE(verify_ftfvs(c5, VertexSelection(cycle_graph(5), {0, 2})));
    EXPECT_FALSE(verify_ftfvs(c5, VertexSelection(cycle_graph(5), {0})));
    const auto violation = ftfvs_violation(c5, std::vector<int>{0});
    ASSERT_TRUE(violation);
    EXPECT_EQ(violation->size(), 5U);
    const FtfvsInstance k4(complete_graph(4), 1);
    EXPECT_TRUE(verify_ftfvs(k4, VertexSelection(complete_graph(4), {0, 1, 2})));
    EXPECT_FALSE(verify_ftfvs(k4, VertexSelection(complete_graph(4), {0, 1})));
}

TEST(VerifyFtfvs, MatchesLiteralDefinition) {
    Rng rng(1001);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = static_cast<int>(rng.uniform(3, 9));
        const auto g = random_connected_graph(rng, n, static_cast<int>(rng.uniform(n - 1, 2 * n)), 1);
        const int r = static_cast<int>(rng.uniform(1, 3));
        std::vector<int> cand;
        for (int v = 0; v < n; ++v) {
            if (rng.chance(1, 2)) cand.push_back(v);
        }
        const FtfvsInstance inst(g, r);
        const bool expected = literal_verify_ftfvs(g, r, cand);
        EXPECT_EQ(verify_ftfvs(inst, VertexSelection(g, cand)), expected) << "trial " << trial;
        if (const auto c = ftfvs_violation(inst, cand)) {
            EXPECT_TRUE(is_simple_cycle(g, *c));
            int hits = 0;
            for (int v : c->vertices) hits += std::binary_search(cand.begin(), cand.end(), v) ? 1 : 0;
            EXPECT_LE(hits, r);
        }
    }
}

TEST(EnumerateFamily, MatchesCycleEnumerationAndReconstitutes) {
    Rng rng(77);
    for (int trial = 0; trial < 80; ++trial) {
        const int r = static_cast<int>(rng.uniform(1, 3));
        const int n = static_cast<int>(rng.uniform(r + 2, 9));
        const auto g = random_girth_graph(rng, n, r, 2 * n, 1);
        const FtfvsInstance inst(g, r);
        const auto s = approx_fvs(g);
        const auto fam = enumerate_family(inst, s);
        EXPECT_EQ(group_set(fam), brute_force_family(g, r, s)) << "trial " << trial;
        ASSERT_EQ(fam.groups.size(), fam.provenance.size());
        for (std::size_t i = 0; i < fam.size(); ++i) {
            const auto& p = fam.provenance[i];
            ASSERT_TRUE(is_simple_cycle(g, p.cycle));
            EXPECT_EQ(p.cycle.front(), p.distinguished.front());
            EXPECT_EQ(p.distinguished.size() + p.excluded.size(), static_cast<std::size_t>(r));
            std::vector<char> removed(n, 0);
            for (int v : p.distinguished) {
                EXPECT_TRUE(s.contains(v));
                removed[v] = 1;
            }
            for (int v : p.excluded) {
                EXPECT_FALSE(s.contains(v));
                removed[v] = 1;
            }
            EXPECT_EQ(canonical_group(cycle_components(p.cycle, removed)), fam.groups[i]);
        }
    }
}

TEST(SolveFtfvs, PipelineProperties) {
    Rng rng(555);
    for (int trial = 0; trial < 60; ++trial) {
        const int r = static_cast<int>(rng.uniform(1, 3));
        const int n = static_cast<int>(rng.uniform(r + 2, 9));
        const bool weighted = trial % 2 == 1;
        const auto g = random_girth_graph(rng, n, r, 2 * n, weighted ? 5 : 1);
        const FtfvsInstance inst(g, r);
        const auto res = solve_ftfvs_detailed(inst);
        ASSERT_TRUE(verify_ftfvs(inst, res.solution));
        EXPECT_TRUE(literal_verify_ftfvs(g, r, res.solution.members()));
        const auto opt = exact_ftfvs(inst);
        ASSERT_TRUE(opt);
        EXPECT_LE(res.lp.objective_value, Rational(opt->total_weight()));
        const Weight factor = weighted ? 2 + 2 * r : 2 + r;
        EXPECT_LE(res.solution.total_weight(), factor * opt->total_weight());
        // scaled LP covers every surviving path
        const auto y = scale_and_cap(res.lp.x, r);
        for (const auto& p : res.cut_paths) {
            EXPECT_GE(y.sum_over(p.vertices), 1);
            EXPECT_GE(res.lp.x.sum_over(p.vertices), Rational(1, r));
        }
        for (int v : res.fvs.members()) EXPECT_TRUE(res.solution.contains(v));
        for (int v : res.multicut.cut.members()) EXPECT_TRUE(res.solution.contains(v));
        EXPECT_EQ(res.stages.size(), 7U);
    }
}

TEST(HardnessGadget, SingleEdge) {
    const auto gadget = gen_hardness_gadget(path_graph(2), 1, 2);
    const auto& g = gadget.instance.graph();
    EXPECT_EQ(g.vertex_count(), 2 + 5 + 3);
    EXPECT_EQ(gadget.k_prime, 1 + 3 + 5);
    EXPECT_EQ(gadget.added.size(), 8U);
    EXPECT_GE(*girth(g), 3);
    EXPECT_EQ(gadget.instance.r(), 2);
}

TEST(HardnessGadget, EdgelessGraph) {
    const auto gadget = gen_hardness_gadget(WeightedGraph(3, {}), 0, 2);
    const auto& g = gadget.instance.graph();
    EXPECT_EQ(g.vertex_count(), 6);
    EXPECT_EQ(gadget.k_prime, 3);
    // x_1 is the first cycle vertex, joined to every original
    for (int v = 0; v < 3; ++v) EXPECT_TRUE(g.has_edge(v, 3));
    EXPECT_TRUE(g.has_edge(3, 4) && g.has_edge(4, 5) && g.has_edge(3, 5));
}

TEST(HardnessGadget, RejectsSmallR) {
    EXPECT_THROW(gen_hardness_gadget(path_graph(2), 1, 1), std::invalid_argument);
}

TEST(HardnessGadget, GirthAndEquivalenceOnSmallGraphs) {
    const std::vector<WeightedGraph> graphs{path_graph(2), path_graph(3), cycle_graph(3),
                                            WeightedGraph(4, {{0, 1}, {2, 3}})};
    for (int r : {2, 3}) {
        for (const auto& vc : graphs) {
            const int tau = static_cast<int>(exact_vertex_cover(vc, vc.vertex_count()).witness.size());
            for (int k = 0; k <= vc.vertex_count(); ++k) {
                const auto gadget = gen_hardness_gadget(vc, k, r);
                EXPECT_GE(*girth(gadget.instance.graph()), r + 1);
                const auto opt = exact_ftfvs(gadget.instance);
                ASSERT_TRUE(opt);
                EXPECT_EQ(tau <= k, static_cast<int>(opt->size()) <= gadget.k_prime)
                    << "r=" << r << " k=" << k;
            }
        }
    }
}
