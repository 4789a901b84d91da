#include "test_support.hpp"
#include "trackcut/errors.hpp"
#include "trackcut/generators.hpp"
#include "trackcut/oracles.hpp"
#include "trackcut/preprocess.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace trackcut;
using namespace trackcut::testing;

namespace {

// s=0, a=1, t=2, b=3
WeightedGraph square() { return cycle_graph(4); }

std::set<int> vertices_on_paths(const TrackingInstance& inst) {
    std::set<int> out;
    for (const auto& p : enumerate_st_paths(inst)) out.insert(p.vertices.begin(), p.vertices.end());
    return out;
}

std::set<Edge> edges_on_paths(const TrackingInstance& inst) {
    std::set<Edge> out;
    for (const auto& p : enumerate_st_paths(inst)) {
        for (std::size_t i = 0; i + 1 < p.size(); ++i) out.insert(make_edge(p.vertices[i], p.vertices[i + 1]));
    }
    return out;
}

// Reference: try every simple a1-b1 path, then plain reachability for a2-b2.
bool brute_two_disjoint(const WeightedGraph& g, int a1, int b1, int a2, int b2) {
    std::vector<Path> first;
    if (a1 == b1) {
        first.push_back(Path{{a1}});
    } else {
        first = enumerate_st_paths(TrackingInstance(g, a1, b1));
    }
    for (const auto& p : first) {
        const auto rest = g.without_vertices(p.vertices);
        bool blocked = false;
        for (int v : p.vertices) blocked = blocked || v == a2 || v == b2;
        if (!blocked && (a2 == b2 || connected(rest, a2, b2))) return true;
    }
    return false;
}

}  // namespace

TEST(TrackingInstance, RejectsEqualEndpoints) {
    EXPECT_THROW(TrackingInstance(path_graph(2), 0, 0), GraphError);
    EXPECT_THROW(TrackingInstance(path_graph(2), 0, 5), GraphError);
}

TEST(TwoDisjointPaths, Examples) {
    EXPECT_TRUE(two_disjoint_paths(square(), 0, 1, 3, 2));
    WeightedGraph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    EXPECT_FALSE(two_disjoint_paths(star, 1, 2, 3, 4));
    WeightedGraph two_edges(4, {{0, 1}, {2, 3}});
    EXPECT_TRUE(two_disjoint_paths(two_edges, 0, 1, 2, 3));
    const auto found = find_two_disjoint_paths(square(), 0, 1, 3, 2);
    ASSERT_TRUE(found);
    EXPECT_EQ(found->first.vertices, (std::vector<int>{0, 1}));
    EXPECT_EQ(found->second.vertices, (std::vector<int>{3, 2}));
}

TEST(TwoDisjointPaths, CapIsEnforced) {
    EXPECT_THROW(two_disjoint_paths(path_graph(70), 0, 1, 2, 3), CapExceeded);
}

TEST(VertexOnStPath, Examples) {
    EXPECT_TRUE(vertex_on_st_path(TrackingInstance(path_graph(3), 0, 2), 1));
    // triangle s=0, t=1, v=2 with pendant u=3 on v
    WeightedGraph g(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    const TrackingInstance inst(g, 0, 1);
    EXPECT_TRUE(vertex_on_st_path(inst, 2));
    EXPECT_FALSE(vertex_on_st_path(inst, 3));
    WeightedGraph apart(3, {{0, 1}});
    EXPECT_FALSE(vertex_on_st_path(TrackingInstance(apart, 0, 1), 2));
    EXPECT_TRUE(vertex_on_st_path(TrackingInstance(apart, 0, 1), 0));
    EXPECT_FALSE(vertex_on_st_path(TrackingInstance(apart, 0, 2), 0));
}

TEST(EdgeOnStPath, Examples) {
    EXPECT_TRUE(edge_on_st_path(TrackingInstance(path_graph(2), 0, 1), {0, 1}));
    const TrackingInstance sq(square(), 0, 2);
    for (const auto& e : sq.graph().edges()) EXPECT_TRUE(edge_on_st_path(sq, e));
    // triangle s=0, a=1, b=2 hanging off s; t=3 is a leaf of s
    WeightedGraph g(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
    const TrackingInstance inst(g, 0, 3);
    EXPECT_FALSE(edge_on_st_path(inst, {1, 2}));
    EXPECT_EQ(edges_on_paths(inst), (std::set<Edge>{{0, 3}}));
}

TEST(Reduce, Examples) {
    WeightedGraph isolated(3, {{0, 1}});
    const auto r1 = reduce(TrackingInstance(isolated, 0, 1));
    EXPECT_EQ(r1.kept, (std::vector<int>{0, 1}));
    EXPECT_EQ(r1.instance.graph().vertex_count(), 2);

    const TrackingInstance sq(square(), 0, 2);
    const auto r2 = reduce(sq);
    EXPECT_EQ(r2.instance, sq);
    EXPECT_EQ(r2.kept, (std::vector<int>{0, 1, 2, 3}));

    // triangle s=0, t=1, a=2 with chain a-b-c (b=3, c=4)
    WeightedGraph chain(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}}, {1, 2, 3, 4, 5});
    const auto r3 = reduce(TrackingInstance(chain, 0, 1));
    EXPECT_EQ(r3.kept, (std::vector<int>{0, 1, 2}));
    EXPECT_EQ(r3.instance.graph().edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}}));
    EXPECT_EQ(r3.instance.graph().weights(), (std::vector<Weight>{1, 2, 3}));
    EXPECT_EQ(r3.to_original(std::vector<int>{2}), (std::vector<int>{2}));

    WeightedGraph apart(3, {{0, 1}});
    EXPECT_THROW(reduce(TrackingInstance(apart, 0, 2)), Error);
}

TEST(Reduce, DropsTriangleHangingOffCutVertex) {
    // s=0 - 1 - t=2, triangle 1,3,4 attached at the cut vertex 1
    WeightedGraph g(5, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {3, 4}});
    const auto r = reduce(TrackingInstance(g, 0, 2));
    EXPECT_EQ(r.kept, (std::vector<int>{0, 1, 2}));
}

TEST(LocalStPair, Examples) {
    const TrackingInstance sq(square(), 0, 2);
    const std::vector<int> all{0, 1, 2, 3};
    EXPECT_TRUE(is_local_st_pair(sq, all, 0, 2));

    // C6 with s=0, x1=1, u=2, y=3, v=4, t=x2=5
    const TrackingInstance c6(cycle_graph(6), 0, 5);
    const std::vector<int> sub{2, 3, 4};
    EXPECT_TRUE(is_local_st_pair(c6, sub, 2, 4));
    EXPECT_FALSE(is_local_st_pair(c6, sub, 3, 4));
    const auto paths = local_st_pair_paths(c6, sub, 2, 4);
    ASSERT_TRUE(paths);
    EXPECT_EQ(paths->first.vertices, (std::vector<int>{0, 1, 2}));
    EXPECT_EQ(paths->second.vertices, (std::vector<int>{4, 5}));

    // every neighbour of s lies inside the subgraph: s=0 adjacent to 1,2 only
    WeightedGraph g(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}});
    const TrackingInstance inst(g, 0, 4);
    EXPECT_FALSE(is_local_st_pair(inst, std::vector<int>{1, 2, 3}, 3, 1));
}

TEST(PreprocessProperties, AgreeWithPathEnumeration) {
    Rng rng(99);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = static_cast<int>(rng.uniform(2, 8));
        const auto g = random_connected_graph(rng, n, static_cast<int>(rng.uniform(n - 1, 2 * n)), 1);
        const int s = static_cast<int>(rng.uniform(0, n - 1));
        int t = static_cast<int>(rng.uniform(0, n - 2));
        if (t >= s) ++t;
        const TrackingInstance inst(g, s, t);
        const auto on_v = vertices_on_paths(inst);
        const auto on_e = edges_on_paths(inst);
        for (int v = 0; v < n; ++v) EXPECT_EQ(vertex_on_st_path(inst, v), on_v.contains(v));
        for (const auto& e : g.edges()) EXPECT_EQ(edge_on_st_path(inst, e), on_e.contains(e));

        const auto red = reduce(inst);
        EXPECT_EQ(red.kept, std::vector<int>(on_v.begin(), on_v.end()));
        EXPECT_EQ(red.instance.graph().edge_count(), on_e.size());
        const auto again = reduce(red.instance);
        EXPECT_EQ(again.instance, red.instance);
        const auto& rg = red.instance.graph();
        for (int v = 0; v < rg.vertex_count(); ++v) EXPECT_TRUE(vertex_on_st_path(red.instance, v));
        for (const auto& e : rg.edges()) EXPECT_TRUE(edge_on_st_path(red.instance, e));
    }
}

TEST(PreprocessProperties, TwoDisjointPathsMatchesBruteForce) {
    Rng rng(5);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = static_cast<int>(rng.uniform(4, 8));
        const auto g = random_connected_graph(rng, n, static_cast<int>(rng.uniform(n - 1, 2 * n)), 1);
        std::vector<int> ids(n);
        for (int i = 0; i < n; ++i) ids[i] = i;
        rng.shuffle(ids);
        const int a1 = ids[0];
        const int b1 = rng.chance(1, 5) ? a1 : ids[1];
        const int a2 = ids[2];
        const int b2 = rng.chance(1, 5) ? a2 : ids[3];
        const bool expected = brute_two_disjoint(g, a1, b1, a2, b2);
        EXPECT_EQ(two_disjoint_paths(g, a1, b1, a2, b2), expected);
        EXPECT_EQ(two_disjoint_paths(g, a2, b2, a1, b1), expected);
        if (const auto found = find_two_disjoint_paths(g, a1, b1, a2, b2)) {
            EXPECT_EQ(found->first.front(), a1);
            EXPECT_EQ(found->first.back(), b1);
            EXPECT_EQ(found->second.front(), a2);
            EXPECT_EQ(found->second.back(), b2);
            EXPECT_TRUE(found->first.size() == 1 || is_simple_path(g, found->first));
            EXPECT_TRUE(found->second.size() == 1 || is_simple_path(g, found->second));
            EXPECT_TRUE(is_vertex_disjoint(PathGroup{{found->first, found->second}}));
        }
    }
}

TEST(PreprocessProperties, LocalPairImpliesDisjointPathsAfterReduce) {
    Rng rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = static_cast<int>(rng.uniform(3, 8));
        const auto g = random_connected_graph(rng, n, static_cast<int>(rng.uniform(n, 2 * n)), 1);
        const auto red = reduce(TrackingInstance(g, 0, n - 1));
        const auto& rg = red.instance.graph();
        const int s = red.instance.source();
        const int t = red.instance.target();
        for (const auto& c : enumerate_cycles(rg)) {
            for (int a : c.vertices) {
                for (int b : c.vertices) {
                    if (a == b || !is_local_st_pair(red.instance, c.vertices, a, b)) continue;
                    if (a == t || b == s) continue;
                    EXPECT_TRUE(two_disjoint_paths(rg, s, a, b, t));
                }
            }
        }
    }
}
