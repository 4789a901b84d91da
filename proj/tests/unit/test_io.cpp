#include "test_support.hpp"
#include "trackcut/generators.hpp"
#include "trackcut/io.hpp"

#include <gtest/gtest.h>

using namespace trackcut;

namespace {

int error_line(const std::string& text) {
    try {
        parse_instance(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

}  // namespace

TEST(ParseInstance, MinimalFile) {
    const auto f = parse_instance("g 2 1\ne 1 2\n");
    EXPECT_EQ(f.graph.vertex_count(), 2);
    EXPECT_EQ(f.graph.edges(), (std::vector<Edge>{{0, 1}}));
    EXPECT_FALSE(f.st);
    EXPECT_FALSE(f.r);
}

TEST(ParseInstance, Annotations) {
    const auto f = parse_instance("c hello world\ng 3 2\nw 2 3 4\n\ne 1 2\ne 2 3\nst 1 3\nr 2\npair 1 3\npair 2 3\n");
    EXPECT_EQ(f.graph.weights(), (std::vector<Weight>{2, 3, 4}));
    EXPECT_EQ(f.st, (std::pair<int, int>{0, 2}));
    EXPECT_EQ(f.r, 2);
    EXPECT_EQ(f.pairs, (std::vector<TerminalPair>{{0, 2}, {1, 2}}));
    EXPECT_EQ(f.comments, (std::vector<std::string>{"hello world"}));
}

TEST(ParseInstance, Diagnostics) {
    EXPECT_EQ(error_line("g 2 1\ne 1 1\n"), 2);
    EXPECT_EQ(error_line("g 2 1\nw 1 0\ne 1 2\n"), 2);
    EXPECT_EQ(error_line("e 1 2\n"), 1);
    EXPECT_EQ(error_line("g 2 2\ne 1 2\ne 2 1\n"), 3);
    EXPECT_EQ(error_line("g 2 1\ne 1 3\n"), 2);
    EXPECT_EQ(error_line("g 3 1\nw 1 1\ne 1 2\n"), 2);
    EXPECT_EQ(error_line("g 2 1\ne 1 2\nst 1 1\n"), 3);
    EXPECT_EQ(error_line("g 2 1\ne 1 2\nbogus\n"), 3);
    EXPECT_NE(error_line("g 3 2\ne 1 2\n"), -1);
    EXPECT_EQ(error_line("g x 1\n"), 1);
    try {
        parse_instance("g 2 1\ne 1 1\n");
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("self-loop"), std::string::npos);
    }
    try {
        parse_instance("g 2 1\nw 1 0\ne 1 2\n");
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("nonpositive"), std::string::npos);
    }
}

TEST(RenderInstance, OmitsUnitWeights) {
    InstanceFile f{trackcut::testing::path_graph(3), std::pair{0, 2}, std::nullopt, {}, {}};
    EXPECT_EQ(render_instance(f), "g 3 2\ne 1 2\ne 2 3\nst 1 3\n");
}

TEST(RenderInstance, RoundTripsGeneratedInstances) {
    Rng rng(123);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = static_cast<int>(rng.uniform(2, 12));
        InstanceFile f;
        f.graph = random_connected_graph(rng, n, static_cast<int>(rng.uniform(n - 1, 3 * n)), trial % 3 == 0 ? 1 : 9);
        if (rng.chance(1, 2)) f.st = std::pair{0, n - 1};
        if (rng.chance(1, 2)) f.r = static_cast<int>(rng.uniform(1, 4));
        f.pairs = random_pairs(rng, n, static_cast<int>(rng.uniform(0, 3)));
        if (rng.chance(1, 3)) f.comments = {"seed " + std::to_string(trial)};
        const auto text = render_instance(f);
        EXPECT_EQ(parse_instance(text), f) << text;
        EXPECT_EQ(render_instance(parse_instance(text)), text);
    }
}

TEST(Generators, SeedDeterminism) {
    Rng a(7);
    Rng b(7);
    EXPECT_EQ(random_connected_graph(a, 9, 14, 5), random_connected_graph(b, 9, 14, 5));
    EXPECT_EQ(random_k_tree(a, 10, 3, 2), random_k_tree(b, 10, 3, 2));
    EXPECT_EQ(random_girth_graph(a, 10, 3, 20), random_girth_graph(b, 10, 3, 20));
    Rng c(8);
    EXPECT_NE(random_connected_graph(a, 9, 14, 5), random_connected_graph(c, 9, 14, 5));
}

TEST(Generators, ShapesHoldTheirPromises) {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = static_cast<int>(rng.uniform(1, 12));
        const auto g = random_connected_graph(rng, n, 2 * n, 3);
        EXPECT_EQ(g.vertex_count(), n);
        for (int v = 1; v < n; ++v) EXPECT_TRUE(connected(g, 0, v));
        EXPECT_TRUE(is_forest(random_forest(rng, n, 1, 2)));
        const int r = static_cast<int>(rng.uniform(1, 4));
        const auto gg = girth(random_girth_graph(rng, n, r, 3 * n));
        EXPECT_TRUE(!gg || *gg > r);
        for (Weight w : random_weights(rng, n, 4)) {
            EXPECT_GE(w, 1);
            EXPECT_LE(w, 4);
        }
    }
}
