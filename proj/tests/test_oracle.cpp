#include <gtest/gtest.h>

#include <random>

#include "sqcol/oracle.hpp"
#include "support.hpp"

using namespace sqcol;

namespace {

bool yes(const Graph& g, int q, OracleOrder order = OracleOrder::degree) {
    return brute_force_decide(g, q, 100'000'000, order).verdict == Verdict::yes;
}

}  // namespace

TEST(Oracle, Examples) {
    EXPECT_FALSE(yes(cycle_graph(5), 4));
    EXPECT_TRUE(yes(cycle_graph(5), 5));
    EXPECT_FALSE(yes(cycle_graph(7), 3));
    EXPECT_TRUE(yes(cycle_graph(7), 4));
    EXPECT_TRUE(yes(star_graph(3), 4));
    EXPECT_TRUE(yes(Graph(0), 0));
    EXPECT_FALSE(yes(Graph(1), 0));
}

TEST(Oracle, BothOrdersMatchReference) {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 400; ++it) {
        const int n = 1 + static_cast<int>(rng() % 10);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) g.add_edge(u, v);
        for (int q = 1; q <= 6; ++q) {
            const bool want = ref::square_colorable(g, q);
            EXPECT_EQ(yes(g, q), want);
            EXPECT_EQ(yes(g, q, OracleOrder::saturation), want);
        }
    }
}

TEST(Oracle, WitnessIsValid) {
    std::mt19937_64 rng(1);
    for (int it = 0; it < 200; ++it) {
        const Graph g = ref::random_connected(rng, 2 + static_cast<int>(rng() % 9));
        for (int q = 3; q <= 7; ++q) {
            const auto r = brute_force_decide(g, q);
            if (r.verdict != Verdict::yes) continue;
            ASSERT_TRUE(r.witness);
            EXPECT_TRUE(ref::valid_square_coloring(g, q, *r.witness));
        }
    }
}

TEST(Oracle, BudgetGivesTimeout) {
    const auto r = brute_force_decide(grid_graph(6, 6), 5, 10);
    EXPECT_EQ(r.verdict, Verdict::timeout);
}

TEST(Chromatic, KnownValues) {
    for (int d = 1; d <= 6; ++d) EXPECT_EQ(square_chromatic_number(star_graph(d)).value, d + 1);
    EXPECT_EQ(square_chromatic_number(cycle_graph(6)).value, 3);
    for (int n = 3; n <= 12; ++n) EXPECT_EQ(square_chromatic_number(path_graph(n)).value, 3);
    for (int n = 3; n <= 12; ++n) EXPECT_EQ(square_chromatic_number(cycle_graph(n)).value, ref::square_chromatic(cycle_graph(n)));
}

TEST(Extend, RespectsPrecoloring) {
    const Graph p4 = path_graph(4);
    EXPECT_EQ(extend_square_coloring(p4, 3, {1, 2, 0, 0}).verdict, Verdict::yes);
    EXPECT_EQ(extend_square_coloring(p4, 3, {1, 0, 1, 0}).verdict, Verdict::no);
    EXPECT_EQ(extend_square_coloring(p4, 3, {4, 0, 0, 0}).verdict, Verdict::no);
    const auto r = extend_square_coloring(p4, 4, {0, 0, 0, 4});
    ASSERT_TRUE(r.witness);
    EXPECT_EQ((*r.witness)[3], 4);
}

TEST(Enumerate, CountsProperColorings) {
    // Proper 3-colorings of a triangle: 3! = 6; of a 4-cycle: (q-1)^4 + (q-1) = 18.
    EXPECT_EQ(for_each_proper_coloring(complete_graph(3), 3, Coloring(3, 0), [](const Coloring&) { return true; }), 6u);
    EXPECT_EQ(for_each_proper_coloring(cycle_graph(4), 3, Coloring(4, 0), [](const Coloring&) { return true; }), 18u);
}
