#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "sqcol/errors.hpp"
#include "sqcol/graph.hpp"
#include "support.hpp"

using namespace sqcol;

TEST(Graph, DropsLoopsAndDuplicates) {
    Graph g(3);
    EXPECT_TRUE(g.add_edge(0, 1));
    EXPECT_FALSE(g.add_edge(1, 0));
    EXPECT_FALSE(g.add_edge(2, 2));
    EXPECT_EQ(g.m(), 1u);
    EXPECT_TRUE(g.adjacent(1, 0));
    EXPECT_FALSE(g.adjacent(1, 2));
}

TEST(Square, PathBecomesTriangle) {
    const Graph sq = square_graph(path_graph(3));
    EXPECT_EQ(sq, complete_graph(3));
}

TEST(Square, StarBecomesClique) { EXPECT_EQ(square_graph(star_graph(4)), complete_graph(5)); }

TEST(Square, SixCycle) {
    const Graph sq = square_graph(cycle_graph(6));
    EXPECT_EQ(sq.m(), 12u);
    for (int i = 0; i < 6; ++i)
        for (int d : {1, 2}) EXPECT_TRUE(sq.adjacent(i, (i + d) % 6));
}

TEST(Square, MatchesDistanceMatrix) {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 200; ++it) {
        const int n = 1 + static_cast<int>(rng() % 12);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 4 == 0) g.add_edge(u, v);
        const auto d = ref::distances(g);
        const Graph sq = square_graph(g);
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v)
                if (u != v) EXPECT_EQ(sq.adjacent(u, v), ref::close(d[u][v]));
            EXPECT_EQ(static_cast<int>(dist2_closed_neighborhood(g, u).size()), sq.degree(u) + 1);
            const auto bfs = bfs_distances(g, u);
            for (int v = 0; v < n; ++v) EXPECT_EQ(bfs[v], d[u][v]);
        }
    }
}

TEST(Dist2, Neighborhoods) {
    EXPECT_EQ(dist2_closed_neighborhood(Graph(1), 0), std::vector<int>{0});
    EXPECT_EQ(dist2_closed_neighborhood(star_graph(4), 0).size(), 5u);
    EXPECT_EQ(dist2_closed_neighborhood(cycle_graph(6), 0), (std::vector<int>{0, 1, 2, 4, 5}));
}

TEST(Verify, SixCycle) {
    const Graph c6 = cycle_graph(6);
    Coloring good, bad;
    for (int i = 0; i < 6; ++i) {
        good.push_back(i % 3 + 1);
        bad.push_back(i % 2 + 1);
    }
    EXPECT_FALSE(verify_square_coloring(c6, 3, good));
    const auto v = verify_square_coloring(c6, 2, bad);
    ASSERT_TRUE(v);
    EXPECT_EQ(v->u, 0);
    EXPECT_EQ(v->v, 2);
    EXPECT_EQ(v->distance, 2);
    EXPECT_FALSE(verify_square_coloring(Graph(1), 1, {1}));
}

TEST(Verify, ColorOutOfRange) {
    const auto v = verify_square_coloring(path_graph(2), 2, {1, 3});
    ASSERT_TRUE(v);
    EXPECT_EQ(v->distance, 0);
}

TEST(Verify, AgreesWithReference) {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 500; ++it) {
        const Graph g = ref::random_connected(rng, 2 + static_cast<int>(rng() % 7));
        const int q = 1 + static_cast<int>(rng() % 6);
        Coloring c(g.n());
        for (int& x : c) x = 1 + static_cast<int>(rng() % q);
        EXPECT_EQ(!verify_square_coloring(g, q, c), ref::valid_square_coloring(g, q, c));
    }
}

TEST(GrFormat, RoundTrip) {
    const Graph g = grid_graph(3, 4);
    std::stringstream ss;
    write_gr(ss, g, {"answer yes"});
    const auto f = read_gr(ss);
    EXPECT_EQ(f.graph, g);
    ASSERT_EQ(f.comments.size(), 1u);
    EXPECT_EQ(f.comments[0], "answer yes");
}

TEST(GrFormat, RejectsMalformed) {
    for (const char* text : {"1 2\n", "p tw 2 1\n1 3\n", "p tw 2 2\n1 2\n", "p td 2 1\n1 2\n"}) {
        std::stringstream ss(text);
        EXPECT_THROW(read_gr(ss), input_error) << text;
    }
}

TEST(ColoringFormat, RoundTrip) {
    std::stringstream ss;
    write_coloring(ss, {2, 1, 3});
    EXPECT_EQ(read_coloring(ss, 3), (Coloring{2, 1, 3}));
    std::stringstream missing("1 1\n");
    EXPECT_THROW(read_coloring(missing, 2), input_error);
}

TEST(RotationFormat, RoundTrip) {
    RotationSystem rot{{{1, 2}, {0, 2}, {0, 1}}};
    std::stringstream ss;
    write_rotation(ss, rot);
    EXPECT_EQ(read_rotation(ss, 3).order, rot.order);
    EXPECT_NO_THROW(check_rotation(complete_graph(3), rot));
}

TEST(Components, Induced) {
    Graph g(5, {{0, 1}, {3, 4}});
    EXPECT_EQ(connected_components(g).size(), 3u);
    EXPECT_FALSE(is_connected(g));
    const auto sub = induced_subgraph(g, {1, 0, 4});
    EXPECT_EQ(sub.graph.n(), 3);
    EXPECT_EQ(sub.graph.m(), 1u);
}
