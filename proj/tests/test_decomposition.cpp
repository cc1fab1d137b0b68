#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "sqcol/decomposition.hpp"
#include "sqcol/errors.hpp"
#include "support.hpp"

using namespace sqcol;

namespace {

// Independent check of the three decomposition conditions against graph h.
bool covers(const Graph& h, const TreeDecomposition& td) {
    const int n = h.n();
    std::vector<std::vector<int>> where(n);
    for (int b = 0; b < td.size(); ++b)
        for (int v : td.bags[b]) where[v].push_back(b);
    for (int v = 0; v < n; ++v)
        if (where[v].empty()) return false;
    for (auto [u, v] : h.edges()) {
        bool found = false;
        for (int b : where[u])
            for (int x : td.bags[b]) found = found || x == v;
        if (!found) return false;
    }
    if (static_cast<int>(td.tree_edges.size()) != td.size() - 1) return false;
    Graph tree(td.size(), td.tree_edges);
    if (td.size() > 0 && !is_connected(tree)) return false;
    for (int v = 0; v < n; ++v) {
        if (!is_connected(induced_subgraph(tree, where[v]).graph)) return false;
    }
    return true;
}

}  // namespace

TEST(Validate, SmallCases) {
    const Graph p3 = path_graph(3);
    TreeDecomposition one{{{0, 1, 2}}, {}, 0};
    EXPECT_TRUE(validate(p3, one).ok());
    EXPECT_EQ(one.width(), 2);
    TreeDecomposition two{{{0, 1}, {1, 2}}, {{0, 1}}, 0};
    EXPECT_TRUE(validate(p3, two).ok());
    EXPECT_EQ(two.width(), 1);
    TreeDecomposition broken{{{0, 1}, {2}}, {{0, 1}}, 0};
    const auto v = validate(p3, broken);
    ASSERT_FALSE(v.ok());
    EXPECT_EQ(v.problems[0].kind, TdProblem::Kind::uncovered_edge);
}

TEST(Validate, DisconnectedOccurrence) {
    TreeDecomposition td{{{0, 1}, {1, 2}, {0, 2}}, {{0, 1}, {1, 2}}, 0};
    EXPECT_FALSE(validate(cycle_graph(3), td).ok());
}

TEST(Heuristic, KnownWidths) {
    EXPECT_EQ(heuristic_decompose(path_graph(10)).width(), 1);
    EXPECT_EQ(heuristic_decompose(star_graph(6)).width(), 1);
    for (int n = 3; n <= 12; ++n) EXPECT_EQ(heuristic_decompose(cycle_graph(n)).width(), 2);
    EXPECT_EQ(heuristic_decompose(complete_graph(5)).width(), 4);
}

TEST(Heuristic, ValidOnRandomGraphs) {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 200; ++it) {
        const Graph g = ref::random_connected(rng, 2 + static_cast<int>(rng() % 15));
        for (std::uint64_t seed : {0ull, 7ull}) {
            const auto td = heuristic_decompose(g, seed);
            EXPECT_TRUE(validate(g, td).ok());
            EXPECT_TRUE(covers(g, td));
        }
    }
}

TEST(Nice, SingleBagChain) {
    TreeDecomposition td{{{0, 1}}, {}, 0};
    const auto ntd = make_nice(td);
    EXPECT_EQ(check_nice(ntd), "");
    std::vector<NodeKind> kinds;
    for (const auto& node : ntd.nodes) kinds.push_back(node.kind);
    EXPECT_EQ(kinds, (std::vector<NodeKind>{NodeKind::leaf, NodeKind::introduce, NodeKind::introduce,
                                            NodeKind::forget, NodeKind::forget}));
    EXPECT_EQ(ntd.nodes[1].vertex, 0);
    EXPECT_EQ(ntd.nodes[2].vertex, 1);
    EXPECT_EQ(ntd.nodes[3].vertex, 0);
}

TEST(Nice, EqualBagsNoJoin) {
    TreeDecomposition td{{{0, 1}, {0, 1}}, {{0, 1}}, 0};
    for (const auto& node : make_nice(td).nodes) EXPECT_NE(node.kind, NodeKind::join);
}

TEST(Nice, WidthPreservedAndValid) {
    std::mt19937_64 rng(9);
    for (int it = 0; it < 100; ++it) {
        const Graph g = ref::random_connected(rng, 2 + static_cast<int>(rng() % 12));
        const auto td = heuristic_decompose(g, rng());
        const auto ntd = make_nice(td);
        EXPECT_EQ(check_nice(ntd), "");
        EXPECT_EQ(ntd.width(), td.width());
        EXPECT_TRUE(validate(g, ntd.as_td()).ok());
        for (std::size_t i = 0; i < ntd.nodes.size(); ++i)
            for (int c : ntd.nodes[i].children) EXPECT_LT(c, static_cast<int>(i));
    }
}

TEST(TdFormat, RoundTripAndRootLine) {
    const Graph g = grid_graph(3, 3);
    auto td = heuristic_decompose(g);
    td.root = td.size() - 1;
    std::stringstream ss;
    write_td(ss, td, g.n());
    int n = 0;
    const auto back = read_td(ss, &n);
    EXPECT_EQ(n, 9);
    EXPECT_EQ(back.bags, td.bags);
    EXPECT_EQ(back.root, td.root);
    EXPECT_TRUE(validate(g, back).ok());
}

TEST(TdFormat, RejectsBadVertex) {
    std::stringstream ss("s td 1 2 2\nb 1 1 3\n");
    EXPECT_THROW(read_td(ss), input_error);
}

TEST(Layered, ValidOnSquare) {
    std::vector<Graph> graphs{path_graph(30), star_graph(8), grid_graph(5, 5), grid_graph(7, 4)};
    for (const auto& g : graphs) {
        const auto rep = layered_square_decomposition(g);
        EXPECT_TRUE(validate(square_graph(g), rep.td).ok());
        EXPECT_TRUE(covers(square_graph(g), rep.td));
        EXPECT_NEAR(rep.bound, 8 * std::sqrt(g.n() * static_cast<double>(g.max_degree())), 1e-9);
    }
}
