#include <gtest/gtest.h>

#include <functional>

#include "sqcol/errors.hpp"
#include "sqcol/generators.hpp"
#include "sqcol/oracle.hpp"
#include "sqcol/tw_dp.hpp"

using namespace sqcol;

namespace {

struct Family {
    const char* name;
    Graph g;
    RotationSystem rot;
};

std::vector<Family> families() {
    return {{"k3", complete_graph(3), k3_rotation()},
            {"k4", complete_graph(4), k4_rotation()},
            {"prism", prism_graph(), prism_rotation()}};
}

std::size_t count_colorings(const Graph& g, int q, const std::function<bool(const Coloring&)>& keep) {
    std::size_t n = 0;
    for_each_proper_coloring(square_graph(g), q, Coloring(g.n(), 0), [&](const Coloring& c) {
        n += keep(c);
        return true;
    });
    return n;
}

}  // namespace

TEST(Faces, EulerOnFamilies) {
    for (const auto& f : families()) {
        const auto fs = trace_faces(f.g, f.rot);
        EXPECT_TRUE(euler_planar(f.g, fs)) << f.name;
        EXPECT_EQ(static_cast<int>(fs.faces.size()), 2 - f.g.n() + static_cast<int>(f.g.m())) << f.name;
        EXPECT_EQ(fs.darts.size(), 2 * f.g.m());
    }
}

TEST(Faces, RejectsNonPlanarRotation) {
    RotationSystem bad{{{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}};
    EXPECT_FALSE(euler_planar(complete_graph(4), trace_faces(complete_graph(4), bad)));
}

TEST(CoveringCycle, K4AndPrism) {
    for (const auto& f : families()) {
        if (f.g.n() < 4) continue;
        const auto c = edge_covering_cycle(f.g, f.rot);
        EXPECT_TRUE(check_edge_covering_cycle(f.g, c).empty()) << f.name;
        EXPECT_EQ(c.cycle.size(), 2 * f.g.m()) << f.name;
        EXPECT_EQ(c.faces_of_plus, 2 - c.vertices_of_plus + c.edges_of_plus) << f.name;
        std::vector<int> hits(f.g.m(), 0);
        for (int d : c.cycle) ++hits[d / 2];
        for (int h : hits) EXPECT_EQ(h, 2);
    }
}

TEST(CrossGadget, CountsAndDegree) {
    for (const auto& f : families()) {
        const auto a = gen_planar3col_q4(f.g, f.rot);
        EXPECT_EQ(a.h.n(), 14 * static_cast<int>(f.g.m())) << f.name;
        EXPECT_EQ(with_eq_edges(a).max_degree(), 3) << f.name;
        const Graph out = remove_equality_edges(a, 4);
        EXPECT_EQ(out.n(), a.h.n() + 7 * static_cast<int>(a.eq.size())) << f.name;
    }
}

TEST(CrossGadget, LiteralEdgeListHasNoColoring) {
    // The edge list exactly as printed, with the in-gadget equalities 0 = 4 and 1 = 2:
    // (e,2) and (e,7) are at distance 2 via (e,3) yet must share a color.
    const int literal[10][2] = {{0, 1}, {2, 3}, {2, 9}, {3, 7}, {4, 5}, {5, 6}, {6, 8}, {6, 9}, {7, 8}, {8, 9}};
    Graph h(10);
    for (const auto& e : literal) h.add_edge(e[0], e[1]);
    const auto eq_ok = [](const Coloring& c) { return c[0] == c[4] && c[1] == c[2]; };
    EXPECT_EQ(count_colorings(h, 4, eq_ok), 0u);
    Graph repaired(10);
    for (const auto& e : literal)
        if (!(e[0] == 2 && e[1] == 3)) repaired.add_edge(e[0], e[1]);
    repaired.add_edge(3, 4);
    EXPECT_GT(count_colorings(repaired, 4, eq_ok), 0u);
}

TEST(CycleTransport, CountsAndDegrees) {
    for (int q : {5, 6}) {
        for (const auto& f : families()) {
            if (f.g.n() < 4) continue;
            const auto a = gen_planar3col_qge5(f.g, f.rot, q);
            const int nd = 2 * static_cast<int>(f.g.m());
            EXPECT_EQ(a.h.n(), (q + 1) * nd);
            const Graph plus = with_eq_edges(a);
            for (int d = 0; d < nd; ++d) EXPECT_EQ(plus.degree(d), 3);
            // (e*,4) and (e*,5) reach degree q - 1; (e*,6..q) only see those two.
            for (int j = 0; j < nd; ++j)
                for (int i = 4; i <= q; ++i) EXPECT_EQ(plus.degree(4 * nd + (q - 3) * j + i - 4), i <= 5 ? q - 1 : 2);
            for (int v = nd; v < 4 * nd; ++v) EXPECT_EQ(plus.degree(v), 4);
            EXPECT_LE(plus.max_degree(), q - 1);
            EXPECT_EQ(remove_equality_edges(a, q).n(), a.h.n() + (2 * q - 1) * static_cast<int>(a.eq.size()));
        }
    }
    EXPECT_EQ(gen_planar3col_qge5(complete_graph(4), k4_rotation(), 5).h.n(), 72);
    EXPECT_THROW(gen_planar3col_qge5(complete_graph(4), k4_rotation(), 4), input_error);
}

TEST(EqualityGadget, ForcingAndExtension) {
    const int q = 4;
    for (int pend : {0, 2}) {
        const Graph g = equality_gadget_harness(q, pend);
        const int outside = 2 + 2 * pend;
        EXPECT_EQ(g.n(), outside + 2 * q - 1);
        // u, v and the middle vertex (uv, q) always agree.
        const std::size_t broken =
            count_colorings(g, q, [&](const Coloring& c) { return c[0] != c[1] || c[0] != c[outside + q - 1]; });
        EXPECT_EQ(broken, 0u);
        // Any coloring of the outside with u = v and valid around each end extends.
        std::vector<int> digits(outside, 1);
        for (;;) {
            Coloring f(g.n(), 0);
            for (int i = 0; i < outside; ++i) f[i] = digits[i];
            bool ok = f[0] == f[1];
            for (int s = 0; s < 2 && ok; ++s) {
                std::vector<int> grp{s};
                for (int i = 0; i < pend; ++i) grp.push_back(2 + s * pend + i);
                for (std::size_t i = 0; i < grp.size(); ++i)
                    for (std::size_t j = i + 1; j < grp.size(); ++j) ok = ok && f[grp[i]] != f[grp[j]];
            }
            if (ok) EXPECT_EQ(extend_square_coloring(g, q, f).verdict, Verdict::yes);
            int i = 0;
            while (i < outside && ++digits[i] > q) digits[i++] = 1;
            if (i == outside) break;
        }
    }
}

TEST(Reduction, TrivialAfterPruning) {
    const auto r = planar3col_to_sqcol(complete_graph(3), k3_rotation(), 5);
    EXPECT_TRUE(r.trivial);
    EXPECT_EQ(r.graph.n(), 1);
}

TEST(Reduction, SmallEndToEnd) {
    EXPECT_TRUE(three_colorable(complete_graph(3)));
    EXPECT_FALSE(three_colorable(complete_graph(4)));
    EXPECT_TRUE(three_colorable(prism_graph()));
    const auto k3 = planar3col_to_sqcol(complete_graph(3), k3_rotation(), 4);
    EXPECT_EQ(k3.graph.n(), 14 * 3 + 7 * static_cast<int>(k3.eq_edges));
    DpOptions o;
    o.witness = true;
    const auto r = decide_tw(k3.graph, 4, o);
    ASSERT_TRUE(r.yes);
    EXPECT_FALSE(verify_square_coloring(k3.graph, 4, *r.witness));
    const auto k4 = planar3col_to_sqcol(complete_graph(4), k4_rotation(), 5);
    EXPECT_FALSE(decide_tw(k4.graph, 5).yes);
}
