#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "sqcol/generators.hpp"
#include "sqcol/oracle.hpp"

using namespace sqcol;

namespace {

ColoredSubIsoInstance k4_instance(bool drop_edge) {
    ColoredSubIsoInstance inst;
    inst.pattern = complete_graph(4);
    inst.host = complete_graph(4);
    if (drop_edge) inst.host = Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    inst.fiber = {0, 1, 2, 3};
    inst.n = 1;
    return inst;
}

// Sum over one chosen vector per list, by brute force over all choices.
bool vectorsum_by_enumeration(const VectorKSumInstance& inst) {
    std::vector<int> pick(inst.k(), 0);
    for (;;) {
        bool zero = true;
        for (int d = 0; d < inst.m && zero; ++d) {
            long s = 0;
            for (int i = 0; i < inst.k(); ++i) s += inst.lists[i][pick[i]][d];
            zero = s == 0;
        }
        if (zero) return true;
        int i = 0;
        while (i < inst.k() && ++pick[i] == static_cast<int>(inst.lists[i].size())) pick[i++] = 0;
        if (i == inst.k()) return false;
    }
}

}  // namespace

TEST(SubIso, CompleteGraphIsYes) {
    const auto inst = k4_instance(false);
    EXPECT_TRUE(subiso_problems(inst).empty());
    EXPECT_TRUE(solve_colored_subiso(inst));
    const auto vs = gen_subiso_to_vectorsum(inst);
    EXPECT_FALSE(vs.trivial_no);
    EXPECT_TRUE(restricted_form_problems(vs).empty());
    for (const auto& list : vs.lists) EXPECT_EQ(list.size(), 1u);
    EXPECT_TRUE(vectorsum_by_enumeration(vs));
    EXPECT_TRUE(solve_vector_ksum(vs));
}

TEST(SubIso, MissingEdgeIsTrivialNo) {
    const auto inst = k4_instance(true);
    EXPECT_FALSE(solve_colored_subiso(inst));
    const auto vs = gen_subiso_to_vectorsum(inst);
    EXPECT_TRUE(vs.trivial_no);
    EXPECT_FALSE(solve_vector_ksum(vs));
}

TEST(SubIso, EachDimensionInTwoLists) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto inst = random_subiso_instance(4, 2, 0.7, seed);
        EXPECT_TRUE(subiso_problems(inst).empty());
        const auto vs = gen_subiso_to_vectorsum(inst);
        for (int d = 0; d < vs.m; ++d) {
            int lists = 0;
            for (int i = 0; i < vs.k(); ++i) {
                const auto nz = nonzero_dims(vs, i);
                lists += std::count(nz.begin(), nz.end(), d) > 0;
            }
            EXPECT_EQ(lists, 2);
        }
        const bool want = solve_colored_subiso(inst);
        EXPECT_EQ(vectorsum_by_enumeration(vs), want) << seed;
        EXPECT_EQ(solve_vector_ksum(vs).has_value(), want) << seed;
    }
}

TEST(VectorSum, SolverMatchesEnumeration) {
    std::mt19937_64 rng(4);
    for (int it = 0; it < 200; ++it) {
        VectorKSumInstance inst;
        inst.m = 2;
        inst.lists.resize(2 + rng() % 3);
        for (auto& list : inst.lists) {
            list.resize(1 + rng() % 3);
            for (auto& v : list) v = {static_cast<long>(rng() % 5) - 2, static_cast<long>(rng() % 5) - 2};
        }
        const auto sol = solve_vector_ksum(inst);
        EXPECT_EQ(sol.has_value(), vectorsum_by_enumeration(inst));
        if (sol)
            for (int d = 0; d < inst.m; ++d) {
                long s = 0;
                for (int i = 0; i < inst.k(); ++i) s += inst.lists[i][(*sol)[i]][d];
                EXPECT_EQ(s, 0);
            }
    }
}

TEST(VectorSum, FileRoundTrip) {
    const auto vs = gen_subiso_to_vectorsum(k4_instance(false));
    std::stringstream ss;
    write_vectorsum(ss, vs, {"answer yes"});
    const auto back = read_vectorsum(ss);
    EXPECT_EQ(back.lists, vs.lists);
    EXPECT_EQ(back.pos_dims, vs.pos_dims);
    EXPECT_EQ(back.neg_dims, vs.neg_dims);
    EXPECT_EQ(back.n, vs.n);
}

TEST(Gadgets, KindNames) {
    for (auto k : {GadgetKind::subset, GadgetKind::color_class_copy, GadgetKind::const_socket,
                   GadgetKind::switch_socket, GadgetKind::edge_selection, GadgetKind::vector_state,
                   GadgetKind::one_way_switch, GadgetKind::vector_selection})
        EXPECT_EQ(gadget_kind_from_string(to_string(k)), k);
}

TEST(Gadgets, SubsetRemovedVertexCount) {
    for (int q : {5, 7})
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= a; ++b) {
                GadgetParams p;
                p.alpha = a;
                p.beta = b;
                p.removed = true;
                const auto gg = build_gadget(GadgetKind::subset, p, q);
                EXPECT_EQ(gg.graph.n(), b + q);
                EXPECT_EQ(gg.colorless_count(), 0);
                EXPECT_EQ(static_cast<int>(gg.in.size()), a);
                EXPECT_EQ(static_cast<int>(gg.out.size()), b);
            }
}

TEST(Gadgets, SubsetBehaviour) {
    const int q = 5;
    GadgetParams p;
    p.alpha = 2;
    p.beta = 1;
    const auto gg = build_gadget(GadgetKind::subset, p, q);
    const auto cg = conflict_graph(gg);
    for (int a = 1; a <= q; ++a)
        for (int b = 1; b <= q; ++b)
            for (int c = 1; c <= q; ++c) {
                if (a == b) continue;
                Coloring f(gg.graph.n(), 0);
                f[gg.in[0]] = a;
                f[gg.in[1]] = b;
                f[gg.out[0]] = c;
                EXPECT_EQ(extend_proper_coloring(cg, q, f).verdict == Verdict::yes, c == a || c == b);
            }
}

TEST(Gadgets, VectorSelectionPorts) {
    GadgetParams p;
    p.m = 3;
    p.n = 1;
    p.list = {{1, 1, 1}};
    p.pos_dims = {0, 1, 2};
    const auto gg = build_gadget(GadgetKind::vector_selection, p, 4 * 3 + 3);
    EXPECT_EQ(gg.vx.size(), 6u);
    EXPECT_EQ(gg.in_groups.size(), 6u);
    for (const auto& grp : gg.in_groups) EXPECT_EQ(grp.size(), 2u);
    for (const char* port : {"r", "g", "b", "r'", "g'", "b'"}) EXPECT_TRUE(gg.ports.count(port)) << port;
}

TEST(Gadgets, OneWaySwitchSkeleton) {
    const auto gg = build_gadget(GadgetKind::one_way_switch, {}, 5);
    for (const char* port : {"r", "g", "b", "s", "r'", "g'", "b'", "s'"}) EXPECT_TRUE(gg.ports.count(port)) << port;
    ASSERT_TRUE(gg.ports.count("t") && gg.ports.count("u") && gg.ports.count("v") && gg.ports.count("w"));
    const Graph& g = gg.graph;
    const int t = gg.ports.at("t"), u = gg.ports.at("u"), v = gg.ports.at("v"), w = gg.ports.at("w");
    const auto near = [&](int a, int b) {
        for (int x : g.neighbors(a))
            if (x == b || g.adjacent(x, b)) return true;
        return false;
    };
    EXPECT_TRUE(near(t, u) && near(u, v) && near(v, t));
    EXPECT_TRUE(near(v, w));
}

TEST(Gadgets, OneWaySwitchBehaviour) {
    const int q = 5;
    const auto gg = build_gadget(GadgetKind::one_way_switch, {}, q);
    const auto cg = conflict_graph(gg);
    int bad = 0;
    for (int s : {1, 3})
        for (int r2 = 1; r2 <= q; ++r2)
            for (int s2 = 1; s2 <= q; ++s2) {
                Coloring f(gg.graph.n(), 0);
                f[gg.ports.at("r")] = 1;
                f[gg.ports.at("g")] = 2;
                f[gg.ports.at("b")] = 3;
                f[gg.ports.at("s")] = s;
                f[gg.ports.at("r'")] = r2;
                f[gg.ports.at("g'")] = 2;
                f[gg.ports.at("b'")] = 3;
                f[gg.ports.at("s'")] = s2;
                const bool want = r2 == 1 && (s == 1 ? s2 == 1 : (s2 == 1 || s2 == 3));
                bad += want != (extend_proper_coloring(cg, q, f).verdict == Verdict::yes);
            }
    EXPECT_EQ(bad, 0);
}

TEST(Reduction, ColorCountAndAudit) {
    EXPECT_EQ(copy_separator_r(3), 2);
    VectorKSumInstance in;
    in.n = 1;
    in.m = 3;
    in.lists = {{{1, 1, 1}}, {{-1, -1, -1}}};
    in.pos_dims = {{0, 1, 2}, {}};
    in.neg_dims = {{}, {0, 1, 2}};
    ASSERT_TRUE(restricted_form_problems(in).empty());
    const auto out = gen_vectorsum_to_sqcol(in);
    EXPECT_EQ(out.q, 2 * 3 * 2 + 3 + out.q_colorless);
    ASSERT_TRUE(out.answer);
    EXPECT_TRUE(*out.answer);
    EXPECT_EQ(out.gg.colorless_count(), 0);
    EXPECT_TRUE(audit_sqcol(in, out).empty());

    in.lists[1] = {{-1, -1, 1}};
    in.pos_dims[1] = {2};
    in.neg_dims[1] = {0, 1};
    const auto no = gen_vectorsum_to_sqcol(in, 0, true);
    ASSERT_TRUE(no.answer);
    EXPECT_FALSE(*no.answer);
}
