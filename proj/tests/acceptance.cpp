// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "sqcol/decomposition.hpp"
#include "sqcol/generators.hpp"
#include "sqcol/ilp.hpp"
#include "sqcol/oracle.hpp"
#include "sqcol/planar.hpp"
#include "sqcol/tw_dp.hpp"
#include "support.hpp"

using namespace sqcol;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Shared by criteria 1 and 5: every connected graph up to 6 vertices, then random ones.
std::vector<Graph> sweep_graphs() {
    std::vector<Graph> out;
    for (int n = 1; n <= 6; ++n)
        for (auto& g : ref::connected_graphs(n)) out.push_back(std::move(g));
    std::mt19937_64 rng(20240607);
    for (int n = 7; n <= 9; ++n)
        for (int i = 0; i < 5000; ++i) out.push_back(ref::random_connected(rng, n));
    return out;
}

DpOptions plain_dp() {
    DpOptions o;
    o.shortcuts = false;
    return o;
}

// Entry count of every table against q^b * 2^(b^2) * (q+1)^(2^b), b the bag size, in log2.
struct CapTracker {
    std::size_t runs = 0, nodes = 0, over = 0;
    double worst_ratio = -1e300;

    void check(const Graph& g, int q) {
        DpStats st;
        const auto tables = run_tables(g, q, make_nice(heuristic_decompose(g)), plain_dp(), st, true);
        ++runs;
        for (const auto& t : tables) {
            ++nodes;
            if (t.entries.empty()) continue;
            const double b = static_cast<double>(t.bag.size());
            const double cap = b * std::log2(q) + b * b + std::pow(2.0, b) * std::log2(q + 1.0);
            const double have = std::log2(static_cast<double>(t.entries.size()));
            worst_ratio = std::max(worst_ratio, have - cap);
            if (have > cap + 1e-9) ++over;
        }
    }
};

CapTracker cap;

Outcome criterion1(const std::vector<Graph>& graphs) {
    std::size_t cases = 0, bad = 0;
    for (const auto& g : graphs) {
        std::vector<int> all(g.n());
        for (int i = 0; i < g.n(); ++i) all[i] = i;
        const auto pd = build_protrusion_decomposition(g, all);
        ProtrusionOptions po;
        po.dp.shortcuts = false;
        for (int q = 1; q <= 6; ++q) {
            const bool oracle = brute_force_decide(g, q).verdict == Verdict::yes;
            const bool tw = decide_tw(g, q, plain_dp()).yes;
            const bool pr = protrusion_decide(g, q, pd, po).yes;
            cap.check(g, q);
            ++cases;
            bad += tw != oracle || pr != oracle;
        }
    }
    std::ostringstream d;
    d << cases << " (graph, q) cases over " << graphs.size() << " graphs, " << bad << " disagreements";
    return {bad == 0, d.str()};
}

int chromatic_tw(const Graph& g) {
    for (int q = 1;; ++q) {
        cap.check(g, q);
        if (decide_tw(g, q, plain_dp()).yes) return q;
    }
}

Outcome criterion2() {
    std::ostringstream d;
    bool ok = true;
    for (int D = 1; D <= 6; ++D) {
        const Graph g = star_graph(D);
        const int o = square_chromatic_number(g).value, t = chromatic_tw(g);
        if (o != D + 1 || t != D + 1) {
            ok = false;
            d << "star " << D << ": oracle " << o << " tw " << t << "; ";
        }
    }
    std::string cycles;
    for (int n = 3; n <= 12; ++n) {
        const int po = square_chromatic_number(path_graph(n)).value, pt = chromatic_tw(path_graph(n));
        if (po != 3 || pt != 3) {
            ok = false;
            d << "path " << n << ": oracle " << po << " tw " << pt << "; ";
        }
        const int co = square_chromatic_number(cycle_graph(n)).value, ct = chromatic_tw(cycle_graph(n));
        if (co != ct) {
            ok = false;
            d << "cycle " << n << ": oracle " << co << " tw " << ct << "; ";
        }
        cycles += (cycles.empty() ? "" : ",") + std::to_string(co);
    }
    d << "stars Delta+1, paths 3, cycles n=3..12 -> " << cycles;
    return {ok, d.str()};
}

bool ilp_enumerate(const IlpInstance& inst) {
    const int V = inst.A.empty() ? 0 : static_cast<int>(inst.A[0].size());
    int ub = 0;
    for (int b : inst.b) ub = std::max(ub, b);
    std::vector<int> x(V, 0);
    std::function<bool(int)> rec = [&](int i) {
        if (i == V) {
            for (std::size_t r = 0; r < inst.A.size(); ++r) {
                int s = 0;
                for (int j = 0; j < V; ++j) s += inst.A[r][j] * x[j];
                if (s != inst.b[r]) return false;
            }
            return true;
        }
        for (x[i] = 0; x[i] <= ub; ++x[i])
            if (rec(i + 1)) return true;
        return false;
    };
    return rec(0);
}

Outcome criterion3() {
    std::mt19937_64 rng(77);
    int bad = 0, feasible = 0;
    for (int it = 0; it < 10000; ++it) {
        IlpInstance inst;
        const int C = 1 + static_cast<int>(rng() % 3), V = 1 + static_cast<int>(rng() % 4);
        inst.A.assign(C, std::vector<int>(V));
        for (auto& row : inst.A)
            for (int& a : row) a = static_cast<int>(rng() % 4);
        for (int r = 0; r < C; ++r) inst.b.push_back(static_cast<int>(rng() % 6));
        const bool want = ilp_enumerate(inst);
        feasible += want;
        bad += ilp_feasible(inst) != want;
    }
    return {bad == 0, "10000 instances (" + std::to_string(feasible) + " feasible), " + std::to_string(bad) +
                          " disagreements"};
}

Outcome criterion4() {
    std::ostringstream d;
    d << cap.runs << " runs, " << cap.nodes << " nodes, " << cap.over << " above the cap; tightest log2 margin "
      << std::fixed << std::setprecision(2) << -cap.worst_ratio;
    return {cap.over == 0 && cap.runs > 0, d.str()};
}

Outcome criterion5(const std::vector<Graph>& graphs) {
    std::size_t reduce_bad = 0, dom_size_bad = 0, dom_dist_bad = 0, irreducible = 0;
    for (const auto& g : graphs)
        for (int q = 1; q <= 6; ++q) {
            const auto sub = q_irreducible_reduce(g, q);
            const bool full = brute_force_decide(g, q).verdict == Verdict::yes;
            const bool core = brute_force_decide(sub.graph, q).verdict == Verdict::yes;
            reduce_bad += full != core;
            if (sub.graph.n() == 0) continue;
            ++irreducible;
            const auto D = dist3_dominating(sub.graph, q);
            if (static_cast<double>(D.size()) > 2.0 * sub.graph.m() / q) ++dom_size_bad;
            const auto dist = ref::distances(sub.graph);
            for (int v = 0; v < sub.graph.n(); ++v) {
                bool near = false;
                for (int x : D) near = near || (dist[v][x] >= 0 && dist[v][x] <= 3);
                if (!near) {
                    ++dom_dist_bad;
                    break;
                }
            }
        }
    std::size_t planar_cases = 0, planar_bad = 0;
    std::vector<Graph> family;
    for (int n = 3; n <= 12; ++n) {
        family.push_back(cycle_graph(n));
        family.push_back(path_graph(n));
    }
    for (int r = 2; r <= 6; ++r)
        for (int c = r; c <= 6; ++c) family.push_back(grid_graph(r, c));
    for (const auto& g : family)
        for (int q = 3; q <= 10; ++q) {
            const auto res = solve_planar(g, q, true);
            const bool want = brute_force_decide(g, q).verdict == Verdict::yes;
            ++planar_cases;
            bool bad = res.yes != want;
            if (res.yes && (!res.witness || verify_square_coloring(g, q, *res.witness))) bad = true;
            planar_bad += bad;
        }
    std::ostringstream d;
    d << "reduction mismatches " << reduce_bad << ", dominating size over 2|E|/q " << dom_size_bad
      << ", not distance-3 dominating " << dom_dist_bad << " (of " << irreducible
      << " irreducible cores); solve_planar " << planar_bad << " wrong of " << planar_cases;
    return {reduce_bad == 0 && dom_size_bad == 0 && dom_dist_bad == 0 && planar_bad == 0, d.str()};
}

Outcome criterion6() {
    std::vector<std::pair<std::string, Graph>> family;
    for (int n : {10, 50, 200}) family.emplace_back("path " + std::to_string(n), path_graph(n));
    for (int k : {5, 10, 20}) family.emplace_back("star " + std::to_string(k), star_graph(k));
    for (int k : {5, 10, 15}) family.emplace_back("grid " + std::to_string(k), grid_graph(k, k));
    bool valid = true;
    std::ostringstream d, regress;
    for (const auto& [name, g] : family) {
        const auto rep = layered_square_decomposition(g);
        const bool ok = validate(square_graph(g), rep.td).ok();
        valid = valid && ok;
        const int w = rep.td.width();
        d << name << " w=" << w << "/" << std::fixed << std::setprecision(1) << rep.bound << (ok ? "" : " INVALID")
          << "; ";
        if (w > rep.bound) regress << " " << name;
    }
    std::string detail = d.str();
    if (!regress.str().empty()) detail += "width regressions:" + regress.str();
    else detail += "all widths within 8*sqrt(n*Delta)";
    return {valid, detail};
}

Outcome criterion7() {
    std::size_t subset_cases = 0, subset_bad = 0;
    const int q = 5;
    for (bool removed : {false, true})
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= a; ++b) {
                GadgetParams p;
                p.alpha = a;
                p.beta = b;
                p.removed = removed;
                const auto gg = build_gadget(GadgetKind::subset, p, q);
                const auto cg = conflict_graph(gg);
                std::vector<int> ports = gg.in;
                ports.insert(ports.end(), gg.out.begin(), gg.out.end());
                long lim = 1;
                for (std::size_t i = 0; i < ports.size(); ++i) lim *= q;
                for (long code = 0; code < lim; ++code) {
                    long x = code;
                    Coloring f(gg.graph.n(), 0);
                    for (int v : ports) {
                        f[v] = static_cast<int>(x % q) + 1;
                        x /= q;
                    }
                    std::set<int> in, out;
                    for (int v : gg.in) in.insert(f[v]);
                    if (static_cast<int>(in.size()) != a) continue;
                    for (int v : gg.out) out.insert(f[v]);
                    bool want = static_cast<int>(out.size()) == b;
                    for (int c : out) want = want && in.count(c) > 0;
                    ++subset_cases;
                    subset_bad += want != (extend_proper_coloring(cg, q, f).verdict == Verdict::yes);
                }
            }
    std::size_t eq_colorings = 0, eq_forced_bad = 0, eq_cases = 0, eq_ext_bad = 0;
    const int qe = 4;
    for (int pend : {0, 1, 2}) {
        const Graph g = equality_gadget_harness(qe, pend);
        const int outside = 2 + 2 * pend;
        eq_colorings += for_each_proper_coloring(square_graph(g), qe, Coloring(g.n(), 0), [&](const Coloring& c) {
            if (c[0] != c[1] || c[0] != c[outside + qe - 1]) ++eq_forced_bad;
            return true;
        });
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
            if (ok) {
                ++eq_cases;
                eq_ext_bad += extend_square_coloring(g, qe, f).verdict != Verdict::yes;
            }
            int i = 0;
            while (i < outside && ++digits[i] > qe) digits[i++] = 1;
            if (i == outside) break;
        }
    }
    std::ostringstream d;
    d << "subset " << subset_bad << " wrong of " << subset_cases << "; equality gadget: " << eq_forced_bad
      << " unforced of " << eq_colorings << " colorings, " << eq_ext_bad << " non-extendable of " << eq_cases;
    return {subset_bad == 0 && eq_forced_bad == 0 && eq_ext_bad == 0, d.str()};
}

Outcome criterion8() {
    std::ostringstream d;
    bool ok = true;
    auto decide = [&](const std::string& name, const Graph& h, int q, bool want, int expect_n, int got_n) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto r = decide_tw(h, q);
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool good = r.yes == want && expect_n == got_n;
        ok = ok && good;
        d << name << " q=" << q << " |V|=" << got_n << (expect_n == got_n ? "" : " (expected " + std::to_string(expect_n) + ")")
          << " w=" << r.stats.width << " " << (r.yes ? "YES" : "NO") << std::fixed << std::setprecision(1) << " "
          << s << "s" << (good ? "" : " WRONG") << "; ";
    };
    struct Fam {
        std::string name;
        Graph g;
        RotationSystem rot;
        bool colorable;
    };
    const Fam fams[] = {{"K3", complete_graph(3), k3_rotation(), true},
                        {"K4", complete_graph(4), k4_rotation(), false},
                        {"prism", prism_graph(), prism_rotation(), true}};
    for (const auto& f : fams) {
        if (f.name == "prism") continue;
        const auto a = gen_planar3col_q4(f.g, f.rot);
        const Graph h = remove_equality_edges(a, 4);
        decide(f.name, h, 4, f.colorable, 14 * static_cast<int>(f.g.m()) + 7 * static_cast<int>(a.eq.size()), h.n());
    }
    const int q = 5;
    for (const auto& f : fams) {
        if (f.name == "K3") {
            const auto r = planar3col_to_sqcol(f.g, f.rot, q);
            const bool yes = decide_tw(r.graph, q).yes;
            ok = ok && yes && r.trivial;
            d << "K3 q=5 trivial after pruning " << (yes ? "YES" : "NO") << "; ";
            continue;
        }
        const auto a = gen_planar3col_qge5(f.g, f.rot, q);
        const Graph h = remove_equality_edges(a, q);
        const int expect = (q + 1) * 2 * static_cast<int>(f.g.m()) + (2 * q - 1) * static_cast<int>(a.eq.size());
        decide(f.name, h, q, f.colorable, expect, h.n());
    }
    return {ok, d.str()};
}

Outcome criterion9() {
    VectorKSumInstance in;
    in.n = 1;
    in.m = 3;
    in.lists = {{{1, 1, 1}}, {{-1, -1, -1}}};
    in.pos_dims = {{0, 1, 2}, {}};
    in.neg_dims = {{}, {0, 1, 2}};
    std::ostringstream d;
    bool ok = restricted_form_problems(in).empty();
    const auto out = gen_vectorsum_to_sqcol(in);
    const auto problems = audit_sqcol(in, out);
    ok = ok && problems.empty();
    const int q_formula = 2 * in.m * 2 + 3 + out.q_colorless;
    ok = ok && out.q == q_formula && out.gg.colorless_count() == 0;
    const auto t0 = std::chrono::steady_clock::now();
    const int w = heuristic_decompose(out.gg.graph).width();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool width_ok = w <= 2 * out.r + 30;
    ok = ok && width_ok;
    d << "|V|=" << out.gg.graph.n() << " |E|=" << out.gg.graph.m() << " q=" << out.q << " (formula " << q_formula
      << ") r=" << out.r << " audit problems " << problems.size() << "; heuristic width " << w << " vs bound "
      << 2 * out.r + 30 << std::fixed << std::setprecision(1) << " (" << s << "s)";
    if (!problems.empty()) d << "; first: " << problems.front();
    return {ok, d.str()};
}

}  // namespace

int main() {
    const auto graphs = sweep_graphs();
    const std::pair<int, std::function<Outcome()>> criteria[] = {
        {1, [&] { return criterion1(graphs); }},
        {2, criterion2},
        {3, criterion3},
        {4, criterion4},
        {5, [&] { return criterion5(graphs); }},
        {6, criterion6},
        {7, criterion7},
        {8, criterion8},
        {9, criterion9},
    };
    int failed = 0;
    for (const auto& [id, fn] : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << " [" << std::fixed
                  << std::setprecision(1) << s << "s] " << o.detail << std::endl;
        failed += !o.pass;
    }
    return failed == 0 ? 0 : 1;
}
