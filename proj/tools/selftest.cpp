#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>

#include "sqcol/generators.hpp"
#include "sqcol/graph.hpp"
#include "sqcol/ilp.hpp"
#include "sqcol/oracle.hpp"
#include "sqcol/tw_dp.hpp"

namespace {

using namespace sqcol;

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

std::string dp_vs_oracle(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int it = 0; it < 300; ++it) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const Graph g = random_graph(rng, n, std::uniform_real_distribution<>(0.1, 0.8)(rng));
        for (int q = 1; q <= 5; ++q) {
            DpOptions o;
            o.shortcuts = false;
            const bool dp = decide_tw(g, q, o).yes;
            const bool bf = brute_force_decide(g, q).verdict == Verdict::yes;
            if (dp != bf) return "graph " + std::to_string(it) + " q " + std::to_string(q);
        }
    }
    return {};
}

// Ax = b by plain enumeration over 0..max(b).
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

std::string ilp_vs_enumeration(std::uint64_t seed) {
    std::mt19937_64 rng(seed + 1);
    for (int it = 0; it < 500; ++it) {
        IlpInstance inst;
        const int C = 1 + static_cast<int>(rng() % 3), V = 1 + static_cast<int>(rng() % 3);
        inst.A.assign(C, std::vector<int>(V));
        for (auto& row : inst.A)
            for (int& a : row) a = static_cast<int>(rng() % 3);
        for (int r = 0; r < C; ++r) inst.b.push_back(static_cast<int>(rng() % 4));
        if (ilp_feasible(inst) != ilp_enumerate(inst)) return "instance " + std::to_string(it);
    }
    return {};
}

std::string subset_gadget() {
    const int q = 5;
    for (bool removed : {false, true})
        for (int a = 1; a <= 2; ++a)
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
                    for (int c : out) want = want && in.count(c);
                    if (want != (extend_proper_coloring(cg, q, f).verdict == Verdict::yes))
                        return "alpha " + std::to_string(a) + " beta " + std::to_string(b);
                }
            }
    return {};
}

std::string equality_gadget() {
    const int q = 4;
    const Graph g = equality_gadget_harness(q, 1);
    const int outside = 4;
    std::string err;
    for_each_proper_coloring(square_graph(g), q, Coloring(g.n(), 0), [&](const Coloring& c) {
        if (c[0] != c[1] || c[0] != c[outside + q - 1]) err = "forcing fails";
        return err.empty();
    });
    return err;
}

std::string planar_k3() {
    const auto red = planar3col_to_sqcol(complete_graph(3), k3_rotation(), 4);
    return decide_tw(red.graph, 4).yes ? std::string{} : "K3 at q = 4 came out NO";
}

}  // namespace

int run_selftest(std::ostream& out, std::uint64_t seed) {
    const std::pair<const char*, std::function<std::string()>> checks[] = {
        {"dp-vs-oracle", [&] { return dp_vs_oracle(seed); }},
        {"ilp-vs-enumeration", [&] { return ilp_vs_enumeration(seed); }},
        {"subset-gadget", subset_gadget},
        {"equality-gadget", equality_gadget},
        {"planar-k3-q4", planar_k3},
    };
    int failed = 0;
    for (const auto& [name, fn] : checks) {
        const std::string err = fn();
        out << (err.empty() ? "PASS " : "FAIL ") << name << (err.empty() ? "" : ": " + err) << '\n';
        failed += !err.empty();
    }
    return failed;
}
