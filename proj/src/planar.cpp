#include "sqcol/planar.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "sqcol/errors.hpp"

namespace sqcol {

Coloring greedy_extend(const Graph& g, int q, Coloring partial) {
    if (static_cast<int>(partial.size()) != g.n()) throw input_error("partial coloring has wrong size");
    std::vector<char> used(q + 2, 0);
    for (int v = 0; v < g.n(); ++v) {
        if (partial[v] != 0) continue;
        std::fill(used.begin(), used.end(), 0);
        for (int w : dist2_closed_neighborhood(g, v))
            if (partial[w] >= 1 && partial[w] <= q) used[partial[w]] = 1;
        int c = 1;
        while (c <= q && used[c]) ++c;
        if (c > q) throw input_error("greedy extension is stuck at vertex " + std::to_string(v));
        partial[v] = c;
    }
    return partial;
}

std::vector<int> high_square_degree(const Graph& g, int q) {
    std::vector<int> U;
    for (int v = 0; v < g.n(); ++v)
        if (static_cast<int>(dist2_closed_neighborhood(g, v).size()) > q) U.push_back(v);
    return U;
}

namespace {

// Every round of the reduction, outermost first; each maps into g.
std::vector<Subgraph> reduce_chain(const Graph& g, int q) {
    if (q < 1) throw input_error("q must be at least 1");
    std::vector<Subgraph> chain(1);
    chain[0].graph = g;
    chain[0].to_parent.resize(g.n());
    for (int v = 0; v < g.n(); ++v) chain[0].to_parent[v] = v;
    while (true) {
        const Graph& h = chain.back().graph;
        std::vector<char> keep(h.n(), 0);
        for (int u : high_square_degree(h, q)) {
            keep[u] = 1;
            for (int w : h.neighbors(u)) keep[w] = 1;
        }
        std::vector<int> W;
        for (int v = 0; v < h.n(); ++v)
            if (keep[v]) W.push_back(v);
        if (static_cast<int>(W.size()) == h.n()) return chain;
        auto next = induced_subgraph(h, W);
        for (auto& v : next.to_parent) v = chain.back().to_parent[v];
        chain.push_back(std::move(next));
    }
}

}  // namespace

Subgraph q_irreducible_reduce(const Graph& g, int q) { return reduce_chain(g, q).back(); }

std::vector<int> greedy_dist2_dominating(const Graph& g, const std::vector<int>& U, int /*ell*/) {
    std::vector<int> sorted = U;
    std::sort(sorted.begin(), sorted.end());
    std::vector<char> dominated(g.n(), 0);
    std::vector<int> D;
    for (int u : sorted) {
        if (dominated[u]) continue;
        D.push_back(u);
        for (int w : dist2_closed_neighborhood(g, u)) dominated[w] = 1;
    }
    return D;
}

std::vector<int> dist3_dominating(const Graph& g, int q) {
    auto U = high_square_degree(g, q);
    std::vector<char> covered(g.n(), 0);
    for (int u : U) {
        covered[u] = 1;
        for (int w : g.neighbors(u)) covered[w] = 1;
    }
    for (int v = 0; v < g.n(); ++v)
        if (!covered[v]) throw input_error("graph is not q-irreducible at vertex " + std::to_string(v));
    return greedy_dist2_dominating(g, U, q + 1);
}

namespace {

struct ColoringHash {
    std::size_t operator()(const std::vector<std::uint8_t>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (auto x : v) h = (h ^ x) * 1099511628211ull;
        return h;
    }
};

}  // namespace

bool q_coloring_on_square(const Graph& g, int q, const TreeDecomposition& td_square, Coloring* witness,
                          SquareDpStats* stats, double budget_bits) {
    if (q < 0) throw input_error("q must be nonnegative");
    if (q > 255) throw resource_error("color budget above 255 is outside the table encoding");
    const Graph sq = square_graph(g);
    if (auto v = validate(sq, td_square); !v.ok())
        throw input_error("decomposition is not valid for the square graph: " + v.problems.front().message);
    const auto ntd = make_nice(td_square);
    const int w = ntd.width();
    if (stats) stats->width = w;
    if (q > 1 && (w + 1) * std::log2(static_cast<double>(q)) > budget_bits)
        throw resource_error("q^bag exceeds the coloring table budget");
    const int nn = static_cast<int>(ntd.nodes.size());
    struct Table {
        std::vector<std::vector<std::uint8_t>> rows;
        std::vector<std::pair<int, int>> pred;
    };
    std::vector<Table> tab(nn);
    std::size_t total = 0;
    for (int t = 0; t < nn; ++t) {
        const auto& nd = ntd.nodes[t];
        auto& out = tab[t];
        std::unordered_map<std::vector<std::uint8_t>, int, ColoringHash> index;
        auto add = [&](std::vector<std::uint8_t> row, int a, int b) {
            if (index.emplace(row, static_cast<int>(out.rows.size())).second) {
                out.rows.push_back(std::move(row));
                out.pred.emplace_back(a, b);
            }
        };
        switch (nd.kind) {
        case NodeKind::leaf:
            add({}, -1, -1);
            break;
        case NodeKind::introduce: {
            const int p = static_cast<int>(std::find(nd.bag.begin(), nd.bag.end(), nd.vertex) - nd.bag.begin());
            const auto& child = tab[nd.children[0]];
            for (int ci = 0; ci < static_cast<int>(child.rows.size()); ++ci) {
                std::vector<bool> bad(q + 1, false);
                for (std::size_t j = 0, k = 0; j < nd.bag.size(); ++j) {
                    if (static_cast<int>(j) == p) continue;
                    if (sq.adjacent(nd.vertex, nd.bag[j])) bad[child.rows[ci][k]] = true;
                    ++k;
                }
                for (int c = 1; c <= q; ++c) {
                    if (bad[c]) continue;
                    auto row = child.rows[ci];
                    row.insert(row.begin() + p, static_cast<std::uint8_t>(c));
                    add(std::move(row), ci, -1);
                }
            }
            break;
        }
        case NodeKind::forget: {
            const auto& cnode = ntd.nodes[nd.children[0]];
            const int p = static_cast<int>(std::find(cnode.bag.begin(), cnode.bag.end(), nd.vertex) - cnode.bag.begin());
            const auto& child = tab[nd.children[0]];
            for (int ci = 0; ci < static_cast<int>(child.rows.size()); ++ci) {
                auto row = child.rows[ci];
                row.erase(row.begin() + p);
                add(std::move(row), ci, -1);
            }
            break;
        }
        case NodeKind::join: {
            const auto& l = tab[nd.children[0]];
            const auto& r = tab[nd.children[1]];
            std::unordered_map<std::vector<std::uint8_t>, int, ColoringHash> right;
            for (int j = 0; j < static_cast<int>(r.rows.size()); ++j) right.emplace(r.rows[j], j);
            for (int i = 0; i < static_cast<int>(l.rows.size()); ++i) {
                auto it = right.find(l.rows[i]);
                if (it != right.end()) add(l.rows[i], i, it->second);
            }
            break;
        }
        }
        total += out.rows.size();
        if (total > 40'000'000) throw resource_error("coloring tables exceed budget");
    }
    if (stats) stats->table_entries_total = total;
    const bool yes = !tab[ntd.root].rows.empty();
    if (yes && witness) {
        Coloring col(g.n(), 0);
        std::vector<int> chosen(nn, -1);
        chosen[ntd.root] = 0;
        for (int t = nn - 1; t >= 0; --t) {
            if (chosen[t] < 0) continue;
            const auto& nd = ntd.nodes[t];
            const auto& row = tab[t].rows[chosen[t]];
            for (std::size_t j = 0; j < nd.bag.size(); ++j) col[nd.bag[j]] = row[j];
            auto [a, b] = tab[t].pred[chosen[t]];
            if (!nd.children.empty()) chosen[nd.children[0]] = a;
            if (nd.children.size() == 2) chosen[nd.children[1]] = b;
        }
        *witness = col;
    }
    return yes;
}

PlanarResult solve_planar(const Graph& g, int q, bool want_witness, const ProtrusionOptions& opt) {
    if (q < 0) throw input_error("q must be nonnegative");
    PlanarResult res;
    const int n = g.n();
    if (n == 0) {
        res.yes = true;
        res.route = "empty";
        if (want_witness) res.witness = Coloring{};
        return res;
    }
    if (g.max_degree() >= q) {
        res.route = "degree";
        return res;
    }
    int root3 = 0;
    while (static_cast<long>(root3 + 1) * (root3 + 1) * (root3 + 1) <= n) ++root3;
    if (q <= root3) {
        res.route = "square";
        auto lay = layered_square_decomposition(g);
        Coloring col;
        SquareDpStats st;
        res.yes = q_coloring_on_square(g, q, lay.td, want_witness ? &col : nullptr, &st);
        res.width = st.width;
        res.table_entries_total = st.table_entries_total;
        if (res.yes && want_witness) res.witness = col;
        return res;
    }
    auto chain = reduce_chain(g, q);
    const auto& sub = chain.back();
    Coloring global(n, 0);
    if (sub.graph.n() == 0) {
        res.yes = true;
        res.route = "reduce-empty";
    } else {
        auto D = dist3_dominating(sub.graph, q);
        auto pd = build_protrusion_decomposition(sub.graph, D);
        ProtrusionOptions o = opt;
        o.dp.witness = want_witness;
        ProtrusionResult pr;
        for (;;) {
            try {
                pr = protrusion_decide(sub.graph, q, pd, o);
                break;
            } catch (const resource_error&) {
                if (pd.children.empty()) throw;
                // Fold the widest piece into X and search it there instead.
                std::size_t widest = 0;
                for (std::size_t c = 1; c < pd.children.size(); ++c)
                    if (pd.children[c].td.width() > pd.children[widest].td.width()) widest = c;
                std::vector<int> x = pd.X;
                x.insert(x.end(), pd.children[widest].vertices.begin(), pd.children[widest].vertices.end());
                pd = build_protrusion_decomposition(sub.graph, x, 0);
                ++res.absorbed;
            }
        }
        res.route = pr.fallback ? "tw-fallback" : "protrusion";
        res.yes = pr.yes;
        if (pr.yes && want_witness)
            for (int i = 0; i < sub.graph.n(); ++i) global[sub.to_parent[i]] = (*pr.witness)[i];
    }
    // Undo the reduction one round at a time; each round's removed vertices have
    // few distance-2 neighbors inside that round's graph.
    if (res.yes && want_witness) {
        for (int s = static_cast<int>(chain.size()) - 2; s >= 0; --s) {
            const auto& st = chain[s];
            Coloring part(st.graph.n());
            for (int i = 0; i < st.graph.n(); ++i) part[i] = global[st.to_parent[i]];
            part = greedy_extend(st.graph, q, part);
            for (int i = 0; i < st.graph.n(); ++i) global[st.to_parent[i]] = part[i];
        }
        res.witness = global;
    }
    return res;
}

}  // namespace sqcol
