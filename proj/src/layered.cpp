#include <algorithm>
#include <cmath>

#include "sqcol/decomposition.hpp"

namespace sqcol {

namespace {

struct ComponentResult {
    TreeDecomposition td;  // over global vertex ids
    int modulus = 1;
    int residue = 0;
    int strips = 0;
};

ComponentResult decompose_component(const Graph& g, const std::vector<int>& comp, int delta) {
    ComponentResult res;
    const int r = comp.front();
    const long n = static_cast<long>(comp.size());
    auto dist = bfs_distances(g, r);
    int top = 0;
    for (int v : comp) top = std::max(top, dist[v] / 2);
    std::vector<std::vector<int>> layer(top + 1);
    for (int v : comp) layer[dist[v] / 2].push_back(v);

    long M = 1;
    while (M * M * delta < n) ++M;
    res.modulus = static_cast<int>(M);

    std::vector<long> residue_size(M, 0);
    for (int i = 0; i <= top; ++i) residue_size[i % M] += static_cast<long>(layer[i].size());
    int js = 0;
    for (int j = 1; j < M; ++j)
        if (residue_size[j] < residue_size[js]) js = j;
    res.residue = js;

    std::vector<int> sep;
    for (int i = js; i <= top; i += static_cast<int>(M)) sep.insert(sep.end(), layer[i].begin(), layer[i].end());
    std::sort(sep.begin(), sep.end());

    auto& td = res.td;
    td.bags.push_back(sep);
    td.root = 0;

    std::vector<int> local(g.n(), -1);
    for (long i = js - M; i <= top; i += M) {
        const int lo = static_cast<int>(std::max<long>(i + 1, 0));
        const int hi = static_cast<int>(std::min<long>(i + M - 1, top));
        std::vector<char> in_strip(g.n(), 0);
        bool nonempty = false;
        for (int l = lo; l <= hi; ++l)
            for (int v : layer[l]) {
                in_strip[v] = 1;
                nonempty = true;
            }
        if (!nonempty) continue;
        ++res.strips;

        // G': outer layers i..i+M, inner region contracted to one vertex.
        const int clo = static_cast<int>(std::max<long>(i, 0));
        const int chi = static_cast<int>(std::min<long>(i + M, top));
        std::vector<int> outer;
        for (int l = clo; l <= chi; ++l) outer.insert(outer.end(), layer[l].begin(), layer[l].end());
        std::sort(outer.begin(), outer.end());
        for (std::size_t k = 0; k < outer.size(); ++k) local[outer[k]] = static_cast<int>(k);
        const bool has_inner = clo > 0;
        const int contracted = static_cast<int>(outer.size());
        Graph gp(contracted + (has_inner ? 1 : 0));
        for (int v : outer)
            for (int w : g.neighbors(v)) {
                if (local[w] >= 0)
                    gp.add_edge(local[v], local[w]);
                else if (has_inner && dist[w] / 2 < clo)
                    gp.add_edge(local[v], contracted);
            }
        auto inner = heuristic_decompose(gp);

        const int offset = td.size();
        for (const auto& b : inner.bags) {
            std::vector<int> bag = sep;
            for (int x : b) {
                if (x == contracted) continue;
                int w = outer[x];
                if (in_strip[w]) bag.push_back(w);
                for (int u : g.neighbors(w))
                    if (in_strip[u]) bag.push_back(u);
            }
            std::sort(bag.begin(), bag.end());
            bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
            td.bags.push_back(std::move(bag));
        }
        for (auto [a, b] : inner.tree_edges) td.tree_edges.emplace_back(offset + a, offset + b);
        td.tree_edges.emplace_back(0, offset + inner.root);
        for (int v : outer) local[v] = -1;
    }
    return res;
}

}  // namespace

LayeredReport layered_square_decomposition(const Graph& g, int delta) {
    LayeredReport rep;
    if (delta < 0) delta = g.max_degree();
    const int d = std::max(delta, 1);
    rep.bound = 8.0 * std::sqrt(static_cast<double>(g.n()) * d);
    auto comps = connected_components(g);
    if (comps.empty()) {
        rep.td.bags.push_back({});
        return rep;
    }
    if (comps.size() == 1) {
        auto c = decompose_component(g, comps[0], d);
        rep.td = std::move(c.td);
        rep.layer_modulus = c.modulus;
        rep.residue = c.residue;
        rep.strips = c.strips;
        return rep;
    }
    rep.td.bags.push_back({});
    rep.td.root = 0;
    for (const auto& comp : comps) {
        auto c = decompose_component(g, comp, d);
        const int offset = rep.td.size();
        for (auto& b : c.td.bags) rep.td.bags.push_back(std::move(b));
        for (auto [a, b] : c.td.tree_edges) rep.td.tree_edges.emplace_back(offset + a, offset + b);
        rep.td.tree_edges.emplace_back(0, offset + c.td.root);
        rep.layer_modulus = std::max(rep.layer_modulus, c.modulus);
        rep.strips += c.strips;
    }
    return rep;
}

}  // namespace sqcol
