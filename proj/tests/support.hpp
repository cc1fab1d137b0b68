#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "sqcol/graph.hpp"

// Reference helpers written without the library's algorithms, so the tests have something
// independent to compare against.
namespace ref {

// All-pairs distances by Floyd-Warshall on an adjacency matrix; -1 when unreachable.
inline std::vector<std::vector<int>> distances(const sqcol::Graph& g) {
    const int n = g.n(), inf = 1 << 20;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int v = 0; v < n; ++v) d[v][v] = 0;
    for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    for (auto& row : d)
        for (int& x : row)
            if (x == inf) x = -1;
    return d;
}

inline bool close(int d) { return d == 1 || d == 2; }

inline bool valid_square_coloring(const sqcol::Graph& g, int q, const std::vector<int>& c) {
    const auto d = distances(g);
    for (int u = 0; u < g.n(); ++u) {
        if (c[u] < 1 || c[u] > q) return false;
        for (int v = u + 1; v < g.n(); ++v)
            if (close(d[u][v]) && c[u] == c[v]) return false;
    }
    return true;
}

// Plain vertex-by-vertex backtracking in id order, no pruning beyond conflicts.
inline bool square_colorable(const sqcol::Graph& g, int q) {
    const int n = g.n();
    const auto d = distances(g);
    std::vector<int> c(n, 0);
    std::function<bool(int, int)> rec = [&](int v, int used) {
        if (v == n) return true;
        for (int x = 1; x <= std::min(q, used + 1); ++x) {
            bool ok = true;
            for (int u = 0; u < v && ok; ++u) ok = !(close(d[u][v]) && c[u] == x);
            if (!ok) continue;
            c[v] = x;
            if (rec(v + 1, std::max(used, x))) return true;
        }
        c[v] = 0;
        return false;
    };
    return rec(0, 0);
}

inline int square_chromatic(const sqcol::Graph& g) {
    int q = 0;
    while (!square_colorable(g, q)) ++q;
    return q;
}

inline sqcol::Graph graph_from_mask(int n, unsigned mask) {
    sqcol::Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1u) g.add_edge(u, v);
    return g;
}

inline sqcol::Graph random_connected(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<> dens(0.15, 0.85);
    for (;;) {
        const double p = dens(rng);
        std::bernoulli_distribution coin(p);
        sqcol::Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) g.add_edge(u, v);
        if (sqcol::is_connected(g)) return g;
    }
}

// Smallest edge mask over all vertex relabelings; used to keep one graph per class.
inline unsigned canonical_mask(int n, unsigned mask) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n));
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit) adj[u][v] = adj[v][u] = mask >> bit & 1u;
    unsigned best = ~0u;
    do {
        unsigned m = 0;
        int b = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++b)
                if (adj[perm[u]][perm[v]]) m |= 1u << b;
        best = std::min(best, m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// One representative per isomorphism class of connected graphs on n vertices.
inline std::vector<sqcol::Graph> connected_graphs(int n) {
    const int pairs = n * (n - 1) / 2;
    std::vector<char> seen(1u << pairs, 0);
    std::vector<sqcol::Graph> out;
    for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
        const unsigned c = canonical_mask(n, mask);
        if (seen[c]) continue;
        seen[c] = 1;
        auto g = graph_from_mask(n, c);
        if (sqcol::is_connected(g)) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace ref
