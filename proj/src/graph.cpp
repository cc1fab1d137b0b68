#include "sqcol/graph.hpp"

#include <algorithm>
#include <queue>

#include "sqcol/errors.hpp"

namespace sqcol {

Graph::Graph(int n) : adj_(static_cast<std::size_t>(n)) {
    if (n < 0) throw input_error("negative vertex count");
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

bool Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n() || v >= n())
        throw input_error("edge endpoint out of range");
    if (u == v) return false;
    auto& a = adj_[u];
    auto it = std::lower_bound(a.begin(), a.end(), v);
    if (it != a.end() && *it == v) return false;
    a.insert(it, v);
    auto& b = adj_[v];
    b.insert(std::lower_bound(b.begin(), b.end(), u), u);
    ++m_;
    return true;
}

int Graph::add_vertex() {
    adj_.emplace_back();
    return n() - 1;
}

bool Graph::adjacent(int u, int v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
    return d;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<int> bfs_distances(const Graph& g, int src, int limit) {
    if (src < 0 || src >= g.n()) throw input_error("vertex out of range");
    std::vector<int> dist(g.n(), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (limit >= 0 && dist[v] >= limit) continue;
        for (int w : g.neighbors(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

std::vector<int> dist2_closed_neighborhood(const Graph& g, int v) {
    if (v < 0 || v >= g.n()) throw input_error("vertex out of range");
    std::vector<int> out{v};
    for (int u : g.neighbors(v)) {
        out.push_back(u);
        for (int w : g.neighbors(u))
            if (w != v) out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Graph square_graph(const Graph& g) {
    Graph h(g.n());
    for (int v = 0; v < g.n(); ++v)
        for (int w : dist2_closed_neighborhood(g, v))
            if (v < w) h.add_edge(v, w);
    return h;
}

int max_square_closed_degree(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.n(); ++v)
        best = std::max(best, static_cast<int>(dist2_closed_neighborhood(g, v).size()));
    return best;
}

std::optional<Violation> verify_square_coloring(const Graph& g, int q, const Coloring& c) {
    if (static_cast<int>(c.size()) != g.n()) throw input_error("coloring size does not match graph");
    for (int v = 0; v < g.n(); ++v)
        if (c[v] < 1 || c[v] > q) return Violation{v, v, 0};
    for (int v = 0; v < g.n(); ++v)
        for (int w : dist2_closed_neighborhood(g, v))
            if (w > v && c[w] == c[v]) return Violation{v, w, g.adjacent(v, w) ? 1 : 2};
    return std::nullopt;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<int> comp(g.n(), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.n(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> cur{s};
        comp[s] = static_cast<int>(out.size());
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (int w : g.neighbors(cur[i]))
                if (comp[w] < 0) {
                    comp[w] = comp[s];
                    cur.push_back(w);
                }
        std::sort(cur.begin(), cur.end());
        out.push_back(std::move(cur));
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

Subgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    Subgraph s;
    s.to_parent = vertices;
    std::sort(s.to_parent.begin(), s.to_parent.end());
    s.to_parent.erase(std::unique(s.to_parent.begin(), s.to_parent.end()), s.to_parent.end());
    std::vector<int> local(g.n(), -1);
    for (std::size_t i = 0; i < s.to_parent.size(); ++i) {
        int v = s.to_parent[i];
        if (v < 0 || v >= g.n()) throw input_error("vertex out of range");
        local[v] = static_cast<int>(i);
    }
    s.graph = Graph(static_cast<int>(s.to_parent.size()));
    for (std::size_t i = 0; i < s.to_parent.size(); ++i)
        for (int w : g.neighbors(s.to_parent[i]))
            if (local[w] > static_cast<int>(i)) s.graph.add_edge(static_cast<int>(i), local[w]);
    return s;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph grid_graph(int rows, int cols) {
    Graph g(rows * cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            int v = r * cols + c;
            if (c + 1 < cols) g.add_edge(v, v + 1);
            if (r + 1 < rows) g.add_edge(v, v + cols);
        }
    return g;
}

void check_rotation(const Graph& g, const RotationSystem& rot) {
    if (static_cast<int>(rot.order.size()) != g.n()) throw input_error("rotation size mismatch");
    for (int v = 0; v < g.n(); ++v) {
        auto sorted = rot.order[v];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != g.neighbors(v))
            throw input_error("rotation of vertex " + std::to_string(v + 1) +
                              " is not a permutation of its neighbors");
    }
}

}  // namespace sqcol
