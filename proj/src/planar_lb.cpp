#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>

#include "sqcol/errors.hpp"
#include "sqcol/generators.hpp"

namespace sqcol {

int FaceStructure::dart_index(int u, int v) const {
    const Edge key = u < v ? Edge{u, v} : Edge{v, u};
    auto it = std::lower_bound(edges.begin(), edges.end(), key);
    if (it == edges.end() || *it != key) throw input_error("no edge between the given vertices");
    const int e = static_cast<int>(it - edges.begin());
    return u < v ? 2 * e : 2 * e + 1;
}

FaceStructure trace_faces(const Graph& g, const RotationSystem& rot) {
    check_rotation(g, rot);
    FaceStructure fs;
    fs.edges = g.edges();
    for (auto [u, v] : fs.edges) {
        fs.darts.push_back({u, v});
        fs.darts.push_back({v, u});
    }
    const int nd = static_cast<int>(fs.darts.size());
    auto next = [&](int d) {
        const auto [a, b] = fs.darts[d];
        const auto& ord = rot.order[b];
        const int i = static_cast<int>(std::find(ord.begin(), ord.end(), a) - ord.begin());
        const int w = ord[(i + 1) % ord.size()];
        return fs.dart_index(b, w);
    };
    fs.dart_face.assign(nd, -1);
    for (int d0 = 0; d0 < nd; ++d0) {
        if (fs.dart_face[d0] >= 0) continue;
        const int f = static_cast<int>(fs.faces.size());
        fs.faces.emplace_back();
        for (int d = d0; fs.dart_face[d] < 0; d = next(d)) {
            fs.dart_face[d] = f;
            fs.faces[f].push_back(d);
        }
    }
    return fs;
}

bool euler_planar(const Graph& g, const FaceStructure& fs) {
    const long comps = static_cast<long>(connected_components(g).size());
    long isolated = 0;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 0) ++isolated;
    // Each non-trivial component contributes V - E + F = 2 with its own faces.
    const long lhs = static_cast<long>(g.n()) - static_cast<long>(g.m()) + static_cast<long>(fs.faces.size());
    return lhs == 2 * (comps - isolated) + isolated;
}

namespace {

int count_faces(const std::vector<std::vector<int>>& rot_edges, const std::vector<Edge>& ends) {
    // Half-edge 2e leaves ends[e].first, 2e+1 leaves ends[e].second.
    const int ne = static_cast<int>(ends.size());
    std::vector<std::vector<int>> out(rot_edges.size());
    std::vector<int> pos(2 * ne, -1);
    for (std::size_t v = 0; v < rot_edges.size(); ++v)
        for (int e : rot_edges[v]) {
            const int h = ends[e].first == static_cast<int>(v) ? 2 * e : 2 * e + 1;
            pos[h] = static_cast<int>(out[v].size());
            out[v].push_back(h);
        }
    auto head = [&](int h) { return h % 2 == 0 ? ends[h / 2].second : ends[h / 2].first; };
    std::vector<char> seen(2 * ne, 0);
    int faces = 0;
    for (int h0 = 0; h0 < 2 * ne; ++h0) {
        if (seen[h0]) continue;
        ++faces;
        for (int h = h0; !seen[h];) {
            seen[h] = 1;
            const auto& ord = out[head(h)];
            h = ord[(pos[h ^ 1] + 1) % ord.size()];
        }
    }
    return faces;
}

}  // namespace

EdgeCoveringCycle edge_covering_cycle(const Graph& g, const RotationSystem& rot) {
    if (!is_connected(g)) throw input_error("edge covering cycle needs a connected graph");
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) < 3) throw input_error("edge covering cycle needs minimum degree 3 (vertex " + std::to_string(v + 1) + ")");
    const auto fs = trace_faces(g, rot);
    const int nd = static_cast<int>(fs.darts.size());
    // Slot 2d faces the dart's own face, slot 2d+1 the twin's face.
    std::vector<int> mate(2 * nd, -1);
    for (const auto& face : fs.faces) {
        const int k = static_cast<int>(face.size());
        for (int i = 0; i < k; ++i) {
            const int a = 2 * (face[i] ^ 1) + 1;
            const int b = 2 * face[(i + 1) % k];
            mate[a] = b;
            mate[b] = a;
        }
    }
    // Corner arcs give one closed curve around each vertex; merge them across edges.
    std::vector<int> uf(g.n());
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
    for (int e = 0; e < static_cast<int>(fs.edges.size()); ++e) {
        const auto [u, v] = fs.edges[e];
        if (find(u) == find(v)) continue;
        const int s1 = 2 * (2 * e), s2 = 2 * (2 * e + 1) + 1;
        const int p1 = mate[s1], p2 = mate[s2];
        mate[s1] = s2, mate[s2] = s1;
        mate[p1] = p2, mate[p2] = p1;
        uf[find(u)] = find(v);
    }
    EdgeCoveringCycle out;
    out.darts = fs.darts;
    out.partner.resize(nd);
    for (int d = 0; d < nd; ++d) out.partner[d] = {mate[2 * d] / 2, mate[2 * d + 1] / 2};
    // Walk the cycle from dart 0, always leaving through the slot not used to arrive.
    for (int d = 0, in_slot = 0;;) {
        out.cycle.push_back(d);
        in_slot = mate[in_slot ^ 1];
        d = in_slot / 2;
        if (d == 0 || out.cycle.size() > static_cast<std::size_t>(nd)) break;
    }
    // G+ on vertices V(G) then one vertex per dart; edges G', then E*.
    const int n = g.n();
    std::vector<Edge> ends;
    std::vector<int> vd_edge(nd), twin_edge(nd / 2), arc_edge(2 * nd, -1);
    for (int x = 0; x < nd; ++x) {
        vd_edge[x] = static_cast<int>(ends.size());
        ends.emplace_back(fs.darts[x].from, n + x);
    }
    for (int e = 0; e < nd / 2; ++e) {
        twin_edge[e] = static_cast<int>(ends.size());
        ends.emplace_back(n + 2 * e, n + 2 * e + 1);
    }
    for (int s = 0; s < 2 * nd; ++s) {
        if (arc_edge[s] >= 0) continue;
        arc_edge[s] = arc_edge[mate[s]] = static_cast<int>(ends.size());
        ends.emplace_back(n + s / 2, n + mate[s] / 2);
    }
    std::vector<std::vector<int>> rot_edges(n + nd);
    for (int v = 0; v < n; ++v)
        for (int w : rot.order[v]) rot_edges[v].push_back(vd_edge[fs.dart_index(v, w)]);
    for (int x = 0; x < nd; ++x)
        rot_edges[n + x] = {vd_edge[x], arc_edge[2 * x], twin_edge[x / 2], arc_edge[2 * x + 1]};
    out.vertices_of_plus = n + nd;
    out.edges_of_plus = static_cast<int>(ends.size());
    out.faces_of_plus = count_faces(rot_edges, ends);
    return out;
}

std::vector<std::string> check_edge_covering_cycle(const Graph& g, const EdgeCoveringCycle& c) {
    std::vector<std::string> bad;
    const int nd = static_cast<int>(c.darts.size());
    if (nd != 2 * static_cast<int>(g.m())) bad.push_back("dart count differs from 2|E|");
    std::vector<int> hits(nd, 0);
    for (int d : c.cycle) ++hits[d];
    for (int d = 0; d < nd; ++d)
        if (hits[d] != 1) {
            bad.push_back("the cycle does not visit every dart exactly once");
            break;
        }
    std::set<Edge> arcs;
    for (std::size_t i = 0; i < c.cycle.size(); ++i) {
        int a = c.cycle[i], b = c.cycle[(i + 1) % c.cycle.size()];
        if (a == b || !arcs.insert(a < b ? Edge{a, b} : Edge{b, a}).second) bad.push_back("the cycle repeats an arc");
        const auto& pa = c.partner[a];
        if (pa[0] != b && pa[1] != b) bad.push_back("cycle order disagrees with the partner table");
    }
    for (int d = 0; d < nd; ++d)
        if (c.partner[d][0] == d || c.partner[d][1] == d) bad.push_back("a dart is matched with itself");
    // Each undirected edge carries two darts, each crossed by two arcs.
    for (int e = 0; e < nd / 2; ++e)
        if (hits[2 * e] + hits[2 * e + 1] != 2) bad.push_back("edge " + std::to_string(e + 1) + " is not crossed twice");
    if (c.vertices_of_plus - c.edges_of_plus + c.faces_of_plus != 2)
        bad.push_back("the combined rotation of G+ is not planar (V - E + F = " +
                      std::to_string(c.vertices_of_plus - c.edges_of_plus + c.faces_of_plus) + ")");
    return bad;
}

Graph with_eq_edges(const EqAnnotatedGraph& a) {
    Graph g = a.h;
    for (auto [u, v] : a.eq) g.add_edge(u, v);
    return g;
}

namespace {

void add_eq(std::set<Edge>& eq, int u, int v) {
    if (u != v) eq.insert(u < v ? Edge{u, v} : Edge{v, u});
}

EqAnnotatedGraph finish(Graph h, const std::set<Edge>& eq) {
    EqAnnotatedGraph out;
    out.eq.assign(eq.begin(), eq.end());
    for (auto [u, v] : out.eq)
        if (h.adjacent(u, v)) throw std::logic_error("equality pair duplicates an edge");
    out.h = std::move(h);
    return out;
}

}  // namespace

EqAnnotatedGraph gen_planar3col_q4(const Graph& g, const RotationSystem& rot) {
    if (!is_connected(g)) throw input_error("planar 3-coloring reduction needs a connected graph");
    const auto fs = trace_faces(g, rot);
    if (!euler_planar(g, fs)) throw input_error("rotation system is not planar");
    const int m = static_cast<int>(fs.edges.size());
    // Per edge e = uv (u < v): (e,0..9) at 14e+0..9, (u,e), (v,e), (f1,e), (f2,e) at 14e+10..13,
    // where f1 is the face of the dart (u,v) and f2 the face of (v,u).
    auto gv = [](int e, int i) { return 14 * e + i; };
    Graph h(14 * m);
    static const int M[10][2] = {{0, 1}, {3, 4}, {2, 9}, {3, 7}, {4, 5}, {5, 6}, {6, 8}, {6, 9}, {7, 8}, {8, 9}};
    std::set<Edge> eq;
    for (int e = 0; e < m; ++e) {
        for (const auto& p : M) h.add_edge(gv(e, p[0]), gv(e, p[1]));
        add_eq(eq, gv(e, 0), gv(e, 10));
        add_eq(eq, gv(e, 0), gv(e, 4));
        add_eq(eq, gv(e, 1), gv(e, 2));
        add_eq(eq, gv(e, 1), gv(e, 13));
        add_eq(eq, gv(e, 3), gv(e, 11));
        add_eq(eq, gv(e, 7), gv(e, 12));
    }
    auto vertex_copy = [&](int v, int w) {
        const int d = fs.dart_index(v, w);
        return gv(d / 2, d % 2 == 0 ? 10 : 11);
    };
    for (int v = 0; v < g.n(); ++v) {
        const auto& ord = rot.order[v];
        for (std::size_t i = 0; i < ord.size(); ++i)
            add_eq(eq, vertex_copy(v, ord[i]), vertex_copy(v, ord[(i + 1) % ord.size()]));
    }
    auto face_copy = [&](int d) { return gv(d / 2, d % 2 == 0 ? 12 : 13); };
    for (const auto& face : fs.faces)
        for (std::size_t i = 0; i < face.size(); ++i) add_eq(eq, face_copy(face[i]), face_copy(face[(i + 1) % face.size()]));
    return finish(std::move(h), eq);
}

EqAnnotatedGraph gen_planar3col_qge5(const Graph& g, const RotationSystem& rot, int q) {
    if (q < 5) throw input_error("the cycle transport construction needs q >= 5");
    const auto cyc = edge_covering_cycle(g, rot);
    if (auto bad = check_edge_covering_cycle(g, cyc); !bad.empty()) throw input_error(bad.front());
    const auto fs = trace_faces(g, rot);
    const int nd = static_cast<int>(cyc.darts.size());
    // Dart vertices at 0..nd-1, A = (d, i) at nd + 3d + i - 1, B = (e*, i) at 4nd + (q-3)j + i - 4.
    auto A = [&](int d, int i) { return nd + 3 * d + i - 1; };
    auto B = [&](int j, int i) { return 4 * nd + (q - 3) * j + i - 4; };
    Graph h((q + 1) * nd);
    for (int d = 0; d < nd; ++d) {
        h.add_edge(A(d, 1), A(d, 2));
        h.add_edge(A(d, 2), A(d, 3));
    }
    for (int e = 0; e < nd / 2; ++e) h.add_edge(A(2 * e, 3), A(2 * e + 1, 3));
    for (int j = 0; j < nd; ++j) {
        const int e1 = cyc.cycle[j], e2 = cyc.cycle[(j + 1) % nd];
        for (int i = 1; i <= 3; ++i) {
            h.add_edge(A(e1, i), B(j, 4));
            h.add_edge(A(e2, i), B(j, 5));
        }
        h.add_edge(B(j, 4), B(j, 5));
        for (int i = 6; i <= q; ++i) {
            h.add_edge(B(j, 4), B(j, i));
            h.add_edge(B(j, 5), B(j, i));
        }
    }
    std::set<Edge> eq;
    for (int d = 0; d < nd; ++d) add_eq(eq, d, A(d, 1));
    for (int u = 0; u < g.n(); ++u) {
        const auto& ord = rot.order[u];
        for (std::size_t i = 0; i < ord.size(); ++i)
            add_eq(eq, fs.dart_index(u, ord[i]), fs.dart_index(u, ord[(i + 1) % ord.size()]));
    }
    return finish(std::move(h), eq);
}

Graph remove_equality_edges(const EqAnnotatedGraph& a, int q) {
    if (q < 4) throw input_error("the equality gadget needs q >= 4");
    const Graph plus = with_eq_edges(a);
    if (plus.max_degree() > q - 1)
        throw input_error("graph with equality edges has degree " + std::to_string(plus.max_degree()) + " > q - 1");
    Graph out = a.h;
    for (auto [u, v] : a.eq) {
        const int base = out.n();
        for (int i = 0; i < 2 * q - 1; ++i) out.add_vertex();
        auto at = [&](int i) { return base + i - 1; };
        out.add_edge(u, at(1));
        out.add_edge(v, at(2 * q - 1));
        out.add_edge(at(1), at(q - 1));
        out.add_edge(at(q - 1), at(q));
        out.add_edge(at(q), at(q + 1));
        out.add_edge(at(q + 1), at(2 * q - 1));
        for (int i = 2; i <= q - 2; ++i) {
            out.add_edge(at(i), at(1));
            out.add_edge(at(i), at(q - 1));
            out.add_edge(at(q + i), at(q + 1));
            out.add_edge(at(q + i), at(2 * q - 1));
        }
    }
    return out;
}

Graph equality_gadget_harness(int q, int pendants) {
    EqAnnotatedGraph a;
    a.h = Graph(2 + 2 * pendants);
    for (int i = 0; i < pendants; ++i) {
        a.h.add_edge(0, 2 + i);
        a.h.add_edge(1, 2 + pendants + i);
    }
    a.eq = {{0, 1}};
    return remove_equality_edges(a, q);
}

bool three_colorable(const Graph& g) {
    std::vector<int> col(g.n(), 0);
    std::function<bool(int)> rec = [&](int v) {
        if (v == g.n()) return true;
        for (int c = 1; c <= 3; ++c) {
            bool ok = true;
            for (int w : g.neighbors(v))
                if (col[w] == c) ok = false;
            if (!ok) continue;
            col[v] = c;
            if (rec(v + 1)) return true;
            col[v] = 0;
        }
        return false;
    };
    return rec(0);
}

Planar3ColReduction planar3col_to_sqcol(const Graph& g, const RotationSystem& rot, int q) {
    if (q < 4) throw input_error("q must be at least 4");
    check_rotation(g, rot);
    Planar3ColReduction out;
    auto take = [&](const EqAnnotatedGraph& a) {
        Graph part = remove_equality_edges(a, q);
        const int off = out.graph.n();
        for (int i = 0; i < part.n(); ++i) out.graph.add_vertex();
        for (auto [u, v] : part.edges()) out.graph.add_edge(off + u, off + v);
        out.eq_edges += a.eq.size();
        out.pre_vertices += a.h.n();
    };
    if (q == 4) {
        take(gen_planar3col_q4(g, rot));
        return out;
    }
    // Peel vertices of degree at most 2; they never block a 3-coloring.
    std::vector<char> alive(g.n(), 1);
    std::vector<int> deg(g.n());
    for (int v = 0; v < g.n(); ++v) deg[v] = g.degree(v);
    for (bool changed = true; changed;) {
        changed = false;
        for (int v = 0; v < g.n(); ++v)
            if (alive[v] && deg[v] <= 2) {
                alive[v] = 0;
                changed = true;
                for (int w : g.neighbors(v))
                    if (alive[w]) --deg[w];
            }
    }
    std::vector<int> keep;
    for (int v = 0; v < g.n(); ++v)
        if (alive[v]) keep.push_back(v);
    if (keep.empty()) {
        out.trivial = true;
        out.graph = Graph(1);
        return out;
    }
    auto core = induced_subgraph(g, keep);
    std::vector<int> local(g.n(), -1);
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) local[keep[i]] = i;
    for (const auto& comp : connected_components(core.graph)) {
        auto piece = induced_subgraph(core.graph, comp);
        std::vector<int> idx(core.graph.n(), -1);
        for (int i = 0; i < static_cast<int>(comp.size()); ++i) idx[comp[i]] = i;
        RotationSystem r;
        r.order.resize(comp.size());
        for (int i = 0; i < static_cast<int>(comp.size()); ++i)
            for (int w : rot.order[core.to_parent[comp[i]]])
                if (local[w] >= 0 && idx[local[w]] >= 0) r.order[i].push_back(idx[local[w]]);
        take(gen_planar3col_qge5(piece.graph, r, q));
    }
    return out;
}

RotationSystem k3_rotation() { return {{{1, 2}, {2, 0}, {0, 1}}}; }

RotationSystem k4_rotation() { return {{{1, 3, 2}, {0, 2, 3}, {0, 3, 1}, {0, 1, 2}}}; }

Graph prism_graph() {
    return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

RotationSystem prism_rotation() { return {{{1, 3, 2}, {0, 2, 4}, {0, 5, 1}, {0, 4, 5}, {1, 5, 3}, {2, 3, 4}}}; }

}  // namespace sqcol
