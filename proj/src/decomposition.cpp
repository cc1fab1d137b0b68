#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "sqcol/decomposition.hpp"
#include "sqcol/errors.hpp"

namespace sqcol {

int TreeDecomposition::width() const {
    int w = -1;
    for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
    return w;
}

std::vector<std::vector<int>> TreeDecomposition::children() const {
    std::vector<std::vector<int>> adj(bags.size()), ch(bags.size());
    for (auto [a, b] : tree_edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    if (bags.empty()) return ch;
    std::vector<int> parent(bags.size(), -2);
    std::vector<int> stack{root};
    parent[root] = -1;
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        for (int s : adj[t]) {
            if (parent[s] != -2) continue;
            parent[s] = t;
            ch[t].push_back(s);
            stack.push_back(s);
        }
    }
    for (auto& c : ch) std::sort(c.begin(), c.end());
    return ch;
}

TdVerdict validate(const Graph& g, const TreeDecomposition& td) {
    TdVerdict out;
    using K = TdProblem::Kind;
    const int nodes = td.size();
    if (nodes == 0) {
        if (g.n() > 0) out.problems.push_back({K::missing_vertex, 0, -1, "no bags"});
        return out;
    }
    bool tree_ok = static_cast<int>(td.tree_edges.size()) == nodes - 1 && td.root >= 0 && td.root < nodes;
    std::vector<std::vector<int>> adj(nodes);
    for (auto [a, b] : td.tree_edges) {
        if (a < 0 || b < 0 || a >= nodes || b >= nodes || a == b) {
            tree_ok = false;
            continue;
        }
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    if (tree_ok) {
        std::vector<bool> seen(nodes, false);
        std::vector<int> stack{td.root};
        seen[td.root] = true;
        int count = 1;
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            for (int s : adj[t])
                if (!seen[s]) {
                    seen[s] = true;
                    ++count;
                    stack.push_back(s);
                }
        }
        tree_ok = count == nodes;
    }
    if (!tree_ok) out.problems.push_back({K::not_a_tree, -1, -1, "decomposition tree is not a tree"});

    std::vector<std::vector<int>> where(g.n());
    for (int t = 0; t < nodes; ++t)
        for (int v : td.bags[t]) {
            if (v < 0 || v >= g.n()) {
                out.problems.push_back({K::bad_vertex, v, t, "bag " + std::to_string(t) + " has bad vertex"});
                continue;
            }
            where[v].push_back(t);
        }
    for (int v = 0; v < g.n(); ++v) {
        std::sort(where[v].begin(), where[v].end());
        if (where[v].empty())
            out.problems.push_back({K::missing_vertex, v, -1, "vertex " + std::to_string(v) + " in no bag"});
    }
    for (auto [u, v] : g.edges()) {
        std::vector<int> both;
        std::set_intersection(where[u].begin(), where[u].end(), where[v].begin(), where[v].end(),
                              std::back_inserter(both));
        if (both.empty())
            out.problems.push_back({K::uncovered_edge, u, v,
                                    "edge " + std::to_string(u) + "-" + std::to_string(v) + " uncovered"});
    }
    if (tree_ok) {
        std::vector<int> inside(nodes, 0);
        for (int v = 0; v < g.n(); ++v) {
            if (where[v].empty()) continue;
            for (int t : where[v]) inside[t] = 1;
            std::size_t links = 0;
            for (int t : where[v])
                for (int s : adj[t])
                    if (inside[s]) ++links;
            if (links / 2 + 1 != where[v].size())
                out.problems.push_back({K::disconnected, v, -1,
                                        "bags of vertex " + std::to_string(v) + " are not connected"});
            for (int t : where[v]) inside[t] = 0;
        }
    }
    return out;
}

namespace {

// Elimination game on sorted adjacency vectors.
class EliminationGraph {
public:
    explicit EliminationGraph(const Graph& g) : adj_(g.n()), alive_(g.n(), true) {
        for (int v = 0; v < g.n(); ++v) adj_[v] = g.neighbors(v);
    }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    long fill_in(int v) const {
        const auto& nb = adj_[v];
        long missing = 0;
        for (std::size_t i = 0; i < nb.size(); ++i) {
            const auto& a = adj_[nb[i]];
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (!std::binary_search(a.begin(), a.end(), nb[j])) ++missing;
        }
        return missing;
    }

    std::vector<int> eliminate(int v) {
        std::vector<int> nb = std::move(adj_[v]);
        adj_[v].clear();
        alive_[v] = false;
        for (int u : nb) {
            std::vector<int> merged;
            merged.reserve(adj_[u].size() + nb.size());
            std::set_union(adj_[u].begin(), adj_[u].end(), nb.begin(), nb.end(), std::back_inserter(merged));
            merged.erase(std::remove_if(merged.begin(), merged.end(), [&](int w) { return w == u || w == v; }),
                         merged.end());
            adj_[u] = std::move(merged);
        }
        return nb;
    }

private:
    std::vector<std::vector<int>> adj_;
    std::vector<bool> alive_;
};

std::vector<int> tie_priority(int n, std::uint64_t seed) {
    std::vector<int> prio(n);
    std::iota(prio.begin(), prio.end(), 0);
    if (seed != 0) {
        std::mt19937_64 rng(seed);
        std::shuffle(prio.begin(), prio.end(), rng);
    }
    return prio;
}

}  // namespace

std::vector<int> elimination_order(const Graph& g, Heuristic h, std::uint64_t seed) {
    const int n = g.n();
    EliminationGraph eg(g);
    auto prio = tie_priority(n, seed);
    auto score_of = [&](int v) {
        return h == Heuristic::min_fill ? eg.fill_in(v) : static_cast<long>(eg.neighbors(v).size());
    };
    std::vector<long> score(n);
    std::set<std::tuple<long, int, int>> queue;
    for (int v = 0; v < n; ++v) {
        score[v] = score_of(v);
        queue.emplace(score[v], prio[v], v);
    }
    std::vector<bool> alive(n, true);
    std::vector<int> stamp(n, -1);
    std::vector<int> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        const int best = std::get<2>(*queue.begin());
        queue.erase(queue.begin());
        auto nb = eg.eliminate(best);
        alive[best] = false;
        order.push_back(best);
        std::vector<int> touched;
        auto touch = [&](int u) {
            if (alive[u] && stamp[u] != step) {
                stamp[u] = step;
                touched.push_back(u);
            }
        };
        for (int u : nb) {
            touch(u);
            if (h == Heuristic::min_fill)
                for (int w : eg.neighbors(u)) touch(w);
        }
        for (int u : touched) {
            queue.erase({score[u], prio[u], u});
            score[u] = score_of(u);
            queue.emplace(score[u], prio[u], u);
        }
    }
    return order;
}

TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<int>& order) {
    const int n = g.n();
    TreeDecomposition td;
    if (n == 0) {
        td.bags.push_back({});
        return td;
    }
    if (static_cast<int>(order.size()) != n) throw input_error("elimination order has wrong length");
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        if (order[i] < 0 || order[i] >= n || pos[order[i]] >= 0) throw input_error("bad elimination order");
        pos[order[i]] = i;
    }
    EliminationGraph eg(g);
    std::vector<std::vector<int>> bag(n);
    std::vector<int> parent(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        auto nb = eg.eliminate(v);
        bag[i] = nb;
        bag[i].push_back(v);
        std::sort(bag[i].begin(), bag[i].end());
        int p = -1;
        for (int u : nb)
            if (p < 0 || pos[u] < p) p = pos[u];
        parent[i] = p;
    }
    // Roots of the elimination forest are chained together.
    std::vector<std::set<int>> adj(n);
    int prev_root = -1;
    for (int i = 0; i < n; ++i) {
        if (parent[i] >= 0) {
            adj[i].insert(parent[i]);
            adj[parent[i]].insert(i);
        } else {
            if (prev_root >= 0) {
                adj[i].insert(prev_root);
                adj[prev_root].insert(i);
            }
            prev_root = i;
        }
    }
    // Absorb bags contained in a neighboring bag.
    std::vector<bool> gone(n, false);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < n; ++a) {
            if (gone[a]) continue;
            for (int b : adj[a]) {
                if (!std::includes(bag[b].begin(), bag[b].end(), bag[a].begin(), bag[a].end())) continue;
                for (int c : adj[a]) {
                    if (c == b) continue;
                    adj[c].erase(a);
                    adj[c].insert(b);
                    adj[b].insert(c);
                }
                adj[b].erase(a);
                adj[a].clear();
                gone[a] = true;
                changed = true;
                break;
            }
        }
    }
    std::vector<int> id(n, -1);
    for (int i = 0; i < n; ++i)
        if (!gone[i]) {
            id[i] = td.size();
            td.bags.push_back(bag[i]);
        }
    for (int i = 0; i < n; ++i)
        for (int j : adj[i])
            if (i < j) td.tree_edges.emplace_back(id[i], id[j]);
    td.root = td.size() - 1;
    return td;
}

namespace {
// Min-fill scoring costs too much beyond this many vertices; min-degree alone is used there.
constexpr int kMinFillLimit = 50'000;
}  // namespace

TreeDecomposition heuristic_decompose(const Graph& g, std::uint64_t seed) {
    auto deg = decomposition_from_order(g, elimination_order(g, Heuristic::min_degree, seed));
    if (g.n() > kMinFillLimit) return deg;
    auto fill = decomposition_from_order(g, elimination_order(g, Heuristic::min_fill, seed));
    return deg.width() < fill.width() ? deg : fill;
}

int NiceTreeDecomposition::width() const {
    int w = -1;
    for (const auto& nd : nodes) w = std::max(w, static_cast<int>(nd.bag.size()) - 1);
    return w;
}

TreeDecomposition NiceTreeDecomposition::as_td() const {
    TreeDecomposition td;
    for (const auto& nd : nodes) td.bags.push_back(nd.bag);
    for (int t = 0; t < static_cast<int>(nodes.size()); ++t)
        for (int c : nodes[t].children) td.tree_edges.emplace_back(t, c);
    td.root = root;
    return td;
}

std::vector<int> NiceTreeDecomposition::subtree_sizes() const {
    std::vector<int> sz(nodes.size(), 1);
    for (std::size_t t = 0; t < nodes.size(); ++t)
        for (int c : nodes[t].children) sz[t] += sz[c];
    return sz;
}

namespace {

class NiceBuilder {
public:
    explicit NiceBuilder(const TreeDecomposition& td) : td_(td), ch_(td.children()) {}

    int add(NodeKind kind, int vertex, std::vector<int> bag, std::vector<int> children) {
        int size = 1;
        for (int c : children) size += sizes_[c];
        out.nodes.push_back({kind, vertex, std::move(bag), std::move(children)});
        sizes_.push_back(size);
        return static_cast<int>(out.nodes.size()) - 1;
    }

    // Forget then introduce, both ascending, to move node `from` to `target`.
    int morph(int from, const std::vector<int>& target) {
        int cur = from;
        std::vector<int> bag = out.nodes[cur].bag;
        std::vector<int> drop, gain;
        std::set_difference(bag.begin(), bag.end(), target.begin(), target.end(), std::back_inserter(drop));
        std::set_difference(target.begin(), target.end(), bag.begin(), bag.end(), std::back_inserter(gain));
        for (int v : drop) {
            bag.erase(std::find(bag.begin(), bag.end(), v));
            cur = add(NodeKind::forget, v, bag, {cur});
        }
        for (int v : gain) {
            bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
            cur = add(NodeKind::introduce, v, bag, {cur});
        }
        return cur;
    }

    void effective_children(int t, std::vector<int>& acc) const {
        for (int c : ch_[t]) {
            if (td_.bags[c] == td_.bags[t])
                effective_children(c, acc);
            else
                acc.push_back(c);
        }
    }

    int build(int t) {
        const auto& bag = td_.bags[t];
        std::vector<int> kids;
        effective_children(t, kids);
        std::vector<int> parts;
        for (int c : kids) parts.push_back(morph(build(c), bag));
        if (parts.empty()) parts.push_back(morph(add(NodeKind::leaf, -1, {}, {}), bag));
        int cur = parts[0];
        for (std::size_t i = 1; i < parts.size(); ++i) {
            int a = cur, b = parts[i];
            if (sizes_[b] < sizes_[a]) std::swap(a, b);
            cur = add(NodeKind::join, -1, bag, {a, b});
        }
        return cur;
    }

    NiceTreeDecomposition out;

private:
    const TreeDecomposition& td_;
    std::vector<std::vector<int>> ch_;
    std::vector<int> sizes_;
};

}  // namespace

NiceTreeDecomposition make_nice(const TreeDecomposition& td, const std::vector<int>& root_bag) {
    NiceBuilder b(td);
    if (td.bags.empty()) {
        if (!root_bag.empty()) throw input_error("root bag not contained in decomposition");
        b.out.root = b.add(NodeKind::leaf, -1, {}, {});
        return std::move(b.out);
    }
    int top = b.build(td.root);
    std::vector<int> keep = root_bag;
    std::sort(keep.begin(), keep.end());
    const auto& rb = b.out.nodes[top].bag;
    if (!std::includes(rb.begin(), rb.end(), keep.begin(), keep.end()))
        throw input_error("root bag not contained in decomposition root");
    b.out.root = b.morph(top, keep);
    return std::move(b.out);
}

std::string check_nice(const NiceTreeDecomposition& ntd) {
    const int n = static_cast<int>(ntd.nodes.size());
    if (ntd.root != n - 1) return "root is not the last node";
    for (int t = 0; t < n; ++t) {
        const auto& nd = ntd.nodes[t];
        for (int c : nd.children)
            if (c < 0 || c >= t) return "node " + std::to_string(t) + " is not children-first";
        auto child_bag = [&](int i) -> const std::vector<int>& { return ntd.nodes[nd.children[i]].bag; };
        switch (nd.kind) {
        case NodeKind::leaf:
            if (!nd.children.empty() || !nd.bag.empty()) return "bad leaf " + std::to_string(t);
            break;
        case NodeKind::introduce: {
            if (nd.children.size() != 1) return "bad introduce " + std::to_string(t);
            auto expect = child_bag(0);
            if (std::binary_search(expect.begin(), expect.end(), nd.vertex)) return "bad introduce " + std::to_string(t);
            expect.insert(std::lower_bound(expect.begin(), expect.end(), nd.vertex), nd.vertex);
            if (expect != nd.bag) return "bad introduce " + std::to_string(t);
            break;
        }
        case NodeKind::forget: {
            if (nd.children.size() != 1) return "bad forget " + std::to_string(t);
            auto expect = child_bag(0);
            auto it = std::lower_bound(expect.begin(), expect.end(), nd.vertex);
            if (it == expect.end() || *it != nd.vertex) return "bad forget " + std::to_string(t);
            expect.erase(it);
            if (expect != nd.bag) return "bad forget " + std::to_string(t);
            break;
        }
        case NodeKind::join:
            if (nd.children.size() != 2 || child_bag(0) != nd.bag || child_bag(1) != nd.bag)
                return "bad join " + std::to_string(t);
            break;
        }
    }
    return {};
}

TreeDecomposition read_td(std::istream& in, int* n_out) {
    TreeDecomposition td;
    std::string line;
    int line_no = 0;
    bool header = false;
    long long nbags = 0, n = 0;
    int root = 0;
    std::vector<bool> seen;
    auto fail = [&](const std::string& what) {
        throw input_error("td line " + std::to_string(line_no) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (tok == "c") {
            std::string key;
            long long id;
            if (ls >> key && key == "root") {
                if (!(ls >> id) || id < 1) fail("bad root line");
                root = static_cast<int>(id - 1);
            }
            continue;
        }
        if (tok == "s") {
            std::string kind;
            long long w;
            if (header || !(ls >> kind >> nbags >> w >> n) || kind != "td" || nbags < 0 || n < 0)
                fail("bad header");
            header = true;
            td.bags.assign(nbags, {});
            seen.assign(nbags, false);
            continue;
        }
        if (!header) fail("content before header");
        if (tok == "b") {
            long long id, v;
            if (!(ls >> id) || id < 1 || id > nbags || seen[id - 1]) fail("bad bag id");
            seen[id - 1] = true;
            while (ls >> v) {
                if (v < 1 || v > n) fail("vertex out of range");
                td.bags[id - 1].push_back(static_cast<int>(v - 1));
            }
            auto& b = td.bags[id - 1];
            std::sort(b.begin(), b.end());
            b.erase(std::unique(b.begin(), b.end()), b.end());
            continue;
        }
        std::istringstream es(line);
        long long a, b;
        if (!(es >> a >> b) || a < 1 || b < 1 || a > nbags || b > nbags) fail("bad tree edge");
        td.tree_edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
    }
    if (!header) throw input_error("td: missing header");
    if (nbags > 0 && (root < 0 || root >= nbags)) throw input_error("td: root out of range");
    td.root = root;
    if (n_out) *n_out = static_cast<int>(n);
    return td;
}

TreeDecomposition read_td_file(const std::string& path, int* n_out) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    return read_td(in, n_out);
}

void write_td(std::ostream& out, const TreeDecomposition& td, int n, const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "c " << c << '\n';
    if (td.root != 0) out << "c root " << td.root + 1 << '\n';
    out << "s td " << td.size() << ' ' << td.width() + 1 << ' ' << n << '\n';
    for (int t = 0; t < td.size(); ++t) {
        out << "b " << t + 1;
        for (int v : td.bags[t]) out << ' ' << v + 1;
        out << '\n';
    }
    for (auto [a, b] : td.tree_edges) out << a + 1 << ' ' << b + 1 << '\n';
}

}  // namespace sqcol
