#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "sqcol/errors.hpp"
#include "sqcol/planar.hpp"

namespace sqcol {

int ProtrusionDecomposition::k() const {
    int k = 0;
    for (const auto& c : children)
        for (const auto& b : c.td.bags) k = std::max(k, static_cast<int>(b.size()));
    return k;
}

TreeDecomposition ProtrusionDecomposition::as_td() const {
    TreeDecomposition td;
    td.bags.push_back(X);
    td.root = 0;
    for (const auto& c : children) {
        const int off = td.size();
        for (const auto& b : c.td.bags) td.bags.push_back(b);
        for (auto [a, b] : c.td.tree_edges) td.tree_edges.emplace_back(a + off, b + off);
        td.tree_edges.emplace_back(0, c.td.root + off);
    }
    return td;
}

ProtrusionDecomposition build_protrusion_decomposition(const Graph& g, const std::vector<int>& D, int r0) {
    const int n = g.n();
    std::vector<int> dist(n, -1);
    std::vector<int> queue;
    for (int d : D) {
        if (d < 0 || d >= n) throw input_error("dominating set vertex out of range");
        if (dist[d] < 0) {
            dist[d] = 0;
            queue.push_back(d);
        }
    }
    for (std::size_t h = 0; h < queue.size(); ++h) {
        int v = queue[h];
        if (dist[v] >= r0) continue;
        for (int w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    ProtrusionDecomposition pd;
    std::vector<char> in_x(n, 0);
    for (int v = 0; v < n; ++v)
        if (dist[v] >= 0) {
            pd.X.push_back(v);
            in_x[v] = 1;
        }
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (!in_x[v]) rest.push_back(v);
    auto outside = induced_subgraph(g, rest);
    for (auto comp : connected_components(outside.graph)) {
        ProtrusionChild child;
        std::vector<char> mark(n, 0);
        for (int& v : comp) v = outside.to_parent[v];
        for (int v : comp)
            for (int w : g.neighbors(v))
                if (in_x[w] && !mark[w]) {
                    mark[w] = 1;
                    child.Y.push_back(w);
                }
        std::sort(child.Y.begin(), child.Y.end());
        child.vertices = comp;
        child.vertices.insert(child.vertices.end(), child.Y.begin(), child.Y.end());
        std::sort(child.vertices.begin(), child.vertices.end());
        auto sub = induced_subgraph(g, child.vertices);
        Graph h = sub.graph;
        std::vector<int> ylocal;
        for (int y : child.Y)
            ylocal.push_back(static_cast<int>(std::lower_bound(child.vertices.begin(), child.vertices.end(), y) -
                                              child.vertices.begin()));
        for (std::size_t a = 0; a < ylocal.size(); ++a)
            for (std::size_t b = a + 1; b < ylocal.size(); ++b) h.add_edge(ylocal[a], ylocal[b]);
        child.td = heuristic_decompose(h);
        for (auto& bag : child.td.bags)
            for (int& v : bag) v = sub.to_parent[v];
        child.td.root = 0;
        for (int t = 0; t < child.td.size(); ++t)
            if (std::includes(child.td.bags[t].begin(), child.td.bags[t].end(), child.Y.begin(), child.Y.end())) {
                child.td.root = t;
                break;
            }
        pd.children.push_back(std::move(child));
    }
    return pd;
}

ProtrusionDecomposition protrusion_from_td(const TreeDecomposition& td) {
    if (td.size() == 0) throw input_error("empty protrusion decomposition");
    ProtrusionDecomposition pd;
    pd.X = td.bags[td.root];
    std::sort(pd.X.begin(), pd.X.end());
    const auto kids = td.children();
    for (int top : kids[td.root]) {
        ProtrusionChild child;
        std::vector<int> ids, stack{top};
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            ids.push_back(t);
            for (int c : kids[t]) stack.push_back(c);
        }
        std::sort(ids.begin(), ids.end());
        std::map<int, int> local;
        for (int t : ids) {
            local[t] = child.td.size();
            child.td.bags.push_back(td.bags[t]);
            std::sort(child.td.bags.back().begin(), child.td.bags.back().end());
            child.vertices.insert(child.vertices.end(), td.bags[t].begin(), td.bags[t].end());
        }
        for (int t : ids)
            for (int c : kids[t]) child.td.tree_edges.emplace_back(local[t], local[c]);
        child.td.root = local[top];
        std::sort(child.vertices.begin(), child.vertices.end());
        child.vertices.erase(std::unique(child.vertices.begin(), child.vertices.end()), child.vertices.end());
        const auto& rb = child.td.bags[child.td.root];
        std::set_intersection(rb.begin(), rb.end(), pd.X.begin(), pd.X.end(), std::back_inserter(child.Y));
        pd.children.push_back(std::move(child));
    }
    return pd;
}

void write_protrusion(std::ostream& out, const ProtrusionDecomposition& pd, int n) {
    write_td(out, pd.as_td(), n,
             {"protrusion " + std::to_string(pd.alpha()) + " " + std::to_string(pd.delta()) + " " +
              std::to_string(pd.k())});
}

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
        return h;
    }
};

struct Demand {
    int child = 0;
    int slot = 0;  // index into the child's rho
    int target = 0;
    std::vector<int> shared;  // indices of interface vertices shared by several children
    std::vector<char> bad;    // per color, forbidden by (ii), (v) or (vi)
};

}  // namespace

std::optional<std::vector<std::vector<std::vector<int>>>> gamma_solve(const Graph& g, const GammaContext& ctx) {
    const int q = ctx.q;
    const int nc = static_cast<int>(ctx.children.size());
    std::unordered_map<int, int> xpos;
    for (std::size_t i = 0; i < ctx.X.size(); ++i) xpos[ctx.X[i]] = static_cast<int>(i);
    auto chi_of = [&](int v) {
        auto it = xpos.find(v);
        if (it == xpos.end()) throw input_error("interface vertex outside X");
        return ctx.chi_x[it->second];
    };
    std::unordered_map<int, int> owners;
    for (const auto& ch : ctx.children)
        for (int y : ch.Y) ++owners[y];
    std::unordered_map<int, int> shared_id;
    for (int x : ctx.X)
        if (owners[x] > 1) shared_id.emplace(x, static_cast<int>(shared_id.size()));
    const int S = static_cast<int>(shared_id.size());

    std::vector<Demand> dem;
    std::vector<std::vector<int>> by_child(nc);
    for (int i = 0; i < nc; ++i) {
        const auto& ch = ctx.children[i];
        std::vector<char> bag_color(q + 1, 0);
        for (int c : ch.chi)
            if (c >= 1 && c <= q) bag_color[c] = 1;
        for (int k = 0; k < static_cast<int>(ch.rho.size()); ++k) {
            auto [mask, cnt] = ch.rho[k];
            if (cnt <= 0) continue;
            Demand d;
            d.child = i;
            d.slot = k;
            d.target = cnt;
            d.bad = bag_color;
            std::vector<int> A;
            for (std::size_t p = 0; p < ch.Y.size(); ++p)
                if (mask >> p & 1) A.push_back(ch.Y[p]);
            for (int u : A) {
                if (auto it = shared_id.find(u); it != shared_id.end()) d.shared.push_back(it->second);
                for (int v : g.neighbors(u))
                    if (xpos.count(v)) d.bad[chi_of(v)] = 1;
            }
            // A vertex of A whose other cone already sees color chi(v) through xi.
            for (int j = 0; j < nc; ++j) {
                if (j == i) continue;
                const auto& other = ctx.children[j];
                for (std::size_t pv = 0; pv < other.Y.size(); ++pv)
                    for (std::size_t pu = 0; pu < other.Y.size(); ++pu)
                        if ((other.xi[pv] >> pu & 1) && std::binary_search(A.begin(), A.end(), other.Y[pu]))
                            d.bad[other.chi[pv]] = 1;
            }
            by_child[i].push_back(static_cast<int>(dem.size()));
            dem.push_back(std::move(d));
        }
    }
    const int nd = static_cast<int>(dem.size());
    if (nd == 0) return std::vector<std::vector<std::vector<int>>>(nc, std::vector<std::vector<int>>());
    for (int i = 0; i < nc; ++i) {
        int need = 0;
        for (int d : by_child[i]) need += dem[d].target;
        if (need > q) return std::nullopt;
    }

    // Steps run over (color, child); a state is the count per demand followed by the
    // shared interface vertices already claimed by the current color.
    struct Node {
        int parent;
        int choice;
    };
    std::vector<std::vector<std::vector<int>>> keys;
    std::vector<std::vector<Node>> nodes;
    keys.push_back({std::vector<int>(nd + S, 0)});
    nodes.push_back({{-1, -1}});
    std::vector<int> kids_with_demand;
    for (int i = 0; i < nc; ++i)
        if (!by_child[i].empty()) kids_with_demand.push_back(i);
    for (int c = 1; c <= q; ++c) {
        for (std::size_t ki = 0; ki < kids_with_demand.size(); ++ki) {
            const int i = kids_with_demand[ki];
            const bool last = ki + 1 == kids_with_demand.size();
            const auto& prev = keys.back();
            std::vector<std::vector<int>> nk;
            std::vector<Node> nn;
            std::unordered_map<std::vector<int>, int, VecHash> index;
            auto push = [&](std::vector<int> s, int parent, int choice) {
                if (last) {
                    for (int d = 0; d < nd; ++d)
                        if (dem[d].target - s[d] > q - c) return;
                    std::fill(s.begin() + nd, s.end(), 0);
                }
                if (index.emplace(s, static_cast<int>(nk.size())).second) {
                    nk.push_back(std::move(s));
                    nn.push_back({parent, choice});
                }
            };
            for (int si = 0; si < static_cast<int>(prev.size()); ++si) {
                const auto& s = prev[si];
                push(s, si, -1);
                for (int d : by_child[i]) {
                    if (dem[d].bad[c] || s[d] >= dem[d].target) continue;
                    bool clash = false;
                    for (int x : dem[d].shared)
                        if (s[nd + x]) {
                            clash = true;
                            break;
                        }
                    if (clash) continue;
                    auto t = s;
                    ++t[d];
                    for (int x : dem[d].shared) t[nd + x] = 1;
                    push(std::move(t), si, d);
                }
            }
            if (nk.empty()) return std::nullopt;
            keys.push_back(std::move(nk));
            nodes.push_back(std::move(nn));
        }
    }
    const auto& fin = keys.back();
    int goal = -1;
    for (int si = 0; si < static_cast<int>(fin.size()) && goal < 0; ++si) {
        bool ok = true;
        for (int d = 0; d < nd && ok; ++d) ok = fin[si][d] == dem[d].target;
        if (ok) goal = si;
    }
    if (goal < 0) return std::nullopt;
    std::vector<std::vector<std::vector<int>>> eta(nc);
    for (int i = 0; i < nc; ++i) eta[i].resize(ctx.children[i].rho.size());
    const int per_color = static_cast<int>(kids_with_demand.size());
    int cur = goal;
    for (int layer = static_cast<int>(keys.size()) - 1; layer >= 1; --layer) {
        const auto& node = nodes[layer][cur];
        if (node.choice >= 0) {
            const int color = (layer - 1) / per_color + 1;
            eta[dem[node.choice].child][dem[node.choice].slot].push_back(color);
        }
        cur = node.parent;
    }
    for (auto& ch : eta)
        for (auto& cols : ch) std::sort(cols.begin(), cols.end());
    return eta;
}

bool gamma_feasible(const Graph& g, const GammaContext& ctx) { return gamma_solve(g, ctx).has_value(); }

namespace {

struct ChildRun {
    Subgraph sub;
    NiceTreeDecomposition ntd;
    std::vector<DpTable> tables;
    const DpTable* root = nullptr;
    std::vector<int> yx;                        // X index per interface position
    std::vector<std::vector<int>> x_nbrs;       // per interface position, X indices adjacent in G
    std::unordered_map<std::string, std::vector<int>> by_chi;
    int ready = -1;                             // X-order position after which the interface is colored
};

class Search {
public:
    Search(const Graph& g, int q, const ProtrusionDecomposition& pd, std::vector<ChildRun>& kids,
           const ProtrusionOptions& opt)
        : g_(g), q_(q), pd_(pd), kids_(kids), opt_(opt), nx_(static_cast<int>(pd.X.size())) {
        xpos_.assign(g.n(), -1);
        for (int i = 0; i < nx_; ++i) xpos_[pd.X[i]] = i;
        const Subgraph gx = induced_subgraph(g, pd.X);
        near_.resize(nx_);
        for (int i = 0; i < nx_; ++i)
            for (int j : dist2_closed_neighborhood(gx.graph, i))
                if (j < i) near_[i].push_back(j);
        ready_at_.resize(nx_ + 1);
        viable_at_.resize(nx_ + 1);
        for (int c = 0; c < static_cast<int>(kids_.size()); ++c) {
            ready_at_[kids_[c].ready + 1].push_back(c);
            int last = kids_[c].ready;
            for (const auto& nb : kids_[c].x_nbrs)
                for (int v : nb) last = std::max(last, v);
            viable_at_[last + 1].push_back(c);
        }
        chi_.assign(nx_, 0);
        mark_.assign(q + 1, std::vector<int>(nx_, 0));
        pick_.assign(kids_.size(), -1);
    }

    bool run() {
        for (int c : ready_at_[0])
            if (!kid_has_chi(c)) return false;
        for (int c : viable_at_[0])
            if (!kid_viable(c)) return false;
        return color(0, 0);
    }

    std::size_t iterations() const { return iterations_; }
    const std::vector<int>& chi() const { return best_chi_; }
    const std::vector<int>& picks() const { return best_pick_; }
    const std::vector<std::vector<std::vector<int>>>& eta() const { return best_eta_; }

private:
    std::string key_for(int c) const {
        const auto& k = kids_[c];
        std::string s(k.yx.size(), '\0');
        for (std::size_t p = 0; p < k.yx.size(); ++p) s[p] = static_cast<char>(chi_[k.yx[p]]);
        return s;
    }

    bool kid_has_chi(int c) const { return kids_[c].by_chi.count(key_for(c)) > 0; }

    bool color(int i, int used) {
        if (i == nx_) {
            if (++iterations_ > opt_.max_outer) throw resource_error("protrusion outer loop exceeds its budget");
            return choose(0);
        }
        const int top = std::min(q_, used + 1);
        for (int c = 1; c <= top; ++c) {
            bool ok = true;
            for (int j : near_[i])
                if (chi_[j] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chi_[i] = c;
            for (int k : ready_at_[i + 1])
                if (!kid_has_chi(k)) {
                    ok = false;
                    break;
                }
            for (int k : viable_at_[i + 1])
                if (ok && !kid_viable(k)) ok = false;
            if (ok && color(i + 1, std::max(used, c))) return true;
            chi_[i] = 0;
        }
        return false;
    }

    // (PL.2) for one entry under the current chi.
    bool pl2(const ChildRun& k, const DpEntry& e) const {
        for (std::size_t w = 0; w < e.xi.size(); ++w)
            for (std::size_t u = 0; u < e.xi.size(); ++u) {
                if (!(e.xi[w] >> u & 1)) continue;
                for (int v : k.x_nbrs[u])
                    if (chi_[v] == e.chi[w]) return false;
            }
        return true;
    }

    GammaContext::Child gamma_child(int c, const DpEntry& e) const {
        GammaContext::Child ch;
        ch.Y = pd_.children[c].Y;
        for (auto x : e.chi) ch.chi.push_back(x);
        ch.xi = e.xi;
        for (auto [m, cnt] : e.rho) ch.rho.emplace_back(m, cnt);
        return ch;
    }

    // Some entry survives (PL.2) and the demands of this child alone; the other
    // children only add constraints.
    bool kid_viable(int c) const {
        const auto& k = kids_[c];
        auto it = k.by_chi.find(key_for(c));
        if (it == k.by_chi.end()) return false;
        GammaContext ctx;
        ctx.q = q_;
        ctx.X = pd_.X;
        ctx.chi_x = chi_;
        for (int ei : it->second) {
            const auto& e = k.root->entries[ei];
            if (!pl2(k, e)) continue;
            ctx.children.assign(1, gamma_child(c, e));
            if (gamma_feasible(g_, ctx)) return true;
        }
        return false;
    }

    bool choose(int c) {
        if (c == static_cast<int>(kids_.size())) return gamma();
        const auto& k = kids_[c];
        auto it = k.by_chi.find(key_for(c));
        if (it == k.by_chi.end()) return false;
        for (int ei : it->second) {
            const auto& e = k.root->entries[ei];
            if (!pl2(k, e)) continue;
            // (PL.3): per bag color, the cone-adjacent interface vertices of distinct children are disjoint.
            std::vector<std::pair<int, int>> added;
            bool ok = true;
            for (std::size_t p = 0; p < e.chi.size() && ok; ++p)
                for (std::size_t u = 0; u < e.chi.size(); ++u) {
                    if (!(e.xi[p] >> u & 1)) continue;
                    const int col = e.chi[p], x = k.yx[u];
                    bool mine = false;
                    for (auto [ac, ax] : added)
                        if (ac == col && ax == x) mine = true;
                    if (mine) continue;
                    if (mark_[col][x]) {
                        ok = false;
                        break;
                    }
                    added.emplace_back(col, x);
                    mark_[col][x] = 1;
                }
            if (ok) {
                pick_[c] = ei;
                if (choose(c + 1)) return true;
            }
            for (auto [col, x] : added) mark_[col][x] = 0;
        }
        return false;
    }

    bool gamma() {
        GammaContext ctx;
        ctx.q = q_;
        ctx.X = pd_.X;
        ctx.chi_x = chi_;
        for (std::size_t c = 0; c < kids_.size(); ++c)
            ctx.children.push_back(gamma_child(static_cast<int>(c), kids_[c].root->entries[pick_[c]]));
        auto eta = gamma_solve(g_, ctx);
        if (!eta) return false;
        best_chi_ = chi_;
        best_pick_ = pick_;
        best_eta_ = std::move(*eta);
        return true;
    }

    const Graph& g_;
    int q_;
    const ProtrusionDecomposition& pd_;
    std::vector<ChildRun>& kids_;
    const ProtrusionOptions& opt_;
    int nx_;
    std::vector<int> xpos_;
    std::vector<std::vector<int>> near_;
    std::vector<std::vector<int>> ready_at_;
    std::vector<std::vector<int>> viable_at_;
    std::vector<int> chi_;
    std::vector<std::vector<int>> mark_;
    std::vector<int> pick_;
    std::size_t iterations_ = 0;
    std::vector<int> best_chi_, best_pick_;
    std::vector<std::vector<std::vector<int>>> best_eta_;
};

}  // namespace

ProtrusionResult protrusion_decide(const Graph& g, int q, const ProtrusionDecomposition& pd,
                                   const ProtrusionOptions& opt) {
    if (q < 0) throw input_error("q must be nonnegative");
    if (q > 255) throw resource_error("color budget above 255 is outside the table encoding");
    ProtrusionResult res;
    if (auto v = validate(g, pd.as_td()); !v.ok())
        throw input_error("protrusion decomposition is invalid: " + v.problems.front().message);
    if (pd.k() > opt.k_cap) {
        res.fallback = true;
        DpOptions o = opt.dp;
        auto r = decide_tw(g, q, o);
        res.yes = r.yes;
        res.witness = r.witness;
        return res;
    }
    if (g.n() == 0) {
        res.yes = true;
        if (opt.dp.witness) res.witness = Coloring{};
        return res;
    }
    if (q == 0) return res;
    const bool want = opt.dp.witness;
    std::vector<int> xpos(g.n(), -1);
    for (std::size_t i = 0; i < pd.X.size(); ++i) xpos[pd.X[i]] = static_cast<int>(i);
    std::vector<ChildRun> kids(pd.children.size());
    for (std::size_t c = 0; c < pd.children.size(); ++c) {
        const auto& pc = pd.children[c];
        auto& k = kids[c];
        k.sub = induced_subgraph(g, pc.vertices);
        TreeDecomposition local = pc.td;
        for (auto& bag : local.bags)
            for (int& v : bag) {
                auto it = std::lower_bound(pc.vertices.begin(), pc.vertices.end(), v);
                if (it == pc.vertices.end() || *it != v) throw input_error("child bag vertex outside its part");
                v = static_cast<int>(it - pc.vertices.begin());
            }
        std::vector<int> ylocal;
        for (int y : pc.Y)
            ylocal.push_back(static_cast<int>(std::lower_bound(pc.vertices.begin(), pc.vertices.end(), y) -
                                              pc.vertices.begin()));
        k.ntd = make_nice(local, ylocal);
        const int w = k.ntd.width();
        if (opt.dp.max_bag > 0 && w + 1 > opt.dp.max_bag)
            throw resource_error("bag size " + std::to_string(w + 1) + " exceeds --max-bag");
        if (std::ldexp(1.0, w + 1) * std::log2(static_cast<double>(q) + 1) > opt.dp.width_budget_bits)
            throw resource_error("width " + std::to_string(w) + " is beyond the table budget");
        DpStats st;
        k.tables = run_tables(k.sub.graph, q, k.ntd, opt.dp, st, want);
        k.root = want ? &k.tables[k.ntd.root] : &k.tables[0];
        res.child_entries += st.table_entries_total;
        for (int y : pc.Y) {
            k.yx.push_back(xpos[y]);
            k.ready = std::max(k.ready, xpos[y]);
            std::vector<int> nb;
            for (int v : g.neighbors(y))
                if (xpos[v] >= 0) nb.push_back(xpos[v]);
            k.x_nbrs.push_back(std::move(nb));
        }
        for (int ei = 0; ei < static_cast<int>(k.root->entries.size()); ++ei) {
            const auto& chi = k.root->entries[ei].chi;
            k.by_chi[std::string(chi.begin(), chi.end())].push_back(ei);
        }
        if (k.root->entries.empty()) return res;
    }
    Search search(g, q, pd, kids, opt);
    res.yes = search.run();
    res.outer_iterations = search.iterations();
    if (!res.yes || !want) return res;

    Coloring col(g.n(), 0);
    for (std::size_t i = 0; i < pd.X.size(); ++i) col[pd.X[i]] = search.chi()[i];
    for (std::size_t c = 0; c < kids.size(); ++c) {
        const auto& k = kids[c];
        const auto& pc = pd.children[c];
        const int ei = search.picks()[c];
        const auto& e = k.root->entries[ei];
        Coloring local = extract_witness(k.sub.graph, q, k.ntd, k.tables, ei);
        const int nv = k.sub.graph.n();
        std::vector<char> in_y(nv, 0);
        std::vector<int> ypos(nv, -1);
        for (std::size_t p = 0; p < pc.Y.size(); ++p) {
            int l = static_cast<int>(std::lower_bound(pc.vertices.begin(), pc.vertices.end(), pc.Y[p]) -
                                     pc.vertices.begin());
            in_y[l] = 1;
            ypos[l] = static_cast<int>(p);
        }
        std::vector<std::uint32_t> cls(q + 1, 0);
        for (int l = 0; l < nv; ++l)
            if (in_y[l])
                for (int w : k.sub.graph.neighbors(l))
                    if (!in_y[w]) cls[local[w]] |= std::uint32_t{1} << ypos[l];
        std::vector<char> bag_color(q + 1, 0);
        for (auto x : e.chi) bag_color[x] = 1;
        std::map<std::uint32_t, std::vector<int>> free_by_class;
        for (int d = 1; d <= q; ++d)
            if (!bag_color[d]) free_by_class[cls[d]].push_back(d);
        std::vector<int> perm(q + 1);
        for (int d = 0; d <= q; ++d) perm[d] = d;
        for (std::size_t s = 0; s < e.rho.size(); ++s) {
            const auto& from = free_by_class[e.rho[s].first];
            const auto& to = search.eta()[c][s];
            if (from.size() != to.size()) throw std::logic_error("protrusion witness: class sizes disagree");
            for (std::size_t j = 0; j < from.size(); ++j) perm[from[j]] = to[j];
        }
        for (int l = 0; l < nv; ++l)
            if (!in_y[l]) col[pc.vertices[l]] = perm[local[l]];
    }
    if (verify_square_coloring(g, q, col)) throw std::logic_error("protrusion witness is invalid");
    res.witness = col;
    return res;
}

}  // namespace sqcol
