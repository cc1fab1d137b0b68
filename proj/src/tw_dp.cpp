#include "sqcol/tw_dp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "sqcol/errors.hpp"
#include "sqcol/ilp.hpp"
#include "sqcol/planar.hpp"

namespace sqcol {

namespace {

using Mask = std::uint32_t;
using Rho = std::vector<std::pair<Mask, std::uint16_t>>;

Mask insert_bit(Mask m, int p) {
    Mask low = m & ((Mask{1} << p) - 1);
    return low | ((m >> p) << (p + 1));
}

Mask remove_bit(Mask m, int p) {
    Mask low = m & ((Mask{1} << p) - 1);
    return low | ((m >> (p + 1)) << p);
}

std::size_t mix(std::size_t h, std::size_t x) { return (h ^ x) * 1099511628211ull; }

struct EntryHash {
    std::size_t operator()(const DpEntry& e) const {
        std::size_t h = 1469598103934665603ull;
        for (auto c : e.chi) h = mix(h, c);
        for (auto x : e.xi) h = mix(h, x);
        for (auto [m, c] : e.rho) h = mix(mix(h, m), c);
        return h;
    }
};

std::string chi_key(const std::vector<std::uint8_t>& chi) { return {chi.begin(), chi.end()}; }

// Deduplicating append-only entry list.
class EntryStore {
public:
    EntryStore(DpTable& t, std::size_t room)
        : t_(t), room_(room), index_(16, Hasher{&t}, Equal{&t}) {}

    void add(DpEntry e, int p1, int p2 = -1) {
        t_.entries.push_back(std::move(e));
        int id = static_cast<int>(t_.entries.size()) - 1;
        if (!index_.insert(id).second) {
            t_.entries.pop_back();
            return;
        }
        t_.pred.emplace_back(p1, p2);
        if (t_.entries.size() > room_) throw resource_error("table entries exceed budget");
    }

private:
    struct Hasher {
        const DpTable* t;
        std::size_t operator()(int i) const { return EntryHash{}(t->entries[i]); }
    };
    struct Equal {
        const DpTable* t;
        bool operator()(int a, int b) const { return t->entries[a] == t->entries[b]; }
    };
    DpTable& t_;
    std::size_t room_;
    std::unordered_set<int, Hasher, Equal> index_;
};

std::vector<Mask> bag_adjacency(const Graph& g, const std::vector<int>& bag) {
    std::vector<Mask> adj(bag.size(), 0);
    for (std::size_t i = 0; i < bag.size(); ++i)
        for (std::size_t j = 0; j < bag.size(); ++j)
            if (i != j && g.adjacent(bag[i], bag[j])) adj[i] |= Mask{1} << j;
    return adj;
}

Rho normalize(std::map<Mask, int>& acc) {
    Rho out;
    for (auto [m, c] : acc)
        if (c > 0) out.emplace_back(m, static_cast<std::uint16_t>(c));
    return out;
}

// All rho obtainable by merging left and right free-color classes (Join).
std::vector<Rho> join_outcomes(const Rho& left, const Rho& right) {
    int fl = 0, fr = 0;
    for (auto [m, c] : left) fl += c;
    for (auto [m, c] : right) fr += c;
    if (fl != fr) return {};
    if (fl == 0) return {Rho{}};
    ReachableIlp ilp;
    std::vector<int> lrow, rrow;
    for (auto [m, c] : left) lrow.push_back(ilp.add_row(c, true));
    for (auto [m, c] : right) rrow.push_back(ilp.add_row(c, true));
    std::map<Mask, int> out_row;
    std::vector<Mask> out_mask;
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = 0; j < right.size(); ++j) {
            if (left[i].first & right[j].first) continue;
            Mask u = left[i].first | right[j].first;
            if (!out_row.count(u)) {
                out_row[u] = -1;
            }
        }
    for (auto& [m, r] : out_row) {
        r = ilp.add_row(fl, false);
        out_mask.push_back(m);
    }
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = 0; j < right.size(); ++j) {
            if (left[i].first & right[j].first) continue;
            Mask u = left[i].first | right[j].first;
            int hi = std::min<int>(left[i].second, right[j].second);
            ilp.add_variable({{lrow[i], 1}, {rrow[j], 1}, {out_row[u], 1}}, hi);
        }
    std::vector<Rho> res;
    for (const auto& vals : ilp.outcomes()) {
        Rho r;
        for (std::size_t k = 0; k < vals.size(); ++k)
            if (vals[k] > 0) r.emplace_back(out_mask[k], static_cast<std::uint16_t>(vals[k]));
        res.push_back(std::move(r));
    }
    return res;
}

struct RhoHash {
    std::size_t operator()(const Rho& r) const {
        std::size_t h = 1469598103934665603ull;
        for (auto [m, c] : r) h = mix(mix(h, m), c);
        return h;
    }
};

struct PairHash {
    std::size_t operator()(const std::pair<int, int>& p) const {
        return mix(mix(1469598103934665603ull, static_cast<std::size_t>(p.first)), static_cast<std::size_t>(p.second));
    }
};

class TableBuilder {
public:
    TableBuilder(const Graph& g, int q, const DpOptions& opt, DpStats& stats)
        : g_(g), q_(q), opt_(opt), stats_(stats) {}

    // Entries the next table may hold before the budget is exceeded.
    void set_room(std::size_t room) { room_ = room; }

    void leaf(DpTable& out) {
        EntryStore store(out, room_);
        DpEntry e;
        if (q_ > 0) e.rho.emplace_back(0, static_cast<std::uint16_t>(q_));
        store.add(std::move(e), -1);
    }

    void introduce(const DpTable& child, int v, DpTable& out) {
        const int p = static_cast<int>(std::lower_bound(out.bag.begin(), out.bag.end(), v) - out.bag.begin());
        const int b = static_cast<int>(out.bag.size());
        const auto adj = bag_adjacency(g_, out.bag);
        const Mask nv = adj[p];
        Mask near = nv;
        for (int u = 0; u < b; ++u)
            if (nv >> u & 1) near |= adj[u];
        near &= ~(Mask{1} << p);
        EntryStore store(out, room_);
        std::vector<int> used_at(q_ + 1);
        for (int ci = 0; ci < static_cast<int>(child.entries.size()); ++ci) {
            const auto& ce = child.entries[ci];
            DpEntry base;
            base.chi = ce.chi;
            base.chi.insert(base.chi.begin() + p, 0);
            base.xi.reserve(b);
            for (auto x : ce.xi) base.xi.push_back(insert_bit(x, p));
            base.xi.insert(base.xi.begin() + p, 0);
            // Two neighbors of v sharing a color form a path through v.
            bool middle_clash = false;
            for (int u = 0; u < b && !middle_clash; ++u) {
                if (!(nv >> u & 1)) continue;
                for (int w = u + 1; w < b; ++w)
                    if ((nv >> w & 1) && base.chi[u] == base.chi[w]) {
                        middle_clash = true;
                        break;
                    }
            }
            if (middle_clash) continue;
            std::fill(used_at.begin(), used_at.end(), -1);
            for (int u = 0; u < b; ++u)
                if (u != p) used_at[base.chi[u]] = u;
            std::vector<bool> forbidden(q_ + 1, false);
            for (int u = 0; u < b; ++u)
                if (near >> u & 1) forbidden[base.chi[u]] = true;
            Rho shifted;
            for (auto [m, c] : ce.rho) shifted.emplace_back(insert_bit(m, p), c);
            for (int c = 1; c <= q_; ++c) {
                if (forbidden[c]) continue;
                if (used_at[c] >= 0) {
                    Mask xv = base.xi[used_at[c]];
                    if (xv & nv) continue;
                    DpEntry e = base;
                    e.chi[p] = static_cast<std::uint8_t>(c);
                    e.xi[p] = xv;
                    e.rho = shifted;
                    store.add(std::move(e), ci);
                    continue;
                }
                for (std::size_t k = 0; k < shifted.size(); ++k) {
                    Mask cls = shifted[k].first;
                    if (cls & nv) continue;
                    DpEntry e = base;
                    e.chi[p] = static_cast<std::uint8_t>(c);
                    e.xi[p] = cls;
                    e.rho = shifted;
                    if (--e.rho[k].second == 0) e.rho.erase(e.rho.begin() + static_cast<long>(k));
                    store.add(std::move(e), ci);
                }
            }
        }
    }

    void forget(const DpTable& child, int v, DpTable& out) {
        const int p = static_cast<int>(std::lower_bound(child.bag.begin(), child.bag.end(), v) - child.bag.begin());
        const int b = static_cast<int>(child.bag.size());
        const auto adj = bag_adjacency(g_, child.bag);
        const Mask nv = remove_bit(adj[p], p);
        const Mask vbit = Mask{1} << p;
        EntryStore store(out, room_);
        for (int ci = 0; ci < static_cast<int>(child.entries.size()); ++ci) {
            const auto& ce = child.entries[ci];
            const int cv = ce.chi[p];
            DpEntry e;
            bool still_used = false;
            for (int u = 0; u < b; ++u) {
                if (u == p) continue;
                e.chi.push_back(ce.chi[u]);
                Mask x = remove_bit(ce.xi[u] & ~vbit, p);
                if (ce.chi[u] == cv) {
                    x |= nv;
                    still_used = true;
                }
                e.xi.push_back(x);
            }
            std::map<Mask, int> acc;
            for (auto [m, c] : ce.rho) acc[remove_bit(m & ~vbit, p)] += c;
            if (!still_used) acc[remove_bit(ce.xi[p] & ~vbit, p) | nv] += 1;
            e.rho = normalize(acc);
            store.add(std::move(e), ci);
        }
    }

    void join(const DpTable& left, const DpTable& right, DpTable& out) {
        std::unordered_map<std::string, std::vector<int>> bucket;
        for (int j = 0; j < static_cast<int>(right.entries.size()); ++j)
            bucket[chi_key(right.entries[j].chi)].push_back(j);
        std::unordered_map<Rho, int, RhoHash> rho_id;
        auto intern = [&](const Rho& r) {
            auto it = rho_id.find(r);
            if (it != rho_id.end()) return it->second;
            int id = static_cast<int>(rho_id.size());
            rho_id.emplace(r, id);
            return id;
        };
        std::unordered_map<std::pair<int, int>, std::vector<Rho>, PairHash> memo;
        EntryStore store(out, room_);
        const int b = static_cast<int>(out.bag.size());
        for (int i = 0; i < static_cast<int>(left.entries.size()); ++i) {
            const auto& le = left.entries[i];
            auto it = bucket.find(chi_key(le.chi));
            if (it == bucket.end()) continue;
            const int lid = intern(le.rho);
            for (int j : it->second) {
                const auto& re = right.entries[j];
                bool disjoint = true;
                for (int u = 0; u < b; ++u)
                    if (le.xi[u] & re.xi[u]) {
                        disjoint = false;
                        break;
                    }
                if (!disjoint) continue;
                auto key = std::make_pair(lid, intern(re.rho));
                auto mit = memo.find(key);
                if (mit == memo.end()) mit = memo.emplace(key, join_outcomes(le.rho, re.rho)).first;
                if (mit->second.empty()) continue;
                DpEntry base;
                base.chi = le.chi;
                base.xi.resize(b);
                for (int u = 0; u < b; ++u) base.xi[u] = le.xi[u] | re.xi[u];
                for (const auto& r : mit->second) {
                    DpEntry e = base;
                    e.rho = r;
                    store.add(std::move(e), i, j);
                }
            }
        }
    }

private:
    const Graph& g_;
    int q_;
    const DpOptions& opt_;
    DpStats& stats_;
    std::size_t room_ = std::numeric_limits<std::size_t>::max();
};

}  // namespace

int DpEntry::rho_at(std::uint32_t mask) const {
    for (auto [m, c] : rho)
        if (m == mask) return c;
    return 0;
}

double table_cap_log2(int q, int b) {
    if (q == 0) return b == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
    return b * std::log2(static_cast<double>(q)) + static_cast<double>(b) * b +
           std::ldexp(1.0, b) * std::log2(static_cast<double>(q) + 1);
}

void dump_entry(std::ostream& out, int node, const DpEntry& e) {
    out << "t=" << node << " chi=";
    for (std::size_t i = 0; i < e.chi.size(); ++i) out << (i ? "," : "") << int(e.chi[i]);
    out << " xi=";
    for (std::size_t i = 0; i < e.xi.size(); ++i) out << (i ? "," : "") << e.xi[i];
    out << " rho=";
    for (std::size_t i = 0; i < e.rho.size(); ++i) out << (i ? "," : "") << e.rho[i].first << ':' << e.rho[i].second;
    out << '\n';
}

bool locally_valid(const std::vector<int>& bag, const Graph& g, const std::vector<std::uint8_t>& chi,
                   const std::vector<std::uint32_t>& xi) {
    const int b = static_cast<int>(bag.size());
    const auto adj = bag_adjacency(g, bag);
    for (int u = 0; u < b; ++u)
        for (int w = 0; w < b; ++w) {
            if (u == w) continue;
            if ((adj[u] >> w & 1) && chi[u] == chi[w]) return false;
            if ((adj[u] >> w & 1) && (xi[u] >> w & 1)) return false;
            if (u < w && chi[u] == chi[w] && (adj[u] & adj[w])) return false;
        }
    return true;
}

std::vector<DpTable> run_tables(const Graph& g, int q, const NiceTreeDecomposition& ntd, const DpOptions& opt,
                                DpStats& stats, bool keep_all) {
    if (q > 255) throw resource_error("color budget above 255 is outside the table encoding");
    if (auto why = check_nice(ntd); !why.empty()) throw input_error("decomposition is not nice: " + why);
    for (const auto& nd : ntd.nodes)
        if (nd.bag.size() > 31) throw resource_error("bag of size " + std::to_string(nd.bag.size()) + " is too large");
    const int nn = static_cast<int>(ntd.nodes.size());
    std::vector<DpTable> tables(nn);
    TableBuilder tb(g, q, opt, stats);
    stats.width = std::max(stats.width, ntd.width());
    std::size_t live = 0;
    for (int t = 0; t < nn; ++t) {
        const auto& nd = ntd.nodes[t];
        auto& out = tables[t];
        out.bag = nd.bag;
        tb.set_room(live < opt.max_entries ? opt.max_entries - live : 0);
        switch (nd.kind) {
        case NodeKind::leaf:
            tb.leaf(out);
            break;
        case NodeKind::introduce:
            tb.introduce(tables[nd.children[0]], nd.vertex, out);
            break;
        case NodeKind::forget:
            tb.forget(tables[nd.children[0]], nd.vertex, out);
            break;
        case NodeKind::join:
            tb.join(tables[nd.children[0]], tables[nd.children[1]], out);
            break;
        }
        const std::size_t sz = out.entries.size();
        ++stats.nodes;
        stats.table_entries_total += sz;
        stats.max_table = std::max(stats.max_table, sz);
        if (opt.check_cap && sz > 0 && std::log2(static_cast<double>(sz)) > table_cap_log2(q, static_cast<int>(nd.bag.size())) + 1e-9)
            ++stats.cap_violations;
        if (opt.dump)
            for (const auto& e : out.entries) dump_entry(*opt.dump, t, e);
        live += sz;
        if (!keep_all)
            for (int c : nd.children) {
                live -= tables[c].entries.size();
                tables[c] = DpTable{};
            }
        if (live > opt.max_entries) throw resource_error("table entries exceed budget");
    }
    if (!keep_all) {
        std::vector<DpTable> root;
        root.push_back(std::move(tables[ntd.root]));
        return root;
    }
    return tables;
}

namespace {

// Class mask per color: bag positions with a colored non-bag neighbor of that color.
std::vector<Mask> color_classes(const Graph& g, int q, const std::vector<int>& bag, const Coloring& col,
                                const std::vector<char>& in_bag) {
    std::vector<Mask> cls(q + 1, 0);
    for (std::size_t i = 0; i < bag.size(); ++i)
        for (int x : g.neighbors(bag[i]))
            if (col[x] > 0 && !in_bag[x]) cls[col[x]] |= Mask{1} << i;
    return cls;
}

void swap_colors(Coloring& col, int a, int b) {
    if (a == b) return;
    for (auto& c : col) {
        if (c == a)
            c = b;
        else if (c == b)
            c = a;
    }
}

}  // namespace

Coloring extract_witness(const Graph& g, int q, const NiceTreeDecomposition& ntd, const std::vector<DpTable>& tables,
                         int root_entry) {
    const int nn = static_cast<int>(ntd.nodes.size());
    if (static_cast<int>(tables.size()) != nn) throw std::logic_error("witness needs every table");
    if (tables[ntd.root].entries.empty()) throw input_error("no witness: instance is a NO instance");
    if (root_entry < 0 || root_entry >= static_cast<int>(tables[ntd.root].entries.size()))
        throw std::out_of_range("root entry out of range");
    std::vector<int> chosen(nn, -1);
    chosen[ntd.root] = root_entry;
    for (int t = nn - 1; t >= 0; --t) {
        if (chosen[t] < 0) continue;
        const auto& nd = ntd.nodes[t];
        auto [p1, p2] = tables[t].pred[chosen[t]];
        if (!nd.children.empty()) chosen[nd.children[0]] = p1;
        if (nd.children.size() == 2) chosen[nd.children[1]] = p2;
    }
    std::vector<Coloring> col(nn);
    std::vector<char> in_bag(g.n(), 0);
    auto mark = [&](const std::vector<int>& bag, char val) {
        for (int v : bag) in_bag[v] = val;
    };
    for (int t = 0; t < nn; ++t) {
        const auto& nd = ntd.nodes[t];
        const auto& e = tables[t].entries[chosen[t]];
        switch (nd.kind) {
        case NodeKind::leaf:
            col[t].assign(g.n(), 0);
            break;
        case NodeKind::forget:
            col[t] = std::move(col[nd.children[0]]);
            break;
        case NodeKind::introduce: {
            const int c0 = nd.children[0];
            const auto& ce = tables[c0].entries[chosen[c0]];
            Coloring cur = std::move(col[c0]);
            const int p = static_cast<int>(std::find(nd.bag.begin(), nd.bag.end(), nd.vertex) - nd.bag.begin());
            const int c = e.chi[p];
            bool used = std::find(ce.chi.begin(), ce.chi.end(), c) != ce.chi.end();
            if (!used) {
                const Mask want = remove_bit(e.xi[p], p);
                const auto& cbag = ntd.nodes[c0].bag;
                mark(cbag, 1);
                auto cls = color_classes(g, q, cbag, cur, in_bag);
                mark(cbag, 0);
                int pick = -1;
                for (int d = 1; d <= q && pick < 0; ++d)
                    if (std::find(ce.chi.begin(), ce.chi.end(), d) == ce.chi.end() && cls[d] == want) pick = d;
                if (pick < 0) throw std::logic_error("witness replay: no free color of the chosen class");
                swap_colors(cur, pick, c);
            }
            cur[nd.vertex] = c;
            col[t] = std::move(cur);
            break;
        }
        case NodeKind::join: {
            const int a = nd.children[0], b = nd.children[1];
            const auto& le = tables[a].entries[chosen[a]];
            const auto& re = tables[b].entries[chosen[b]];
            Coloring lc = std::move(col[a]), rc = std::move(col[b]);
            mark(nd.bag, 1);
            auto lcls = color_classes(g, q, nd.bag, lc, in_bag);
            auto rcls = color_classes(g, q, nd.bag, rc, in_bag);
            std::vector<bool> bag_color(q + 1, false);
            for (auto c : e.chi) bag_color[c] = true;
            ReachableIlp ilp;
            std::vector<int> lrow, rrow;
            for (auto [m, cnt] : le.rho) lrow.push_back(ilp.add_row(cnt, true));
            for (auto [m, cnt] : re.rho) rrow.push_back(ilp.add_row(cnt, true));
            std::map<Mask, int> orow;
            for (auto [m, cnt] : e.rho) orow[m] = ilp.add_row(cnt, true);
            std::vector<std::pair<int, int>> var;
            for (std::size_t i = 0; i < le.rho.size(); ++i)
                for (std::size_t j = 0; j < re.rho.size(); ++j) {
                    Mask l = le.rho[i].first, r = re.rho[j].first;
                    if (l & r) continue;
                    auto it = orow.find(l | r);
                    if (it == orow.end()) continue;
                    ilp.add_variable({{lrow[i], 1}, {rrow[j], 1}, {it->second, 1}},
                                     std::min<int>(le.rho[i].second, re.rho[j].second));
                    var.emplace_back(static_cast<int>(i), static_cast<int>(j));
                }
            auto eta = ilp.solution();
            if (eta.empty() && !var.empty()) throw std::logic_error("witness replay: join has no merge");
            std::map<Mask, std::vector<int>> lfree, rfree;
            for (int d = 1; d <= q; ++d)
                if (!bag_color[d]) {
                    lfree[lcls[d]].push_back(d);
                    rfree[rcls[d]].push_back(d);
                }
            std::vector<int> perm(q + 1);
            for (int d = 0; d <= q; ++d) perm[d] = d;
            for (std::size_t k = 0; k < var.size(); ++k)
                for (int r = 0; r < eta[k]; ++r) {
                    auto& ls = lfree[le.rho[var[k].first].first];
                    auto& rs = rfree[re.rho[var[k].second].first];
                    if (ls.empty() || rs.empty()) throw std::logic_error("witness replay: class counts disagree");
                    perm[rs.back()] = ls.back();
                    rs.pop_back();
                    ls.pop_back();
                }
            for (int v = 0; v < g.n(); ++v) {
                if (in_bag[v] || rc[v] == 0) continue;
                lc[v] = perm[rc[v]];
            }
            mark(nd.bag, 0);
            col[t] = std::move(lc);
            break;
        }
        }
    }
    return col[ntd.root];
}

namespace {

bool try_shortcut(const Graph& g, int q, const DpOptions& opt, DpResult& res) {
    if (!opt.shortcuts) return false;
    if (q >= g.n()) {
        res.yes = true;
        res.stats.shortcut = "q>=n";
        if (opt.witness) {
            Coloring c(g.n());
            for (int v = 0; v < g.n(); ++v) c[v] = v + 1;
            res.witness = c;
        }
        return true;
    }
    if (q >= max_square_closed_degree(g)) {
        res.yes = true;
        res.stats.shortcut = "greedy";
        if (opt.witness) res.witness = greedy_extend(g, q, Coloring(g.n(), 0));
        return true;
    }
    return false;
}

}  // namespace

DpResult decide_tw(const Graph& g, int q, const NiceTreeDecomposition& ntd, const DpOptions& opt) {
    if (q < 0) throw input_error("q must be nonnegative");
    DpResult res;
    res.stats.width = ntd.width();
    if (try_shortcut(g, q, opt, res)) return res;
    const int w = ntd.width();
    if (opt.max_bag > 0 && w + 1 > opt.max_bag)
        throw resource_error("bag size " + std::to_string(w + 1) + " exceeds --max-bag");
    const double bits = std::ldexp(1.0, w + 1) * std::log2(static_cast<double>(q) + 1);
    if (bits > opt.width_budget_bits)
        throw resource_error("width " + std::to_string(w) + " is beyond the table budget");
    auto tables = run_tables(g, q, ntd, opt, res.stats, opt.witness);
    const auto& root = opt.witness ? tables[ntd.root] : tables[0];
    res.yes = !root.entries.empty();
    if (res.yes && opt.witness) {
        res.witness = extract_witness(g, q, ntd, tables);
        if (verify_square_coloring(g, q, *res.witness)) throw std::logic_error("witness replay produced an invalid coloring");
    }
    return res;
}

DpResult decide_tw(const Graph& g, int q, const DpOptions& opt) {
    if (q < 0) throw input_error("q must be nonnegative");
    DpResult res;
    if (try_shortcut(g, q, opt, res)) return res;
    Coloring full(g.n(), 0);
    res.yes = true;
    for (const auto& comp : connected_components(g)) {
        auto sub = induced_subgraph(g, comp);
        auto ntd = make_nice(heuristic_decompose(sub.graph));
        DpOptions o = opt;
        o.shortcuts = false;
        auto r = decide_tw(sub.graph, q, ntd, o);
        res.stats.width = std::max(res.stats.width, r.stats.width);
        res.stats.nodes += r.stats.nodes;
        res.stats.table_entries_total += r.stats.table_entries_total;
        res.stats.max_table = std::max(res.stats.max_table, r.stats.max_table);
        res.stats.cap_violations += r.stats.cap_violations;
        if (!r.yes) {
            res.yes = false;
            return res;
        }
        if (r.witness)
            for (std::size_t i = 0; i < comp.size(); ++i) full[comp[i]] = (*r.witness)[i];
    }
    if (opt.witness) res.witness = full;
    return res;
}

}  // namespace sqcol
