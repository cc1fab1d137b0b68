#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "sqcol/errors.hpp"
#include "sqcol/generators.hpp"

namespace sqcol {

namespace {

long ipow(long b, int e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Ports of a gadget in the reduction: color class groups plus logic and control vertices.
struct Io {
    std::vector<std::vector<int>> I;
    int r = -1, g = -1, b = -1, s = -1;
};

class Builder {
public:
    Builder(GadgetGraph& gg, int q, bool removed) : gg_(gg), q_(q), removed_(removed) { gg_.q = q; }

    int fresh(bool colorless = false) {
        int v = gg_.graph.add_vertex();
        gg_.colorless.push_back(colorless && !removed_ ? 1 : 0);
        if (colorless) ++colorless_made_;
        return v;
    }

    std::vector<int> fresh_group(int k) {
        std::vector<int> out(k);
        for (auto& v : out) v = fresh();
        return out;
    }

    void edge(int u, int v) { gg_.graph.add_edge(u, v); }

    void subset(const std::vector<int>& in, const std::vector<int>& out) {
        const int alpha = static_cast<int>(in.size());
        const int beta = static_cast<int>(out.size());
        if (beta < 1 || beta > alpha) throw input_error("subset gadget needs alpha >= beta >= 1");
        const int comp = q_ - alpha - (removed_ ? 2 : 0);
        if (comp < 0)
            throw input_error("subset gadget with " + std::to_string(alpha) + " inputs does not fit " +
                              std::to_string(q_) + " colors");
        const int begin = gg_.graph.n();
        const int a = fresh(true);
        const int b = fresh(true);
        for (int v : in) edge(v, a);
        for (int i = 0; i < comp; ++i) {
            int c = fresh();
            edge(a, c);
            edge(c, b);
        }
        for (int v : out) edge(b, v);
        if (removed_) edge(a, b);
        ++gg_.subset_gadgets;
        gg_.ranges.push_back({alpha == beta ? "equality" : "subset", begin, gg_.graph.n()});
    }

    int copy(int v) {
        int w = fresh();
        subset({v}, {w});
        return w;
    }

    std::vector<int> copy(const std::vector<int>& grp) {
        auto out = fresh_group(static_cast<int>(grp.size()));
        subset(grp, out);
        return out;
    }

    Io copy(const Io& src) {
        Io out;
        for (const auto& grp : src.I) out.I.push_back(copy(grp));
        out.r = src.r < 0 ? -1 : copy(src.r);
        out.g = src.g < 0 ? -1 : copy(src.g);
        out.b = src.b < 0 ? -1 : copy(src.b);
        out.s = src.s < 0 ? -1 : copy(src.s);
        return out;
    }

    // X groups in, Y groups out; 2r colorless separator vertices with distinct r-subsets.
    std::vector<std::vector<int>> color_class_copy(const std::vector<std::vector<int>>& X, int r) {
        const int begin = gg_.graph.n();
        const int classes = static_cast<int>(X.size());
        std::vector<std::vector<int>> Y;
        for (const auto& grp : X) Y.push_back(fresh_group(static_cast<int>(grp.size())));
        std::vector<int> flatX, flatY;
        for (int i = 0; i < classes; ++i) {
            flatX.insert(flatX.end(), X[i].begin(), X[i].end());
            flatY.insert(flatY.end(), Y[i].begin(), Y[i].end());
        }
        subset(flatX, flatY);
        std::vector<int> S(2 * r);
        for (auto& v : S) v = fresh(true);
        // r-subsets of S in lexicographic order.
        std::vector<int> pick(r);
        std::iota(pick.begin(), pick.end(), 0);
        for (int i = 0; i < classes; ++i) {
            if (i > 0) {
                int p = r - 1;
                while (p >= 0 && pick[p] == 2 * r - r + p) --p;
                if (p < 0) throw input_error("separator too small for the number of color classes");
                ++pick[p];
                for (int j = p + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
            }
            std::vector<char> in_si(2 * r, 0);
            for (int j : pick) in_si[j] = 1;
            for (int j = 0; j < 2 * r; ++j)
                for (int v : (in_si[j] ? X[i] : Y[i])) edge(v, S[j]);
        }
        gg_.ranges.push_back({"color-class-copy", begin, gg_.graph.n()});
        return Y;
    }

    // tau is the socket type; a switch socket of type r<tau>b<3-tau> when `sw`.
    Io socket(const Io& in, bool sw, int tau, std::vector<int>& vx) {
        const int begin = gg_.graph.n();
        Io out = copy(in);
        const int z = fresh();
        vx.push_back(z);
        if (!sw) {
            subset(in.I[tau - 1], {z});
        } else {
            // SwitchSocket_2 reads v from I_1 and w from I_2; type 1 swaps them.
            const auto& Iv = in.I[tau == 2 ? 0 : 1];
            const auto& Iw = in.I[tau == 2 ? 1 : 0];
            auto Iv2 = copy(Iv);
            auto Iw2 = copy(Iw);
            const int pv = fresh(), pw = fresh();
            subset(Iv2, {pv});
            subset(Iw2, {pw});
            const int v = copy(pv), w = copy(pw);
            const int red = copy(in.r);
            const int l1 = fresh(), l2 = fresh();
            subset({v, red}, {l1, l2});
            edge(l1, copy(in.s));
            const int vp = copy(l2);
            const int blue = copy(in.b);
            const int r1 = fresh(), r2 = fresh();
            subset({w, blue}, {r1, r2});
            edge(r1, copy(in.s));
            const int wp = copy(r2);
            const int f = fresh();
            subset({vp, wp}, {f});
            const int u = copy(f);
            edge(u, copy(in.r));
            edge(u, copy(in.b));
            subset({u}, {z});
        }
        gg_.ranges.push_back({sw ? "switch-socket" : "const-socket", begin, gg_.graph.n()});
        return out;
    }

    Io edge_selection(const Io& in, long alpha, int n, std::vector<int>& vx) {
        const long n2 = ipow(n, 2);
        if (alpha < -n2 || alpha > n2) throw input_error("edge selection parameter outside [-n^2, n^2]");
        const int begin = gg_.graph.n();
        const long n1 = std::min(n2, n2 + alpha);
        const long nn2 = std::min(n2, n2 - alpha);
        Io cur = copy(in);
        Io out;
        for (long j = 0; j < 2 * n2; ++j) {
            Io o;
            if (j < n1) o = socket(cur, false, 1, vx);
            else if (j < n1 + nn2) o = socket(cur, false, 2, vx);
            else o = socket(cur, true, alpha >= 0 ? 2 : 1, vx);
            if (j + 1 < 2 * n2) cur = copy(o);
            else out = copy(o);
        }
        gg_.ranges.push_back({"edge-selection", begin, gg_.graph.n()});
        return out;
    }

    Io vector_state(const Io& in, const std::array<long, 3>& y, int n, std::vector<int>& vx) {
        const int begin = gg_.graph.n();
        Io out;
        out.I.resize(6);
        Io logic;
        logic.r = in.r, logic.g = in.g, logic.b = in.b, logic.s = in.s;
        for (int j = 0; j < 3; ++j) {
            Io es = copy(logic);
            es.I = {copy(in.I[2 * j]), copy(in.I[2 * j + 1])};
            Io o = edge_selection(es, y[j], n, vx);
            out.I[2 * j] = copy(o.I[0]);
            out.I[2 * j + 1] = copy(o.I[1]);
            logic = o;
            logic.I.clear();
        }
        Io tail = copy(logic);
        out.r = tail.r, out.g = tail.g, out.b = tail.b, out.s = tail.s;
        gg_.ranges.push_back({"vector-state", begin, gg_.graph.n()});
        return out;
    }

    Io one_way_switch(const Io& in) {
        const int begin = gg_.graph.n();
        Io out;
        out.r = copy(in.r);
        out.g = copy(in.g);
        out.b = copy(in.b);
        auto restricted = [&](std::vector<int> from) {
            const int p = fresh();
            subset(from, {p});
            return copy(p);
        };
        const int t = restricted({in.r, in.b});
        const int u = restricted({in.g, in.r});
        const int v = restricted({in.r, in.g, in.b});
        const int w = restricted({in.r, in.b});
        subset({in.s}, {t});
        // The control leaves through w: t = red forces u green, v blue and w red.
        out.s = copy(w);
        skeleton_ = {t, u, v, w};
        for (auto [a, b] : {Edge{t, u}, Edge{u, v}, Edge{v, t}, Edge{v, w}}) {
            const int mid = fresh(true);
            edge(a, mid);
            edge(mid, b);
            ++ows_middles_;
        }
        gg_.ranges.push_back({"one-way-switch", begin, gg_.graph.n()});
        return out;
    }

    Io vector_selection(const Io& in, const std::vector<IntVector>& list, const std::vector<int>& dims, int n,
                        std::vector<int>& vx) {
        const int begin = gg_.graph.n();
        const long n4 = ipow(n, 4);
        if (static_cast<long>(list.size()) != n4) throw input_error("vector selection needs n^4 vectors");
        Io cur;
        for (const auto& grp : in.I) cur.I.push_back(copy(grp));
        cur.r = copy(in.r);
        cur.g = copy(in.g);
        cur.b = copy(in.b);
        cur.s = copy(in.b);
        std::array<long, 3> prev{0, 0, 0};
        Io out;
        for (long j = 0; j < n4; ++j) {
            auto nz = nonzero_part(list[j], dims);
            std::array<long, 3> y{nz[0] - prev[0], nz[1] - prev[1], nz[2] - prev[2]};
            prev = nz;
            Io o = vector_state(cur, y, n, vx);
            if (j + 1 < n4) {
                Io logic;
                logic.r = o.r, logic.g = o.g, logic.b = o.b, logic.s = o.s;
                Io sw = one_way_switch(copy(logic));
                Io next;
                for (const auto& grp : o.I) next.I.push_back(copy(grp));
                Io l2 = copy(sw);
                next.r = l2.r, next.g = l2.g, next.b = l2.b, next.s = l2.s;
                cur = next;
            } else {
                out.r = copy(o.r);
                out.g = copy(o.g);
                out.b = copy(o.b);
            }
        }
        gg_.ranges.push_back({"vector-selection", begin, gg_.graph.n()});
        return out;
    }

    int colorless_made() const { return colorless_made_; }
    int ows_middles() const { return ows_middles_; }
    // t, u, v, w of the most recent one-way switch.
    const std::array<int, 4>& skeleton() const { return skeleton_; }

private:
    GadgetGraph& gg_;
    int q_;
    bool removed_;
    int colorless_made_ = 0;
    int ows_middles_ = 0;
    std::array<int, 4> skeleton_{-1, -1, -1, -1};
};

Io fresh_io(Builder& B, int groups, int group_size, bool logic, bool control) {
    Io io;
    for (int i = 0; i < groups; ++i) io.I.push_back(B.fresh_group(group_size));
    if (logic) {
        io.r = B.fresh();
        io.g = B.fresh();
        io.b = B.fresh();
    }
    if (control) io.s = B.fresh();
    return io;
}

void record_ports(GadgetGraph& gg, const Io& in, const Io& out) {
    auto add = [&](const Io& io, std::vector<int>& flat, std::vector<std::vector<int>>& groups, const std::string& suffix) {
        for (const auto& grp : io.I) {
            groups.push_back(grp);
            flat.insert(flat.end(), grp.begin(), grp.end());
        }
        const std::pair<const char*, int> named[] = {{"r", io.r}, {"g", io.g}, {"b", io.b}, {"s", io.s}};
        for (auto [name, v] : named)
            if (v >= 0) {
                flat.push_back(v);
                gg.ports[name + suffix] = v;
            }
    };
    add(in, gg.in, gg.in_groups, "");
    add(out, gg.out, gg.out_groups, "'");
}

}  // namespace

int GadgetGraph::colorless_count() const {
    return static_cast<int>(std::count(colorless.begin(), colorless.end(), 1));
}

std::string to_string(GadgetKind kind) {
    switch (kind) {
    case GadgetKind::subset: return "subset";
    case GadgetKind::color_class_copy: return "color-class-copy";
    case GadgetKind::const_socket: return "const-socket";
    case GadgetKind::switch_socket: return "switch-socket";
    case GadgetKind::edge_selection: return "edge-selection";
    case GadgetKind::vector_state: return "vector-state";
    case GadgetKind::one_way_switch: return "one-way-switch";
    case GadgetKind::vector_selection: return "vector-selection";
    }
    return "?";
}

GadgetKind gadget_kind_from_string(const std::string& s) {
    for (auto k : {GadgetKind::subset, GadgetKind::color_class_copy, GadgetKind::const_socket,
                   GadgetKind::switch_socket, GadgetKind::edge_selection, GadgetKind::vector_state,
                   GadgetKind::one_way_switch, GadgetKind::vector_selection})
        if (to_string(k) == s) return k;
    throw input_error("unknown gadget kind '" + s + "'");
}

int copy_separator_r(int m) {
    if (m < 1) throw input_error("m must be positive");
    for (int r = 1;; ++r) {
        // C(2r, r) grows fast; stop as soon as it reaches 2m.
        double c = 1;
        for (int i = 1; i <= r; ++i) c = c * (r + i) / i;
        if (c + 0.5 >= 2.0 * m) return r;
    }
}

GadgetGraph build_gadget(GadgetKind kind, const GadgetParams& p, int q) {
    if (p.n < 1 || p.m < 1) throw input_error("n and m must be positive");
    const int group = static_cast<int>(2 * ipow(p.n, 6));
    GadgetGraph gg;
    Builder B(gg, q, p.removed);
    Io in, out;
    switch (kind) {
    case GadgetKind::subset: {
        if (p.beta < 1 || p.beta > p.alpha) throw input_error("subset gadget needs alpha >= beta >= 1");
        in.I = {B.fresh_group(p.alpha)};
        out.I = {B.fresh_group(p.beta)};
        B.subset(in.I[0], out.I[0]);
        break;
    }
    case GadgetKind::color_class_copy: {
        const int r = p.r > 0 ? p.r : copy_separator_r(p.m);
        in = fresh_io(B, 2 * p.m, group, false, false);
        out.I = B.color_class_copy(in.I, r);
        break;
    }
    case GadgetKind::const_socket:
    case GadgetKind::switch_socket: {
        if (p.tau != 1 && p.tau != 2) throw input_error("socket type must be 1 or 2");
        in = fresh_io(B, 2, group, true, true);
        out = B.socket(in, kind == GadgetKind::switch_socket, p.tau, gg.vx);
        break;
    }
    case GadgetKind::edge_selection:
        in = fresh_io(B, 2, group, true, true);
        out = B.edge_selection(in, p.alpha, p.n, gg.vx);
        break;
    case GadgetKind::vector_state: {
        const long n2 = ipow(p.n, 2);
        for (long yj : p.y)
            if (yj < -n2 || yj > n2) throw input_error("vector state parameter outside [-n^2, n^2]");
        in = fresh_io(B, 6, group, true, true);
        out = B.vector_state(in, p.y, p.n, gg.vx);
        break;
    }
    case GadgetKind::one_way_switch:
        in = fresh_io(B, 0, 0, true, true);
        out = B.one_way_switch(in);
        for (int i = 0; i < 4; ++i) gg.ports[std::string(1, "tuvw"[i])] = B.skeleton()[i];
        break;
    case GadgetKind::vector_selection: {
        VectorKSumInstance one;
        one.n = p.n;
        one.m = p.m;
        one.lists = {p.list};
        one.pos_dims = {p.pos_dims};
        one.neg_dims = {p.neg_dims};
        // A single list cannot meet the two-lists rule; check only its own shape.
        for (const auto& msg : restricted_form_problems(one))
            if (msg.rfind("dimension ", 0) != 0) throw input_error(msg);
        in = fresh_io(B, 6, group, true, false);
        out = B.vector_selection(in, p.list, nonzero_dims(one, 0), p.n, gg.vx);
        break;
    }
    }
    record_ports(gg, in, out);
    return gg;
}

Graph conflict_graph(const GadgetGraph& gg) {
    const Graph& g = gg.graph;
    Graph c(g.n());
    for (int v = 0; v < g.n(); ++v) {
        if (gg.colorless[v]) continue;
        for (int w : dist2_closed_neighborhood(g, v))
            if (w > v && !gg.colorless[w]) c.add_edge(v, w);
    }
    return c;
}

SqcolInstance gen_vectorsum_to_sqcol(const VectorKSumInstance& inst, int r_override, bool solve) {
    if (auto p = restricted_form_problems(inst); !p.empty()) throw input_error(p.front());
    const int k = inst.k();
    const int n = inst.n;
    const int group = static_cast<int>(2 * ipow(n, 6));
    const int counting = 2 * inst.m * group;
    SqcolInstance res;
    res.r = r_override > 0 ? r_override : copy_separator_r(inst.m);

    auto build = [&](int q, bool removed, SqcolInstance& into) {
        GadgetGraph& gg = into.gg;
        gg = GadgetGraph{};
        Builder B(gg, q, removed);
        const int x = B.fresh(true);
        gg.ports["x"] = x;
        std::vector<std::vector<int>> X;
        for (int l = 0; l < 2 * inst.m; ++l) X.push_back(B.fresh_group(group));
        auto Y = B.color_class_copy(X, res.r);
        const int wx = B.fresh(true);
        gg.ports["w_X"] = wx;
        for (const auto& grp : X)
            for (int v : grp) B.edge(wx, v);
        std::vector<Io> outs;
        std::vector<char> seen(2 * inst.m, 0);
        std::size_t routed = 0;
        for (int i = 0; i < k; ++i) {
            Io in = fresh_io(B, 6, group, true, false);
            std::vector<int> vx;
            const auto dims = nonzero_dims(inst, i);
            Io o = B.vector_selection(in, inst.lists[i], dims, n, vx);
            for (int v : vx) B.edge(x, v);
            gg.vx.insert(gg.vx.end(), vx.begin(), vx.end());
            if (i == 0)
                for (int v : {in.r, in.g, in.b}) B.edge(wx, v);
            else {
                const Io& prev = outs.back();
                B.subset({prev.r}, {in.r});
                B.subset({prev.g}, {in.g});
                B.subset({prev.b}, {in.b});
            }
            for (int j = 0; j < 6; ++j) {
                const int l = 2 * dims[j / 2] + (j % 2);
                B.subset(seen[l] ? Y[l] : X[l], in.I[j]);
                seen[l] = 1;
                ++routed;
            }
            outs.push_back(o);
            gg.ports["r" + std::to_string(i + 1)] = in.r;
            gg.ports["g" + std::to_string(i + 1)] = in.g;
            gg.ports["b" + std::to_string(i + 1)] = in.b;
        }
        into.tallies["subset_gadgets"] = static_cast<int>(gg.subset_gadgets);
        into.tallies["one_way_switches"] = B.ows_middles() / 4;
        into.tallies["colorless_made"] = B.colorless_made();
        into.tallies["routed_groups"] = static_cast<int>(routed);
        into.tallies["vector_selections"] = k;
        for (const auto& rg : gg.ranges) ++into.tallies["gadget:" + rg.kind];
        into.tallies["vertices"] = gg.graph.n();
    };

    // Colorless vertices do not depend on q, so one pass at the counting width fixes q.
    SqcolInstance dry;
    build(counting + 3, false, dry);
    res.q_colorless = dry.gg.colorless_count();
    res.q = counting + 3 + res.q_colorless;
    build(res.q, true, res);
    res.gg.q = res.q;
    if (solve) res.answer = solve_vector_ksum(inst).has_value();
    return res;
}

std::vector<std::string> audit_sqcol(const VectorKSumInstance& inst, const SqcolInstance& out) {
    std::vector<std::string> bad = restricted_form_problems(inst);
    const auto& gg = out.gg;
    const Graph& g = gg.graph;
    const int k = inst.k();
    const long group = 2 * ipow(inst.n, 6);
    if (gg.colorless_count() != 0) bad.push_back("colorless vertices remain after removal");
    if (out.q != 2 * inst.m * group + 3 + out.q_colorless) bad.push_back("q differs from 2m*2n^6 + 3 + q_colorless");
    const auto tally = [&](const std::string& key) {
        auto it = out.tallies.find(key);
        return it == out.tallies.end() ? 0 : it->second;
    };
    const int expect_colorless = 2 * tally("subset_gadgets") + 2 * out.r + 2 + 4 * tally("one_way_switches");
    if (out.q_colorless != expect_colorless)
        bad.push_back("q_colorless = " + std::to_string(out.q_colorless) + " but the gadget tally gives " +
                      std::to_string(expect_colorless));
    if (tally("routed_groups") != 6 * k) bad.push_back("not every color class input is routed");
    if (tally("one_way_switches") != k * (static_cast<int>(ipow(inst.n, 4)) - 1))
        bad.push_back("one-way switch count differs from k(n^4 - 1)");
    const int x = gg.ports.at("x");
    std::set<int> vx(gg.vx.begin(), gg.vx.end());
    if (static_cast<long>(vx.size()) != 6 * ipow(inst.n, 6) * k) bad.push_back("vector outputs do not total 6n^6 per list");
    std::set<int> nx(g.neighbors(x).begin(), g.neighbors(x).end());
    if (nx != vx) bad.push_back("the central vertex is not adjacent to exactly the vector outputs");
    const int wx = gg.ports.at("w_X");
    if (g.degree(wx) != 2 * inst.m * group + 3) bad.push_back("w_X does not see exactly X and the first logic inputs");
    for (int v : {gg.ports.at("r1"), gg.ports.at("g1"), gg.ports.at("b1")})
        if (!g.adjacent(wx, v)) bad.push_back("w_X misses a logic input of the first selection gadget");
    if (!is_connected(g)) bad.push_back("output graph is disconnected");
    // Every subset gadget: a sees its inputs, b and q - alpha - 2 complement vertices.
    std::size_t subsets = 0;
    for (const auto& rg : gg.ranges) {
        if (rg.kind != "subset" && rg.kind != "equality") continue;
        ++subsets;
        const int a = rg.begin, b = rg.begin + 1;
        const int comp = rg.end - rg.begin - 2;
        const int alpha = g.degree(a) - comp - 1;
        const int beta = g.degree(b) - comp - 1;
        if (!g.adjacent(a, b) || alpha < 1 || beta < 1 || beta > alpha || comp != out.q - alpha - 2) {
            bad.push_back("subset gadget at vertex " + std::to_string(a + 1) + " is malformed");
            break;
        }
    }
    if (static_cast<int>(subsets) != tally("subset_gadgets")) bad.push_back("subset gadget ranges do not match the tally");
    return bad;
}

}  // namespace sqcol
