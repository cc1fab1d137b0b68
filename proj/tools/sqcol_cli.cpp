#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sqcol/decomposition.hpp"
#include "sqcol/errors.hpp"
#include "sqcol/generators.hpp"
#include "sqcol/graph.hpp"
#include "sqcol/oracle.hpp"
#include "sqcol/planar.hpp"
#include "sqcol/tw_dp.hpp"

int run_selftest(std::ostream& out, std::uint64_t seed);

namespace {

using namespace sqcol;
using json = nlohmann::json;

constexpr int kExitYes = 10;
constexpr int kExitNo = 20;
constexpr int kExitTimeout = 30;
constexpr int kExitInput = 2;

struct Common {
    std::uint64_t seed = 0;
    std::size_t budget = 100'000'000;
    int max_bag = 0;
    int threads = 1;
};

// Writes to the named file, or stdout for "" and "-".
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty() && path != "-") {
            file_.open(path);
            if (!file_) throw input_error("cannot write " + path);
        }
    }
    std::ostream& get() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

RotationSystem read_rotation_file(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    return read_rotation(in, n);
}

Coloring read_coloring_file(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    return read_coloring(in, n);
}

// ==== decide ====

struct DecideArgs {
    std::string graph, td, route = "auto", witness, stats;
    int q = -1;
};

int cmd_decide(const DecideArgs& a, const Common& c) {
    const auto t0 = std::chrono::steady_clock::now();
    const Graph g = read_gr_file(a.graph).graph;
    if (a.q < 0) throw input_error("--q is required");
    json st = {{"route", a.route}, {"n", g.n()}, {"m", g.m()}, {"q", a.q}, {"width", -1},
               {"table_entries_total", 0}, {"backtracks", 0}};
    Verdict verdict = Verdict::no;
    std::optional<Coloring> wit;
    auto run_oracle = [&] {
        auto r = brute_force_decide(g, a.q, c.budget);
        st["route"] = "oracle";
        st["backtracks"] = r.nodes;
        verdict = r.verdict;
        wit = r.witness;
    };
    auto run_tw = [&] {
        DpOptions opt;
        opt.max_bag = c.max_bag;
        opt.witness = !a.witness.empty();
        DpResult r;
        if (!a.td.empty()) {
            int n_td = 0;
            const auto td = read_td_file(a.td, &n_td);
            if (n_td != g.n()) throw input_error("decomposition and graph disagree on n");
            if (auto v = validate(g, td); !v.ok()) throw input_error("invalid decomposition: " + v.problems.front().message);
            r = decide_tw(g, a.q, make_nice(td), opt);
        } else {
            r = decide_tw(g, a.q, opt);
        }
        st["route"] = "tw";
        st["width"] = r.stats.width;
        st["table_entries_total"] = r.stats.table_entries_total;
        verdict = r.yes ? Verdict::yes : Verdict::no;
        wit = r.witness;
    };
    if (a.route == "oracle") {
        run_oracle();
    } else if (a.route == "tw") {
        run_tw();
    } else if (a.route == "planar") {
        ProtrusionOptions opt;
        opt.dp.max_bag = c.max_bag;
        auto r = solve_planar(g, a.q, !a.witness.empty(), opt);
        st["route"] = "planar:" + r.route;
        st["width"] = r.width;
        st["table_entries_total"] = r.table_entries_total;
        verdict = r.yes ? Verdict::yes : Verdict::no;
        wit = r.witness;
    } else if (a.route == "auto") {
        try {
            run_tw();
        } catch (const resource_error&) {
            run_oracle();
        }
    } else {
        throw input_error("unknown route '" + a.route + "'");
    }
    const char* word = verdict == Verdict::yes ? "YES" : verdict == Verdict::no ? "NO" : "TIMEOUT";
    std::cout << word << '\n';
    if (verdict == Verdict::yes && !a.witness.empty() && wit) {
        Sink s(a.witness);
        write_coloring(s.get(), *wit);
    }
    if (!a.stats.empty()) {
        st["wall_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        Sink s(a.stats);
        s.get() << st.dump() << '\n';
    }
    return verdict == Verdict::yes ? kExitYes : verdict == Verdict::no ? kExitNo : kExitTimeout;
}

// ==== chromatic / verify ====

int cmd_chromatic(const std::string& path, const std::string& route, const Common& c) {
    const Graph g = read_gr_file(path).graph;
    if (route == "oracle") {
        auto r = square_chromatic_number(g, c.budget);
        if (r.verdict == Verdict::timeout) {
            std::cout << "TIMEOUT at q=" << r.value << '\n';
            return kExitTimeout;
        }
        std::cout << r.value << '\n';
        return 0;
    }
    if (route != "tw") throw input_error("chromatic supports --route tw|oracle");
    DpOptions opt;
    opt.max_bag = c.max_bag;
    if (g.n() == 0) {
        std::cout << 0 << '\n';
        return 0;
    }
    for (int q = g.max_degree() + 1;; ++q)
        if (decide_tw(g, q, opt).yes) {
            std::cout << q << '\n';
            return 0;
        }
}

int cmd_verify(const std::string& graph, const std::string& coloring, int q) {
    const Graph g = read_gr_file(graph).graph;
    const Coloring col = read_coloring_file(coloring, g.n());
    if (q < 0)
        for (int x : col) q = std::max(q, x);
    if (auto v = verify_square_coloring(g, q, col)) {
        if (v->distance == 0)
            std::cout << "invalid: vertex " << v->u + 1 << " has color " << col[v->u] << " outside 1.." << q << '\n';
        else
            std::cout << "invalid: vertices " << v->u + 1 << " and " << v->v + 1 << " at distance " << v->distance
                      << " share color " << col[v->u] << '\n';
        return kExitNo;
    }
    std::cout << "valid\n";
    return kExitYes;
}

// ==== decompose / reduce ====

int cmd_decompose(const std::string& graph, const std::string& kind, int q, int r0, const std::string& out,
                  const Common& c) {
    const Graph g = read_gr_file(graph).graph;
    Sink s(out);
    if (kind == "heuristic") {
        const auto td = heuristic_decompose(g, c.seed);
        write_td(s.get(), td, g.n(), {"heuristic width " + std::to_string(td.width())});
    } else if (kind == "layered") {
        const auto rep = layered_square_decomposition(g);
        std::ostringstream note;
        note << "layered-square width " << rep.td.width() << " modulus " << rep.layer_modulus << " residue "
             << rep.residue << " strips " << rep.strips;
        write_td(s.get(), rep.td, g.n(), {note.str()});
    } else if (kind == "protrusion") {
        if (q < 1) throw input_error("--q is required for protrusion decompositions");
        const auto sub = q_irreducible_reduce(g, q);
        std::vector<int> D;
        for (int v : dist3_dominating(sub.graph, q)) D.push_back(sub.to_parent[v]);
        std::sort(D.begin(), D.end());
        write_protrusion(s.get(), build_protrusion_decomposition(g, D, r0), g.n());
    } else {
        throw input_error("unknown decomposition kind '" + kind + "'");
    }
    return 0;
}

int cmd_reduce(const std::string& graph, int q, const std::string& out) {
    const Graph g = read_gr_file(graph).graph;
    const auto sub = q_irreducible_reduce(g, q);
    std::vector<std::string> comments{"q-irreducible core for q = " + std::to_string(q)};
    for (std::size_t i = 0; i < sub.to_parent.size(); ++i)
        comments.push_back("id " + std::to_string(i + 1) + " " + std::to_string(sub.to_parent[i] + 1));
    Sink s(out);
    write_gr(s.get(), sub.graph, comments);
    return 0;
}

// ==== generate ====

std::vector<std::string> range_comments(const GadgetGraph& gg) {
    std::vector<std::string> out;
    for (const auto& r : gg.ranges)
        out.push_back("gadget " + r.kind + " " + std::to_string(r.begin + 1) + "-" + std::to_string(r.end));
    return out;
}

std::string join_ids(const std::vector<int>& vs) {
    std::string s;
    for (int v : vs) s += " " + std::to_string(v + 1);
    return s;
}

struct GenArgs {
    std::string out, input, graph, rotation, family = "k4", kind = "subset";
    int k = 4, n = 1, q = 5, r = 0;
    double p = 0.5;
    GadgetParams gp;
    std::vector<long> y;
    std::vector<std::string> vectors;  // "a1,a2,..." per list vector
};

int cmd_gen_vectorsum(const GenArgs& a, const Common& c) {
    const auto sub = random_subiso_instance(a.k, a.n, a.p, c.seed);
    const auto inst = gen_subiso_to_vectorsum(sub);
    std::string answer = "unknown";
    if (auto sol = solve_vector_ksum(inst)) answer = "yes";
    else answer = "no";
    Sink s(a.out);
    write_vectorsum(s.get(), inst,
                    {"answer " + answer, "source subiso-to-vectorsum", "seed " + std::to_string(c.seed),
                     std::string("trivial-no ") + (inst.trivial_no ? "1" : "0")});
    return 0;
}

int cmd_gen_sqcol(const GenArgs& a) {
    std::ifstream in(a.input);
    if (!in) throw input_error("cannot open " + a.input);
    const auto inst = read_vectorsum(in);
    const auto res = gen_vectorsum_to_sqcol(inst, a.r);
    if (auto bad = audit_sqcol(inst, res); !bad.empty()) throw std::logic_error("audit failed: " + bad.front());
    std::vector<std::string> comments{
        "answer " + std::string(res.answer ? (*res.answer ? "yes" : "no") : "unknown"),
        "q " + std::to_string(res.q), "source vectorsum-to-sqcol",
        "r " + std::to_string(res.r) + " q_colorless " + std::to_string(res.q_colorless)};
    for (const auto& [k, v] : res.tallies) comments.push_back("tally " + k + " " + std::to_string(v));
    for (auto& line : range_comments(res.gg)) comments.push_back(std::move(line));
    Sink s(a.out);
    write_gr(s.get(), res.gg.graph, comments);
    return 0;
}

int cmd_gen_planar(const GenArgs& a) {
    Graph g;
    RotationSystem rot;
    std::string source = a.family;
    if (!a.graph.empty()) {
        g = read_gr_file(a.graph).graph;
        if (a.rotation.empty()) throw input_error("--rotation is required with --graph");
        rot = read_rotation_file(a.rotation, g.n());
        source = a.graph;
    } else if (a.family == "k3") {
        g = complete_graph(3);
        rot = k3_rotation();
    } else if (a.family == "k4") {
        g = complete_graph(4);
        rot = k4_rotation();
    } else if (a.family == "prism") {
        g = prism_graph();
        rot = prism_rotation();
    } else {
        throw input_error("unknown family '" + a.family + "'");
    }
    const auto red = planar3col_to_sqcol(g, rot, a.q);
    std::vector<std::string> comments{"answer " + std::string(three_colorable(g) ? "yes" : "no"),
                                      "q " + std::to_string(a.q), "source planar3col " + source,
                                      "pre-removal vertices " + std::to_string(red.pre_vertices) + " eq " +
                                          std::to_string(red.eq_edges)};
    if (red.trivial) comments.push_back("trivial after pruning vertices of degree at most 2");
    Sink s(a.out);
    write_gr(s.get(), red.graph, comments);
    return 0;
}

int cmd_gen_gadget(GenArgs a) {
    const GadgetKind kind = gadget_kind_from_string(a.kind);
    if (!a.y.empty()) {
        if (a.y.size() != 3) throw input_error("--y takes three values");
        a.gp.y = {a.y[0], a.y[1], a.y[2]};
    }
    for (const auto& text : a.vectors) {
        IntVector v;
        std::stringstream ss(text);
        std::string part;
        while (std::getline(ss, part, ',')) v.push_back(std::stol(part));
        a.gp.list.push_back(v);
    }
    const auto gg = build_gadget(kind, a.gp, a.q);
    std::vector<std::string> comments{"answer unknown", "q " + std::to_string(a.q), "source gadget " + a.kind};
    for (const auto& [name, v] : gg.ports) comments.push_back("port " + name + " " + std::to_string(v + 1));
    if (!gg.in.empty()) comments.push_back("in" + join_ids(gg.in));
    if (!gg.out.empty()) comments.push_back("out" + join_ids(gg.out));
    if (!gg.vx.empty()) comments.push_back("vx" + join_ids(gg.vx));
    std::vector<int> cl;
    for (int v = 0; v < gg.graph.n(); ++v)
        if (gg.colorless[v]) cl.push_back(v);
    if (!cl.empty()) comments.push_back("colorless" + join_ids(cl));
    for (auto& line : range_comments(gg)) comments.push_back(std::move(line));
    Sink s(a.out);
    write_gr(s.get(), gg.graph, comments);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Square coloring solvers, decompositions and instance generators"};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_option("--seed", common.seed, "Seed for tie breaking and generators");
    app.add_option("--budget", common.budget, "Oracle node budget");
    app.add_option("--max-bag", common.max_bag, "Refuse decompositions with larger bags (0 = no limit)");
    app.add_option("--threads", common.threads, "Worker cap; execution is single-threaded")->check(CLI::PositiveNumber);

    DecideArgs da;
    auto* decide = app.add_subcommand("decide", "Decide square q-colorability");
    decide->add_option("--graph", da.graph)->required();
    decide->add_option("--td", da.td, "Tree decomposition (.td) for the tw route");
    decide->add_option("--q", da.q)->required();
    decide->add_option("--route", da.route)->check(CLI::IsMember({"auto", "tw", "planar", "oracle"}));
    decide->add_option("--witness", da.witness, "Write a coloring on YES");
    decide->add_option("--stats", da.stats, "Write stats JSON ('-' for stdout)");

    std::string c_graph, c_route = "oracle";
    auto* chromatic = app.add_subcommand("chromatic", "Smallest q with a square q-coloring");
    chromatic->add_option("--graph", c_graph)->required();
    chromatic->add_option("--route", c_route)->check(CLI::IsMember({"tw", "oracle"}));

    std::string v_graph, v_col;
    int v_q = -1;
    auto* verify = app.add_subcommand("verify", "Check a coloring");
    verify->add_option("--graph", v_graph)->required();
    verify->add_option("--coloring", v_col)->required();
    verify->add_option("--q", v_q, "Color budget (default: largest color used)");

    std::string d_graph, d_kind = "heuristic", d_out;
    int d_q = 0, d_r0 = 1;
    auto* decompose = app.add_subcommand("decompose", "Emit a tree decomposition");
    decompose->add_option("--graph", d_graph)->required();
    decompose->add_option("--kind", d_kind)->check(CLI::IsMember({"heuristic", "layered", "protrusion"}));
    decompose->add_option("--q", d_q);
    decompose->add_option("--r0", d_r0);
    decompose->add_option("--out", d_out);

    std::string r_graph, r_out;
    int r_q = 0;
    auto* reduce = app.add_subcommand("reduce", "Emit the q-irreducible core with an id map");
    reduce->add_option("--graph", r_graph)->required();
    reduce->add_option("--q", r_q)->required();
    reduce->add_option("--out", r_out);

    GenArgs ga;
    auto* generate = app.add_subcommand("generate", "Instance generators");
    generate->require_subcommand(1);
    generate->fallthrough();
    auto* g_vs = generate->add_subcommand("vectorsum", "Random restricted vector k-sum via subgraph isomorphism");
    g_vs->add_option("--k", ga.k);
    g_vs->add_option("--n", ga.n);
    g_vs->add_option("--p", ga.p, "Host edge probability");
    g_vs->add_option("--out", ga.out);
    auto* g_sq = generate->add_subcommand("sqcol-from-vectorsum", "Square coloring instance from a vector k-sum file");
    g_sq->add_option("--input", ga.input)->required();
    g_sq->add_option("--r", ga.r, "Separator half size override");
    g_sq->add_option("--out", ga.out);
    auto* g_pl = generate->add_subcommand("planar3col", "Square coloring instance from planar 3-coloring");
    g_pl->add_option("--q", ga.q)->required();
    g_pl->add_option("--family", ga.family)->check(CLI::IsMember({"k3", "k4", "prism"}));
    g_pl->add_option("--graph", ga.graph);
    g_pl->add_option("--rotation", ga.rotation);
    g_pl->add_option("--out", ga.out);
    auto* g_gd = generate->add_subcommand("gadget", "A single gadget with its ports");
    g_gd->add_option("--kind", ga.kind)->required();
    g_gd->add_option("--q", ga.q);
    g_gd->add_option("--alpha", ga.gp.alpha);
    g_gd->add_option("--beta", ga.gp.beta);
    g_gd->add_option("--m", ga.gp.m);
    g_gd->add_option("--n", ga.gp.n);
    g_gd->add_option("--tau", ga.gp.tau);
    g_gd->add_option("--r", ga.gp.r);
    g_gd->add_option("--y", ga.y)->delimiter(',');
    g_gd->add_option("--vector", ga.vectors, "List vector as comma separated entries (repeatable)");
    g_gd->add_option("--pos", ga.gp.pos_dims)->delimiter(',');
    g_gd->add_option("--neg", ga.gp.neg_dims)->delimiter(',');
    g_gd->add_flag("--removed", ga.gp.removed, "Colorless vertices replaced by ordinary ones");
    g_gd->add_option("--out", ga.out);

    auto* selftest = app.add_subcommand("selftest", "Run the invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (*decide) return cmd_decide(da, common);
        if (*chromatic) return cmd_chromatic(c_graph, c_route, common);
        if (*verify) return cmd_verify(v_graph, v_col, v_q);
        if (*decompose) return cmd_decompose(d_graph, d_kind, d_q, d_r0, d_out, common);
        if (*reduce) return cmd_reduce(r_graph, r_q, r_out);
        if (*g_vs) return cmd_gen_vectorsum(ga, common);
        if (*g_sq) return cmd_gen_sqcol(ga);
        if (*g_pl) return cmd_gen_planar(ga);
        if (*g_gd) {
            // Dimensions are 1-based on the command line.
            for (auto& d : ga.gp.pos_dims) --d;
            for (auto& d : ga.gp.neg_dims) --d;
            return cmd_gen_gadget(ga);
        }
        if (*selftest) return run_selftest(std::cout, common.seed) == 0 ? 0 : 1;
    } catch (const resource_error& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kExitTimeout;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return 0;
}
