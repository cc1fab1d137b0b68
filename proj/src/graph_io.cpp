#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "sqcol/errors.hpp"
#include "sqcol/graph.hpp"

namespace sqcol {

namespace {

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r") == std::string::npos; }

int parse_vertex(std::istringstream& ls, int n, int line_no) {
    long long v;
    if (!(ls >> v)) throw input_error("line " + std::to_string(line_no) + ": expected vertex id");
    if (v < 1 || v > n)
        throw input_error("line " + std::to_string(line_no) + ": vertex " + std::to_string(v) +
                          " out of range");
    return static_cast<int>(v - 1);
}

}  // namespace

GrFile read_gr(std::istream& in) {
    GrFile out;
    std::string line;
    int line_no = 0;
    bool header = false;
    std::size_t declared_m = 0;
    std::size_t edge_lines = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank(line)) continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (tok == "c") {
            std::string rest;
            std::getline(ls, rest);
            auto p = rest.find_first_not_of(' ');
            out.comments.push_back(p == std::string::npos ? "" : rest.substr(p));
            continue;
        }
        if (tok == "p") {
            std::string kind;
            long long n, m;
            if (header || !(ls >> kind >> n >> m) || kind != "tw" || n < 0 || m < 0)
                throw input_error("line " + std::to_string(line_no) + ": bad header");
            out.graph = Graph(static_cast<int>(n));
            declared_m = static_cast<std::size_t>(m);
            header = true;
            continue;
        }
        if (!header) throw input_error("line " + std::to_string(line_no) + ": edge before header");
        std::istringstream es(line);
        int u = parse_vertex(es, out.graph.n(), line_no);
        int v = parse_vertex(es, out.graph.n(), line_no);
        out.graph.add_edge(u, v);
        ++edge_lines;
    }
    if (!header) throw input_error("missing header line");
    if (edge_lines != declared_m)
        throw input_error("header declares " + std::to_string(declared_m) + " edges, found " +
                          std::to_string(edge_lines));
    return out;
}

GrFile read_gr_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    return read_gr(in);
}

void write_gr(std::ostream& out, const Graph& g, const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "c " << c << '\n';
    out << "p tw " << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
}

RotationSystem read_rotation(std::istream& in, int n) {
    RotationSystem rot;
    rot.order.assign(n, {});
    std::vector<bool> seen(n, false);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank(line)) continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (tok == "c") continue;
        if (tok != "r") throw input_error("line " + std::to_string(line_no) + ": expected 'r'");
        int v = parse_vertex(ls, n, line_no);
        if (seen[v]) throw input_error("line " + std::to_string(line_no) + ": repeated vertex");
        seen[v] = true;
        long long u;
        while (ls >> u) {
            if (u < 1 || u > n) throw input_error("line " + std::to_string(line_no) + ": bad neighbor");
            rot.order[v].push_back(static_cast<int>(u - 1));
        }
    }
    return rot;
}

void write_rotation(std::ostream& out, const RotationSystem& rot) {
    for (std::size_t v = 0; v < rot.order.size(); ++v) {
        out << "r " << v + 1;
        for (int u : rot.order[v]) out << ' ' << u + 1;
        out << '\n';
    }
}

Coloring read_coloring(std::istream& in, int n) {
    Coloring c(n, 0);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank(line)) continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (tok == "c") continue;
        std::istringstream vs(line);
        int v = parse_vertex(vs, n, line_no);
        long long col;
        if (!(vs >> col)) throw input_error("line " + std::to_string(line_no) + ": expected color");
        c[v] = static_cast<int>(col);
    }
    for (int v = 0; v < n; ++v)
        if (c[v] == 0) throw input_error("vertex " + std::to_string(v + 1) + " has no color");
    return c;
}

void write_coloring(std::ostream& out, const Coloring& c) {
    for (std::size_t v = 0; v < c.size(); ++v) out << v + 1 << ' ' << c[v] << '\n';
}

}  // namespace sqcol
