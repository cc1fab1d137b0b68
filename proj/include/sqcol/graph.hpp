#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sqcol {

using Edge = std::pair<int, int>;
// Color per vertex, 1..q. Zero means unassigned.
using Coloring = std::vector<int>;

class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<Edge>& edges);

    int n() const { return static_cast<int>(adj_.size()); }
    std::size_t m() const { return m_; }

    // Loops and duplicates are ignored; returns whether an edge was added.
    bool add_edge(int u, int v);
    int add_vertex();

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const;
    int max_degree() const;
    std::vector<Edge> edges() const;

    bool operator==(const Graph& o) const { return adj_ == o.adj_; }

private:
    std::vector<std::vector<int>> adj_;
    std::size_t m_ = 0;
};

struct Subgraph {
    Graph graph;
    std::vector<int> to_parent;
};

Graph square_graph(const Graph& g);
std::vector<int> dist2_closed_neighborhood(const Graph& g, int v);
// BFS distances from src; -1 for unreached or beyond limit (limit < 0 means no limit).
std::vector<int> bfs_distances(const Graph& g, int src, int limit = -1);
int max_square_closed_degree(const Graph& g);

struct Violation {
    int u = 0;
    int v = 0;
    // 1 or 2 for a conflicting pair; 0 when u == v carries a color outside 1..q.
    int distance = 0;
};
std::optional<Violation> verify_square_coloring(const Graph& g, int q, const Coloring& c);

std::vector<std::vector<int>> connected_components(const Graph& g);
Subgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);
bool is_connected(const Graph& g);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph complete_graph(int n);
Graph grid_graph(int rows, int cols);

// Clockwise neighbor order per vertex.
struct RotationSystem {
    std::vector<std::vector<int>> order;
};
void check_rotation(const Graph& g, const RotationSystem& rot);

// .gr: "p tw n m", then 1-based "u v" lines; "c" lines are comments.
struct GrFile {
    Graph graph;
    std::vector<std::string> comments;
};
GrFile read_gr(std::istream& in);
GrFile read_gr_file(const std::string& path);
void write_gr(std::ostream& out, const Graph& g, const std::vector<std::string>& comments = {});

RotationSystem read_rotation(std::istream& in, int n);
void write_rotation(std::ostream& out, const RotationSystem& rot);

// Coloring files: "<v> <color>" per line, 1-based vertex ids.
Coloring read_coloring(std::istream& in, int n);
void write_coloring(std::ostream& out, const Coloring& c);

}  // namespace sqcol
