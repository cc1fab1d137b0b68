#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sqcol/graph.hpp"

namespace sqcol {

struct TreeDecomposition {
    std::vector<std::vector<int>> bags;  // sorted vertex ids
    std::vector<Edge> tree_edges;         // between node ids
    int root = 0;

    int size() const { return static_cast<int>(bags.size()); }
    int width() const;
    // Children lists when the tree is rooted at `root`.
    std::vector<std::vector<int>> children() const;
};

struct TdProblem {
    enum class Kind { not_a_tree, bad_vertex, missing_vertex, uncovered_edge, disconnected };
    Kind kind;
    int u = -1;
    int v = -1;
    std::string message;
};

struct TdVerdict {
    std::vector<TdProblem> problems;
    bool ok() const { return problems.empty(); }
};

TdVerdict validate(const Graph& g, const TreeDecomposition& td);

enum class Heuristic { min_fill, min_degree };

// Seed 0 breaks ties by lowest id; other seeds by a seeded permutation of ids.
std::vector<int> elimination_order(const Graph& g, Heuristic h, std::uint64_t seed = 0);
TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<int>& order);
// Better of min-fill and min-degree; min-degree only above 50 000 vertices.
TreeDecomposition heuristic_decompose(const Graph& g, std::uint64_t seed = 0);

enum class NodeKind { leaf, introduce, forget, join };

struct NiceNode {
    NodeKind kind = NodeKind::leaf;
    int vertex = -1;  // introduced or forgotten vertex
    std::vector<int> bag;
    std::vector<int> children;
};

// Nodes are stored children-first, so index order is a valid bottom-up order.
struct NiceTreeDecomposition {
    std::vector<NiceNode> nodes;
    int root = -1;

    int width() const;
    TreeDecomposition as_td() const;
    std::vector<int> subtree_sizes() const;
};

// The root chain forgets down to `root_bag`, which must be a subset of the root's bag.
NiceTreeDecomposition make_nice(const TreeDecomposition& td, const std::vector<int>& root_bag = {});
// Empty string when nice; otherwise a description of the first defect.
std::string check_nice(const NiceTreeDecomposition& ntd);

// PACE .td format. Node ids are 1-based in the file.
TreeDecomposition read_td(std::istream& in, int* n_out = nullptr);
TreeDecomposition read_td_file(const std::string& path, int* n_out = nullptr);
void write_td(std::ostream& out, const TreeDecomposition& td, int n,
              const std::vector<std::string>& comments = {});

// Decomposition of G^2 built from BFS layers of G.
struct LayeredReport {
    TreeDecomposition td;
    int layer_modulus = 0;   // M
    int residue = 0;         // j*
    int strips = 0;
    double bound = 0;        // 8 * sqrt(n * Delta)
};
LayeredReport layered_square_decomposition(const Graph& g, int delta = -1);

}  // namespace sqcol
