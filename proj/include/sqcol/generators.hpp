#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sqcol/graph.hpp"

namespace sqcol {

// ---- Vector k-sum ---------------------------------------------------------

using IntVector = std::vector<long>;

// Dimensions are 0-based here and 1-based in files and messages.
struct VectorKSumInstance {
    int n = 1;
    int m = 0;
    std::vector<std::vector<IntVector>> lists;
    std::vector<std::vector<int>> pos_dims;  // D+ per list, ascending
    std::vector<std::vector<int>> neg_dims;  // D- per list, ascending
    bool trivial_no = false;                 // emitted for an input with an empty fiber choice

    int k() const { return static_cast<int>(lists.size()); }
};

// Empty when the instance is in restricted form.
std::vector<std::string> restricted_form_problems(const VectorKSumInstance& inst);
// The three non-zero entries of a, in ascending dimension order.
std::array<long, 3> nonzero_part(const IntVector& a, const std::vector<int>& dims);
// Ascending union of D+ and D-.
std::vector<int> nonzero_dims(const VectorKSumInstance& inst, int list);

// Meet in the middle over the lists; returns one chosen index per list when the sum can vanish.
std::optional<std::vector<int>> solve_vector_ksum(const VectorKSumInstance& inst,
                                                  std::size_t max_states = 50'000'000);

struct ColoredSubIsoInstance {
    Graph pattern;         // cubic, k vertices
    Graph host;            // k*n vertices
    std::vector<int> fiber;  // host vertex -> pattern vertex
    int n = 1;
};

std::vector<std::string> subiso_problems(const ColoredSubIsoInstance& inst);
VectorKSumInstance gen_subiso_to_vectorsum(const ColoredSubIsoInstance& inst);
// Whether some choice of one host vertex per fiber induces the pattern on adjacent fibers.
bool solve_colored_subiso(const ColoredSubIsoInstance& inst);

// Random cubic pattern on k vertices (k even, k >= 4) and a host where each pair of fibers
// over a pattern edge is joined with probability p per vertex pair.
ColoredSubIsoInstance random_subiso_instance(int k, int n, double p, std::uint64_t seed);

// Text format: "p vsum k m n", then per list "l <i> + <dims> - <dims>" and its vectors
// "v <i> <a_1> ... <a_m>". Lists and dimensions are 1-based.
void write_vectorsum(std::ostream& out, const VectorKSumInstance& inst, const std::vector<std::string>& comments = {});
VectorKSumInstance read_vectorsum(std::istream& in);

// ---- Gadgets ----------------------------------------------------------------

enum class GadgetKind {
    subset,
    color_class_copy,
    const_socket,
    switch_socket,
    edge_selection,
    vector_state,
    one_way_switch,
    vector_selection,
};

std::string to_string(GadgetKind kind);
GadgetKind gadget_kind_from_string(const std::string& s);

struct GadgetParams {
    int alpha = 1;  // subset inputs; edge selection parameter
    int beta = 1;   // subset outputs
    int m = 1;
    int n = 1;
    int tau = 1;    // socket type
    int r = 0;      // copy separator half size; 0 picks the smallest with C(2r,r) >= 2m
    std::array<long, 3> y{};       // vector state
    std::vector<IntVector> list;   // vector selection, full m-dimensional vectors
    std::vector<int> pos_dims, neg_dims;
    // Colorless vertices become ordinary ones; subset gadgets lose two complement
    // vertices and gain the edge a-b.
    bool removed = false;
};

struct GadgetRange {
    std::string kind;
    int begin = 0;  // first vertex created inside this gadget
    int end = 0;    // one past the last
};

struct GadgetGraph {
    Graph graph;
    int q = 0;
    std::vector<char> colorless;
    std::vector<int> in, out, vx;
    std::vector<std::vector<int>> in_groups, out_groups;  // color class ports I_j and I'_j
    std::map<std::string, int> ports;                    // r, g, b, s, r', g', b', s', x, ...
    std::vector<GadgetRange> ranges;
    std::size_t subset_gadgets = 0;

    int colorless_count() const;
};

GadgetGraph build_gadget(GadgetKind kind, const GadgetParams& params, int q);

// Pairs of colored vertices at distance at most 2; paths may pass through colorless vertices.
Graph conflict_graph(const GadgetGraph& gg);

// Smallest r with C(2r, r) >= 2m.
int copy_separator_r(int m);

struct SqcolInstance {
    GadgetGraph gg;
    int q = 0;
    int r = 0;
    int q_colorless = 0;
    std::optional<bool> answer;  // from solving the vector instance
    std::map<std::string, int> tallies;
};

// Whole reduction. `r_override` > 0 replaces the default separator size.
SqcolInstance gen_vectorsum_to_sqcol(const VectorKSumInstance& inst, int r_override = 0, bool solve = true);

// Empty when the instance passes the structural audit (ports, removal, q formula).
std::vector<std::string> audit_sqcol(const VectorKSumInstance& inst, const SqcolInstance& out);

// ---- Planar lower bounds ---------------------------------------------------

struct Dart {
    int from = 0;
    int to = 0;
};

// Faces of an embedded graph as cyclic dart sequences. dart_face[i] is the face of darts[i].
struct FaceStructure {
    std::vector<Dart> darts;                 // 2 per edge: (u,v) at 2e, (v,u) at 2e+1, u < v
    std::vector<std::vector<int>> faces;     // dart indices
    std::vector<int> dart_face;
    std::vector<Edge> edges;                 // sorted
    int dart_index(int u, int v) const;
};

FaceStructure trace_faces(const Graph& g, const RotationSystem& rot);
bool euler_planar(const Graph& g, const FaceStructure& fs);

struct EdgeCoveringCycle {
    std::vector<Dart> darts;
    std::vector<int> cycle;  // dart indices in cyclic order
    // Per dart, its E* partner on the side of the dart's own face and on the twin's face.
    std::vector<std::array<int, 2>> partner;
    // Faces of G+ counted on the combined rotation; equal to 2 - V + E when planar.
    int faces_of_plus = 0;
    int vertices_of_plus = 0;
    int edges_of_plus = 0;
};

EdgeCoveringCycle edge_covering_cycle(const Graph& g, const RotationSystem& rot);
// Empty when the cycle is a single cycle on all darts and G+ is planar with alternation.
std::vector<std::string> check_edge_covering_cycle(const Graph& g, const EdgeCoveringCycle& c);

struct EqAnnotatedGraph {
    Graph h;
    std::vector<Edge> eq;  // sorted pairs u < v, disjoint from E(h)
};

Graph with_eq_edges(const EqAnnotatedGraph& a);
EqAnnotatedGraph gen_planar3col_q4(const Graph& g, const RotationSystem& rot);
EqAnnotatedGraph gen_planar3col_qge5(const Graph& g, const RotationSystem& rot, int q);
Graph remove_equality_edges(const EqAnnotatedGraph& a, int q);

// The equality gadget alone on u = 0, v = 1, with `pendants` extra leaves on each of u and v.
Graph equality_gadget_harness(int q, int pendants);

// Planar 3-coloring to square q-coloring. For q >= 5 vertices of degree at most 2 are
// pruned first; an empty remainder gives a single vertex (a YES instance).
struct Planar3ColReduction {
    Graph graph;
    bool trivial = false;
    std::size_t eq_edges = 0;
    int pre_vertices = 0;
};
Planar3ColReduction planar3col_to_sqcol(const Graph& g, const RotationSystem& rot, int q);

bool three_colorable(const Graph& g);

RotationSystem k3_rotation();
RotationSystem k4_rotation();
RotationSystem prism_rotation();
Graph prism_graph();

}  // namespace sqcol
