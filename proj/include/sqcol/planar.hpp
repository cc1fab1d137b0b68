#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sqcol/decomposition.hpp"
#include "sqcol/graph.hpp"
#include "sqcol/tw_dp.hpp"

namespace sqcol {

// Colors the zero entries of `partial` in ascending id with the smallest color free in
// their distance-2 neighborhood. Throws input_error naming the vertex if none is free.
Coloring greedy_extend(const Graph& g, int q, Coloring partial);

// Fixpoint of W = U + N(U), U = {u : |N_{G^2}[u]| > q}. to_parent maps back to g.
Subgraph q_irreducible_reduce(const Graph& g, int q);
std::vector<int> high_square_degree(const Graph& g, int q);

std::vector<int> greedy_dist2_dominating(const Graph& g, const std::vector<int>& U, int ell);
std::vector<int> dist3_dominating(const Graph& g, int q);

struct ProtrusionChild {
    std::vector<int> vertices;  // V_i, sorted, contains Y
    std::vector<int> Y;         // X intersected with the child root bag
    TreeDecomposition td;       // over global ids; the root bag contains Y
};

struct ProtrusionDecomposition {
    std::vector<int> X;
    std::vector<ProtrusionChild> children;

    int alpha() const { return static_cast<int>(X.size()); }
    int delta() const { return static_cast<int>(children.size()); }
    int k() const;
    TreeDecomposition as_td() const;
};

// X is the radius-r0 ball around D; children are the components of G - X.
ProtrusionDecomposition build_protrusion_decomposition(const Graph& g, const std::vector<int>& D, int r0 = 1);
// Reads a decomposition whose root bag is X; each root subtree becomes a child.
ProtrusionDecomposition protrusion_from_td(const TreeDecomposition& td);
void write_protrusion(std::ostream& out, const ProtrusionDecomposition& pd, int n);

struct GammaContext {
    int q = 0;
    // Per child: interface (global ids) and the chosen entry's colors, classes and demand.
    struct Child {
        std::vector<int> Y;
        std::vector<int> chi;                    // per Y position
        std::vector<std::uint32_t> xi;           // per Y position, masks over Y positions
        std::vector<std::pair<std::uint32_t, int>> rho;  // nonzero demands
    };
    std::vector<Child> children;
    std::vector<int> X;
    std::vector<int> chi_x;  // per X position
};

// Whether colors 1..q can be assigned to all demands under conditions (i)-(vi).
bool gamma_feasible(const Graph& g, const GammaContext& ctx);
// The assignment itself: per child, per rho entry, the colors given to that class.
std::optional<std::vector<std::vector<std::vector<int>>>> gamma_solve(const Graph& g, const GammaContext& ctx);

struct ProtrusionOptions {
    int k_cap = 12;
    DpOptions dp;
    std::size_t max_outer = 200'000'000;  // chi assignments on X before giving up
};

struct ProtrusionResult {
    bool yes = false;
    bool fallback = false;  // k cap exceeded; decided by decide_tw instead
    std::optional<Coloring> witness;
    std::size_t outer_iterations = 0;
    std::size_t child_entries = 0;
};

ProtrusionResult protrusion_decide(const Graph& g, int q, const ProtrusionDecomposition& pd,
                                   const ProtrusionOptions& opt = {});

struct SquareDpStats {
    int width = -1;
    std::size_t table_entries_total = 0;
};

// Per-bag coloring DP on a decomposition of G^2.
bool q_coloring_on_square(const Graph& g, int q, const TreeDecomposition& td_square, Coloring* witness = nullptr,
                          SquareDpStats* stats = nullptr, double budget_bits = 40);

struct PlanarResult {
    bool yes = false;
    std::string route;  // "degree", "square", "reduce-empty", "protrusion", "tw-fallback"
    std::optional<Coloring> witness;
    int width = -1;
    std::size_t table_entries_total = 0;
    int absorbed = 0;  // pieces folded into X after a table budget was exceeded
};

PlanarResult solve_planar(const Graph& g, int q, bool want_witness = false, const ProtrusionOptions& opt = {});

}  // namespace sqcol
