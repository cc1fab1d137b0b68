#pragma once

#include <cstddef>
#include <functional>
#include <optional>

#include "sqcol/graph.hpp"

namespace sqcol {

enum class Verdict { yes, no, timeout };

struct OracleResult {
    Verdict verdict = Verdict::no;
    std::optional<Coloring> witness;
    std::size_t nodes = 0;  // search nodes visited
};

enum class OracleOrder {
    degree,      // fixed order by descending degree in G^2
    saturation,  // fewest remaining colors first, ties by the fixed order
};

// Backtracking on G^2 with forbidden-color counts and forced singletons; the search splits
// into independent pieces whenever the uncolored vertices disconnect.
OracleResult brute_force_decide(const Graph& g, int q, std::size_t budget = 100'000'000,
                                OracleOrder order = OracleOrder::degree);

// Proper q-colorings of an explicit conflict graph that agree with the nonzero entries of
// `fixed`. Colors never used by `fixed` are still tried smallest-first only.
OracleResult extend_proper_coloring(const Graph& conflict, int q, const Coloring& fixed,
                                    std::size_t budget = 100'000'000,
                                    OracleOrder order = OracleOrder::degree);
OracleResult extend_square_coloring(const Graph& g, int q, const Coloring& fixed,
                                    std::size_t budget = 100'000'000,
                                    OracleOrder order = OracleOrder::degree);
// Plain enumeration without symmetry breaking; `fn` returns false to stop early.
// Returns the number of colorings visited.
std::size_t for_each_proper_coloring(const Graph& conflict, int q, const Coloring& fixed,
                                     const std::function<bool(const Coloring&)>& fn);

struct ChromaticResult {
    Verdict verdict = Verdict::yes;  // timeout if some step ran out of budget
    int value = 0;
    std::optional<Coloring> witness;
};

// Smallest q admitting a square q-coloring, searched upward from max |N[v]|.
ChromaticResult square_chromatic_number(const Graph& g, std::size_t budget = 100'000'000,
                                        OracleOrder order = OracleOrder::degree);

}  // namespace sqcol
