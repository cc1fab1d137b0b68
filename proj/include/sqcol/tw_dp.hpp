#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sqcol/decomposition.hpp"
#include "sqcol/graph.hpp"

namespace sqcol {

// One true entry D[t][chi][xi][rho]. Bag positions follow ascending vertex id;
// xi values and rho keys are position masks; rho keeps only nonzero counts, sorted by mask.
struct DpEntry {
    std::vector<std::uint8_t> chi;
    std::vector<std::uint32_t> xi;
    std::vector<std::pair<std::uint32_t, std::uint16_t>> rho;

    bool operator==(const DpEntry& o) const { return chi == o.chi && xi == o.xi && rho == o.rho; }
    int rho_at(std::uint32_t mask) const;
};

struct DpTable {
    std::vector<int> bag;
    std::vector<DpEntry> entries;
    // Predecessor per entry: child entry index (and right child index for Join), -1 if none.
    std::vector<std::pair<int, int>> pred;
};

struct DpOptions {
    // q >= n and q >= max |N_{G^2}[v]| answer YES without running the tables.
    bool shortcuts = true;
    // Refuse when 2^{w+1} * log2(q+1) exceeds this many bits.
    double width_budget_bits = 4096;
    // Refuse when a bag exceeds this size (0 = no limit).
    int max_bag = 0;
    // Refuse when the stored entries across live tables exceed this count.
    std::size_t max_entries = 8'000'000;
    bool witness = false;
    // Record every node's entry count against the table-size cap.
    bool check_cap = true;
    std::ostream* dump = nullptr;
};

struct DpStats {
    int width = -1;
    std::size_t nodes = 0;
    std::size_t table_entries_total = 0;
    std::size_t max_table = 0;
    std::size_t cap_violations = 0;
    std::string shortcut;  // empty when the tables decided
};

struct DpResult {
    bool yes = false;
    std::optional<Coloring> witness;
    DpStats stats;
};

// log2 of q^b * 2^(b^2) * (q+1)^(2^b); -inf when the cap is zero.
double table_cap_log2(int q, int bag_size);

// Runs the tables bottom-up and returns the root table; all tables when keep_all is set.
std::vector<DpTable> run_tables(const Graph& g, int q, const NiceTreeDecomposition& ntd,
                                const DpOptions& opt, DpStats& stats, bool keep_all);

DpResult decide_tw(const Graph& g, int q, const NiceTreeDecomposition& ntd, const DpOptions& opt = {});
// Heuristic decomposition per connected component.
DpResult decide_tw(const Graph& g, int q, const DpOptions& opt = {});

// Replays recorded predecessors from the root entry `root_entry`; `tables` must come
// from run_tables(keep_all).
Coloring extract_witness(const Graph& g, int q, const NiceTreeDecomposition& ntd,
                         const std::vector<DpTable>& tables, int root_entry = 0);

bool locally_valid(const std::vector<int>& bag, const Graph& g, const std::vector<std::uint8_t>& chi,
                   const std::vector<std::uint32_t>& xi);

void dump_entry(std::ostream& out, int node, const DpEntry& e);

}  // namespace sqcol
