#pragma once

#include "sec/coloring.hpp"
#include "sec/graph.hpp"

#include <cstdint>
#include <optional>

namespace sec {

/// Limits for the exact searches. Exceeding either throws BudgetExceeded.
struct SearchBudget {
    std::size_t max_edges = 28;
    std::uint64_t max_nodes = 50'000'000;
};

struct OracleResult {
    std::uint32_t chi_s = 0;               ///< strong chromatic index
    PartialColoring witness;               ///< total, colors 0..chi_s-1
    std::uint32_t lower_bound_clique = 0;  ///< greedy clique in the conflict graph
    std::uint64_t nodes = 0;               ///< search nodes expanded
};

/// Exact strong chromatic index: k-colorability of the conflict graph for
/// k = clique bound, clique bound + 1, ... with DSATUR-style branching and
/// color-index symmetry breaking.
OracleResult strong_chromatic_index_exact(const Graph& g, const SearchBudget& budget = {});

/// A total strong coloring drawn from the lists, or nullopt iff none exists.
std::optional<PartialColoring> list_strong_colorable(const Graph& g, const ColorLists& lists,
                                                     const SearchBudget& budget = {});

/// Checks the small-degree bounds: χ'_s <= 1 when Δ <= 1, χ'_s <= 5 when Δ = 2.
/// Throws InputError when Δ > 2.
bool check_proposition_small_delta(const Graph& g, const SearchBudget& budget = {});

} // namespace sec
