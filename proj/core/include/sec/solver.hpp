#pragma once

#include "sec/coloring.hpp"
#include "sec/conflict.hpp"
#include "sec/graph.hpp"
#include "sec/reducer.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sec {

// ---------------------------------------------------------------------------
// Verification

struct Violation {
    enum class Kind : std::uint8_t {
        SameColorWithinDistanceTwo, ///< edges `first` and `second` share a color
        Uncolored,                  ///< `first` has no color but totality was required
        UnknownEdge,                ///< a color was assigned to id `first` outside the graph
        NotInList,                  ///< `first` got a color outside its list
    };
    Kind kind{};
    EdgeId first = 0;
    EdgeId second = 0;

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Empty iff the coloring is strong (and total, when required).
std::vector<Violation> verify_strong(const Graph& g, const PartialColoring& c, bool require_total);

/// Colored edges whose color is missing from their list.
std::vector<Violation> verify_lists(const PartialColoring& c, const ColorLists& lists);

std::string describe(const Graph& g, const Violation& v);

// ---------------------------------------------------------------------------
// Solving

enum class SolvePath : std::uint8_t { Mad3, Girth7, Greedy };

std::string_view path_name(SolvePath p);

/// An extension step whose colored-conflict count exceeded the plan's bound.
struct BoundExcess {
    ClaimTag claim{};
    EdgeId edge = 0; ///< id in the input graph
    std::uint32_t bound = 0;
    std::uint32_t actual = 0;
};

struct SolveReport {
    PartialColoring coloring;
    SolvePath path = SolvePath::Greedy;
    bool success = false;   ///< coloring is total and drawn from the lists
    bool certified = false; ///< success and every extension respected its plan bound
    std::size_t colors_used = 0;
    std::uint32_t color_budget = 0; ///< 3Δ+1 or 3*delta_cap; 0 for plain greedy
    std::optional<std::string> fallback;
    std::optional<EdgeId> failed_edge; ///< first edge greedy could not color
    std::size_t recursion_depth = 0;
    std::size_t extension_steps = 0;
    std::uint32_t tightest_slack = 0; ///< min over steps of (list size - actual conflicts)
    std::array<std::size_t, 13> claim_counts{};
    std::vector<BoundExcess> bound_excesses;
};

/// Colors edges in `order`, each with the smallest list color unused within
/// distance two. Edges not in `order` stay uncolored.
SolveReport greedy_color(const Graph& g, const ColorLists& lists, std::span<const EdgeId> order);

struct SolveOptions {
    /// When the girth-7 detector finds nothing, graphs with at most this many
    /// edges go to the exact oracle; larger ones to greedy.
    std::size_t fallback_threshold = 24;
    std::uint64_t oracle_node_limit = 20'000'000;
};

/// Per-step record produced by `extend`.
struct ExtensionRecord {
    EdgeId edge = 0;
    std::uint32_t bound = 0;
    std::uint32_t actual = 0;
    std::size_t list_size = 0;
    Color chosen = 0;
};

/// Colors plan.extension_order on top of `partial` (a strong coloring of g
/// with the deleted vertex's edges and the erased edges uncolored). Picks the
/// smallest admissible color at every step. Throws ExtensionError when a step
/// has no admissible color.
PartialColoring extend(const Graph& g, const ConflictIndex& index, PartialColoring partial,
                       const ReductionPlan& plan, const ColorLists& lists,
                       std::vector<ExtensionRecord>* records = nullptr);

/// List strong edge coloring for mad(g) < 3, Δ(g) <= 4, lists of size >= 3Δ(g)+1.
/// Throws HypothesisError on a failed hypothesis and TheoremViolation when no
/// reducible configuration exists on a hypothesis-satisfying graph.
SolveReport solve_mad3(const Graph& g, const ColorLists& lists, const SolveOptions& options = {});

/// List strong edge coloring for planar g with girth >= 7 and Δ(g) <= delta_cap,
/// delta_cap >= 4, lists of size >= 3*delta_cap. Planarity is trusted; if the
/// detector finds nothing the report falls back and is not certified.
SolveReport solve_girth7(const Graph& g, const ColorLists& lists, std::uint32_t delta_cap,
                         const SolveOptions& options = {});

} // namespace sec
