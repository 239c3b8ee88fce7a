#pragma once

#include "sec/graph.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace sec {

/// Reducible configurations. M* belong to the mad < 3, Δ <= 4 argument and
/// are tried in declaration order; G* belong to the planar girth >= 7 argument.
enum class ClaimTag : std::uint8_t {
    M1Pendant,          ///< a 1-vertex
    M2TwoWeakNeighbors, ///< a 2-vertex whose neighbors are both 3^-
    M3TwoFour,          ///< 2-vertex v1 = (v, w1), v has another 2-neighbor, w1 is 3^-
    M4NoFourFour,       ///< a 4_4-vertex
    M5FourThree,        ///< 4_3-vertex v, 2-neighbor v1 whose other neighbor is 4_2 or 4_3
    G1Pendant,          ///< pendant edge with fewer than 3Δ edges within distance two
    G2TwoWeak,          ///< a 2-vertex whose neighbors are both 3^-
    G3AllTwoNeighbors,  ///< a vertex with no 3^+ neighbor
    G4FourTwelve,       ///< 2-vertex adjacent to a 2-vertex and a non-4_1 4-vertex
    G5NoFourThreeThree, ///< 2-vertex adjacent to a 4_3-vertex and a 3-vertex
    G6NoTwoFourTwo,     ///< 2-vertex at a 3_2-vertex whose other end is 3^-, 4_2 or 4_3
    G7BigOneThreePlus,  ///< 5^+-vertex with exactly one 3^+ neighbor
    G8BigTwoThreePlus,  ///< 5^+-vertex with exactly two 3^+ neighbors
};

/// Short tag such as "M3" or "G8".
std::string_view claim_name(ClaimTag tag);
/// Longer description of the configuration.
std::string_view claim_description(ClaimTag tag);

struct ExtensionStep {
    EdgeId edge = 0;
    /// Upper bound on colored edges within distance two at the moment this
    /// edge is colored (earlier steps of the same plan included).
    std::uint32_t conflict_bound = 0;

    friend bool operator==(const ExtensionStep&, const ExtensionStep&) = default;
};

/// Delete / recurse / erase / extend recipe for one reducible configuration.
/// Edge ids refer to the graph the plan was computed on.
struct ReductionPlan {
    ClaimTag claim{};
    VertexId delete_vertex = 0;
    std::vector<EdgeId> erase_edges;
    std::vector<ExtensionStep> extension_order;
    /// Vertices named by the configuration (center first).
    std::vector<VertexId> involved;

    friend bool operator==(const ReductionPlan&, const ReductionPlan&) = default;
};

/// First configuration in priority M1 > ... > M5, scanning centers by
/// increasing id. `governing_max_degree` is the Δ the color budget 3Δ+1 is
/// computed from (defaults to Δ(g)); bounds in the plan are expressed in it.
std::optional<ReductionPlan> find_reducible_mad(
    const Graph& g, std::optional<std::uint32_t> governing_max_degree = std::nullopt);

/// First configuration in priority G1 > ... > G8. Throws HypothesisError when
/// delta_cap < 4 or Δ(g) > delta_cap.
std::optional<ReductionPlan> find_reducible_girth7(const Graph& g, std::uint32_t delta_cap);

/// Every configuration present, in priority order. Plans for later claims are
/// only safe to execute when no earlier claim fires; these lists serve audits.
std::vector<ReductionPlan> all_reducible_mad(
    const Graph& g, std::optional<std::uint32_t> governing_max_degree = std::nullopt);
std::vector<ReductionPlan> all_reducible_girth7(const Graph& g, std::uint32_t delta_cap);

} // namespace sec
