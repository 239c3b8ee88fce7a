#pragma once

#include "sec/coloring.hpp"
#include "sec/graph.hpp"

#include <span>
#include <vector>

namespace sec {

/// Edges of `g` within distance two of `e`: every edge other than e = uv that
/// touches N(u) ∪ N(v). Sorted ascending. Throws InputError on an unknown id.
std::vector<EdgeId> edges_within_distance_two(const Graph& g, EdgeId e);

/// Precomputed distance-two relation over all edges of a graph.
class ConflictIndex {
public:
    ConflictIndex() = default;
    explicit ConflictIndex(const Graph& g);

    std::size_t edge_count() const noexcept { return conflicts_.size(); }
    std::span<const EdgeId> conflicts(EdgeId e) const { return conflicts_.at(e); }
    std::size_t conflict_degree(EdgeId e) const { return conflicts_.at(e).size(); }
    std::size_t max_conflict_degree() const noexcept;
    bool conflicting(EdgeId a, EdgeId b) const;

private:
    std::vector<std::vector<EdgeId>> conflicts_;
};

/// Graph on the edge ids of g, adjacent iff within distance two (the square
/// of the line graph). Its chromatic number is the strong chromatic index.
Graph conflict_graph(const Graph& g);

struct ColoredConflicts {
    std::size_t count = 0;      ///< colored edges in the conflict set
    std::vector<Color> colors;  ///< distinct colors among them, ascending
};

ColoredConflicts colored_conflicts(const ConflictIndex& index, EdgeId e,
                                   const PartialColoring& partial);

} // namespace sec
