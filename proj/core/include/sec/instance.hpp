#pragma once

#include "sec/coloring.hpp"
#include "sec/discharging.hpp"
#include "sec/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sec {

/// A graph file: `v N`, `e U V`, `r U : V1 V2 ...`, `l U V : C1 C2 ...`,
/// `p planar`, `p maxdeg N`, `p delta_cap N`; `#` starts a comment.
struct Instance {
    Graph graph;
    std::optional<Embedding> embedding;
    std::optional<ColorLists> lists;
    bool planar = false;
    std::optional<std::uint32_t> declared_max_degree;
    std::optional<std::uint32_t> delta_cap;

    friend bool operator==(const Instance& a, const Instance& b);
};

/// Throws ParseError with a 1-based line and column on malformed text, and
/// InputError for semantic problems (rotation mismatch, list for an unknown
/// edge, declared max degree differing from the actual one).
Instance parse_instance(std::string_view text);

/// Canonical text; parse_instance(serialize_instance(x)) == x.
std::string serialize_instance(const Instance& inst);

/// A lists file: `l U V : C1 C2 ...` lines, one per edge of g.
ColorLists parse_lists(std::string_view text, const Graph& g);

/// A coloring file (`c U V COLOR` lines) read against a graph. Pairs that are
/// not edges of the graph get ids graph.edge_count(), +1, ... and are listed
/// in `unknown` in that order, so verification can report them.
struct ColoringFile {
    PartialColoring coloring;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> unknown;
};

ColoringFile parse_coloring(std::string_view text, const Graph& g);

/// `c U V COLOR` for every colored edge in edge-id order.
std::string serialize_coloring(const Graph& g, const PartialColoring& c);

} // namespace sec
