#pragma once

#include "sec/coloring.hpp"
#include "sec/discharging.hpp"
#include "sec/graph.hpp"
#include "sec/rational.hpp"

#include <cstdint>
#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

namespace sec::test {

// Builders -----------------------------------------------------------------

Graph make_graph(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> edges);
Graph make_graph(std::size_t n, const std::vector<VertexPair>& edges);
Graph path_graph(std::size_t n);  ///< n vertices, n-1 edges
Graph cycle_graph(std::size_t n);
/// Edges as (min, max) endpoint pairs, sorted; independent of edge numbering.
std::vector<VertexPair> sorted_pairs(const Graph& g);
Graph star_graph(std::size_t leaves); ///< center 0
Graph complete_graph(std::size_t n);
Graph petersen_graph();
Graph mcgee_graph(); ///< cubic, girth 7, 24 vertices
Graph cube_graph();  ///< Q3, vertex i adjacent to i ^ (1 << b)
Graph subdivide_all(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);

/// A vertex `center` of degree anchors + threads: one edge to vertex 0 of each
/// of `anchors` McGee copies, and `threads` paths center-x-y-z whose end z is a
/// McGee vertex at distance >= 3 from its copy's anchor (copies used round
/// robin). Girth stays >= 7; the graph is not planar.
struct Gadget {
    Graph graph;
    VertexId center = 0;
};
Gadget big_vertex_gadget(std::size_t anchors, std::size_t threads);

/// Rotation from a straight-line drawing (counter-clockwise angle order).
std::vector<std::vector<VertexId>> rotation_from_drawing(
    const Graph& g, const std::vector<std::pair<double, double>>& xy);
/// Q3 drawn as two nested squares.
Embedding cube_embedding();
Embedding cycle_embedding(std::size_t n);

/// Uniform random simple graph G(n, p) from a fixed engine.
Graph random_graph(std::mt19937_64& rng, std::size_t n, double p);
/// Random simple graph with max degree <= cap and roughly `edges` edges.
Graph random_bounded_graph(std::mt19937_64& rng, std::size_t n, std::size_t edges,
                           std::uint32_t cap);
/// Explicit per-edge lists (avoids brace ambiguity with ColorLists' copy constructor).
ColorLists lists_of(std::vector<std::vector<Color>> lists);
/// Every list has `size` distinct colors drawn from 0..pool-1.
ColorLists random_lists(std::mt19937_64& rng, std::size_t edges, std::size_t size,
                        std::uint32_t pool);

// Independent oracles -------------------------------------------------------

/// max over nonempty vertex subsets S of 2|E(S)|/|S|, by enumeration.
ExactRational brute_force_mad(const Graph& g);
/// Chromatic number by dynamic programming over vertex subsets (n <= 16).
std::uint32_t chromatic_number_by_subsets(const Graph& h);
/// Two distinct edges conflict iff they share an endpoint or an edge joins them.
bool edges_conflict_naive(const Graph& g, EdgeId a, EdgeId b);
/// Pairwise check of all colored edge pairs.
bool is_strong_naive(const Graph& g, const PartialColoring& c);
/// Shortest cycle by enumerating simple paths (small graphs only).
std::uint32_t girth_by_enumeration(const Graph& g);

} // namespace sec::test
