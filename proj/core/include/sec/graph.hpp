#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace sec {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using VertexPair = std::pair<VertexId, VertexId>;

/// Girth of an acyclic graph.
inline constexpr std::uint32_t kInfiniteGirth = std::numeric_limits<std::uint32_t>::max();

/// An undirected edge, stored with u < v.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    VertexId other(VertexId x) const noexcept { return x == u ? v : u; }
    bool has(VertexId x) const noexcept { return x == u || x == v; }

    friend bool operator==(const Edge&, const Edge&) = default;
};

struct Subgraph;

/// Simple undirected graph with dense vertex ids 0..n-1 and edge ids 0..m-1.
///
/// Immutable after construction. Neighbor lists keep insertion order and run
/// parallel to the incident-edge lists, so `neighbors(v)[i]` is the far end of
/// `incident_edges(v)[i]`. Each vertex keeps the label it had on ingestion.
class Graph {
public:
    Graph() = default;

    /// Builds a graph on vertices 0..vertex_count-1. Duplicate pairs collapse
    /// to one edge; edge ids follow first appearance. Throws InputError on a
    /// self-loop or an endpoint >= vertex_count.
    static Graph from_dense(std::size_t vertex_count, std::span<const VertexPair> pairs);

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return adjacency_.empty(); }

    std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
    std::span<const EdgeId> incident_edges(VertexId v) const { return incidence_.at(v); }
    std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }

    const Edge& edge(EdgeId e) const { return edges_.at(e); }
    std::span<const Edge> edges() const noexcept { return edges_; }
    std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;
    bool adjacent(VertexId a, VertexId b) const { return find_edge(a, b).has_value(); }

    std::size_t max_degree() const noexcept;
    std::size_t min_degree() const noexcept;

    /// Original label of a vertex (identity unless built through build_graph).
    std::uint64_t label(VertexId v) const { return labels_.at(v); }
    std::span<const std::uint64_t> labels() const noexcept { return labels_; }

    /// Graph with vertex v removed; survivors are renumbered densely in order.
    Subgraph without_vertex(VertexId v) const;
    /// Subgraph induced by the given vertices (renumbered in the given order).
    Subgraph induced(std::span<const VertexId> keep) const;

    friend bool operator==(const Graph& a, const Graph& b) noexcept {
        return a.edges_ == b.edges_ && a.adjacency_.size() == b.adjacency_.size();
    }

private:
    std::vector<std::vector<VertexId>> adjacency_;
    std::vector<std::vector<EdgeId>> incidence_;
    std::vector<Edge> edges_;
    std::vector<std::uint64_t> labels_;

    friend Graph build_graph(std::span<const std::pair<std::uint64_t, std::uint64_t>>,
                             std::span<const std::uint64_t>);
};

/// A derived graph with maps back to the ids of the graph it came from.
struct Subgraph {
    Graph graph;
    std::vector<VertexId> vertex_origin;
    std::vector<EdgeId> edge_origin;
};

/// Builds a graph from arbitrary non-negative vertex labels. The vertex set is
/// the union of endpoints and `extra_vertices`; dense ids follow sorted label
/// order, so already-dense labels keep their ids.
Graph build_graph(std::span<const std::pair<std::uint64_t, std::uint64_t>> pairs,
                  std::span<const std::uint64_t> extra_vertices = {});

/// k_t classification of a vertex plus neighbor degree histogram.
struct DegreeClass {
    std::uint32_t degree = 0;
    std::uint32_t two_neighbors = 0; ///< the t in "k_t-vertex"
    std::uint32_t one_neighbors = 0;
    std::uint32_t three_plus_neighbors = 0;
    std::uint32_t four_plus_neighbors = 0;
    std::uint32_t five_plus_neighbors = 0;
    std::uint32_t max_degree_neighbors = 0; ///< neighbors whose degree equals the reference max degree

    bool is(std::uint32_t k, std::uint32_t t) const noexcept {
        return degree == k && two_neighbors == t;
    }
};

/// Classifies v. `reference_max_degree` defaults to the graph's max degree.
DegreeClass degree_class(const Graph& g, VertexId v,
                         std::optional<std::uint32_t> reference_max_degree = std::nullopt);

/// Length of a shortest cycle, or kInfiniteGirth for a forest.
std::uint32_t girth(const Graph& g);

/// Connected components with at least one vertex, each sorted ascending.
std::vector<std::vector<VertexId>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

} // namespace sec
