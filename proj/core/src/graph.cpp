#include "sec/graph.hpp"

#include "sec/errors.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <string>

namespace sec {

Graph Graph::from_dense(std::size_t vertex_count, std::span<const VertexPair> pairs) {
    Graph g;
    g.adjacency_.resize(vertex_count);
    g.incidence_.resize(vertex_count);
    g.labels_.resize(vertex_count);
    for (std::size_t v = 0; v < vertex_count; ++v) {
        g.labels_[v] = v;
    }
    for (const auto& [a, b] : pairs) {
        if (a == b) {
            throw InputError("self-loop at vertex " + std::to_string(a) + " in pair (" +
                             std::to_string(a) + "," + std::to_string(b) + ")");
        }
        if (a >= vertex_count || b >= vertex_count) {
            throw InputError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                             ") references a vertex outside 0.." +
                             std::to_string(vertex_count == 0 ? 0 : vertex_count - 1));
        }
        if (g.find_edge(a, b)) {
            continue;
        }
        const auto id = static_cast<EdgeId>(g.edges_.size());
        g.edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
        g.adjacency_[a].push_back(b);
        g.adjacency_[b].push_back(a);
        g.incidence_[a].push_back(id);
        g.incidence_[b].push_back(id);
    }
    return g;
}

std::optional<EdgeId> Graph::find_edge(VertexId a, VertexId b) const {
    if (a >= adjacency_.size() || b >= adjacency_.size()) {
        return std::nullopt;
    }
    // Scan the shorter list.
    if (adjacency_[a].size() > adjacency_[b].size()) {
        std::swap(a, b);
    }
    const auto& nbrs = adjacency_[a];
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
        if (nbrs[i] == b) {
            return incidence_[a][i];
        }
    }
    return std::nullopt;
}

std::size_t Graph::max_degree() const noexcept {
    std::size_t best = 0;
    for (const auto& nbrs : adjacency_) {
        best = std::max(best, nbrs.size());
    }
    return best;
}

std::size_t Graph::min_degree() const noexcept {
    if (adjacency_.empty()) {
        return 0;
    }
    std::size_t best = adjacency_.front().size();
    for (const auto& nbrs : adjacency_) {
        best = std::min(best, nbrs.size());
    }
    return best;
}

Subgraph Graph::induced(std::span<const VertexId> keep) const {
    constexpr auto kDropped = std::numeric_limits<VertexId>::max();
    std::vector<VertexId> new_id(vertex_count(), kDropped);
    Subgraph sub;
    sub.vertex_origin.assign(keep.begin(), keep.end());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] >= vertex_count() || new_id[keep[i]] != kDropped) {
            throw InputError("induced subgraph: invalid or repeated vertex " +
                             std::to_string(keep[i]));
        }
        new_id[keep[i]] = static_cast<VertexId>(i);
    }
    std::vector<VertexPair> pairs;
    for (EdgeId e = 0; e < edges_.size(); ++e) {
        const auto [u, v] = edges_[e];
        if (new_id[u] != kDropped && new_id[v] != kDropped) {
            pairs.emplace_back(new_id[u], new_id[v]);
            sub.edge_origin.push_back(e);
        }
    }
    sub.graph = from_dense(keep.size(), pairs);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        sub.graph.labels_[i] = labels_[keep[i]];
    }
    return sub;
}

Subgraph Graph::without_vertex(VertexId v) const {
    if (v >= vertex_count()) {
        throw InputError("unknown vertex " + std::to_string(v));
    }
    std::vector<VertexId> keep;
    keep.reserve(vertex_count() - 1);
    for (VertexId x = 0; x < vertex_count(); ++x) {
        if (x != v) {
            keep.push_back(x);
        }
    }
    return induced(keep);
}

Graph build_graph(std::span<const std::pair<std::uint64_t, std::uint64_t>> pairs,
                  std::span<const std::uint64_t> extra_vertices) {
    std::map<std::uint64_t, VertexId> dense;
    for (const auto& [a, b] : pairs) {
        if (a == b) {
            throw InputError("self-loop at vertex " + std::to_string(a) + " in pair (" +
                             std::to_string(a) + "," + std::to_string(b) + ")");
        }
        dense.emplace(a, 0);
        dense.emplace(b, 0);
    }
    for (auto x : extra_vertices) {
        dense.emplace(x, 0);
    }
    std::vector<std::uint64_t> labels;
    labels.reserve(dense.size());
    for (auto& [label, id] : dense) {
        id = static_cast<VertexId>(labels.size());
        labels.push_back(label);
    }
    std::vector<VertexPair> dense_pairs;
    dense_pairs.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
        dense_pairs.emplace_back(dense.at(a), dense.at(b));
    }
    Graph g = Graph::from_dense(labels.size(), dense_pairs);
    g.labels_ = std::move(labels);
    return g;
}

DegreeClass degree_class(const Graph& g, VertexId v,
                         std::optional<std::uint32_t> reference_max_degree) {
    if (v >= g.vertex_count()) {
        throw InputError("unknown vertex " + std::to_string(v));
    }
    const auto top = reference_max_degree.value_or(static_cast<std::uint32_t>(g.max_degree()));
    DegreeClass c;
    c.degree = static_cast<std::uint32_t>(g.degree(v));
    for (VertexId u : g.neighbors(v)) {
        const auto d = g.degree(u);
        c.one_neighbors += d == 1;
        c.two_neighbors += d == 2;
        c.three_plus_neighbors += d >= 3;
        c.four_plus_neighbors += d >= 4;
        c.five_plus_neighbors += d >= 5;
        c.max_degree_neighbors += d == top;
    }
    return c;
}

std::uint32_t girth(const Graph& g) {
    // BFS from every root; a non-tree edge (x,y) closes a cycle of length at
    // most dist[x] + dist[y] + 1, and the minimum over all roots is exact.
    const auto n = g.vertex_count();
    std::uint32_t best = kInfiniteGirth;
    std::vector<std::uint32_t> dist(n);
    std::vector<EdgeId> via(n);
    std::queue<VertexId> queue;
    for (VertexId root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), kInfiniteGirth);
        dist[root] = 0;
        via[root] = std::numeric_limits<EdgeId>::max();
        queue.push(root);
        while (!queue.empty()) {
            const auto x = queue.front();
            queue.pop();
            if (2 * dist[x] >= best) {
                continue;
            }
            const auto nbrs = g.neighbors(x);
            const auto inc = g.incident_edges(x);
            for (std::size_t i = 0; i < nbrs.size(); ++i) {
                const auto y = nbrs[i];
                if (inc[i] == via[x]) {
                    continue;
                }
                if (dist[y] == kInfiniteGirth) {
                    dist[y] = dist[x] + 1;
                    via[y] = inc[i];
                    queue.push(y);
                } else {
                    best = std::min(best, dist[x] + dist[y] + 1);
                }
            }
        }
        std::queue<VertexId>().swap(queue);
    }
    return best;
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
    const auto n = g.vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<VertexId>> out;
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < n; ++s) {
        if (seen[s]) {
            continue;
        }
        auto& comp = out.emplace_back();
        seen[s] = true;
        stack.push_back(s);
        while (!stack.empty()) {
            const auto x = stack.back();
            stack.pop_back();
            comp.push_back(x);
            for (VertexId y : g.neighbors(x)) {
                if (!seen[y]) {
                    seen[y] = true;
                    stack.push_back(y);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
    }
    return out;
}

bool is_connected(const Graph& g) {
    return connected_components(g).size() <= 1;
}

} // namespace sec
