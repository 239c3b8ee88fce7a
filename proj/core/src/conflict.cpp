#include "sec/conflict.hpp"

#include "sec/errors.hpp"

#include <algorithm>
#include <string>

namespace sec {

std::vector<EdgeId> edges_within_distance_two(const Graph& g, EdgeId e) {
    if (e >= g.edge_count()) {
        throw InputError("unknown edge id " + std::to_string(e));
    }
    const auto [u, v] = g.edge(e);
    std::vector<EdgeId> out;
    auto collect = [&](VertexId x) {
        for (EdgeId f : g.incident_edges(x)) {
            out.push_back(f);
        }
    };
    // N(u) contains v and N(v) contains u, so edges at u and v are included.
    for (VertexId x : g.neighbors(u)) {
        collect(x);
    }
    for (VertexId x : g.neighbors(v)) {
        collect(x);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    out.erase(std::remove(out.begin(), out.end(), e), out.end());
    return out;
}

ConflictIndex::ConflictIndex(const Graph& g) {
    conflicts_.reserve(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        conflicts_.push_back(edges_within_distance_two(g, e));
    }
}

std::size_t ConflictIndex::max_conflict_degree() const noexcept {
    std::size_t best = 0;
    for (const auto& c : conflicts_) {
        best = std::max(best, c.size());
    }
    return best;
}

bool ConflictIndex::conflicting(EdgeId a, EdgeId b) const {
    const auto& c = conflicts_.at(a);
    return std::binary_search(c.begin(), c.end(), b);
}

Graph conflict_graph(const Graph& g) {
    const ConflictIndex index(g);
    std::vector<VertexPair> pairs;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        for (EdgeId f : index.conflicts(e)) {
            if (e < f) {
                pairs.emplace_back(e, f);
            }
        }
    }
    return Graph::from_dense(g.edge_count(), pairs);
}

ColoredConflicts colored_conflicts(const ConflictIndex& index, EdgeId e,
                                   const PartialColoring& partial) {
    ColoredConflicts out;
    if (e >= index.edge_count()) {
        return out;
    }
    for (EdgeId f : index.conflicts(e)) {
        if (const auto c = partial.get(f)) {
            ++out.count;
            out.colors.push_back(*c);
        }
    }
    std::sort(out.colors.begin(), out.colors.end());
    out.colors.erase(std::unique(out.colors.begin(), out.colors.end()), out.colors.end());
    return out;
}

} // namespace sec
