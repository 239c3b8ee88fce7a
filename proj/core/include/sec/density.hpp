#pragma once

#include "sec/graph.hpp"
#include "sec/rational.hpp"

#include <optional>
#include <span>
#include <vector>

namespace sec {

/// A vertex subset together with its average degree 2|E(H)|/|V(H)|.
struct DensityWitness {
    std::vector<VertexId> vertices; ///< ascending
    ExactRational density;
};

/// Average degree of the subgraph induced by `vertices` (must be nonempty).
ExactRational subgraph_density(const Graph& g, std::span<const VertexId> vertices);

/// Decides whether some nonempty H has 2|E(H)|/|V(H)| > threshold, via one
/// integer max-flow on the edge/vertex network. Returns the witness (the
/// source side of the minimal min cut) or nullopt when mad(g) <= threshold.
std::optional<DensityWitness> density_exceeds(const Graph& g, const ExactRational& threshold);

/// Maximum average degree with a maximizing vertex set. Throws InputError on
/// the empty graph.
DensityWitness mad(const Graph& g);

/// True iff mad(g) < bound, decided exactly.
bool mad_below(const Graph& g, const ExactRational& bound);

/// Sum over vertices of (deg(v) - 3), i.e. 2|E| - 3|V|.
ExactRational mad_deficit_sum(const Graph& g);

} // namespace sec
