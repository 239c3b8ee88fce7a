#include "sec/reducer.hpp"

#include "sec/conflict.hpp"
#include "sec/errors.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <string>

namespace sec {

std::string_view claim_name(ClaimTag tag) {
    static constexpr std::array<std::string_view, 13> kNames{
        "M1", "M2", "M3", "M4", "M5", "G1", "G2", "G3", "G4", "G5", "G6", "G7", "G8"};
    return kNames.at(static_cast<std::size_t>(tag));
}

std::string_view claim_description(ClaimTag tag) {
    switch (tag) {
    case ClaimTag::M1Pendant: return "1-vertex";
    case ClaimTag::M2TwoWeakNeighbors: return "2-vertex with two 3^- neighbors";
    case ClaimTag::M3TwoFour: return "2-vertex between a 4-vertex with two 2-neighbors and a 3^- vertex";
    case ClaimTag::M4NoFourFour: return "4_4-vertex";
    case ClaimTag::M5FourThree: return "4_3-vertex with a 2-neighbor whose other neighbor is 4_2 or 4_3";
    case ClaimTag::G1Pendant: return "pendant edge with fewer than 3*cap edges within distance two";
    case ClaimTag::G2TwoWeak: return "2-vertex with two 3^- neighbors";
    case ClaimTag::G3AllTwoNeighbors: return "vertex with no 3^+ neighbor";
    case ClaimTag::G4FourTwelve: return "2-vertex between a 2-vertex and a 4-vertex that is not 4_1";
    case ClaimTag::G5NoFourThreeThree: return "2-vertex between a 4_3-vertex and a 3-vertex";
    case ClaimTag::G6NoTwoFourTwo: return "2-vertex at a 3_2-vertex whose other neighbor is 3^-, 4_2 or 4_3";
    case ClaimTag::G7BigOneThreePlus: return "5^+-vertex with exactly one 3^+ neighbor";
    case ClaimTag::G8BigTwoThreePlus: return "5^+-vertex with exactly two 3^+ neighbors";
    }
    return "unknown";
}

namespace {

/// Degree data frozen for one detector pass.
struct Context {
    const Graph& g;
    std::uint32_t cap; // governing maximum degree
    std::vector<std::uint32_t> deg;
    std::vector<std::uint32_t> twos;
    std::vector<std::uint32_t> ones;
    std::vector<std::uint32_t> big; // 3^+ neighbors

    Context(const Graph& graph, std::uint32_t governing) : g(graph), cap(governing) {
        const auto n = g.vertex_count();
        deg.resize(n);
        twos.resize(n);
        ones.resize(n);
        big.resize(n);
        for (VertexId v = 0; v < n; ++v) {
            deg[v] = static_cast<std::uint32_t>(g.degree(v));
        }
        for (VertexId v = 0; v < n; ++v) {
            for (VertexId u : g.neighbors(v)) {
                twos[v] += deg[u] == 2;
                ones[v] += deg[u] == 1;
                big[v] += deg[u] >= 3;
            }
        }
    }

    EdgeId edge(VertexId a, VertexId b) const { return *g.find_edge(a, b); }

    /// Neighbor of a 2-vertex other than `from`.
    VertexId across(VertexId two_vertex, VertexId from) const {
        const auto nbrs = g.neighbors(two_vertex);
        return nbrs[0] == from ? nbrs[1] : nbrs[0];
    }

    std::vector<VertexId> sorted_neighbors(VertexId v) const {
        std::vector<VertexId> out(g.neighbors(v).begin(), g.neighbors(v).end());
        std::sort(out.begin(), out.end());
        return out;
    }

    /// The two neighbors of a 2-vertex, smaller id first.
    std::array<VertexId, 2> ends(VertexId v) const {
        const auto nbrs = g.neighbors(v);
        return {std::min(nbrs[0], nbrs[1]), std::max(nbrs[0], nbrs[1])};
    }
};

using Matcher = std::optional<ReductionPlan> (*)(const Context&, VertexId);

ReductionPlan make_plan(ClaimTag tag, VertexId del, std::vector<EdgeId> erase,
                        std::vector<ExtensionStep> steps, std::vector<VertexId> involved) {
    return ReductionPlan{tag, del, std::move(erase), std::move(steps), std::move(involved)};
}

// ---------------------------------------------------------------------------
// mad < 3, Δ <= 4. `cap` is the Δ behind the 3Δ+1 budget.

std::optional<ReductionPlan> match_m1(const Context& c, VertexId v) {
    if (c.deg[v] != 1) {
        return std::nullopt;
    }
    const auto u = c.g.neighbors(v)[0];
    // uv sees at most (Δ-1) + (Δ-1)^2 colored edges, which is <= 3Δ for Δ <= 4.
    const auto bound = std::max(3 * c.cap, c.cap * (c.cap - 1));
    return make_plan(ClaimTag::M1Pendant, v, {}, {{c.edge(u, v), bound}}, {v, u});
}

std::optional<ReductionPlan> match_m2(const Context& c, VertexId v) {
    if (c.deg[v] != 2) {
        return std::nullopt;
    }
    const auto [a, b] = c.ends(v);
    if (c.deg[a] > 3 || c.deg[b] > 3) {
        return std::nullopt;
    }
    // Each end has at most r-1 other edges and r-1 further neighbors, r = min(3, Δ).
    const auto r = std::min<std::uint32_t>(3, c.cap);
    const auto sigma = (r - 1) * (c.cap + 1);
    return make_plan(ClaimTag::M2TwoWeakNeighbors, v, {},
                     {{c.edge(a, v), sigma}, {c.edge(b, v), sigma + 1}}, {v, a, b});
}

std::optional<ReductionPlan> match_m3(const Context& c, VertexId v1) {
    if (c.deg[v1] != 2) {
        return std::nullopt;
    }
    const auto [a, b] = c.ends(v1);
    for (const auto& [v, w1] : {std::pair{a, b}, std::pair{b, a}}) {
        if (c.deg[v] == 4 && c.twos[v] >= 2 && c.deg[w1] <= 3) {
            const auto D = c.cap;
            return make_plan(ClaimTag::M3TwoFour, v1, {},
                             {{c.edge(v, v1), 2 * D + 4}, {c.edge(v1, w1), 2 * D + 4}},
                             {v1, v, w1});
        }
    }
    return std::nullopt;
}

std::optional<ReductionPlan> match_m4(const Context& c, VertexId v) {
    if (c.deg[v] != 4 || c.twos[v] != 4) {
        return std::nullopt;
    }
    std::vector<ExtensionStep> steps;
    std::vector<VertexId> involved{v};
    std::uint32_t bound = c.cap + 3;
    for (VertexId x : c.sorted_neighbors(v)) {
        steps.push_back({c.edge(v, x), bound++});
        involved.push_back(x);
    }
    return make_plan(ClaimTag::M4NoFourFour, v, {}, std::move(steps), std::move(involved));
}

std::optional<ReductionPlan> match_m5(const Context& c, VertexId v) {
    if (c.deg[v] != 4 || c.twos[v] != 3) {
        return std::nullopt;
    }
    std::vector<VertexId> two_nbrs;
    for (VertexId x : c.sorted_neighbors(v)) {
        if (c.deg[x] == 2) {
            two_nbrs.push_back(x);
        }
    }
    for (VertexId v1 : two_nbrs) {
        const auto w1 = c.across(v1, v);
        if (c.deg[w1] != 4 || (c.twos[w1] != 2 && c.twos[w1] != 3)) {
            continue;
        }
        const auto v2 = two_nbrs[0] == v1 ? two_nbrs[1] : two_nbrs[0];
        const auto D = c.cap;
        const auto vv2 = c.edge(v, v2);
        return make_plan(ClaimTag::M5FourThree, v1, {vv2},
                         {{c.edge(v1, w1), 2 * D + 4}, {c.edge(v, v1), D + 7}, {vv2, 2 * D + 4}},
                         {v, v1, w1, v2});
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Planar, girth >= 7, Δ <= cap with cap >= 4. Budget 3*cap.

std::optional<ReductionPlan> match_g1(const Context& c, VertexId v) {
    if (c.deg[v] != 1) {
        return std::nullopt;
    }
    const auto u = c.g.neighbors(v)[0];
    const auto uv = c.edge(u, v);
    if (edges_within_distance_two(c.g, uv).size() >= 3 * c.cap) {
        return std::nullopt;
    }
    return make_plan(ClaimTag::G1Pendant, v, {}, {{uv, 3 * c.cap - 1}}, {v, u});
}

std::optional<ReductionPlan> match_g2(const Context& c, VertexId v) {
    if (c.deg[v] != 2) {
        return std::nullopt;
    }
    const auto [a, b] = c.ends(v);
    if (c.deg[a] > 3 || c.deg[b] > 3) {
        return std::nullopt;
    }
    const auto D = c.cap;
    return make_plan(ClaimTag::G2TwoWeak, v, {},
                     {{c.edge(a, v), 2 * D + 2}, {c.edge(b, v), 2 * D + 3}}, {v, a, b});
}

std::optional<ReductionPlan> match_g3(const Context& c, VertexId v) {
    if (c.deg[v] == 0 || c.big[v] != 0) {
        return std::nullopt;
    }
    const auto tau = c.deg[v];
    std::vector<ExtensionStep> steps;
    std::vector<VertexId> involved{v};
    std::uint32_t bound = c.cap + tau - 1;
    for (VertexId x : c.sorted_neighbors(v)) {
        steps.push_back({c.edge(v, x), bound++});
        involved.push_back(x);
    }
    return make_plan(ClaimTag::G3AllTwoNeighbors, v, {}, std::move(steps), std::move(involved));
}

std::optional<ReductionPlan> match_g4(const Context& c, VertexId v) {
    if (c.deg[v] != 2) {
        return std::nullopt;
    }
    const auto [a, b] = c.ends(v);
    for (const auto& [u, w] : {std::pair{a, b}, std::pair{b, a}}) {
        if (c.deg[u] == 4 && c.twos[u] >= 2 && c.deg[w] == 2) {
            const auto D = c.cap;
            return make_plan(ClaimTag::G4FourTwelve, v, {},
                             {{c.edge(u, v), 2 * D + 3}, {c.edge(w, v), D + 4}}, {v, u, w});
        }
    }
    return std::nullopt;
}

std::optional<ReductionPlan> match_g5(const Context& c, VertexId v) {
    if (c.deg[v] != 2) {
        return std::nullopt;
    }
    const auto [a, b] = c.ends(v);
    for (const auto& [u, w] : {std::pair{a, b}, std::pair{b, a}}) {
        if (c.deg[u] == 4 && c.twos[u] == 3 && c.deg[w] == 3) {
            const auto D = c.cap;
            return make_plan(ClaimTag::G5NoFourThreeThree, v, {},
                             {{c.edge(w, v), 2 * D + 3}, {c.edge(u, v), D + 7}}, {v, u, w});
        }
    }
    return std::nullopt;
}

std::optional<ReductionPlan> match_g6(const Context& c, VertexId v1) {
    if (c.deg[v1] != 2) {
        return std::nullopt;
    }
    const auto [a, b] = c.ends(v1);
    for (const auto& [v, w1] : {std::pair{a, b}, std::pair{b, a}}) {
        if (c.deg[v] != 3 || c.twos[v] != 2) {
            continue;
        }
        const bool weak_end =
            c.deg[w1] <= 3 || (c.deg[w1] == 4 && (c.twos[w1] == 2 || c.twos[w1] == 3));
        if (!weak_end) {
            continue;
        }
        VertexId v2 = v1;
        for (VertexId x : c.sorted_neighbors(v)) {
            if (x != v1 && c.deg[x] == 2) {
                v2 = x;
                break;
            }
        }
        const auto D = c.cap;
        const auto vv2 = c.edge(v, v2);
        return make_plan(ClaimTag::G6NoTwoFourTwo, v1, {vv2},
                         {{c.edge(v1, w1), 2 * D + 3}, {c.edge(v, v1), D + 5}, {vv2, 2 * D + 2}},
                         {v1, v, w1, v2});
    }
    return std::nullopt;
}

std::optional<ReductionPlan> match_g7(const Context& c, VertexId v) {
    const auto k = c.deg[v];
    if (k < 5 || c.big[v] != 1) {
        return std::nullopt;
    }
    const auto D = c.cap;
    const auto nbrs = c.sorted_neighbors(v);
    if (c.ones[v] > 0) {
        const auto u = *std::find_if(nbrs.begin(), nbrs.end(),
                                     [&](VertexId x) { return c.deg[x] == 1; });
        return make_plan(ClaimTag::G7BigOneThreePlus, u, {}, {{c.edge(u, v), D + 2 * (k - 2)}},
                         {v, u});
    }
    for (VertexId vi : nbrs) {
        if (c.deg[vi] != 2) {
            continue;
        }
        const auto wi = c.across(vi, v);
        if (c.deg[wi] <= 3) {
            return make_plan(ClaimTag::G7BigOneThreePlus, vi, {},
                             {{c.edge(vi, wi), 2 * D + k - 1}, {c.edge(v, vi), D + 2 * k - 1}},
                             {v, vi, wi});
        }
    }
    return std::nullopt;
}

std::optional<ReductionPlan> match_g8(const Context& c, VertexId v) {
    const auto k = c.deg[v];
    if (k < 5 || c.big[v] != 2) {
        return std::nullopt;
    }
    const auto D = c.cap;
    const auto ell = c.ones[v];
    const auto nbrs = c.sorted_neighbors(v);
    if (ell >= 1 && ell + 4 >= k) {
        // ell in {k-2, k-3, k-4}; ell <= k-2 holds since two neighbors are 3^+.
        const auto u = *std::find_if(nbrs.begin(), nbrs.end(),
                                     [&](VertexId x) { return c.deg[x] == 1; });
        const auto bound = 2 * D + (ell - 1) + 2 * (k - 2 - ell);
        return make_plan(ClaimTag::G8BigTwoThreePlus, u, {}, {{c.edge(u, v), bound}}, {v, u});
    }
    if (ell + 5 != k) {
        return std::nullopt;
    }
    std::vector<VertexId> twos;
    std::vector<VertexId> far;
    for (VertexId x : nbrs) {
        if (c.deg[x] == 2) {
            twos.push_back(x);
            far.push_back(c.across(x, v));
        }
    }
    for (VertexId w : far) {
        const bool weak = c.deg[w] == 2 || (c.deg[w] == 3 && c.twos[w] == 2);
        if (!weak) {
            return std::nullopt;
        }
    }
    const auto e2 = c.edge(twos[1], far[1]);
    const auto e3 = c.edge(twos[2], far[2]);
    return make_plan(ClaimTag::G8BigTwoThreePlus, twos[0], {e2, e3},
                     {{c.edge(v, twos[0]), 2 * D + k - 1},
                      {c.edge(twos[0], far[0]), D + k + 2},
                      {e2, D + k + 2},
                      {e3, D + k + 2}},
                     {v, twos[0], twos[1], twos[2], far[0], far[1], far[2]});
}

constexpr std::array<Matcher, 5> kMadMatchers{match_m1, match_m2, match_m3, match_m4, match_m5};
constexpr std::array<Matcher, 8> kGirthMatchers{match_g1, match_g2, match_g3, match_g4,
                                                match_g5, match_g6, match_g7, match_g8};

template <std::size_t N>
std::optional<ReductionPlan> first_match(const Context& c, const std::array<Matcher, N>& ms) {
    for (auto m : ms) {
        for (VertexId v = 0; v < c.g.vertex_count(); ++v) {
            if (auto plan = m(c, v)) {
                return plan;
            }
        }
    }
    return std::nullopt;
}

template <std::size_t N>
std::vector<ReductionPlan> every_match(const Context& c, const std::array<Matcher, N>& ms) {
    std::vector<ReductionPlan> out;
    for (auto m : ms) {
        for (VertexId v = 0; v < c.g.vertex_count(); ++v) {
            if (auto plan = m(c, v)) {
                out.push_back(std::move(*plan));
            }
        }
    }
    return out;
}

std::uint32_t mad_governing(const Graph& g, std::optional<std::uint32_t> governing) {
    const auto actual = static_cast<std::uint32_t>(g.max_degree());
    const auto d = governing.value_or(actual);
    if (d < actual) {
        throw HypothesisError("max degree", "governing max degree " + std::to_string(d) +
                                                " is below the graph's " + std::to_string(actual));
    }
    return d;
}

void check_girth_cap(const Graph& g, std::uint32_t cap) {
    if (cap < 4) {
        throw HypothesisError("delta_cap >= 4", "delta_cap is " + std::to_string(cap));
    }
    if (g.max_degree() > cap) {
        throw HypothesisError("max degree <= delta_cap",
                              "max degree " + std::to_string(g.max_degree()) +
                                  " exceeds delta_cap " + std::to_string(cap));
    }
}

} // namespace

std::optional<ReductionPlan> find_reducible_mad(const Graph& g,
                                                std::optional<std::uint32_t> governing) {
    const Context c(g, mad_governing(g, governing));
    return first_match(c, kMadMatchers);
}

std::optional<ReductionPlan> find_reducible_girth7(const Graph& g, std::uint32_t delta_cap) {
    check_girth_cap(g, delta_cap);
    const Context c(g, delta_cap);
    return first_match(c, kGirthMatchers);
}

std::vector<ReductionPlan> all_reducible_mad(const Graph& g,
                                             std::optional<std::uint32_t> governing) {
    const Context c(g, mad_governing(g, governing));
    return every_match(c, kMadMatchers);
}

std::vector<ReductionPlan> all_reducible_girth7(const Graph& g, std::uint32_t delta_cap) {
    check_girth_cap(g, delta_cap);
    const Context c(g, delta_cap);
    return every_match(c, kGirthMatchers);
}

} // namespace sec
