#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace sec::test {

Graph make_graph(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> edges) {
    return make_graph(n, std::vector<VertexPair>(edges));
}

Graph make_graph(std::size_t n, const std::vector<VertexPair>& edges) {
    return Graph::from_dense(n, edges);
}

Graph path_graph(std::size_t n) {
    std::vector<VertexPair> e;
    for (VertexId i = 0; i + 1 < n; ++i) {
        e.emplace_back(i, i + 1);
    }
    return make_graph(n, e);
}

Graph cycle_graph(std::size_t n) {
    std::vector<VertexPair> e;
    for (VertexId i = 0; i < n; ++i) {
        e.emplace_back(i, static_cast<VertexId>((i + 1) % n));
    }
    return make_graph(n, e);
}

std::vector<VertexPair> sorted_pairs(const Graph& g) {
    std::vector<VertexPair> out;
    for (const auto& e : g.edges()) {
        out.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Graph star_graph(std::size_t leaves) {
    std::vector<VertexPair> e;
    for (VertexId i = 1; i <= leaves; ++i) {
        e.emplace_back(0, i);
    }
    return make_graph(leaves + 1, e);
}

Graph complete_graph(std::size_t n) {
    std::vector<VertexPair> e;
    for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j) {
            e.emplace_back(i, j);
        }
    }
    return make_graph(n, e);
}

Graph petersen_graph() {
    std::vector<VertexPair> e;
    for (VertexId i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return make_graph(10, e);
}

Graph mcgee_graph() {
    const int lcf[] = {12, 7, -7};
    std::vector<VertexPair> e;
    for (int i = 0; i < 24; ++i) {
        e.emplace_back(i, (i + 1) % 24);
        e.emplace_back(i, ((i + lcf[i % 3]) % 24 + 24) % 24);
    }
    return make_graph(24, e);
}

Graph cube_graph() {
    std::vector<VertexPair> e;
    for (VertexId v = 0; v < 8; ++v) {
        for (VertexId b = 0; b < 3; ++b) {
            const VertexId u = v ^ (1u << b);
            if (v < u) {
                e.emplace_back(v, u);
            }
        }
    }
    return make_graph(8, e);
}

Graph subdivide_all(const Graph& g) {
    std::vector<VertexPair> e;
    auto next = static_cast<VertexId>(g.vertex_count());
    for (const auto& ed : g.edges()) {
        e.emplace_back(ed.u, next);
        e.emplace_back(next, ed.v);
        ++next;
    }
    return make_graph(next, e);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<VertexPair> e;
    for (const auto& ed : a.edges()) {
        e.emplace_back(ed.u, ed.v);
    }
    const auto off = static_cast<VertexId>(a.vertex_count());
    for (const auto& ed : b.edges()) {
        e.emplace_back(ed.u + off, ed.v + off);
    }
    return make_graph(a.vertex_count() + b.vertex_count(), e);
}

Gadget big_vertex_gadget(std::size_t anchors, std::size_t threads) {
    const auto mc = mcgee_graph();
    // McGee vertices at distance >= 3 from vertex 0.
    std::vector<std::uint32_t> dist(24, UINT32_MAX);
    std::vector<VertexId> queue{0};
    dist[0] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        for (auto y : mc.neighbors(queue[i])) {
            if (dist[y] == UINT32_MAX) {
                dist[y] = dist[queue[i]] + 1;
                queue.push_back(y);
            }
        }
    }
    std::vector<VertexId> far;
    for (VertexId x = 0; x < 24; ++x) {
        if (dist[x] >= 3) {
            far.push_back(x);
        }
    }
    std::vector<VertexPair> e;
    for (std::size_t a = 0; a < anchors; ++a) {
        for (const auto& ed : mc.edges()) {
            e.emplace_back(ed.u + 24 * a, ed.v + 24 * a);
        }
    }
    auto next = static_cast<VertexId>(24 * anchors);
    const VertexId center = next++;
    for (std::size_t a = 0; a < anchors; ++a) {
        e.emplace_back(center, static_cast<VertexId>(24 * a));
    }
    std::vector<std::size_t> used(anchors, 0);
    for (std::size_t t = 0; t < threads; ++t) {
        const auto a = t % anchors;
        const auto z = static_cast<VertexId>(24 * a + far[used[a]++]);
        const VertexId x = next++;
        const VertexId y = next++;
        e.emplace_back(center, x);
        e.emplace_back(x, y);
        e.emplace_back(y, z);
    }
    return {make_graph(next, e), center};
}

std::vector<std::vector<VertexId>> rotation_from_drawing(
    const Graph& g, const std::vector<std::pair<double, double>>& xy) {
    std::vector<std::vector<VertexId>> rot(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        rot[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
        const auto angle = [&](VertexId u) {
            return std::atan2(xy[u].second - xy[v].second, xy[u].first - xy[v].first);
        };
        std::sort(rot[v].begin(), rot[v].end(),
                  [&](VertexId a, VertexId b) { return angle(a) < angle(b); });
    }
    return rot;
}

Embedding cube_embedding() {
    const auto g = cube_graph();
    // Outer square 0,1,3,2; inner square 4,5,7,6.
    const std::vector<std::pair<double, double>> xy{{0, 0}, {4, 0}, {0, 4}, {4, 4},
                                                    {1, 1}, {3, 1}, {1, 3}, {3, 3}};
    return trace_faces(g, rotation_from_drawing(g, xy));
}

Embedding cycle_embedding(std::size_t n) {
    const auto g = cycle_graph(n);
    std::vector<std::vector<VertexId>> rot(n);
    for (VertexId v = 0; v < n; ++v) {
        rot[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    }
    return trace_faces(g, rot);
}

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<VertexPair> e;
    for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j) {
            if (coin(rng)) {
                e.emplace_back(i, j);
            }
        }
    }
    return make_graph(n, e);
}

Graph random_bounded_graph(std::mt19937_64& rng, std::size_t n, std::size_t edges,
                           std::uint32_t cap) {
    std::vector<VertexPair> e;
    std::vector<std::uint32_t> deg(n, 0);
    std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
    for (std::size_t tries = 0; e.size() < edges && tries < 40 * edges + 40; ++tries) {
        auto a = pick(rng);
        auto b = pick(rng);
        if (a == b || deg[a] >= cap || deg[b] >= cap) {
            continue;
        }
        if (a > b) {
            std::swap(a, b);
        }
        if (std::find(e.begin(), e.end(), VertexPair{a, b}) != e.end()) {
            continue;
        }
        e.emplace_back(a, b);
        ++deg[a];
        ++deg[b];
    }
    return make_graph(n, e);
}

ColorLists lists_of(std::vector<std::vector<Color>> lists) {
    return ColorLists(std::move(lists));
}

ColorLists random_lists(std::mt19937_64& rng, std::size_t edges, std::size_t size,
                        std::uint32_t pool) {
    std::vector<Color> all(pool);
    std::iota(all.begin(), all.end(), Color{0});
    std::vector<std::vector<Color>> lists;
    for (std::size_t e = 0; e < edges; ++e) {
        std::shuffle(all.begin(), all.end(), rng);
        lists.emplace_back(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(size));
    }
    return ColorLists(std::move(lists));
}

ExactRational brute_force_mad(const Graph& g) {
    const auto n = g.vertex_count();
    ExactRational best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::int64_t edges = 0;
        for (const auto& e : g.edges()) {
            edges += ((mask >> e.u) & 1u) && ((mask >> e.v) & 1u);
        }
        const ExactRational d(2 * edges, std::popcount(mask));
        best = std::max(best, d);
    }
    return best;
}

std::uint32_t chromatic_number_by_subsets(const Graph& h) {
    const auto n = h.vertex_count();
    if (n == 0) {
        return 0;
    }
    const std::uint32_t full = (1u << n) - 1;
    std::vector<std::uint32_t> nbr(n, 0);
    for (const auto& e : h.edges()) {
        nbr[e.u] |= 1u << e.v;
        nbr[e.v] |= 1u << e.u;
    }
    std::vector<bool> independent(full + 1, false);
    independent[0] = true;
    for (std::uint32_t s = 1; s <= full; ++s) {
        const auto low = static_cast<std::uint32_t>(std::countr_zero(s));
        const auto rest = s & (s - 1);
        independent[s] = independent[rest] && (nbr[low] & rest) == 0;
    }
    std::vector<std::uint32_t> chi(full + 1, 0);
    for (std::uint32_t s = 1; s <= full; ++s) {
        const auto low = s & (~s + 1);
        std::uint32_t best = UINT32_MAX;
        // Independent sets containing the lowest vertex of s.
        const auto rest = s ^ low;
        for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
            const auto cls = sub | low;
            if (independent[cls]) {
                best = std::min(best, 1 + chi[s ^ cls]);
            }
            if (sub == 0) {
                break;
            }
        }
        chi[s] = best;
    }
    return chi[full];
}

bool edges_conflict_naive(const Graph& g, EdgeId a, EdgeId b) {
    if (a == b) {
        return false;
    }
    const auto& x = g.edge(a);
    const auto& y = g.edge(b);
    for (auto p : {x.u, x.v}) {
        for (auto q : {y.u, y.v}) {
            if (p == q || g.adjacent(p, q)) {
                return true;
            }
        }
    }
    return false;
}

bool is_strong_naive(const Graph& g, const PartialColoring& c) {
    for (EdgeId a = 0; a < g.edge_count(); ++a) {
        for (EdgeId b = a + 1; b < g.edge_count(); ++b) {
            if (c.get(a) && c.get(a) == c.get(b) && edges_conflict_naive(g, a, b)) {
                return false;
            }
        }
    }
    return true;
}

std::uint32_t girth_by_enumeration(const Graph& g) {
    std::uint32_t best = kInfiniteGirth;
    const auto n = g.vertex_count();
    std::vector<bool> on_path(n, false);
    // Cycles whose smallest vertex is s, walked as simple paths from s.
    std::function<void(VertexId, VertexId, std::uint32_t)> walk = [&](VertexId s, VertexId x,
                                                                      std::uint32_t len) {
        for (auto y : g.neighbors(x)) {
            if (y == s && len >= 3) {
                best = std::min(best, len);
            }
            if (y > s && !on_path[y]) {
                on_path[y] = true;
                walk(s, y, len + 1);
                on_path[y] = false;
            }
        }
    };
    for (VertexId s = 0; s < n; ++s) {
        on_path[s] = true;
        walk(s, s, 1);
        on_path[s] = false;
    }
    return best;
}

} // namespace sec::test
