#include "sec/generate.hpp"

#include "sec/density.hpp"
#include "sec/errors.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <queue>

namespace sec {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) {
        throw InputError("empty random range");
    }
    constexpr auto top = std::numeric_limits<std::uint64_t>::max();
    const auto limit = top - top % bound;
    for (;;) {
        const auto x = engine_();
        if (x < limit) {
            return x % bound;
        }
    }
}

std::string_view family_name(Family f) {
    switch (f) {
    case Family::SparseMad3:
        return "SPARSE_MAD3";
    case Family::PlanarGirth7:
        return "PLANAR_GIRTH7";
    case Family::Cycle:
        return "CYCLE";
    case Family::Tree:
        return "TREE";
    case Family::C5Blowup:
        return "C5_BLOWUP";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view name) {
    std::string key;
    for (char ch : name) {
        key += ch == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    }
    for (auto f : {Family::SparseMad3, Family::PlanarGirth7, Family::Cycle, Family::Tree,
                   Family::C5Blowup}) {
        if (family_name(f) == key) {
            return f;
        }
    }
    return std::nullopt;
}

namespace {

/// Mutable simple graph used while growing instances.
struct Builder {
    std::vector<std::vector<VertexId>> adj; // doubles as the rotation system when planar

    explicit Builder(std::size_t n = 0) : adj(n) {}

    VertexId add_vertex() {
        adj.emplace_back();
        return static_cast<VertexId>(adj.size() - 1);
    }
    std::size_t size() const { return adj.size(); }
    std::size_t degree(VertexId v) const { return adj[v].size(); }
    bool adjacent(VertexId a, VertexId b) const {
        return std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end();
    }
    void add_edge(VertexId a, VertexId b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    void remove_edge(VertexId a, VertexId b) {
        adj[a].erase(std::find(adj[a].begin(), adj[a].end(), b));
        adj[b].erase(std::find(adj[b].begin(), adj[b].end(), a));
    }
    /// Inserts `x` right after `after` in the cyclic order at `at`.
    void insert_after(VertexId at, VertexId after, VertexId x) {
        auto& r = adj[at];
        r.insert(std::find(r.begin(), r.end(), after) + 1, x);
    }

    Graph graph() const {
        std::vector<VertexPair> pairs;
        for (VertexId v = 0; v < adj.size(); ++v) {
            for (auto u : adj[v]) {
                if (v < u) {
                    pairs.emplace_back(v, u);
                }
            }
        }
        std::sort(pairs.begin(), pairs.end());
        return Graph::from_dense(adj.size(), pairs);
    }

    std::vector<std::uint32_t> distances(VertexId s) const {
        std::vector<std::uint32_t> dist(adj.size(), kInfiniteGirth);
        std::queue<VertexId> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            const auto x = q.front();
            q.pop();
            for (auto y : adj[x]) {
                if (dist[y] == kInfiniteGirth) {
                    dist[y] = dist[x] + 1;
                    q.push(y);
                }
            }
        }
        return dist;
    }
};

Instance finish_instance(const Builder& b, bool with_rotation) {
    Instance inst;
    inst.graph = b.graph();
    if (with_rotation) {
        inst.embedding = trace_faces(inst.graph, b.adj);
        inst.planar = true;
    }
    return inst;
}

Instance make_cycle(const GenSpec& s) {
    if (s.vertices < 3) {
        throw InputError("a cycle needs at least 3 vertices");
    }
    const auto n = s.vertices;
    Builder b(n);
    for (VertexId i = 0; i < n; ++i) {
        b.adj[i] = {(i + n - 1) % n, (i + 1) % n};
    }
    auto inst = finish_instance(b, true);
    inst.declared_max_degree = 2;
    return inst;
}

Instance make_tree(const GenSpec& s) {
    if (s.vertices == 0) {
        throw InputError("a tree needs at least 1 vertex");
    }
    if (s.max_degree == 0 && s.vertices > 1) {
        throw InputError("a tree with several vertices needs max degree >= 1");
    }
    if (s.max_degree == 1 && s.vertices > 2) {
        throw InputError("a tree with max degree 1 has at most 2 vertices");
    }
    Rng rng(s.seed);
    Builder b(1);
    while (b.size() < s.vertices) {
        std::vector<VertexId> open;
        for (VertexId v = 0; v < b.size(); ++v) {
            if (b.degree(v) < s.max_degree) {
                open.push_back(v);
            }
        }
        const auto parent = open[rng.below(open.size())];
        b.add_edge(parent, b.add_vertex());
    }
    return finish_instance(b, true);
}

Instance make_blowup(const GenSpec& s) {
    if (s.max_degree < 2 || s.max_degree % 2 != 0) {
        throw InputError("the C5 blowup needs an even max degree >= 2");
    }
    const auto h = s.max_degree / 2;
    std::vector<VertexPair> pairs;
    for (VertexId i = 0; i < 5; ++i) {
        const auto j = (i + 1) % 5;
        for (VertexId a = 0; a < h; ++a) {
            for (VertexId c = 0; c < h; ++c) {
                pairs.emplace_back(i * h + a, j * h + c);
            }
        }
    }
    Instance inst;
    inst.graph = Graph::from_dense(5 * h, pairs);
    inst.declared_max_degree = s.max_degree;
    inst.planar = s.max_degree == 2;
    return inst;
}

/// Deletes random edges inside densest subgraphs until mad < 3.
void thin_to_mad3(Builder& b, Rng& rng) {
    for (;;) {
        const auto g = b.graph();
        if (g.edge_count() == 0 || mad_below(g, ExactRational(3))) {
            return;
        }
        const auto w = mad(g).vertices;
        std::vector<VertexPair> inside;
        for (const auto& e : g.edges()) {
            if (std::binary_search(w.begin(), w.end(), e.u) &&
                std::binary_search(w.begin(), w.end(), e.v)) {
                inside.emplace_back(e.u, e.v);
            }
        }
        const auto [x, y] = inside[rng.below(inside.size())];
        b.remove_edge(x, y);
    }
}

/// The 2-core with isolated vertices dropped, or `b` itself when the core is empty.
Builder two_core(const Builder& b) {
    Builder core = b;
    for (bool changed = true; changed;) {
        changed = false;
        for (VertexId v = 0; v < core.size(); ++v) {
            if (core.degree(v) == 1) {
                core.remove_edge(v, core.adj[v][0]);
                changed = true;
            }
        }
    }
    std::vector<VertexId> id(core.size(), kInfiniteGirth);
    VertexId next = 0;
    for (VertexId v = 0; v < core.size(); ++v) {
        if (core.degree(v) > 0) {
            id[v] = next++;
        }
    }
    if (next == 0) {
        return b;
    }
    Builder out(next);
    for (VertexId v = 0; v < core.size(); ++v) {
        for (auto u : core.adj[v]) {
            out.adj[id[v]].push_back(id[u]);
        }
    }
    return out;
}

std::vector<VertexPair> edge_list(const Builder& b) {
    std::vector<VertexPair> out;
    for (VertexId v = 0; v < b.size(); ++v) {
        for (auto u : b.adj[v]) {
            if (v < u) {
                out.emplace_back(v, u);
            }
        }
    }
    return out;
}

void subdivide(Builder& b, VertexId x, VertexId y) {
    const auto m = b.add_vertex();
    b.remove_edge(x, y);
    b.add_edge(x, m);
    b.add_edge(m, y);
}

void add_random_edges(Builder& b, Rng& rng, std::size_t target, std::uint32_t cap) {
    const auto n = b.size();
    std::size_t edges = 0;
    for (const auto& a : b.adj) {
        edges += a.size();
    }
    edges /= 2;
    for (std::size_t tries = 0; edges < target && tries < 50 * target + 100; ++tries) {
        const auto u = static_cast<VertexId>(rng.below(n));
        const auto v = static_cast<VertexId>(rng.below(n));
        if (u == v || b.degree(u) >= cap || b.degree(v) >= cap || b.adjacent(u, v)) {
            continue;
        }
        b.add_edge(u, v);
        ++edges;
    }
}

Instance make_sparse_mad3(const GenSpec& s) {
    if (s.vertices < 2) {
        throw InputError("SPARSE_MAD3 needs at least 2 vertices");
    }
    if (s.max_degree < 1 || s.max_degree > 4) {
        throw InputError("SPARSE_MAD3 needs a degree cap in 1..4");
    }
    Rng rng(s.seed);
    const auto n = s.vertices;
    Builder b;
    const auto mode = n < 6 ? 0 : rng.below(3);
    if (mode == 0) {
        // Random edges at average degree just under 3.
        b = Builder(n);
        const auto target = rng.between(n / 2 + 1, (29 * n) / 20);
        add_random_edges(b, rng, target, s.max_degree);
    } else if (mode == 1) {
        // A denser base graph with subdivided edges, up to n vertices.
        const auto k = static_cast<std::size_t>(rng.between(3, n / 2));
        b = Builder(k);
        add_random_edges(b, rng, 2 * k, s.max_degree);
        auto base = edge_list(b);
        for (std::size_t i = base.size(); i > 1; --i) {
            std::swap(base[i - 1], base[rng.below(i)]);
        }
        for (const auto& [x, y] : base) {
            if (b.size() >= n) {
                break;
            }
            subdivide(b, x, y);
        }
    } else {
        // Near-regular base with each edge subdivided with probability 3/5.
        const auto k = std::max<std::size_t>(3, (5 * n) / 11);
        b = Builder(k);
        add_random_edges(b, rng, 2 * k, s.max_degree);
        for (const auto& [x, y] : edge_list(b)) {
            if (rng.chance(3, 5)) {
                subdivide(b, x, y);
            }
        }
    }
    thin_to_mad3(b, rng);
    if (rng.chance(1, 2)) {
        b = two_core(b);
    }
    auto inst = finish_instance(b, false);
    if (!mad_below(inst.graph, ExactRational(3)) || inst.graph.max_degree() > s.max_degree) {
        throw Error("SPARSE_MAD3 generator broke its own postcondition");
    }
    return inst;
}

/// Grows a cycle by pendant paths hung in corners and by ears of length at
/// least 7 - dist between two corners of one face.
Builder grow_faces(Rng& rng, std::uint32_t n, std::uint32_t cap, bool ears_only) {
    const auto start = static_cast<VertexId>(rng.between(7, std::min<std::uint32_t>(10, n)));
    Builder b(start);
    for (VertexId i = 0; i < start; ++i) {
        b.adj[i] = {(i + start - 1) % start, (i + 1) % start};
    }

    for (std::size_t misses = 0; b.size() < n && misses < 200;) {
        const auto remaining = n - b.size();
        if (!ears_only && rng.chance(2, 5)) {
            // Pendant path hung in a random corner.
            std::vector<VertexId> open;
            for (VertexId v = 0; v < b.size(); ++v) {
                if (b.degree(v) < cap) {
                    open.push_back(v);
                }
            }
            if (open.empty()) {
                break;
            }
            if (rng.chance(1, 2)) {
                std::size_t top = 0;
                for (auto v : open) {
                    top = std::max(top, b.degree(v));
                }
                std::erase_if(open, [&](VertexId v) { return b.degree(v) != top; });
            }
            auto at = open[rng.below(open.size())];
            const auto len = rng.between(1, std::min<std::size_t>(3, remaining));
            for (std::uint64_t i = 0; i < len; ++i) {
                const auto x = b.add_vertex();
                const auto after = b.adj[at][rng.below(b.adj[at].size())];
                b.insert_after(at, after, x);
                b.adj[x].push_back(at);
                at = x;
            }
            continue;
        }
        // Ear between two corners of one face, long enough to keep girth >= 7.
        const auto emb = trace_faces(b.graph(), b.adj);
        const auto& face = emb.faces[rng.below(emb.faces.size())];
        if (face.degree() < 2) {
            ++misses;
            continue;
        }
        const auto& [p, a] = face.darts[rng.below(face.degree())];
        const auto& [q, c] = face.darts[rng.below(face.degree())];
        if (a == c || b.degree(a) >= cap || b.degree(c) >= cap) {
            ++misses;
            continue;
        }
        const auto d = b.distances(a)[c];
        const auto len = std::max<std::uint32_t>(1, d >= 7 ? 1 : 7 - d) + rng.below(3);
        if (len - 1 > remaining || (len == 1 && b.adjacent(a, c))) {
            ++misses;
            continue;
        }
        std::vector<VertexId> path{a};
        for (std::uint32_t i = 1; i < len; ++i) {
            path.push_back(b.add_vertex());
        }
        path.push_back(c);
        b.insert_after(a, p, path[1]);
        b.insert_after(c, q, path[path.size() - 2]);
        for (std::size_t i = 1; i + 1 < path.size(); ++i) {
            b.adj[path[i]] = {path[i - 1], path[i + 1]};
        }
        misses = 0;
    }
    return b;
}

/// Direction comparator for the rotation at a grid vertex.
bool angle_less(std::pair<long, long> a, std::pair<long, long> b) {
    const auto half = [](std::pair<long, long> v) { return v.second < 0 || (v.second == 0 && v.first < 0); };
    if (half(a) != half(b)) {
        return half(a) < half(b);
    }
    return a.first * b.second - a.second * b.first > 0;
}

/// A triangulated grid with random edges removed, then each edge replaced by
/// a thread of 0-3 new vertices, lengthened until every cycle has length >= 7.
Builder grid_threads(Rng& rng, std::uint32_t n, std::uint32_t cap) {
    const auto rows = static_cast<long>(rng.between(2, 4));
    const auto cols = std::max<long>(2, static_cast<long>(n / 3) / rows);
    const auto id = [cols](long i, long j) { return static_cast<VertexId>(i * cols + j); };
    Builder base(static_cast<std::size_t>(rows * cols));
    const auto maybe_add = [&](VertexId a, VertexId c) {
        if (rng.chance(9, 10)) {
            base.add_edge(a, c);
        }
    };
    for (long i = 0; i < rows; ++i) {
        for (long j = 0; j < cols; ++j) {
            if (j + 1 < cols) maybe_add(id(i, j), id(i, j + 1));
            if (i + 1 < rows) maybe_add(id(i, j), id(i + 1, j));
            if (i + 1 < rows && j + 1 < cols) {
                const auto pick = rng.below(3);
                if (pick == 0) maybe_add(id(i, j), id(i + 1, j + 1));
                if (pick == 1) maybe_add(id(i, j + 1), id(i + 1, j));
            }
        }
    }
    for (VertexId v = 0; v < base.size(); ++v) {
        while (base.degree(v) > cap) {
            base.remove_edge(v, base.adj[v][rng.below(base.degree(v))]);
        }
    }

    // Keep the largest component.
    const auto g = base.graph();
    auto comps = connected_components(g);
    const auto& big = *std::max_element(comps.begin(), comps.end(),
        [](const auto& x, const auto& y) { return x.size() < y.size(); });
    std::vector<bool> keep(base.size(), false);
    for (auto v : big) keep[v] = true;

    auto edges = edge_list(base);
    std::erase_if(edges, [&](const VertexPair& e) { return !keep[e.first]; });
    std::vector<std::uint32_t> extra(edges.size());
    for (auto& x : extra) {
        const auto r = rng.below(5);
        x = r < 2 ? 0 : (r < 4 ? 1 : 2);
    }

    // Lengthen threads on short cycles: weight of an edge is 1 + its new vertices.
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t e = 0; e < edges.size(); ++e) {
            std::vector<std::uint32_t> dist(base.size(), kInfiniteGirth);
            using Item = std::pair<std::uint32_t, VertexId>;
            std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
            dist[edges[e].first] = 0;
            pq.push({0, edges[e].first});
            while (!pq.empty()) {
                const auto [d, x] = pq.top();
                pq.pop();
                if (d > dist[x]) continue;
                for (std::size_t f = 0; f < edges.size(); ++f) {
                    if (f == e || (edges[f].first != x && edges[f].second != x)) continue;
                    const auto y = edges[f].first == x ? edges[f].second : edges[f].first;
                    const auto nd = d + 1 + extra[f];
                    if (nd < dist[y]) {
                        dist[y] = nd;
                        pq.push({nd, y});
                    }
                }
            }
            const auto other = dist[edges[e].second];
            if (other != kInfiniteGirth && other + 1 + extra[e] < 7) {
                ++extra[e];
                changed = true;
            }
        }
    }

    // Materialize: rotation at grid vertices follows the geometric angle order.
    std::vector<VertexId> new_id(base.size(), kInfiniteGirth);
    Builder out;
    for (VertexId v = 0; v < base.size(); ++v) {
        if (keep[v]) new_id[v] = out.add_vertex();
    }
    std::vector<std::vector<std::pair<VertexId, VertexId>>> first_hop(base.size()); // (far end, neighbor)
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto [a, c] = edges[e];
        std::vector<VertexId> path{new_id[a]};
        for (std::uint32_t k = 0; k < extra[e]; ++k) path.push_back(out.add_vertex());
        path.push_back(new_id[c]);
        for (std::size_t k = 1; k + 1 < path.size(); ++k) {
            out.adj[path[k]] = {path[k - 1], path[k + 1]};
        }
        first_hop[a].emplace_back(c, path[1]);
        first_hop[c].emplace_back(a, path[path.size() - 2]);
    }
    for (VertexId v = 0; v < base.size(); ++v) {
        if (!keep[v]) continue;
        auto& hops = first_hop[v];
        const auto dir = [&](VertexId far) {
            return std::pair<long, long>{static_cast<long>(far % cols) - static_cast<long>(v % cols),
                                         static_cast<long>(far / cols) - static_cast<long>(v / cols)};
        };
        std::sort(hops.begin(), hops.end(),
                  [&](const auto& x, const auto& y) { return angle_less(dir(x.first), dir(y.first)); });
        for (const auto& h : hops) out.adj[new_id[v]].push_back(h.second);
    }
    return out;
}

Instance make_planar_girth7(const GenSpec& s) {
    if (s.vertices < 7) {
        throw InputError("PLANAR_GIRTH7 needs at least 7 vertices");
    }
    if (s.delta_cap < 3) {
        throw InputError("PLANAR_GIRTH7 needs delta_cap >= 3");
    }
    Rng rng(s.seed);
    const auto n = s.vertices;
    const auto cap = s.delta_cap;
    const auto mode = rng.below(3);
    Builder b = mode == 2 ? grid_threads(rng, n, cap) : grow_faces(rng, n, cap, mode == 1);
    auto inst = finish_instance(b, true);
    inst.delta_cap = cap;
    if (girth(inst.graph) < 7 || inst.graph.max_degree() > cap) {
        throw Error("PLANAR_GIRTH7 generator broke its own postcondition");
    }
    return inst;
}

} // namespace

Instance generate(const GenSpec& spec) {
    switch (spec.family) {
    case Family::Cycle:
        return make_cycle(spec);
    case Family::Tree:
        return make_tree(spec);
    case Family::C5Blowup:
        return make_blowup(spec);
    case Family::SparseMad3:
        return make_sparse_mad3(spec);
    case Family::PlanarGirth7:
        return make_planar_girth7(spec);
    }
    throw InputError("unknown family");
}

} // namespace sec
