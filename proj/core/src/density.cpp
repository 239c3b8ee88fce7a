#include "sec/density.hpp"

#include "sec/errors.hpp"
#include "max_flow.hpp"

#include <algorithm>

namespace sec {

std::string to_string(const ExactRational& r) {
    if (r.denominator() == 1) {
        return std::to_string(r.numerator());
    }
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

ExactRational subgraph_density(const Graph& g, std::span<const VertexId> vertices) {
    if (vertices.empty()) {
        throw InputError("density of an empty vertex set is undefined");
    }
    std::vector<bool> in(g.vertex_count(), false);
    for (auto v : vertices) {
        in.at(v) = true;
    }
    std::int64_t edges = 0;
    for (const auto& e : g.edges()) {
        edges += in[e.u] && in[e.v];
    }
    return ExactRational(2 * edges, static_cast<std::int64_t>(vertices.size()));
}

std::optional<DensityWitness> density_exceeds(const Graph& g, const ExactRational& threshold) {
    if (threshold < 0) {
        throw InputError("density threshold must be non-negative, got " + to_string(threshold));
    }
    const auto n = g.vertex_count();
    const auto m = g.edge_count();
    if (m == 0) {
        return std::nullopt;
    }
    // 2|E(H)|/|V(H)| > p/q  <=>  2q|E(H)| - p|V(H)| > 0.
    const auto p = threshold.numerator();
    const auto q = threshold.denominator();
    const std::size_t source = 0;
    const std::size_t sink = 1;
    const auto edge_node = [](std::size_t e) { return 2 + e; };
    const auto vertex_node = [m](std::size_t v) { return 2 + m + v; };

    detail::MaxFlow flow(2 + m + n);
    for (std::size_t e = 0; e < m; ++e) {
        flow.add_arc(source, edge_node(e), 2 * q);
        flow.add_arc(edge_node(e), vertex_node(g.edge(e).u), detail::MaxFlow::kUnbounded);
        flow.add_arc(edge_node(e), vertex_node(g.edge(e).v), detail::MaxFlow::kUnbounded);
    }
    for (std::size_t v = 0; v < n; ++v) {
        flow.add_arc(vertex_node(v), sink, p);
    }
    const auto total = flow.run(source, sink);
    if (total >= 2 * q * static_cast<std::int64_t>(m)) {
        return std::nullopt;
    }
    const auto side = flow.source_side(source);
    DensityWitness w;
    for (VertexId v = 0; v < n; ++v) {
        if (side[vertex_node(v)]) {
            w.vertices.push_back(v);
        }
    }
    w.density = subgraph_density(g, w.vertices);
    if (w.density <= threshold) {
        throw TheoremViolation("density flow produced a witness of density " +
                               to_string(w.density) + " not above " + to_string(threshold));
    }
    return w;
}

namespace {

struct Fraction {
    std::int64_t num;
    std::int64_t den;
};

} // namespace

DensityWitness mad(const Graph& g) {
    const auto n = static_cast<std::int64_t>(g.vertex_count());
    if (n == 0) {
        throw InputError("mad of the empty graph is undefined");
    }
    if (g.edge_count() == 0) {
        return DensityWitness{{0}, ExactRational(0)};
    }

    // Stern-Brocot search over fractions with denominator <= n. Invariant:
    // mad > low and mad <= high. Every achievable density has denominator <= n,
    // so once low and high are Farey neighbours beyond n, mad == high.
    Fraction low{0, 1};
    Fraction high{1, 0};
    std::optional<DensityWitness> witness;

    auto exceeds = [&](const Fraction& f) {
        auto w = density_exceeds(g, ExactRational(f.num, f.den));
        if (w) {
            witness = std::move(w);
            return true;
        }
        return false;
    };

    // Largest k with pred(k) true among k in [0, limit], pred monotone and
    // pred(0) assumed true. limit < 0 means unbounded.
    auto largest = [](auto&& pred, std::int64_t limit) {
        std::int64_t good = 0;
        std::int64_t step = 1;
        std::int64_t bad = -1;
        while (true) {
            const auto k = good + step;
            if (limit >= 0 && k > limit) {
                bad = limit + 1;
                break;
            }
            if (!pred(k)) {
                bad = k;
                break;
            }
            good = k;
            step *= 2;
        }
        while (bad - good > 1) {
            const auto mid = good + (bad - good) / 2;
            if (pred(mid)) {
                good = mid;
            } else {
                bad = mid;
            }
        }
        return good;
    };

    while (true) {
        // Raise low toward high.
        const auto raise_limit = high.den == 0 ? -1 : (n - low.den) / high.den;
        const auto k_low = largest(
            [&](std::int64_t k) {
                return exceeds({low.num + k * high.num, low.den + k * high.den});
            },
            raise_limit);
        if (k_low > 0) {
            low = {low.num + k_low * high.num, low.den + k_low * high.den};
        }
        // Lower high toward low.
        const auto lower_limit = (n - high.den) / low.den;
        const auto k_high = largest(
            [&](std::int64_t k) {
                return !exceeds({high.num + k * low.num, high.den + k * low.den});
            },
            lower_limit);
        if (k_high > 0) {
            high = {high.num + k_high * low.num, high.den + k_high * low.den};
        }
        if (k_low == 0 && k_high == 0) {
            break;
        }
    }

    // The witness for `low` has density in (low, high], hence exactly high.
    exceeds(low);
    if (!witness || witness->density != ExactRational(high.num, high.den)) {
        throw TheoremViolation("mad search ended without a witness of density " +
                               std::to_string(high.num) + "/" + std::to_string(high.den));
    }
    return *witness;
}

bool mad_below(const Graph& g, const ExactRational& bound) {
    if (g.vertex_count() == 0) {
        return true;
    }
    return mad(g).density < bound;
}

ExactRational mad_deficit_sum(const Graph& g) {
    return ExactRational(2 * static_cast<std::int64_t>(g.edge_count()) -
                         3 * static_cast<std::int64_t>(g.vertex_count()));
}

} // namespace sec
