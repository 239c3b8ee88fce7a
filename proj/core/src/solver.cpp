#include "sec/solver.hpp"

#include "sec/density.hpp"
#include "sec/errors.hpp"
#include "sec/oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

namespace sec {

std::vector<Violation> verify_strong(const Graph& g, const PartialColoring& c, bool require_total) {
    std::vector<Violation> out;
    const ConflictIndex index(g);
    const auto m = g.edge_count();
    for (EdgeId e = 0; e < std::max(m, c.slots()); ++e) {
        const auto color = c.get(e);
        if (e >= m) {
            if (color) {
                out.push_back({Violation::Kind::UnknownEdge, e, e});
            }
            continue;
        }
        if (!color) {
            if (require_total) {
                out.push_back({Violation::Kind::Uncolored, e, e});
            }
            continue;
        }
        for (EdgeId f : index.conflicts(e)) {
            if (f > e && c.get(f) == color) {
                out.push_back({Violation::Kind::SameColorWithinDistanceTwo, e, f});
            }
        }
    }
    return out;
}

std::vector<Violation> verify_lists(const PartialColoring& c, const ColorLists& lists) {
    std::vector<Violation> out;
    for (EdgeId e = 0; e < c.slots(); ++e) {
        const auto color = c.get(e);
        if (color && (e >= lists.edge_count() || !lists.contains(e, *color))) {
            out.push_back({Violation::Kind::NotInList, e, e});
        }
    }
    return out;
}

namespace {

std::string edge_text(const Graph& g, EdgeId e) {
    if (e >= g.edge_count()) {
        return "#" + std::to_string(e);
    }
    const auto& ed = g.edge(e);
    return std::to_string(g.label(ed.u)) + "-" + std::to_string(g.label(ed.v));
}

} // namespace

std::string describe(const Graph& g, const Violation& v) {
    switch (v.kind) {
    case Violation::Kind::SameColorWithinDistanceTwo:
        return "edges " + edge_text(g, v.first) + " and " + edge_text(g, v.second) +
               " are within distance two and share a color";
    case Violation::Kind::Uncolored:
        return "edge " + edge_text(g, v.first) + " is uncolored";
    case Violation::Kind::UnknownEdge:
        return "color assigned to unknown edge id " + std::to_string(v.first);
    case Violation::Kind::NotInList:
        return "edge " + edge_text(g, v.first) + " has a color outside its list";
    }
    return "unknown violation";
}

std::string_view path_name(SolvePath p) {
    switch (p) {
    case SolvePath::Mad3:
        return "mad3";
    case SolvePath::Girth7:
        return "girth7";
    case SolvePath::Greedy:
        return "greedy";
    }
    return "?";
}

namespace {

/// Smallest color of `list` absent from the sorted `taken`.
std::optional<Color> smallest_free(std::span<const Color> list, const std::vector<Color>& taken) {
    auto t = taken.begin();
    for (Color c : list) {
        while (t != taken.end() && *t < c) {
            ++t;
        }
        if (t == taken.end() || *t != c) {
            return c;
        }
    }
    return std::nullopt;
}

void finish(const Graph& g, const ColorLists& lists, SolveReport& r) {
    r.colors_used = r.coloring.distinct_colors();
    r.success = r.coloring.colored_count() == g.edge_count() &&
                verify_strong(g, r.coloring, true).empty() &&
                verify_lists(r.coloring, lists).empty();
    if (r.extension_steps == 0) {
        r.tightest_slack = 0;
    }
    for (EdgeId e = 0; e < g.edge_count() && !r.failed_edge; ++e) {
        if (!r.coloring.colored(e)) {
            r.failed_edge = e;
        }
    }
}

} // namespace

SolveReport greedy_color(const Graph& g, const ColorLists& lists, std::span<const EdgeId> order) {
    if (lists.edge_count() < g.edge_count()) {
        throw InputError("color lists cover " + std::to_string(lists.edge_count()) + " of " +
                         std::to_string(g.edge_count()) + " edges");
    }
    const ConflictIndex index(g);
    SolveReport r;
    r.path = SolvePath::Greedy;
    r.coloring = PartialColoring(g.edge_count());
    for (EdgeId e : order) {
        if (e >= g.edge_count()) {
            throw InputError("greedy order names unknown edge " + std::to_string(e));
        }
        if (r.coloring.colored(e)) {
            continue;
        }
        const auto cc = colored_conflicts(index, e, r.coloring);
        if (const auto c = smallest_free(lists.of(e), cc.colors)) {
            r.coloring.assign(e, *c);
        } else if (!r.failed_edge) {
            r.failed_edge = e;
        }
    }
    finish(g, lists, r);
    return r;
}

PartialColoring extend(const Graph& g, const ConflictIndex& index, PartialColoring partial,
                       const ReductionPlan& plan, const ColorLists& lists,
                       std::vector<ExtensionRecord>* records) {
    for (std::size_t i = 0; i < plan.extension_order.size(); ++i) {
        const auto& step = plan.extension_order[i];
        if (step.edge >= g.edge_count()) {
            throw InputError("plan names unknown edge " + std::to_string(step.edge));
        }
        if (partial.colored(step.edge)) {
            throw InputError("extension edge " + edge_text(g, step.edge) + " is already colored");
        }
        const auto cc = colored_conflicts(index, step.edge, partial);
        const auto list = lists.of(step.edge);
        const auto c = smallest_free(list, cc.colors);
        if (!c) {
            throw ExtensionError(i, step.edge, step.conflict_bound,
                                 static_cast<std::uint32_t>(cc.count), list.size());
        }
        partial.assign(step.edge, *c);
        if (records != nullptr) {
            records->push_back({step.edge, step.conflict_bound,
                                static_cast<std::uint32_t>(cc.count), list.size(), *c});
        }
    }
    return partial;
}

namespace {

using Finder = std::function<std::optional<ReductionPlan>(const Graph&)>;
/// Colors a residual graph on which the finder found nothing (local ids).
using NoneHandler =
    std::function<PartialColoring(const Graph&, const ColorLists&, std::size_t depth, SolveReport&)>;

struct Level {
    Graph graph;
    ReductionPlan plan;
    std::vector<EdgeId> to_root;
};

/// Delete / recurse / erase / extend on one connected graph, with an explicit stack.
SolveReport reduce(const Graph& root, const ColorLists& lists, const Finder& find,
                   const NoneHandler& on_none) {
    SolveReport r;
    r.coloring = PartialColoring(root.edge_count());
    r.tightest_slack = std::numeric_limits<std::uint32_t>::max();

    std::vector<Level> stack;
    Graph current = root;
    std::vector<EdgeId> to_root(root.edge_count());
    std::iota(to_root.begin(), to_root.end(), EdgeId{0});

    while (current.edge_count() > 0) {
        auto plan = find(current);
        if (!plan) {
            const auto local = on_none(current, lists.project(to_root), stack.size(), r);
            for (EdgeId e = 0; e < current.edge_count(); ++e) {
                if (const auto c = local.get(e)) {
                    r.coloring.assign(to_root[e], *c);
                }
            }
            break;
        }
        ++r.claim_counts[static_cast<std::size_t>(plan->claim)];
        auto sub = current.without_vertex(plan->delete_vertex);
        std::vector<EdgeId> child(sub.edge_origin.size());
        for (std::size_t i = 0; i < child.size(); ++i) {
            child[i] = to_root[sub.edge_origin[i]];
        }
        stack.push_back({std::move(current), std::move(*plan), std::move(to_root)});
        current = std::move(sub.graph);
        to_root = std::move(child);
    }
    r.recursion_depth = stack.size();

    std::vector<ExtensionRecord> records;
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
        const auto& lv = *it;
        for (EdgeId e : lv.plan.erase_edges) {
            r.coloring.erase(lv.to_root[e]);
        }
        PartialColoring local(lv.graph.edge_count());
        for (EdgeId e = 0; e < lv.graph.edge_count(); ++e) {
            if (const auto c = r.coloring.get(lv.to_root[e])) {
                local.assign(e, *c);
            }
        }
        const ConflictIndex index(lv.graph);
        records.clear();
        local = extend(lv.graph, index, std::move(local), lv.plan, lists.project(lv.to_root),
                       &records);
        for (const auto& rec : records) {
            const auto root_edge = lv.to_root[rec.edge];
            r.coloring.assign(root_edge, rec.chosen);
            ++r.extension_steps;
            const auto slack = static_cast<std::uint32_t>(rec.list_size) - rec.actual;
            r.tightest_slack = std::min(r.tightest_slack, slack);
            if (rec.actual > rec.bound) {
                r.bound_excesses.push_back({lv.plan.claim, root_edge, rec.bound, rec.actual});
            }
        }
    }
    finish(root, lists, r);
    return r;
}

void merge(SolveReport& into, const SolveReport& part, const Subgraph& sub) {
    for (EdgeId e = 0; e < sub.graph.edge_count(); ++e) {
        if (const auto c = part.coloring.get(e)) {
            into.coloring.assign(sub.edge_origin[e], *c);
        }
    }
    if (part.fallback) {
        into.fallback = into.fallback ? *into.fallback + "; " + *part.fallback : *part.fallback;
    }
    if (part.failed_edge && !into.failed_edge) {
        into.failed_edge = sub.edge_origin[*part.failed_edge];
    }
    into.recursion_depth = std::max(into.recursion_depth, part.recursion_depth);
    if (part.extension_steps > 0) {
        into.tightest_slack = into.extension_steps == 0
                                  ? part.tightest_slack
                                  : std::min(into.tightest_slack, part.tightest_slack);
    }
    into.extension_steps += part.extension_steps;
    for (std::size_t i = 0; i < into.claim_counts.size(); ++i) {
        into.claim_counts[i] += part.claim_counts[i];
    }
    for (auto ex : part.bound_excesses) {
        ex.edge = sub.edge_origin[ex.edge];
        into.bound_excesses.push_back(ex);
    }
}

SolveReport solve_by_components(const Graph& g, const ColorLists& lists, SolvePath path,
                                std::uint32_t budget, const Finder& find,
                                const NoneHandler& on_none) {
    SolveReport r;
    r.path = path;
    r.color_budget = budget;
    r.coloring = PartialColoring(g.edge_count());
    for (const auto& comp : connected_components(g)) {
        const auto sub = g.induced(comp);
        if (sub.graph.edge_count() == 0) {
            continue;
        }
        merge(r, reduce(sub.graph, lists.project(sub.edge_origin), find, on_none), sub);
    }
    finish(g, lists, r);
    r.certified = r.success && r.bound_excesses.empty() && !r.fallback;
    return r;
}

std::vector<EdgeId> all_edges(const Graph& g) {
    std::vector<EdgeId> order(g.edge_count());
    std::iota(order.begin(), order.end(), EdgeId{0});
    return order;
}

/// Δ <= 1: every conflict set is empty, so any nonempty lists suffice.
SolveReport solve_matching(const Graph& g, const ColorLists& lists, std::uint32_t budget) {
    if (g.edge_count() > 0 && lists.min_size() == 0) {
        throw HypothesisError("list_size", "every edge needs a nonempty list");
    }
    auto r = greedy_color(g, lists, all_edges(g));
    r.color_budget = budget;
    r.certified = r.success;
    return r;
}

void check_cover(const Graph& g, const ColorLists& lists) {
    if (lists.edge_count() != g.edge_count()) {
        throw InputError("color lists cover " + std::to_string(lists.edge_count()) +
                         " edges but the graph has " + std::to_string(g.edge_count()));
    }
}

void check_list_size(const Graph& g, const ColorLists& lists, std::uint32_t need) {
    if (g.edge_count() > 0 && lists.min_size() < need) {
        throw HypothesisError("list_size", "lists need at least " + std::to_string(need) +
                                               " colors, shortest has " +
                                               std::to_string(lists.min_size()));
    }
}

} // namespace

SolveReport solve_mad3(const Graph& g, const ColorLists& lists, const SolveOptions&) {
    check_cover(g, lists);
    const auto delta = static_cast<std::uint32_t>(g.max_degree());
    if (delta > 4) {
        throw HypothesisError("max_degree", "max degree " + std::to_string(delta) + " exceeds 4");
    }
    const auto budget = 3 * delta + 1;
    if (delta <= 1) {
        return solve_matching(g, lists, budget);
    }
    const auto density = mad(g);
    if (density.density >= ExactRational(3)) {
        std::ostringstream os;
        os << "mad is " << to_string(density.density) << " >= 3, witnessed by vertices";
        for (auto v : density.vertices) {
            os << ' ' << g.label(v);
        }
        throw HypothesisError("mad", os.str());
    }
    check_list_size(g, lists, budget);

    const Finder find = [delta](const Graph& h) { return find_reducible_mad(h, delta); };
    const NoneHandler none = [](const Graph& h, const ColorLists&, std::size_t depth,
                                SolveReport&) -> PartialColoring {
        throw TheoremViolation("no reducible configuration on a subgraph with " +
                               std::to_string(h.vertex_count()) + " vertices and " +
                               std::to_string(h.edge_count()) + " edges at depth " +
                               std::to_string(depth) + " although mad < 3 and max degree <= 4");
    };
    return solve_by_components(g, lists, SolvePath::Mad3, budget, find, none);
}

SolveReport solve_girth7(const Graph& g, const ColorLists& lists, std::uint32_t delta_cap,
                         const SolveOptions& options) {
    check_cover(g, lists);
    if (delta_cap < 4) {
        throw HypothesisError("delta_cap", "delta_cap must be at least 4, got " +
                                               std::to_string(delta_cap));
    }
    const auto delta = g.max_degree();
    if (delta > delta_cap) {
        throw HypothesisError("max_degree", "max degree " + std::to_string(delta) +
                                                " exceeds delta_cap " + std::to_string(delta_cap));
    }
    const auto gi = girth(g);
    if (gi < 7) {
        throw HypothesisError("girth", "girth is " + std::to_string(gi) + ", need at least 7");
    }
    const auto budget = 3 * delta_cap;
    if (delta <= 1) {
        return solve_matching(g, lists, budget);
    }
    check_list_size(g, lists, budget);

    const Finder find = [delta_cap](const Graph& h) {
        return find_reducible_girth7(h, delta_cap);
    };
    const NoneHandler none = [&options](const Graph& h, const ColorLists& local, std::size_t depth,
                                        SolveReport& r) {
        const std::string where = "no reducible configuration at depth " + std::to_string(depth) +
                                  " (" + std::to_string(h.edge_count()) +
                                  " edges left; is the graph really planar?)";
        if (h.edge_count() <= options.fallback_threshold) {
            try {
                const SearchBudget sb{options.fallback_threshold, options.oracle_node_limit};
                if (auto found = list_strong_colorable(h, local, sb)) {
                    r.fallback = where + ", colored by exact search";
                    return std::move(*found);
                }
                r.fallback = where + ", exact search found no list coloring, greedy used";
            } catch (const BudgetExceeded&) {
                r.fallback = where + ", exact search over budget, greedy used";
            }
        } else {
            r.fallback = where + ", colored greedily";
        }
        return greedy_color(h, local, all_edges(h)).coloring;
    };
    return solve_by_components(g, lists, SolvePath::Girth7, budget, find, none);
}

} // namespace sec
