#include "sec/oracle.hpp"

#include "sec/conflict.hpp"
#include "sec/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace sec {

namespace {

/// Conflict graph over edges renumbered in canonical (u, v) order.
struct CanonicalConflicts {
    std::vector<EdgeId> edge_of;                // canonical index -> edge id
    std::vector<std::vector<std::size_t>> adj;  // canonical adjacency

    explicit CanonicalConflicts(const Graph& g) {
        const auto m = g.edge_count();
        edge_of.resize(m);
        std::iota(edge_of.begin(), edge_of.end(), EdgeId{0});
        std::sort(edge_of.begin(), edge_of.end(), [&](EdgeId a, EdgeId b) {
            const auto& ea = g.edge(a);
            const auto& eb = g.edge(b);
            return std::pair(ea.u, ea.v) < std::pair(eb.u, eb.v);
        });
        std::vector<std::size_t> index_of(m);
        for (std::size_t i = 0; i < m; ++i) {
            index_of[edge_of[i]] = i;
        }
        const ConflictIndex index(g);
        adj.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            for (EdgeId f : index.conflicts(edge_of[i])) {
                adj[i].push_back(index_of[f]);
            }
            std::sort(adj[i].begin(), adj[i].end());
        }
    }

    std::size_t size() const noexcept { return adj.size(); }
    bool adjacent(std::size_t a, std::size_t b) const {
        return std::binary_search(adj[a].begin(), adj[a].end(), b);
    }
};

void check_cap(const Graph& g, const SearchBudget& budget) {
    if (g.edge_count() > budget.max_edges) {
        throw BudgetExceeded("exact search is limited to " + std::to_string(budget.max_edges) +
                             " edges but the graph has " + std::to_string(g.edge_count()) +
                             "; use the theorem solvers for larger graphs");
    }
}

std::uint32_t greedy_clique(const CanonicalConflicts& cg) {
    std::size_t best = 0;
    for (std::size_t s = 0; s < cg.size(); ++s) {
        std::vector<std::size_t> cand = cg.adj[s];
        std::stable_sort(cand.begin(), cand.end(), [&](std::size_t a, std::size_t b) {
            return cg.adj[a].size() > cg.adj[b].size();
        });
        std::vector<std::size_t> clique{s};
        for (auto x : cand) {
            if (std::all_of(clique.begin(), clique.end(),
                            [&](std::size_t y) { return cg.adjacent(x, y); })) {
                clique.push_back(x);
            }
        }
        best = std::max(best, clique.size());
    }
    return static_cast<std::uint32_t>(best);
}

/// Backtracking k-coloring of the canonical conflict graph.
class KColoring {
public:
    KColoring(const CanonicalConflicts& cg, std::uint32_t k, std::uint64_t node_limit,
              std::uint64_t& nodes)
        : cg_(cg), k_(k), node_limit_(node_limit), nodes_(nodes),
          color_(cg.size(), -1), forbidden_(cg.size(), std::vector<std::uint32_t>(k, 0)) {}

    bool run() { return search(0, 0); }
    const std::vector<int>& colors() const { return color_; }

private:
    // Colors any vertex may take right now: those already used, plus one new.
    std::uint32_t palette(std::uint32_t used) const { return std::min(used + 1, k_); }

    bool search(std::size_t colored, std::uint32_t used) {
        if (colored == cg_.size()) {
            return true;
        }
        const auto pal = palette(used);
        std::size_t pick = cg_.size();
        std::uint32_t pick_options = k_ + 1;
        for (std::size_t i = 0; i < cg_.size(); ++i) {
            if (color_[i] >= 0) {
                continue;
            }
            std::uint32_t options = 0;
            for (std::uint32_t c = 0; c < pal; ++c) {
                options += forbidden_[i][c] == 0;
            }
            if (options < pick_options) {
                pick = i;
                pick_options = options;
            }
        }
        if (pick_options == 0) {
            return false;
        }
        for (std::uint32_t c = 0; c < pal; ++c) {
            if (forbidden_[pick][c] != 0) {
                continue;
            }
            if (++nodes_ > node_limit_) {
                throw BudgetExceeded("exact search exceeded " + std::to_string(node_limit_) +
                                     " nodes");
            }
            assign(pick, static_cast<int>(c), +1);
            if (search(colored + 1, std::max(used, c + 1))) {
                return true;
            }
            assign(pick, static_cast<int>(c), -1);
        }
        return false;
    }

    void assign(std::size_t i, int c, int sign) {
        color_[i] = sign > 0 ? c : -1;
        for (auto j : cg_.adj[i]) {
            forbidden_[j][static_cast<std::size_t>(c)] += sign;
        }
    }

    const CanonicalConflicts& cg_;
    std::uint32_t k_;
    std::uint64_t node_limit_;
    std::uint64_t& nodes_;
    std::vector<int> color_;
    std::vector<std::vector<std::uint32_t>> forbidden_;
};

/// Backtracking list coloring of the canonical conflict graph.
class ListSearch {
public:
    ListSearch(const CanonicalConflicts& cg, std::vector<std::vector<Color>> lists,
               std::uint64_t node_limit)
        : cg_(cg), lists_(std::move(lists)), node_limit_(node_limit), choice_(cg.size(), -1) {
        const auto m = cg.size();
        blocked_.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            blocked_[i].assign(lists_[i].size(), 0);
        }
    }

    bool run() { return search(0); }
    Color color_of(std::size_t i) const { return lists_[i][static_cast<std::size_t>(choice_[i])]; }

private:
    bool search(std::size_t colored) {
        if (colored == cg_.size()) {
            return true;
        }
        std::size_t pick = cg_.size();
        std::size_t pick_options = 0;
        for (std::size_t i = 0; i < cg_.size(); ++i) {
            if (choice_[i] >= 0) {
                continue;
            }
            const auto options = static_cast<std::size_t>(
                std::count(blocked_[i].begin(), blocked_[i].end(), 0u));
            if (pick == cg_.size() || options < pick_options) {
                pick = i;
                pick_options = options;
            }
        }
        if (pick_options == 0) {
            return false;
        }
        for (std::size_t p = 0; p < lists_[pick].size(); ++p) {
            if (blocked_[pick][p] != 0) {
                continue;
            }
            if (++nodes_ > node_limit_) {
                throw BudgetExceeded("list search exceeded " + std::to_string(node_limit_) +
                                     " nodes");
            }
            set(pick, p, +1);
            if (search(colored + 1)) {
                return true;
            }
            set(pick, p, -1);
        }
        return false;
    }

    void set(std::size_t i, std::size_t p, int sign) {
        choice_[i] = sign > 0 ? static_cast<int>(p) : -1;
        const auto c = lists_[i][p];
        for (auto j : cg_.adj[i]) {
            const auto& lj = lists_[j];
            const auto it = std::lower_bound(lj.begin(), lj.end(), c);
            if (it != lj.end() && *it == c) {
                blocked_[j][static_cast<std::size_t>(it - lj.begin())] += sign;
            }
        }
    }

    const CanonicalConflicts& cg_;
    std::vector<std::vector<Color>> lists_;
    std::uint64_t node_limit_;
    std::uint64_t nodes_ = 0;
    std::vector<int> choice_;
    std::vector<std::vector<std::uint32_t>> blocked_;
};

} // namespace

OracleResult strong_chromatic_index_exact(const Graph& g, const SearchBudget& budget) {
    check_cap(g, budget);
    OracleResult result;
    result.witness = PartialColoring(g.edge_count());
    if (g.edge_count() == 0) {
        return result;
    }
    const CanonicalConflicts cg(g);
    result.lower_bound_clique = greedy_clique(cg);
    for (auto k = result.lower_bound_clique;; ++k) {
        KColoring search(cg, k, budget.max_nodes, result.nodes);
        if (search.run()) {
            result.chi_s = k;
            for (std::size_t i = 0; i < cg.size(); ++i) {
                result.witness.assign(cg.edge_of[i], static_cast<Color>(search.colors()[i]));
            }
            return result;
        }
    }
}

std::optional<PartialColoring> list_strong_colorable(const Graph& g, const ColorLists& lists,
                                                     const SearchBudget& budget) {
    check_cap(g, budget);
    if (lists.edge_count() < g.edge_count()) {
        throw InputError("color lists cover " + std::to_string(lists.edge_count()) + " of " +
                         std::to_string(g.edge_count()) + " edges");
    }
    const CanonicalConflicts cg(g);
    std::vector<std::vector<Color>> canonical;
    canonical.reserve(cg.size());
    for (auto e : cg.edge_of) {
        const auto l = lists.of(e);
        canonical.emplace_back(l.begin(), l.end());
    }
    ListSearch search(cg, std::move(canonical), budget.max_nodes);
    if (!search.run()) {
        return std::nullopt;
    }
    PartialColoring out(g.edge_count());
    for (std::size_t i = 0; i < cg.size(); ++i) {
        out.assign(cg.edge_of[i], search.color_of(i));
    }
    return out;
}

bool check_proposition_small_delta(const Graph& g, const SearchBudget& budget) {
    const auto delta = g.max_degree();
    if (delta > 2) {
        throw InputError("small-degree check needs max degree <= 2, got " + std::to_string(delta));
    }
    // Components are paths and cycles; the index is the maximum over them.
    std::uint32_t chi = 0;
    for (const auto& comp : connected_components(g)) {
        const auto sub = g.induced(comp);
        chi = std::max(chi, strong_chromatic_index_exact(sub.graph, budget).chi_s);
    }
    return delta <= 1 ? chi <= 1 : chi <= 5;
}

} // namespace sec
