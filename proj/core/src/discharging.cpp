#include "sec/discharging.hpp"

#include "sec/density.hpp"
#include "sec/errors.hpp"

#include <algorithm>
#include <set>

namespace sec {

std::size_t Embedding::face_of(VertexId u, VertexId v) const {
    const auto& rot = rotation.at(u);
    const auto it = std::find(rot.begin(), rot.end(), v);
    if (it == rot.end()) {
        throw InputError("no directed edge " + std::to_string(u) + "->" + std::to_string(v));
    }
    return dart_face[u][static_cast<std::size_t>(it - rot.begin())];
}

Embedding trace_faces(const Graph& g, std::vector<std::vector<VertexId>> rotation) {
    const auto n = g.vertex_count();
    if (rotation.size() != n) {
        throw InputError("rotation covers " + std::to_string(rotation.size()) + " vertices, graph has " +
                         std::to_string(n));
    }
    for (VertexId v = 0; v < n; ++v) {
        auto expect = std::vector<VertexId>(g.neighbors(v).begin(), g.neighbors(v).end());
        auto got = rotation[v];
        std::sort(expect.begin(), expect.end());
        std::sort(got.begin(), got.end());
        if (expect != got) {
            throw InputError("rotation at vertex " + std::to_string(g.label(v)) +
                             " must list each neighbor exactly once");
        }
    }

    Embedding emb;
    emb.graph = g;
    emb.rotation = std::move(rotation);
    constexpr auto kUnset = static_cast<std::size_t>(-1);
    emb.dart_face.resize(n);
    for (VertexId v = 0; v < n; ++v) {
        emb.dart_face[v].assign(emb.rotation[v].size(), kUnset);
    }
    const auto position = [&](VertexId at, VertexId x) {
        const auto& rot = emb.rotation[at];
        return static_cast<std::size_t>(std::find(rot.begin(), rot.end(), x) - rot.begin());
    };

    for (VertexId s = 0; s < n; ++s) {
        for (std::size_t i = 0; i < emb.rotation[s].size(); ++i) {
            if (emb.dart_face[s][i] != kUnset) {
                continue;
            }
            const auto id = emb.faces.size();
            Face face;
            VertexId u = s;
            std::size_t slot = i;
            while (emb.dart_face[u][slot] == kUnset) {
                emb.dart_face[u][slot] = id;
                const VertexId v = emb.rotation[u][slot];
                face.darts.emplace_back(u, v);
                const auto& rv = emb.rotation[v];
                slot = (position(v, u) + 1) % rv.size();
                u = v;
            }
            emb.faces.push_back(std::move(face));
        }
    }
    if (n == 1) {
        emb.faces.emplace_back();
    }

    // Euler per component with at least one edge.
    const auto comps = connected_components(g);
    std::vector<std::size_t> comp_of(n);
    for (std::size_t c = 0; c < comps.size(); ++c) {
        for (auto v : comps[c]) {
            comp_of[v] = c;
        }
    }
    std::vector<long> euler(comps.size(), 0);
    std::vector<bool> has_edge(comps.size(), false);
    for (std::size_t c = 0; c < comps.size(); ++c) {
        euler[c] = static_cast<long>(comps[c].size());
    }
    for (const auto& e : g.edges()) {
        --euler[comp_of[e.u]];
        has_edge[comp_of[e.u]] = true;
    }
    for (const auto& f : emb.faces) {
        if (!f.darts.empty()) {
            ++euler[comp_of[f.darts.front().first]];
        }
    }
    for (std::size_t c = 0; c < comps.size(); ++c) {
        if (has_edge[c] && euler[c] != 2) {
            throw InputError("embedding is not planar (genus > 0): V - E + F = " +
                             std::to_string(euler[c]) + " on a component");
        }
    }
    return emb;
}

ExactRational euler_charge_identity(const Embedding& emb) {
    if (!is_connected(emb.graph)) {
        throw InputError("charge identity needs a connected graph");
    }
    ExactRational total = 0;
    for (VertexId v = 0; v < emb.graph.vertex_count(); ++v) {
        total += ExactRational(5 * static_cast<std::int64_t>(emb.graph.degree(v)), 2) - 7;
    }
    for (const auto& f : emb.faces) {
        total += static_cast<std::int64_t>(f.degree()) - 7;
    }
    if (total != ExactRational(-14)) {
        throw TheoremViolation("charge identity gave " + to_string(total) + " instead of -14");
    }
    return total;
}

ExactRational ChargeLedger::total_initial() const {
    ExactRational s = 0;
    for (const auto& x : vertex_initial) s += x;
    for (const auto& x : face_initial) s += x;
    return s;
}

ExactRational ChargeLedger::total_final() const {
    ExactRational s = 0;
    for (const auto& x : vertex_final) s += x;
    for (const auto& x : face_final) s += x;
    return s;
}

namespace {

using Kind = ChargeElement::Kind;

ChargeElement vertex_el(VertexId v) { return {Kind::Vertex, v}; }

void move_charge(ChargeLedger& l, ChargeElement from, ChargeElement to, ExactRational amount,
                 std::string rule) {
    auto& src = from.kind == Kind::Vertex ? l.vertex_final : l.face_final;
    auto& dst = to.kind == Kind::Vertex ? l.vertex_final : l.face_final;
    src[from.index] -= amount;
    dst[to.index] += amount;
    l.transfers.push_back({from, to, amount, std::move(rule)});
}

std::vector<std::uint32_t> two_counts(const Graph& g) {
    std::vector<std::uint32_t> out(g.vertex_count(), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        for (auto u : g.neighbors(v)) {
            out[v] += g.degree(u) == 2;
        }
    }
    return out;
}

} // namespace

ChargeLedger apply_rules_mad(const Graph& g) {
    ChargeLedger l;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        l.vertex_initial.emplace_back(static_cast<std::int64_t>(g.degree(v)) - 3);
    }
    l.vertex_final = l.vertex_initial;
    const auto twos = two_counts(g);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) != 4 || twos[v] == 0 || twos[v] > 2) {
            continue;
        }
        const auto amount = twos[v] == 1 ? ExactRational(1) : ExactRational(1, 2);
        for (auto u : g.neighbors(v)) {
            if (g.degree(u) == 2) {
                move_charge(l, vertex_el(v), vertex_el(u), amount, twos[v] == 1 ? "R1" : "R2");
            }
        }
    }
    return l;
}

ChargeLedger apply_rules_girth7(const Embedding& emb) {
    const auto& g = emb.graph;
    ChargeLedger l;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        l.vertex_initial.push_back(ExactRational(5 * static_cast<std::int64_t>(g.degree(v)), 2) - 7);
    }
    for (const auto& f : emb.faces) {
        l.face_initial.emplace_back(static_cast<std::int64_t>(f.degree()) - 7);
    }
    l.vertex_final = l.vertex_initial;
    l.face_final = l.face_initial;

    const auto twos = two_counts(g);
    const auto deg = [&](VertexId v) { return g.degree(v); };
    const auto is = [&](VertexId v, std::size_t k, std::uint32_t t) {
        return deg(v) == k && twos[v] == t;
    };

    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (deg(v) == 1) {
            const auto u = g.neighbors(v)[0];
            move_charge(l, {Kind::Face, static_cast<std::uint32_t>(emb.face_of(v, u))},
                        vertex_el(v), 2, "R1");
            move_charge(l, vertex_el(u), vertex_el(v), ExactRational(5, 2), "R2");
        }
        if (deg(v) == 4 && twos[v] >= 1 && twos[v] <= 3) {
            static const ExactRational amounts[] = {3, ExactRational(3, 2), 1};
            static const char* rules[] = {"R3", "R4", "R5"};
            for (auto u : g.neighbors(v)) {
                if (deg(u) == 2) {
                    move_charge(l, vertex_el(v), vertex_el(u), amounts[twos[v] - 1],
                                rules[twos[v] - 1]);
                }
            }
        }
        if (deg(v) != 2) {
            continue;
        }
        const auto a = g.neighbors(v)[0];
        const auto b = g.neighbors(v)[1];
        for (auto [u, w] : {std::pair{a, b}, std::pair{b, a}}) {
            if (is(u, 4, 2) && is(w, 3, 1)) {
                move_charge(l, vertex_el(w), vertex_el(v), ExactRational(1, 2), "R7");
            }
            if (deg(u) < 5) {
                continue;
            }
            if (deg(w) == 2) {
                move_charge(l, vertex_el(u), vertex_el(v), 2, "R6");
            } else if (is(w, 3, 1)) {
                move_charge(l, vertex_el(u), vertex_el(v), ExactRational(3, 2), "R8");
                move_charge(l, vertex_el(w), vertex_el(v), ExactRational(1, 2), "R8");
            } else if (is(w, 3, 2)) {
                move_charge(l, vertex_el(u), vertex_el(v), 2, "R9");
            } else if (deg(w) >= 4) {
                move_charge(l, vertex_el(u), vertex_el(v), 1, "R10");
            }
        }
    }
    return l;
}

namespace {

std::string class_name(const Graph& g, VertexId v) {
    const auto d = g.degree(v);
    if (d <= 2) {
        return std::to_string(d);
    }
    std::uint32_t t = 0;
    for (auto u : g.neighbors(v)) {
        t += g.degree(u) == 2;
    }
    return std::to_string(d) + "_" + std::to_string(t);
}

} // namespace

std::string two_vertex_profile(const Graph& g, VertexId v) {
    std::vector<std::string> parts;
    for (auto u : g.neighbors(v)) {
        parts.push_back(class_name(g, u));
    }
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (const auto& p : parts) {
        out += (out.empty() ? "" : "+") + p;
    }
    return out;
}

bool profile_covered(const Graph& g, VertexId v) {
    if (g.degree(v) != 2) {
        return true;
    }
    const auto dc_a = degree_class(g, g.neighbors(v)[0]);
    const auto dc_b = degree_class(g, g.neighbors(v)[1]);
    const auto four = [](const DegreeClass& c, std::uint32_t t) { return c.is(4, t); };
    if (four(dc_a, 1) || four(dc_b, 1)) {
        return true;
    }
    for (const auto& [u, w] : {std::pair{dc_a, dc_b}, std::pair{dc_b, dc_a}}) {
        if (u.degree >= 5 && (w.degree == 2 || w.is(3, 1) || w.is(3, 2) || w.degree >= 4)) {
            return true;
        }
        if (four(u, 2) && w.is(3, 1)) {
            return true;
        }
    }
    const auto four23 = [&](const DegreeClass& c) { return four(c, 2) || four(c, 3); };
    return four23(dc_a) && four23(dc_b);
}

namespace {

std::vector<VertexId> footprint(const Graph& g, const ReductionPlan& p) {
    std::vector<VertexId> out = p.involved;
    out.push_back(p.delete_vertex);
    for (const auto& s : p.extension_order) {
        out.push_back(g.edge(s.edge).u);
        out.push_back(g.edge(s.edge).v);
    }
    for (auto e : p.erase_edges) {
        out.push_back(g.edge(e).u);
        out.push_back(g.edge(e).v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<ClaimTag> touching(const std::vector<ReductionPlan>& plans,
                                 const std::vector<std::vector<VertexId>>& footprints,
                                 const std::vector<VertexId>& area) {
    for (std::size_t i = 0; i < plans.size(); ++i) {
        const auto& fp = footprints[i];
        for (auto x : area) {
            if (std::binary_search(fp.begin(), fp.end(), x)) {
                return plans[i].claim;
            }
        }
    }
    return std::nullopt;
}

std::vector<VertexId> closed_neighborhood(const Graph& g, VertexId v) {
    std::vector<VertexId> out(g.neighbors(v).begin(), g.neighbors(v).end());
    out.push_back(v);
    return out;
}

} // namespace

AuditReport audit(const Graph& g, const std::optional<Embedding>& emb, RuleSet which,
                  std::optional<std::uint32_t> delta_cap) {
    if (which == RuleSet::Girth7 && !emb) {
        throw InputError("the girth-7 rules need an embedding (rotation block)");
    }
    if (emb && !(emb->graph == g)) {
        throw InputError("embedding does not belong to the audited graph");
    }
    AuditReport r;
    r.which = which;
    r.girth = girth(g);
    const auto delta = static_cast<std::uint32_t>(g.max_degree());

    std::vector<ReductionPlan> plans;
    try {
        if (which == RuleSet::Mad) {
            r.ledger = apply_rules_mad(g);
            if (delta > 4) {
                r.notes.push_back("max degree " + std::to_string(delta) + " > 4");
            }
            if (g.vertex_count() > 0 && !mad_below(g, 3)) {
                r.notes.push_back("mad >= 3");
            }
            plans = all_reducible_mad(g);
        } else {
            r.ledger = apply_rules_girth7(*emb);
            if (r.girth < 7) {
                r.notes.push_back("girth " + std::to_string(r.girth) + " < 7");
            }
            plans = all_reducible_girth7(g, delta_cap.value_or(std::max<std::uint32_t>(4, delta)));
        }
    } catch (const HypothesisError& e) {
        r.notes.push_back(std::string("detector not run: ") + e.what());
    }
    r.plans_detected = plans.size();

    if (emb) {
        if (is_connected(g)) {
            r.euler_total = euler_charge_identity(*emb);
        } else {
            r.notes.push_back("graph is disconnected; charge identity skipped");
        }
    }

    std::vector<std::vector<VertexId>> footprints;
    footprints.reserve(plans.size());
    for (const auto& p : plans) {
        footprints.push_back(footprint(g, p));
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (r.ledger.vertex_final[v] < 0) {
            r.negatives.push_back({vertex_el(v), r.ledger.vertex_final[v],
                                   touching(plans, footprints, closed_neighborhood(g, v))});
        }
        if (which == RuleSet::Girth7 && g.degree(v) == 2 && !profile_covered(g, v)) {
            r.uncovered.push_back({v, two_vertex_profile(g, v),
                                   touching(plans, footprints, closed_neighborhood(g, v))});
        }
    }
    for (std::size_t f = 0; f < r.ledger.face_final.size(); ++f) {
        if (r.ledger.face_final[f] < 0) {
            std::vector<VertexId> boundary;
            for (const auto& d : emb->faces[f].darts) {
                boundary.push_back(d.first);
            }
            r.negatives.push_back({{Kind::Face, static_cast<std::uint32_t>(f)},
                                   r.ledger.face_final[f],
                                   touching(plans, footprints, boundary)});
        }
    }
    return r;
}

} // namespace sec
