#pragma once

#include "sec/graph.hpp"
#include "sec/rational.hpp"
#include "sec/reducer.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sec {

using Dart = std::pair<VertexId, VertexId>;

struct Face {
    std::vector<Dart> darts; ///< closed walk; a pendant edge appears in both directions
    std::size_t degree() const noexcept { return darts.size(); }
};

/// A rotation system and the faces it induces.
struct Embedding {
    Graph graph;
    std::vector<std::vector<VertexId>> rotation; ///< cyclic neighbor order per vertex
    std::vector<Face> faces;
    std::vector<std::vector<std::size_t>> dart_face; ///< face of (v, rotation[v][i])

    /// Face containing the directed edge (u, v).
    std::size_t face_of(VertexId u, VertexId v) const;
};

/// Traces faces with the rule (u, v) -> (v, w), w following u at v. Throws
/// InputError on a malformed rotation or when some component violates
/// V - E + F = 2. A single isolated vertex gets one empty face.
Embedding trace_faces(const Graph& g, std::vector<std::vector<VertexId>> rotation);

/// Σ_v (5/2 deg(v) - 7) + Σ_f (deg(f) - 7). Throws InputError for a
/// disconnected graph and TheoremViolation if the sum is not -14.
ExactRational euler_charge_identity(const Embedding& emb);

struct ChargeElement {
    enum class Kind : std::uint8_t { Vertex, Face };
    Kind kind = Kind::Vertex;
    std::uint32_t index = 0;

    friend bool operator==(const ChargeElement&, const ChargeElement&) = default;
};

struct Transfer {
    ChargeElement source;
    ChargeElement sink;
    ExactRational amount;
    std::string rule; ///< "R1" ... "R10"
};

struct ChargeLedger {
    std::vector<ExactRational> vertex_initial;
    std::vector<ExactRational> vertex_final;
    std::vector<ExactRational> face_initial; ///< empty for the vertex-only rules
    std::vector<ExactRational> face_final;
    std::vector<Transfer> transfers;

    ExactRational total_initial() const;
    ExactRational total_final() const;
};

/// Initial charge deg(v) - 3. R1: a 4_1-vertex sends 1 to its 2-neighbor.
/// R2: a 4_2-vertex sends 1/2 to each 2-neighbor.
ChargeLedger apply_rules_mad(const Graph& g);

/// Initial charges 5/2 deg(v) - 7 and deg(f) - 7, then R1-R10 applied at
/// once from the degree classes of the unchanged graph.
ChargeLedger apply_rules_girth7(const Embedding& emb);

/// The two neighbor classes of a 2-vertex, e.g. "4_2+3_1".
std::string two_vertex_profile(const Graph& g, VertexId v);

/// True if the final-charge case analysis for 2-vertices handles this profile.
bool profile_covered(const Graph& g, VertexId v);

enum class RuleSet : std::uint8_t { Mad, Girth7 };

struct NegativeElement {
    ChargeElement element;
    ExactRational final_charge;
    /// First detected plan (priority order) whose footprint meets the
    /// element's closed neighborhood.
    std::optional<ClaimTag> touching_claim;
};

struct UncoveredCase {
    VertexId vertex = 0;
    std::string profile;
    std::optional<ClaimTag> touching_claim;
};

struct AuditReport {
    RuleSet which = RuleSet::Mad;
    ChargeLedger ledger;
    std::optional<ExactRational> euler_total;
    std::uint32_t girth = kInfiniteGirth;
    std::vector<NegativeElement> negatives;
    std::vector<UncoveredCase> uncovered; ///< girth-7 rules only
    std::size_t plans_detected = 0;
    std::vector<std::string> notes;

    bool conserved() const { return ledger.total_initial() == ledger.total_final(); }
};

/// Ledger, negative elements and their cross-reference with the detector.
/// Girth7 needs an embedding; delta_cap defaults to max(4, Δ).
AuditReport audit(const Graph& g, const std::optional<Embedding>& emb, RuleSet which,
                  std::optional<std::uint32_t> delta_cap = std::nullopt);

} // namespace sec
