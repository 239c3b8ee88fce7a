#include "sec/errors.hpp"
#include "sec/generate.hpp"
#include "sec/reducer.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace sec {
namespace {

bool incident(const Graph& g, EdgeId e, VertexId v) { return g.edge(e).has(v); }

// Structural checks every plan must pass.
void expect_well_formed(const Graph& g, const ReductionPlan& p, std::uint32_t list_size) {
    ASSERT_LT(p.delete_vertex, g.vertex_count());
    std::vector<EdgeId> order;
    for (const auto& s : p.extension_order) {
        ASSERT_LT(s.edge, g.edge_count());
        EXPECT_LT(s.conflict_bound, list_size) << claim_name(p.claim);
        order.push_back(s.edge);
    }
    for (auto e : g.incident_edges(p.delete_vertex)) {
        EXPECT_NE(std::find(order.begin(), order.end(), e), order.end());
    }
    for (auto e : p.erase_edges) {
        EXPECT_FALSE(incident(g, e, p.delete_vertex));
        EXPECT_NE(std::find(order.begin(), order.end(), e), order.end());
    }
}

TEST(FindReducibleMad, SingleEdgePendant) {
    const auto g = test::path_graph(2);
    const auto p = find_reducible_mad(g);
    ASSERT_TRUE(p.has_value());
    EXPECT_EQ(p->claim, ClaimTag::M1Pendant);
    EXPECT_EQ(p->delete_vertex, 0u);
    ASSERT_EQ(p->extension_order.size(), 1u);
    EXPECT_EQ(p->extension_order[0].edge, 0u);
    EXPECT_EQ(p->extension_order[0].conflict_bound, 3u); // 3Δ with Δ = 1
    expect_well_formed(g, *p, 4);
}

TEST(FindReducibleMad, PendantBeatsWeakTwoVertex) {
    const auto g = test::path_graph(3);
    const auto p = find_reducible_mad(g);
    ASSERT_TRUE(p.has_value());
    EXPECT_EQ(p->claim, ClaimTag::M1Pendant);
    EXPECT_EQ(p->delete_vertex, 0u);
}

TEST(FindReducibleMad, SubdividedStarFiresOnLeaf) {
    // Center 0, leaves 1..4, subdivision vertices 5..8.
    const auto g = test::subdivide_all(test::star_graph(4));
    const auto p = find_reducible_mad(g);
    ASSERT_TRUE(p.has_value());
    EXPECT_EQ(p->claim, ClaimTag::M1Pendant);
    EXPECT_EQ(p->delete_vertex, 1u);
    expect_well_formed(g, *p, 13);
}

TEST(FindReducibleMad, CycleFiresTwoWeak) {
    const auto g = test::cycle_graph(7);
    const auto p = find_reducible_mad(g);
    ASSERT_TRUE(p.has_value());
    EXPECT_EQ(p->claim, ClaimTag::M2TwoWeakNeighbors);
    EXPECT_EQ(p->delete_vertex, 0u);
    for (const auto& s : p->extension_order) {
        EXPECT_LE(s.conflict_bound, 2u * 2 + 2);
    }
    expect_well_formed(g, *p, 7);
}

TEST(FindReducibleMad, TwoFourConfiguration) {
    // 0 is a 4-vertex with 2-neighbors 1 and 2; 1's far end 5 has degree 3.
    const auto g = test::make_graph(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 6}, {5, 3},
                                        {5, 4}, {6, 3}, {6, 4}, {3, 4}});
    const auto p = find_reducible_mad(g);
    ASSERT_TRUE(p.has_value());
    EXPECT_EQ(p->claim, ClaimTag::M3TwoFour);
    expect_well_formed(g, *p, 13);
}

TEST(FindReducibleMad, FourFourVertex) {
    // 0 -> 1..4 -> 5..8, and 5..8 form a K4.
    const auto g = test::make_graph(9, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 6}, {3, 7},
                                        {4, 8}, {5, 6}, {5, 7}, {5, 8}, {6, 7}, {6, 8}, {7, 8}});
    const auto p = find_reducible_mad(g);
    ASSERT_TRUE(p.has_value());
    EXPECT_EQ(p->claim, ClaimTag::M4NoFourFour);
    EXPECT_EQ(p->involved.front(), 0u);
    expect_well_formed(g, *p, 13);
}

TEST(FindReducibleMad, NoneOnCubic) {
    EXPECT_FALSE(find_reducible_mad(test::petersen_graph()).has_value());
    EXPECT_FALSE(find_reducible_mad(test::complete_graph(4)).has_value());
}

TEST(FindReducibleMad, AllListsFirstPlanFirst) {
    const auto g = test::cycle_graph(7);
    const auto all = all_reducible_mad(g);
    ASSERT_FALSE(all.empty());
    EXPECT_EQ(all.front(), *find_reducible_mad(g));
}

TEST(FindReducibleGirth7, CycleFiresTwoWeak) {
    const auto g = test::cycle_graph(7);
    const auto p = find_reducible_girth7(g, 4);
    ASSERT_TRUE(p.has_value());
    EXPECT_EQ(p->claim, ClaimTag::G2TwoWeak);
    ASSERT_EQ(p->extension_order.size(), 2u);
    EXPECT_EQ(p->extension_order[0].conflict_bound, 2u * 4 + 2);
    expect_well_formed(g, *p, 12);
}

TEST(FindReducibleGirth7, StarPendant) {
    const auto g = test::star_graph(4);
    const auto p = find_reducible_girth7(g, 4);
    ASSERT_TRUE(p.has_value());
    EXPECT_EQ(p->claim, ClaimTag::G1Pendant);
    EXPECT_LE(p->extension_order[0].conflict_bound, 3u * 4 - 1);
    expect_well_formed(g, *p, 12);
}

TEST(FindReducibleGirth7, QuarticTreesAlwaysReduce) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto inst = generate({.family = Family::Tree, .vertices = 25, .max_degree = 4,
                                    .seed = seed});
        const auto p = find_reducible_girth7(inst.graph, 4);
        ASSERT_TRUE(p.has_value());
        expect_well_formed(inst.graph, *p, 12);
    }
}

TEST(FindReducibleGirth7, RejectsBadCap) {
    EXPECT_THROW(find_reducible_girth7(test::cycle_graph(7), 3), HypothesisError);
    EXPECT_THROW(find_reducible_girth7(test::star_graph(5), 4), HypothesisError);
}

TEST(FindReducibleGirth7, NoneOnMcGee) {
    EXPECT_FALSE(find_reducible_girth7(test::mcgee_graph(), 4).has_value());
}

TEST(FindReducibleGirth7, BigVertexWithOneStrongNeighbor) {
    const auto gad = test::big_vertex_gadget(1, 4);
    ASSERT_GE(girth(gad.graph), 7u);
    const auto p = find_reducible_girth7(gad.graph, 5);
    ASSERT_TRUE(p.has_value());
    EXPECT_EQ(p->claim, ClaimTag::G7BigOneThreePlus);
    EXPECT_EQ(p->involved.front(), gad.center);
    expect_well_formed(gad.graph, *p, 15);
}

TEST(FindReducibleGirth7, BigVertexWithTwoStrongNeighborsErasesTwo) {
    const auto gad = test::big_vertex_gadget(2, 3);
    ASSERT_GE(girth(gad.graph), 7u);
    const auto p = find_reducible_girth7(gad.graph, 5);
    ASSERT_TRUE(p.has_value());
    EXPECT_EQ(p->claim, ClaimTag::G8BigTwoThreePlus);
    EXPECT_EQ(p->erase_edges.size(), 2u);
    EXPECT_EQ(p->extension_order.size(), 4u);
    expect_well_formed(gad.graph, *p, 15);
}

TEST(ClaimNames, ShortTags) {
    EXPECT_EQ(claim_name(ClaimTag::M1Pendant), "M1");
    EXPECT_EQ(claim_name(ClaimTag::M5FourThree), "M5");
    EXPECT_EQ(claim_name(ClaimTag::G8BigTwoThreePlus), "G8");
    EXPECT_FALSE(claim_description(ClaimTag::G3AllTwoNeighbors).empty());
}

} // namespace
} // namespace sec
