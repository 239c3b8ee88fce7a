#include "sec/conflict.hpp"
#include "sec/errors.hpp"
#include "sec/generate.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

namespace sec {
namespace {

EdgeId id(const Graph& g, VertexId a, VertexId b) { return *g.find_edge(a, b); }

TEST(WithinDistanceTwo, PathFourFromEnd) {
    const auto g = test::path_graph(4);
    EXPECT_EQ(edges_within_distance_two(g, id(g, 0, 1)),
              (std::vector<EdgeId>{id(g, 1, 2), id(g, 2, 3)}));
}

TEST(WithinDistanceTwo, CycleFiveSeesEverything) {
    const auto g = test::cycle_graph(5);
    for (EdgeId e = 0; e < 5; ++e) {
        EXPECT_EQ(edges_within_distance_two(g, e).size(), 4u);
    }
}

TEST(WithinDistanceTwo, PathFiveExcludesFarEdge) {
    const auto g = test::path_graph(5);
    EXPECT_EQ(edges_within_distance_two(g, id(g, 0, 1)),
              (std::vector<EdgeId>{id(g, 1, 2), id(g, 2, 3)}));
}

TEST(WithinDistanceTwo, UnknownEdgeRejected) {
    EXPECT_THROW(edges_within_distance_two(test::path_graph(3), 7), InputError);
}

TEST(ConflictGraph, CycleFiveIsComplete) {
    const auto h = conflict_graph(test::cycle_graph(5));
    EXPECT_EQ(h.vertex_count(), 5u);
    EXPECT_EQ(h.edge_count(), 10u);
}

TEST(ConflictGraph, SingleEdge) {
    const auto h = conflict_graph(test::path_graph(2));
    EXPECT_EQ(h.vertex_count(), 1u);
    EXPECT_EQ(h.edge_count(), 0u);
}

TEST(ConflictGraph, BlowupIsK20) {
    const auto inst = generate({.family = Family::C5Blowup, .max_degree = 4});
    const auto& g = inst.graph;
    ASSERT_EQ(g.edge_count(), 20u);
    const auto h = conflict_graph(g);
    EXPECT_EQ(h.edge_count(), 190u);
    // Independent check of every pair.
    for (EdgeId a = 0; a < 20; ++a) {
        for (EdgeId b = a + 1; b < 20; ++b) {
            EXPECT_TRUE(test::edges_conflict_naive(g, a, b));
        }
    }
}

TEST(ColoredConflicts, EmptyPartial) {
    const auto g = test::cycle_graph(5);
    const ConflictIndex idx(g);
    const auto r = colored_conflicts(idx, 0, PartialColoring(5));
    EXPECT_EQ(r.count, 0u);
    EXPECT_TRUE(r.colors.empty());
}

TEST(ColoredConflicts, PathFourSameColorTwice) {
    const auto g = test::path_graph(4);
    const ConflictIndex idx(g);
    PartialColoring c(3);
    c.assign(id(g, 1, 2), 1);
    c.assign(id(g, 2, 3), 1);
    const auto r = colored_conflicts(idx, id(g, 0, 1), c);
    EXPECT_EQ(r.count, 2u);
    EXPECT_EQ(r.colors, (std::vector<Color>{1}));
}

TEST(ColoredConflicts, CycleFiveFourColors) {
    const auto g = test::cycle_graph(5);
    const ConflictIndex idx(g);
    PartialColoring c(5);
    for (EdgeId e = 1; e < 5; ++e) {
        c.assign(e, e);
    }
    const auto r = colored_conflicts(idx, 0, c);
    EXPECT_EQ(r.count, 4u);
    EXPECT_EQ(r.colors, (std::vector<Color>{1, 2, 3, 4}));
}

TEST(ConflictIndex, MatchesNaiveDefinitionOnRandomGraphs) {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 200; ++round) {
        const auto g = test::random_graph(rng, 3 + round % 6, 0.45);
        const ConflictIndex idx(g);
        for (EdgeId a = 0; a < g.edge_count(); ++a) {
            for (EdgeId b = 0; b < g.edge_count(); ++b) {
                EXPECT_EQ(idx.conflicting(a, b), test::edges_conflict_naive(g, a, b));
            }
        }
    }
}

} // namespace
} // namespace sec
