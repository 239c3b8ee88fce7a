#include "sec/errors.hpp"
#include "sec/graph.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <numeric>

namespace sec {
namespace {

using test::cycle_graph;
using test::make_graph;

TEST(BuildGraph, EmptyInput) {
    const auto g = build_graph({});
    EXPECT_EQ(g.vertex_count(), 0u);
    EXPECT_EQ(g.edge_count(), 0u);
    EXPECT_TRUE(g.empty());
}

TEST(BuildGraph, ReversedDuplicateCollapses) {
    const std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs{{0, 1}, {1, 0}};
    const auto g = build_graph(pairs);
    ASSERT_EQ(g.edge_count(), 1u);
    EXPECT_EQ(g.edge(0), (Edge{0, 1}));
    EXPECT_EQ(g.degree(0), 1u);
    EXPECT_EQ(g.degree(1), 1u);
}

TEST(BuildGraph, SelfLoopRejected) {
    const std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs{{0, 0}};
    try {
        build_graph(pairs);
        FAIL() << "expected InputError";
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("self-loop"), std::string::npos);
    }
}

TEST(BuildGraph, SparseLabelsKeepSortedOrder) {
    const std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs{{100, 7}, {7, 42}};
    const std::vector<std::uint64_t> extra{3};
    const auto g = build_graph(pairs, extra);
    ASSERT_EQ(g.vertex_count(), 4u);
    EXPECT_EQ(g.label(0), 3u);
    EXPECT_EQ(g.label(1), 7u);
    EXPECT_EQ(g.label(2), 42u);
    EXPECT_EQ(g.label(3), 100u);
    EXPECT_EQ(g.degree(0), 0u);
    EXPECT_TRUE(g.adjacent(1, 3));
    EXPECT_TRUE(g.adjacent(1, 2));
}

TEST(FromDense, EndpointOutOfRange) {
    const std::vector<VertexPair> pairs{{0, 5}};
    EXPECT_THROW(Graph::from_dense(3, pairs), InputError);
}

TEST(Graph, NeighborsParallelToIncidentEdges) {
    const auto g = test::petersen_graph();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        ASSERT_EQ(g.neighbors(v).size(), g.incident_edges(v).size());
        for (std::size_t i = 0; i < g.degree(v); ++i) {
            const auto& e = g.edge(g.incident_edges(v)[i]);
            EXPECT_TRUE(e.has(v));
            EXPECT_EQ(e.other(v), g.neighbors(v)[i]);
        }
    }
}

TEST(Graph, WithoutVertexMapsBack) {
    const auto g = cycle_graph(5);
    const auto s = g.without_vertex(2);
    EXPECT_EQ(s.graph.vertex_count(), 4u);
    EXPECT_EQ(s.graph.edge_count(), 3u);
    EXPECT_EQ(s.vertex_origin, (std::vector<VertexId>{0, 1, 3, 4}));
    for (EdgeId e = 0; e < s.graph.edge_count(); ++e) {
        const auto& local = s.graph.edge(e);
        const auto& orig = g.edge(s.edge_origin[e]);
        EXPECT_EQ(orig, (Edge{s.vertex_origin[local.u], s.vertex_origin[local.v]}));
    }
}

TEST(DegreeClass, SubdividedStarCenterIsFourFour) {
    const auto g = test::subdivide_all(test::star_graph(4));
    const auto dc = degree_class(g, 0);
    EXPECT_TRUE(dc.is(4, 4));
}

TEST(DegreeClass, PathMiddle) {
    const auto g = test::path_graph(3);
    const auto dc = degree_class(g, 1);
    EXPECT_TRUE(dc.is(2, 0));
    EXPECT_EQ(dc.one_neighbors, 2u);
}

TEST(DegreeClass, CycleVertex) {
    const auto g = cycle_graph(5);
    for (VertexId v = 0; v < 5; ++v) {
        EXPECT_TRUE(degree_class(g, v).is(2, 2));
    }
}

TEST(DegreeClass, UnknownVertexRejected) {
    const auto g = cycle_graph(5);
    EXPECT_ANY_THROW(degree_class(g, 9));
}

TEST(DegreeClass, MaxDegreeNeighborsUseReference) {
    const auto g = test::star_graph(3);
    EXPECT_EQ(degree_class(g, 1).max_degree_neighbors, 1u);
    EXPECT_EQ(degree_class(g, 1, 4).max_degree_neighbors, 0u);
}

TEST(Girth, Cycle7) { EXPECT_EQ(girth(cycle_graph(7)), 7u); }

TEST(Girth, TreeIsInfinite) {
    EXPECT_EQ(girth(test::path_graph(6)), kInfiniteGirth);
    EXPECT_EQ(girth(test::star_graph(4)), kInfiniteGirth);
    EXPECT_EQ(girth(Graph{}), kInfiniteGirth);
}

TEST(Girth, Petersen) { EXPECT_EQ(girth(test::petersen_graph()), 5u); }
TEST(Girth, McGee) { EXPECT_EQ(girth(test::mcgee_graph()), 7u); }
TEST(Girth, Cube) { EXPECT_EQ(girth(test::cube_graph()), 4u); }
TEST(Girth, Triangle) { EXPECT_EQ(girth(test::complete_graph(4)), 3u); }

TEST(Components, SplitsAndSorts) {
    const auto g = make_graph(6, {{4, 5}, {0, 2}, {2, 3}});
    const auto cs = connected_components(g);
    ASSERT_EQ(cs.size(), 3u);
    EXPECT_EQ(cs[0], (std::vector<VertexId>{0, 2, 3}));
    EXPECT_EQ(cs[1], (std::vector<VertexId>{1}));
    EXPECT_EQ(cs[2], (std::vector<VertexId>{4, 5}));
    EXPECT_FALSE(is_connected(g));
    EXPECT_TRUE(is_connected(cycle_graph(4)));
}

TEST(Graph, HandshakeOnNamedGraphs) {
    for (const auto& g : {test::petersen_graph(), test::mcgee_graph(), test::cube_graph(),
                          test::complete_graph(5), test::path_graph(9)}) {
        std::size_t sum = 0;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            sum += g.degree(v);
        }
        EXPECT_EQ(sum, 2 * g.edge_count());
    }
}

} // namespace
} // namespace sec
