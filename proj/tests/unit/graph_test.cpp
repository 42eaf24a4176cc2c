#include <gtest/gtest.h>

#include "coarse_menger/graph.hpp"
#include "helpers.hpp"

using namespace coarse_menger;
using cmtest::graph_of;
using cmtest::path_graph;
using cmtest::set_of;

TEST(Graph, Triangle) {
  Graph g = graph_of(3, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_EQ(g.vertex_count(), 3);
  EXPECT_EQ(g.edge_count(), 3u);
  for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(g.degree(v), 2);
}

TEST(Graph, PathDegrees) {
  Graph g = path_graph(5);
  std::vector<int> degrees;
  for (Vertex v = 0; v < 5; ++v) degrees.push_back(g.degree(v));
  EXPECT_EQ(degrees, (std::vector<int>{1, 2, 2, 2, 1}));
  EXPECT_EQ(g.max_degree(), 2);
}

TEST(Graph, RejectsBadEdges) {
  try {
    graph_of(2, {{0, 0}});
    FAIL() << "self loop accepted";
  } catch (const GraphError& e) {
    EXPECT_EQ(e.kind(), GraphError::Kind::kSelfLoop);
  }
  try {
    graph_of(3, {{0, 1}, {1, 0}});
    FAIL() << "duplicate accepted";
  } catch (const GraphError& e) {
    EXPECT_EQ(e.kind(), GraphError::Kind::kDuplicateEdge);
  }
  try {
    graph_of(2, {{0, 2}});
    FAIL() << "out of range accepted";
  } catch (const GraphError& e) {
    EXPECT_EQ(e.kind(), GraphError::Kind::kVertexOutOfRange);
  }
}

TEST(Graph, NonStrictDropsDuplicates) {
  std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}, {1, 0}, {1, 2}};
  Graph g = build_graph(3, edges, false);
  EXPECT_EQ(g.edge_count(), 2u);
}

TEST(Graph, NeighborsSortedAndAdjacency) {
  Graph g = graph_of(4, {{0, 3}, {0, 1}, {0, 2}});
  auto nb = g.neighbors(0);
  EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
  EXPECT_TRUE(g.adjacent(3, 0));
  EXPECT_FALSE(g.adjacent(1, 2));
}

TEST(VertexSet, Operations) {
  VertexSet a = set_of(6, {4, 1, 1});
  EXPECT_EQ(a.members(), (std::vector<Vertex>{1, 4}));
  EXPECT_TRUE(a.contains(4));
  EXPECT_FALSE(a.contains(7));
  EXPECT_EQ(a.complement().members(), (std::vector<Vertex>{0, 2, 3, 5}));
  VertexSet b = set_of(6, {2, 4});
  EXPECT_EQ(a.united(b).members(), (std::vector<Vertex>{1, 2, 4}));
  EXPECT_TRUE(a.intersects(b));
  EXPECT_FALSE(a.intersects(set_of(6, {0})));
  EXPECT_THROW(set_of(3, {3}), GraphError);
}

TEST(Path, Validity) {
  Graph g = path_graph(4);
  EXPECT_TRUE(is_valid_path(g, Path{{0, 1, 2}}));
  EXPECT_FALSE(is_valid_path(g, Path{{0, 2}}));
  EXPECT_FALSE(is_valid_path(g, Path{{0, 1, 0}}));
  EXPECT_FALSE(is_valid_path(g, Path{}));
  EXPECT_TRUE(is_st_path(g, set_of(4, {0}), set_of(4, {3}), Path{{0, 1, 2, 3}}));
  EXPECT_FALSE(is_st_path(g, set_of(4, {0}), set_of(4, {3}), Path{{1, 2, 3}}));
}
