#include <gtest/gtest.h>

#include <random>

#include "coarse_menger/checks/reference.hpp"
#include "coarse_menger/distance.hpp"
#include "coarse_menger/families.hpp"
#include "helpers.hpp"

using namespace coarse_menger;
using cmtest::graph_of;
using cmtest::path_graph;
using cmtest::set_of;

namespace {

std::vector<Vertex> vs(std::initializer_list<Vertex> list) { return list; }

}  // namespace

TEST(Distance, PathMetric) {
  Graph g = path_graph(5);
  EXPECT_EQ(distances_from(g, vs({0})), (std::vector<Distance>{0, 1, 2, 3, 4}));
  EXPECT_EQ(distances_from(g, vs({0, 4})), (std::vector<Distance>{0, 1, 2, 1, 0}));
}

TEST(Distance, Disconnected) {
  Graph g = graph_of(4, {{0, 1}, {2, 3}});
  auto d = distances_from(g, vs({0}));
  EXPECT_EQ(d[1], 1);
  EXPECT_EQ(d[2], kInfinity);
  EXPECT_EQ(set_distance(g, vs({0}), vs({3})), kInfinity);
}

TEST(Distance, SetDistance) {
  Graph g = path_graph(11);
  EXPECT_EQ(set_distance(g, vs({3, 4}), vs({4, 9})), 0);
  EXPECT_EQ(set_distance(g, vs({0}), vs({7})), 7);
  EXPECT_THROW(distances_from(g, vs({})), GraphError);
}

TEST(Distance, Ball) {
  Graph g = path_graph(11);
  EXPECT_EQ(ball(g, vs({5}), 0).members(), vs({5}));
  EXPECT_EQ(ball(g, vs({5}), 2).members(), vs({3, 4, 5, 6, 7}));
  EXPECT_EQ(ball(g, vs({5}), 10).size(), 11u);
  EXPECT_THROW(ball(g, vs({5}), -1), GraphError);
}

TEST(Distance, ShortestPath) {
  Graph g = path_graph(5);
  auto p = shortest_path(g, set_of(5, {0}), set_of(5, {4}));
  ASSERT_TRUE(p);
  EXPECT_EQ(p->vertices, vs({0, 1, 2, 3, 4}));
  EXPECT_FALSE(shortest_path(g, set_of(5, {0}), set_of(5, {4}), set_of(5, {2})));
  auto shared = shortest_path(g, set_of(5, {1, 2}), set_of(5, {2, 3}));
  ASSERT_TRUE(shared);
  EXPECT_EQ(shared->vertices, vs({2}));
}

TEST(Distance, ShortestPathLexicographic) {
  // 4-cycle 0-1-3-2-0: both 0-1-3 and 0-2-3 are shortest; the smaller ids win.
  Graph g = graph_of(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}});
  auto p = shortest_path(g, set_of(4, {0}), set_of(4, {3}));
  ASSERT_TRUE(p);
  EXPECT_EQ(p->vertices, vs({0, 1, 3}));
}

TEST(Distance, ComponentsExcluding) {
  Graph g = path_graph(5);
  auto whole = components_excluding(g, VertexSet(5));
  ASSERT_EQ(whole.size(), 1u);
  EXPECT_EQ(whole[0].size(), 5u);
  EXPECT_TRUE(components_excluding(g, VertexSet::all(5)).empty());
  auto split = components_excluding(g, set_of(5, {2}));
  ASSERT_EQ(split.size(), 2u);
  EXPECT_EQ(split[0].members(), vs({0, 1}));
  EXPECT_EQ(split[1].members(), vs({3, 4}));
}

TEST(Distance, Boundary) {
  Graph g = path_graph(5);
  VertexSet comp = set_of(5, {0, 1});
  EXPECT_EQ(boundary(g, comp, set_of(5, {2, 3, 4})).members(), vs({2}));
}

TEST(Distance, Power) {
  Graph g = path_graph(5);
  EXPECT_EQ(power(g, 1), g);
  EXPECT_EQ(power(g, 2).edge_count(), 7u);
  EXPECT_EQ(power(g, 4).edge_count(), 10u);
  EXPECT_THROW(power(g, 0), GraphError);
}

TEST(Distance, MatchesReferenceOnRandomGraphs) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Instance inst = random_sparse(30, static_cast<int>(seed % 7), seed);
    const Graph& g = inst.graph;
    const auto ref = reference::all_pairs(g);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      const auto d = distances_from(g, std::vector<Vertex>{v});
      for (Vertex w = 0; w < g.vertex_count(); ++w) {
        const Distance expect = ref[v][w] < 0 ? kInfinity : ref[v][w];
        ASSERT_EQ(d[w], expect) << "seed " << seed;
      }
    }
    for (int p = 2; p <= 4; ++p) {
      Graph gp = power(g, p);
      for (auto [u, w] : gp.edges()) ASSERT_TRUE(ref[u][w] >= 1 && ref[u][w] <= p);
      std::size_t count = 0;
      for (Vertex u = 0; u < g.vertex_count(); ++u) {
        for (Vertex w = u + 1; w < g.vertex_count(); ++w) count += ref[u][w] >= 1 && ref[u][w] <= p;
      }
      ASSERT_EQ(gp.edge_count(), count);
    }
  }
}
