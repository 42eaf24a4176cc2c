#include <gtest/gtest.h>

#include "coarse_menger/construction.hpp"
#include "coarse_menger/distance.hpp"

using namespace coarse_menger;

TEST(Construction, GadgetDepthSix) {
  LabeledGadget g = build_gadget(6);
  EXPECT_EQ(g.graph.vertex_count(), 65);
  EXPECT_EQ(g.z.size(), 34u);
  ASSERT_EQ(g.m_order.size(), 34u);
  EXPECT_EQ(g.m_order.front(), g.s1);
  EXPECT_EQ(g.m_order.back(), g.t2);
  EXPECT_EQ(g.m_order[1], g.s2);
  EXPECT_EQ(g.m_order[32], g.t1);
  for (std::size_t i = 0; i + 1 < g.m_order.size(); ++i) EXPECT_TRUE(g.graph.adjacent(g.m_order[i], g.m_order[i + 1]));
  EXPECT_EQ(g.s.members(), (std::vector<Vertex>{std::min(g.s1, g.s2), std::max(g.s1, g.s2)}));
  EXPECT_EQ(g.tree_parent[g.s2], -1);
  EXPECT_EQ(g.tree_parent[g.t1], -1);
  EXPECT_EQ(g.graph.degree(g.s2), 2);
  EXPECT_EQ(g.graph.degree(g.t1), 2);
}

TEST(Construction, GadgetDepthTwo) {
  LabeledGadget g = build_gadget(2);
  EXPECT_EQ(g.graph.vertex_count(), 5);
  EXPECT_EQ(g.z.size(), 4u);
  EXPECT_EQ(tree_path_s1_t2(g).vertices, (std::vector<Vertex>{g.s1, g.root, g.t2}));
}

TEST(Construction, BadDepth) {
  EXPECT_THROW(build_gadget(1), ConstructionError);
  EXPECT_THROW(build_gadget(25), ConstructionError);
}

TEST(Construction, TreePath) {
  LabeledGadget g = build_gadget(6);
  Path p = tree_path_s1_t2(g);
  EXPECT_EQ(p.vertices.size(), 11u);
  EXPECT_EQ(p.vertices[5], g.root);
  EXPECT_TRUE(is_valid_path(g.graph, p));
  auto dist = distances_from(g.graph, std::vector<Vertex>{g.s1});
  EXPECT_EQ(dist[g.root], 5);
}

TEST(Construction, CounterexampleCounts) {
  LabeledGadget one = build_counterexample(1);
  EXPECT_EQ(one.spec.depth, 5);
  EXPECT_EQ(one.spec.subdivision_len, 3);
  EXPECT_EQ(one.graph.vertex_count(), 99);
  EXPECT_EQ(one.graph.max_degree(), 3);
  LabeledGadget two = build_counterexample(2);
  EXPECT_EQ(two.graph.vertex_count(), 645);
  EXPECT_EQ(two.graph.max_degree(), 3);
  EXPECT_EQ(build_counterexample(3).graph.max_degree(), 3);
}

TEST(Construction, CounterexampleLabels) {
  LabeledGadget g = build_counterexample(1);
  auto sorted = [](std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  EXPECT_EQ(g.s.members(), sorted({g.root, g.s1, g.s2}));
  EXPECT_EQ(g.t.members(), sorted({g.root, g.t1, g.t2}));
  // Every edge meeting Z got subdivided: Z vertices are pairwise >= L apart.
  auto dist = distances_from(g.graph, std::vector<Vertex>{g.s1});
  EXPECT_EQ(dist[g.s2], 3);
  Path tree = tree_path_s1_t2(g);
  EXPECT_TRUE(is_valid_path(g.graph, tree));
  EXPECT_EQ(tree.vertices.size(), 13u);
  Path bottom = bottom_path(g);
  EXPECT_TRUE(is_valid_path(g.graph, bottom));
  EXPECT_EQ(bottom.front(), g.s1);
  EXPECT_EQ(bottom.back(), g.t2);
}

TEST(Construction, CounterexampleOverrides) {
  EXPECT_THROW(build_counterexample(0), ConstructionError);
  EXPECT_THROW(build_counterexample(1, 4), ConstructionError);
  EXPECT_THROW(build_counterexample(1, std::nullopt, 2), ConstructionError);
  LabeledGadget weak = build_counterexample(1, 4, 2, true);
  EXPECT_EQ(weak.graph.vertex_count(), 2 * 17);
}

TEST(Construction, Replicate) {
  Instance one = build_counterexample(1).instance();
  Instance three = replicate(one, 3);
  EXPECT_EQ(three.graph.vertex_count(), 3 * 99);
  EXPECT_EQ(three.graph.edge_count(), 3 * one.graph.edge_count());
  EXPECT_EQ(three.s.size(), 3 * one.s.size());
}
