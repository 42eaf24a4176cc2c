#include <gtest/gtest.h>

#include "coarse_menger/distance.hpp"
#include "coarse_menger/families.hpp"

using namespace coarse_menger;

TEST(Families, Deterministic) {
  auto a = solver_fuzz_corpus(33, 5);
  auto b = solver_fuzz_corpus(33, 5);
  ASSERT_EQ(a.size(), 33u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_EQ(a[i].instance.graph, b[i].instance.graph);
  }
}

TEST(Families, TerminalsValid) {
  for (const auto& named : solver_fuzz_corpus(44, 11)) {
    const Instance& inst = named.instance;
    EXPECT_FALSE(inst.s.empty()) << named.name;
    EXPECT_FALSE(inst.t.empty()) << named.name;
    EXPECT_EQ(inst.s.universe(), inst.graph.vertex_count()) << named.name;
  }
}

TEST(Families, DoubleCorridorDistance) {
  Instance disjoint = double_corridor(50);
  EXPECT_EQ(disjoint.graph.vertex_count(), 102);
  EXPECT_EQ(set_distance(disjoint.graph, disjoint.s.members(), std::vector<Vertex>{disjoint.s.members()[1]}), 0);
  Instance joined = double_corridor(50, 7, 25);
  const auto top = std::vector<Vertex>{joined.s.members()[0]};
  const auto bottom = std::vector<Vertex>{joined.s.members()[1]};
  EXPECT_EQ(set_distance(joined.graph, top, bottom), 7);
}

TEST(Families, BraidShape) {
  BraidOptions opt;
  opt.pendants = 3;
  Instance inst = braid_instance(opt, 4);
  auto backbone = shortest_path(inst.graph, inst.s, inst.t);
  ASSERT_TRUE(backbone);
  EXPECT_GE(backbone->length(), static_cast<std::size_t>(opt.backbone) - 2 * opt.height_max);
}

TEST(Families, GridAndCycle) {
  Instance grid = grid_instance(3, 5);
  EXPECT_EQ(grid.graph.edge_count(), 3u * 4 + 2u * 5);
  EXPECT_EQ(grid.s.size(), 3u);
  Instance cyc = cycle_instance(20);
  EXPECT_EQ(cyc.graph.edge_count(), 20u);
  EXPECT_EQ(cyc.s.members(), (std::vector<Vertex>{0, 10}));
  EXPECT_EQ(cyc.t.members(), (std::vector<Vertex>{5, 15}));
}
