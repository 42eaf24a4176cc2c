#include <gtest/gtest.h>

#include "coarse_menger/construction.hpp"
#include "coarse_menger/dot.hpp"
#include "coarse_menger/families.hpp"
#include "coarse_menger/report.hpp"
#include "coarse_menger/solver.hpp"
#include "helpers.hpp"

using namespace coarse_menger;
using cmtest::graph_of;
using cmtest::set_of;

namespace {

int count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

}  // namespace

TEST(Report, Outcomes) {
  Instance inst = path_instance(999);
  auto [out, trace] = solve_k2(inst.graph, inst.s, inst.t);
  Json j = outcome_json(out, true);
  EXPECT_EQ(j["outcome"], "center");
  EXPECT_EQ(j["radius"], 161);
  EXPECT_EQ(j["verified"], true);
  EXPECT_EQ(j["stage"], out.stage);

  Instance two = double_corridor(400);
  Json k = outcome_json(solve_k2(two.graph, two.s, two.t).first, true);
  EXPECT_EQ(k["outcome"], "two_far_paths");
  EXPECT_EQ(k["paths"].size(), 2u);
  EXPECT_EQ(k["pairwise_distance"], -1);
}

TEST(Report, Distances) {
  EXPECT_EQ(distance_json(kInfinity), -1);
  EXPECT_EQ(distance_json(4), 4);
}

TEST(Report, TraceIsSerializable) {
  Instance inst = path_instance(999);
  auto trace = solve_k2(inst.graph, inst.s, inst.t).second;
  Json j = trace_json(trace);
  EXPECT_TRUE(j.contains("frame"));
  EXPECT_FALSE(j["log"].empty());
  EXPECT_EQ(Json::parse(j.dump()), j);
}

TEST(Report, GadgetLabels) {
  LabeledGadget g = build_counterexample(1);
  Json j = gadget_labels_json(g);
  EXPECT_EQ(j["vertex_count"], 99);
  EXPECT_EQ(j["depth"], 5);
  EXPECT_EQ(j["subdivision_len"], 3);
  EXPECT_EQ(j["z"].size(), g.z.size());
  EXPECT_EQ(j["s1"], g.s1);
}

TEST(Dot, Triangle) {
  Graph g = graph_of(3, {{0, 1}, {1, 2}, {0, 2}});
  const std::string dot = export_dot(g);
  EXPECT_EQ(dot.rfind("graph G {", 0), 0u);
  EXPECT_EQ(count(dot, " -- "), 3);
  EXPECT_LT(dot.find("0 -- 1"), dot.find("0 -- 2"));
  EXPECT_LT(dot.find("0 -- 2"), dot.find("1 -- 2"));
  EXPECT_EQ(dot, export_dot(g));
}

TEST(Dot, TerminalsAndHighlights) {
  Graph g = graph_of(4, {{0, 1}, {1, 2}, {2, 3}});
  DotOptions opt{set_of(4, {0}), set_of(4, {3}), VertexSet(4), {}};
  opt.highlights.push_back({Path{{0, 1}}, DotHighlight::Style::kBold, "blue"});
  opt.highlights.push_back({Path{{2, 3}}, DotHighlight::Style::kDashed, "red"});
  const std::string dot = export_dot(g, opt);
  EXPECT_NE(dot.find("0 [shape=box"), std::string::npos);
  EXPECT_NE(dot.find("3 [shape=diamond"), std::string::npos);
  EXPECT_NE(dot.find("0 -- 1 [style=bold"), std::string::npos);
  EXPECT_NE(dot.find("2 -- 3 [style=dashed"), std::string::npos);
  EXPECT_NE(dot.find("1 -- 2;"), std::string::npos);
}

TEST(Dot, CounterexampleTreePath) {
  LabeledGadget g = build_counterexample(1);
  Path tree = tree_path_s1_t2(g);
  const std::string dot = export_dot(g, {{tree, DotHighlight::Style::kBold, "blue"}});
  EXPECT_EQ(count(dot, "style=bold"), static_cast<int>(tree.length()));
  EXPECT_EQ(count(dot, " -- "), static_cast<int>(g.graph.edge_count()));
}
