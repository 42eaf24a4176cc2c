#include <gtest/gtest.h>

#include <sstream>

#include "coarse_menger/construction.hpp"
#include "coarse_menger/families.hpp"
#include "coarse_menger/graph_io.hpp"

using namespace coarse_menger;

namespace {

Instance parse(const std::string& text) {
  std::istringstream in(text);
  return read_instance(in);
}

int error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const InputFormatError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST(GraphIo, ParsesCommentsAndTerminals) {
  Instance inst = parse("# tiny\np 3 2\ne 0 1  # first\ne 1 2\ns 0\nt 2\n");
  EXPECT_EQ(inst.graph.vertex_count(), 3);
  EXPECT_EQ(inst.graph.edge_count(), 2u);
  EXPECT_EQ(inst.s.members(), std::vector<Vertex>{0});
  EXPECT_EQ(inst.t.members(), std::vector<Vertex>{2});
}

TEST(GraphIo, CanonicalOutput) {
  Instance inst = parse("p 3 2\ne 2 1\ne 1 0\nt 2\ns 0\n");
  EXPECT_EQ(to_text(inst), "p 3 2\ne 0 1\ne 1 2\ns 0\nt 2\n");
}

TEST(GraphIo, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("e 0 1\n"), 1);
  EXPECT_EQ(error_line("p 2 1\ne 0 5\n"), 2);
  EXPECT_EQ(error_line("p 2 1\ne 0 x\n"), 2);
  EXPECT_EQ(error_line("p 2 1\ne 1 1\n"), 2);
  EXPECT_EQ(error_line("p 2 1\np 2 1\n"), 2);
  EXPECT_EQ(error_line("p 3 1\ne 0 1\nq 1\n"), 3);
  EXPECT_GT(error_line("p 3 2\ne 0 1\n"), 0);
  EXPECT_GT(error_line("p 2 2\ne 0 1\ne 1 0\n"), 0);
  EXPECT_THROW(parse(""), InputFormatError);
}

TEST(GraphIo, RoundTripIsByteIdentical) {
  std::vector<Instance> cases{build_counterexample(1).instance(), build_gadget(6).instance(), grid_instance(4, 7),
                              double_corridor(30, 5, 10)};
  for (std::uint64_t seed = 1; seed <= 20; ++seed) cases.push_back(random_sparse(40, 10, seed));
  for (const auto& inst : cases) {
    const std::string text = to_text(inst);
    const Instance back = parse(text);
    EXPECT_EQ(back.graph, inst.graph);
    EXPECT_EQ(back.s, inst.s);
    EXPECT_EQ(back.t, inst.t);
    EXPECT_EQ(to_text(back), text);
  }
}

TEST(GraphIo, MissingFile) { EXPECT_THROW(read_instance_file("/nonexistent/graph.txt"), std::runtime_error); }
