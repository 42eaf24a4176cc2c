#include <gtest/gtest.h>

#include <set>

#include "coarse_menger/checks/reference.hpp"
#include "coarse_menger/construction.hpp"
#include "coarse_menger/distance.hpp"
#include "coarse_menger/families.hpp"
#include "coarse_menger/oracle.hpp"
#include "coarse_menger/solver.hpp"
#include "helpers.hpp"

using namespace coarse_menger;
using cmtest::graph_of;
using cmtest::set_of;

namespace {

void expect_valid(const Instance& inst, const SolverOutcome& out, Distance radius = 161) {
  EXPECT_FALSE(verify_outcome(inst.graph, inst.s, inst.t, out, 3, radius));
}

// Braids that run all the way to assembly, with and without Y joints.
std::vector<std::pair<Instance, SolverTrace>> assembled_braids(double y_prob, int wanted) {
  std::vector<std::pair<Instance, SolverTrace>> out;
  BraidOptions opt;
  opt.y_joint_prob = y_prob;
  for (std::uint64_t seed = 1; seed <= 40 && static_cast<int>(out.size()) < wanted; ++seed) {
    Instance inst = braid_instance(opt, seed);
    auto [outcome, trace] = solve_k2(inst.graph, inst.s, inst.t);
    if (outcome.stage == "assembly") out.emplace_back(std::move(inst), std::move(trace));
  }
  return out;
}

}  // namespace

TEST(Solver, ConfigValidation) {
  SolverConfig cfg;
  EXPECT_EQ(cfg.radius(), 161);
  EXPECT_NO_THROW(cfg.validate());
  cfg.c = 6;
  EXPECT_THROW(cfg.validate(), SolverError);
  cfg.c = 7;
  cfg.ell = 18;
  EXPECT_THROW(cfg.validate(), SolverError);
  cfg.ell = 20;
  EXPECT_EQ(cfg.radius(), 169);
}

TEST(Solver, LongPathGivesFirstVertexCenter) {
  Instance inst = path_instance(999);
  auto [out, trace] = solve_k2(inst.graph, inst.s, inst.t);
  ASSERT_EQ(out.kind, SolverOutcome::Kind::kCenter);
  EXPECT_EQ(out.center, trace.frame->r(1));
  EXPECT_EQ(out.radius, 161);
  expect_valid(inst, out);
}

TEST(Solver, DisjointCorridors) {
  Instance inst = double_corridor(400);
  auto [out, trace] = solve_k2(inst.graph, inst.s, inst.t);
  ASSERT_EQ(out.kind, SolverOutcome::Kind::kTwoFarPaths);
  EXPECT_EQ(set_distance(inst.graph, out.first.vertices, out.second.vertices), kInfinity);
  expect_valid(inst, out);
}

TEST(Solver, Counterexample) {
  Instance inst = build_counterexample(1).instance();
  auto [out, trace] = solve_k2(inst.graph, inst.s, inst.t);
  ASSERT_EQ(out.kind, SolverOutcome::Kind::kTwoFarPaths);
  EXPECT_GE(set_distance(inst.graph, out.first.vertices, out.second.vertices), 3);
}

TEST(Solver, StarAndNoPath) {
  Graph star = graph_of(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  auto [out, trace] = solve_k2(star, set_of(5, {1}), set_of(5, {3}));
  ASSERT_EQ(out.kind, SolverOutcome::Kind::kCenter);
  EXPECT_EQ(out.center, 1);

  Graph split = graph_of(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(solve_k2(split, set_of(4, {0}), set_of(4, {3})).first.kind, SolverOutcome::Kind::kNoPath);
}

TEST(Solver, CycleArcs) {
  Instance small = cycle_instance(60);
  expect_valid(small, solve_k2(small.graph, small.s, small.t).first);
  Instance inst = cycle_instance(1400);
  auto [out, trace] = solve_k2(inst.graph, inst.s, inst.t);
  ASSERT_EQ(out.kind, SolverOutcome::Kind::kTwoFarPaths);
  expect_valid(inst, out);
}

TEST(Solver, SingleCorridorCertifyStage) {
  // Long enough that both guards pass, with nothing outside W.
  Instance inst = path_instance(800);
  SolverConfig cfg;
  auto backbone = shortest_path(inst.graph, inst.s, inst.t);
  ASSERT_TRUE(backbone);
  Frame frame = build_frame(inst.graph, inst.s, inst.t, *backbone, cfg);
  EXPECT_EQ(frame.n, 802);
  EXPECT_TRUE(component_intervals(inst.graph, frame).empty());
  auto out = certify_powerful_or_center(inst.graph, inst.s, inst.t, frame, {}, cfg);
  ASSERT_TRUE(out);
  EXPECT_EQ(out->kind, SolverOutcome::Kind::kCenter);
  expect_valid(inst, *out);
}

TEST(Solver, AssemblyOnBraids) {
  auto runs = assembled_braids(0.0, 3);
  ASSERT_FALSE(runs.empty());
  for (const auto& [inst, trace] : runs) {
    ASSERT_TRUE(trace.pieces);
    EXPECT_TRUE(is_st_path(inst.graph, inst.s, inst.t, trace.pieces->odd));
    EXPECT_TRUE(is_st_path(inst.graph, inst.s, inst.t, trace.pieces->even));
    EXPECT_GE(set_distance(inst.graph, trace.pieces->odd.vertices, trace.pieces->even.vertices), 3);
    EXPECT_TRUE(check_trace_claims(inst.graph, trace, SolverConfig{}).empty());
    EXPECT_EQ(trace.pieces->a.size(), trace.selected_supercomponents.size());
    EXPECT_EQ(trace.pieces->segments.size(), trace.selected_supercomponents.size());
  }
}

TEST(Solver, JointsMatchReference) {
  // First corpus instances whose assembly found joints, one of each braid kind.
  SolverConfig cfg;
  std::set<std::string> kinds;
  for (const auto& [name, inst] : solver_fuzz_corpus(200, 20261018)) {
    const std::string kind = name.substr(0, name.find('#'));
    if (kind != "braid_joints" && kind != "braid_tripods") continue;
    if (kinds.count(kind)) continue;
    auto [out, trace] = solve_k2(inst.graph, inst.s, inst.t);
    if (out.stage != "assembly" || trace.joints.empty()) continue;
    kinds.insert(kind);
    const VertexSet slow = reference::joints_union(inst.graph, *trace.frame, trace.components, trace.selected_components);
    EXPECT_EQ(trace.joints.members(), slow.members()) << name;
  }
  EXPECT_EQ(kinds.size(), 2u);
}

TEST(Solver, WorkersAgree) {
  for (const auto& named : solver_fuzz_corpus(22, 99)) {
    const Instance& inst = named.instance;
    SolverConfig one, three;
    three.workers = 3;
    auto a = solve_k2(inst.graph, inst.s, inst.t, one).first;
    auto b = solve_k2(inst.graph, inst.s, inst.t, three).first;
    EXPECT_EQ(a.kind, b.kind) << named.name;
    EXPECT_EQ(a.first, b.first) << named.name;
    EXPECT_EQ(a.second, b.second) << named.name;
    EXPECT_EQ(a.center, b.center) << named.name;
  }
}

TEST(Solver, VerifyOutcomeRejectsBadClaims) {
  Instance inst = double_corridor(400, 2, 50);
  SolverOutcome close = SolverOutcome::two_paths(inst.graph, Path{{0}}, Path{{1}}, "test");
  EXPECT_TRUE(verify_outcome(inst.graph, inst.s, inst.t, close, 3, 161));
  SolverOutcome center = SolverOutcome::center_at(226, 1, "test");
  EXPECT_TRUE(verify_outcome(inst.graph, inst.s, inst.t, center, 3, 1));
}

TEST(Solver, GeneralCorridors) {
  Instance near = double_corridor(400, 7, 50);
  GeneralOutcome close = solve_general(near.graph, near.s, near.t, 6);
  EXPECT_TRUE(close.verified) << close.failure;

  Instance far = double_corridor(400, 13, 50);
  GeneralOutcome res = solve_general(far.graph, far.s, far.t, 6);
  EXPECT_TRUE(res.verified) << res.failure;
  ASSERT_EQ(res.outcome.kind, SolverOutcome::Kind::kTwoFarPaths);
  EXPECT_GE(set_distance(far.graph, res.outcome.first.vertices, res.outcome.second.vertices), 6);

  Instance line = path_instance(1500);
  GeneralOutcome single = solve_general(line.graph, line.s, line.t, 6);
  EXPECT_TRUE(single.verified) << single.failure;
  ASSERT_EQ(single.outcome.kind, SolverOutcome::Kind::kCenter);
  EXPECT_LE(single.outcome.radius, 6 * 161);
}
