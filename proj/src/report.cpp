#include "coarse_menger/report.hpp"

namespace coarse_menger {

Json distance_json(Distance d) { return d == kInfinity ? Json(-1) : Json(d); }

Json path_json(const Path& p) { return Json(p.vertices); }

Json set_json(const VertexSet& s) { return Json(s.members()); }

Json family_json(const IntervalFamily& f) {
  Json out = Json::array();
  for (const Interval& iv : f.items()) out.push_back({iv.a, iv.b});
  return out;
}

namespace {

Json interval_json(const Interval& iv) { return Json::array({iv.a, iv.b}); }

Json distances_json(const std::vector<Distance>& ds) {
  Json out = Json::array();
  for (Distance d : ds) out.push_back(distance_json(d));
  return out;
}

Json paths_json(const std::vector<Path>& ps) {
  Json out = Json::array();
  for (const Path& p : ps) out.push_back(path_json(p));
  return out;
}

}  // namespace

Json outcome_json(const SolverOutcome& outcome, bool verified) {
  Json out;
  switch (outcome.kind) {
    case SolverOutcome::Kind::kTwoFarPaths:
      out["outcome"] = "two_far_paths";
      out["paths"] = Json::array({path_json(outcome.first), path_json(outcome.second)});
      out["pairwise_distance"] = distance_json(outcome.pairwise_distance);
      break;
    case SolverOutcome::Kind::kCenter:
      out["outcome"] = "center";
      out["vertex"] = outcome.center;
      out["radius"] = outcome.radius;
      break;
    case SolverOutcome::Kind::kNoPath:
      out["outcome"] = "no_path";
      break;
  }
  out["verified"] = verified;
  out["stage"] = outcome.stage;
  return out;
}

Json trace_json(const SolverTrace& trace) {
  Json out;
  if (trace.frame) {
    const Frame& f = *trace.frame;
    out["frame"] = {{"backbone", path_json(f.backbone)},
                    {"n", f.n},
                    {"scope", set_json(f.scope)},
                    {"w", set_json(f.w)},
                    {"surface", set_json(f.surface)},
                    {"to_backbone", distances_json(f.to_backbone)},
                    {"to_surface", distances_json(f.to_surface)},
                    {"a", f.a},
                    {"b", f.b}};
  } else {
    out["frame"] = nullptr;
  }
  Json comps = Json::array();
  for (const auto& c : trace.components) {
    comps.push_back({{"vertices", set_json(c.vertices)}, {"boundary", set_json(c.boundary)}, {"interval", interval_json(c.interval)}});
  }
  out["components"] = comps;
  out["selected_components"] = trace.selected_components;
  out["joints"] = set_json(trace.joints);
  Json supers = Json::array();
  for (const auto& f : trace.supercomponents) {
    supers.push_back(
        {{"vertices", set_json(f.vertices)}, {"interval", interval_json(f.interval)}, {"selected_members", f.selected_members}});
  }
  out["supercomponents"] = supers;
  out["selected_supercomponents"] = trace.selected_supercomponents;
  if (trace.pieces) {
    const PathPieces& p = *trace.pieces;
    out["pieces"] = {{"a", paths_json(p.a)},
                     {"b", paths_json(p.b)},
                     {"q", paths_json(p.q)},
                     {"segments", paths_json(p.segments)},
                     {"odd", path_json(p.odd)},
                     {"even", path_json(p.even)}};
  } else {
    out["pieces"] = nullptr;
  }
  out["log"] = trace.log;
  return out;
}

Json far_paths_json(const FarPathsResult& result) {
  Json out;
  switch (result.kind) {
    case FarPathsResult::Kind::kFound:
      out["result"] = "found";
      out["paths"] = paths_json(result.paths);
      break;
    case FarPathsResult::Kind::kNoneExists:
      out["result"] = "none_exists";
      break;
    case FarPathsResult::Kind::kBudgetExhausted:
      out["result"] = "budget_exhausted";
      break;
  }
  out["no_path"] = result.no_path;
  out["nodes"] = result.nodes;
  return out;
}

Json dichotomy_json(const DichotomyReport& report) {
  Json out = {{"depth", report.depth}, {"paths", report.paths}, {"pairs", report.pairs}, {"violations", report.violations}};
  if (report.counterexample) {
    out["counterexample"] = Json::array({path_json(report.counterexample->first), path_json(report.counterexample->second)});
  }
  return out;
}

Json gadget_labels_json(const LabeledGadget& g) {
  Json subdivided = Json::array();
  for (const auto& e : g.subdivided) subdivided.push_back({{"from", e.from}, {"to", e.to}, {"interior", e.interior}});
  return {{"depth", g.spec.depth},
          {"subdivision_len", g.spec.subdivision_len},
          {"ell", g.spec.ell},
          {"vertex_count", g.graph.vertex_count()},
          {"root", g.root},
          {"s1", g.s1},
          {"s2", g.s2},
          {"t1", g.t1},
          {"t2", g.t2},
          {"s", set_json(g.s)},
          {"t", set_json(g.t)},
          {"z", set_json(g.z)},
          {"m_order", g.m_order},
          {"leaves", set_json(g.leaves)},
          {"tree_parent", g.tree_parent},
          {"subdivided", subdivided}};
}

}  // namespace coarse_menger
