#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "coarse_menger/construction.hpp"
#include "coarse_menger/oracle.hpp"
#include "coarse_menger/solver.hpp"

namespace coarse_menger {

using Json = nlohmann::ordered_json;

/// Distances and other values that may be kInfinity serialize as -1.
Json distance_json(Distance d);
Json path_json(const Path& p);
Json set_json(const VertexSet& s);
Json family_json(const IntervalFamily& f);

/// {"outcome":"two_far_paths","paths":[..],"pairwise_distance":d} |
/// {"outcome":"center","vertex":x,"radius":r,"verified":bool} | {"outcome":"no_path"}
Json outcome_json(const SolverOutcome& outcome, bool verified);
Json trace_json(const SolverTrace& trace);

Json far_paths_json(const FarPathsResult& result);
Json dichotomy_json(const DichotomyReport& report);

/// Role labels of a generated gadget (the sidecar written next to the graph text).
Json gadget_labels_json(const LabeledGadget& g);

}  // namespace coarse_menger
