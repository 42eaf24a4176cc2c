#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coarse_menger/graph_io.hpp"

namespace coarse_menger {

/// Instance plus a short human-readable name, used by the fuzz suites.
struct NamedInstance {
  std::string name;
  Instance instance;
};

/// Path 0..edges with S = {0}, T = {edges}.
Instance path_instance(int edges);

/// Two corridors of `edges` edges each, S = left ends, T = right ends. When
/// rung_len > 0 the corridors are joined by paths of rung_len edges every
/// `spacing` positions, putting them at distance rung_len.
Instance double_corridor(int edges, int rung_len = 0, int spacing = 0);

/// rows x cols grid, S = left column, T = right column.
Instance grid_instance(int rows, int cols);

/// Cycle of the given length (>= 4). S and T are antipodal pairs, a quarter turn apart.
Instance cycle_instance(int length);

/// Corridor of `backbone` edges from S to T plus a second route from a deep
/// S vertex to a deep T vertex, both `reach` edges long, meeting at a vertex
/// adjacent to the corridor's vertex number `contact`.
Instance hook_instance(int backbone, int contact, int reach);

/// Random tree on n vertices plus `extra` random chords; 1-3 random S and T vertices.
Instance random_sparse(int n, int extra, std::uint64_t seed);

struct BraidOptions {
  int backbone = 1200;       // edges of the main corridor
  int height_min = 12;       // rung lengths (distance of detours from the corridor)
  int height_max = 16;
  int span_min = 620;        // corridor positions covered by one detour
  int span_max = 820;
  int overlap_min = 320;     // overlap of consecutive detours
  double y_joint_prob = 0.0; // chance of a shared rung between consecutive detours
  double tripod_prob = 0.0;  // chance of a surface vertex feeding three detours
  int pendants = 0;          // random dead-end trees
};

/// A corridor R from S to T plus overlapping detours that run parallel to R
/// far from it and reach R only through rungs. The first detour starts at a
/// deep S vertex and the last ends at a deep T vertex, so every S-T path
/// touches R yet R is not forced through any single ball.
Instance braid_instance(const BraidOptions& options, std::uint64_t seed);

/// The solver fuzz corpus: `count` instances drawn from all families, fixed by `seed`.
std::vector<NamedInstance> solver_fuzz_corpus(int count, std::uint64_t seed);

/// Corridor pairs for the general-d wrapper.
std::vector<NamedInstance> double_corridor_corpus();

}  // namespace coarse_menger
