#pragma once

// Brute-force reference implementations. Each one is written directly from
// the definition and shares no code path with the library routine it is
// compared against. Small inputs only.

#include <cstdint>
#include <vector>

#include "coarse_menger/construction.hpp"
#include "coarse_menger/intervals.hpp"
#include "coarse_menger/solver.hpp"

namespace coarse_menger::reference {

/// dist[u][v] by one plain BFS per vertex; -1 when unreachable.
std::vector<std::vector<int>> all_pairs(const Graph& g);

/// Some member captures (h, h+ell) for every 0 <= h <= n-ell.
bool powerful(const std::vector<Interval>& items, int n, int ell);

/// `items` is ell-powerful and no proper subfamily is (all subsets; <= 20 items).
bool inclusion_minimal(const std::vector<Interval>& items, int n, int ell);

/// Every simple path from S to T, via DFS. Stops after `limit` paths.
std::vector<Path> simple_st_paths(const Graph& g, const VertexSet& s, const VertexSet& t, std::size_t limit = 1'000'000);

/// Whether two S-T paths at distance >= d exist, by comparing all path pairs.
bool has_far_pair(const Graph& g, const VertexSet& s, const VertexSet& t, int d);

/// Separation test with balls taken from the all-pairs table.
bool ball_separates(const Graph& g, const VertexSet& s, const VertexSet& t, const std::vector<Vertex>& x, int radius);

/// Union of all joints, enumerating every connected vertex set of size <= 8
/// by repeated one-vertex growth with duplicate removal.
VertexSet joints_union(const Graph& g, const Frame& frame, const std::vector<ComponentInfo>& comps,
                       const std::vector<int>& selected);

struct DichotomyCount {
  std::uint64_t pairs = 0;
  std::uint64_t violations = 0;
};

/// Path-pair dichotomy on build_gadget(depth), recounted from scratch.
DichotomyCount gadget_dichotomy(int depth);

}  // namespace coarse_menger::reference
