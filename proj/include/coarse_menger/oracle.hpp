#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coarse_menger/graph.hpp"

namespace coarse_menger {

class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SearchBudget {
  std::uint64_t max_nodes = 100'000'000;
  std::optional<double> max_seconds;
};

struct SeparatorResult {
  bool separates = false;
  std::optional<Path> witness;  // shortest S-T path avoiding the ball, when one exists
};

/// Whether every S-T path meets ball(x, radius).
SeparatorResult is_ball_separator(const Graph& g, const VertexSet& s, const VertexSet& t, std::span<const Vertex> x,
                                  Distance radius);

struct SeparatorSearchResult {
  bool no_path = false;                          // S and T already disconnected
  std::optional<std::vector<Vertex>> separator;  // least X, ascending ids
  std::uint64_t candidates = 0;
};

/// Least X (by size, then lexicographically) with |X| <= max_size whose
/// radius-r ball separates S from T, over all candidate sets.
SeparatorSearchResult exhaustive_separator_search(const Graph& g, const VertexSet& s, const VertexSet& t, int max_size,
                                                  Distance radius, int workers = 1);

struct FarPathsResult {
  enum class Kind { kFound, kNoneExists, kBudgetExhausted };

  Kind kind = Kind::kNoneExists;
  std::vector<Path> paths;
  std::uint64_t nodes = 0;
  bool no_path = false;
};

/// Complete backtracking search for k S-T paths pairwise at distance >= d.
/// Paths are placed in order of start vertex; each is a minimal induced
/// S-T path grown in ascending neighbor order, and once placed its
/// (d-1)-ball is closed to the later paths. kNoneExists is returned only
/// after the search space is exhausted.
FarPathsResult search_far_paths(const Graph& g, const VertexSet& s, const VertexSet& t, int k, Distance d,
                                const SearchBudget& budget = {}, int workers = 1);

/// Each path is an S-T path and the paths are pairwise at distance >= d.
bool verify_far_paths(const Graph& g, const VertexSet& s, const VertexSet& t, const std::vector<Path>& paths, Distance d);

struct DichotomyReport {
  int depth = 0;
  std::uint64_t paths = 0;  // paths between {s1,s2} and {t1,t2}
  std::uint64_t pairs = 0;  // ordered vertex-disjoint pairs checked
  std::uint64_t violations = 0;
  std::optional<std::pair<Path, Path>> counterexample;
};

/// Checks, for every ordered pair (P, Q) of vertex-disjoint paths between
/// {s1,s2} and {t1,t2} in the unsubdivided gadget, that some path of length
/// <= 2 with no vertex in Z joins V(P) to V(Q), or that one of P, Q is the
/// tree path s1..t2. Throws OracleError when depth > max_depth.
DichotomyReport verify_gadget_dichotomy(int depth, int max_depth = 5);

}  // namespace coarse_menger
