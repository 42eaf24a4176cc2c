#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coarse_menger/graph.hpp"
#include "coarse_menger/graph_io.hpp"

namespace coarse_menger {

class ConstructionError : public std::invalid_argument {
 public:
  enum class Kind { kBadDepth, kBadParams };

  ConstructionError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct GadgetSpec {
  int depth = 2;             // k: levels of the complete binary tree
  int subdivision_len = 1;   // L: edges replacing each edge that meets Z
  int ell = 0;               // target radius; recorded only
};

/// An original edge of the gadget replaced by a path; `interior` runs from
/// `from` to `to`.
struct SubdividedEdge {
  Vertex from;
  Vertex to;
  std::vector<Vertex> interior;
};

/// Binary tree B of the given depth, two extra vertices, and a path M
/// through Z = leaves(B) + {s2, t1}. Ids: tree in breadth-first order
/// (children of i are 2i+1, 2i+2), then s2, then t1, then subdivision
/// vertices in edge-creation order.
struct LabeledGadget {
  GadgetSpec spec;
  Graph graph;
  VertexSet s;
  VertexSet t;
  Vertex root = 0;
  Vertex s1 = -1;
  Vertex s2 = -1;
  Vertex t1 = -1;
  Vertex t2 = -1;
  VertexSet z;
  std::vector<Vertex> m_order;      // Z in path order, s1 first, t2 last
  std::vector<Vertex> tree_parent;  // per original vertex; -1 for the root and non-tree vertices
  VertexSet leaves;
  std::vector<SubdividedEdge> subdivided;

  Instance instance() const { return {graph, s, t}; }

  /// Number of tree + extra vertices, i.e. 2^k + 1.
  int original_vertex_count() const { return (1 << spec.depth) + 1; }
};

/// Unsubdivided G_k with S = {s1, s2}, T = {t1, t2}. Throws kBadDepth unless 2 <= k <= 24.
LabeledGadget build_gadget(int depth);

/// The degree-3 counterexample: G_k with every edge meeting Z replaced by a
/// path of L edges, S = {root, s1, s2}, T = {root, t1, t2}. Defaults are
/// k = 2*ell + 3 and L = 2*ell + 1. Overrides must keep k > 2*ell + 2 and
/// L > 2*ell unless `allow_weak` is set.
LabeledGadget build_counterexample(int ell, std::optional<int> depth_override = std::nullopt,
                                   std::optional<int> subdiv_override = std::nullopt, bool allow_weak = false);

/// Tree path from s1 up to the root and down to t2.
Path tree_path_s1_t2(const LabeledGadget& g);

/// The bottom path M, through subdivision vertices when present.
Path bottom_path(const LabeledGadget& g);

/// r disjoint copies; S and T are the unions of the per-copy terminal sets.
Instance replicate(const Instance& inst, int copies);

}  // namespace coarse_menger
