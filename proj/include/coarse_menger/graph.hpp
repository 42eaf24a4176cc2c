#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coarse_menger {

using Vertex = std::int32_t;
using Distance = std::int32_t;

/// Distance to a vertex that cannot be reached. Never a valid BFS distance.
inline constexpr Distance kInfinity = std::numeric_limits<Distance>::max();

class GraphError : public std::invalid_argument {
 public:
  enum class Kind { kSelfLoop, kDuplicateEdge, kVertexOutOfRange, kEmptySources, kEmptySet, kBadArgument };

  GraphError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Immutable undirected simple graph over dense ids 0..n-1, stored as
/// compressed adjacency with ascending neighbor lists.
class Graph {
 public:
  Graph() = default;

  /// Throws GraphError on self loops, out-of-range ids, and (when strict)
  /// repeated edges. Non-strict mode collapses duplicates.
  static Graph build(int vertex_count, std::span<const std::pair<Vertex, Vertex>> edges, bool strict = true);

  int vertex_count() const { return static_cast<int>(offsets_.empty() ? 0 : offsets_.size() - 1); }
  std::size_t edge_count() const { return neighbors_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  int max_degree() const;
  bool adjacent(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v >= 0 && v < vertex_count(); }

  /// Edges with u < v, in ascending (u, v) order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::int32_t> offsets_;
  std::vector<Vertex> neighbors_;
};

inline Graph build_graph(int vertex_count, std::span<const std::pair<Vertex, Vertex>> edges, bool strict = true) {
  return Graph::build(vertex_count, edges, strict);
}

/// Subset of [0, universe) with O(1) membership and a sorted member list.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe) : mask_(static_cast<std::size_t>(universe), 0) {}
  VertexSet(int universe, std::span<const Vertex> members);

  static VertexSet all(int universe);
  static VertexSet from_mask(std::vector<std::uint8_t> mask);

  int universe() const { return static_cast<int>(mask_.size()); }
  bool contains(Vertex v) const { return v >= 0 && v < universe() && mask_[v] != 0; }
  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }

  void insert(Vertex v);
  void insert_all(std::span<const Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }

  const std::vector<Vertex>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  VertexSet complement() const;
  VertexSet united(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.mask_ == b.mask_; }

 private:
  std::vector<std::uint8_t> mask_;
  std::vector<Vertex> members_;
};

struct Path {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }

  friend bool operator==(const Path&, const Path&) = default;
};

/// Nonempty, simple, and consecutive vertices adjacent in g.
bool is_valid_path(const Graph& g, const Path& p);

/// A valid path with first vertex in s and last vertex in t.
bool is_st_path(const Graph& g, const VertexSet& s, const VertexSet& t, const Path& p);

}  // namespace coarse_menger
