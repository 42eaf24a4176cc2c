#include "coarse_menger/graph.hpp"

#include <algorithm>
#include <string>

namespace coarse_menger {

Graph Graph::build(int vertex_count, std::span<const std::pair<Vertex, Vertex>> edges, bool strict) {
  if (vertex_count < 0) {
    throw GraphError(GraphError::Kind::kBadArgument, "negative vertex count");
  }
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(vertex_count));
  for (auto [u, v] : edges) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count) {
      throw GraphError(GraphError::Kind::kVertexOutOfRange,
                       "edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside [0," +
                           std::to_string(vertex_count) + ")");
    }
    if (u == v) {
      throw GraphError(GraphError::Kind::kSelfLoop, "self loop at vertex " + std::to_string(u));
    }
    adj[u].push_back(v);
    adj[v].push_back(u);
  }

  Graph g;
  g.offsets_.reserve(adj.size() + 1);
  g.offsets_.push_back(0);
  for (std::size_t u = 0; u < adj.size(); ++u) {
    auto& list = adj[u];
    std::sort(list.begin(), list.end());
    auto dup = std::adjacent_find(list.begin(), list.end());
    if (dup != list.end()) {
      if (strict) {
        throw GraphError(GraphError::Kind::kDuplicateEdge,
                         "duplicate edge (" + std::to_string(u) + "," + std::to_string(*dup) + ")");
      }
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    g.neighbors_.insert(g.neighbors_.end(), list.begin(), list.end());
    g.offsets_.push_back(static_cast<std::int32_t>(g.neighbors_.size()));
  }
  return g;
}

int Graph::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < vertex_count(); ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexSet::VertexSet(int universe, std::span<const Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) {
    if (v < 0 || v >= universe) {
      throw GraphError(GraphError::Kind::kVertexOutOfRange, "vertex " + std::to_string(v) + " outside universe");
    }
    mask_[v] = 1;
  }
  for (Vertex v = 0; v < universe; ++v) {
    if (mask_[v]) members_.push_back(v);
  }
}

VertexSet VertexSet::all(int universe) { return from_mask(std::vector<std::uint8_t>(universe, 1)); }

VertexSet VertexSet::from_mask(std::vector<std::uint8_t> mask) {
  VertexSet s;
  s.mask_ = std::move(mask);
  for (Vertex v = 0; v < s.universe(); ++v) {
    if (s.mask_[v]) {
      s.mask_[v] = 1;
      s.members_.push_back(v);
    }
  }
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v < 0 || v >= universe()) {
    throw GraphError(GraphError::Kind::kVertexOutOfRange, "vertex " + std::to_string(v) + " outside universe");
  }
  if (mask_[v]) return;
  mask_[v] = 1;
  members_.insert(std::lower_bound(members_.begin(), members_.end(), v), v);
}

VertexSet VertexSet::complement() const {
  std::vector<std::uint8_t> mask(mask_.size());
  for (std::size_t i = 0; i < mask_.size(); ++i) mask[i] = mask_[i] ? 0 : 1;
  return from_mask(std::move(mask));
}

VertexSet VertexSet::united(const VertexSet& other) const {
  std::vector<std::uint8_t> mask(std::max(mask_.size(), other.mask_.size()), 0);
  for (std::size_t i = 0; i < mask_.size(); ++i) mask[i] |= mask_[i];
  for (std::size_t i = 0; i < other.mask_.size(); ++i) mask[i] |= other.mask_[i];
  return from_mask(std::move(mask));
}

bool VertexSet::intersects(const VertexSet& other) const {
  const VertexSet& small = size() <= other.size() ? *this : other;
  const VertexSet& large = size() <= other.size() ? other : *this;
  return std::any_of(small.begin(), small.end(), [&](Vertex v) { return large.contains(v); });
}

bool is_valid_path(const Graph& g, const Path& p) {
  if (p.vertices.empty()) return false;
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    Vertex v = p.vertices[i];
    if (!g.contains(v) || seen[v]) return false;
    seen[v] = 1;
    if (i > 0 && !g.adjacent(p.vertices[i - 1], v)) return false;
  }
  return true;
}

bool is_st_path(const Graph& g, const VertexSet& s, const VertexSet& t, const Path& p) {
  return is_valid_path(g, p) && s.contains(p.front()) && t.contains(p.back());
}

}  // namespace coarse_menger
