#include "coarse_menger/distance.hpp"

#include <algorithm>

namespace coarse_menger {
namespace {

void require_nonempty(std::span<const Vertex> vs, GraphError::Kind kind, const char* what) {
  if (vs.empty()) throw GraphError(kind, what);
}

void require_in_range(const Graph& g, std::span<const Vertex> vs) {
  for (Vertex v : vs) {
    if (!g.contains(v)) throw GraphError(GraphError::Kind::kVertexOutOfRange, "vertex " + std::to_string(v) + " outside graph");
  }
}

std::vector<Distance> bfs(const Graph& g, std::span<const Vertex> sources, const VertexSet* blocked) {
  std::vector<Distance> dist(static_cast<std::size_t>(g.vertex_count()), kInfinity);
  std::vector<Vertex> queue;
  queue.reserve(dist.size());
  for (Vertex s : sources) {
    if (blocked != nullptr && blocked->contains(s)) continue;
    if (dist[s] != 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex v : g.neighbors(u)) {
      if (dist[v] != kInfinity) continue;
      if (blocked != nullptr && blocked->contains(v)) continue;
      dist[v] = dist[u] + 1;
      queue.push_back(v);
    }
  }
  return dist;
}

}  // namespace

std::vector<Distance> distances_from(const Graph& g, std::span<const Vertex> sources) {
  require_nonempty(sources, GraphError::Kind::kEmptySources, "distances_from: empty source set");
  require_in_range(g, sources);
  return bfs(g, sources, nullptr);
}

std::vector<Distance> distances_avoiding(const Graph& g, std::span<const Vertex> sources, const VertexSet& blocked) {
  require_in_range(g, sources);
  return bfs(g, sources, &blocked);
}

Distance set_distance(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b) {
  require_nonempty(a, GraphError::Kind::kEmptySet, "set_distance: empty first set");
  require_nonempty(b, GraphError::Kind::kEmptySet, "set_distance: empty second set");
  require_in_range(g, a);
  require_in_range(g, b);

  std::vector<std::uint8_t> target(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : b) target[v] = 1;
  std::vector<Distance> dist(target.size(), kInfinity);
  std::vector<Vertex> queue;
  for (Vertex s : a) {
    if (target[s]) return 0;
    if (dist[s] != 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex v : g.neighbors(u)) {
      if (dist[v] != kInfinity) continue;
      dist[v] = dist[u] + 1;
      if (target[v]) return dist[v];
      queue.push_back(v);
    }
  }
  return kInfinity;
}

VertexSet ball(const Graph& g, std::span<const Vertex> centers, Distance radius) {
  if (radius < 0) throw GraphError(GraphError::Kind::kBadArgument, "ball: negative radius");
  require_in_range(g, centers);
  std::vector<std::uint8_t> mask(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<Distance> dist(mask.size(), kInfinity);
  std::vector<Vertex> queue;
  for (Vertex c : centers) {
    if (dist[c] != 0) {
      dist[c] = 0;
      mask[c] = 1;
      queue.push_back(c);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    if (dist[u] == radius) continue;
    for (Vertex v : g.neighbors(u)) {
      if (dist[v] != kInfinity) continue;
      dist[v] = dist[u] + 1;
      mask[v] = 1;
      queue.push_back(v);
    }
  }
  return VertexSet::from_mask(std::move(mask));
}

std::optional<Path> shortest_path(const Graph& g, const VertexSet& s, const VertexSet& t, const VertexSet& forbidden) {
  require_nonempty(s.members(), GraphError::Kind::kEmptySet, "shortest_path: empty source set");
  require_nonempty(t.members(), GraphError::Kind::kEmptySet, "shortest_path: empty target set");

  // Distances to T in g - forbidden; then walk greedily from the least
  // source at minimum distance, always to the least neighbor one step closer.
  std::vector<Distance> to_t = distances_avoiding(g, t.members(), forbidden);
  Vertex start = -1;
  Distance best = kInfinity;
  for (Vertex v : s) {
    if (forbidden.contains(v)) continue;
    if (to_t[v] < best) {
      best = to_t[v];
      start = v;
    }
  }
  if (start < 0) return std::nullopt;

  Path path;
  path.vertices.reserve(static_cast<std::size_t>(best) + 1);
  path.vertices.push_back(start);
  Vertex cur = start;
  while (to_t[cur] != 0) {
    for (Vertex v : g.neighbors(cur)) {
      if (to_t[v] == to_t[cur] - 1) {
        cur = v;
        break;
      }
    }
    path.vertices.push_back(cur);
  }
  return path;
}

std::optional<Path> shortest_path(const Graph& g, const VertexSet& s, const VertexSet& t) {
  return shortest_path(g, s, t, VertexSet(g.vertex_count()));
}

std::vector<VertexSet> components_excluding(const Graph& g, const VertexSet& removed) {
  const int n = g.vertex_count();
  std::vector<std::int32_t> label(static_cast<std::size_t>(n), -1);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (label[root] >= 0 || removed.contains(root)) continue;
    const auto id = static_cast<std::int32_t>(out.size());
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(n), 0);
    label[root] = id;
    mask[root] = 1;
    stack.assign(1, root);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex v : g.neighbors(u)) {
        if (label[v] >= 0 || removed.contains(v)) continue;
        label[v] = id;
        mask[v] = 1;
        stack.push_back(v);
      }
    }
    out.push_back(VertexSet::from_mask(std::move(mask)));
  }
  return out;
}

VertexSet boundary(const Graph& g, const VertexSet& component, const VertexSet& outside) {
  VertexSet out(g.vertex_count());
  for (Vertex u : component) {
    for (Vertex v : g.neighbors(u)) {
      if (outside.contains(v)) out.insert(v);
    }
  }
  return out;
}

Graph power(const Graph& g, int p) {
  if (p < 1) throw GraphError(GraphError::Kind::kBadArgument, "power: exponent must be >= 1");
  const int n = g.vertex_count();
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<Distance> dist(static_cast<std::size_t>(n), kInfinity);
  std::vector<Vertex> queue;
  for (Vertex src = 0; src < n; ++src) {
    queue.assign(1, src);
    dist[src] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      if (dist[u] == p) continue;
      for (Vertex v : g.neighbors(u)) {
        if (dist[v] != kInfinity) continue;
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
    for (Vertex v : queue) {
      if (v > src) edges.emplace_back(src, v);
      dist[v] = kInfinity;
    }
  }
  return Graph::build(n, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  const Vertex shift = a.vertex_count();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph::build(a.vertex_count() + b.vertex_count(), edges);
}

}  // namespace coarse_menger
