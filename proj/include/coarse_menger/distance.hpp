#pragma once

#include <optional>
#include <span>
#include <vector>

#include "coarse_menger/graph.hpp"

namespace coarse_menger {

/// Multi-source BFS distances; unreachable vertices get kInfinity.
/// Throws GraphError(kEmptySources) when `sources` is empty.
std::vector<Distance> distances_from(const Graph& g, std::span<const Vertex> sources);

/// BFS distances with `blocked` vertices removed from the graph. Blocked
/// sources are dropped; the result may be all-infinite.
std::vector<Distance> distances_avoiding(const Graph& g, std::span<const Vertex> sources, const VertexSet& blocked);

/// min d(a, b) over a in `a`, b in `b`; 0 iff they meet. Throws on empty input.
Distance set_distance(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b);

/// Every vertex within distance `radius` of `centers`.
VertexSet ball(const Graph& g, std::span<const Vertex> centers, Distance radius);

/// Minimum-length path from s\forbidden to t\forbidden inside g - forbidden.
/// Among minimum-length paths the lexicographically least vertex sequence wins.
std::optional<Path> shortest_path(const Graph& g, const VertexSet& s, const VertexSet& t, const VertexSet& forbidden);
std::optional<Path> shortest_path(const Graph& g, const VertexSet& s, const VertexSet& t);

/// Connected components of g - removed, ordered by smallest member.
std::vector<VertexSet> components_excluding(const Graph& g, const VertexSet& removed);

/// Vertices of `outside` with a neighbor in `component`.
VertexSet boundary(const Graph& g, const VertexSet& component, const VertexSet& outside);

/// Same vertices; u ~ v iff 1 <= d(u, v) <= p.
Graph power(const Graph& g, int p);

/// Vertices of `b` relabelled by +a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace coarse_menger
