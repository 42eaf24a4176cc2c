#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "coarse_menger/graph.hpp"

namespace cmtest {

using coarse_menger::Graph;
using coarse_menger::Vertex;
using coarse_menger::VertexSet;

inline Graph path_graph(int vertices) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v + 1 < vertices; ++v) edges.emplace_back(v, v + 1);
  return coarse_menger::build_graph(vertices, edges);
}

inline Graph graph_of(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  std::vector<std::pair<Vertex, Vertex>> list(edges);
  return coarse_menger::build_graph(n, list);
}

inline VertexSet set_of(int universe, std::initializer_list<Vertex> members) {
  std::vector<Vertex> list(members);
  return VertexSet(universe, list);
}

}  // namespace cmtest
