#include "coarse_menger/construction.hpp"

#include <algorithm>

#include "coarse_menger/distance.hpp"

namespace coarse_menger {
namespace {

struct Skeleton {
  int depth = 0;
  int tree_size = 0;
  Vertex s2 = -1;
  Vertex t1 = -1;
  std::vector<Vertex> m_order;
  std::vector<std::pair<Vertex, Vertex>> tree_edges;  // (parent, child), by child id
};

Skeleton make_skeleton(int depth) {
  if (depth < 2 || depth > 24) {
    throw ConstructionError(ConstructionError::Kind::kBadDepth, "tree depth must be in [2, 24], got " + std::to_string(depth));
  }
  Skeleton sk;
  sk.depth = depth;
  sk.tree_size = (1 << depth) - 1;
  sk.s2 = sk.tree_size;
  sk.t1 = sk.tree_size + 1;
  for (Vertex child = 1; child < sk.tree_size; ++child) sk.tree_edges.emplace_back((child - 1) / 2, child);

  // The j-th leaf parent (1-based, left to right) sends its left child to
  // M position 2j-1 and its right child to position 2j+2; positions 2 and
  // 2m+1 hold the two extra vertices.
  const int parents = 1 << (depth - 2);
  const Vertex first_parent = parents - 1;
  sk.m_order.assign(static_cast<std::size_t>(2 * parents + 2), -1);
  for (int j = 1; j <= parents; ++j) {
    Vertex parent = first_parent + (j - 1);
    sk.m_order[2 * j - 2] = 2 * parent + 1;
    sk.m_order[2 * j + 1] = 2 * parent + 2;
  }
  sk.m_order[1] = sk.s2;
  sk.m_order[2 * parents] = sk.t1;
  return sk;
}

LabeledGadget assemble(const Skeleton& sk, int subdivision_len, int ell) {
  LabeledGadget g;
  g.spec = {sk.depth, subdivision_len, ell};
  const int base = sk.tree_size + 2;
  const Vertex first_leaf = (1 << (sk.depth - 1)) - 1;

  std::vector<std::uint8_t> in_z(static_cast<std::size_t>(base), 0);
  for (Vertex v : sk.m_order) in_z[v] = 1;

  std::vector<std::pair<Vertex, Vertex>> edges;
  Vertex next_id = base;
  auto add_edge = [&](Vertex u, Vertex v) {
    if (subdivision_len == 1 || (!in_z[u] && !in_z[v])) {
      edges.emplace_back(u, v);
      return;
    }
    SubdividedEdge sub{u, v, {}};
    Vertex prev = u;
    for (int i = 1; i < subdivision_len; ++i) {
      sub.interior.push_back(next_id);
      edges.emplace_back(prev, next_id);
      prev = next_id++;
    }
    edges.emplace_back(prev, v);
    g.subdivided.push_back(std::move(sub));
  };
  for (auto [parent, child] : sk.tree_edges) add_edge(parent, child);
  for (std::size_t i = 1; i < sk.m_order.size(); ++i) add_edge(sk.m_order[i - 1], sk.m_order[i]);

  const int total = next_id;
  g.graph = Graph::build(total, edges);
  g.root = 0;
  g.s1 = sk.m_order.front();
  g.s2 = sk.s2;
  g.t1 = sk.t1;
  g.t2 = sk.m_order.back();
  g.m_order = sk.m_order;
  g.z = VertexSet(total, sk.m_order);
  std::vector<Vertex> leaf_ids;
  for (Vertex v = first_leaf; v < sk.tree_size; ++v) leaf_ids.push_back(v);
  g.leaves = VertexSet(total, leaf_ids);
  g.tree_parent.assign(static_cast<std::size_t>(base), -1);
  for (auto [parent, child] : sk.tree_edges) g.tree_parent[child] = parent;
  return g;
}

}  // namespace

LabeledGadget build_gadget(int depth) {
  LabeledGadget g = assemble(make_skeleton(depth), 1, 0);
  const int n = g.graph.vertex_count();
  g.s = VertexSet(n, std::vector<Vertex>{g.s1, g.s2});
  g.t = VertexSet(n, std::vector<Vertex>{g.t1, g.t2});
  return g;
}

LabeledGadget build_counterexample(int ell, std::optional<int> depth_override, std::optional<int> subdiv_override,
                                   bool allow_weak) {
  if (ell < 1) throw ConstructionError(ConstructionError::Kind::kBadParams, "ell must be >= 1");
  const int depth = depth_override.value_or(2 * ell + 3);
  const int len = subdiv_override.value_or(2 * ell + 1);
  if (len < 1) throw ConstructionError(ConstructionError::Kind::kBadParams, "subdivision length must be >= 1");
  if (!allow_weak && depth <= 2 * ell + 2) {
    throw ConstructionError(ConstructionError::Kind::kBadParams,
                            "tree depth " + std::to_string(depth) + " must exceed 2*ell+2 = " + std::to_string(2 * ell + 2));
  }
  if (!allow_weak && len <= 2 * ell) {
    throw ConstructionError(ConstructionError::Kind::kBadParams,
                            "subdivision length " + std::to_string(len) + " must exceed 2*ell = " + std::to_string(2 * ell));
  }
  LabeledGadget g = assemble(make_skeleton(depth), len, ell);
  const int n = g.graph.vertex_count();
  g.s = VertexSet(n, std::vector<Vertex>{g.root, g.s1, g.s2});
  g.t = VertexSet(n, std::vector<Vertex>{g.root, g.t1, g.t2});
  return g;
}

namespace {

// Original edge (u, v) expanded to its full vertex sequence from u to v.
std::vector<Vertex> expand_edge(const LabeledGadget& g, Vertex u, Vertex v) {
  for (const SubdividedEdge& sub : g.subdivided) {
    if (sub.from == u && sub.to == v) {
      std::vector<Vertex> seq{u};
      seq.insert(seq.end(), sub.interior.begin(), sub.interior.end());
      seq.push_back(v);
      return seq;
    }
    if (sub.from == v && sub.to == u) {
      std::vector<Vertex> seq{u};
      seq.insert(seq.end(), sub.interior.rbegin(), sub.interior.rend());
      seq.push_back(v);
      return seq;
    }
  }
  return {u, v};
}

Path expand(const LabeledGadget& g, const std::vector<Vertex>& skeleton_path) {
  Path p;
  p.vertices.push_back(skeleton_path.front());
  for (std::size_t i = 1; i < skeleton_path.size(); ++i) {
    auto seq = expand_edge(g, skeleton_path[i - 1], skeleton_path[i]);
    p.vertices.insert(p.vertices.end(), seq.begin() + 1, seq.end());
  }
  return p;
}

}  // namespace

Path tree_path_s1_t2(const LabeledGadget& g) {
  std::vector<Vertex> up;
  for (Vertex v = g.s1; v != -1; v = g.tree_parent[v]) up.push_back(v);
  std::vector<Vertex> down;
  for (Vertex v = g.t2; v != g.root; v = g.tree_parent[v]) down.push_back(v);
  up.insert(up.end(), down.rbegin(), down.rend());
  return expand(g, up);
}

Path bottom_path(const LabeledGadget& g) { return expand(g, g.m_order); }

Instance replicate(const Instance& inst, int copies) {
  if (copies < 1) throw ConstructionError(ConstructionError::Kind::kBadParams, "copies must be >= 1");
  Graph graph = inst.graph;
  for (int i = 1; i < copies; ++i) graph = disjoint_union(graph, inst.graph);
  const int n = inst.graph.vertex_count();
  std::vector<Vertex> s;
  std::vector<Vertex> t;
  for (int i = 0; i < copies; ++i) {
    for (Vertex v : inst.s) s.push_back(v + i * n);
    for (Vertex v : inst.t) t.push_back(v + i * n);
  }
  return {graph, VertexSet(graph.vertex_count(), s), VertexSet(graph.vertex_count(), t)};
}

}  // namespace coarse_menger
