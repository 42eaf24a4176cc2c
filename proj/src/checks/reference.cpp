#include "coarse_menger/checks/reference.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace coarse_menger::reference {

std::vector<std::vector<int>> all_pairs(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> dist(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  for (Vertex src = 0; src < n; ++src) {
    auto& row = dist[src];
    std::deque<Vertex> queue{src};
    row[src] = 0;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (row[w] < 0) {
          row[w] = row[u] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return dist;
}

bool powerful(const std::vector<Interval>& items, int n, int ell) {
  for (int h = 0; h + ell <= n; ++h) {
    bool hit = false;
    for (const Interval& iv : items) hit = hit || (iv.a <= h && h + ell <= iv.b);
    if (!hit) return false;
  }
  return true;
}

bool inclusion_minimal(const std::vector<Interval>& items, int n, int ell) {
  if (!powerful(items, n, ell)) return false;
  const std::size_t k = items.size();
  const std::uint32_t full = (1u << k) - 1;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    std::vector<Interval> sub;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1u) sub.push_back(items[i]);
    }
    if (powerful(sub, n, ell)) return false;
  }
  return true;
}

std::vector<Path> simple_st_paths(const Graph& g, const VertexSet& s, const VertexSet& t, std::size_t limit) {
  std::vector<Path> out;
  std::vector<bool> used(static_cast<std::size_t>(g.vertex_count()), false);
  Path cur;
  std::function<void(Vertex)> walk = [&](Vertex v) {
    if (out.size() >= limit) return;
    used[v] = true;
    cur.vertices.push_back(v);
    if (t.contains(v)) out.push_back(cur);
    for (Vertex w : g.neighbors(v)) {
      if (!used[w]) walk(w);
    }
    cur.vertices.pop_back();
    used[v] = false;
  };
  for (Vertex v : s) walk(v);
  return out;
}

bool has_far_pair(const Graph& g, const VertexSet& s, const VertexSet& t, int d) {
  const auto dist = all_pairs(g);
  const auto paths = simple_st_paths(g, s, t);
  auto far = [&](const Path& p, const Path& q) {
    for (Vertex u : p.vertices) {
      for (Vertex v : q.vertices) {
        if (dist[u][v] >= 0 && dist[u][v] < d) return false;
      }
    }
    return true;
  };
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = i; j < paths.size(); ++j) {
      if (far(paths[i], paths[j])) return true;
    }
  }
  return false;
}

bool ball_separates(const Graph& g, const VertexSet& s, const VertexSet& t, const std::vector<Vertex>& x, int radius) {
  const auto dist = all_pairs(g);
  const int n = g.vertex_count();
  std::vector<bool> blocked(static_cast<std::size_t>(n), false);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex c : x) blocked[v] = blocked[v] || (dist[c][v] >= 0 && dist[c][v] <= radius);
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::deque<Vertex> queue;
  for (Vertex v : s) {
    if (!blocked[v]) {
      seen[v] = true;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    if (t.contains(u)) return false;
    for (Vertex w : g.neighbors(u)) {
      if (!seen[w] && !blocked[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  return true;
}

VertexSet joints_union(const Graph& g, const Frame& frame, const std::vector<ComponentInfo>& comps,
                       const std::vector<int>& selected) {
  const int n = g.vertex_count();
  const auto dist = all_pairs(g);
  std::vector<int> depth(static_cast<std::size_t>(n), -1);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : frame.surface) {
      if (dist[v][w] >= 0 && (depth[v] < 0 || dist[v][w] < depth[v])) depth[v] = dist[v][w];
    }
  }
  // Vertices outside D adjacent to D, per selected D.
  std::vector<std::set<Vertex>> neighborhood;
  for (int id : selected) {
    std::set<Vertex> nb;
    for (Vertex v : comps[id].vertices) {
      for (Vertex w : g.neighbors(v)) {
        if (!comps[id].vertices.contains(w)) nb.insert(w);
      }
    }
    neighborhood.push_back(std::move(nb));
  }

  std::vector<bool> in_union(static_cast<std::size_t>(n), false);
  std::set<std::vector<Vertex>> level;
  for (Vertex v = 0; v < n; ++v) level.insert({v});
  for (int size = 1; size <= 8 && !level.empty(); ++size) {
    for (const auto& x : level) {
      bool shallow = true;
      for (Vertex v : x) {
        if (frame.w.contains(v) && (depth[v] < 0 || 2 * depth[v] > size - 1)) shallow = false;
      }
      int touched = 0;
      for (const auto& nb : neighborhood) {
        bool hit = false;
        for (Vertex v : x) hit = hit || nb.count(v) > 0;
        touched += hit;
      }
      if (shallow && ((touched >= 2 && size <= 3) || touched >= 3)) {
        for (Vertex v : x) in_union[v] = true;
      }
    }
    if (size == 8) break;
    std::set<std::vector<Vertex>> next;
    for (const auto& x : level) {
      for (Vertex v : x) {
        for (Vertex w : g.neighbors(v)) {
          if (std::find(x.begin(), x.end(), w) != x.end()) continue;
          auto grown = x;
          grown.insert(std::upper_bound(grown.begin(), grown.end(), w), w);
          next.insert(std::move(grown));
        }
      }
    }
    level = std::move(next);
  }
  std::vector<Vertex> members;
  for (Vertex v = 0; v < n; ++v) {
    if (in_union[v]) members.push_back(v);
  }
  return VertexSet(n, members);
}

DichotomyCount gadget_dichotomy(int depth) {
  const LabeledGadget gadget = build_gadget(depth);
  const Graph& g = gadget.graph;
  const int n = g.vertex_count();

  std::vector<Vertex> up;
  for (Vertex v = gadget.s1; v != -1; v = gadget.tree_parent[v]) up.push_back(v);
  std::vector<Vertex> down;
  for (Vertex v = gadget.t2; v != -1; v = gadget.tree_parent[v]) down.push_back(v);
  std::vector<Vertex> tree_path = up;
  tree_path.insert(tree_path.end(), down.rbegin() + 1, down.rend());
  std::vector<Vertex> tree_path_rev(tree_path.rbegin(), tree_path.rend());

  const std::vector<Vertex> starts{gadget.s1, gadget.s2};
  const std::vector<Vertex> ends{gadget.t1, gadget.t2};
  std::vector<std::vector<Vertex>> paths;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::vector<Vertex> cur;
  std::function<void(Vertex)> walk = [&](Vertex v) {
    used[v] = true;
    cur.push_back(v);
    if (std::find(ends.begin(), ends.end(), v) != ends.end()) paths.push_back(cur);
    for (Vertex w : g.neighbors(v)) {
      if (!used[w]) walk(w);
    }
    cur.pop_back();
    used[v] = false;
  };
  for (Vertex v : starts) walk(v);

  auto outside_z = [&](Vertex v) { return !gadget.z.contains(v); };
  DichotomyCount count;
  for (const auto& p : paths) {
    for (const auto& q : paths) {
      bool disjoint = true;
      for (Vertex v : p) disjoint = disjoint && std::find(q.begin(), q.end(), v) == q.end();
      if (!disjoint) continue;
      ++count.pairs;
      if (p == tree_path || p == tree_path_rev || q == tree_path || q == tree_path_rev) continue;
      bool linked = false;
      for (Vertex u : p) {
        if (!outside_z(u)) continue;
        for (Vertex x : g.neighbors(u)) {
          if (!outside_z(x)) continue;
          if (std::find(q.begin(), q.end(), x) != q.end()) linked = true;
          for (Vertex w : g.neighbors(x)) {
            if (outside_z(w) && std::find(q.begin(), q.end(), w) != q.end()) linked = true;
          }
        }
      }
      if (!linked) ++count.violations;
    }
  }
  return count;
}

}  // namespace coarse_menger::reference
