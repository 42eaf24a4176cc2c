#include "coarse_menger/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>

#include "coarse_menger/construction.hpp"
#include "coarse_menger/distance.hpp"
#include "coarse_menger/parallel.hpp"

namespace coarse_menger {

SeparatorResult is_ball_separator(const Graph& g, const VertexSet& s, const VertexSet& t, std::span<const Vertex> x,
                                  Distance radius) {
  if (radius < 0) throw GraphError(GraphError::Kind::kBadArgument, "is_ball_separator: negative radius");
  SeparatorResult result;
  if (s.empty() || t.empty()) {
    result.separates = true;
    return result;
  }
  VertexSet blocked = x.empty() ? VertexSet(g.vertex_count()) : ball(g, x, radius);
  result.witness = shortest_path(g, s, t, blocked);
  result.separates = !result.witness.has_value();
  return result;
}

namespace {

// Scratch space for "does removing these balls disconnect S from T".
class SeparationProbe {
 public:
  SeparationProbe(const Graph& g, const VertexSet& s, const VertexSet& t)
      : g_(g), s_(s), t_(t), blocked_(g.vertex_count(), 0), seen_(g.vertex_count(), 0) {}

  bool separates(const std::vector<const std::vector<Vertex>*>& balls) {
    ++stamp_;
    for (const auto* b : balls) {
      for (Vertex v : *b) blocked_[v] = stamp_;
    }
    queue_.clear();
    for (Vertex v : s_) {
      if (blocked_[v] == stamp_) continue;
      if (t_.contains(v)) return false;
      seen_[v] = stamp_;
      queue_.push_back(v);
    }
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      for (Vertex w : g_.neighbors(queue_[head])) {
        if (seen_[w] == stamp_ || blocked_[w] == stamp_) continue;
        if (t_.contains(w)) return false;
        seen_[w] = stamp_;
        queue_.push_back(w);
      }
    }
    return true;
  }

 private:
  const Graph& g_;
  const VertexSet& s_;
  const VertexSet& t_;
  std::vector<std::uint32_t> blocked_;
  std::vector<std::uint32_t> seen_;
  std::vector<Vertex> queue_;
  std::uint32_t stamp_ = 0;
};

}  // namespace

SeparatorSearchResult exhaustive_separator_search(const Graph& g, const VertexSet& s, const VertexSet& t, int max_size,
                                                  Distance radius, int workers) {
  SeparatorSearchResult result;
  if (s.empty() || t.empty() || !shortest_path(g, s, t)) {
    result.no_path = true;
    result.separator = std::vector<Vertex>{};
    return result;
  }
  const int n = g.vertex_count();
  std::vector<std::vector<Vertex>> balls(static_cast<std::size_t>(n));
  parallel_for(static_cast<std::size_t>(n), workers, [&](std::size_t x) {
    Vertex center = static_cast<Vertex>(x);
    balls[x] = ball(g, std::span<const Vertex>(&center, 1), radius).members();
  });

  std::atomic<std::uint64_t> candidates{0};
  for (int size = 1; size <= std::min(max_size, n); ++size) {
    // One task per least element; the least separating set overall comes
    // from the least task that found anything.
    std::vector<std::optional<std::vector<Vertex>>> found(static_cast<std::size_t>(n));
    std::atomic<Vertex> best_first{n};
    parallel_for(static_cast<std::size_t>(n), workers, [&](std::size_t first) {
      if (static_cast<Vertex>(first) > best_first.load()) return;
      SeparationProbe probe(g, s, t);
      std::vector<Vertex> combo{static_cast<Vertex>(first)};
      std::vector<const std::vector<Vertex>*> chosen{&balls[first]};
      std::uint64_t local = 0;
      std::function<bool(Vertex)> extend = [&](Vertex from) -> bool {
        if (static_cast<int>(combo.size()) == size) {
          ++local;
          return probe.separates(chosen);
        }
        for (Vertex v = from; v < n; ++v) {
          combo.push_back(v);
          chosen.push_back(&balls[v]);
          if (extend(v + 1)) return true;
          combo.pop_back();
          chosen.pop_back();
        }
        return false;
      };
      if (extend(static_cast<Vertex>(first) + 1)) {
        found[first] = combo;
        Vertex cur = best_first.load();
        while (static_cast<Vertex>(first) < cur && !best_first.compare_exchange_weak(cur, static_cast<Vertex>(first))) {
        }
      }
      candidates += local;
    });
    for (auto& f : found) {
      if (f) {
        result.separator = std::move(f);
        result.candidates = candidates;
        return result;
      }
    }
  }
  result.candidates = candidates;
  return result;
}

namespace {

class FarPathSearch {
 public:
  FarPathSearch(const Graph& g, const VertexSet& s, const VertexSet& t, int k, Distance d, const SearchBudget& budget,
                std::atomic<std::uint64_t>& nodes, std::atomic<bool>& stop)
      : g_(g),
        s_(s),
        t_(t),
        k_(k),
        d_(d),
        budget_(budget),
        nodes_(nodes),
        stop_(stop),
        blocked_(static_cast<std::size_t>(g.vertex_count()), 0),
        on_path_(static_cast<std::size_t>(g.vertex_count()), 0),
        touch_(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(g.vertex_count()), 0)),
        paths_(static_cast<std::size_t>(k)) {
    if (budget.max_seconds) {
      deadline_ = std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                                          std::chrono::duration<double>(*budget.max_seconds));
    }
  }

  /// Runs the subtree whose first path begins with `prefix`.
  bool run(const std::vector<Vertex>& prefix) {
    for (Vertex v : prefix) {
      if (!push(0, v)) return false;
    }
    return grow(0);
  }

  bool exhausted() const { return exhausted_; }
  const std::vector<Path>& paths() const { return paths_; }

  // Candidate vertices for the next step of path `level`.
  bool can_start(Vertex v) const { return blocked_[v] == 0; }
  bool can_extend(int level, Vertex v) const {
    return blocked_[v] == 0 && !on_path_[v] && touch_[level][v] == 1 && !s_.contains(v);
  }

 private:
  bool tick() {
    std::uint64_t used = ++nodes_;
    if (stop_.load(std::memory_order_relaxed)) {
      exhausted_ = true;
      return false;
    }
    if (used > budget_.max_nodes || (deadline_ && (used & 0xfff) == 0 && std::chrono::steady_clock::now() > *deadline_)) {
      exhausted_ = true;
      stop_ = true;
      return false;
    }
    return true;
  }

  bool push(int level, Vertex v) {
    if (!tick()) return false;
    paths_[level].vertices.push_back(v);
    on_path_[v] = 1;
    for (Vertex w : g_.neighbors(v)) ++touch_[level][w];
    return true;
  }

  void pop(int level) {
    Vertex v = paths_[level].vertices.back();
    paths_[level].vertices.pop_back();
    on_path_[v] = 0;
    for (Vertex w : g_.neighbors(v)) --touch_[level][w];
  }

  void block(const Path& p, int delta) {
    VertexSet b = ball(g_, p.vertices, d_ - 1);
    for (Vertex v : b) blocked_[v] += delta;
  }

  // Path `level` is partially built; extend it or, at T, close it.
  bool grow(int level) {
    Path& cur = paths_[level];
    if (t_.contains(cur.back())) {
      if (level + 1 == k_) return true;
      block(cur, +1);
      bool found = place(level + 1, cur.front());
      block(cur, -1);
      return found;
    }
    for (Vertex v : g_.neighbors(cur.back())) {
      if (exhausted_) return false;
      if (!can_extend(level, v)) continue;
      if (!push(level, v)) return false;
      if (grow(level)) return true;
      pop(level);
    }
    return false;
  }

  bool place(int level, Vertex after) {
    for (Vertex v : s_) {
      if (exhausted_) return false;
      if (v <= after || !can_start(v)) continue;
      if (!push(level, v)) return false;
      if (grow(level)) return true;
      pop(level);
    }
    return false;
  }

  const Graph& g_;
  const VertexSet& s_;
  const VertexSet& t_;
  int k_;
  Distance d_;
  const SearchBudget& budget_;
  std::atomic<std::uint64_t>& nodes_;
  std::atomic<bool>& stop_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  bool exhausted_ = false;
  std::vector<int> blocked_;
  std::vector<std::uint8_t> on_path_;
  std::vector<std::vector<int>> touch_;  // per level: neighbors on that level's path
  std::vector<Path> paths_;
};

}  // namespace

FarPathsResult search_far_paths(const Graph& g, const VertexSet& s, const VertexSet& t, int k, Distance d,
                                const SearchBudget& budget, int workers) {
  if (k < 1 || d < 1) throw OracleError("search_far_paths: need k >= 1 and d >= 1");
  if (budget.max_nodes == 0) throw OracleError("search_far_paths: budget must allow at least one node");
  FarPathsResult result;
  if (s.empty() || t.empty() || !shortest_path(g, s, t)) {
    result.kind = FarPathsResult::Kind::kNoneExists;
    result.no_path = true;
    return result;
  }

  // Split on the first one or two vertices of the first path, in the same
  // order a sequential search would visit them.
  std::vector<std::vector<Vertex>> tasks;
  for (Vertex v : s) {
    if (t.contains(v)) {
      tasks.push_back({v});
      continue;
    }
    for (Vertex w : g.neighbors(v)) {
      if (!s.contains(w)) tasks.push_back({v, w});
    }
  }

  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::vector<std::optional<std::vector<Path>>> found(tasks.size());
  std::vector<std::uint8_t> exhausted(tasks.size(), 0);
  std::atomic<std::size_t> first_hit{tasks.size()};
  parallel_for(tasks.size(), workers, [&](std::size_t i) {
    if (i > first_hit.load()) return;
    FarPathSearch search(g, s, t, k, d, budget, nodes, stop);
    if (search.run(tasks[i])) {
      found[i] = search.paths();
      std::size_t cur = first_hit.load();
      while (i < cur && !first_hit.compare_exchange_weak(cur, i)) {
      }
    } else if (search.exhausted()) {
      exhausted[i] = 1;
    }
  });
  result.nodes = nodes;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (found[i]) {
      result.kind = FarPathsResult::Kind::kFound;
      result.paths = *found[i];
      return result;
    }
    if (exhausted[i]) {
      result.kind = FarPathsResult::Kind::kBudgetExhausted;
      return result;
    }
  }
  result.kind = FarPathsResult::Kind::kNoneExists;
  return result;
}

bool verify_far_paths(const Graph& g, const VertexSet& s, const VertexSet& t, const std::vector<Path>& paths, Distance d) {
  for (const Path& p : paths) {
    if (!is_st_path(g, s, t, p)) return false;
  }
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      if (set_distance(g, paths[i].vertices, paths[j].vertices) < d) return false;
    }
  }
  return true;
}

DichotomyReport verify_gadget_dichotomy(int depth, int max_depth) {
  if (depth > max_depth || depth > 5) {
    throw OracleError("verify_gadget_dichotomy: depth " + std::to_string(depth) + " exceeds the enumeration limit " +
                      std::to_string(std::min(max_depth, 5)));
  }
  const LabeledGadget gadget = build_gadget(depth);
  const Graph& g = gadget.graph;
  const int n = g.vertex_count();
  using Mask = std::uint64_t;
  auto bit = [](Vertex v) { return Mask{1} << v; };

  Mask z_mask = 0;
  for (Vertex v : gadget.z) z_mask |= bit(v);
  const Mask free_mask = ~z_mask & (n == 64 ? ~Mask{0} : (bit(n) - 1));
  std::vector<Mask> free_nbrs(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) free_nbrs[v] |= bit(w);
    free_nbrs[v] &= free_mask;
  }
  auto spread = [&](Mask m) {
    Mask out = m;
    for (Vertex v = 0; v < n; ++v) {
      if (m & bit(v)) out |= free_nbrs[v];
    }
    return out;
  };

  std::vector<Path> paths;
  std::vector<Mask> masks;
  const Mask ends = bit(gadget.t1) | bit(gadget.t2);
  Path cur;
  Mask cur_mask = 0;
  std::function<void()> dfs = [&] {
    Vertex v = cur.back();
    if (ends & bit(v)) {
      paths.push_back(cur);
      masks.push_back(cur_mask);
    }
    for (Vertex w : g.neighbors(v)) {
      if (cur_mask & bit(w)) continue;
      cur.vertices.push_back(w);
      cur_mask |= bit(w);
      dfs();
      cur.vertices.pop_back();
      cur_mask &= ~bit(w);
    }
  };
  for (Vertex start : {gadget.s1, gadget.s2}) {
    cur.vertices.assign(1, start);
    cur_mask = bit(start);
    dfs();
  }

  Path tree = tree_path_s1_t2(gadget);
  Path tree_rev{std::vector<Vertex>(tree.vertices.rbegin(), tree.vertices.rend())};
  std::vector<std::uint8_t> is_tree(paths.size(), 0);
  std::vector<Mask> reach(paths.size(), 0);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    is_tree[i] = paths[i] == tree || paths[i] == tree_rev;
    reach[i] = spread(spread(masks[i] & free_mask));
  }

  DichotomyReport report;
  report.depth = depth;
  report.paths = paths.size();
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = 0; j < paths.size(); ++j) {
      if (masks[i] & masks[j]) continue;
      ++report.pairs;
      bool close = (reach[i] & masks[j] & free_mask) != 0;
      if (close || is_tree[i] || is_tree[j]) continue;
      ++report.violations;
      if (!report.counterexample) report.counterexample = std::make_pair(paths[i], paths[j]);
    }
  }
  return report;
}

}  // namespace coarse_menger
