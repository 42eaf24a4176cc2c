#include "coarse_menger/solver.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <sstream>

#include "coarse_menger/distance.hpp"
#include "coarse_menger/oracle.hpp"
#include "coarse_menger/parallel.hpp"

namespace coarse_menger {
namespace {

std::string str(const Interval& iv) { return "(" + std::to_string(iv.a) + "," + std::to_string(iv.b) + ")"; }

[[noreturn]] void violated(const std::string& stage, const std::string& detail) {
  throw InternalInvariantViolation(stage, detail);
}

VertexSet single(int universe, Vertex v) { return VertexSet(universe, std::span<const Vertex>(&v, 1)); }

// Min distance from `from` (precomputed BFS) to any member of `to`.
Distance min_over(const std::vector<Distance>& from, const VertexSet& to) {
  Distance best = kInfinity;
  for (Vertex v : to) best = std::min(best, from[v]);
  return best;
}

Distance min_over(const std::vector<Distance>& from, const Path& to) {
  Distance best = kInfinity;
  for (Vertex v : to.vertices) best = std::min(best, from[v]);
  return best;
}

Interval hull(const Frame& frame, const VertexSet& vs) {
  Interval iv{frame.n, 0};
  for (Vertex v : vs) {
    iv.a = std::min(iv.a, frame.a[v]);
    iv.b = std::max(iv.b, frame.b[v]);
  }
  return iv;
}

// Maps each selected interval back to the first candidate carrying it.
std::vector<int> map_back(const IntervalFamily& selected, const std::vector<Interval>& candidates, const std::string& stage) {
  std::vector<int> out;
  for (const Interval& iv : selected.items()) {
    auto it = std::find(candidates.begin(), candidates.end(), iv);
    if (it == candidates.end()) violated(stage, "selected interval " + str(iv) + " has no owner");
    out.push_back(static_cast<int>(it - candidates.begin()));
  }
  return out;
}

IntervalFamily select_family(const IntervalFamily& family, int ell, const std::string& stage) {
  try {
    return mainint_select(family, ell);
  } catch (const IntervalError& e) {
    violated(stage, e.what());
  }
}

Path backbone_segment(const Frame& frame, int i, int j) {
  if (i > j) std::swap(i, j);
  Path p;
  for (int k = i; k <= j; ++k) p.vertices.push_back(frame.r(k));
  return p;
}

Path loop_erase(const std::vector<Vertex>& walk, int universe) {
  std::vector<int> pos(static_cast<std::size_t>(universe), -1);
  Path out;
  for (Vertex v : walk) {
    if (pos[v] >= 0) {
      for (std::size_t k = static_cast<std::size_t>(pos[v]) + 1; k < out.vertices.size(); ++k) pos[out.vertices[k]] = -1;
      out.vertices.resize(static_cast<std::size_t>(pos[v]) + 1);
      continue;
    }
    pos[v] = static_cast<int>(out.vertices.size());
    out.vertices.push_back(v);
  }
  return out;
}

}  // namespace

void SolverConfig::validate() const {
  if (c < 7) throw SolverError("solver config: c must be >= 7, got " + std::to_string(c));
  if (ell < 2 * c + 5) {
    throw SolverError("solver config: ell must be >= 2c+5 = " + std::to_string(2 * c + 5) + ", got " + std::to_string(ell));
  }
  if (workers < 1) throw SolverError("solver config: workers must be >= 1");
}

SolverOutcome SolverOutcome::two_paths(const Graph& g, Path p, Path q, std::string stage) {
  SolverOutcome out;
  out.kind = Kind::kTwoFarPaths;
  out.pairwise_distance = set_distance(g, p.vertices, q.vertices);
  out.first = std::move(p);
  out.second = std::move(q);
  out.stage = std::move(stage);
  return out;
}

SolverOutcome SolverOutcome::center_at(Vertex x, Distance radius, std::string stage) {
  SolverOutcome out;
  out.kind = Kind::kCenter;
  out.center = x;
  out.radius = radius;
  out.stage = std::move(stage);
  return out;
}

Frame build_frame(const Graph& g, const VertexSet& s, const VertexSet& t, const Path& backbone, const SolverConfig& cfg) {
  const int nv = g.vertex_count();
  Frame f;
  f.backbone = backbone;
  f.n = static_cast<int>(backbone.vertices.size()) + 1;
  f.to_backbone = distances_from(g, backbone.vertices);

  std::vector<std::uint8_t> scope(static_cast<std::size_t>(nv), 0);
  std::vector<std::uint8_t> in_w(static_cast<std::size_t>(nv), 0);
  std::vector<std::uint8_t> on_surface(static_cast<std::size_t>(nv), 0);
  std::vector<std::vector<Vertex>> layers;
  for (Vertex v = 0; v < nv; ++v) {
    Distance d = f.to_backbone[v];
    if (d == kInfinity) continue;
    scope[v] = 1;
    in_w[v] = d <= cfg.c;
    on_surface[v] = d == cfg.c;
    if (static_cast<std::size_t>(d) >= layers.size()) layers.resize(static_cast<std::size_t>(d) + 1);
    layers[d].push_back(v);
  }
  f.scope = VertexSet::from_mask(std::move(scope));
  f.w = VertexSet::from_mask(std::move(in_w));
  f.surface = VertexSet::from_mask(std::move(on_surface));
  f.to_surface = f.surface.empty() ? std::vector<Distance>(static_cast<std::size_t>(nv), kInfinity)
                                   : distances_from(g, f.surface.members());

  // Least / greatest backbone index reachable by a shortest route to R.
  std::vector<int> lo(static_cast<std::size_t>(nv), -1);
  std::vector<int> hi(static_cast<std::size_t>(nv), -1);
  for (int i = 1; i < f.n; ++i) lo[f.r(i)] = hi[f.r(i)] = i;
  for (std::size_t d = 1; d < layers.size(); ++d) {
    for (Vertex v : layers[d]) {
      for (Vertex u : g.neighbors(v)) {
        if (f.to_backbone[u] != static_cast<Distance>(d) - 1) continue;
        lo[v] = lo[v] < 0 ? lo[u] : std::min(lo[v], lo[u]);
        hi[v] = std::max(hi[v], hi[u]);
      }
    }
  }
  f.a = lo;
  f.b = hi;
  for (Vertex v : f.scope) {
    if (f.to_backbone[v] >= cfg.c + 4) {
      if (s.contains(v)) f.a[v] = 0;
      if (t.contains(v)) f.b[v] = f.n;
    }
  }
  for (Vertex v : f.w) {
    int spread = f.b[v] - f.a[v];
    if (spread < 0 || spread > 2 * f.to_backbone[v] || spread > 2 * cfg.c) {
      violated("frame", "vertex " + std::to_string(v) + " has a=" + std::to_string(f.a[v]) + " b=" + std::to_string(f.b[v]) +
                            " at distance " + std::to_string(f.to_backbone[v]));
    }
  }
  return f;
}

std::optional<SolverOutcome> guard_r1(const Graph& g, const VertexSet& s, const VertexSet& t, const Frame& frame,
                                      const SolverConfig& cfg) {
  VertexSet near_backbone = ball(g, frame.backbone.vertices, 2);
  if (auto far = shortest_path(g, s, t, near_backbone)) {
    return SolverOutcome::two_paths(g, frame.backbone, std::move(*far), "guard_r1:far_from_backbone");
  }
  const Vertex r1 = frame.r(1);
  SeparatorResult sep = is_ball_separator(g, s, t, std::span<const Vertex>(&r1, 1), cfg.radius());
  if (sep.separates) return SolverOutcome::center_at(r1, cfg.radius(), "guard_r1:center");
  if (set_distance(g, sep.witness->vertices, frame.backbone.vertices) >= 3) {
    return SolverOutcome::two_paths(g, frame.backbone, std::move(*sep.witness), "guard_r1:escape");
  }
  if (frame.n - 2 < 8 * cfg.ell + cfg.c + 1) {
    violated("guard_r1", "escape path exists but n-2=" + std::to_string(frame.n - 2) + " < 8ell+c+1");
  }
  return std::nullopt;
}

std::optional<SolverOutcome> guard_small_n(const Graph& g, const VertexSet& s, const VertexSet& t, const Frame& frame,
                                           const SolverConfig& cfg) {
  if (frame.n >= 16 * cfg.ell) return std::nullopt;
  const Vertex mid = frame.r(frame.n / 2);
  SeparatorResult sep = is_ball_separator(g, s, t, std::span<const Vertex>(&mid, 1), cfg.radius());
  if (sep.separates) return SolverOutcome::center_at(mid, cfg.radius(), "guard_small_n:center");
  Distance d = set_distance(g, sep.witness->vertices, frame.backbone.vertices);
  if (d < 3) violated("guard_small_n", "escape path at distance " + std::to_string(d) + " from the backbone");
  return SolverOutcome::two_paths(g, frame.backbone, std::move(*sep.witness), "guard_small_n:escape");
}

std::vector<ComponentInfo> component_intervals(const Graph& g, const Frame& frame) {
  VertexSet removed = frame.w.united(frame.scope.complement());
  std::vector<ComponentInfo> out;
  for (VertexSet& comp : components_excluding(g, removed)) {
    ComponentInfo info;
    info.boundary = boundary(g, comp, frame.w);
    if (info.boundary.empty()) violated("components", "component without boundary");
    for (Vertex v : info.boundary) {
      if (!frame.surface.contains(v)) violated("components", "boundary vertex " + std::to_string(v) + " off the surface");
    }
    info.interval = hull(frame, comp);
    info.vertices = std::move(comp);
    out.push_back(std::move(info));
  }
  return out;
}

IntervalFamily interval_family(int horizon, const std::vector<Interval>& intervals) {
  return IntervalFamily(horizon, intervals);
}

namespace {

std::vector<Interval> intervals_of(const std::vector<ComponentInfo>& comps) {
  std::vector<Interval> out;
  for (const auto& c : comps) out.push_back(c.interval);
  return out;
}

std::vector<Interval> intervals_of(const std::vector<Supercomponent>& supers) {
  std::vector<Interval> out;
  for (const auto& f : supers) out.push_back(f.interval);
  return out;
}

}  // namespace

std::optional<SolverOutcome> certify_powerful_or_center(const Graph& g, const VertexSet& s, const VertexSet& t,
                                                        const Frame& frame, const std::vector<ComponentInfo>& comps,
                                                        const SolverConfig& cfg) {
  const IntervalFamily family = interval_family(frame.n, intervals_of(comps));
  for (int h : uncovered_offsets(family, 16 * cfg.ell)) {
    const int m = h + 8 * cfg.ell;
    const Vertex rm = frame.r(m);
    SeparatorResult sep = is_ball_separator(g, s, t, std::span<const Vertex>(&rm, 1), cfg.radius());
    if (sep.separates) return SolverOutcome::center_at(rm, cfg.radius(), "certify:center");
    violated("certify", "window (" + std::to_string(m - 8 * cfg.ell) + "," + std::to_string(m + 8 * cfg.ell) +
                            ") is not captured although ball(r_" + std::to_string(m) + ") does not separate");
  }
  return std::nullopt;
}

std::vector<int> select_components(const Frame& frame, const std::vector<ComponentInfo>& comps, const SolverConfig& cfg) {
  const auto candidates = intervals_of(comps);
  IntervalFamily chosen = select_family(interval_family(frame.n, candidates), 4 * cfg.ell, "select_components");
  std::vector<int> ids = map_back(chosen, candidates, "select_components");
  const auto& h = chosen.items();
  if (h.front().a != 0 || h.back().b != frame.n) violated("select_components", "selection does not span (0,n)");
  for (std::size_t i = 3; i < h.size(); ++i) {
    if (h[i].a - h[i - 3].b < 4 * cfg.ell) {
      violated("select_components", "a(D_" + std::to_string(i + 1) + ") - b(D_" + std::to_string(i - 2) + ") < 4ell");
    }
  }
  return ids;
}

VertexSet compute_joints(const Graph& g, const Frame& frame, const std::vector<ComponentInfo>& comps,
                         const std::vector<int>& selected, const SolverConfig& cfg) {
  constexpr int kMaxJoint = 8;
  const int nv = g.vertex_count();

  // Which selected components each surface vertex borders.
  std::vector<std::vector<int>> borders(static_cast<std::size_t>(nv));
  for (std::size_t i = 0; i < selected.size(); ++i) {
    for (Vertex v : comps[selected[i]].boundary) borders[v].push_back(static_cast<int>(i));
  }

  // A joint is connected, has <= 8 vertices, and meets the boundaries of two
  // distinct selected components, so each of its vertices lies within
  // distance 7 of two distinct boundaries. Find the two nearest distinct
  // boundary labels per vertex, up to that distance.
  std::vector<std::array<int, 2>> label(static_cast<std::size_t>(nv), {-1, -1});
  struct Entry {
    Vertex v;
    int label;
    Distance dist;
  };
  std::vector<Entry> queue;
  auto accept = [&](Vertex v, int lab) {
    auto& slot = label[v];
    if (slot[0] == lab || slot[1] == lab) return false;
    if (slot[0] < 0) {
      slot[0] = lab;
      return true;
    }
    if (slot[1] < 0) {
      slot[1] = lab;
      return true;
    }
    return false;
  };
  for (Vertex v = 0; v < nv; ++v) {
    for (int lab : borders[v]) {
      if (accept(v, lab)) queue.push_back({v, lab, 0});
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Entry e = queue[head];
    if (e.dist == kMaxJoint - 1) continue;
    for (Vertex u : g.neighbors(e.v)) {
      if (!frame.scope.contains(u)) continue;
      if (accept(u, e.label)) queue.push_back({u, e.label, e.dist + 1});
    }
  }

  std::vector<std::uint8_t> pool(static_cast<std::size_t>(nv), 0);
  for (Vertex v : frame.scope) {
    bool shallow = !frame.w.contains(v) || 2 * frame.to_surface[v] <= kMaxJoint - 1;
    pool[v] = shallow && label[v][1] >= 0;
  }
  std::vector<Vertex> seeds;
  for (Vertex v = 0; v < nv; ++v) {
    if (pool[v] && !borders[v].empty()) seeds.push_back(v);
  }

  std::atomic<std::uint64_t> visited{0};
  std::mutex merge_mu;
  std::vector<std::uint8_t> in_z(static_cast<std::size_t>(nv), 0);

  parallel_for(seeds.size(), cfg.workers, [&](std::size_t seed_index) {
    const Vertex root = seeds[seed_index];
    // Connected sets containing `root` in which root is the least boundary
    // vertex, each visited once (extension-set enumeration).
    auto allowed = [&](Vertex u) { return pool[u] && u != root && (borders[u].empty() || u > root); };
    std::vector<std::uint8_t> in_sub(static_cast<std::size_t>(nv), 0);
    std::vector<int> near(static_cast<std::size_t>(nv), 0);
    std::vector<Vertex> sub;
    std::vector<std::uint8_t> local_z(static_cast<std::size_t>(nv), 0);
    bool any = false;
    std::uint64_t local_visits = 0;

    auto add = [&](Vertex v) {
      sub.push_back(v);
      in_sub[v] = 1;
      for (Vertex u : g.neighbors(v)) ++near[u];
    };
    auto remove = [&] {
      Vertex v = sub.back();
      sub.pop_back();
      in_sub[v] = 0;
      for (Vertex u : g.neighbors(v)) --near[u];
    };
    auto evaluate = [&] {
      const int size = static_cast<int>(sub.size());
      std::array<int, 3> seen{-1, -1, -1};
      int distinct = 0;
      for (Vertex v : sub) {
        if (frame.w.contains(v) && 2 * frame.to_surface[v] > size - 1) return;
        for (int lab : borders[v]) {
          if (distinct < 3 && std::find(seen.begin(), seen.begin() + distinct, lab) == seen.begin() + distinct) {
            seen[distinct++] = lab;
          }
        }
      }
      if ((distinct >= 2 && size <= 3) || (distinct >= 3 && size <= kMaxJoint)) {
        for (Vertex v : sub) local_z[v] = 1;
        any = true;
      }
    };
    std::function<void(std::vector<Vertex>)> extend = [&](std::vector<Vertex> ext) {
      evaluate();
      if (++local_visits % 4096 == 0) {
        if ((visited += 4096) > cfg.joint_budget) {
          throw EnumerationBudgetExceeded("joint enumeration exceeded " + std::to_string(cfg.joint_budget) +
                                          " connected sets; use a smaller instance");
        }
      }
      if (static_cast<int>(sub.size()) == kMaxJoint) return;
      while (!ext.empty()) {
        Vertex w = ext.back();
        ext.pop_back();
        std::vector<Vertex> next = ext;
        for (Vertex u : g.neighbors(w)) {
          if (!in_sub[u] && near[u] == 0 && allowed(u)) next.push_back(u);
        }
        add(w);
        extend(std::move(next));
        remove();
      }
    };

    add(root);
    std::vector<Vertex> ext;
    for (Vertex u : g.neighbors(root)) {
      if (allowed(u)) ext.push_back(u);
    }
    extend(std::move(ext));

    if (any) {
      std::lock_guard lock(merge_mu);
      for (Vertex v = 0; v < nv; ++v) in_z[v] |= local_z[v];
    }
  });
  return VertexSet::from_mask(std::move(in_z));
}

std::vector<Supercomponent> build_supercomponents(const Graph& g, const Frame& frame,
                                                  const std::vector<ComponentInfo>& comps,
                                                  const std::vector<int>& selected, const VertexSet& joints,
                                                  const SolverConfig& cfg) {
  const int nv = g.vertex_count();
  std::vector<int> owner(static_cast<std::size_t>(nv), -1);
  std::vector<std::uint8_t> removed(static_cast<std::size_t>(nv), 1);
  for (Vertex v : joints) removed[v] = 0;
  for (std::size_t i = 0; i < selected.size(); ++i) {
    for (Vertex v : comps[selected[i]].vertices) {
      owner[v] = static_cast<int>(i);
      removed[v] = 0;
    }
  }
  std::vector<Supercomponent> out;
  for (VertexSet& part : components_excluding(g, VertexSet::from_mask(std::move(removed)))) {
    Supercomponent f;
    f.interval = hull(frame, part);
    for (Vertex v : part) {
      if (owner[v] >= 0) f.selected_members.push_back(owner[v]);
    }
    std::sort(f.selected_members.begin(), f.selected_members.end());
    f.selected_members.erase(std::unique(f.selected_members.begin(), f.selected_members.end()), f.selected_members.end());
    if (f.selected_members.empty()) violated("supercomponents", "supercomponent without a selected component");
    f.vertices = std::move(part);
    out.push_back(std::move(f));
  }
  if (!is_powerful(interval_family(frame.n, intervals_of(out)), 4 * cfg.ell)) {
    violated("supercomponents", "supercomponent intervals are not 4ell-powerful");
  }
  return out;
}

std::vector<int> select_supercomponents(const Frame& frame, const std::vector<Supercomponent>& supers,
                                        const SolverConfig& cfg) {
  const auto candidates = intervals_of(supers);
  IntervalFamily chosen = select_family(interval_family(frame.n, candidates), cfg.ell, "select_supercomponents");
  return map_back(chosen, candidates, "select_supercomponents");
}

PathPieces assemble_two_paths(const Graph& g, const VertexSet& s, const VertexSet& t, const Frame& frame,
                              const std::vector<Supercomponent>& supers, const std::vector<int>& chosen,
                              const SolverConfig& cfg) {
  const int nv = g.vertex_count();
  const int count = static_cast<int>(chosen.size());
  auto part = [&](int i) -> const Supercomponent& { return supers[chosen[static_cast<std::size_t>(i)]]; };
  auto left = [&](int i) { return part(i).interval.a; };
  auto right = [&](int i) { return part(i).interval.b; };

  PathPieces pieces;
  pieces.a.resize(static_cast<std::size_t>(count));
  pieces.b.resize(static_cast<std::size_t>(count));
  pieces.q.resize(static_cast<std::size_t>(count));

  for (Vertex v : part(0).vertices) {
    if (frame.a[v] == 0) {
      pieces.a[0].vertices = {v};
      break;
    }
  }
  if (pieces.a[0].vertices.empty()) violated("assembly", "H_1 has no vertex with a(v)=0");
  for (Vertex v : part(count - 1).vertices) {
    if (frame.b[v] == frame.n && t.contains(v)) {
      pieces.b[count - 1].vertices = {v};
      break;
    }
  }
  if (pieces.b[count - 1].vertices.empty()) violated("assembly", "H_s has no T vertex with b(v)=n");

  for (int i = 0; i < count; ++i) {
    const VertexSet& inside = part(i).vertices;
    if (i > 0) {
      auto p = shortest_path(g, single(nv, frame.r(left(i))), inside);
      if (!p) violated("assembly", "no access path into H_" + std::to_string(i + 1));
      pieces.a[i] = std::move(*p);
    }
    if (i + 1 < count) {
      auto p = shortest_path(g, inside, single(nv, frame.r(right(i))));
      if (!p) violated("assembly", "no access path out of H_" + std::to_string(i + 1));
      pieces.b[i] = std::move(*p);
    }
    for (const Path* access : {&pieces.a[i], &pieces.b[i]}) {
      if (access->length() > static_cast<std::size_t>(cfg.c + 1)) {
        violated("assembly", "access path of H_" + std::to_string(i + 1) + " has length " +
                                 std::to_string(access->length()) + " > c+1");
      }
    }
    auto q = shortest_path(g, single(nv, pieces.a[i].back()), single(nv, pieces.b[i].front()), inside.complement());
    if (!q) violated("assembly", "H_" + std::to_string(i + 1) + " does not connect its access points");
    pieces.q[i] = std::move(*q);
  }

  for (int i = 0; i < count; ++i) {
    int from = i == 0 ? 1 : right(i - 1);
    int to = i + 2 <= count ? left(i + 1) : frame.n - 1;
    pieces.segments.push_back(backbone_segment(frame, from, to));
  }

  auto weave = [&](int parity) {
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(nv), 0);
    auto mark = [&](const Path& p) {
      for (Vertex v : p.vertices) mask[v] = 1;
    };
    for (int i = 1; i <= count; ++i) {
      if (i % 2 != parity) continue;
      mark(pieces.a[i - 1]);
      mark(pieces.q[i - 1]);
      mark(pieces.b[i - 1]);
    }
    for (int i = 0; i < count; ++i) {
      if (i % 2 == parity) mark(pieces.segments[i]);
    }
    VertexSet outside = VertexSet::from_mask(std::move(mask)).complement();
    auto p = shortest_path(g, s, t, outside);
    if (!p) violated("assembly", std::string(parity ? "odd" : "even") + " union contains no S-T path");
    return *p;
  };
  pieces.odd = weave(1);
  pieces.even = weave(0);
  Distance gap = set_distance(g, pieces.odd.vertices, pieces.even.vertices);
  if (gap < 3) violated("assembly", "odd and even paths are at distance " + std::to_string(gap));
  return pieces;
}

std::optional<std::string> verify_outcome(const Graph& g, const VertexSet& s, const VertexSet& t,
                                          const SolverOutcome& outcome, Distance min_distance, Distance radius) {
  switch (outcome.kind) {
    case SolverOutcome::Kind::kTwoFarPaths: {
      if (!is_st_path(g, s, t, outcome.first)) return "first path is not an S-T path";
      if (!is_st_path(g, s, t, outcome.second)) return "second path is not an S-T path";
      Distance d = set_distance(g, outcome.first.vertices, outcome.second.vertices);
      if (d < min_distance) return "paths at distance " + std::to_string(d) + " < " + std::to_string(min_distance);
      return std::nullopt;
    }
    case SolverOutcome::Kind::kCenter: {
      if (outcome.radius != radius) return "center radius " + std::to_string(outcome.radius) + " != " + std::to_string(radius);
      if (!g.contains(outcome.center)) return "center outside the graph";
      if (!is_ball_separator(g, s, t, std::span<const Vertex>(&outcome.center, 1), radius).separates) {
        return "ball around center " + std::to_string(outcome.center) + " does not separate S from T";
      }
      return std::nullopt;
    }
    case SolverOutcome::Kind::kNoPath:
      if (!s.empty() && !t.empty() && shortest_path(g, s, t)) return "reported no path but S and T are connected";
      return std::nullopt;
  }
  return "unknown outcome";
}

std::vector<std::string> check_trace_claims(const Graph& g, const SolverTrace& trace, const SolverConfig& cfg) {
  std::vector<std::string> problems;
  if (!trace.frame) return problems;
  const Frame& frame = *trace.frame;

  if (!trace.components.empty() && frame.n >= 16 * cfg.ell) {
    if (!is_powerful(interval_family(frame.n, intervals_of(trace.components)), 16 * cfg.ell)) {
      problems.push_back("component intervals are not 16ell-powerful");
    }
  }

  const auto& sel = trace.selected_components;
  for (std::size_t i = 0; i < sel.size(); ++i) {
    if (i + 3 >= sel.size()) break;
    auto dist = distances_from(g, trace.components[sel[i]].vertices.members());
    for (std::size_t j = i + 3; j < sel.size(); ++j) {
      Distance d = min_over(dist, trace.components[sel[j]].vertices);
      if (d < 4 * cfg.ell - 2 * cfg.c + 2) {
        problems.push_back("d(D_" + std::to_string(i + 1) + ",D_" + std::to_string(j + 1) + ")=" + std::to_string(d) +
                           " < 4ell-2c+2");
      }
    }
  }

  std::vector<std::pair<int, const Path*>> access;
  if (trace.pieces) {
    const auto& h = trace.selected_supercomponents;
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (i > 0) access.emplace_back(h[i], &trace.pieces->a[i]);
      if (i + 1 < h.size()) access.emplace_back(h[i], &trace.pieces->b[i]);
    }
  }
  const auto& supers = trace.supercomponents;
  for (std::size_t i = 0; i < supers.size(); ++i) {
    auto dist = distances_from(g, supers[i].vertices.members());
    for (std::size_t j = i + 1; j < supers.size(); ++j) {
      Distance d = min_over(dist, supers[j].vertices);
      if (d < 5) {
        problems.push_back("supercomponents " + std::to_string(i) + " and " + std::to_string(j) + " at distance " +
                           std::to_string(d));
      }
    }
    for (auto [owner, path] : access) {
      if (owner == static_cast<int>(i)) continue;
      Distance d = min_over(dist, *path);
      if (d < 3) {
        problems.push_back("access path of supercomponent " + std::to_string(owner) + " within " + std::to_string(d) +
                           " of supercomponent " + std::to_string(i));
      }
    }
  }
  return problems;
}

std::pair<SolverOutcome, SolverTrace> solve_k2(const Graph& g, const VertexSet& s, const VertexSet& t,
                                               const SolverConfig& cfg) {
  cfg.validate();
  SolverTrace trace;
  auto finish = [&](SolverOutcome out) {
    trace.log.push_back("outcome from " + out.stage);
    if (cfg.self_verify) {
      if (auto bad = verify_outcome(g, s, t, out, 3, cfg.radius())) violated("self_verify", *bad);
    }
    return std::make_pair(std::move(out), std::move(trace));
  };

  std::optional<Path> backbone;
  if (!s.empty() && !t.empty()) backbone = shortest_path(g, s, t);
  if (!backbone) {
    SolverOutcome none;
    none.kind = SolverOutcome::Kind::kNoPath;
    none.stage = "no_path";
    return finish(std::move(none));
  }

  trace.frame = build_frame(g, s, t, *backbone, cfg);
  const Frame& frame = *trace.frame;
  trace.log.push_back("backbone with n=" + std::to_string(frame.n));

  if (auto out = guard_r1(g, s, t, frame, cfg)) return finish(std::move(*out));
  if (auto out = guard_small_n(g, s, t, frame, cfg)) return finish(std::move(*out));

  trace.components = component_intervals(g, frame);
  trace.log.push_back(std::to_string(trace.components.size()) + " components outside W");
  if (auto out = certify_powerful_or_center(g, s, t, frame, trace.components, cfg)) return finish(std::move(*out));

  trace.selected_components = select_components(frame, trace.components, cfg);
  trace.log.push_back(std::to_string(trace.selected_components.size()) + " selected components");
  trace.joints = compute_joints(g, frame, trace.components, trace.selected_components, cfg);
  trace.log.push_back(std::to_string(trace.joints.size()) + " joint vertices");
  trace.supercomponents =
      build_supercomponents(g, frame, trace.components, trace.selected_components, trace.joints, cfg);
  trace.selected_supercomponents = select_supercomponents(frame, trace.supercomponents, cfg);
  trace.log.push_back(std::to_string(trace.selected_supercomponents.size()) + " selected supercomponents");
  trace.pieces = assemble_two_paths(g, s, t, frame, trace.supercomponents, trace.selected_supercomponents, cfg);

  if (cfg.self_verify) {
    auto problems = check_trace_claims(g, trace, cfg);
    if (!problems.empty()) violated("trace", problems.front());
  }
  return finish(SolverOutcome::two_paths(g, trace.pieces->odd, trace.pieces->even, "assembly"));
}

GeneralOutcome solve_general(const Graph& g, const VertexSet& s, const VertexSet& t, int d, const SolverConfig& cfg) {
  if (d < 3) throw SolverError("solve_general: d must be >= 3");
  const Graph lifted = power(g, d);
  auto [inner, trace] = solve_k2(lifted, s, t, cfg);

  GeneralOutcome result;
  result.outcome = inner;
  result.outcome.stage = "power:" + inner.stage;
  switch (inner.kind) {
    case SolverOutcome::Kind::kNoPath:
      break;
    case SolverOutcome::Kind::kCenter:
      result.outcome.radius = d * cfg.radius();
      break;
    case SolverOutcome::Kind::kTwoFarPaths: {
      auto expand = [&](const Path& p) {
        std::vector<Vertex> walk{p.front()};
        for (std::size_t i = 1; i < p.vertices.size(); ++i) {
          auto hop = shortest_path(g, single(g.vertex_count(), p.vertices[i - 1]), single(g.vertex_count(), p.vertices[i]));
          walk.insert(walk.end(), hop->vertices.begin() + 1, hop->vertices.end());
        }
        return loop_erase(walk, g.vertex_count());
      };
      result.outcome = SolverOutcome::two_paths(g, expand(inner.first), expand(inner.second), result.outcome.stage);
      break;
    }
  }
  if (auto bad = verify_outcome(g, s, t, result.outcome, d, d * cfg.radius())) {
    result.failure = *bad;
  } else {
    result.verified = true;
  }
  return result;
}

}  // namespace coarse_menger
