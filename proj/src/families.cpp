#include "coarse_menger/families.hpp"

#include <algorithm>
#include <random>

#include "coarse_menger/construction.hpp"

namespace coarse_menger {
namespace {

class Builder {
 public:
  Vertex add() { return count_++; }

  void edge(Vertex u, Vertex v) { edges_.emplace_back(u, v); }

  // New path hanging off `from` with `len` edges; returns its vertices, far end last.
  std::vector<Vertex> chain(Vertex from, int len) {
    std::vector<Vertex> out;
    Vertex prev = from;
    for (int i = 0; i < len; ++i) {
      Vertex v = add();
      edge(prev, v);
      out.push_back(v);
      prev = v;
    }
    return out;
  }

  // Path of `len` edges from u to v through new vertices.
  void link(Vertex u, Vertex v, int len) {
    auto mid = chain(u, len - 1);
    edge(mid.empty() ? u : mid.back(), v);
  }

  Instance finish(const std::vector<Vertex>& s, const std::vector<Vertex>& t, bool strict = true) const {
    Graph g = Graph::build(count_, edges_, strict);
    return {g, VertexSet(count_, s), VertexSet(count_, t)};
  }

  int count() const { return count_; }

 private:
  int count_ = 0;
  std::vector<std::pair<Vertex, Vertex>> edges_;
};

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

}  // namespace

Instance path_instance(int edges) {
  Builder b;
  Vertex first = b.add();
  auto rest = b.chain(first, edges);
  return b.finish({first}, {rest.empty() ? first : rest.back()});
}

Instance double_corridor(int edges, int rung_len, int spacing) {
  Builder b;
  Vertex top0 = b.add();
  Vertex bot0 = b.add();
  std::vector<Vertex> top{top0};
  std::vector<Vertex> bot{bot0};
  for (Vertex v : b.chain(top0, edges)) top.push_back(v);
  for (Vertex v : b.chain(bot0, edges)) bot.push_back(v);
  if (rung_len > 0 && spacing > 0) {
    for (int i = 0; i <= edges; i += spacing) b.link(top[i], bot[i], rung_len);
  }
  return b.finish({top.front(), bot.front()}, {top.back(), bot.back()});
}

Instance grid_instance(int rows, int cols) {
  Builder b;
  std::vector<Vertex> id(static_cast<std::size_t>(rows * cols));
  for (auto& v : id) v = b.add();
  std::vector<Vertex> s;
  std::vector<Vertex> t;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      Vertex v = id[r * cols + c];
      if (c + 1 < cols) b.edge(v, id[r * cols + c + 1]);
      if (r + 1 < rows) b.edge(v, id[(r + 1) * cols + c]);
    }
    s.push_back(id[r * cols]);
    t.push_back(id[r * cols + cols - 1]);
  }
  return b.finish(s, t);
}

Instance cycle_instance(int length) {
  Builder b;
  Vertex first = b.add();
  auto rest = b.chain(first, length - 1);
  b.edge(rest.back(), first);
  const Vertex half = length / 2;
  const Vertex quarter = length / 4;
  return b.finish({0, half}, {quarter, (half + quarter) % length});
}

Instance hook_instance(int backbone, int contact, int reach) {
  Builder b;
  Vertex first = b.add();
  std::vector<Vertex> r{first};
  for (Vertex v : b.chain(first, backbone)) r.push_back(v);
  Vertex touch = b.chain(r[contact], 1).back();
  Vertex s_end = b.chain(touch, reach).back();
  Vertex t_end = b.chain(touch, reach).back();
  return b.finish({r.front(), s_end}, {r.back(), t_end});
}

Instance random_sparse(int n, int extra, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Builder b;
  b.add();
  // Parents close behind keep the tree long and thin on some seeds.
  const int reach = coin(rng, 0.5) ? 3 : n;
  for (int v = 1; v < n; ++v) {
    Vertex u = b.add();
    b.edge(u, v - uniform(rng, 1, std::min(v, reach)));
  }
  for (int i = 0; i < extra; ++i) {
    Vertex u = uniform(rng, 0, n - 1);
    Vertex v = uniform(rng, 0, n - 1);
    if (u != v) b.edge(u, v);
  }
  std::vector<Vertex> s(static_cast<std::size_t>(uniform(rng, 1, 3)));
  std::vector<Vertex> t(static_cast<std::size_t>(uniform(rng, 1, 3)));
  for (auto& v : s) v = uniform(rng, 0, n - 1);
  for (auto& v : t) v = uniform(rng, 0, n - 1);
  return b.finish(s, t, false);
}

Instance braid_instance(const BraidOptions& opt, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Builder b;
  const int last = opt.backbone + 1;  // corridor positions 1..last
  std::vector<Vertex> r(static_cast<std::size_t>(last) + 1, -1);
  r[1] = b.add();
  for (int p = 2; p <= last; ++p) {
    r[p] = b.add();
    b.edge(r[p - 1], r[p]);
  }

  struct Detour {
    int x = 0;
    int y = 0;
    int height = 0;
    std::vector<Vertex> above;  // above[p - x] sits over corridor position p
    std::vector<Vertex> right_rung;
  };
  std::vector<Detour> detours;
  int x = 1;
  while (true) {
    Detour d;
    d.x = x;
    d.y = x + uniform(rng, opt.span_min, opt.span_max);
    d.height = uniform(rng, opt.height_min, opt.height_max);
    const bool final = d.y >= last - 250;
    if (final) d.y = last;
    d.above.push_back(b.add());
    for (Vertex v : b.chain(d.above.front(), d.y - d.x)) d.above.push_back(v);
    if (!detours.empty()) b.link(r[d.x], d.above.front(), d.height);
    if (!final) {
      d.right_rung = b.chain(r[d.y], d.height - 1);
      b.edge(d.right_rung.back(), d.above.back());
    }
    detours.push_back(std::move(d));
    if (final) break;
    x = detours.back().y - uniform(rng, opt.overlap_min, opt.overlap_min + 80);
  }

  constexpr int kSurface = 7;
  for (std::size_t i = 0; i + 1 < detours.size(); ++i) {
    const Detour& lo = detours[i];
    const Detour& hi = detours[i + 1];
    if (coin(rng, opt.y_joint_prob) && lo.height > kSurface + 1) {
      // Surface vertex of lo's right rung, branching into hi.
      Vertex w = lo.right_rung[kSurface - 1];
      b.link(w, hi.above[lo.y - hi.x], hi.height - kSurface);
    }
    if (i + 2 < detours.size() && coin(rng, opt.tripod_prob)) {
      const Detour& top = detours[i + 2];
      if (top.x + 5 < lo.y) {
        int p = uniform(rng, top.x + 1, lo.y - 1);
        Vertex w = b.chain(r[p], kSurface).back();
        for (const Detour* d : {&lo, &hi, &top}) b.link(w, d->above[p - d->x], d->height - kSurface);
      }
    }
  }

  for (int i = 0; i < opt.pendants; ++i) {
    Vertex at = uniform(rng, 0, b.count() - 1);
    int size = uniform(rng, 1, 30);
    std::vector<Vertex> tree{at};
    for (int j = 0; j < size; ++j) {
      Vertex v = b.add();
      b.edge(tree[uniform(rng, 0, static_cast<int>(tree.size()) - 1)], v);
      tree.push_back(v);
    }
  }
  return b.finish({r[1], detours.front().above.front()}, {r[last], detours.back().above.back()});
}

std::vector<NamedInstance> solver_fuzz_corpus(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<NamedInstance> out;
  for (int i = 0; out.size() < static_cast<std::size_t>(count); ++i) {
    const std::uint64_t sub = rng();
    std::string tag = "#" + std::to_string(i);
    switch (i % 11) {
      case 0: {
        int n = uniform(rng, 20, 3000);
        out.push_back({"random_sparse" + tag, random_sparse(n, uniform(rng, 0, n / 8), sub)});
        break;
      }
      case 1: {
        int rows = uniform(rng, 1, 8);
        int cols = uniform(rng, 2, 400);
        out.push_back({"grid " + std::to_string(rows) + "x" + std::to_string(cols), grid_instance(rows, cols)});
        break;
      }
      case 2: {
        int len = uniform(rng, 1, 1500);
        out.push_back({"path " + std::to_string(len), path_instance(len)});
        break;
      }
      case 3: {
        int len = uniform(rng, 1, 800);
        int rung = uniform(rng, 0, 6);
        out.push_back({"double_corridor" + tag, double_corridor(len, rung, uniform(rng, 1, 60))});
        break;
      }
      case 4: {
        int len = uniform(rng, 4, 3000);
        out.push_back({"cycle " + std::to_string(len), cycle_instance(len)});
        break;
      }
      case 5: {
        BraidOptions opt;
        opt.backbone = uniform(rng, 700, 2400);
        out.push_back({"braid" + tag, braid_instance(opt, sub)});
        break;
      }
      case 6: {
        BraidOptions opt;
        opt.backbone = uniform(rng, 700, 2000);
        opt.y_joint_prob = 0.5;
        opt.pendants = uniform(rng, 0, 40);
        out.push_back({"braid_joints" + tag, braid_instance(opt, sub)});
        break;
      }
      case 7: {
        BraidOptions opt;
        opt.backbone = uniform(rng, 900, 2000);
        opt.span_min = 700;
        opt.overlap_min = 460;
        opt.tripod_prob = 0.7;
        opt.y_joint_prob = 0.3;
        out.push_back({"braid_tripods" + tag, braid_instance(opt, sub)});
        break;
      }
      case 8: {
        int len = uniform(rng, 170, 1200);
        int contact = uniform(rng, 0, len);
        out.push_back({"hook" + tag, hook_instance(len, contact, uniform(rng, 1, 400))});
        break;
      }
      case 9: {
        BraidOptions opt;
        opt.backbone = uniform(rng, 900, 2400);
        opt.overlap_min = uniform(rng, 0, 300);
        opt.pendants = uniform(rng, 0, 10);
        out.push_back({"braid_thin" + tag, braid_instance(opt, sub)});
        break;
      }
      default: {
        int pick = i / 11 % 3;
        if (pick == 0) out.push_back({"counterexample ell=1", build_counterexample(1).instance()});
        if (pick == 1) out.push_back({"counterexample ell=2", build_counterexample(2).instance()});
        if (pick == 2) out.push_back({"counterexample ell=1 x2", replicate(build_counterexample(1).instance(), 2)});
        break;
      }
    }
  }
  return out;
}

std::vector<NamedInstance> double_corridor_corpus() {
  std::vector<NamedInstance> out;
  for (int len : {50, 400, 1500}) {
    out.push_back({"disjoint corridors " + std::to_string(len), double_corridor(len)});
    for (int rung : {7, 13, 19}) {
      for (int spacing : {25, 300}) {
        out.push_back({"corridors " + std::to_string(len) + " rung " + std::to_string(rung) + " every " +
                           std::to_string(spacing),
                       double_corridor(len, rung, spacing)});
      }
    }
  }
  return out;
}

}  // namespace coarse_menger
