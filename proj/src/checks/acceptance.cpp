#include "coarse_menger/checks/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "coarse_menger/checks/reference.hpp"
#include "coarse_menger/construction.hpp"
#include "coarse_menger/distance.hpp"
#include "coarse_menger/families.hpp"
#include "coarse_menger/oracle.hpp"
#include "coarse_menger/report.hpp"
#include "coarse_menger/solver.hpp"

namespace coarse_menger {
namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

CriterionResult begin(int id, std::string title) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  return r;
}

// Tally of named failures, printed as "name=count".
class Violations {
 public:
  void add(const std::string& what, const std::string& example = {}) {
    auto& slot = counts_[what];
    if (slot.first++ == 0) slot.second = example;
  }
  bool empty() const { return counts_.empty(); }
  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, entry] : counts_) {
      os << (first ? "" : "; ") << name << "=" << entry.first;
      if (!entry.second.empty()) os << " (e.g. " << entry.second << ")";
      first = false;
    }
    return os.str();
  }

 private:
  std::map<std::string, std::pair<int, std::string>> counts_;
};

std::string show(const IntervalFamily& f) {
  std::ostringstream os;
  os << "n=" << f.horizon() << " {";
  for (std::size_t i = 0; i < f.items().size(); ++i) {
    os << (i ? "," : "") << "(" << f.items()[i].a << "," << f.items()[i].b << ")";
  }
  os << "}";
  return os.str();
}

// Random family on (0,n) that is 4*ell-powerful: random intervals, then one
// extra interval for every window still uncovered.
IntervalFamily random_powerful_family(std::mt19937_64& rng, int n, int ell) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int width = 4 * ell;
  std::vector<Interval> items;
  const int count = pick(0, 10);
  for (int i = 0; i < count; ++i) {
    int a = pick(0, n);
    int b = std::min(n, a + pick(0, 3 * width));
    items.push_back({a, b});
  }
  for (int h = 0; h + width <= n; ++h) {
    bool covered = false;
    for (const auto& iv : items) covered = covered || (iv.a <= h && h + width <= iv.b);
    if (!covered) items.push_back({std::max(0, h - pick(0, ell)), std::min(n, h + width + pick(0, 2 * ell))});
  }
  std::shuffle(items.begin(), items.end(), rng);
  return IntervalFamily(n, std::move(items));
}

bool is_subfamily(const IntervalFamily& sub, const IntervalFamily& of) {
  for (const auto& iv : sub.items()) {
    if (std::find(of.items().begin(), of.items().end(), iv) == of.items().end()) return false;
  }
  return true;
}

std::string outcome_signature(const SolverOutcome& out, const SolverTrace& trace) {
  Json sig = outcome_json(out, true);
  sig["selected_components"] = trace.selected_components;
  sig["joints"] = set_json(trace.joints);
  sig["selected_supercomponents"] = trace.selected_supercomponents;
  return sig.dump();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f s", s);
  return buf;
}

}  // namespace

CriterionResult check_counterexample_separators(const AcceptanceOptions& opt) {
  Stopwatch clock;
  auto r = begin(1, "counterexample has no two-ball separator");
  std::ostringstream detail;
  bool ok = true;
  for (int ell : {1, 2}) {
    const LabeledGadget g = build_counterexample(ell);
    const int expected_vertices = ell == 1 ? 99 : 645;
    Stopwatch local;
    auto found = exhaustive_separator_search(g.graph, g.s, g.t, 2, ell, opt.workers);
    const bool clean = !found.no_path && !found.separator && g.graph.vertex_count() == expected_vertices;
    ok = ok && clean;
    detail << (ell == 1 ? "" : "; ") << "ell=" << ell << ": " << g.graph.vertex_count() << " vertices, " << found.candidates
           << " sets, " << (found.separator ? "separator found" : "none") << " in " << fmt_seconds(local.seconds());
  }
  r.passed = ok;
  r.detail = detail.str();
  r.seconds = clock.seconds();
  return r;
}

CriterionResult check_gadget_dichotomy(const AcceptanceOptions&) {
  Stopwatch clock;
  auto r = begin(2, "gadget path-pair dichotomy");
  std::ostringstream detail;
  bool ok = true;
  for (int k : {2, 3, 4}) {
    const DichotomyReport rep = verify_gadget_dichotomy(k);
    const auto naive = reference::gadget_dichotomy(k);
    ok = ok && rep.violations == 0 && naive.violations == 0 && naive.pairs == rep.pairs;
    detail << (k == 2 ? "" : "; ") << "k=" << k << ": " << rep.pairs << " pairs, " << rep.violations << " violations (recount "
           << naive.pairs << "/" << naive.violations << ")";
  }
  r.passed = ok;
  r.detail = detail.str();
  r.seconds = clock.seconds();
  return r;
}

CriterionResult check_three_path_nonexistence(const AcceptanceOptions& opt) {
  Stopwatch clock;
  auto r = begin(3, "no three far paths, two exist");
  const LabeledGadget g = build_counterexample(1);
  SearchBudget budget;
  budget.max_nodes = 100'000'000;
  const FarPathsResult three = search_far_paths(g.graph, g.s, g.t, 3, 3, budget, opt.workers);
  const FarPathsResult two = search_far_paths(g.graph, g.s, g.t, 2, 3, budget, opt.workers);
  const bool three_ok = three.kind != FarPathsResult::Kind::kFound;
  const bool two_ok = two.kind == FarPathsResult::Kind::kFound && verify_far_paths(g.graph, g.s, g.t, two.paths, 3);
  std::ostringstream detail;
  detail << "k=3: "
         << (three.kind == FarPathsResult::Kind::kNoneExists  ? "none exist"
             : three.kind == FarPathsResult::Kind::kFound     ? "FOUND"
                                                              : "budget exhausted")
         << " after " << three.nodes << " nodes; k=2: " << (two_ok ? "found and re-verified" : "not found");
  r.passed = three_ok && two_ok;
  r.detail = detail.str();
  r.seconds = clock.seconds();
  return r;
}

CriterionResult check_interval_engine(const AcceptanceOptions& opt) {
  Stopwatch clock;
  auto r = begin(4, "interval selection guarantees");
  std::mt19937_64 rng(opt.seed);
  Violations bad;
  int exhaustive = 0;
  for (int trial = 0; trial < opt.interval_families; ++trial) {
    const int n = std::uniform_int_distribution<int>(4, 60)(rng);
    const int ell = std::uniform_int_distribution<int>(1, n / 4)(rng);
    const IntervalFamily family = random_powerful_family(rng, n, ell);

    for (int width : {ell, 2 * ell, 4 * ell}) {
      const IntervalFamily pruned = prune_minimal(family, width);
      if (!reference::powerful(pruned.items(), n, width)) bad.add("prune: not powerful", show(family));
      for (std::size_t i = 0; i < pruned.size(); ++i) {
        auto rest = pruned.items();
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        if (reference::powerful(rest, n, width)) bad.add("prune: removable member", show(family));
      }
      if (n <= 24 && family.size() <= 10) {
        ++exhaustive;
        if (!reference::inclusion_minimal(pruned.items(), n, width)) bad.add("prune: not inclusion-minimal", show(family));
      }
      if (check_far_ends(pruned, width)) bad.add("prune: far-end inequality", show(family));
    }

    for (int width : {ell, 2 * ell}) {
      const IntervalFamily chosen = int2_select(family, width);
      const std::string tag = "greedy(" + std::string(width == ell ? "ell" : "2ell") + "): ";
      if (!reference::powerful(chosen.items(), n, width)) bad.add(tag + "not powerful", show(family));
      if (!is_subfamily(chosen, family)) bad.add(tag + "not a subfamily", show(family));
      if (check_far_ends(chosen, width)) bad.add(tag + "far-end inequality", show(family));
      if (check_right_end_gaps(chosen, width)) bad.add(tag + "right-end gaps", show(family));
      if (auto why = check_overlap_gaps(chosen, width)) bad.add(tag + "overlap gaps", show(family) + " ell=" + std::to_string(width) + ": " + *why);
    }

    try {
      const IntervalFamily chosen = mainint_select(family, ell);
      if (!reference::powerful(chosen.items(), n, ell)) bad.add("main: not powerful", show(family));
      if (!is_subfamily(chosen, family)) bad.add("main: not a subfamily", show(family));
      if (auto why = check_interleaving(chosen)) bad.add("main: order chain", show(family) + ": " + *why);
      if (auto why = check_endpoint_gaps(chosen, ell)) {
        bad.add("main: endpoint gaps", show(family) + " ell=" + std::to_string(ell) + ": " + *why);
      }
    } catch (const IntervalError& e) {
      bad.add("main: threw", show(family) + ": " + e.what());
    }
  }
  std::ostringstream detail;
  detail << opt.interval_families << " families, " << exhaustive << " exhaustive minimality checks; ";
  detail << (bad.empty() ? "no violations" : bad.str());
  r.passed = bad.empty();
  r.detail = detail.str();
  r.seconds = clock.seconds();
  return r;
}

CriterionResult check_solver_soundness(const AcceptanceOptions& opt) {
  Stopwatch clock;
  auto r = begin(5, "solver outcomes self-verify");
  const auto corpus = solver_fuzz_corpus(opt.fuzz_instances, opt.seed);
  Violations bad;
  std::map<std::string, int> stages;
  SolverConfig cfg;
  for (const auto& [name, inst] : corpus) {
    std::string first;
    for (int workers : {opt.workers, opt.alt_workers, opt.workers}) {
      cfg.workers = workers;
      try {
        auto [out, trace] = solve_k2(inst.graph, inst.s, inst.t, cfg);
        if (auto why = verify_outcome(inst.graph, inst.s, inst.t, out, 3, cfg.radius())) bad.add("unverified outcome", name + ": " + *why);
        if (out.kind == SolverOutcome::Kind::kCenter && out.radius != 161) bad.add("center radius != 161", name);
        std::string sig = outcome_signature(out, trace);
        if (first.empty()) {
          first = sig;
          ++stages[out.stage];
        } else if (sig != first) {
          bad.add("nondeterministic", name + " with " + std::to_string(workers) + " workers");
        }
      } catch (const InternalInvariantViolation& e) {
        bad.add("internal invariant", name + ": " + e.what());
        break;
      } catch (const std::exception& e) {
        bad.add("error", name + ": " + e.what());
        break;
      }
    }
  }
  std::ostringstream detail;
  detail << corpus.size() << " instances x3 runs (workers " << opt.workers << "/" << opt.alt_workers << "/" << opt.workers << "); stages:";
  for (const auto& [stage, count] : stages) detail << " " << stage << "=" << count;
  if (!bad.empty()) detail << "; " << bad.str();
  r.passed = bad.empty();
  r.detail = detail.str();
  r.seconds = clock.seconds();
  return r;
}

CriterionResult check_directed_endpoints(const AcceptanceOptions& opt) {
  Stopwatch clock;
  auto r = begin(6, "directed endpoint outcomes");
  SolverConfig cfg;
  cfg.workers = opt.workers;
  std::ostringstream detail;
  bool ok = true;

  const Instance line = path_instance(999);
  auto [line_out, line_trace] = solve_k2(line.graph, line.s, line.t, cfg);
  const bool line_ok = line_out.kind == SolverOutcome::Kind::kCenter && line_out.center == line_trace.frame->r(1) &&
                       line_out.radius == 161;
  ok = ok && line_ok;
  detail << "path 0..999: " << (line_ok ? "center r_1 radius 161" : "unexpected " + line_out.stage);

  const Instance pair = double_corridor(400);
  auto pair_out = solve_k2(pair.graph, pair.s, pair.t, cfg).first;
  const bool pair_ok = pair_out.kind == SolverOutcome::Kind::kTwoFarPaths;
  ok = ok && pair_ok;
  detail << "; two corridors: " << (pair_ok ? "two far paths" : "unexpected " + pair_out.stage);

  const Instance ce = build_counterexample(1).instance();
  auto ce_out = solve_k2(ce.graph, ce.s, ce.t, cfg).first;
  const bool ce_ok = ce_out.kind == SolverOutcome::Kind::kTwoFarPaths &&
                     set_distance(ce.graph, ce_out.first.vertices, ce_out.second.vertices) >= 3;
  ok = ok && ce_ok;
  detail << "; counterexample ell=1: " << (ce_ok ? "two far paths" : "unexpected " + ce_out.stage);

  r.passed = ok;
  r.detail = detail.str();
  r.seconds = clock.seconds();
  return r;
}

CriterionResult check_general_wrapper(const AcceptanceOptions& opt) {
  Stopwatch clock;
  auto r = begin(7, "distance-6 wrapper verifies");
  SolverConfig cfg;
  cfg.workers = opt.workers;
  Violations bad;
  int paths = 0;
  int centers = 0;
  const auto corpus = double_corridor_corpus();
  for (const auto& [name, inst] : corpus) {
    try {
      GeneralOutcome res = solve_general(inst.graph, inst.s, inst.t, 6, cfg);
      if (!res.verified) {
        bad.add("verification failed", name + ": " + res.failure);
        continue;
      }
      if (res.outcome.kind == SolverOutcome::Kind::kTwoFarPaths) {
        ++paths;
        if (set_distance(inst.graph, res.outcome.first.vertices, res.outcome.second.vertices) < 6) bad.add("paths closer than 6", name);
      } else if (res.outcome.kind == SolverOutcome::Kind::kCenter) {
        ++centers;
        if (res.outcome.radius > 6 * 161) bad.add("radius above 6*161", name);
      } else {
        bad.add("no path", name);
      }
    } catch (const std::exception& e) {
      bad.add("error", name + ": " + e.what());
    }
  }
  std::ostringstream detail;
  detail << corpus.size() << " corridor instances: " << paths << " two far paths, " << centers << " centers";
  if (!bad.empty()) detail << "; " << bad.str();
  r.passed = bad.empty();
  r.detail = detail.str();
  r.seconds = clock.seconds();
  return r;
}

CriterionResult check_trace_assertions(const AcceptanceOptions& opt) {
  Stopwatch clock;
  auto r = begin(8, "assembly trace claims");
  const auto corpus = solver_fuzz_corpus(opt.fuzz_instances, opt.seed);
  SolverConfig cfg;
  cfg.workers = opt.workers;
  cfg.self_verify = false;
  Violations bad;
  int assembled = 0;
  for (const auto& [name, inst] : corpus) {
    try {
      auto [out, trace] = solve_k2(inst.graph, inst.s, inst.t, cfg);
      if (!trace.pieces) continue;
      ++assembled;
      for (const std::string& problem : check_trace_claims(inst.graph, trace, cfg)) bad.add("claim", name + ": " + problem);
    } catch (const std::exception& e) {
      bad.add("error", name + ": " + e.what());
    }
  }
  std::ostringstream detail;
  detail << assembled << " of " << corpus.size() << " instances reached assembly";
  detail << (bad.empty() ? "; all claims hold" : "; " + bad.str());
  r.passed = bad.empty() && assembled > 0;
  r.detail = detail.str();
  r.seconds = clock.seconds();
  return r;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << "criterion " << r.id << " " << (r.passed ? "PASS" : "FAIL") << "  " << r.title << ": " << r.detail << " ["
     << fmt_seconds(r.seconds) << "]";
  return os.str();
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt, std::ostream& out) {
  using Check = CriterionResult (*)(const AcceptanceOptions&);
  const Check checks[] = {check_counterexample_separators, check_gadget_dichotomy, check_three_path_nonexistence,
                          check_interval_engine,           check_solver_soundness, check_directed_endpoints,
                          check_general_wrapper,           check_trace_assertions};
  std::vector<CriterionResult> results;
  for (Check check : checks) {
    CriterionResult res;
    try {
      res = check(opt);
    } catch (const std::exception& e) {
      res.id = static_cast<int>(results.size()) + 1;
      res.title = "crashed";
      res.detail = e.what();
    }
    out << format_result(res) << std::endl;
    results.push_back(std::move(res));
  }
  return results;
}

}  // namespace coarse_menger
