#include "coarse_menger/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

#include "coarse_menger/checks/acceptance.hpp"
#include "coarse_menger/construction.hpp"
#include "coarse_menger/distance.hpp"
#include "coarse_menger/dot.hpp"
#include "coarse_menger/graph_io.hpp"
#include "coarse_menger/oracle.hpp"
#include "coarse_menger/parallel.hpp"
#include "coarse_menger/report.hpp"
#include "coarse_menger/solver.hpp"

namespace coarse_menger {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Timer {
 public:
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Instance load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return read_instance(in);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

void check_vertices(const Graph& g, const std::vector<Vertex>& vs, const std::string& flag) {
  for (Vertex v : vs) {
    if (!g.contains(v)) throw UsageError(flag + ": vertex " + std::to_string(v) + " out of range");
  }
}

void emit(std::ostream& out, const Json& report) { out << report.dump(2) << '\n'; }

struct GenArgs {
  int ell = 1;
  std::optional<int> depth;
  std::optional<int> subdiv;
  bool gadget = false;
  bool allow_weak = false;
  std::string output;
};

int run_gen(const GenArgs& a, std::ostream& out) {
  Timer timer;
  LabeledGadget g = a.gadget ? build_gadget(a.depth.value_or(2)) : build_counterexample(a.ell, a.depth, a.subdiv, a.allow_weak);
  const std::string text = to_text(g.instance());
  if (a.output.empty()) {
    out << text;
    return kExitOk;
  }
  write_file(a.output, text);
  const std::string labels = std::filesystem::path(a.output).replace_extension(".labels.json").string();
  write_file(labels, gadget_labels_json(g).dump(2) + "\n");
  emit(out, {{"command", "gen"},
             {"params",
              {{"ell", a.ell}, {"depth", g.spec.depth}, {"subdiv", g.spec.subdivision_len}, {"gadget", a.gadget}}},
             {"outcome",
              {{"vertices", g.graph.vertex_count()},
               {"edges", g.graph.edge_count()},
               {"max_degree", g.graph.max_degree()}}},
             {"files", {a.output, labels}},
             {"elapsed_ms", timer.ms()}});
  return kExitOk;
}

struct SolveArgs {
  std::string input;
  int c = 7;
  int ell = 19;
  int d = 3;
  std::string trace;
  bool no_self_verify = false;
  std::optional<int> workers;
};

int run_solve(const SolveArgs& a, std::ostream& out) {
  Timer timer;
  const Instance inst = load(a.input);
  SolverConfig cfg;
  cfg.c = a.c;
  cfg.ell = a.ell;
  cfg.self_verify = !a.no_self_verify;
  cfg.workers = resolve_workers(a.workers);
  cfg.validate();
  if (a.d < 3) throw UsageError("--d must be >= 3");

  Json report;
  bool verified = false;
  if (a.d == 3) {
    auto [outcome, trace] = solve_k2(inst.graph, inst.s, inst.t, cfg);
    verified = !verify_outcome(inst.graph, inst.s, inst.t, outcome, 3, cfg.radius());
    report = outcome_json(outcome, verified);
    if (!a.trace.empty()) write_file(a.trace, trace_json(trace).dump(1) + "\n");
  } else {
    if (!a.trace.empty()) throw UsageError("--trace is only available with --d 3");
    GeneralOutcome res = solve_general(inst.graph, inst.s, inst.t, a.d, cfg);
    verified = res.verified;
    report = outcome_json(res.outcome, verified);
    if (!verified) report["failure"] = res.failure;
  }
  Json full = {{"command", "solve"},
               {"instance", a.input},
               {"params",
                {{"c", a.c},
                 {"ell", a.ell},
                 {"d", a.d},
                 {"radius", a.d == 3 ? cfg.radius() : a.d * cfg.radius()},
                 {"workers", cfg.workers}}}};
  full.update(report);
  full["elapsed_ms"] = timer.ms();
  emit(out, full);
  return verified ? kExitOk : kExitNegative;
}

struct SeparatorArgs {
  std::string input;
  std::vector<Vertex> x;
  int radius = 1;
  int max_size = 2;
  std::optional<int> workers;
};

int run_verify_separator(const SeparatorArgs& a, std::ostream& out) {
  Timer timer;
  const Instance inst = load(a.input);
  check_vertices(inst.graph, a.x, "--x");
  if (a.radius < 0) throw UsageError("--radius must be >= 0");
  if (!a.x.empty()) {
    SeparatorResult res = is_ball_separator(inst.graph, inst.s, inst.t, a.x, a.radius);
    Json report = {{"command", "verify-separator"},
                   {"claim", "ball_separator"},
                   {"instance", a.input},
                   {"params", {{"x", a.x}, {"radius", a.radius}}},
                   {"outcome", res.separates ? "separates" : "escapes"}};
    if (res.witness) report["witness"] = path_json(*res.witness);
    report["elapsed_ms"] = timer.ms();
    emit(out, report);
    return res.separates ? kExitOk : kExitNegative;
  }
  if (a.max_size < 1) throw UsageError("--max-size must be >= 1");
  SeparatorSearchResult res =
      exhaustive_separator_search(inst.graph, inst.s, inst.t, a.max_size, a.radius, resolve_workers(a.workers));
  Json report = {{"command", "verify-separator"},
                 {"claim", "no_small_separator"},
                 {"instance", a.input},
                 {"params", {{"max_size", a.max_size}, {"radius", a.radius}}},
                 {"outcome", res.no_path ? "no_path" : res.separator ? "found" : "none"}};
  if (res.separator && !res.no_path) report["witness"] = *res.separator;
  report["nodes"] = res.candidates;
  report["elapsed_ms"] = timer.ms();
  emit(out, report);
  return kExitOk;
}

struct SearchArgs {
  std::string input;
  int k = 2;
  int d = 3;
  std::uint64_t budget = 100'000'000;
  std::optional<double> max_seconds;
  std::optional<int> workers;
};

int run_search_paths(const SearchArgs& a, std::ostream& out) {
  Timer timer;
  const Instance inst = load(a.input);
  if (a.k < 1 || a.d < 1) throw UsageError("-k and -d must be >= 1");
  SearchBudget budget;
  budget.max_nodes = a.budget;
  budget.max_seconds = a.max_seconds;
  FarPathsResult res = search_far_paths(inst.graph, inst.s, inst.t, a.k, a.d, budget, resolve_workers(a.workers));
  bool ok = res.kind != FarPathsResult::Kind::kBudgetExhausted;
  if (res.kind == FarPathsResult::Kind::kFound) ok = verify_far_paths(inst.graph, inst.s, inst.t, res.paths, a.d);
  Json report = {{"command", "search-paths"}, {"instance", a.input}, {"params", {{"k", a.k}, {"d", a.d}, {"budget", a.budget}}}};
  report.update(far_paths_json(res));
  report["elapsed_ms"] = timer.ms();
  emit(out, report);
  return ok ? kExitOk : kExitNegative;
}

struct ConstructionArgs {
  int k = 4;
  std::optional<int> ell;
  std::optional<int> workers;
};

int run_verify_construction(const ConstructionArgs& a, std::ostream& out) {
  Timer timer;
  if (a.k < 2 || a.k > 5) throw UsageError("--k must be in [2, 5]");
  DichotomyReport rep = verify_gadget_dichotomy(a.k);
  bool ok = rep.violations == 0;
  Json report = {{"command", "verify-construction"}, {"params", {{"k", a.k}}}};
  report["outcome"] = dichotomy_json(rep);
  if (a.ell) {
    if (*a.ell < 1) throw UsageError("--ell must be >= 1");
    LabeledGadget g = build_counterexample(*a.ell);
    SeparatorSearchResult sep = exhaustive_separator_search(g.graph, g.s, g.t, 2, *a.ell, resolve_workers(a.workers));
    const bool clean = !sep.separator && !sep.no_path && g.graph.max_degree() <= 3;
    ok = ok && clean;
    Json sep_report = {{"vertices", g.graph.vertex_count()},
                       {"max_degree", g.graph.max_degree()},
                       {"separator", sep.separator ? Json(*sep.separator) : Json(nullptr)},
                       {"candidates", sep.candidates}};
    report["counterexample"] = sep_report;
  }
  report["nodes"] = rep.paths;
  report["elapsed_ms"] = timer.ms();
  emit(out, report);
  return ok ? kExitOk : kExitNegative;
}

struct DotArgs {
  std::string input;
  std::optional<int> ell;
  std::optional<int> gadget_depth;
  bool tree_path = false;
  bool solve = false;
  std::vector<std::string> paths;
  std::string output;
};

std::vector<Vertex> parse_vertex_list(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("bad vertex list: " + text);
    }
  }
  return out;
}

int run_export_dot(const DotArgs& a, std::ostream& out) {
  const int sources = !a.input.empty() + a.ell.has_value() + a.gadget_depth.has_value();
  if (sources != 1) throw UsageError("export-dot needs exactly one of -i, --ell, --gadget");
  std::optional<LabeledGadget> gadget;
  Instance inst;
  if (a.ell) gadget = build_counterexample(*a.ell);
  if (a.gadget_depth) gadget = build_gadget(*a.gadget_depth);
  inst = gadget ? gadget->instance() : load(a.input);
  if (a.tree_path && !gadget) throw UsageError("--tree-path needs --ell or --gadget");

  DotOptions opt{inst.s, inst.t, gadget ? gadget->z : VertexSet(), {}};
  if (a.tree_path) opt.highlights.push_back({tree_path_s1_t2(*gadget), DotHighlight::Style::kBold, "blue"});
  for (const auto& text : a.paths) {
    Path p{parse_vertex_list(text)};
    if (!is_valid_path(inst.graph, p)) throw UsageError("--path " + text + " is not a path of the graph");
    opt.highlights.push_back({p, DotHighlight::Style::kBold, "darkgreen"});
  }
  if (a.solve) {
    SolverOutcome res = solve_k2(inst.graph, inst.s, inst.t).first;
    if (res.kind == SolverOutcome::Kind::kTwoFarPaths) {
      opt.highlights.push_back({res.first, DotHighlight::Style::kBold, "blue"});
      opt.highlights.push_back({res.second, DotHighlight::Style::kDashed, "red"});
    }
  }
  const std::string dot = export_dot(inst.graph, opt);
  if (a.output.empty()) {
    out << dot;
  } else {
    write_file(a.output, dot);
  }
  return kExitOk;
}

struct SelftestArgs {
  std::uint64_t seed = AcceptanceOptions{}.seed;
  std::optional<int> workers;
  bool quick = false;
};

int run_selftest(const SelftestArgs& a, std::ostream& out) {
  AcceptanceOptions opt;
  opt.seed = a.seed;
  opt.workers = resolve_workers(a.workers);
  if (a.quick) {
    opt.fuzz_instances = 60;
    opt.interval_families = 150;
  }
  bool ok = true;
  for (const auto& r : run_acceptance(opt, out)) ok = ok && r.passed;
  return ok ? kExitOk : kExitNegative;
}

}  // namespace

int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Far-path and ball-separator tools for S-T path problems", "coarse-menger"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write the counterexample graph (or the plain gadget) and its labels");
  gen_cmd->add_option("--ell", gen.ell, "Target radius")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--depth", gen.depth, "Tree depth override");
  gen_cmd->add_option("--subdiv", gen.subdiv, "Subdivision length override");
  gen_cmd->add_flag("--gadget", gen.gadget, "Unsubdivided gadget of the given --depth");
  gen_cmd->add_flag("--allow-weak", gen.allow_weak, "Accept overrides below the counterexample bounds");
  gen_cmd->add_option("-o,--output", gen.output, "Graph file; labels go to <stem>.labels.json");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Find two far S-T paths or a ball separator center");
  solve_cmd->add_option("-i,--input", solve.input, "Graph file")->required();
  solve_cmd->add_option("--c", solve.c, "Surface depth (>= 7)");
  solve_cmd->add_option("--ell", solve.ell, "Window parameter (>= 2c+5)");
  solve_cmd->add_option("--d", solve.d, "Required path distance; > 3 solves on the d-th power");
  solve_cmd->add_option("--trace", solve.trace, "Write the solver trace as JSON");
  solve_cmd->add_flag("--no-self-verify", solve.no_self_verify, "Skip internal outcome checks");
  solve_cmd->add_option("--workers", solve.workers, "Worker threads")->check(CLI::PositiveNumber);

  SeparatorArgs sep;
  auto* sep_cmd = app.add_subcommand("verify-separator", "Check a ball separator, or search for one");
  sep_cmd->add_option("-i,--input", sep.input, "Graph file")->required();
  sep_cmd->add_option("--x", sep.x, "Ball centers, comma separated")->delimiter(',');
  sep_cmd->add_option("--radius", sep.radius, "Ball radius");
  sep_cmd->add_option("--max-size", sep.max_size, "Largest center set tried when --x is absent");
  sep_cmd->add_option("--workers", sep.workers, "Worker threads")->check(CLI::PositiveNumber);

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search-paths", "Exhaustive search for k pairwise far S-T paths");
  search_cmd->add_option("-i,--input", search.input, "Graph file")->required();
  search_cmd->add_option("-k,--k", search.k, "Number of paths");
  search_cmd->add_option("-d,--d", search.d, "Pairwise distance");
  search_cmd->add_option("--budget", search.budget, "Search node budget");
  search_cmd->add_option("--max-seconds", search.max_seconds, "Wall-clock budget");
  search_cmd->add_option("--workers", search.workers, "Worker threads")->check(CLI::PositiveNumber);

  ConstructionArgs cons;
  auto* cons_cmd = app.add_subcommand("verify-construction", "Check the gadget path-pair dichotomy");
  cons_cmd->add_option("--k", cons.k, "Gadget depth (2..5)");
  cons_cmd->add_option("--ell", cons.ell, "Also check the counterexample for this radius has no two-ball separator");
  cons_cmd->add_option("--workers", cons.workers, "Worker threads")->check(CLI::PositiveNumber);

  DotArgs dot;
  auto* dot_cmd = app.add_subcommand("export-dot", "Write Graphviz DOT");
  dot_cmd->add_option("-i,--input", dot.input, "Graph file");
  dot_cmd->add_option("--ell", dot.ell, "Use the generated counterexample");
  dot_cmd->add_option("--gadget", dot.gadget_depth, "Use the plain gadget of this depth");
  dot_cmd->add_flag("--tree-path", dot.tree_path, "Highlight the tree path s1..t2");
  dot_cmd->add_flag("--solve", dot.solve, "Highlight the solver's two paths, bold and dashed");
  dot_cmd->add_option("--path", dot.paths, "Highlight a path given as v1,v2,...");
  dot_cmd->add_option("-o,--output", dot.output, "Output file");

  SelftestArgs self;
  auto* self_cmd = app.add_subcommand("selftest", "Run the acceptance checks");
  self_cmd->add_option("--seed", self.seed, "Fuzz seed");
  self_cmd->add_option("--workers", self.workers, "Worker threads")->check(CLI::PositiveNumber);
  self_cmd->add_flag("--quick", self.quick, "Smaller fuzz corpora");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen_cmd->parsed()) return run_gen(gen, out);
    if (solve_cmd->parsed()) return run_solve(solve, out);
    if (sep_cmd->parsed()) return run_verify_separator(sep, out);
    if (search_cmd->parsed()) return run_search_paths(search, out);
    if (cons_cmd->parsed()) return run_verify_construction(cons, out);
    if (dot_cmd->parsed()) return run_export_dot(dot, out);
    if (self_cmd->parsed()) return run_selftest(self, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputFormatError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OracleError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InternalInvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    // budget exhaustion and other inconclusive runs
    err << "error: " << e.what() << '\n';
    return kExitNegative;
  }
  return kExitUsage;
}

}  // namespace coarse_menger
