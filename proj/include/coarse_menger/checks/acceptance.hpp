#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace coarse_menger {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  int workers = 1;             // worker count for the main runs
  int alt_workers = 3;         // second worker count for the determinism check
  std::uint64_t seed = 20261018;
  int fuzz_instances = 520;
  int interval_families = 1200;
};

CriterionResult check_counterexample_separators(const AcceptanceOptions& opt);
CriterionResult check_gadget_dichotomy(const AcceptanceOptions& opt);
CriterionResult check_three_path_nonexistence(const AcceptanceOptions& opt);
CriterionResult check_interval_engine(const AcceptanceOptions& opt);
CriterionResult check_solver_soundness(const AcceptanceOptions& opt);
CriterionResult check_directed_endpoints(const AcceptanceOptions& opt);
CriterionResult check_general_wrapper(const AcceptanceOptions& opt);
CriterionResult check_trace_assertions(const AcceptanceOptions& opt);

/// Runs every criterion in order, printing one line per criterion to `out`.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt, std::ostream& out);

std::string format_result(const CriterionResult& r);

}  // namespace coarse_menger
