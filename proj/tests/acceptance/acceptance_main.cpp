#include <CLI11.hpp>
#include <iostream>

#include "coarse_menger/checks/acceptance.hpp"

int main(int argc, char** argv) {
  coarse_menger::AcceptanceOptions opt;
  CLI::App app{"acceptance checks"};
  app.add_option("--workers", opt.workers);
  app.add_option("--alt-workers", opt.alt_workers);
  app.add_option("--seed", opt.seed);
  app.add_option("--fuzz", opt.fuzz_instances);
  app.add_option("--families", opt.interval_families);
  CLI11_PARSE(app, argc, argv);

  int failed = 0;
  for (const auto& r : coarse_menger::run_acceptance(opt, std::cout)) failed += !r.passed;
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
