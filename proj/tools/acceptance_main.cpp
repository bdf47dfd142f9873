// Acceptance suite runner: executes the eleven checks in order and prints
// one PASS/FAIL line per criterion. Exit code 0 iff every check passes.
//
// Usage: acceptance [check-number] [seed]
//   no arguments      run all eleven checks
//   check-number      run a single check (1-11)
//   seed              override the sampler seed (default 42)

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "baernstein/acceptance.hpp"
#include "baernstein/config.hpp"
#include "baernstein/report.hpp"

int main(int argc, char** argv) {
  int only = 0;
  baernstein::Config cfg;
  try {
    if (argc > 1) only = std::stoi(argv[1]);
    if (argc > 2) cfg.seed = std::stoull(argv[2]);
    if (only < 0 || only > baernstein::acceptance::Harness::kChecks)
      throw std::invalid_argument("check number out of range");
  } catch (const std::exception& e) {
    std::cerr << "usage: acceptance [check-number 1-11] [seed]\n";
    return 2;
  }

  baernstein::acceptance::Harness h(cfg);
  std::vector<baernstein::CheckReport> reports;
  try {
    if (only > 0) {
      reports.push_back(h.run(only));
    } else {
      reports = h.run_all();
    }
  } catch (const baernstein::budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 3;
  }

  int passed = 0;
  for (const auto& r : reports) {
    std::cout << r.line() << "  (" << r.runtime_ms << " ms)\n";
    if (r.status == "pass") ++passed;
  }
  std::cout << passed << "/" << reports.size() << " criteria passed\n";
  return passed == static_cast<int>(reports.size()) ? 0 : 1;
}
