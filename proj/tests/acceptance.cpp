// One pass/fail line per acceptance criterion; details follow on stderr.

#include <cstdio>
#include <iostream>

#include "hamclosure/verify.hpp"

using namespace hamclosure;

int main() {
  const char* criteria[] = {
      "closure-preservation", "minimality-oracle", "uniqueness",  "closure-contracts", "heaviness-propagation",
      "family-forward",       "thcpq-reverse",     "detector-oracle", "regions",       "npq-hamiltonian",
  };
  std::vector<SuiteResult> results;
  int failed = 0;
  for (int i = 0; i < 10; ++i) {
    SuiteResult r = run_suite(criteria[i]);
    std::printf("criterion %2d %-22s %s  cases=%ld failures=%ld seconds=%.2f\n", i + 1, criteria[i],
                r.passed ? "PASS" : "FAIL", r.cases, r.failures, r.seconds);
    std::fflush(stdout);
    failed += r.passed ? 0 : 1;
    results.push_back(std::move(r));
  }
  for (const SuiteResult& r : results) {
    if (r.passed) continue;
    std::cerr << r.name << ": " << r.claim << '\n';
    for (const std::string& n : r.notes) std::cerr << "  " << n << '\n';
    for (const std::string& d : r.failure_details) std::cerr << "  failure: " << d << '\n';
  }
  return failed == 0 ? 0 : 1;
}
