#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hamclosure/ham_oracle.hpp"

namespace hamclosure {

struct SuiteOptions {
  std::uint64_t seed = 7;
  std::uint64_t node_budget = kDefaultNodeBudget;
  bool parallel = true;
};

struct SuiteResult {
  std::string name;
  /// One-line statement of what the suite checks.
  std::string claim;
  long cases = 0;
  long failures = 0;
  bool passed = false;
  double seconds = 0.0;
  /// Coverage counters and remarks, "key=value" or free text.
  std::vector<std::string> notes;
  /// First few failing cases with the reason.
  std::vector<std::string> failure_details;
  /// Optional per-graph rows (minimality-oracle prints its agreement table).
  std::vector<std::string> table;
};

/// closure-preservation, minimality-oracle, uniqueness, closure-contracts,
/// heaviness-propagation, family-forward, thcpq-reverse, detector-oracle,
/// regions, npq-hamiltonian.
const std::vector<std::string>& suite_names();

/// Throws InputError for an unknown suite and BudgetExceeded when the
/// hamiltonicity search runs out of nodes.
SuiteResult run_suite(std::string_view name, const SuiteOptions& options = {});

}  // namespace hamclosure
