#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "hamclosure/graph.hpp"
#include "hamclosure/ham_oracle.hpp"

namespace hamclosure::cli {

inline constexpr const char* kToolVersion = "0.1.0";

struct ReportOptions {
  std::uint64_t seed = 0;
  std::uint64_t node_budget = kDefaultNodeBudget;
};

/// AnalysisReport as JSON. Keys are sorted, so dump() is stable across runs.
/// Throws BudgetExceeded when the hamiltonicity search is undecided.
nlohmann::json analysis_report(const Graph& g, const ReportOptions& options);

/// Human-readable hypotheses, region decomposition and family certificates.
std::string explain(const Graph& g, const ReportOptions& options);

/// One-line verdict: `<graph6> status=... hamiltonian=... families=...`.
std::string summary_line(const Graph& g, const ReportOptions& options);

}  // namespace hamclosure::cli
