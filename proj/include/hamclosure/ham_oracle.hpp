#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hamclosure/graph.hpp"

namespace hamclosure {

enum class HamStatus { Hamiltonian, NonHamiltonian, Undecided };

std::string_view ham_status_name(HamStatus s);

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

struct HamCertificate {
  HamStatus status = HamStatus::Undecided;
  /// Vertex sequence starting at 0 when hamiltonian; closing edge implied.
  std::vector<Vertex> cycle;
  std::uint64_t nodes_explored = 0;
  /// Why the answer was reached without search (n < 3, cut vertex, ...).
  std::string note;

  bool hamiltonian() const { return status == HamStatus::Hamiltonian; }
  bool decided() const { return status != HamStatus::Undecided; }
};

/// Backtracking from vertex 0, trying the neighbor with the fewest onward
/// options first. Pruned by available-degree counts, degree-2 forcing,
/// reachability of the unvisited part and a cut-vertex test on the remainder.
/// Budget exhaustion yields Undecided, never a guess.
HamCertificate is_hamiltonian(const Graph& g, std::uint64_t node_budget = kDefaultNodeBudget);

/// Every vertex exactly once, consecutive (and last-first) pairs adjacent.
bool is_hamiltonian_cycle(const Graph& g, std::span<const Vertex> cycle);

enum class ClosureKind { O, R, C };

/// Hamiltonicity of g equals that of its closure of the given kind (amended
/// c-eligibility). Throws BudgetExceeded when either search is undecided.
bool verify_closure_preservation(const Graph& g, ClosureKind kind, std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace hamclosure
