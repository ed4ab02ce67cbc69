#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hamclosure/graph.hpp"

namespace hamclosure {

enum class StepKind { OPair, RCompletion, CCompletion };

std::string_view step_kind_name(StepKind kind);

struct ClosureStep {
  StepKind kind = StepKind::OPair;
  /// Completion vertex, or the smaller endpoint of an o-pair.
  Vertex vertex = 0;
  /// Other endpoint of an o-pair; -1 for completions.
  Vertex partner = -1;
  std::vector<Edge> added;

  bool operator==(const ClosureStep&) const = default;
};

struct ClosureTrace {
  Graph initial;
  Graph final_graph;
  std::vector<ClosureStep> steps;

  /// Applies the steps to `initial`; equals `final_graph` for every trace
  /// produced by this library.
  Graph replay() const;
  /// The sequence G_1, ..., G_t (initial first, final last).
  std::vector<Graph> graphs() const;
  int edges_added() const;

  /// One line per step: `<kind> <vertex-or-pair> += <edge list>`.
  std::string to_text() const;
  static std::vector<ClosureStep> parse_steps(std::string_view text);
};

struct ClosureResult {
  Graph graph;
  ClosureTrace trace;
};

/// How the next eligible vertex (or o-heavy pair) is picked.
struct SelectionPolicy {
  enum class Order { Ascending, Descending, Random };
  Order order = Order::Ascending;
  std::uint64_t seed = 0;

  static SelectionPolicy ascending() { return {Order::Ascending, 0}; }
  static SelectionPolicy descending() { return {Order::Descending, 0}; }
  static SelectionPolicy random(std::uint64_t seed) { return {Order::Random, seed}; }
};

/// Host graph of the "N(x) is not a clique" test in c-eligibility.
/// Literal: G^BC_x. Amended: G.
enum class EligibilityMode { Literal, Amended };

std::string_view mode_name(EligibilityMode mode);

/// Repeatedly joins an o-heavy pair, re-evaluating degrees after each join.
ClosureResult o_closure(const Graph& g, SelectionPolicy policy = {});

/// Throws PreconditionError unless g is claw-free.
bool r_eligible(const Graph& g, Vertex x);
ClosureResult r_closure(const Graph& g, SelectionPolicy policy = {});

/// Nonadjacent pairs u,v in N(x) with d(u) + d(v) >= n.
std::vector<Edge> bc_local(const Graph& g, Vertex x);

/// Throws PreconditionError unless g is claw-o-heavy.
bool c_eligible(const Graph& g, Vertex x, EligibilityMode mode = EligibilityMode::Amended);
/// Eligibility without the precondition scan, for callers that already checked it.
bool c_eligible_unchecked(const Graph& g, Vertex x, EligibilityMode mode);
ClosureResult c_closure(const Graph& g, EligibilityMode mode = EligibilityMode::Amended, SelectionPolicy policy = {});

/// Local completion at x: every pair in N(x) becomes adjacent.
Graph complete_neighborhood(const Graph& g, Vertex x);

/// True when literal and amended c-closures of g differ.
bool closure_modes_diverge(const Graph& g);

/// Claw-free, diamond-free and free of o-heavy pairs.
bool is_closure_target(const Graph& g);

struct SupergraphSearch {
  Graph minimum;
  /// Exactly one satisfying supergraph has the minimum edge count.
  bool unique = false;
  /// `minimum` is a subgraph of every satisfying supergraph.
  bool contained_in_all = false;
  int minimum_count = 0;
  std::uint64_t satisfying_count = 0;
  std::uint64_t examined = 0;
  std::vector<Edge> added;
};

/// Exhaustive search over all spanning supergraphs of g for those that are
/// closure targets. Throws BudgetExceeded when g has more than `budget`
/// non-edges. When the minimum is not unique, `minimum` is the one whose
/// added-edge mask is numerically least.
SupergraphSearch minimum_supergraph_oracle(const Graph& g, int budget = 16);
SupergraphSearch minimum_supergraph_oracle_serial(const Graph& g, int budget = 16);

}  // namespace hamclosure
