#include <doctest.h>

#include <algorithm>

#include "hamclosure/closures.hpp"
#include "hamclosure/errors.hpp"
#include "hamclosure/ham_oracle.hpp"
#include "hamclosure/heaviness.hpp"
#include "hamclosure/patterns.hpp"
#include "hamclosure_oracles/oracles.hpp"
#include "support.hpp"

using namespace hamclosure;
using hamclosure::test::named;

TEST_CASE("o-closure examples") {
  CHECK(o_closure(cycle_graph(4)).graph == complete_graph(4));
  CHECK(o_closure(path_graph(3)).graph == path_graph(3));
  // K2,3 gains exactly the edge between its two degree-3 vertices.
  const Graph k23 = complete_bipartite(2, 3);
  CHECK(o_closure(k23).graph == k23.with_edges(std::vector<Edge>{{0, 1}}));
  CHECK(oracle::all_o_closures(k23) == std::vector<Graph>{o_closure(k23).graph});
}

TEST_CASE("r-eligibility and r-closure examples") {
  const Graph diamond = named("diamond");
  CHECK(r_eligible(diamond, 0));
  CHECK_FALSE(r_eligible(cycle_graph(5), 0));
  CHECK_FALSE(r_eligible(named("net"), 0));
  const ClosureResult d = r_closure(diamond);
  CHECK(d.graph == complete_graph(4));
  CHECK(d.trace.steps.size() == 1);
  CHECK(r_closure(cycle_graph(5)).graph == cycle_graph(5));
  CHECK(r_closure(named("bull")).graph == named("bull"));
  CHECK_THROWS_AS(r_closure(complete_bipartite(1, 3)), PreconditionError);
  CHECK_THROWS_WITH_AS(r_eligible(complete_bipartite(1, 3), 0), "input not claw-free", PreconditionError);
}

TEST_CASE("local BC edges") {
  CHECK(bc_local(cycle_graph(4), 0) == std::vector<Edge>{{1, 3}});
  CHECK(bc_local(named("net"), 0).empty());
  CHECK(bc_local(complete_graph(4), 2).empty());
}

TEST_CASE("c-eligibility under both readings") {
  const Graph c4 = cycle_graph(4);
  for (Vertex x = 0; x < 4; ++x) {
    CHECK(c_eligible(c4, x, EligibilityMode::Amended));
    CHECK_FALSE(c_eligible(c4, x, EligibilityMode::Literal));
  }
  CHECK_FALSE(c_eligible(named("net"), 0, EligibilityMode::Amended));
  CHECK_FALSE(c_eligible(named("net"), 0, EligibilityMode::Literal));
  CHECK_THROWS_AS(c_eligible(complete_bipartite(1, 3), 0), PreconditionError);
}

TEST_CASE("c-closure examples") {
  CHECK(c_closure(named("net")).graph == named("net"));
  CHECK(c_closure(cycle_graph(4)).graph == complete_graph(4));
  CHECK(c_closure(cycle_graph(4), EligibilityMode::Literal).graph == cycle_graph(4));
  CHECK(closure_modes_diverge(cycle_graph(4)));
  CHECK_FALSE(closure_modes_diverge(named("net")));
  CHECK(c_closure(named("G8")).graph == named("G8"));
  CHECK_THROWS_AS(c_closure(complete_bipartite(1, 3)), PreconditionError);
}

TEST_CASE("minimum supergraph oracle") {
  const SupergraphSearch c4 = minimum_supergraph_oracle(cycle_graph(4));
  CHECK(c4.minimum == complete_graph(4));
  CHECK(c4.unique);
  CHECK(c4.satisfying_count == 1);
  CHECK(c4.examined == 4);
  const SupergraphSearch net = minimum_supergraph_oracle(named("net"));
  CHECK(net.minimum == named("net"));
  CHECK(net.added.empty());
  // The claw has three minimum completions (one leaf pair each), so no unique minimum.
  const SupergraphSearch claw = minimum_supergraph_oracle(complete_bipartite(1, 3));
  CHECK_FALSE(claw.unique);
  CHECK(claw.minimum_count == 3);
  CHECK_FALSE(claw.contained_in_all);
  CHECK_THROWS_AS(minimum_supergraph_oracle(Graph(8), 10), BudgetExceeded);
}

TEST_CASE("parallel and serial oracle agree") {
  for (const Graph& g : dense_corpus(71, 60, 5, 9, 12)) {
    const SupergraphSearch a = minimum_supergraph_oracle(g, 12);
    const SupergraphSearch b = minimum_supergraph_oracle_serial(g, 12);
    CHECK(a.minimum == b.minimum);
    CHECK(a.unique == b.unique);
    CHECK(a.contained_in_all == b.contained_in_all);
    CHECK(a.satisfying_count == b.satisfying_count);
  }
}

TEST_CASE("traces round-trip through text") {
  for (const Graph& g : hamclosure::test::small_corpus(73, 120, 4, 10)) {
    std::vector<ClosureResult> results{o_closure(g)};
    if (is_claw_free(g)) results.push_back(r_closure(g));
    if (is_claw_o_heavy(g)) results.push_back(c_closure(g));
    for (const ClosureResult& r : results) {
      CHECK(r.trace.initial == g);
      CHECK(r.trace.final_graph == r.graph);
      CHECK(r.trace.replay() == r.graph);
      CHECK(ClosureTrace::parse_steps(r.trace.to_text()) == r.trace.steps);
      const auto seq = r.trace.graphs();
      CHECK(seq.size() == r.trace.steps.size() + 1);
      CHECK(r.trace.edges_added() == r.graph.size() - g.size());
    }
  }
  CHECK_THROWS_AS(ClosureTrace::parse_steps("c-completion x += 0-1\n"), ParseError);
  CHECK(to_string(o_closure(cycle_graph(4)).trace.steps.at(0).added.at(0)) == "0-2");
}

TEST_CASE("closures do not depend on selection order") {
  const std::array<SelectionPolicy, 3> policies{SelectionPolicy::ascending(), SelectionPolicy::descending(),
                                                SelectionPolicy::random(99)};
  for (const Graph& g : hamclosure::test::small_corpus(79, 200, 4, 11)) {
    for (const SelectionPolicy& p : policies) {
      CHECK(o_closure(g, p).graph == o_closure(g).graph);
      if (is_claw_free(g)) CHECK(r_closure(g, p).graph == r_closure(g).graph);
      if (is_claw_o_heavy(g)) {
        CHECK(c_closure(g, EligibilityMode::Amended, p).graph == c_closure(g).graph);
      }
    }
  }
}

TEST_CASE("literal-mode c-closure depends on the selection order") {
  const Graph g = parse_graph6("DNg");
  REQUIRE(is_claw_o_heavy(g));
  CHECK(hamclosure::test::g6(c_closure(g, EligibilityMode::Literal, SelectionPolicy::ascending()).graph) == "DN{");
  CHECK(hamclosure::test::g6(c_closure(g, EligibilityMode::Literal, SelectionPolicy::descending()).graph) == "D~g");
  CHECK(c_closure(g, EligibilityMode::Amended, SelectionPolicy::descending()).graph == c_closure(g).graph);
}

TEST_CASE("c-closure contracts and per-step completion facts") {
  int steps = 0;
  for (const Graph& g : hamclosure::test::small_corpus(83, 300, 4, 11)) {
    if (!is_claw_o_heavy(g)) continue;
    const ClosureResult r = c_closure(g);
    CHECK(is_closure_target(r.graph));
    CHECK(g.is_subgraph_of(r.graph));
    CHECK(r.graph.is_clique(heavy_vertices(r.graph)));
    const auto seq = r.trace.graphs();
    for (std::size_t i = 0; i < r.trace.steps.size(); ++i, ++steps) {
      const Vertex x = r.trace.steps[i].vertex;
      CHECK(r.trace.steps[i].kind == StepKind::CCompletion);
      CHECK(c_eligible_unchecked(seq[i], x, EligibilityMode::Amended));
      CHECK(seq[i + 1] == complete_neighborhood(seq[i], x));
      for (Vertex y : seq[i + 1].neighbors(x)) CHECK(seq[i + 1].degree(y) >= seq[i + 1].degree(x));
      CHECK(is_claw_o_heavy(seq[i + 1]));
    }
  }
  CHECK(steps > 50);
}

TEST_CASE("c-closure is the minimum target supergraph and lies inside every other one") {
  int checked = 0;
  for (const Graph& g : dense_corpus(89, 300, 4, 8, 12)) {
    if (!is_claw_o_heavy(g)) continue;
    ++checked;
    const SupergraphSearch s = minimum_supergraph_oracle(g, 12);
    CHECK(c_closure(g).graph == s.minimum);
    CHECK(s.unique);
    CHECK(s.contained_in_all);
  }
  CHECK(checked > 50);
}

TEST_CASE("closures preserve hamiltonicity") {
  for (const Graph& g : hamclosure::test::small_corpus(97, 200, 3, 11)) {
    const bool h = oracle::held_karp_hamiltonian(g);
    CHECK(verify_closure_preservation(g, ClosureKind::O));
    CHECK(oracle::held_karp_hamiltonian(o_closure(g).graph) == h);
    if (is_claw_free(g)) CHECK(oracle::held_karp_hamiltonian(r_closure(g).graph) == h);
    if (is_claw_o_heavy(g)) CHECK(oracle::held_karp_hamiltonian(c_closure(g).graph) == h);
  }
  CHECK(verify_closure_preservation(cycle_graph(4), ClosureKind::O));
  CHECK(verify_closure_preservation(named("net"), ClosureKind::C));
  CHECK(verify_closure_preservation(named("diamond"), ClosureKind::R));
}
