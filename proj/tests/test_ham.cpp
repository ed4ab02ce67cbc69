#include <doctest.h>

#include "hamclosure/ham_oracle.hpp"
#include "hamclosure/patterns.hpp"
#include "hamclosure_oracles/oracles.hpp"
#include "support.hpp"

using namespace hamclosure;
using hamclosure::test::named;

namespace {

Graph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.push_back(Edge::of(i, (i + 1) % 5));
    e.push_back(Edge::of(i, i + 5));
    e.push_back(Edge::of(5 + i, 5 + (i + 2) % 5));
  }
  return Graph::from_edges(10, e);
}

}  // namespace

TEST_CASE("hamiltonicity examples") {
  const HamCertificate c5 = is_hamiltonian(cycle_graph(5));
  CHECK(c5.hamiltonian());
  CHECK(c5.cycle == std::vector<Vertex>{0, 1, 2, 3, 4});
  CHECK_FALSE(is_hamiltonian(complete_bipartite(2, 3)).hamiltonian());
  CHECK(is_hamiltonian(complete_bipartite(2, 3)).decided());
  const HamCertificate g8 = is_hamiltonian(named("G8"));
  CHECK(g8.hamiltonian());
  CHECK(is_hamiltonian_cycle(named("G8"), g8.cycle));
  // The cycle a1 a2 b2 c2 w c3 b3 a3 of the C3NQ member with |K| = 4.
  CHECK(is_hamiltonian_cycle(named("G8"), std::vector<Vertex>{0, 5, 4, 1, 3, 2, 7, 6}));
  CHECK_FALSE(is_hamiltonian(petersen()).hamiltonian());
  CHECK(is_hamiltonian(petersen()).decided());
  CHECK_FALSE(is_hamiltonian(complete_graph(2)).hamiltonian());
  CHECK(is_hamiltonian(complete_graph(3)).hamiltonian());
  CHECK_FALSE(is_hamiltonian(named("net")).hamiltonian());
}

TEST_CASE("cycle validation") {
  CHECK(is_hamiltonian_cycle(cycle_graph(4), std::vector<Vertex>{0, 1, 2, 3}));
  CHECK_FALSE(is_hamiltonian_cycle(cycle_graph(4), std::vector<Vertex>{0, 2, 1, 3}));
  CHECK_FALSE(is_hamiltonian_cycle(cycle_graph(4), std::vector<Vertex>{0, 1, 2}));
  CHECK_FALSE(is_hamiltonian_cycle(cycle_graph(4), std::vector<Vertex>{0, 1, 1, 3}));
}

TEST_CASE("budget exhaustion is reported, never guessed") {
  const HamCertificate c = is_hamiltonian(petersen(), 3);
  CHECK(c.status == HamStatus::Undecided);
  CHECK_FALSE(c.decided());
  CHECK(ham_status_name(c.status) == "undecided");
}

TEST_CASE("backtracking agrees with Held-Karp and returns valid cycles") {
  for (const Graph& g : hamclosure::test::small_corpus(107, 600, 3, 14)) {
    const HamCertificate c = is_hamiltonian(g);
    REQUIRE(c.decided());
    CHECK(c.hamiltonian() == oracle::held_karp_hamiltonian(g));
    if (c.hamiltonian()) CHECK(is_hamiltonian_cycle(g, c.cycle));
  }
}

TEST_CASE("2-connected claw-free net-free graphs are hamiltonian") {
  int seen = 0;
  std::vector<Graph> corpus = line_graph_corpus(109, 600, 4, 14);
  for (Graph& g : hamclosure::test::small_corpus(110, 400, 4, 12)) corpus.push_back(std::move(g));
  for (const Graph& g : corpus)
    if (is_2_connected(g) && is_free(g, {PatternKind::Claw, PatternKind::Net})) {
      ++seen;
      CHECK(is_hamiltonian(g).hamiltonian());
    }
  CHECK(seen > 100);
}
