#include <doctest.h>

#include "hamclosure_oracles/oracles.hpp"
#include "support.hpp"

using namespace hamclosure;
using hamclosure::test::named;

// Hand-counted values, so the oracles are checked independently of the library.

TEST_CASE("naive induced enumeration") {
  const auto claw = oracle::naive_find_induced(complete_bipartite(1, 3), PatternKind::Claw);
  REQUIRE(claw.size() == 1);
  CHECK(claw[0].roles == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(oracle::naive_find_induced(cycle_graph(5), PatternKind::P4).size() == 5);
  CHECK(oracle::naive_find_induced(cycle_graph(5), PatternKind::P5).empty());
  CHECK(oracle::naive_find_induced(complete_graph(4), PatternKind::C3).size() == 4);
  CHECK(oracle::naive_find_induced(complete_graph(4), PatternKind::Diamond).empty());
  CHECK(oracle::naive_find_induced(named("diamond"), PatternKind::Diamond).size() == 1);
}

TEST_CASE("naive cliques, cut vertices and paths") {
  CHECK(oracle::naive_maximal_cliques(path_graph(3)) ==
        std::vector<VertexSet>{VertexSet::of(3, {0, 1}), VertexSet::of(3, {1, 2})});
  CHECK(oracle::naive_cut_vertices(path_graph(4)) == VertexSet::of(4, {1, 2}));
  CHECK(oracle::naive_cut_vertices(cycle_graph(6)).empty());
  CHECK(oracle::exists_induced_path(cycle_graph(6), 0, 3, VertexSet::of(6, {1, 2})));
  CHECK_FALSE(oracle::exists_induced_path(cycle_graph(6), 0, 3, VertexSet::of(6, {1})));
  CHECK(oracle::exists_induced_path(path_graph(2), 0, 1, VertexSet(2)));
}

TEST_CASE("Held-Karp") {
  CHECK(oracle::held_karp_hamiltonian(complete_graph(4)));
  CHECK(oracle::held_karp_hamiltonian(cycle_graph(9)));
  CHECK_FALSE(oracle::held_karp_hamiltonian(path_graph(4)));
  CHECK_FALSE(oracle::held_karp_hamiltonian(complete_bipartite(3, 4)));
  CHECK(oracle::held_karp_hamiltonian(complete_bipartite(4, 4)));
  CHECK_FALSE(oracle::held_karp_hamiltonian(complete_graph(2)));
}

TEST_CASE("all o-closures") {
  CHECK(oracle::all_o_closures(cycle_graph(4)) == std::vector<Graph>{complete_graph(4)});
  CHECK(oracle::all_o_closures(path_graph(3)) == std::vector<Graph>{path_graph(3)});
}

TEST_CASE("definitional net heaviness") {
  const std::array<Vertex, 6> roles{0, 1, 2, 3, 4, 5};
  CHECK(oracle::naive_p_heavy(named("net"), roles));
  CHECK_FALSE(oracle::naive_q_heavy(named("net"), roles));
  // G8: triangle a1=0, a2=5, a3=6 with pendants 3, 4, 7; d(0) + d(5) = 8 = n.
  CHECK(oracle::naive_p_heavy(named("G8"), {0, 5, 6, 3, 4, 7}));
}
