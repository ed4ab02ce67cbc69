#include <doctest.h>

#include "hamclosure/closures.hpp"
#include "hamclosure/errors.hpp"
#include "hamclosure/ham_oracle.hpp"
#include "hamclosure/heaviness.hpp"
#include "hamclosure/patterns.hpp"
#include "hamclosure_oracles/oracles.hpp"
#include "support.hpp"

using namespace hamclosure;
using hamclosure::test::named;

TEST_CASE("heavy vertices") {
  CHECK(heavy_vertices(cycle_graph(4)) == VertexSet::full(4));
  CHECK(heavy_vertices(cycle_graph(5)).empty());
  CHECK(is_heavy(named("net"), 0));
  CHECK_FALSE(is_heavy(named("net"), 3));
}

TEST_CASE("heavy pairs") {
  const auto c4 = o_heavy_pairs(cycle_graph(4));
  REQUIRE(c4.size() == 2);
  CHECK((c4[0].u == 0 && c4[0].v == 2 && c4[0].degree_sum == 4));
  CHECK((c4[1].u == 1 && c4[1].v == 3));
  CHECK(o_heavy_pairs(named("net")).empty());
  CHECK(o_heavy_pairs(path_graph(3)).empty());
  CHECK(a_heavy_pairs(complete_graph(4)).size() == 6);
  CHECK(a_heavy_pairs(cycle_graph(5)).empty());
  CHECK(a_heavy_pairs(cycle_graph(4)).size() == 4);
  CHECK(satisfies_ore(complete_graph(4)));
  CHECK(satisfies_ore(cycle_graph(4)));
  CHECK_FALSE(satisfies_ore(cycle_graph(5)));
}

TEST_CASE("every heavy pair has a heavy endpoint; o-heavy pairs share a neighbor") {
  for (const Graph& g : hamclosure::test::small_corpus(41, 400, 2, 8)) {
    for (const auto& pairs : {o_heavy_pairs(g), a_heavy_pairs(g)})
      for (const HeavyPair& p : pairs) CHECK((is_heavy(g, p.u) || is_heavy(g, p.v)));
    for (const HeavyPair& p : o_heavy_pairs(g)) CHECK((g.neighbors(p.u) & g.neighbors(p.v)).any());
  }
}

TEST_CASE("Ore graphs with n >= 3 are hamiltonian") {
  int seen = 0;
  for (const Graph& g : hamclosure::test::small_corpus(43, 600, 3, 12))
    if (g.order() >= 3 && satisfies_ore(g)) {
      ++seen;
      CHECK(is_hamiltonian(g).hamiltonian());
    }
  CHECK(seen > 20);
}

TEST_CASE("pattern reference graphs and names") {
  CHECK(pattern_graph(PatternKind::Claw) == complete_bipartite(1, 3));
  CHECK(pattern_graph(PatternKind::P5) == path_graph(5));
  CHECK(pattern_graph(PatternKind::C3) == complete_graph(3));
  CHECK(pattern_graph(PatternKind::Net) == named("net"));
  CHECK(pattern_graph(PatternKind::Diamond).size() == 5);
  CHECK(pattern_graph(PatternKind::Wounded).size() == 6);
  CHECK(pattern_automorphisms(PatternKind::Net).size() == 6);
  CHECK(pattern_automorphisms(PatternKind::Claw).size() == 6);
  CHECK(pattern_automorphisms(PatternKind::Wounded).size() == 1);
  for (PatternKind k : kAllPatterns) CHECK(parse_pattern(pattern_name(k)) == k);
  CHECK(parse_pattern("N") == PatternKind::Net);
  CHECK(parse_pattern("W") == PatternKind::Wounded);
  CHECK_FALSE(parse_pattern("hexagon").has_value());
}

TEST_CASE("find_induced examples") {
  CHECK(find_induced(complete_graph(4), PatternKind::Claw).empty());
  const auto nets = find_induced(named("net"), PatternKind::Net);
  REQUIRE(nets.size() == 1);
  CHECK(nets[0].roles == std::vector<Vertex>{0, 1, 2, 3, 4, 5});
  CHECK(find_induced(named("wounded"), PatternKind::Wounded).size() == 1);
  CHECK(find_induced(cycle_graph(6), PatternKind::P5).size() == 6);
  CHECK(is_free(cycle_graph(5), {PatternKind::Claw, PatternKind::Diamond}));
  CHECK_FALSE(is_free(named("diamond"), {PatternKind::Diamond}));
  CHECK(is_free(complete_graph(4), {PatternKind::Claw, PatternKind::Diamond}));
}

TEST_CASE("detectors equal naive enumeration on n <= 9") {
  for (const Graph& g : random_corpus(47, 120, 1, 9, 0.2, 0.8))
    for (PatternKind k : kAllPatterns) {
      const auto naive = oracle::naive_find_induced(g, k);
      CHECK(find_induced(g, k) == naive);
      CHECK(find_induced_serial(g, k) == naive);
      CHECK(contains_induced(g, k) == !naive.empty());
      for (const Embedding& e : naive) {
        CHECK(is_induced_embedding(g, k, e.roles));
        CHECK(canonical_roles(k, e.roles) == e.roles);
      }
    }
}

TEST_CASE("for_each_induced stops early") {
  int visits = 0;
  const bool finished = for_each_induced(cycle_graph(8), PatternKind::P4, [&](const Embedding&) { return ++visits < 3; });
  CHECK_FALSE(finished);
  CHECK(visits == 3);
}

TEST_CASE("pattern o-heaviness") {
  CHECK(is_pattern_o_heavy(cycle_graph(5), PatternKind::Claw));
  CHECK_FALSE(is_pattern_o_heavy(complete_bipartite(1, 3), PatternKind::Claw));
  CHECK_FALSE(is_claw_o_heavy(complete_bipartite(1, 3)));
  CHECK(is_pattern_o_heavy(cycle_graph(4), PatternKind::P5));
  CHECK(is_claw_o_heavy(named("G8")));
  for (const Graph& g : random_corpus(53, 300, 1, 10)) {
    bool expected = true;
    for (const Embedding& e : find_induced(g, PatternKind::Claw))
      expected = expected && contains_o_heavy_pair(g, e.vertices(g.order()));
    CHECK(is_claw_o_heavy(g) == expected);
  }
}

TEST_CASE("freeness and o-heaviness are monotone along induced patterns") {
  const std::pair<PatternKind, PatternKind> chains[] = {
      {PatternKind::C3, PatternKind::Z1}, {PatternKind::Z1, PatternKind::Z2}, {PatternKind::P4, PatternKind::P5}};
  for (const Graph& g : hamclosure::test::small_corpus(59, 300, 3, 10))
    for (auto [small, big] : chains) {
      if (!contains_induced(g, small)) CHECK_FALSE(contains_induced(g, big));
      if (is_pattern_o_heavy(g, small)) CHECK(is_pattern_o_heavy(g, big));
    }
}

TEST_CASE("net classification examples") {
  const Graph net = named("net");
  const NetEmbedding e = find_nets(net).at(0);
  const NetHeaviness h = classify_net(net, e);
  // a1 and a2 have degree 3 = n/2, so the triangle edge a1a2 is a-heavy.
  CHECK_FALSE(h.o_heavy);
  CHECK(h.p_heavy);
  CHECK_FALSE(h.q_heavy);
  CHECK_THROWS_AS(classify_net(named("bull"), e), InputError);

  const Graph g8 = named("G8");
  const auto nets = find_nets(g8);
  REQUIRE(nets.size() == 1);
  const NetHeaviness g8h = classify_net(g8, nets[0]);
  CHECK_FALSE(g8h.o_heavy);
  CHECK(g8h.p_heavy);
  CHECK_FALSE(g8h.q_heavy);

  const NetProfile c5 = net_profile(cycle_graph(5));
  CHECK(c5.net_free);
  CHECK((c5.o_heavy && c5.p_heavy && c5.op_heavy && c5.pq_heavy));
  const NetProfile np = net_profile(net);
  CHECK_FALSE(np.net_free);
  CHECK_FALSE(np.o_heavy);
  CHECK(np.p_heavy);
  CHECK(np.pq_heavy);
  // Below the degree threshold no net is p-heavy: a net with a pendant path grown on b1.
  const Graph longer = Graph::from_edges(8, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}, {6, 7}});
  const NetProfile lp = net_profile(longer);
  CHECK(lp.nets == 1);
  CHECK_FALSE(lp.p_heavy);
  CHECK_FALSE(lp.pq_heavy);
  const NetProfile g8p = net_profile(g8);
  CHECK(g8p.p_heavy);
  CHECK(g8p.pq_heavy);
}

TEST_CASE("net heaviness agrees with the definitional oracle") {
  int nets_seen = 0;
  for (const Graph& g : hamclosure::test::small_corpus(61, 800, 6, 11))
    for (const NetEmbedding& e : find_nets(g)) {
      ++nets_seen;
      const std::array<Vertex, 6> roles{e.a1, e.a2, e.a3, e.b1, e.b2, e.b3};
      const NetHeaviness h = classify_net(g, e);
      CHECK(h.p_heavy == oracle::naive_p_heavy(g, roles));
      CHECK(h.q_heavy == oracle::naive_q_heavy(g, roles));
      CHECK(h.o_heavy == contains_o_heavy_pair(g, VertexSet::from_range(g.order(), roles)));
      // p-heavy means an a-heavy pair inside the triangle.
      if (h.p_heavy) CHECK(contains_a_heavy_pair(g, VertexSet::of(g.order(), {e.a1, e.a2, e.a3})));
      // Heavy vertices of a q-heavy net become pairwise adjacent in the c-closure.
      if (h.q_heavy && is_claw_o_heavy(g)) {
        const Graph closed = c_closure(g).graph;
        VertexSet heavy(g.order());
        for (Vertex v : roles)
          if (is_heavy(g, v)) heavy.set(v);
        CHECK(closed.is_clique(heavy));
      }
    }
  CHECK(nets_seen > 50);
}
