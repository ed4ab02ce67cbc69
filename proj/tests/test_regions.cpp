#include <doctest.h>

#include "hamclosure/errors.hpp"
#include "hamclosure/patterns.hpp"
#include "hamclosure/regions.hpp"
#include "hamclosure_oracles/oracles.hpp"
#include "support.hpp"

using namespace hamclosure;
using hamclosure::test::named;

TEST_CASE("decomposition examples") {
  const RegionDecomposition net = RegionDecomposition::decompose(named("net"));
  const std::vector<VertexSet> expected{VertexSet::of(6, {0, 1, 2}), VertexSet::of(6, {0, 3}), VertexSet::of(6, {1, 4}),
                                        VertexSet::of(6, {2, 5})};
  CHECK(net.regions() == expected);
  for (Vertex a : {0, 1, 2}) CHECK(net.is_frontier(a));
  for (Vertex b : {3, 4, 5}) CHECK(net.is_interior(b));

  const RegionDecomposition c5 = RegionDecomposition::decompose(cycle_graph(5));
  CHECK(c5.regions().size() == 5);
  for (Vertex v = 0; v < 5; ++v) CHECK(c5.is_frontier(v));

  const RegionDecomposition k4 = RegionDecomposition::decompose(complete_graph(4));
  CHECK(k4.regions().size() == 1);
  CHECK(k4.interior(0) == VertexSet::full(4));

  CHECK_THROWS_AS(RegionDecomposition::decompose(complete_bipartite(1, 3)), PreconditionError);
}

TEST_CASE("association") {
  const Graph net = named("net");
  CHECK(associated(net, 0, 3));
  CHECK_FALSE(associated(net, 3, 4));
  CHECK(associated(net, 0, 1));
  CHECK_THROWS_AS(associated(net, 2, 2), InputError);
}

TEST_CASE("region properties on claw-o-heavy graphs") {
  int regions = 0;
  for (const Graph& g : hamclosure::test::small_corpus(101, 400, 3, 10)) {
    if (!is_claw_o_heavy(g)) continue;
    const RegionDecomposition d = RegionDecomposition::decompose(g);
    for (int r = 0; r < static_cast<int>(d.regions().size()); ++r, ++regions) {
      const VertexSet& reg = d.regions()[static_cast<std::size_t>(r)];
      const VertexSet inner = d.interior(r);
      CHECK(is_nonseparable(induced_subgraph(g, reg)));
      for (Vertex u : reg)
        if (d.is_frontier(u)) CHECK(((g.neighbors(u) & inner).any() || (g.is_clique(reg) && inner.empty())));
      for (Vertex u = 0; u < g.order(); ++u) {
        if (reg.test(u)) continue;
        int hits = 0;
        for (Vertex v : reg) hits += d.associated(u, v) ? 1 : 0;
        CHECK(hits <= 1);
      }
      for (Vertex u : reg)
        for (Vertex v = reg.next(u); v != -1; v = reg.next(v)) {
          CHECK(oracle::exists_induced_path(g, u, v, inner));
          const auto path = interior_path(d, r, u, v);
          REQUIRE(path.size() >= 2);
          CHECK(path.front() == u);
          CHECK(path.back() == v);
        }
    }
  }
  CHECK(regions > 100);
}

TEST_CASE("generalized claw and net examples") {
  const GeneralizedClawNet claw = generalized_claw_or_net(complete_bipartite(1, 3), 1, 2, 3);
  CHECK(claw.shape == GeneralizedClawNet::Shape::Claw);
  CHECK(claw.core == std::vector<Vertex>{0});
  for (const auto& p : claw.paths) CHECK(p.size() == 2);
  CHECK_FALSE(claw.degenerate);

  const Graph net = named("net");
  const GeneralizedClawNet n = generalized_claw_or_net(net, 3, 4, 5);
  CHECK(n.shape == GeneralizedClawNet::Shape::Net);
  CHECK(n.core == std::vector<Vertex>{0, 1, 2});
  CHECK(validate_generalized(net, n));

  const GeneralizedClawNet p5 = generalized_claw_or_net(path_graph(5), 0, 2, 4);
  CHECK(p5.shape == GeneralizedClawNet::Shape::Claw);
  CHECK(p5.core == std::vector<Vertex>{2});
  CHECK(p5.degenerate);

  CHECK_THROWS_AS(generalized_claw_or_net(Graph(4), 0, 1, 2), InputError);
  CHECK_THROWS_AS(generalized_claw_or_net(path_graph(4), 0, 0, 2), InputError);
}

TEST_CASE("generalized structures validate on random draws") {
  int draws = 0;
  for (const Graph& g : random_corpus(103, 300, 4, 12, 0.2, 0.6)) {
    if (!is_connected(g)) continue;
    for (Vertex z = 0; z + 2 < g.order(); z += 3) {
      const GeneralizedClawNet s = generalized_claw_or_net(g, z, z + 1, z + 2);
      ++draws;
      CHECK(validate_generalized(g, s));
      CHECK(s.targets == std::array<Vertex, 3>{z, z + 1, z + 2});
      if (!s.degenerate) {
        const PatternKind want = s.shape == GeneralizedClawNet::Shape::Net ? PatternKind::Net : PatternKind::Claw;
        CHECK(contains_induced(induced_subgraph(g, s.vertices(g.order())), want));
      }
    }
  }
  CHECK(draws > 200);
}
