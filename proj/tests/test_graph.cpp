#include <doctest.h>

#include <random>

#include "hamclosure/errors.hpp"
#include "hamclosure/parallel.hpp"
#include "hamclosure/patterns.hpp"
#include "hamclosure/sampling.hpp"
#include "hamclosure_oracles/oracles.hpp"
#include "support.hpp"

using namespace hamclosure;
using hamclosure::test::g6;
using hamclosure::test::named;

TEST_CASE("from_edges builds, deduplicates and rejects bad endpoints") {
  const Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(c4.size() == 4);
  CHECK(c4 == cycle_graph(4));
  CHECK(Graph::from_edges(3, {}).size() == 0);
  CHECK(Graph::from_edges(3, {}).order() == 3);
  CHECK(Graph::from_edges(2, {{0, 1}, {1, 0}}).size() == 1);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), InputError);
  CHECK_THROWS_AS(Graph::from_edges(2, {{1, 1}}), InputError);
}

TEST_CASE("adjacency stays symmetric and irreflexive") {
  for (const Graph& g : hamclosure::test::small_corpus(3, 80, 1, 12)) {
    int degree_sum = 0;
    for (Vertex u = 0; u < g.order(); ++u) {
      CHECK_FALSE(g.adjacent(u, u));
      degree_sum += g.degree(u);
      CHECK(g.degree(u) == g.neighbors(u).count());
      for (Vertex v = 0; v < g.order(); ++v) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
    }
    CHECK(degree_sum == 2 * g.size());
  }
}

TEST_CASE("graph6 frozen encodings") {
  CHECK(g6(complete_graph(5)) == "D~{");
  CHECK(g6(cycle_graph(5)) == "Dhc");
  CHECK(g6(cycle_graph(4)) == "Cl");
  CHECK(g6(Graph(1)) == "@");
  CHECK(g6(path_graph(4)) == "Ch");
  CHECK(g6(complete_graph(4)) == "C~");
  CHECK(g6(named("G8")) == "G~QKHC");
  CHECK(g6(named("net")) == "E{O_");
}

TEST_CASE("graph6 round trip is the identity for 1 <= n <= 12") {
  for (const Graph& g : random_corpus(17, 300, 1, 12)) CHECK(parse_graph6(emit_graph6(g)) == g);
  for (int n : {0, 62, 63, 64, 100, 300}) {
    const Graph g = random_corpus(static_cast<std::uint64_t>(n), 1, n, n).front();
    CHECK(parse_graph6(emit_graph6(g)) == g);
  }
  CHECK(parse_graph6(">>graph6<<Dhc\n") == cycle_graph(5));
}

TEST_CASE("graph6 parse errors carry offsets") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("D~"), ParseError);
  CHECK_THROWS_AS(parse_graph6("D~{x"), ParseError);
  try {
    parse_graph6("D\x01{");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 1);
  }
}

TEST_CASE("edge lists, DOT and format sniffing") {
  const Graph p4 = path_graph(4);
  CHECK(emit_edge_list(p4) == "4 3\n0 1\n1 2\n2 3\n");
  CHECK(parse_edge_list(emit_edge_list(p4)) == p4);
  CHECK(parse_graph_auto("4 3\n0 1\n1 2\n2 3\n") == p4);
  CHECK(parse_graph_auto("Ch") == p4);
  CHECK(emit_dot(p4).find("2 -- 3;") != std::string::npos);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 5\n"), Error);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
}

TEST_CASE("induced subgraphs") {
  CHECK(induced_subgraph(cycle_graph(4), VertexSet::of(4, {0, 1, 2})) == path_graph(3));
  CHECK(induced_subgraph(complete_graph(4), VertexSet::of(4, {0, 1, 2})) == cycle_graph(3));
  CHECK(induced_subgraph(named("net"), VertexSet::of(6, {0, 1, 2})) == cycle_graph(3));
}

TEST_CASE("induced_subgraph composes") {
  std::mt19937_64 rng(5);
  for (const Graph& g : random_corpus(9, 60, 4, 12)) {
    VertexSet s(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
      if (rng() % 3 != 0) s.set(v);
    const std::vector<Vertex> members = s.to_vector();
    VertexSet t(g.order()), t_relabeled(static_cast<int>(members.size()));
    for (std::size_t i = 0; i < members.size(); ++i)
      if (rng() % 2 == 0) {
        t.set(members[i]);
        t_relabeled.set(static_cast<Vertex>(i));
      }
    CHECK(induced_subgraph(induced_subgraph(g, s), t_relabeled) == induced_subgraph(g, t));
  }
}

TEST_CASE("2-connectivity and cut vertices") {
  CHECK(is_2_connected(cycle_graph(4)));
  CHECK_FALSE(is_2_connected(path_graph(4)));
  CHECK_FALSE(is_2_connected(named("net")));
  CHECK(cut_vertices(named("net")) == VertexSet::of(6, {0, 1, 2}));
  CHECK(cut_vertices(path_graph(4)) == VertexSet::of(4, {1, 2}));
  CHECK_FALSE(is_2_connected(complete_graph(2)));
  CHECK(is_nonseparable(complete_graph(2)));
  CHECK(is_nonseparable(Graph(1)));
  for (const Graph& g : random_corpus(21, 200, 1, 12)) CHECK(cut_vertices(g) == oracle::naive_cut_vertices(g));
}

TEST_CASE("maximal cliques") {
  const auto c5 = maximal_cliques(cycle_graph(5));
  CHECK(c5.size() == 5);
  for (const VertexSet& c : c5) CHECK(c.count() == 2);
  CHECK(maximal_cliques(complete_graph(4)) == std::vector<VertexSet>{VertexSet::full(4)});
  const std::vector<VertexSet> net{VertexSet::of(6, {0, 1, 2}), VertexSet::of(6, {0, 3}), VertexSet::of(6, {1, 4}),
                                   VertexSet::of(6, {2, 5})};
  CHECK(maximal_cliques(named("net")) == net);
}

TEST_CASE("maximal cliques equal exhaustive enumeration for n <= 7") {
  for (const Graph& g : hamclosure::test::small_corpus(31, 300, 1, 7))
    if (g.order() <= 7) CHECK(maximal_cliques(g) == oracle::naive_maximal_cliques(g));
}

TEST_CASE("components and shortest paths") {
  const Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {3, 4}});
  const auto comps = components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == VertexSet::of(6, {0, 1, 2}));
  CHECK(comps[2] == VertexSet::of(6, {5}));
  CHECK(shortest_path(cycle_graph(6), 0, 3, VertexSet::full(6)) == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(shortest_path(g, 0, 4, VertexSet::full(6)).empty());
}

TEST_CASE("line graphs are claw-free") {
  CHECK(line_graph(complete_bipartite(1, 3)) == complete_graph(3));
  for (const Graph& g : line_graph_corpus(4, 60, 3, 14)) CHECK(is_claw_free(g));
}

TEST_CASE("sampler contract") {
  GraphSampler full(5, 1.0, 3, [](const Graph& g) { return is_connected(g); });
  for (const Graph& g : full.take(4)) CHECK(g == complete_graph(5));
  GraphSampler empty(4, 0.0, 3, [](const Graph& g) { return is_connected(g); }, 500);
  CHECK_THROWS_AS(empty.next(), SamplingExhausted);
  CHECK(empty.take(3).empty());

  auto run = [] {
    GraphSampler s(8, 0.5, 42, [](const Graph& g) { return is_claw_o_heavy(g); });
    std::vector<std::string> out;
    for (const Graph& g : s.take(10)) out.push_back(emit_graph6(g));
    return out;
  };
  CHECK(run() == run());
  GraphSampler s(8, 0.5, 42, [](const Graph& g) { return is_claw_o_heavy(g); });
  s.take(10);
  CHECK(s.stats().yielded == 10);
  CHECK(s.stats().attempts >= 10);
  CHECK_THROWS(GraphSampler(5, 1.5, 0));
}

TEST_CASE("parallel_map keeps input order and surfaces the first error") {
  std::vector<int> in(500);
  for (int i = 0; i < 500; ++i) in[static_cast<std::size_t>(i)] = i;
  const auto out = parallel_map(in, [](int x) { return x * x; });
  for (int i = 0; i < 500; ++i) CHECK(out[static_cast<std::size_t>(i)] == i * i);
  CHECK(parallel_map(in, [](int x) { return x + 1; }, false) == parallel_map(in, [](int x) { return x + 1; }, true));
  try {
    parallel_map(in, [](int x) {
      if (x == 77 || x == 300) throw InputError("bad " + std::to_string(x));
      return x;
    });
    FAIL("expected an exception");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()) == "bad 77");
  }
}
