#include "hamclosure/corpus.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "hamclosure/errors.hpp"
#include "hamclosure/graph_io.hpp"
#include "hamclosure/patterns.hpp"
#include "hamclosure/sampling.hpp"

namespace hamclosure {

Graph g8() {
  return Graph::from_edges(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 5}, {5, 6}, {6, 7}, {1, 4}, {0, 5},
                               {0, 6}, {2, 7}});
}

std::vector<NamedGraph> curated_graphs() {
  return {
      {"K1", Graph(1)},
      {"K2", complete_graph(2)},
      {"P3", path_graph(3)},
      {"P4", path_graph(4)},
      {"P5", path_graph(5)},
      {"C4", cycle_graph(4)},
      {"C5", cycle_graph(5)},
      {"C6", cycle_graph(6)},
      {"K4", complete_graph(4)},
      {"K5", complete_graph(5)},
      {"K13", complete_bipartite(1, 3)},
      {"K23", complete_bipartite(2, 3)},
      {"K33", complete_bipartite(3, 3)},
      {"net", pattern_graph(PatternKind::Net)},
      {"bull", pattern_graph(PatternKind::Bull)},
      {"diamond", pattern_graph(PatternKind::Diamond)},
      {"wounded", pattern_graph(PatternKind::Wounded)},
      {"Z1", pattern_graph(PatternKind::Z1)},
      {"Z2", pattern_graph(PatternKind::Z2)},
      {"G8", g8()},
  };
}

Graph curated(const std::string& name) {
  for (NamedGraph& g : curated_graphs())
    if (g.name == name) return std::move(g.graph);
  throw InputError("unknown curated graph '" + name + "'");
}

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

std::vector<Graph> random_corpus(std::uint64_t seed, int count, int n_min, int n_max, double p_min, double p_max) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const int n = uniform_int(rng, n_min, n_max);
    const double p = uniform(rng, p_min, p_max);
    out.push_back(random_graph(n, p, rng));
  }
  return out;
}

std::vector<Graph> line_graph_corpus(std::uint64_t seed, int count, int n_min, int n_max) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  while (static_cast<int>(out.size()) < count) {
    const int m = uniform_int(rng, n_min, n_max);
    // Smallest root order whose complete graph has at least m edges, plus slack.
    int r = 2;
    while (r * (r - 1) / 2 < m) ++r;
    r += uniform_int(rng, 0, 3);
    std::vector<Edge> pairs = complete_graph(r).edges();
    for (std::size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[rng() % i]);
    pairs.resize(static_cast<std::size_t>(m));
    out.push_back(line_graph(Graph::from_edges(r, pairs)));
  }
  return out;
}

std::vector<Graph> bipartite_corpus(std::uint64_t seed, int count, int n_min, int n_max, double p_min, double p_max) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) {
    const int n = uniform_int(rng, n_min, n_max);
    const int left = uniform_int(rng, 1, n - 1);
    const double p = uniform(rng, p_min, p_max);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < left; ++u)
      for (Vertex v = left; v < n; ++v)
        if (uniform(rng, 0.0, 1.0) < p) edges.push_back({u, v});
    out.push_back(Graph::from_edges(n, edges));
  }
  return out;
}

std::vector<Graph> dense_corpus(std::uint64_t seed, int count, int n_min, int n_max, int max_missing) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) {
    const int n = uniform_int(rng, n_min, n_max);
    std::vector<Edge> pairs = complete_graph(n).edges();
    const int missing = uniform_int(rng, 0, std::min<int>(max_missing, static_cast<int>(pairs.size())));
    for (std::size_t j = pairs.size(); j > 1; --j) std::swap(pairs[j - 1], pairs[rng() % j]);
    pairs.resize(pairs.size() - static_cast<std::size_t>(missing));
    out.push_back(Graph::from_edges(n, pairs));
  }
  return out;
}

namespace {

ComponentRecipe recipe(ComponentRecipe::Kind kind, ComponentRecipe::Host host, std::vector<int> sizes,
                       std::vector<int> junctions) {
  return {kind, host, std::move(sizes), std::move(junctions)};
}

using K = ComponentRecipe::Kind;
using H = ComponentRecipe::Host;

// Components glued to K only.
std::vector<ComponentRecipe> k_side_menu() {
  return {
      recipe(K::Chain, H::K, {2}, {2}),
      recipe(K::Chain, H::K, {3}, {2}),
      recipe(K::Chain, H::K, {4, 2}, {2, 2}),
      recipe(K::Cycle, H::K, {3, 3}, {1, 2, 1}),
      recipe(K::Cycle, H::K, {2, 2, 2}, {1, 1, 1, 1}),
  };
}

// Components reaching K'.
std::vector<ComponentRecipe> kprime_menu() {
  return {
      recipe(K::Bridge, H::K, {2, 2}, {1, 1, 1}),
      recipe(K::Bridge, H::K, {3}, {1, 2}),
      recipe(K::Bridge, H::K, {4}, {2, 2}),
      recipe(K::Chain, H::KPrime, {2}, {2}),
      recipe(K::Chain, H::KPrime, {3}, {2}),
  };
}

FamilyParams composite(Family f, int k, int kprime, std::vector<ComponentRecipe> components) {
  FamilyParams p;
  p.family = f;
  p.k = k;
  p.kprime = kprime;
  p.components = std::move(components);
  return p;
}

}  // namespace

std::vector<FamilyParams> family_grid(Family f) {
  std::vector<FamilyParams> grid;
  auto chain = [&](std::vector<int> sizes, std::vector<int> junctions) {
    FamilyParams p;
    p.family = f;
    p.k_sizes = std::move(sizes);
    p.u_sizes = std::move(junctions);
    grid.push_back(std::move(p));
  };
  const std::vector<ComponentRecipe> kside = k_side_menu();
  const std::vector<ComponentRecipe> kpside = kprime_menu();
  switch (f) {
    case Family::C1N:
      for (int k = 2; k <= 20; ++k) chain({k}, {});
      for (int a = 2; a <= 12; ++a)
        for (int b = a; b <= 12; ++b)
          for (int j = 2; j <= std::min(a, b); ++j) chain({a, b}, {j});
      for (int a = 2; a <= 6; ++a)
        for (int b = 4; b <= 8; ++b)
          for (int c = 2; c <= 6; ++c)
            for (int j1 = 2; j1 <= 3; ++j1)
              for (int j2 = 2; j2 <= 3; ++j2) chain({a, b, c}, {j1, j2});
      for (int e = 2; e <= 4; ++e)
        for (int m = 4; m <= 6; ++m) chain({e, m, m, e}, {2, 2, 2});
      break;
    case Family::C2N:
      for (int t = 3; t <= 7; ++t)
        for (int s = 2; s <= 7; ++s)
          for (int j = 1; j <= 3; ++j) {
            chain(std::vector<int>(static_cast<std::size_t>(t), s), std::vector<int>(static_cast<std::size_t>(t), j));
            std::vector<int> alt_sizes, alt_junctions;
            for (int i = 0; i < t; ++i) {
              alt_sizes.push_back(i % 2 ? s + 2 : s);
              alt_junctions.push_back(i % 2 ? j : 1);
            }
            chain(alt_sizes, alt_junctions);
          }
      break;
    case Family::C3NQ:
      for (int k = 4; k <= 16; ++k) grid.push_back(composite(f, k, 0, {}));
      break;
    case Family::C1NP:
      for (int k = 4; k <= 14; ++k)
        for (std::size_t a = 0; a < kside.size(); ++a)
          for (std::size_t b = a; b < kside.size(); ++b) {
            grid.push_back(composite(f, k, 0, {kside[a], kside[b]}));
            for (std::size_t c = b; c < kside.size(); ++c) grid.push_back(composite(f, k, 0, {kside[a], kside[b], kside[c]}));
          }
      break;
    case Family::C2NP:
    case Family::C2NPQ:
      for (int k = 4; k <= 16; ++k)
        for (int kp = 2; kp <= 8; ++kp)
          for (std::size_t a = 0; a < 3; ++a)  // at least one bridge
            for (std::size_t b = a; b < kpside.size(); ++b) {
              std::vector<ComponentRecipe> base{kpside[a], kpside[b]};
              if (f == Family::C2NPQ) base.insert(base.begin(), recipe(K::Q, H::K, {}, {}));
              grid.push_back(composite(f, k, kp, base));
              for (const ComponentRecipe& extra : kside) {
                std::vector<ComponentRecipe> more = base;
                more.push_back(extra);
                grid.push_back(composite(f, k, kp, more));
              }
            }
      break;
    case Family::C1NPQ:
      for (int k = 4; k <= 14; ++k) {
        const ComponentRecipe q = recipe(K::Q, H::K, {}, {});
        grid.push_back(composite(f, k, 0, {q}));
        grid.push_back(composite(f, k, 0, {q, q}));
        for (std::size_t a = 0; a < kside.size(); ++a) {
          grid.push_back(composite(f, k, 0, {q, kside[a]}));
          for (std::size_t b = a; b < kside.size(); ++b) grid.push_back(composite(f, k, 0, {q, kside[a], kside[b]}));
        }
      }
      break;
  }
  return grid;
}

std::vector<NamedGraph> family_members(Family f, int seeds, int n_min, int n_max) {
  std::vector<NamedGraph> out;
  std::set<std::string> seen;
  for (const FamilyParams& p : family_grid(f))
    for (int seed = 1; seed <= seeds; ++seed) {
      Graph g;
      try {
        g = generate(p, static_cast<std::uint64_t>(seed));
      } catch (const ParameterError&) {
        continue;
      }
      if (g.order() < n_min || g.order() > n_max) continue;
      std::string code = emit_graph6(g);
      if (!seen.insert(code).second) continue;
      out.push_back({std::string(family_name(f)) + " seed=" + std::to_string(seed) + " " + code, std::move(g)});
    }
  return out;
}

std::vector<Graph> one_edge_perturbations(const Graph& g) {
  std::vector<Graph> out;
  const int n = g.order();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const Edge e{u, v};
      const std::span<const Edge> one(&e, 1);
      out.push_back(g.adjacent(u, v) ? g.without_edges(one) : g.with_edges(one));
    }
  return out;
}

}  // namespace hamclosure
