#pragma once

#include <vector>

#include "hamclosure/graph.hpp"

namespace hamclosure {

enum class PairKind { OHeavy, AHeavy };

struct HeavyPair {
  Vertex u = 0;
  Vertex v = 0;
  PairKind kind = PairKind::OHeavy;
  int degree_sum = 0;

  auto operator<=>(const HeavyPair&) const = default;
};

/// 2*d(v) >= n.
inline bool is_heavy(const Graph& g, Vertex v) { return 2 * g.degree(v) >= g.order(); }
VertexSet heavy_vertices(const Graph& g);

/// d(u) + d(v) >= n, regardless of adjacency.
inline bool heavy_sum(const Graph& g, Vertex u, Vertex v) { return g.degree(u) + g.degree(v) >= g.order(); }
inline bool is_o_heavy_pair(const Graph& g, Vertex u, Vertex v) {
  return u != v && !g.adjacent(u, v) && heavy_sum(g, u, v);
}
inline bool is_a_heavy_pair(const Graph& g, Vertex u, Vertex v) { return g.adjacent(u, v) && heavy_sum(g, u, v); }

/// Sorted by (u, v).
std::vector<HeavyPair> o_heavy_pairs(const Graph& g);
std::vector<HeavyPair> a_heavy_pairs(const Graph& g);
bool has_o_heavy_pair(const Graph& g);

/// Every nonadjacent pair is o-heavy.
bool satisfies_ore(const Graph& g);

/// True when some pair inside s is an o-heavy pair of g.
bool contains_o_heavy_pair(const Graph& g, const VertexSet& s);
bool contains_a_heavy_pair(const Graph& g, const VertexSet& s);

}  // namespace hamclosure
