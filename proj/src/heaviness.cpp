#include "hamclosure/heaviness.hpp"

namespace hamclosure {

VertexSet heavy_vertices(const Graph& g) {
  VertexSet s(g.order());
  for (Vertex v = 0; v < g.order(); ++v)
    if (is_heavy(g, v)) s.set(v);
  return s;
}

namespace {

std::vector<HeavyPair> scan(const Graph& g, bool adjacent) {
  std::vector<HeavyPair> out;
  const int n = g.order();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (g.adjacent(u, v) == adjacent && heavy_sum(g, u, v))
        out.push_back({u, v, adjacent ? PairKind::AHeavy : PairKind::OHeavy, g.degree(u) + g.degree(v)});
  return out;
}

}  // namespace

std::vector<HeavyPair> o_heavy_pairs(const Graph& g) { return scan(g, false); }
std::vector<HeavyPair> a_heavy_pairs(const Graph& g) { return scan(g, true); }

bool has_o_heavy_pair(const Graph& g) {
  const int n = g.order();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (is_o_heavy_pair(g, u, v)) return true;
  return false;
}

bool satisfies_ore(const Graph& g) {
  const int n = g.order();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v) && !heavy_sum(g, u, v)) return false;
  return true;
}

bool contains_o_heavy_pair(const Graph& g, const VertexSet& s) {
  for (Vertex u : s)
    for (Vertex v = s.next(u); v != -1; v = s.next(v))
      if (is_o_heavy_pair(g, u, v)) return true;
  return false;
}

bool contains_a_heavy_pair(const Graph& g, const VertexSet& s) {
  for (Vertex u : s)
    for (Vertex v = s.next(u); v != -1; v = s.next(v))
      if (is_a_heavy_pair(g, u, v)) return true;
  return false;
}

}  // namespace hamclosure
