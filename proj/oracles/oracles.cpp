#include "hamclosure_oracles/oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "hamclosure/errors.hpp"

namespace hamclosure::oracle {

namespace {

bool induces(const Graph& g, const Graph& pattern, const std::vector<Vertex>& roles) {
  const int k = pattern.order();
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (pattern.adjacent(i, j) != g.adjacent(roles[static_cast<std::size_t>(i)], roles[static_cast<std::size_t>(j)]))
        return false;
  return true;
}

}  // namespace

std::vector<Embedding> naive_find_induced(const Graph& g, PatternKind kind) {
  const Graph& pattern = pattern_graph(kind);
  const int n = g.order();
  const int k = pattern.order();
  std::vector<Embedding> out;
  if (k > n) return out;
  // Choose a k-subset by mask, then walk its permutations in lexicographic
  // order; the first inducing one is the lex-least role vector.
  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    std::vector<Vertex> roles;
    for (int v = 0; v < n; ++v)
      if (pick[static_cast<std::size_t>(v)]) roles.push_back(v);
    do {
      if (induces(g, pattern, roles)) {
        out.push_back({kind, roles});
        break;
      }
    } while (std::next_permutation(roles.begin(), roles.end()));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> naive_maximal_cliques(const Graph& g) {
  const int n = g.order();
  if (n > 20) throw InputError("naive clique scan is limited to 20 vertices");
  std::vector<std::uint32_t> cliques;
  const std::uint32_t limit = std::uint32_t{1} << n;
  std::vector<bool> is_clique(limit, false);
  is_clique[0] = true;
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    const int top = 31 - __builtin_clz(mask);
    const std::uint32_t rest = mask & ~(std::uint32_t{1} << top);
    bool ok = is_clique[rest];
    for (int v = 0; ok && v < top; ++v)
      if ((rest >> v & 1U) && !g.adjacent(v, top)) ok = false;
    is_clique[mask] = ok;
  }
  std::vector<VertexSet> out;
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    if (!is_clique[mask]) continue;
    bool maximal = true;
    for (int v = 0; maximal && v < n; ++v)
      if (!(mask >> v & 1U) && is_clique[mask | (std::uint32_t{1} << v)]) maximal = false;
    if (!maximal) continue;
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1U) s.set(v);
    out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) { return lex_compare(a, b) < 0; });
  return out;
}

bool held_karp_hamiltonian(const Graph& g) {
  const int n = g.order();
  if (n < 3) return false;
  if (n > 20) throw InputError("Held-Karp oracle is limited to 20 vertices");
  // reach[mask] = set of end vertices v such that a path from 0 covers mask and ends at v.
  const std::uint32_t limit = std::uint32_t{1} << n;
  std::vector<std::uint32_t> reach(limit, 0);
  reach[1] = 1;
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    if (!(mask & 1U) || reach[mask] == 0) continue;
    for (int v = 0; v < n; ++v) {
      if (!(reach[mask] >> v & 1U)) continue;
      for (int w = 1; w < n; ++w)
        if (!(mask >> w & 1U) && g.adjacent(v, w)) reach[mask | (std::uint32_t{1} << w)] |= std::uint32_t{1} << w;
    }
  }
  const std::uint32_t ends = reach[limit - 1];
  for (int v = 1; v < n; ++v)
    if ((ends >> v & 1U) && g.adjacent(v, 0)) return true;
  return false;
}

std::vector<Graph> all_o_closures(const Graph& g) {
  std::set<std::vector<Edge>> seen;
  std::set<std::vector<Edge>> finals;
  std::vector<Graph> stack{g};
  seen.insert(g.edges());
  while (!stack.empty()) {
    const Graph cur = stack.back();
    stack.pop_back();
    bool any = false;
    const int n = cur.order();
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) {
        if (cur.adjacent(u, v) || cur.degree(u) + cur.degree(v) < n) continue;
        any = true;
        const Edge e{u, v};
        Graph next = cur.with_edges(std::span<const Edge>(&e, 1));
        if (seen.insert(next.edges()).second) stack.push_back(std::move(next));
      }
    if (!any) finals.insert(cur.edges());
  }
  std::vector<Graph> out;
  for (const auto& edges : finals) out.push_back(Graph::from_edges(g.order(), edges));
  return out;
}

VertexSet naive_cut_vertices(const Graph& g) {
  const int n = g.order();
  VertexSet cuts(n);
  const int base = static_cast<int>(components(g).size());
  for (Vertex v = 0; v < n; ++v) {
    VertexSet rest = g.vertices();
    rest.reset(v);
    if (static_cast<int>(components(g, rest).size()) > base) cuts.set(v);
  }
  return cuts;
}

namespace {

bool heavy(const Graph& g, Vertex v) { return 2 * g.degree(v) >= g.order(); }

}  // namespace

bool naive_p_heavy(const Graph& g, const std::array<Vertex, 6>& net) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (g.degree(net[static_cast<std::size_t>(i)]) + g.degree(net[static_cast<std::size_t>(j)]) >= g.order())
        return true;
  return false;
}

bool naive_q_heavy(const Graph& g, const std::array<Vertex, 6>& net) {
  for (int i = 0; i < 3; ++i) {
    const Vertex ai = net[static_cast<std::size_t>(i)];
    const Vertex bi = net[static_cast<std::size_t>(i + 3)];
    if (!heavy(g, ai) || !heavy(g, bi)) continue;
    bool rest = true;
    for (int j = 0; j < 3 && rest; ++j) {
      if (j == i) continue;
      const Vertex aj = net[static_cast<std::size_t>(j)];
      const Vertex bj = net[static_cast<std::size_t>(j + 3)];
      if (g.degree(aj) != 3 || g.degree(bj) != 2) {
        rest = false;
        continue;
      }
      for (Vertex c = 0; c < g.order(); ++c)
        if (c != aj && g.adjacent(bj, c) && !heavy(g, c)) rest = false;
    }
    if (rest) return true;
  }
  return false;
}

namespace {

bool extend(const Graph& g, std::vector<Vertex>& path, Vertex target, const VertexSet& inner) {
  const Vertex last = path.back();
  if (g.adjacent(last, target)) {
    // Induced: the only edges on the path are between consecutive vertices.
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      if (g.adjacent(path[i], target)) return false;
    return true;
  }
  for (Vertex w : inner) {
    if (!g.adjacent(last, w) || std::find(path.begin(), path.end(), w) != path.end()) continue;
    bool chord = false;
    for (std::size_t i = 0; i + 1 < path.size() && !chord; ++i) chord = g.adjacent(path[i], w);
    if (chord) continue;
    path.push_back(w);
    if (extend(g, path, target, inner)) return true;
    path.pop_back();
  }
  return false;
}

}  // namespace

bool exists_induced_path(const Graph& g, Vertex u, Vertex v, const VertexSet& inner) {
  if (u == v) return true;
  std::vector<Vertex> path{u};
  VertexSet pool = inner;
  if (pool.contains(u)) pool.reset(u);
  if (pool.contains(v)) pool.reset(v);
  return extend(g, path, v, pool);
}

}  // namespace hamclosure::oracle
