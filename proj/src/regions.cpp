#include "hamclosure/regions.hpp"

#include <algorithm>
#include <queue>

#include "hamclosure/closures.hpp"
#include "hamclosure/errors.hpp"
#include "hamclosure/patterns.hpp"

namespace hamclosure {

RegionDecomposition RegionDecomposition::decompose(const Graph& g) {
  return from_closure(g, c_closure(g).graph);
}

RegionDecomposition RegionDecomposition::from_closure(const Graph& g, const Graph& closure) {
  if (closure.order() != g.order() || !g.is_subgraph_of(closure))
    throw InputError("closure is not a spanning supergraph of the graph");
  RegionDecomposition d;
  d.graph_ = g;
  d.closure_ = closure;
  d.regions_ = maximal_cliques(closure);
  d.membership_.assign(static_cast<std::size_t>(g.order()), {});
  for (std::size_t r = 0; r < d.regions_.size(); ++r)
    for (Vertex v : d.regions_[r]) d.membership_[v].push_back(static_cast<int>(r));
  for (Vertex v = 0; v < g.order(); ++v)
    if (d.membership_[v].size() > 2)
      throw DecompositionError("vertex " + std::to_string(v) + " lies in " +
                               std::to_string(d.membership_[v].size()) + " regions");
  return d;
}

VertexSet RegionDecomposition::interior(int r) const {
  VertexSet s(graph_.order());
  for (Vertex v : regions_[static_cast<std::size_t>(r)])
    if (is_interior(v)) s.set(v);
  return s;
}

bool RegionDecomposition::associated(Vertex u, Vertex v) const {
  if (u == v) throw InputError("association needs two distinct vertices");
  for (int r : membership_[u])
    if (regions_[static_cast<std::size_t>(r)].test(v)) return true;
  return false;
}

bool associated(const Graph& g, Vertex u, Vertex v) { return RegionDecomposition::decompose(g).associated(u, v); }

std::vector<Vertex> interior_path(const RegionDecomposition& d, int r, Vertex u, Vertex v) {
  VertexSet within = d.interior(r);
  within.set(u);
  within.set(v);
  return shortest_path(d.graph(), u, v, within);
}

VertexSet GeneralizedClawNet::vertices(int universe) const {
  VertexSet s(universe);
  for (Vertex c : core) s.set(c);
  for (const auto& p : paths)
    for (Vertex v : p) s.set(v);
  return s;
}

namespace {

// Lexicographically least shortest path from `from` to the nearest vertex of `target`.
std::vector<Vertex> shortest_path_to_set(const Graph& g, Vertex from, const VertexSet& target) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::queue<Vertex> queue;
  for (Vertex t : target) {
    dist[t] = 0;
    queue.push(t);
  }
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop();
    for (Vertex w : g.neighbors(v))
      if (dist[w] == -1) {
        dist[w] = dist[v] + 1;
        queue.push(w);
      }
  }
  if (dist[from] == -1) return {};
  std::vector<Vertex> path{from};
  Vertex cur = from;
  while (dist[cur] != 0) {
    for (Vertex w : g.neighbors(cur))
      if (dist[w] == dist[cur] - 1) {
        cur = w;
        break;
      }
    path.push_back(cur);
  }
  return path;
}

std::vector<Vertex> segment(const std::vector<Vertex>& p, std::size_t from, std::size_t to) {
  std::vector<Vertex> out;
  if (from <= to) {
    for (std::size_t i = from; i <= to; ++i) out.push_back(p[i]);
  } else {
    for (std::size_t i = from + 1; i-- > to;) out.push_back(p[i]);
  }
  return out;
}

}  // namespace

GeneralizedClawNet generalized_claw_or_net(const Graph& g, Vertex z1, Vertex z2, Vertex z3) {
  const int n = g.order();
  for (Vertex z : {z1, z2, z3})
    if (z < 0 || z >= n) throw InputError("target vertex out of range");
  if (z1 == z2 || z1 == z3 || z2 == z3) throw InputError("targets must be distinct");
  if (!is_connected(g)) throw InputError("host graph is disconnected");

  GeneralizedClawNet out;
  out.targets = {z1, z2, z3};
  const std::vector<Vertex> p = shortest_path(g, z1, z2, g.vertices());
  const std::size_t last = p.size() - 1;
  auto index_on_p = [&](Vertex v) {
    return static_cast<std::size_t>(std::find(p.begin(), p.end(), v) - p.begin());
  };

  const std::size_t at = index_on_p(z3);
  if (at <= last) {
    out.shape = GeneralizedClawNet::Shape::Claw;
    out.core = {z3};
    out.paths = {segment(p, at, 0), segment(p, at, last), std::vector<Vertex>{z3}};
    out.degenerate = true;
    return out;
  }

  const VertexSet on_p = VertexSet::from_range(n, p);
  const std::vector<Vertex> q = shortest_path_to_set(g, z3, on_p);  // z3 ... x3, x
  const Vertex x = q.back();
  const Vertex x3 = q[q.size() - 2];
  std::vector<Vertex> to_z3(q.rbegin() + 1, q.rend());  // x3 ... z3

  const VertexSet hits = g.neighbors(x3) & on_p;
  if (hits.count() == 1) {
    const std::size_t ix = index_on_p(x);
    std::vector<Vertex> third{x};
    third.insert(third.end(), to_z3.begin(), to_z3.end());
    out.shape = GeneralizedClawNet::Shape::Claw;
    out.core = {x};
    out.paths = {segment(p, ix, 0), segment(p, ix, last), third};
  } else {
    std::size_t i1 = last;
    std::size_t i2 = 0;
    for (Vertex h : hits) {
      i1 = std::min(i1, index_on_p(h));
      i2 = std::max(i2, index_on_p(h));
    }
    if (i2 - i1 == 1) {
      out.shape = GeneralizedClawNet::Shape::Net;
      out.core = {p[i1], p[i2], x3};
      out.paths = {segment(p, i1, 0), segment(p, i2, last), to_z3};
    } else if (i2 - i1 == 2) {
      std::vector<Vertex> first{x3};
      std::vector<Vertex> second{x3};
      for (Vertex v : segment(p, i1, 0)) first.push_back(v);
      for (Vertex v : segment(p, i2, last)) second.push_back(v);
      out.shape = GeneralizedClawNet::Shape::Claw;
      out.core = {x3};
      out.paths = {first, second, to_z3};
    } else {
      throw Error("internal: shortest path shortcut by more than two");
    }
  }
  out.degenerate = std::any_of(out.paths.begin(), out.paths.end(), [](const auto& path) { return path.size() == 1; });
  return out;
}

bool validate_generalized(const Graph& g, const GeneralizedClawNet& s) {
  const int n = g.order();
  const bool claw = s.shape == GeneralizedClawNet::Shape::Claw;
  if (claw ? s.core.size() != 1 : s.core.size() != 3) return false;

  Graph expected(n);
  std::vector<Edge> edges;
  VertexSet seen(n);
  bool any_trivial = false;
  for (int i = 0; i < 3; ++i) {
    const auto& path = s.paths[static_cast<std::size_t>(i)];
    if (path.empty()) return false;
    const Vertex origin = claw ? s.core[0] : s.core[static_cast<std::size_t>(i)];
    if (path.front() != origin || path.back() != s.targets[static_cast<std::size_t>(i)]) return false;
    any_trivial = any_trivial || path.size() == 1;
    for (std::size_t k = 0; k < path.size(); ++k) {
      const Vertex v = path[k];
      if (v < 0 || v >= n) return false;
      const bool shared_center = claw && k == 0;
      if (seen.test(v) && !shared_center) return false;
      seen.set(v);
      if (k > 0) edges.push_back(Edge::of(path[k - 1], v));
    }
  }
  if (any_trivial != s.degenerate) return false;
  if (!claw) {
    edges.push_back(Edge::of(s.core[0], s.core[1]));
    edges.push_back(Edge::of(s.core[0], s.core[2]));
    edges.push_back(Edge::of(s.core[1], s.core[2]));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  // The union must induce exactly the prescribed edges.
  std::vector<Edge> actual;
  for (Vertex u : seen)
    for (Vertex v = seen.next(u); v != -1; v = seen.next(v))
      if (g.adjacent(u, v)) actual.push_back({u, v});
  return actual == edges;
}

}  // namespace hamclosure
