#include "hamclosure/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>

#include "hamclosure/errors.hpp"

namespace hamclosure {

Graph::Graph(int n) : n_(n), rows_(static_cast<std::size_t>(n), VertexSet(n)), degree_(static_cast<std::size_t>(n), 0) {
  if (n < 0) throw InputError("vertex count must be non-negative");
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw InputError("edge " + to_string(e) + ": endpoint out of range for n=" + std::to_string(n));
    if (e.u == e.v) throw InputError("edge " + to_string(e) + ": loops are not allowed");
    if (!g.adjacent(e.u, e.v)) g.add_edge_unchecked(e.u, e.v);
  }
  return g;
}

void Graph::add_edge_unchecked(Vertex u, Vertex v) {
  rows_[u].set(v);
  rows_[v].set(u);
  ++degree_[u];
  ++degree_[v];
  ++m_;
}

void Graph::remove_edge_unchecked(Vertex u, Vertex v) {
  rows_[u].reset(v);
  rows_[v].reset(u);
  --degree_[u];
  --degree_[v];
  --m_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = rows_[u].next(u); v != -1; v = rows_[u].next(v)) out.push_back({u, v});
  return out;
}

std::vector<Edge> Graph::non_edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (!rows_[u].test(v)) out.push_back({u, v});
  return out;
}

Graph Graph::with_edges(std::span<const Edge> extra) const {
  Graph g = *this;
  for (const Edge& e : extra) {
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_ || e.u == e.v)
      throw InputError("cannot add edge " + to_string(e));
    if (!g.adjacent(e.u, e.v)) g.add_edge_unchecked(e.u, e.v);
  }
  return g;
}

Graph Graph::without_edges(std::span<const Edge> removed) const {
  Graph g = *this;
  for (const Edge& e : removed) {
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_ || e.u == e.v)
      throw InputError("cannot remove edge " + to_string(e));
    if (g.adjacent(e.u, e.v)) g.remove_edge_unchecked(e.u, e.v);
  }
  return g;
}

Graph Graph::complement() const {
  Graph g(n_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (!adjacent(u, v)) g.add_edge_unchecked(u, v);
  return g;
}

bool Graph::is_clique(const VertexSet& s) const {
  for (Vertex v : s) {
    VertexSet rest = s;
    rest.reset(v);
    if (!rest.is_subset_of(rows_[v])) return false;
  }
  return true;
}

bool Graph::is_subgraph_of(const Graph& other) const {
  if (n_ != other.n_) return false;
  for (Vertex v = 0; v < n_; ++v)
    if (!rows_[v].is_subset_of(other.rows_[v])) return false;
  return true;
}

bool Graph::operator==(const Graph& o) const {
  return n_ == o.n_ && m_ == o.m_ && rows_ == o.rows_;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw InputError("vertex set does not match the graph's vertex range");
  const std::vector<Vertex> members = s.to_vector();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (g.adjacent(members[i], members[j])) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
  return Graph::from_edges(static_cast<int>(members.size()), edges);
}

namespace {

VertexSet reach(const Graph& g, Vertex start, const VertexSet& within) {
  VertexSet seen(g.order());
  seen.set(start);
  VertexSet frontier = seen;
  while (frontier.any()) {
    VertexSet next(g.order());
    for (Vertex v : frontier) next |= g.neighbors(v);
    next &= within;
    next -= seen;
    seen |= next;
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

bool is_connected(const Graph& g, const VertexSet& within) {
  const Vertex start = within.first();
  if (start == -1) return true;
  return reach(g, start, within) == within;
}

bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }

std::vector<VertexSet> components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet left = within;
  while (left.any()) {
    VertexSet comp = reach(g, left.first(), within);
    left -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

VertexSet cut_vertices(const Graph& g) {
  const int n = g.order();
  VertexSet cuts(n);
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> cursor(static_cast<std::size_t>(n), -1);
  int timer = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    int root_children = 0;
    std::vector<Vertex> stack{root};
    disc[root] = low[root] = timer++;
    cursor[root] = g.neighbors(root).first();
    while (!stack.empty()) {
      const Vertex v = stack.back();
      const Vertex w = cursor[v];
      if (w != -1) {
        cursor[v] = g.neighbors(v).next(w);
        if (disc[w] == -1) {
          parent[w] = v;
          disc[w] = low[w] = timer++;
          cursor[w] = g.neighbors(w).first();
          stack.push_back(w);
          if (v == root) ++root_children;
        } else if (w != parent[v]) {
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      stack.pop_back();
      const Vertex p = parent[v];
      if (p != -1) {
        low[p] = std::min(low[p], low[v]);
        if (p != root && low[v] >= disc[p]) cuts.set(p);
      }
    }
    if (root_children > 1) cuts.set(root);
  }
  return cuts;
}

bool is_nonseparable(const Graph& g) {
  if (g.order() == 0) return false;
  return is_connected(g) && cut_vertices(g).empty();
}

bool is_2_connected(const Graph& g) { return g.order() >= 3 && is_nonseparable(g); }

namespace {

void bron_kerbosch(const Graph& g, VertexSet& r, VertexSet p, VertexSet x, std::vector<VertexSet>& out) {
  if (p.empty()) {
    if (x.empty()) out.push_back(r);
    return;
  }
  // Tomita pivot: the vertex of P u X with most neighbors in P.
  Vertex pivot = -1;
  int best = -1;
  for (const VertexSet* side : {&p, &x}) {
    for (Vertex u : *side) {
      const int c = (p & g.neighbors(u)).count();
      if (c > best) {
        best = c;
        pivot = u;
      }
    }
  }
  const VertexSet candidates = p - g.neighbors(pivot);
  for (Vertex v : candidates) {
    r.set(v);
    bron_kerbosch(g, r, p & g.neighbors(v), x & g.neighbors(v), out);
    r.reset(v);
    p.reset(v);
    x.set(v);
  }
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  if (within.empty()) return out;
  VertexSet r(g.order());
  bron_kerbosch(g, r, within, VertexSet(g.order()), out);
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) { return lex_compare(a, b) < 0; });
  return out;
}

std::vector<VertexSet> maximal_cliques(const Graph& g) { return maximal_cliques(g, g.vertices()); }

std::vector<Vertex> shortest_path(const Graph& g, Vertex from, Vertex to, const VertexSet& within) {
  if (!within.contains(from) || !within.contains(to)) return {};
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::queue<Vertex> queue;
  dist[to] = 0;
  queue.push(to);
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop();
    for (Vertex w : g.neighbors(v) & within) {
      if (dist[w] == -1) {
        dist[w] = dist[v] + 1;
        queue.push(w);
      }
    }
  }
  if (dist[from] == -1) return {};
  std::vector<Vertex> path{from};
  Vertex cur = from;
  while (cur != to) {
    for (Vertex w : g.neighbors(cur) & within) {
      if (dist[w] == dist[cur] - 1) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out(g.order());
  for (Vertex v : s) out |= g.neighbors(v);
  return out - s;
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back(Edge::of(v, (v + 1) % n));
  return Graph::from_edges(n, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph::from_edges(n, edges);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v) edges.push_back({u, v});
  return Graph::from_edges(a + b, edges);
}

Graph line_graph(const Graph& g) {
  const std::vector<Edge> base = g.edges();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i + 1; j < base.size(); ++j) {
      const Edge& a = base[i];
      const Edge& b = base[j];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    }
  return Graph::from_edges(static_cast<int>(base.size()), edges);
}

std::string to_string(const VertexSet& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (Vertex v : s) {
    if (!first) out << ',';
    out << v;
    first = false;
  }
  out << '}';
  return out.str();
}

std::string to_string(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

}  // namespace hamclosure
