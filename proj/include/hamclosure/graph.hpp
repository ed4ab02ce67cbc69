#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "hamclosure/vertex_set.hpp"

namespace hamclosure {

/// Undirected vertex pair, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge of(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1 with dense bit-row adjacency.
///
/// Values are immutable: edge-adding operations return a new graph.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Throws InputError on an out-of-range endpoint or a loop. Duplicates collapse.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const noexcept { return n_; }
  int size() const noexcept { return m_; }

  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
  const VertexSet& neighbors(Vertex v) const { return rows_[v]; }
  int degree(Vertex v) const { return degree_[v]; }

  VertexSet vertices() const { return VertexSet::full(n_); }
  VertexSet empty_set() const { return VertexSet(n_); }

  /// Closed neighborhood N[v].
  VertexSet closed_neighbors(Vertex v) const {
    VertexSet s = rows_[v];
    s.set(v);
    return s;
  }

  /// Sorted edge list.
  std::vector<Edge> edges() const;
  /// Sorted list of nonadjacent pairs.
  std::vector<Edge> non_edges() const;

  Graph with_edges(std::span<const Edge> extra) const;
  Graph without_edges(std::span<const Edge> removed) const;
  Graph complement() const;

  /// True when every vertex of s is adjacent to every other vertex of s.
  bool is_clique(const VertexSet& s) const;
  bool is_complete() const { return m_ == n_ * (n_ - 1) / 2; }
  /// Edge-set inclusion on the same vertex set.
  bool is_subgraph_of(const Graph& other) const;

  bool operator==(const Graph& o) const;

 private:
  void add_edge_unchecked(Vertex u, Vertex v);
  void remove_edge_unchecked(Vertex u, Vertex v);

  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> rows_;
  std::vector<int> degree_;
};

/// Subgraph induced by s, relabeled 0..|s|-1 in ascending vertex order.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

bool is_connected(const Graph& g);
/// Connectivity of g[within]; the empty set counts as connected.
bool is_connected(const Graph& g, const VertexSet& within);
/// Connected components of g[within], ordered by smallest vertex.
std::vector<VertexSet> components(const Graph& g, const VertexSet& within);
std::vector<VertexSet> components(const Graph& g);

/// Articulation points found by a low-point depth-first search.
VertexSet cut_vertices(const Graph& g);
/// n >= 3, connected, and no cut vertex.
bool is_2_connected(const Graph& g);
/// Connected with no cut vertex; K1 and K2 qualify.
bool is_nonseparable(const Graph& g);

/// Inclusion-maximal cliques via Bron-Kerbosch with pivoting, sorted
/// lexicographically by member list.
std::vector<VertexSet> maximal_cliques(const Graph& g);
/// Maximal cliques of g[within], labels kept.
std::vector<VertexSet> maximal_cliques(const Graph& g, const VertexSet& within);

/// Shortest path by BFS with lexicographically least vertex sequence among
/// all shortest ones, restricted to `within`. Empty when unreachable.
std::vector<Vertex> shortest_path(const Graph& g, Vertex from, Vertex to, const VertexSet& within);

/// Neighborhood of a vertex set: union of N(v) over s, minus s.
VertexSet neighborhood(const Graph& g, const VertexSet& s);

// Named graphs used across tests and the CLI.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int a, int b);
/// Line graph of g; vertex i is the i-th edge of g.edges().
Graph line_graph(const Graph& g);

std::string to_string(const VertexSet& s);
std::string to_string(const Edge& e);

}  // namespace hamclosure
