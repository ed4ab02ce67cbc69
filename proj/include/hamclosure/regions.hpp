#pragma once

#include <array>
#include <optional>
#include <vector>

#include "hamclosure/graph.hpp"

namespace hamclosure {

class RegionDecomposition {
 public:
  /// Regions of a claw-o-heavy graph: maximal cliques of its c-closure.
  /// Throws PreconditionError when g is not claw-o-heavy and
  /// DecompositionError when some vertex lies in three or more regions.
  static RegionDecomposition decompose(const Graph& g);
  /// Same, reusing an already computed c-closure of g.
  static RegionDecomposition from_closure(const Graph& g, const Graph& closure);

  const Graph& graph() const { return graph_; }
  const Graph& closure() const { return closure_; }
  const std::vector<VertexSet>& regions() const { return regions_; }
  /// Indices of the regions containing v (one or two).
  const std::vector<int>& membership(Vertex v) const { return membership_[v]; }

  bool is_interior(Vertex v) const { return membership_[v].size() == 1; }
  bool is_frontier(Vertex v) const { return membership_[v].size() == 2; }
  /// Interior vertices of region r.
  VertexSet interior(int r) const;
  /// Throws InputError when u == v.
  bool associated(Vertex u, Vertex v) const;

 private:
  Graph graph_;
  Graph closure_;
  std::vector<VertexSet> regions_;
  std::vector<std::vector<int>> membership_;
};

/// Shorthand for RegionDecomposition::decompose(g).associated(u, v).
bool associated(const Graph& g, Vertex u, Vertex v);

/// Induced path from u to v inside region r whose internal vertices are all
/// interior to r; empty when none exists.
std::vector<Vertex> interior_path(const RegionDecomposition& d, int r, Vertex u, Vertex v);

struct GeneralizedClawNet {
  enum class Shape { Claw, Net };
  Shape shape = Shape::Claw;
  /// Claw: core[0] is the center. Net: core is the triangle x1, x2, x3.
  std::vector<Vertex> core;
  /// paths[i] runs from its core vertex to z_{i+1}.
  std::array<std::vector<Vertex>, 3> paths;
  std::array<Vertex, 3> targets{};
  /// Some path is a single vertex.
  bool degenerate = false;

  VertexSet vertices(int universe) const;
};

/// Induced generalized claw or net connecting z1, z2, z3, built along the
/// shortest-path argument with lexicographically least tie-breaking.
/// Throws InputError on a disconnected host or repeated targets.
GeneralizedClawNet generalized_claw_or_net(const Graph& g, Vertex z1, Vertex z2, Vertex z3);

/// Shape invariants: paths meet only at the core, the union is induced
/// exactly as the shape prescribes, termini are the targets.
bool validate_generalized(const Graph& g, const GeneralizedClawNet& s);

}  // namespace hamclosure
