#pragma once

// Slow, independent reference implementations. Each one avoids the code
// paths of the main library so that agreement is evidence, not tautology.

#include <array>
#include <cstdint>
#include <vector>

#include "hamclosure/graph.hpp"
#include "hamclosure/patterns.hpp"

namespace hamclosure::oracle {

/// Induced copies of `kind` by trying every injective role assignment.
/// One embedding per vertex set: the lexicographically least role vector.
std::vector<Embedding> naive_find_induced(const Graph& g, PatternKind kind);

/// Maximal cliques by scanning every vertex subset. n <= 20.
std::vector<VertexSet> naive_maximal_cliques(const Graph& g);

/// Held-Karp dynamic program over subsets. n <= 20.
bool held_karp_hamiltonian(const Graph& g);

/// Every fixpoint reachable by joining o-heavy pairs in any order. A unique
/// closure shows up as a single graph.
std::vector<Graph> all_o_closures(const Graph& g);

/// Cut vertices by deleting each vertex and counting components.
VertexSet naive_cut_vertices(const Graph& g);

/// p-heavy and q-heavy tests written directly from the definitions, on an
/// explicit (a1,a2,a3,b1,b2,b3) labelling.
bool naive_p_heavy(const Graph& g, const std::array<Vertex, 6>& net);
bool naive_q_heavy(const Graph& g, const std::array<Vertex, 6>& net);

/// Whether some induced u-v path has all internal vertices in `inner`.
/// Depth-first over simple paths; stops at the first hit.
bool exists_induced_path(const Graph& g, Vertex u, Vertex v, const VertexSet& inner);

}  // namespace hamclosure::oracle
