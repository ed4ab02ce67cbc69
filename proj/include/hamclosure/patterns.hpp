#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hamclosure/graph.hpp"

namespace hamclosure {

enum class PatternKind { Claw, P4, P5, P6, C3, Z1, Z2, Bull, Net, Wounded, Diamond };

inline constexpr std::array<PatternKind, 11> kAllPatterns = {
    PatternKind::Claw, PatternKind::P4,   PatternKind::P5,  PatternKind::P6,      PatternKind::C3,     PatternKind::Z1,
    PatternKind::Z2,   PatternKind::Bull, PatternKind::Net, PatternKind::Wounded, PatternKind::Diamond};

std::string_view pattern_name(PatternKind kind);
/// Case-insensitive; accepts the catalog names plus the letters B, N, W, D.
std::optional<PatternKind> parse_pattern(std::string_view name);

/// Reference graph with fixed role numbering:
///   Claw    center 0, leaves 1..3
///   Pk, C3  path / cycle 0..k-1
///   Z1, Z2  triangle 0,1,2 with a path of length 1 or 2 hanging off 0
///   Bull    triangle 0,1,2 with pendants 1-3 and 2-4
///   Net     triangle a1=0,a2=1,a3=2 with pendants b1=3,b2=4,b3=5
///   Wounded triangle 0,1,2 with pendant 1-3 and path 2-4-5
///   Diamond 0,1 adjacent to each other and to both of 2,3
const Graph& pattern_graph(PatternKind kind);
/// Automorphisms of pattern_graph(kind) as role permutations.
const std::vector<std::vector<int>>& pattern_automorphisms(PatternKind kind);

/// An induced copy: roles[i] is the host vertex playing pattern vertex i.
/// Canonical form is the lexicographically least roles tuple in its
/// automorphism orbit, so each induced vertex set appears exactly once.
struct Embedding {
  PatternKind kind = PatternKind::Claw;
  std::vector<Vertex> roles;

  VertexSet vertices(int universe) const { return VertexSet::from_range(universe, roles); }
  auto operator<=>(const Embedding&) const = default;
};

/// Lexicographically least automorphic relabeling of `roles`.
std::vector<Vertex> canonical_roles(PatternKind kind, std::span<const Vertex> roles);
/// True when roles induce exactly the pattern in g.
bool is_induced_embedding(const Graph& g, PatternKind kind, std::span<const Vertex> roles);

/// All canonical induced embeddings, sorted by roles. Parallel over anchor vertices.
std::vector<Embedding> find_induced(const Graph& g, PatternKind kind);
/// Same result computed on one thread.
std::vector<Embedding> find_induced_serial(const Graph& g, PatternKind kind);

/// Visits canonical embeddings in anchor order until `visit` returns false.
/// Returns false when stopped early.
bool for_each_induced(const Graph& g, PatternKind kind, const std::function<bool(const Embedding&)>& visit);

bool contains_induced(const Graph& g, PatternKind kind);
bool is_free(const Graph& g, std::span<const PatternKind> patterns);
bool is_free(const Graph& g, std::initializer_list<PatternKind> patterns);

bool is_claw_free(const Graph& g);
bool is_diamond_free(const Graph& g);

/// Every induced copy of the pattern contains an o-heavy pair of g.
bool is_pattern_o_heavy(const Graph& g, PatternKind kind);
/// Claw-o-heavy via a center-anchored scan without materializing embeddings.
bool is_claw_o_heavy(const Graph& g);

struct NetEmbedding {
  Vertex a1 = 0, a2 = 0, a3 = 0;
  Vertex b1 = 0, b2 = 0, b3 = 0;

  std::array<Vertex, 3> a() const { return {a1, a2, a3}; }
  std::array<Vertex, 3> b() const { return {b1, b2, b3}; }
  static NetEmbedding from(const Embedding& e);
  auto operator<=>(const NetEmbedding&) const = default;
};

struct NetHeaviness {
  bool o_heavy = false;
  bool p_heavy = false;
  bool q_heavy = false;
  /// 1-based index i of the heavy corner-pendant pair.
  std::optional<int> q_index;
  /// Outer neighbors of the two degree-2 pendants, in index order.
  std::optional<std::pair<Vertex, Vertex>> c_neighbors;
};

/// Throws InputError unless e is an induced net of g. Degrees are taken in g.
NetHeaviness classify_net(const Graph& g, const NetEmbedding& e);

std::vector<NetEmbedding> find_nets(const Graph& g);

struct NetProfile {
  int nets = 0;
  bool net_free = true;
  bool o_heavy = true;
  bool p_heavy = true;
  bool op_heavy = true;
  bool pq_heavy = true;
};

NetProfile net_profile(const Graph& g);

}  // namespace hamclosure
