#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hamclosure/graph.hpp"
#include "hamclosure/patterns.hpp"

namespace hamclosure {

enum class Family { C1N, C2N, C3NQ, C1NP, C2NP, C1NPQ, C2NPQ };

inline constexpr std::array<Family, 7> kAllFamilies = {Family::C1N,  Family::C2N,   Family::C3NQ, Family::C1NP,
                                                       Family::C2NP, Family::C1NPQ, Family::C2NPQ};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

/// How a component hangs off the central clique(s) in the composite families.
struct ComponentRecipe {
  enum class Kind { Chain, Cycle, Bridge, Q };
  enum class Host { K, KPrime };
  Kind kind = Kind::Chain;
  /// Clique the component attaches to; bridges always run from K to K'.
  Host host = Host::K;
  /// Sizes of the component's own cliques, in order away from the host.
  std::vector<int> sizes;
  /// Junction sizes in order: host->first, ..., and for cycles and bridges the
  /// closing junction back to K (cycle) or into K' (bridge).
  std::vector<int> junctions;
};

struct FamilyParams {
  Family family = Family::C1N;
  /// C1N / C2N: clique sizes |K^1|, ..., |K^t|.
  std::vector<int> k_sizes;
  /// C1N: t-1 junction sizes; C2N: t junction sizes (the last closes the cycle).
  std::vector<int> u_sizes;
  /// Central clique K for C3NQ and the composite families.
  int k = 0;
  /// |K'| for C2NP and C2NPQ (u0 included).
  int kprime = 0;
  std::vector<ComponentRecipe> components;
};

/// Line-oriented key=value text. Throws ParseError.
FamilyParams parse_params(std::string_view text);
std::string format_params(const FamilyParams& p);

/// Deterministic for fixed (params, seed); seed 0 attaches through the lowest
/// free labels instead of shuffling. Throws ParameterError naming the
/// violated construction clause.
Graph generate(const FamilyParams& params, std::uint64_t seed);

/// Clique chain (C1N) or cycle (C2N). Junction i joins parts i and i+1
/// (cyclically for cycles): either one shared vertex or a perfect matching.
struct ChainCertificate {
  bool cycle = false;
  std::vector<VertexSet> parts;
  std::vector<Vertex> shared;
  std::vector<std::vector<Edge>> links;
};

/// C3NQ: clique K plus the path b2 a2 a3 b3 attached through a1, c2, c3.
struct QCertificate {
  VertexSet k;
  Vertex a1 = -1, c2 = -1, c3 = -1;
  Vertex b2 = -1, a2 = -1, a3 = -1, b3 = -1;
};

struct ComponentWitness {
  VertexSet vertices;
  /// Every satisfied type letter, e.g. "ab" or "d".
  std::string types;
  /// Certificate for the first satisfied type.
  std::optional<ChainCertificate> chain;
  std::optional<QCertificate> q;
};

struct FamilyCertificate {
  Family family = Family::C1N;
  std::optional<ChainCertificate> chain;
  std::optional<QCertificate> q;
  VertexSet k;
  VertexSet kprime;
  Vertex u0 = -1;
  std::vector<ComponentWitness> components;
};

/// Reconstructs the certified graph on n vertices.
Graph replay(const FamilyCertificate& cert, int n);

struct FamilyWitness {
  std::vector<FamilyCertificate> matches;
  bool order_threshold_met = false;

  bool contains(Family f) const;
  const FamilyCertificate* find(Family f) const;
};

/// G[within] as a clique chain / cycle.
std::optional<ChainCertificate> match_chain(const Graph& g, const VertexSet& within, bool cycle);
/// G[within] as a C3NQ member.
std::optional<QCertificate> match_q(const Graph& g, const VertexSet& within);

/// Composite membership checks with the central cliques fixed. On failure,
/// `reason` names the first violated clause.
std::optional<FamilyCertificate> check_c1np(const Graph& g, const VertexSet& k, std::string& reason);
std::optional<FamilyCertificate> check_c2np(const Graph& g, const VertexSet& k, const VertexSet& kprime, std::string& reason);
std::optional<FamilyCertificate> check_c1npq(const Graph& g, const VertexSet& k, std::string& reason);
std::optional<FamilyCertificate> check_c2npq(const Graph& g, const VertexSet& k, const VertexSet& kprime, std::string& reason);

std::optional<FamilyCertificate> recognize_family(const Graph& g, Family f);
/// Every family g belongs to, each with one certificate.
FamilyWitness recognize(const Graph& g);

enum class TheoremStatus { Consistent, OutOfRange, CounterexampleCandidate };
std::string_view theorem_status_name(TheoremStatus s);

struct TheoremVerdict {
  bool two_connected = false;
  bool claw_free = false;
  bool claw_o_heavy = false;
  bool c_closed = false;
  NetProfile nets;
  FamilyWitness witness;
  /// 2-connected, c-closed, claw-free and N-p-heavy (resp. N-pq-heavy).
  bool hyp_p = false;
  bool hyp_pq = false;
  /// Membership in the four-family (resp. six-family) union.
  bool fam_p = false;
  bool fam_pq = false;
  bool order_ok = false;
  TheoremStatus status = TheoremStatus::Consistent;
};

/// At n >= 10 the verdict is Consistent when hypotheses and membership agree
/// for both characterizations and CounterexampleCandidate otherwise. Below 10
/// it is Consistent only when neither side holds, OutOfRange otherwise.
TheoremVerdict classify_theorem(const Graph& g);

}  // namespace hamclosure
