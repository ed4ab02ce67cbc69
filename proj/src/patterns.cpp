#include "hamclosure/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "hamclosure/errors.hpp"
#include "hamclosure/heaviness.hpp"

namespace hamclosure {

namespace {

struct PatternInfo {
  PatternKind kind;
  std::string_view name;
  Graph graph;
  std::vector<std::vector<int>> automorphisms;
  // Search order: each vertex after the first has an earlier neighbor.
  std::vector<int> order;
};

std::vector<std::vector<int>> brute_force_automorphisms(const Graph& h) {
  std::vector<int> perm(static_cast<std::size_t>(h.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (Vertex u = 0; u < h.order() && ok; ++u)
      for (Vertex v = u + 1; v < h.order() && ok; ++v)
        if (h.adjacent(u, v) != h.adjacent(perm[u], perm[v])) ok = false;
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<int> search_order(const Graph& h) {
  // Start at a maximum-degree vertex, then repeatedly take the vertex with
  // most already-placed neighbors (ties: higher degree, then lower index).
  const int k = h.order();
  std::vector<int> order;
  std::vector<bool> placed(static_cast<std::size_t>(k), false);
  int start = 0;
  for (int v = 1; v < k; ++v)
    if (h.degree(v) > h.degree(start)) start = v;
  order.push_back(start);
  placed[start] = true;
  while (static_cast<int>(order.size()) < k) {
    int best = -1;
    int best_links = -1;
    for (int v = 0; v < k; ++v) {
      if (placed[v]) continue;
      int links = 0;
      for (int u : order) links += h.adjacent(u, v) ? 1 : 0;
      if (links > best_links || (links == best_links && h.degree(v) > h.degree(best))) {
        best = v;
        best_links = links;
      }
    }
    order.push_back(best);
    placed[best] = true;
  }
  return order;
}

PatternInfo make_info(PatternKind kind, std::string_view name, int n, std::initializer_list<Edge> edges) {
  PatternInfo info{kind, name, Graph::from_edges(n, edges), {}, {}};
  info.automorphisms = brute_force_automorphisms(info.graph);
  info.order = search_order(info.graph);
  return info;
}

const std::vector<PatternInfo>& catalog() {
  static const std::vector<PatternInfo> table = [] {
    std::vector<PatternInfo> t;
    t.push_back(make_info(PatternKind::Claw, "claw", 4, {{0, 1}, {0, 2}, {0, 3}}));
    t.push_back(make_info(PatternKind::P4, "p4", 4, {{0, 1}, {1, 2}, {2, 3}}));
    t.push_back(make_info(PatternKind::P5, "p5", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}));
    t.push_back(make_info(PatternKind::P6, "p6", 6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}}));
    t.push_back(make_info(PatternKind::C3, "c3", 3, {{0, 1}, {0, 2}, {1, 2}}));
    t.push_back(make_info(PatternKind::Z1, "z1", 4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}}));
    t.push_back(make_info(PatternKind::Z2, "z2", 5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {3, 4}}));
    t.push_back(make_info(PatternKind::Bull, "bull", 5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}}));
    t.push_back(make_info(PatternKind::Net, "net", 6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}}));
    t.push_back(make_info(PatternKind::Wounded, "wounded", 6, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}, {4, 5}}));
    t.push_back(make_info(PatternKind::Diamond, "diamond", 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}));
    return t;
  }();
  return table;
}

const PatternInfo& info(PatternKind kind) { return catalog()[static_cast<std::size_t>(kind)]; }

bool is_canonical(const PatternInfo& p, std::span<const Vertex> roles) {
  for (const auto& sigma : p.automorphisms) {
    for (std::size_t i = 0; i < roles.size(); ++i) {
      const Vertex other = roles[static_cast<std::size_t>(sigma[i])];
      if (other < roles[i]) return false;
      if (other > roles[i]) break;
    }
  }
  return true;
}

// Generic backtracking matcher. `visit` returns false to stop.
class Matcher {
 public:
  Matcher(const Graph& g, const PatternInfo& p, const std::function<bool(const Embedding&)>& visit)
      : g_(g), p_(p), visit_(visit), roles_(static_cast<std::size_t>(p.graph.order()), -1), used_(g.order()) {}

  bool run_anchor(Vertex anchor) {
    const int pv = p_.order[0];
    if (g_.degree(anchor) < p_.graph.degree(pv)) return true;
    roles_[pv] = anchor;
    used_.set(anchor);
    const bool go_on = extend(1);
    used_.reset(anchor);
    roles_[pv] = -1;
    return go_on;
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == p_.order.size()) {
      if (!is_canonical(p_, roles_)) return true;
      return visit_(Embedding{p_.kind, roles_});
    }
    const int pv = p_.order[depth];
    VertexSet cand = ~used_;
    for (std::size_t k = 0; k < depth; ++k) {
      const int q = p_.order[k];
      if (p_.graph.adjacent(pv, q))
        cand &= g_.neighbors(roles_[q]);
      else
        cand -= g_.neighbors(roles_[q]);
    }
    for (Vertex v : cand) {
      if (g_.degree(v) < p_.graph.degree(pv)) continue;
      roles_[pv] = v;
      used_.set(v);
      const bool go_on = extend(depth + 1);
      used_.reset(v);
      roles_[pv] = -1;
      if (!go_on) return false;
    }
    return true;
  }

  const Graph& g_;
  const PatternInfo& p_;
  const std::function<bool(const Embedding&)>& visit_;
  std::vector<Vertex> roles_;
  VertexSet used_;
};

// Claw: center c with an independent leaf triple in N(c), leaves ascending.
bool claws_at(const Graph& g, Vertex c, const std::function<bool(const Embedding&)>& visit) {
  const VertexSet& nc = g.neighbors(c);
  for (Vertex a : nc) {
    VertexSet after_a = nc - g.closed_neighbors(a);
    for (Vertex b = after_a.next(a); b != -1; b = after_a.next(b)) {
      const VertexSet third = after_a - g.closed_neighbors(b);
      for (Vertex d = third.next(b); d != -1; d = third.next(d))
        if (!visit(Embedding{PatternKind::Claw, {c, a, b, d}})) return false;
    }
  }
  return true;
}

// Net: ascending triangle a1<a2<a3 anchored at a1, each corner with a private
// pendant, pendants pairwise nonadjacent.
bool nets_at(const Graph& g, Vertex a1, const std::function<bool(const Embedding&)>& visit) {
  const VertexSet& n1 = g.neighbors(a1);
  for (Vertex a2 = n1.next(a1); a2 != -1; a2 = n1.next(a2)) {
    const VertexSet common = n1 & g.neighbors(a2);
    for (Vertex a3 = common.next(a2); a3 != -1; a3 = common.next(a3)) {
      const VertexSet c1 = g.closed_neighbors(a1);
      const VertexSet c2 = g.closed_neighbors(a2);
      const VertexSet c3 = g.closed_neighbors(a3);
      const VertexSet p1 = g.neighbors(a1) - c2 - c3;
      const VertexSet p2 = g.neighbors(a2) - c1 - c3;
      const VertexSet p3 = g.neighbors(a3) - c1 - c2;
      if (p1.empty() || p2.empty() || p3.empty()) continue;
      for (Vertex b1 : p1) {
        const VertexSet q2 = p2 - g.neighbors(b1);
        for (Vertex b2 : q2) {
          const VertexSet q3 = p3 - g.neighbors(b1) - g.neighbors(b2);
          for (Vertex b3 : q3)
            if (!visit(Embedding{PatternKind::Net, {a1, a2, a3, b1, b2, b3}})) return false;
        }
      }
    }
  }
  return true;
}

bool visit_anchor(const Graph& g, PatternKind kind, Vertex anchor, const std::function<bool(const Embedding&)>& visit) {
  if (kind == PatternKind::Claw) return claws_at(g, anchor, visit);
  if (kind == PatternKind::Net) return nets_at(g, anchor, visit);
  Matcher m(g, info(kind), visit);
  return m.run_anchor(anchor);
}

}  // namespace

std::string_view pattern_name(PatternKind kind) { return info(kind).name; }

std::optional<PatternKind> parse_pattern(std::string_view name) {
  std::string lower;
  for (char c : name) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "k13" || lower == "k1,3") return PatternKind::Claw;
  if (lower == "b") return PatternKind::Bull;
  if (lower == "n") return PatternKind::Net;
  if (lower == "w") return PatternKind::Wounded;
  if (lower == "d") return PatternKind::Diamond;
  for (const auto& p : catalog())
    if (p.name == lower) return p.kind;
  return std::nullopt;
}

const Graph& pattern_graph(PatternKind kind) { return info(kind).graph; }

const std::vector<std::vector<int>>& pattern_automorphisms(PatternKind kind) { return info(kind).automorphisms; }

std::vector<Vertex> canonical_roles(PatternKind kind, std::span<const Vertex> roles) {
  std::vector<Vertex> best(roles.begin(), roles.end());
  std::vector<Vertex> candidate(roles.size());
  for (const auto& sigma : info(kind).automorphisms) {
    for (std::size_t i = 0; i < roles.size(); ++i) candidate[i] = roles[static_cast<std::size_t>(sigma[i])];
    if (candidate < best) best = candidate;
  }
  return best;
}

bool is_induced_embedding(const Graph& g, PatternKind kind, std::span<const Vertex> roles) {
  const Graph& h = pattern_graph(kind);
  if (static_cast<int>(roles.size()) != h.order()) return false;
  for (Vertex r : roles)
    if (r < 0 || r >= g.order()) return false;
  for (std::size_t i = 0; i < roles.size(); ++i)
    for (std::size_t j = i + 1; j < roles.size(); ++j) {
      if (roles[i] == roles[j]) return false;
      if (g.adjacent(roles[i], roles[j]) != h.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j))) return false;
    }
  return true;
}

bool for_each_induced(const Graph& g, PatternKind kind, const std::function<bool(const Embedding&)>& visit) {
  for (Vertex anchor = 0; anchor < g.order(); ++anchor)
    if (!visit_anchor(g, kind, anchor, visit)) return false;
  return true;
}

std::vector<Embedding> find_induced_serial(const Graph& g, PatternKind kind) {
  std::vector<Embedding> out;
  for_each_induced(g, kind, [&](const Embedding& e) {
    out.push_back(e);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Embedding> find_induced(const Graph& g, PatternKind kind) {
  const int n = g.order();
  std::vector<std::vector<Embedding>> buckets(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
  for (int anchor = 0; anchor < n; ++anchor) {
    auto& bucket = buckets[static_cast<std::size_t>(anchor)];
    visit_anchor(g, kind, anchor, [&bucket](const Embedding& e) {
      bucket.push_back(e);
      return true;
    });
  }
  std::vector<Embedding> out;
  for (auto& b : buckets) out.insert(out.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
  std::sort(out.begin(), out.end());
  return out;
}

bool contains_induced(const Graph& g, PatternKind kind) {
  if (kind == PatternKind::Claw) return !is_claw_free(g);
  if (kind == PatternKind::Diamond) return !is_diamond_free(g);
  return !for_each_induced(g, kind, [](const Embedding&) { return false; });
}

bool is_free(const Graph& g, std::span<const PatternKind> patterns) {
  return std::none_of(patterns.begin(), patterns.end(), [&](PatternKind k) { return contains_induced(g, k); });
}

bool is_free(const Graph& g, std::initializer_list<PatternKind> patterns) {
  return is_free(g, std::span<const PatternKind>(patterns.begin(), patterns.size()));
}

bool is_claw_free(const Graph& g) {
  for (Vertex c = 0; c < g.order(); ++c) {
    const VertexSet& nc = g.neighbors(c);
    if (nc.count() < 3) continue;
    for (Vertex a : nc) {
      const VertexSet rest = nc - g.closed_neighbors(a);
      for (Vertex b = rest.next(a); b != -1; b = rest.next(b))
        if ((rest - g.closed_neighbors(b)).next(b) != -1) return false;
    }
  }
  return true;
}

bool is_diamond_free(const Graph& g) {
  for (const Edge& e : g.edges()) {
    const VertexSet common = g.neighbors(e.u) & g.neighbors(e.v);
    if (common.count() >= 2 && !g.is_clique(common)) return false;
  }
  return true;
}

bool is_claw_o_heavy(const Graph& g) {
  const int n = g.order();
  for (Vertex c = 0; c < n; ++c) {
    const VertexSet& nc = g.neighbors(c);
    if (nc.count() < 3) continue;
    for (Vertex a : nc) {
      const VertexSet rest = nc - g.closed_neighbors(a);
      for (Vertex b = rest.next(a); b != -1; b = rest.next(b)) {
        if (heavy_sum(g, a, b)) continue;
        const int bound = n - std::max(g.degree(a), g.degree(b));
        for (Vertex w : rest - g.closed_neighbors(b))
          if (g.degree(w) < bound) return false;
      }
    }
  }
  return true;
}

bool is_pattern_o_heavy(const Graph& g, PatternKind kind) {
  if (kind == PatternKind::Claw) return is_claw_o_heavy(g);
  return for_each_induced(g, kind, [&](const Embedding& e) { return contains_o_heavy_pair(g, e.vertices(g.order())); });
}

NetEmbedding NetEmbedding::from(const Embedding& e) {
  if (e.kind != PatternKind::Net || e.roles.size() != 6) throw InputError("embedding is not a net");
  return {e.roles[0], e.roles[1], e.roles[2], e.roles[3], e.roles[4], e.roles[5]};
}

NetHeaviness classify_net(const Graph& g, const NetEmbedding& e) {
  const std::array<Vertex, 6> roles{e.a1, e.a2, e.a3, e.b1, e.b2, e.b3};
  if (!is_induced_embedding(g, PatternKind::Net, roles)) throw InputError("not an induced net of the graph");

  NetHeaviness h;
  h.o_heavy = contains_o_heavy_pair(g, VertexSet::from_range(g.order(), roles));
  const auto a = e.a();
  const auto b = e.b();
  h.p_heavy = is_a_heavy_pair(g, a[0], a[1]) || is_a_heavy_pair(g, a[0], a[2]) || is_a_heavy_pair(g, a[1], a[2]);

  for (int i = 0; i < 3 && !h.q_heavy; ++i) {
    if (!is_heavy(g, a[i]) || !is_heavy(g, b[i])) continue;
    bool ok = true;
    std::array<Vertex, 2> outer{-1, -1};
    int slot = 0;
    for (int j = 0; j < 3 && ok; ++j) {
      if (j == i) continue;
      if (g.degree(a[j]) != 3 || g.degree(b[j]) != 2) {
        ok = false;
        break;
      }
      VertexSet others = g.neighbors(b[j]);
      others.reset(a[j]);
      const Vertex c = others.first();
      if (c == -1 || !is_heavy(g, c)) ok = false;
      outer[slot++] = c;
    }
    if (ok) {
      h.q_heavy = true;
      h.q_index = i + 1;
      h.c_neighbors = std::make_pair(outer[0], outer[1]);
    }
  }
  return h;
}

std::vector<NetEmbedding> find_nets(const Graph& g) {
  std::vector<NetEmbedding> out;
  for (const Embedding& e : find_induced(g, PatternKind::Net)) out.push_back(NetEmbedding::from(e));
  return out;
}

NetProfile net_profile(const Graph& g) {
  NetProfile p;
  for_each_induced(g, PatternKind::Net, [&](const Embedding& e) {
    const NetHeaviness h = classify_net(g, NetEmbedding::from(e));
    ++p.nets;
    p.net_free = false;
    p.o_heavy = p.o_heavy && h.o_heavy;
    p.p_heavy = p.p_heavy && h.p_heavy;
    p.op_heavy = p.op_heavy && (h.o_heavy || h.p_heavy);
    p.pq_heavy = p.pq_heavy && (h.p_heavy || h.q_heavy);
    return true;
  });
  return p;
}

}  // namespace hamclosure
