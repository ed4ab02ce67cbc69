#include "report.hpp"

#include <sstream>

#include "hamclosure/closures.hpp"
#include "hamclosure/errors.hpp"
#include "hamclosure/families.hpp"
#include "hamclosure/graph_io.hpp"
#include "hamclosure/ham_oracle.hpp"
#include "hamclosure/heaviness.hpp"
#include "hamclosure/patterns.hpp"
#include "hamclosure/regions.hpp"

namespace hamclosure::cli {

using nlohmann::json;

namespace {

json set_json(const VertexSet& s) { return s.to_vector(); }

json pairs_json(const std::vector<HeavyPair>& pairs) {
  json out = json::array();
  for (const HeavyPair& p : pairs) out.push_back({p.u, p.v});
  return out;
}

json closure_json(const ClosureResult& r) {
  return {{"graph6", emit_graph6(r.graph)}, {"edges_added", r.trace.edges_added()}, {"steps", r.trace.steps.size()}};
}

json chain_json(const ChainCertificate& c) {
  json parts = json::array();
  for (const VertexSet& p : c.parts) parts.push_back(set_json(p));
  json links = json::array();
  for (const auto& group : c.links) {
    json edges = json::array();
    for (const Edge& e : group) edges.push_back({e.u, e.v});
    links.push_back(edges);
  }
  return {{"cycle", c.cycle}, {"parts", parts}, {"shared", c.shared}, {"links", links}};
}

json q_json(const QCertificate& q) {
  return {{"k", set_json(q.k)}, {"a1", q.a1}, {"c2", q.c2}, {"c3", q.c3},
          {"b2", q.b2}, {"a2", q.a2}, {"a3", q.a3}, {"b3", q.b3}};
}

json certificate_json(const FamilyCertificate& c) {
  json out = {{"family", std::string(family_name(c.family))}};
  if (c.chain) out["chain"] = chain_json(*c.chain);
  if (c.q) out["q"] = q_json(*c.q);
  if (c.k.universe() > 0 && c.k.any()) out["k"] = set_json(c.k);
  if (c.kprime.universe() > 0 && c.kprime.any()) out["kprime"] = set_json(c.kprime);
  if (c.u0 >= 0) out["u0"] = c.u0;
  json comps = json::array();
  for (const ComponentWitness& w : c.components) {
    json cj = {{"vertices", set_json(w.vertices)}, {"types", w.types}};
    if (w.chain) cj["chain"] = chain_json(*w.chain);
    if (w.q) cj["q"] = q_json(*w.q);
    comps.push_back(cj);
  }
  if (!comps.empty()) out["components"] = comps;
  return out;
}

HamCertificate decide(const Graph& g, std::uint64_t budget) {
  HamCertificate c = is_hamiltonian(g, budget);
  if (!c.decided()) throw BudgetExceeded("hamiltonicity search exceeded its node budget of " + std::to_string(budget));
  return c;
}

std::string flag(bool b) { return b ? "true" : "false"; }

std::string families_text(const FamilyWitness& w) {
  std::string out;
  for (const FamilyCertificate& c : w.matches) {
    if (!out.empty()) out += ',';
    out += family_name(c.family);
  }
  return out.empty() ? "-" : out;
}

}  // namespace

json analysis_report(const Graph& g, const ReportOptions& options) {
  const TheoremVerdict v = classify_theorem(g);
  const HamCertificate ham = decide(g, options.node_budget);

  json closures = {{"o", closure_json(o_closure(g))}};
  closures["r"] = is_claw_free(g) ? closure_json(r_closure(g)) : json(nullptr);
  if (v.claw_o_heavy) {
    closures["c"] = closure_json(c_closure(g));
    closures["c_literal"] = closure_json(c_closure(g, EligibilityMode::Literal));
  } else {
    closures["c"] = nullptr;
    closures["c_literal"] = nullptr;
  }

  json regions = nullptr;
  if (v.claw_o_heavy) {
    const RegionDecomposition d = RegionDecomposition::decompose(g);
    json list = json::array();
    for (const VertexSet& r : d.regions()) list.push_back(set_json(r));
    VertexSet interior(g.order());
    for (Vertex x = 0; x < g.order(); ++x)
      if (d.is_interior(x)) interior.set(x);
    regions = {{"regions", list}, {"interior", set_json(interior)}, {"frontier", set_json(g.vertices() - interior)}};
  }

  json matches = json::array();
  for (const FamilyCertificate& c : v.witness.matches) matches.push_back(certificate_json(c));

  const NetProfile& np = v.nets;
  return {
      {"graph6", emit_graph6(g)},
      {"n", g.order()},
      {"m", g.size()},
      {"hypotheses",
       {{"two_connected", v.two_connected},
        {"claw_free", v.claw_free},
        {"claw_o_heavy", v.claw_o_heavy},
        {"c_closed", v.c_closed},
        {"n_p_heavy", np.p_heavy},
        {"n_pq_heavy", np.pq_heavy}}},
      {"heavy_pairs", {{"o_heavy", pairs_json(o_heavy_pairs(g))}, {"a_heavy", pairs_json(a_heavy_pairs(g))}}},
      {"net_profile",
       {{"nets", np.nets},
        {"net_free", np.net_free},
        {"o_heavy", np.o_heavy},
        {"p_heavy", np.p_heavy},
        {"op_heavy", np.op_heavy},
        {"pq_heavy", np.pq_heavy}}},
      {"closures", closures},
      {"regions", regions},
      {"families",
       {{"matches", matches},
        {"order_threshold_met", v.witness.order_threshold_met},
        {"in_p_union", v.fam_p},
        {"in_pq_union", v.fam_pq}}},
      {"theorem_status", std::string(theorem_status_name(v.status))},
      {"hamiltonicity",
       {{"status", std::string(ham_status_name(ham.status))},
        {"cycle", ham.cycle},
        {"nodes_explored", ham.nodes_explored},
        {"note", ham.note}}},
      {"tool_version", kToolVersion},
      {"seed", options.seed},
  };
}

std::string explain(const Graph& g, const ReportOptions& options) {
  const TheoremVerdict v = classify_theorem(g);
  const HamCertificate ham = decide(g, options.node_budget);
  std::ostringstream out;
  out << "graph " << emit_graph6(g) << " n=" << g.order() << " m=" << g.size() << '\n';
  out << "hypotheses: 2-connected=" << flag(v.two_connected) << " claw-free=" << flag(v.claw_free)
      << " claw-o-heavy=" << flag(v.claw_o_heavy) << " c-closed=" << flag(v.c_closed)
      << " N-p-heavy=" << flag(v.nets.p_heavy) << " N-pq-heavy=" << flag(v.nets.pq_heavy) << '\n';
  out << "nets: " << v.nets.nets << '\n';
  for (const NetEmbedding& e : find_nets(g)) {
    const NetHeaviness h = classify_net(g, e);
    out << "  a=" << e.a1 << ',' << e.a2 << ',' << e.a3 << " b=" << e.b1 << ',' << e.b2 << ',' << e.b3
        << " o-heavy=" << flag(h.o_heavy) << " p-heavy=" << flag(h.p_heavy) << " q-heavy=" << flag(h.q_heavy) << '\n';
  }
  out << "o-heavy pairs:";
  for (const HeavyPair& p : o_heavy_pairs(g)) out << ' ' << p.u << '-' << p.v;
  out << '\n';
  if (v.claw_o_heavy) {
    const RegionDecomposition d = RegionDecomposition::decompose(g);
    out << "c-closure: " << emit_graph6(d.closure()) << '\n';
    out << "regions:\n";
    for (std::size_t i = 0; i < d.regions().size(); ++i)
      out << "  R" << i << ' ' << to_string(d.regions()[i]) << " interior="
          << to_string(d.interior(static_cast<int>(i))) << '\n';
  } else {
    out << "regions: none (graph is not claw-o-heavy)\n";
  }
  out << "families:";
  if (v.witness.matches.empty()) out << " none";
  out << '\n';
  for (const FamilyCertificate& c : v.witness.matches) {
    out << "  " << family_name(c.family);
    if (c.k.universe() > 0 && c.k.any()) out << " K=" << to_string(c.k);
    if (c.kprime.universe() > 0 && c.kprime.any()) out << " K'=" << to_string(c.kprime);
    if (c.u0 >= 0) out << " u0=" << c.u0;
    if (c.chain) {
      out << (c.chain->cycle ? " cycle" : " chain");
      for (const VertexSet& p : c.chain->parts) out << ' ' << to_string(p);
    }
    out << '\n';
    for (const ComponentWitness& w : c.components) out << "    component " << to_string(w.vertices) << " type " << w.types << '\n';
  }
  out << "theorem status: " << theorem_status_name(v.status) << '\n';
  out << "hamiltonicity: " << ham_status_name(ham.status);
  if (ham.hamiltonian()) {
    out << " cycle";
    for (Vertex x : ham.cycle) out << ' ' << x;
  }
  if (!ham.note.empty()) out << " (" << ham.note << ')';
  out << '\n';
  return out.str();
}

std::string summary_line(const Graph& g, const ReportOptions& options) {
  const TheoremVerdict v = classify_theorem(g);
  const HamCertificate ham = decide(g, options.node_budget);
  return emit_graph6(g) + " status=" + std::string(theorem_status_name(v.status)) +
         " hamiltonian=" + flag(ham.hamiltonian()) + " families=" + families_text(v.witness);
}

}  // namespace hamclosure::cli
