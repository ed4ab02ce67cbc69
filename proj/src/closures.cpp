#include "hamclosure/closures.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <random>
#include <sstream>

#include "hamclosure/errors.hpp"
#include "hamclosure/heaviness.hpp"
#include "hamclosure/patterns.hpp"

namespace hamclosure {

std::string_view step_kind_name(StepKind kind) {
  switch (kind) {
    case StepKind::OPair: return "o-pair";
    case StepKind::RCompletion: return "r-completion";
    case StepKind::CCompletion: return "c-completion";
  }
  return "?";
}

std::string_view mode_name(EligibilityMode mode) { return mode == EligibilityMode::Literal ? "literal" : "amended"; }

Graph ClosureTrace::replay() const {
  Graph g = initial;
  for (const ClosureStep& s : steps) g = g.with_edges(s.added);
  return g;
}

std::vector<Graph> ClosureTrace::graphs() const {
  std::vector<Graph> out{initial};
  for (const ClosureStep& s : steps) out.push_back(out.back().with_edges(s.added));
  return out;
}

int ClosureTrace::edges_added() const {
  int total = 0;
  for (const ClosureStep& s : steps) total += static_cast<int>(s.added.size());
  return total;
}

std::string ClosureTrace::to_text() const {
  std::ostringstream out;
  for (const ClosureStep& s : steps) {
    out << step_kind_name(s.kind) << ' ';
    if (s.kind == StepKind::OPair)
      out << s.vertex << '-' << s.partner;
    else
      out << s.vertex;
    out << " +=";
    for (const Edge& e : s.added) out << ' ' << e.u << '-' << e.v;
    out << '\n';
  }
  return out.str();
}

namespace {

Vertex parse_vertex(std::string_view tok, std::size_t offset) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || v < 0) throw ParseError("expected vertex", offset);
  return v;
}

Edge parse_pair(std::string_view tok, std::size_t offset) {
  const auto dash = tok.find('-');
  if (dash == std::string_view::npos) throw ParseError("expected u-v pair", offset);
  const Vertex u = parse_vertex(tok.substr(0, dash), offset);
  const Vertex v = parse_vertex(tok.substr(dash + 1), offset + dash + 1);
  if (u == v) throw ParseError("loop in trace", offset);
  return Edge::of(u, v);
}

}  // namespace

std::vector<ClosureStep> ClosureTrace::parse_steps(std::string_view text) {
  std::vector<ClosureStep> steps;
  std::size_t line_start = 0;
  while (line_start < text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    const std::string_view line = text.substr(line_start, line_end - line_start);

    std::vector<std::pair<std::string_view, std::size_t>> toks;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      const std::size_t b = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
      if (i > b) toks.emplace_back(line.substr(b, i - b), line_start + b);
    }
    if (!toks.empty()) {
      if (toks.size() < 3 || toks[2].first != "+=") throw ParseError("expected `<kind> <target> += <edges>`", line_start);
      ClosureStep step;
      const std::string_view kind = toks[0].first;
      if (kind == "o-pair") {
        step.kind = StepKind::OPair;
        const Edge p = parse_pair(toks[1].first, toks[1].second);
        step.vertex = p.u;
        step.partner = p.v;
      } else if (kind == "r-completion" || kind == "c-completion") {
        step.kind = kind[0] == 'r' ? StepKind::RCompletion : StepKind::CCompletion;
        step.vertex = parse_vertex(toks[1].first, toks[1].second);
      } else {
        throw ParseError("unknown step kind", toks[0].second);
      }
      for (std::size_t k = 3; k < toks.size(); ++k) step.added.push_back(parse_pair(toks[k].first, toks[k].second));
      steps.push_back(std::move(step));
    }
    line_start = line_end + 1;
  }
  return steps;
}

namespace {

// Picks one index out of `count` candidates listed in ascending order.
class Picker {
 public:
  explicit Picker(SelectionPolicy p) : policy_(p), rng_(p.seed) {}

  std::size_t pick(std::size_t count) {
    switch (policy_.order) {
      case SelectionPolicy::Order::Ascending: return 0;
      case SelectionPolicy::Order::Descending: return count - 1;
      case SelectionPolicy::Order::Random: return std::uniform_int_distribution<std::size_t>(0, count - 1)(rng_);
    }
    return 0;
  }

 private:
  SelectionPolicy policy_;
  std::mt19937_64 rng_;
};

std::vector<Edge> missing_in_neighborhood(const Graph& g, Vertex x) {
  std::vector<Edge> out;
  const VertexSet& nx = g.neighbors(x);
  for (Vertex u : nx)
    for (Vertex v = nx.next(u); v != -1; v = nx.next(v))
      if (!g.adjacent(u, v)) out.push_back({u, v});
  return out;
}

template <typename Eligible>
ClosureResult local_closure(const Graph& g, StepKind kind, SelectionPolicy policy, Eligible eligible) {
  ClosureResult r{g, {g, g, {}}};
  Picker picker(policy);
  while (true) {
    std::vector<Vertex> candidates;
    for (Vertex x = 0; x < r.graph.order(); ++x)
      if (eligible(r.graph, x)) candidates.push_back(x);
    if (candidates.empty()) break;
    const Vertex x = candidates[picker.pick(candidates.size())];
    ClosureStep step{kind, x, -1, missing_in_neighborhood(r.graph, x)};
    r.graph = r.graph.with_edges(step.added);
    r.trace.steps.push_back(std::move(step));
  }
  r.trace.final_graph = r.graph;
  return r;
}

bool r_eligible_unchecked(const Graph& g, Vertex x) {
  const VertexSet& nx = g.neighbors(x);
  return nx.any() && !g.is_clique(nx) && is_connected(g, nx);
}

}  // namespace

Graph complete_neighborhood(const Graph& g, Vertex x) { return g.with_edges(missing_in_neighborhood(g, x)); }

ClosureResult o_closure(const Graph& g, SelectionPolicy policy) {
  ClosureResult r{g, {g, g, {}}};
  Picker picker(policy);
  while (true) {
    const std::vector<HeavyPair> pairs = o_heavy_pairs(r.graph);
    if (pairs.empty()) break;
    const HeavyPair& p = pairs[picker.pick(pairs.size())];
    ClosureStep step{StepKind::OPair, p.u, p.v, {{p.u, p.v}}};
    r.graph = r.graph.with_edges(step.added);
    r.trace.steps.push_back(std::move(step));
  }
  r.trace.final_graph = r.graph;
  return r;
}

bool r_eligible(const Graph& g, Vertex x) {
  if (x < 0 || x >= g.order()) throw InputError("vertex out of range");
  if (!is_claw_free(g)) throw PreconditionError("input not claw-free");
  return r_eligible_unchecked(g, x);
}

ClosureResult r_closure(const Graph& g, SelectionPolicy policy) {
  if (!is_claw_free(g)) throw PreconditionError("input not claw-free");
  return local_closure(g, StepKind::RCompletion, policy, r_eligible_unchecked);
}

std::vector<Edge> bc_local(const Graph& g, Vertex x) {
  if (x < 0 || x >= g.order()) throw InputError("vertex out of range");
  std::vector<Edge> out;
  const VertexSet& nx = g.neighbors(x);
  for (Vertex u : nx)
    for (Vertex v = nx.next(u); v != -1; v = nx.next(v))
      if (is_o_heavy_pair(g, u, v)) out.push_back({u, v});
  return out;
}

bool c_eligible_unchecked(const Graph& g, Vertex x, EligibilityMode mode) {
  const VertexSet& nx = g.neighbors(x);
  if (g.is_clique(nx)) return false;
  const Graph bc = g.with_edges(bc_local(g, x));
  if (mode == EligibilityMode::Literal && bc.is_clique(nx)) return false;

  const std::vector<VertexSet> parts = components(bc, nx);
  if (parts.size() == 1) return true;
  if (parts.size() != 2 || !bc.is_clique(parts[0]) || !bc.is_clique(parts[1])) return false;
  for (Vertex z = 0; z < g.order(); ++z) {
    if (z == x || !is_o_heavy_pair(g, x, z)) continue;
    if (g.neighbors(z).intersects(parts[0]) && g.neighbors(z).intersects(parts[1])) return true;
  }
  return false;
}

bool c_eligible(const Graph& g, Vertex x, EligibilityMode mode) {
  if (x < 0 || x >= g.order()) throw InputError("vertex out of range");
  if (!is_claw_o_heavy(g)) throw PreconditionError("input not claw-o-heavy");
  return c_eligible_unchecked(g, x, mode);
}

ClosureResult c_closure(const Graph& g, EligibilityMode mode, SelectionPolicy policy) {
  if (!is_claw_o_heavy(g)) throw PreconditionError("input not claw-o-heavy");
  return local_closure(g, StepKind::CCompletion, policy,
                       [mode](const Graph& h, Vertex x) { return c_eligible_unchecked(h, x, mode); });
}

bool closure_modes_diverge(const Graph& g) {
  return c_closure(g, EligibilityMode::Literal).graph != c_closure(g, EligibilityMode::Amended).graph;
}

bool is_closure_target(const Graph& g) { return !has_o_heavy_pair(g) && is_claw_free(g) && is_diamond_free(g); }

namespace {

Graph with_mask(const Graph& g, const std::vector<Edge>& missing, std::uint64_t mask) {
  std::vector<Edge> extra;
  for (std::size_t i = 0; i < missing.size(); ++i)
    if ((mask >> i) & 1U) extra.push_back(missing[i]);
  return g.with_edges(extra);
}

SupergraphSearch summarize(const Graph& g, const std::vector<Edge>& missing, std::vector<std::uint64_t> satisfying) {
  // K_n always qualifies, so the list is never empty.
  std::sort(satisfying.begin(), satisfying.end());
  SupergraphSearch s;
  s.examined = std::uint64_t{1} << missing.size();
  s.satisfying_count = satisfying.size();
  int best = 65;
  std::uint64_t best_mask = 0;
  for (std::uint64_t m : satisfying) {
    const int c = std::popcount(m);
    if (c < best) {
      best = c;
      best_mask = m;
      s.minimum_count = 1;
    } else if (c == best) {
      ++s.minimum_count;
    }
  }
  s.unique = s.minimum_count == 1;
  s.contained_in_all = std::all_of(satisfying.begin(), satisfying.end(), [&](std::uint64_t m) { return (best_mask & ~m) == 0; });
  s.minimum = with_mask(g, missing, best_mask);
  for (std::size_t i = 0; i < missing.size(); ++i)
    if ((best_mask >> i) & 1U) s.added.push_back(missing[i]);
  return s;
}

std::vector<Edge> checked_missing(const Graph& g, int budget) {
  std::vector<Edge> missing = g.non_edges();
  if (static_cast<int>(missing.size()) > budget || missing.size() > 40)
    throw BudgetExceeded("supergraph search needs " + std::to_string(missing.size()) + " missing edges, budget is " +
                         std::to_string(budget));
  return missing;
}

}  // namespace

SupergraphSearch minimum_supergraph_oracle_serial(const Graph& g, int budget) {
  const std::vector<Edge> missing = checked_missing(g, budget);
  const std::uint64_t total = std::uint64_t{1} << missing.size();
  std::vector<std::uint64_t> satisfying;
  for (std::uint64_t mask = 0; mask < total; ++mask)
    if (is_closure_target(with_mask(g, missing, mask))) satisfying.push_back(mask);
  return summarize(g, missing, std::move(satisfying));
}

SupergraphSearch minimum_supergraph_oracle(const Graph& g, int budget) {
  const std::vector<Edge> missing = checked_missing(g, budget);
  const std::int64_t total = std::int64_t{1} << missing.size();
  std::vector<std::uint64_t> satisfying;
#pragma omp parallel
  {
    std::vector<std::uint64_t> local;
#pragma omp for schedule(static) nowait
    for (std::int64_t mask = 0; mask < total; ++mask)
      if (is_closure_target(with_mask(g, missing, static_cast<std::uint64_t>(mask))))
        local.push_back(static_cast<std::uint64_t>(mask));
#pragma omp critical
    satisfying.insert(satisfying.end(), local.begin(), local.end());
  }
  return summarize(g, missing, std::move(satisfying));
}

}  // namespace hamclosure
