#include "hamclosure/families.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "hamclosure/closures.hpp"
#include "hamclosure/errors.hpp"
#include "hamclosure/heaviness.hpp"

namespace hamclosure {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::C1N: return "C1N";
    case Family::C2N: return "C2N";
    case Family::C3NQ: return "C3NQ";
    case Family::C1NP: return "C1NP";
    case Family::C2NP: return "C2NP";
    case Family::C1NPQ: return "C1NPQ";
    case Family::C2NPQ: return "C2NPQ";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  std::string upper;
  for (char c : name) upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  for (Family f : kAllFamilies)
    if (family_name(f) == upper) return f;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Parameter files

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view tok, std::size_t offset) {
  tok = trim(tok);
  int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) throw ParseError("expected integer", offset);
  return v;
}

std::vector<int> parse_int_list(std::string_view text, std::size_t offset) {
  std::vector<int> out;
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_int(text.substr(start, comma - start), offset + start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

ComponentRecipe parse_component(std::string_view text, std::size_t offset) {
  std::vector<std::pair<std::string_view, std::size_t>> toks;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::size_t b = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > b) toks.emplace_back(text.substr(b, i - b), offset + b);
  }
  if (toks.size() < 2) throw ParseError("component needs a kind and a host", offset);
  ComponentRecipe c;
  const std::string_view kind = toks[0].first;
  if (kind == "chain") c.kind = ComponentRecipe::Kind::Chain;
  else if (kind == "cycle") c.kind = ComponentRecipe::Kind::Cycle;
  else if (kind == "bridge") c.kind = ComponentRecipe::Kind::Bridge;
  else if (kind == "q") c.kind = ComponentRecipe::Kind::Q;
  else throw ParseError("unknown component kind (chain, cycle, bridge, q)", toks[0].second);

  const std::string_view host = toks[1].first;
  if (host == "K") c.host = ComponentRecipe::Host::K;
  else if (host == "Kprime" || host == "K'") c.host = ComponentRecipe::Host::KPrime;
  else throw ParseError("unknown host (K, Kprime)", toks[1].second);

  for (std::size_t k = 2; k < toks.size(); ++k) {
    const auto [tok, at] = toks[k];
    const auto eq = tok.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected key=value", at);
    const std::string_view key = tok.substr(0, eq);
    const std::string_view value = tok.substr(eq + 1);
    if (key == "sizes") c.sizes = parse_int_list(value, at + eq + 1);
    else if (key == "junctions") c.junctions = parse_int_list(value, at + eq + 1);
    else throw ParseError("unknown component key", at);
  }
  return c;
}

std::string_view kind_word(ComponentRecipe::Kind k) {
  switch (k) {
    case ComponentRecipe::Kind::Chain: return "chain";
    case ComponentRecipe::Kind::Cycle: return "cycle";
    case ComponentRecipe::Kind::Bridge: return "bridge";
    case ComponentRecipe::Kind::Q: return "q";
  }
  return "?";
}

}  // namespace

FamilyParams parse_params(std::string_view text) {
  FamilyParams p;
  bool have_family = false;
  int t = -1;
  std::size_t t_offset = 0;
  std::vector<std::pair<std::pair<int, int>, std::size_t>> pairs;

  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::size_t lead = line.size() - trim(line).size() - (line.size() - line.find_last_not_of(" \t\r") - 1);
    line = trim(line);
    const std::size_t at = line_start + (line.empty() ? 0 : lead);
    if (!line.empty()) {
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) throw ParseError("expected key=value", at);
      const std::string_view key = trim(line.substr(0, eq));
      const std::string_view value = trim(line.substr(eq + 1));
      const std::size_t vat = at + eq + 1;
      if (key == "family") {
        const auto f = parse_family(value);
        if (!f) throw ParseError("unknown family", vat);
        p.family = *f;
        have_family = true;
      } else if (key == "t") {
        t = parse_int(value, vat);
        t_offset = vat;
      } else if (key == "k_sizes") {
        p.k_sizes = parse_int_list(value, vat);
      } else if (key == "u_sizes") {
        std::size_t start = 0;
        while (true) {
          const std::size_t semi = value.find(';', start);
          const std::string_view item = value.substr(start, semi - start);
          const std::vector<int> sizes = parse_int_list(item, vat + start);
          if (sizes.empty() || sizes.size() > 2) throw ParseError("junction needs one or two sizes", vat + start);
          pairs.push_back({{sizes.front(), sizes.back()}, vat + start});
          if (semi == std::string_view::npos) break;
          start = semi + 1;
        }
      } else if (key == "k") {
        p.k = parse_int(value, vat);
      } else if (key == "kprime") {
        p.kprime = parse_int(value, vat);
      } else if (key == "component") {
        p.components.push_back(parse_component(value, vat));
      } else {
        throw ParseError("unknown key", at);
      }
    }
    if (line_end == text.size()) break;
    line_start = line_end + 1;
  }
  if (!have_family) throw ParseError("missing family=", 0);
  for (const auto& [sizes, at] : pairs) {
    if (sizes.first != sizes.second) {
      const char* clause = p.family == Family::C2N ? "C2N clause (ii)" : "C1N clause (iii)";
      throw ParameterError(std::string(clause) + ": matched U sets must have equal sizes (" +
                           std::to_string(sizes.first) + " vs " + std::to_string(sizes.second) + ")");
    }
    p.u_sizes.push_back(sizes.first);
  }
  if (t >= 0 && !p.k_sizes.empty() && static_cast<int>(p.k_sizes.size()) != t)
    throw ParseError("t does not match the number of k_sizes", t_offset);
  if (t >= 0 && p.k_sizes.empty()) p.k_sizes.assign(static_cast<std::size_t>(std::max(t, 0)), 0);
  return p;
}

std::string format_params(const FamilyParams& p) {
  std::ostringstream out;
  out << "family=" << family_name(p.family) << '\n';
  if (p.family == Family::C1N || p.family == Family::C2N) {
    out << "t=" << p.k_sizes.size() << '\n';
    out << "k_sizes=" << join(p.k_sizes) << '\n';
    out << "u_sizes=";
    for (std::size_t i = 0; i < p.u_sizes.size(); ++i) out << (i ? ";" : "") << p.u_sizes[i] << ',' << p.u_sizes[i];
    out << '\n';
  } else {
    out << "k=" << p.k << '\n';
    if (p.kprime > 0) out << "kprime=" << p.kprime << '\n';
    for (const ComponentRecipe& c : p.components) {
      out << "component=" << kind_word(c.kind) << ' ' << (c.host == ComponentRecipe::Host::K ? "K" : "Kprime");
      if (!c.sizes.empty()) out << " sizes=" << join(c.sizes);
      if (!c.junctions.empty()) out << " junctions=" << join(c.junctions);
      out << '\n';
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Generation

namespace {

[[noreturn]] void violate(const std::string& clause, const std::string& what) {
  throw ParameterError(clause + ": " + what);
}

// Clique-chain sizes (C1N). The first clique may be a host clique.
void validate_chain(const std::vector<int>& sizes, const std::vector<int>& junctions, const std::string& label) {
  const std::size_t t = sizes.size();
  if (t < 1) violate(label + " clause (i)", "requires t >= 1");
  if (junctions.size() != t - 1)
    violate(label + " clause (iii)", "needs " + std::to_string(t - 1) + " junction sizes, got " + std::to_string(junctions.size()));
  for (std::size_t i = 0; i < t; ++i) {
    const bool end = i == 0 || i + 1 == t;
    if (sizes[i] < (end ? 2 : 4))
      violate(label + " clause (i)", "clique " + std::to_string(i + 1) + " needs at least " + (end ? "2" : "4") + " vertices");
  }
  for (std::size_t i = 0; i + 1 < t; ++i)
    if (junctions[i] < 2) violate(label + " clause (ii)", "U sets need at least 2 vertices");
  for (std::size_t i = 0; i < t; ++i) {
    const int need = (i > 0 ? junctions[i - 1] : 0) + (i + 1 < t ? junctions[i] : 0);
    if (sizes[i] < need)
      violate(label + " clause (iii)", "clique " + std::to_string(i + 1) + " cannot hold disjoint U sets of total size " +
                                           std::to_string(need));
  }
}

// Clique-cycle sizes (C2N); junction i joins clique i and i+1 mod t.
void validate_cycle(const std::vector<int>& sizes, const std::vector<int>& junctions, const std::string& label) {
  const std::size_t t = sizes.size();
  if (t < 3) violate(label + " clause (i)", "requires t >= 3");
  if (junctions.size() != t)
    violate(label + " clause (ii)", "needs " + std::to_string(t) + " junction sizes, got " + std::to_string(junctions.size()));
  for (std::size_t i = 0; i < t; ++i)
    if (sizes[i] < 2) violate(label + " clause (i)", "clique " + std::to_string(i + 1) + " needs at least 2 vertices");
  for (int j : junctions)
    if (j < 1) violate(label + " clause (ii)", "U sets must be nonempty");
  for (std::size_t i = 0; i < t; ++i) {
    const int need = junctions[(i + t - 1) % t] + junctions[i];
    if (sizes[i] < need)
      violate(label + " clause (ii)", "clique " + std::to_string(i + 1) + " cannot hold disjoint U sets of total size " +
                                          std::to_string(need));
  }
  if (t == 3 && std::none_of(junctions.begin(), junctions.end(), [](int j) { return j >= 2; }))
    violate(label + " clause (ii)", "t = 3 needs some U set with at least 2 vertices");
}

class Builder {
 public:
  int slot() {
    parent_.push_back(static_cast<int>(parent_.size()));
    return parent_.back();
  }
  std::vector<int> slots(int count) {
    std::vector<int> out;
    for (int i = 0; i < count; ++i) out.push_back(slot());
    return out;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }
  void edge(int a, int b) { edges_.emplace_back(a, b); }
  void clique(const std::vector<int>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) edge(s[i], s[j]);
  }

  Graph build() {
    std::vector<int> label(parent_.size(), -1);
    int next = 0;
    for (std::size_t s = 0; s < parent_.size(); ++s) {
      const int root = find(static_cast<int>(s));
      if (label[root] == -1) label[root] = next++;
    }
    std::vector<Edge> out;
    for (const auto& [a, b] : edges_) {
      const Vertex u = label[find(a)];
      const Vertex v = label[find(b)];
      if (u != v) out.push_back(Edge::of(u, v));
    }
    return Graph::from_edges(next, out);
  }

 private:
  int find(int a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }

  std::vector<int> parent_;
  std::vector<std::pair<int, int>> edges_;
};

// Seed 0 keeps slot order, so every attachment uses the lowest free labels.
struct Chooser {
  std::mt19937_64 engine;
  bool identity;
};

// Portable Fisher-Yates so that a seed means the same graph everywhere.
void shuffle(std::vector<int>& v, Chooser& rng) {
  if (rng.identity) return;
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.engine() % i]);
}

// Attachment pool of one clique: slots not yet used by a U set.
struct Pool {
  std::vector<int> free;
  std::string owner;

  std::vector<int> take(int count, const std::string& clause) {
    if (static_cast<int>(free.size()) < count)
      violate(clause, owner + " has too few free vertices for the requested attachments");
    std::vector<int> out(free.begin(), free.begin() + count);
    free.erase(free.begin(), free.begin() + count);
    return out;
  }

  std::vector<int> take_back(int count, const std::string& clause) {
    if (static_cast<int>(free.size()) < count)
      violate(clause, owner + " has too few free vertices for the requested attachments");
    std::vector<int> out(free.end() - count, free.end());
    free.erase(free.end() - count, free.end());
    return out;
  }
};

Pool make_pool(const std::vector<int>& slots, Chooser& rng, std::string owner) {
  Pool p{slots, std::move(owner)};
  shuffle(p.free, rng);
  return p;
}

void join(Builder& b, Pool& left, Pool& right, int size, const std::string& clause) {
  // Leave by the last free slot and enter by the first, so seed 0 chains
  // cliques along consecutive labels.
  const std::vector<int> u = left.take_back(size, clause);
  const std::vector<int> w = right.take(size, clause);
  if (size == 1) {
    b.unite(u[0], w[0]);
  } else {
    for (int i = 0; i < size; ++i) b.edge(u[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(i)]);
  }
}

// Fresh cliques chained from `host` (if any) through `junctions`; returns the
// pool of the last clique.
Pool build_chain(Builder& b, Pool* host, const std::vector<int>& sizes, const std::vector<int>& junctions,
                 Chooser& rng, const std::string& clause) {
  Pool* prev = host;
  Pool current;
  std::vector<Pool> made;
  made.reserve(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const std::vector<int> s = b.slots(sizes[i]);
    b.clique(s);
    made.push_back(make_pool(s, rng, "clique"));
    if (prev != nullptr) join(b, *prev, made.back(), junctions[host ? i : i - 1], clause);
    prev = &made.back();
  }
  return made.back();
}

Graph generate_chain(const FamilyParams& p, Chooser& rng) {
  validate_chain(p.k_sizes, p.u_sizes, "C1N");
  Builder b;
  build_chain(b, nullptr, p.k_sizes, p.u_sizes, rng, "C1N clause (iii)");
  return b.build();
}

Graph generate_cycle(const FamilyParams& p, Chooser& rng) {
  validate_cycle(p.k_sizes, p.u_sizes, "C2N");
  Builder b;
  std::vector<Pool> pools;
  pools.reserve(p.k_sizes.size());
  for (int size : p.k_sizes) {
    const std::vector<int> s = b.slots(size);
    b.clique(s);
    pools.push_back(make_pool(s, rng, "clique"));
  }
  const std::size_t t = pools.size();
  for (std::size_t i = 0; i < t; ++i) join(b, pools[i], pools[(i + 1) % t], p.u_sizes[i], "C2N clause (ii)");
  return b.build();
}

void attach_q(Builder& b, Pool& host, const std::string& clause) {
  const std::vector<int> picks = host.take(3, clause);
  const int a1 = picks[0], c2 = picks[1], c3 = picks[2];
  const std::vector<int> path = b.slots(4);  // b2 a2 a3 b3
  b.edge(path[0], path[1]);
  b.edge(path[1], path[2]);
  b.edge(path[2], path[3]);
  b.edge(c2, path[0]);
  b.edge(a1, path[1]);
  b.edge(a1, path[2]);
  b.edge(c3, path[3]);
}

void validate_component(const FamilyParams& p, const ComponentRecipe& c, std::size_t index) {
  const std::string fam(family_name(p.family));
  const std::string where = fam + " clause (" + (p.kprime > 0 ? "iii" : "ii") + ")";
  const std::string label = where + ", component " + std::to_string(index + 1);
  const bool two_cliques = p.family == Family::C2NP || p.family == Family::C2NPQ;
  const bool q_allowed = p.family == Family::C1NPQ || p.family == Family::C2NPQ;
  const int host_size = c.host == ComponentRecipe::Host::K ? p.k : p.kprime;
  if (c.host == ComponentRecipe::Host::KPrime && !two_cliques) violate(label, "no K' in this family");
  switch (c.kind) {
    case ComponentRecipe::Kind::Chain: {
      std::vector<int> sizes{host_size};
      sizes.insert(sizes.end(), c.sizes.begin(), c.sizes.end());
      if (c.sizes.empty()) violate(label, "a chain needs at least one clique");
      validate_chain(sizes, c.junctions, label + " as C1N");
      break;
    }
    case ComponentRecipe::Kind::Cycle: {
      if (c.host != ComponentRecipe::Host::K) violate(label, "cycles attach to K only");
      std::vector<int> sizes{host_size};
      sizes.insert(sizes.end(), c.sizes.begin(), c.sizes.end());
      validate_cycle(sizes, c.junctions, label + " as C2N");
      break;
    }
    case ComponentRecipe::Kind::Bridge: {
      if (!two_cliques) violate(label, "bridges need K'");
      if (c.sizes.empty()) violate(label, "a bridge needs at least one clique");
      std::vector<int> sizes{p.k};
      sizes.insert(sizes.end(), c.sizes.begin(), c.sizes.end());
      sizes.push_back(p.kprime);
      std::vector<int> junctions = c.junctions;
      junctions.push_back(1);  // K and K' share u0
      validate_cycle(sizes, junctions, label + " as C2N");
      break;
    }
    case ComponentRecipe::Kind::Q:
      if (!q_allowed) violate(label, "C3NQ components are not allowed in " + fam);
      if (c.host != ComponentRecipe::Host::K) violate(label, "C3NQ components attach to K only");
      if (p.k < 4) violate("C3NQ clause (i)", "requires |K| >= 4");
      break;
  }
}

void validate_composite_counts(const FamilyParams& p) {
  const std::string fam(family_name(p.family));
  int chains_k = 0, cycles = 0, qs = 0, chains_kp = 0, bridges = 0;
  for (const ComponentRecipe& c : p.components) {
    switch (c.kind) {
      case ComponentRecipe::Kind::Chain: (c.host == ComponentRecipe::Host::K ? chains_k : chains_kp)++; break;
      case ComponentRecipe::Kind::Cycle: ++cycles; break;
      case ComponentRecipe::Kind::Q: ++qs; break;
      case ComponentRecipe::Kind::Bridge: ++bridges; break;
    }
  }
  const int total = chains_k + cycles + qs + chains_kp + bridges;
  switch (p.family) {
    case Family::C1NP:
      if (p.kprime != 0) violate("C1NP", "has no K'");
      if (total < 2) violate("C1NP clause (ii)", "G-K needs at least two components");
      if (total == 2 && cycles == 0) violate("C1NP clause (ii)", "with exactly two components one must be of type (b)");
      break;
    case Family::C2NP:
      if (p.kprime < 2) violate("C2NP clause (ii)", "K' needs at least 2 vertices");
      if (bridges < 1) violate("C2NP clause (iii)", "needs a component of type (d)");
      if (chains_kp + bridges != 2) violate("C2NP clause (iii)", "needs exactly two components of type (c) or (d)");
      break;
    case Family::C1NPQ:
      if (p.kprime != 0) violate("C1NPQ", "has no K'");
      if (qs < 1) violate("C1NPQ clause (ii)", "needs a component of type (c)");
      break;
    case Family::C2NPQ:
      if (p.kprime < 2) violate("C2NPQ clause (ii)", "K' needs at least 2 vertices");
      if (qs < 1) violate("C2NPQ clause (iii)", "needs a component of type (c)");
      if (bridges < 1) violate("C2NPQ clause (iii)", "needs a component of type (e)");
      if (chains_kp + bridges != 2) violate("C2NPQ clause (iii)", "needs exactly two components of type (d) or (e)");
      break;
    default: break;
  }
}

Graph generate_composite(const FamilyParams& p, Chooser& rng) {
  const std::string fam(family_name(p.family));
  const bool two_cliques = p.family == Family::C2NP || p.family == Family::C2NPQ;
  if (p.k < 2) violate(fam + " clause (i)", "K needs at least 2 vertices");
  for (std::size_t i = 0; i < p.components.size(); ++i) validate_component(p, p.components[i], i);
  validate_composite_counts(p);

  Builder b;
  const std::vector<int> k_slots = b.slots(p.k);
  b.clique(k_slots);
  std::vector<int> kp_slots;
  if (two_cliques) {
    kp_slots.push_back(k_slots[0]);  // u0
    const std::vector<int> rest = b.slots(p.kprime - 1);
    kp_slots.insert(kp_slots.end(), rest.begin(), rest.end());
    b.clique(kp_slots);
  }
  // u0 never serves as an attachment vertex.
  Pool k_pool = make_pool(two_cliques ? std::vector<int>(k_slots.begin() + 1, k_slots.end()) : k_slots, rng, "K");
  Pool kp_pool = make_pool(two_cliques ? std::vector<int>(kp_slots.begin() + 1, kp_slots.end()) : std::vector<int>{}, rng, "K'");

  for (std::size_t i = 0; i < p.components.size(); ++i) {
    const ComponentRecipe& c = p.components[i];
    const std::string clause = fam + " clause (" + (two_cliques ? "iii" : "ii") + "), component " + std::to_string(i + 1);
    Pool& host = c.host == ComponentRecipe::Host::K ? k_pool : kp_pool;
    switch (c.kind) {
      case ComponentRecipe::Kind::Chain:
        build_chain(b, &host, c.sizes, c.junctions, rng, clause);
        break;
      case ComponentRecipe::Kind::Cycle: {
        Pool last = build_chain(b, &host, c.sizes, c.junctions, rng, clause);
        join(b, last, host, c.junctions.back(), clause);
        break;
      }
      case ComponentRecipe::Kind::Bridge: {
        Pool last = build_chain(b, &k_pool, c.sizes, c.junctions, rng, clause);
        join(b, last, kp_pool, c.junctions.back(), clause);
        break;
      }
      case ComponentRecipe::Kind::Q:
        attach_q(b, host, clause);
        break;
    }
  }
  const Graph g = b.build();

  VertexSet k(g.order());
  for (Vertex v = 0; v < p.k; ++v) k.set(v);
  VertexSet kp(g.order());
  if (two_cliques) {
    kp.set(0);
    for (Vertex v = p.k; v < p.k + p.kprime - 1; ++v) kp.set(v);
  }
  std::string reason;
  std::optional<FamilyCertificate> cert;
  switch (p.family) {
    case Family::C1NP: cert = check_c1np(g, k, reason); break;
    case Family::C2NP: cert = check_c2np(g, k, kp, reason); break;
    case Family::C1NPQ: cert = check_c1npq(g, k, reason); break;
    case Family::C2NPQ: cert = check_c2npq(g, k, kp, reason); break;
    default: break;
  }
  if (!cert) throw ParameterError(reason);
  return g;
}

}  // namespace

Graph generate(const FamilyParams& params, std::uint64_t seed) {
  Chooser rng{std::mt19937_64(seed), seed == 0};
  switch (params.family) {
    case Family::C1N: return generate_chain(params, rng);
    case Family::C2N: return generate_cycle(params, rng);
    case Family::C3NQ: {
      if (params.k < 4) violate("C3NQ clause (i)", "requires |K| >= 4");
      Builder b;
      const std::vector<int> k = b.slots(params.k);
      b.clique(k);
      Pool pool = make_pool(k, rng, "K");
      attach_q(b, pool, "C3NQ clause (ii)");
      return b.build();
    }
    default: return generate_composite(params, rng);
  }
}

// ---------------------------------------------------------------------------
// Chain / cycle recognition

namespace {

class ChainMatcher {
 public:
  ChainMatcher(const Graph& g, const VertexSet& within, bool cycle) : g_(g), within_(within), cycle_(cycle) {}

  std::optional<ChainCertificate> run() {
    const int n = g_.order();
    if (within_.count() < 2 || !is_connected(g_, within_)) return std::nullopt;
    part_count_.assign(static_cast<std::size_t>(n), 0);
    link_count_.assign(static_cast<std::size_t>(n), 0);
    last_free_.assign(static_cast<std::size_t>(n), -1);

    for (const VertexSet& c : maximal_cliques(g_, within_)) {
      if (c.count() < 3) continue;
      big_.push_back(c);
      for (Vertex v : c)
        if (++part_count_[v] > 2) return std::nullopt;
    }
    for (Vertex u : within_)
      for (Vertex v : g_.neighbors(u) & within_) {
        if (v <= u) continue;
        const bool covered = std::any_of(big_.begin(), big_.end(), [&](const VertexSet& c) { return c.test(u) && c.test(v); });
        if (!covered) {
          last_free_[u] = last_free_[v] = static_cast<int>(free_.size());
          free_.push_back({u, v});
        }
      }
    for (Vertex v : within_)
      if (last_free_[v] == -1 && !vertex_ok(v)) return std::nullopt;
    as_part_.assign(free_.size(), false);
    if (search(0)) return result_;
    return std::nullopt;
  }

 private:
  bool vertex_ok(Vertex v) const {
    return part_count_[v] >= 1 && part_count_[v] <= 2 && link_count_[v] <= 1 && !(part_count_[v] == 2 && link_count_[v] > 0);
  }

  bool settled_ok(std::size_t i) const {
    const Edge e = free_[i];
    for (Vertex v : {e.u, e.v})
      if (last_free_[v] == static_cast<int>(i) && !vertex_ok(v)) return false;
    return true;
  }

  bool search(std::size_t i) {
    if (i == free_.size()) return finish();
    const Edge e = free_[i];
    // Part first: it keeps cliques whole, which is the common case.
    if (part_count_[e.u] < 2 && part_count_[e.v] < 2 && link_count_[e.u] + part_count_[e.u] < 2 &&
        link_count_[e.v] + part_count_[e.v] < 2) {
      ++part_count_[e.u];
      ++part_count_[e.v];
      as_part_[i] = true;
      if (settled_ok(i) && search(i + 1)) return true;
      as_part_[i] = false;
      --part_count_[e.u];
      --part_count_[e.v];
    }
    if (link_count_[e.u] == 0 && link_count_[e.v] == 0 && part_count_[e.u] < 2 && part_count_[e.v] < 2) {
      ++link_count_[e.u];
      ++link_count_[e.v];
      if (settled_ok(i) && search(i + 1)) return true;
      --link_count_[e.u];
      --link_count_[e.v];
    }
    return false;
  }

  bool finish() {
    const int n = g_.order();
    std::vector<VertexSet> parts = big_;
    std::vector<Edge> links;
    for (std::size_t i = 0; i < free_.size(); ++i) {
      if (as_part_[i])
        parts.push_back(VertexSet::of(n, {free_[i].u, free_[i].v}));
      else
        links.push_back(free_[i]);
    }
    std::sort(parts.begin(), parts.end(), [](const VertexSet& a, const VertexSet& b) { return lex_compare(a, b) < 0; });
    const std::size_t t = parts.size();

    std::vector<int> part_of(static_cast<std::size_t>(n), -1);
    for (std::size_t p = 0; p < t; ++p)
      for (Vertex v : parts[p])
        if (part_count_[v] == 1) part_of[v] = static_cast<int>(p);

    // Junction table keyed by unordered part pair.
    std::map<std::pair<int, int>, std::pair<Vertex, std::vector<Edge>>> junction;
    for (std::size_t p = 0; p < t; ++p)
      for (std::size_t q = p + 1; q < t; ++q) {
        const VertexSet common = parts[p] & parts[q];
        if (common.count() > 1) return false;
        if (common.any()) junction[{static_cast<int>(p), static_cast<int>(q)}] = {common.first(), {}};
      }
    for (const Edge& e : links) {
      int p = part_of[e.u];
      int q = part_of[e.v];
      if (p == q) return false;
      if (p > q) std::swap(p, q);
      auto [it, fresh] = junction.try_emplace({p, q}, Vertex{-1}, std::vector<Edge>{});
      if (it->second.first != -1) return false;
      it->second.second.push_back(e);
    }
    for (const auto& [key, j] : junction) {
      if (j.first == -1 && j.second.size() < 2) return false;
      if (j.first != -1 && !cycle_) return false;
    }

    std::vector<std::vector<int>> adj(t);
    for (const auto& [key, j] : junction) {
      adj[static_cast<std::size_t>(key.first)].push_back(key.second);
      adj[static_cast<std::size_t>(key.second)].push_back(key.first);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());

    std::vector<int> order;
    if (!cycle_) {
      if (t == 1) {
        if (!g_.is_clique(within_)) return false;
      } else {
        int ends = 0;
        for (const auto& a : adj) {
          if (a.empty() || a.size() > 2) return false;
          ends += a.size() == 1 ? 1 : 0;
        }
        if (ends != 2 || junction.size() != t - 1) return false;
      }
      int start = 0;
      while (t > 1 && adj[static_cast<std::size_t>(start)].size() != 1) ++start;
      order.push_back(start);
    } else {
      if (t < 3 || junction.size() != t) return false;
      for (const auto& a : adj)
        if (a.size() != 2) return false;
      if (t == 3 && std::all_of(junction.begin(), junction.end(), [](const auto& kv) { return kv.second.first != -1; }))
        return false;
      order.push_back(0);
    }
    // Walk the path or cycle, preferring the smaller neighbor first.
    while (order.size() < t) {
      const int cur = order.back();
      int next = -1;
      for (int nb : adj[static_cast<std::size_t>(cur)])
        if (std::find(order.begin(), order.end(), nb) == order.end()) {
          next = nb;
          break;
        }
      if (next == -1) return false;
      order.push_back(next);
    }

    ChainCertificate cert;
    cert.cycle = cycle_;
    for (int p : order) cert.parts.push_back(parts[static_cast<std::size_t>(p)]);
    const std::size_t junctions = cycle_ ? t : t - 1;
    for (std::size_t i = 0; i < junctions; ++i) {
      int p = order[i];
      int q = order[(i + 1) % t];
      if (p > q) std::swap(p, q);
      const auto& j = junction.at({p, q});
      cert.shared.push_back(j.first);
      std::vector<Edge> l = j.second;
      std::sort(l.begin(), l.end());
      cert.links.push_back(std::move(l));
    }
    result_ = std::move(cert);
    return true;
  }

  const Graph& g_;
  VertexSet within_;
  bool cycle_;
  std::vector<VertexSet> big_;
  std::vector<Edge> free_;
  std::vector<bool> as_part_;
  std::vector<int> part_count_;
  std::vector<int> link_count_;
  std::vector<int> last_free_;
  ChainCertificate result_;
};

}  // namespace

std::optional<ChainCertificate> match_chain(const Graph& g, const VertexSet& within, bool cycle) {
  return ChainMatcher(g, within, cycle).run();
}

std::optional<QCertificate> match_q(const Graph& g, const VertexSet& within) {
  const int m = within.count();
  if (m < 8) return std::nullopt;
  for (const VertexSet& k : maximal_cliques(g, within)) {
    if (k.count() != m - 4) continue;
    const VertexSet rest = within - k;
    const std::vector<Vertex> r = rest.to_vector();
    // rest must induce a path b2 a2 a3 b3
    std::vector<Vertex> ends, mids;
    int inner_edges = 0;
    for (Vertex v : r) {
      const int d = (g.neighbors(v) & rest).count();
      inner_edges += d;
      if (d == 1) ends.push_back(v);
      else if (d == 2) mids.push_back(v);
    }
    if (inner_edges != 6 || ends.size() != 2 || mids.size() != 2 || !g.adjacent(mids[0], mids[1])) continue;
    QCertificate q;
    q.k = k;
    q.b2 = ends[0];
    q.b3 = ends[1];
    q.a2 = g.adjacent(q.b2, mids[0]) ? mids[0] : mids[1];
    q.a3 = q.a2 == mids[0] ? mids[1] : mids[0];
    if (!g.adjacent(q.a3, q.b3)) continue;
    const VertexSet na2 = g.neighbors(q.a2) & k;
    const VertexSet na3 = g.neighbors(q.a3) & k;
    const VertexSet nb2 = g.neighbors(q.b2) & k;
    const VertexSet nb3 = g.neighbors(q.b3) & k;
    if (na2.count() != 1 || na2 != na3 || nb2.count() != 1 || nb3.count() != 1) continue;
    q.a1 = na2.first();
    q.c2 = nb2.first();
    q.c3 = nb3.first();
    if (q.a1 == q.c2 || q.a1 == q.c3 || q.c2 == q.c3) continue;
    return q;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Composite families

namespace {

bool maximal_clique_in(const Graph& g, const VertexSet& k) {
  if (!g.is_clique(k)) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!k.test(v) && k.is_subset_of(g.neighbors(v))) return false;
  return true;
}

VertexSet outside_neighbors(const Graph& g, Vertex u, const VertexSet& clique) { return g.neighbors(u) - clique; }

// Vertices of `clique` with a neighbor outside it.
VertexSet clique_frontier(const Graph& g, const VertexSet& clique) {
  VertexSet f(g.order());
  for (Vertex u : clique)
    if (outside_neighbors(g, u, clique).any()) f.set(u);
  return f;
}

bool independent_triple(const Graph& g, Vertex a, Vertex b, Vertex c) {
  return a != b && a != c && b != c && !g.adjacent(a, b) && !g.adjacent(a, c) && !g.adjacent(b, c);
}

// For the three anchors with their outside-neighbor sets: whenever some choice
// of distinct pairwise nonadjacent neighbors exists, the anchors must contain
// an a-heavy pair. Returns the offending neighbor triple when violated.
std::optional<std::array<Vertex, 3>> independence_violation(const Graph& g, const std::array<Vertex, 3>& anchors,
                                                             const std::array<VertexSet, 3>& outs) {
  if (is_a_heavy_pair(g, anchors[0], anchors[1]) || is_a_heavy_pair(g, anchors[0], anchors[2]) ||
      is_a_heavy_pair(g, anchors[1], anchors[2]))
    return std::nullopt;
  for (Vertex v0 : outs[0])
    for (Vertex v1 : outs[1])
      for (Vertex v2 : outs[2])
        if (independent_triple(g, v0, v1, v2)) return std::array<Vertex, 3>{v0, v1, v2};
  return std::nullopt;
}

std::string triple_text(const std::array<Vertex, 3>& t) {
  return "{" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + "}";
}

// Clause about "frontier vertices other than u0 of `clique`" with neighbors
// outside `clique`.
bool check_pair_condition(const Graph& g, const VertexSet& clique, Vertex u0, const std::string& clause,
                          std::string& reason) {
  VertexSet f = clique_frontier(g, clique);
  f.reset(u0);
  const VertexSet out0 = outside_neighbors(g, u0, clique);
  for (Vertex u1 : f)
    for (Vertex u2 = f.next(u1); u2 != -1; u2 = f.next(u2)) {
      const auto bad = independence_violation(g, {u0, u1, u2},
                                              {out0, outside_neighbors(g, u1, clique), outside_neighbors(g, u2, clique)});
      if (bad) {
        reason = clause + ": frontier vertices " + triple_text({u0, u1, u2}) + " have independent neighbors " +
                 triple_text(*bad) + " but no a-heavy pair";
        return false;
      }
    }
  return true;
}

std::optional<VertexSet> single_common(const VertexSet& a, const VertexSet& b) {
  const VertexSet c = a & b;
  if (c.count() != 1) return std::nullopt;
  return c;
}

}  // namespace

std::optional<FamilyCertificate> check_c1np(const Graph& g, const VertexSet& k, std::string& reason) {
  if (!maximal_clique_in(g, k)) {
    reason = "C1NP clause (i): K is not a maximal clique";
    return std::nullopt;
  }
  if (!heavy_vertices(g).is_subset_of(k)) {
    reason = "C1NP clause (i): K does not contain every heavy vertex";
    return std::nullopt;
  }
  FamilyCertificate cert;
  cert.family = Family::C1NP;
  cert.k = k;
  cert.kprime = VertexSet(g.order());
  bool any_b = false;
  for (const VertexSet& h : components(g, ~k)) {
    ComponentWitness w;
    w.vertices = h;
    const VertexSet host = h | k;
    auto a = match_chain(g, host, false);
    auto b = match_chain(g, host, true);
    if (a) w.types += 'a';
    if (b) w.types += 'b';
    if (!a && !b) {
      reason = "C1NP clause (ii): component " + to_string(h) + " is neither (a) nor (b)";
      return std::nullopt;
    }
    any_b = any_b || b.has_value();
    w.chain = a ? a : b;
    cert.components.push_back(std::move(w));
  }
  if (cert.components.size() < 2) {
    reason = "C1NP clause (ii): G-K needs at least two components";
    return std::nullopt;
  }
  if (cert.components.size() == 2 && !any_b) {
    reason = "C1NP clause (ii): with exactly two components one must satisfy (b)";
    return std::nullopt;
  }
  const VertexSet f = clique_frontier(g, k);
  for (Vertex u1 : f)
    for (Vertex u2 = f.next(u1); u2 != -1; u2 = f.next(u2))
      for (Vertex u3 = f.next(u2); u3 != -1; u3 = f.next(u3)) {
        const auto bad = independence_violation(
            g, {u1, u2, u3}, {outside_neighbors(g, u1, k), outside_neighbors(g, u2, k), outside_neighbors(g, u3, k)});
        if (bad) {
          reason = "C1NP clause (iii): frontier vertices " + triple_text({u1, u2, u3}) + " have independent neighbors " +
                   triple_text(*bad) + " but no a-heavy pair";
          return std::nullopt;
        }
      }
  return cert;
}

namespace {

// Shared by C2NP and C2NPQ: K, K' and component typing. `q_types` enables
// the C3NQ type and shifts the letters as in the larger family.
std::optional<FamilyCertificate> check_two_cliques(const Graph& g, const VertexSet& k, const VertexSet& kp, Family fam,
                                                   std::string& reason) {
  const std::string name(family_name(fam));
  const bool pq = fam == Family::C2NPQ;
  if (pq) {
    if (!g.is_clique(k) || 2 * k.count() < g.order()) {
      reason = name + " clause (i): K is not a clique with 2|K| >= n";
      return std::nullopt;
    }
  } else {
    if (!maximal_clique_in(g, k)) {
      reason = name + " clause (i): K is not a maximal clique";
      return std::nullopt;
    }
    if (!heavy_vertices(g).is_subset_of(k)) {
      reason = name + " clause (i): K does not contain every heavy vertex";
      return std::nullopt;
    }
  }
  const auto common = single_common(k, kp);
  if (!maximal_clique_in(g, kp) || !common) {
    reason = name + " clause (ii): K' is not a maximal clique meeting K in one vertex";
    return std::nullopt;
  }
  const Vertex u0 = common->first();
  FamilyCertificate cert;
  cert.family = fam;
  cert.k = k;
  cert.kprime = kp;
  cert.u0 = u0;

  // Letters: C2NP uses a,b,c,d; C2NPQ uses a,b,c(q),d,e.
  const char on_kprime = pq ? 'd' : 'c';
  const char bridge = pq ? 'e' : 'd';
  int bridges = 0, kprime_side = 0, qs = 0;
  for (const VertexSet& h : components(g, ~(k | kp))) {
    ComponentWitness w;
    w.vertices = h;
    const VertexSet nh = neighborhood(g, h);
    if (nh.is_subset_of(k)) {
      if (auto a = match_chain(g, h | k, false)) {
        w.types += 'a';
        if (!w.chain) w.chain = a;
      }
      if (auto b = match_chain(g, h | k, true)) {
        w.types += 'b';
        if (!w.chain) w.chain = b;
      }
      if (pq) {
        if (auto q = match_q(g, h | k)) {
          w.types += 'c';
          if (!w.chain) w.q = q;
        }
      }
    }
    if (nh.is_subset_of(kp)) {
      if (auto c = match_chain(g, h | kp, false)) {
        w.types += on_kprime;
        if (!w.chain && !w.q) w.chain = c;
      }
    }
    if (nh.intersects(k) && nh.intersects(kp)) {
      if (auto d = match_chain(g, h | k | kp, true)) {
        w.types += bridge;
        if (!w.chain && !w.q) w.chain = d;
      }
    }
    if (w.types.empty()) {
      reason = name + " clause (iii): component " + to_string(h) + " satisfies no type";
      return std::nullopt;
    }
    const bool is_bridge = w.types.find(bridge) != std::string::npos;
    const bool is_kside = w.types.find(on_kprime) != std::string::npos;
    bridges += is_bridge ? 1 : 0;
    kprime_side += (is_bridge || is_kside) ? 1 : 0;
    qs += (pq && w.types.find('c') != std::string::npos) ? 1 : 0;
    cert.components.push_back(std::move(w));
  }
  if (pq && qs < 1) {
    reason = name + " clause (iii): needs a component of type (c)";
    return std::nullopt;
  }
  if (bridges < 1) {
    reason = name + " clause (iii): needs a component of type (" + bridge + ")";
    return std::nullopt;
  }
  if (kprime_side != 2) {
    reason = name + " clause (iii): needs exactly two components of type (" + on_kprime + ") or (" + bridge + "), found " +
             std::to_string(kprime_side);
    return std::nullopt;
  }
  if (!check_pair_condition(g, kp, u0, name + " clause (iv)", reason)) return std::nullopt;
  // Read with the neighbor triple as hypothesis; taken verbatim the clause
  // asks {u0,x1,x2} to be independent, which a clique never is.
  if (!pq && !check_pair_condition(g, k, u0, name + " clause (v)", reason)) return std::nullopt;
  return cert;
}

}  // namespace

std::optional<FamilyCertificate> check_c2np(const Graph& g, const VertexSet& k, const VertexSet& kprime,
                                            std::string& reason) {
  return check_two_cliques(g, k, kprime, Family::C2NP, reason);
}

std::optional<FamilyCertificate> check_c2npq(const Graph& g, const VertexSet& k, const VertexSet& kprime,
                                             std::string& reason) {
  return check_two_cliques(g, k, kprime, Family::C2NPQ, reason);
}

std::optional<FamilyCertificate> check_c1npq(const Graph& g, const VertexSet& k, std::string& reason) {
  if (!g.is_clique(k) || 2 * k.count() < g.order()) {
    reason = "C1NPQ clause (i): K is not a clique with 2|K| >= n";
    return std::nullopt;
  }
  FamilyCertificate cert;
  cert.family = Family::C1NPQ;
  cert.k = k;
  cert.kprime = VertexSet(g.order());
  int qs = 0;
  for (const VertexSet& h : components(g, ~k)) {
    ComponentWitness w;
    w.vertices = h;
    const VertexSet host = h | k;
    if (auto a = match_chain(g, host, false)) {
      w.types += 'a';
      w.chain = a;
    }
    if (auto b = match_chain(g, host, true)) {
      w.types += 'b';
      if (!w.chain) w.chain = b;
    }
    if (auto q = match_q(g, host)) {
      w.types += 'c';
      ++qs;
      if (!w.chain) w.q = q;
    }
    if (w.types.empty()) {
      reason = "C1NPQ clause (ii): component " + to_string(h) + " satisfies no type";
      return std::nullopt;
    }
    cert.components.push_back(std::move(w));
  }
  if (qs < 1) {
    reason = "C1NPQ clause (ii): needs a component of type (c)";
    return std::nullopt;
  }
  return cert;
}

std::optional<FamilyCertificate> recognize_family(const Graph& g, Family f) {
  std::string reason;
  switch (f) {
    case Family::C1N:
    case Family::C2N: {
      auto chain = match_chain(g, g.vertices(), f == Family::C2N);
      if (!chain) return std::nullopt;
      FamilyCertificate cert;
      cert.family = f;
      cert.chain = std::move(chain);
      return cert;
    }
    case Family::C3NQ: {
      auto q = match_q(g, g.vertices());
      if (!q) return std::nullopt;
      FamilyCertificate cert;
      cert.family = f;
      cert.q = std::move(q);
      return cert;
    }
    default: break;
  }
  const std::vector<VertexSet> cliques = maximal_cliques(g);
  const VertexSet heavy = heavy_vertices(g);
  const int n = g.order();
  for (const VertexSet& k : cliques) {
    const bool central = (f == Family::C1NP || f == Family::C2NP) ? heavy.is_subset_of(k) : 2 * k.count() >= n;
    if (!central) continue;
    if (f == Family::C1NP) {
      if (auto c = check_c1np(g, k, reason)) return c;
    } else if (f == Family::C1NPQ) {
      if (auto c = check_c1npq(g, k, reason)) return c;
    } else {
      for (const VertexSet& kp : cliques) {
        if ((k & kp).count() != 1) continue;
        auto c = f == Family::C2NP ? check_c2np(g, k, kp, reason) : check_c2npq(g, k, kp, reason);
        if (c) return c;
      }
    }
  }
  return std::nullopt;
}

FamilyWitness recognize(const Graph& g) {
  FamilyWitness w;
  w.order_threshold_met = g.order() >= 10;
  for (Family f : kAllFamilies)
    if (auto c = recognize_family(g, f)) w.matches.push_back(std::move(*c));
  return w;
}

bool FamilyWitness::contains(Family f) const { return find(f) != nullptr; }

const FamilyCertificate* FamilyWitness::find(Family f) const {
  for (const FamilyCertificate& c : matches)
    if (c.family == f) return &c;
  return nullptr;
}

namespace {

void add_clique(std::vector<Edge>& out, const VertexSet& s) {
  for (Vertex u : s)
    for (Vertex v = s.next(u); v != -1; v = s.next(v)) out.push_back({u, v});
}

void add_chain(std::vector<Edge>& out, const ChainCertificate& c) {
  for (const VertexSet& p : c.parts) add_clique(out, p);
  for (const auto& l : c.links) out.insert(out.end(), l.begin(), l.end());
}

void add_q(std::vector<Edge>& out, const QCertificate& q) {
  add_clique(out, q.k);
  for (auto [u, v] : {std::pair{q.b2, q.a2}, {q.a2, q.a3}, {q.a3, q.b3}, {q.c2, q.b2}, {q.a1, q.a2}, {q.a1, q.a3}, {q.c3, q.b3}})
    out.push_back(Edge::of(u, v));
}

}  // namespace

Graph replay(const FamilyCertificate& cert, int n) {
  std::vector<Edge> edges;
  if (cert.chain) add_chain(edges, *cert.chain);
  if (cert.q) add_q(edges, *cert.q);
  if (cert.k.universe() == n) add_clique(edges, cert.k);
  if (cert.kprime.universe() == n) add_clique(edges, cert.kprime);
  for (const ComponentWitness& w : cert.components) {
    if (w.chain) add_chain(edges, *w.chain);
    if (w.q) add_q(edges, *w.q);
  }
  return Graph::from_edges(n, edges);
}

std::string_view theorem_status_name(TheoremStatus s) {
  switch (s) {
    case TheoremStatus::Consistent: return "CONSISTENT";
    case TheoremStatus::OutOfRange: return "OUT-OF-RANGE";
    case TheoremStatus::CounterexampleCandidate: return "COUNTEREXAMPLE-CANDIDATE";
  }
  return "?";
}

TheoremVerdict classify_theorem(const Graph& g) {
  TheoremVerdict v;
  v.two_connected = is_2_connected(g);
  v.claw_free = is_claw_free(g);
  v.claw_o_heavy = is_claw_o_heavy(g);
  v.c_closed = v.claw_o_heavy && c_closure(g).graph == g;
  v.nets = net_profile(g);
  v.witness = recognize(g);
  const bool base = v.two_connected && v.c_closed && v.claw_free;
  v.hyp_p = base && v.nets.p_heavy;
  v.hyp_pq = base && v.nets.pq_heavy;
  const auto& w = v.witness;
  v.fam_p = w.contains(Family::C1N) || w.contains(Family::C2N) || w.contains(Family::C1NP) || w.contains(Family::C2NP);
  v.fam_pq = v.fam_p || w.contains(Family::C1NPQ) || w.contains(Family::C2NPQ);
  v.order_ok = g.order() >= 10;
  if (v.order_ok) {
    v.status = (v.hyp_p == v.fam_p && v.hyp_pq == v.fam_pq) ? TheoremStatus::Consistent
                                                              : TheoremStatus::CounterexampleCandidate;
  } else {
    v.status = (!v.hyp_pq && w.matches.empty()) ? TheoremStatus::Consistent : TheoremStatus::OutOfRange;
  }
  return v;
}

}  // namespace hamclosure
