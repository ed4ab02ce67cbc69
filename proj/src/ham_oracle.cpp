#include "hamclosure/ham_oracle.hpp"

#include <algorithm>

#include "hamclosure/closures.hpp"
#include "hamclosure/errors.hpp"

namespace hamclosure {

std::string_view ham_status_name(HamStatus s) {
  switch (s) {
    case HamStatus::Hamiltonian: return "hamiltonian";
    case HamStatus::NonHamiltonian: return "non-hamiltonian";
    case HamStatus::Undecided: return "undecided";
  }
  return "?";
}

bool is_hamiltonian_cycle(const Graph& g, std::span<const Vertex> cycle) {
  const int n = g.order();
  if (n < 3 || static_cast<int>(cycle.size()) != n) return false;
  VertexSet seen(n);
  for (Vertex v : cycle) {
    if (v < 0 || v >= n || seen.test(v)) return false;
    seen.set(v);
  }
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (!g.adjacent(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  return true;
}

namespace {

// Low-point DFS over g[within] with one extra edge a-b; true when that graph
// is connected and has no cut vertex.
class Biconnectivity {
 public:
  Biconnectivity(const Graph& g, const VertexSet& within, Vertex a, Vertex b)
      : g_(g), within_(within), a_(a), b_(b), disc_(static_cast<std::size_t>(g.order()), -1),
        low_(static_cast<std::size_t>(g.order()), 0) {}

  bool run() {
    const Vertex root = within_.first();
    if (root == -1) return true;
    int children = 0;
    disc_[root] = low_[root] = timer_++;
    for (Vertex w : neighbors(root)) {
      if (disc_[w] != -1) continue;
      ++children;
      if (!visit(w, root)) return false;
    }
    if (children > 1) return false;
    return timer_ == within_.count();
  }

 private:
  VertexSet neighbors(Vertex v) const {
    VertexSet s = g_.neighbors(v) & within_;
    if (v == a_ && within_.contains(b_)) s.set(b_);
    if (v == b_ && within_.contains(a_)) s.set(a_);
    return s;
  }

  bool visit(Vertex v, Vertex parent) {
    disc_[v] = low_[v] = timer_++;
    for (Vertex w : neighbors(v)) {
      if (w == parent) continue;
      if (disc_[w] != -1) {
        low_[v] = std::min(low_[v], disc_[w]);
        continue;
      }
      if (!visit(w, v)) return false;
      low_[v] = std::min(low_[v], low_[w]);
      if (low_[w] >= disc_[v]) return false;  // v separates w's subtree
    }
    return true;
  }

  const Graph& g_;
  const VertexSet& within_;
  Vertex a_, b_;
  std::vector<int> disc_, low_;
  int timer_ = 0;
};

class Search {
 public:
  Search(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget), unvisited_(VertexSet::full(g.order())) {}

  HamStatus run(std::vector<Vertex>& cycle, std::uint64_t& nodes) {
    unvisited_.reset(0);
    path_.push_back(0);
    const bool found = extend(0);
    nodes = nodes_;
    if (found) {
      cycle = path_;
      return HamStatus::Hamiltonian;
    }
    return out_of_budget_ ? HamStatus::Undecided : HamStatus::NonHamiltonian;
  }

 private:
  bool extend(Vertex cur) {
    if (++nodes_ > budget_) {
      out_of_budget_ = true;
      return false;
    }
    if (unvisited_.empty()) return g_.adjacent(cur, 0);

    // Each unvisited vertex still needs two cycle edges among the unvisited
    // vertices and the two path ends.
    VertexSet open = unvisited_;
    open.set(cur);
    open.set(0);
    Vertex forced = -1;
    for (Vertex w : unvisited_) {
      const VertexSet avail = g_.neighbors(w) & open;
      const int deg = avail.count();
      if (deg < 2) return false;
      if (deg == 2 && avail.test(cur) && !(avail.test(0) && unvisited_.count() > 1)) {
        if (forced != -1 && forced != w) return false;
        forced = w;
      }
    }
    // The unvisited part must hang together through the current end.
    VertexSet reach(g_.order());
    VertexSet frontier = g_.neighbors(cur) & unvisited_;
    reach |= frontier;
    while (frontier.any()) {
      VertexSet next(g_.order());
      for (Vertex v : frontier) next |= g_.neighbors(v);
      next &= unvisited_;
      next -= reach;
      reach |= next;
      frontier = std::move(next);
    }
    if (reach != unvisited_) return false;
    if (!(g_.neighbors(0) & unvisited_).any()) return false;
    // The rest of the cycle is a cur-0 path through every unvisited vertex,
    // so the remainder closed up by a virtual cur-0 edge has no cut vertex.
    if (cur != 0 && unvisited_.count() >= 2 && !Biconnectivity(g_, open, cur, 0).run()) return false;

    std::vector<Vertex> choices;
    if (forced != -1) {
      choices.push_back(forced);
    } else {
      choices = (g_.neighbors(cur) & unvisited_).to_vector();
      // Fewest onward options first.
      std::stable_sort(choices.begin(), choices.end(), [&](Vertex x, Vertex y) {
        return (g_.neighbors(x) & unvisited_).count() < (g_.neighbors(y) & unvisited_).count();
      });
    }
    for (Vertex w : choices) {
      unvisited_.reset(w);
      path_.push_back(w);
      if (extend(w)) return true;
      path_.pop_back();
      unvisited_.set(w);
      if (out_of_budget_) return false;
    }
    return false;
  }

  const Graph& g_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool out_of_budget_ = false;
  VertexSet unvisited_;
  std::vector<Vertex> path_;
};

}  // namespace

HamCertificate is_hamiltonian(const Graph& g, std::uint64_t node_budget) {
  HamCertificate cert;
  if (g.order() < 3) {
    cert.status = HamStatus::NonHamiltonian;
    cert.note = "fewer than 3 vertices";
    return cert;
  }
  if (!is_2_connected(g)) {
    cert.status = HamStatus::NonHamiltonian;
    cert.note = "not 2-connected";
    return cert;
  }
  Search search(g, node_budget);
  cert.status = search.run(cert.cycle, cert.nodes_explored);
  if (cert.status == HamStatus::Hamiltonian && !is_hamiltonian_cycle(g, cert.cycle))
    throw Error("internal: hamiltonian search returned an invalid cycle");
  if (cert.status == HamStatus::Undecided) cert.note = "node budget exhausted";
  return cert;
}

bool verify_closure_preservation(const Graph& g, ClosureKind kind, std::uint64_t node_budget) {
  Graph closed;
  switch (kind) {
    case ClosureKind::O: closed = o_closure(g).graph; break;
    case ClosureKind::R: closed = r_closure(g).graph; break;
    case ClosureKind::C: closed = c_closure(g).graph; break;
  }
  const HamCertificate before = is_hamiltonian(g, node_budget);
  const HamCertificate after = is_hamiltonian(closed, node_budget);
  if (!before.decided() || !after.decided()) throw BudgetExceeded("hamiltonicity search exceeded its node budget");
  return before.hamiltonian() == after.hamiltonian();
}

}  // namespace hamclosure
