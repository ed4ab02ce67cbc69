// Serial reference vs OpenMP kernels on the same inputs.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include <omp.h>

#include "hamclosure/closures.hpp"
#include "hamclosure/corpus.hpp"
#include "hamclosure/ham_oracle.hpp"
#include "hamclosure/parallel.hpp"
#include "hamclosure/patterns.hpp"

using namespace hamclosure;

namespace {

double seconds(const std::function<void()>& fn, int reps) {
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() / reps;
}

void row(const std::string& name, double serial, double parallel, bool same) {
  std::printf("%-34s %10.4f %10.4f %7.2fx  %s\n", name.c_str(), serial, parallel, serial / parallel,
              same ? "same" : "DIFFERENT");
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-34s %10s %10s %8s\n", "kernel", "serial s", "openmp s", "speedup");

  for (int n : {40, 80}) {
    const Graph g = random_corpus(11, 1, n, n, 0.3, 0.3).front();
    for (PatternKind k : {PatternKind::Claw, PatternKind::P5, PatternKind::Net}) {
      std::vector<Embedding> a, b;
      const double s = seconds([&] { a = find_induced_serial(g, k); }, 3);
      const double p = seconds([&] { b = find_induced(g, k); }, 3);
      row("find_induced " + std::string(pattern_name(k)) + " n=" + std::to_string(n), s, p, a == b);
    }
  }

  std::vector<Graph> dense = dense_corpus(5, 200, 7, 9, 14);
  std::vector<Graph> heavy;
  for (Graph& g : dense)
    if (is_claw_o_heavy(g) && g.non_edges().size() >= 12) heavy.push_back(std::move(g));
  if (heavy.size() > 10) heavy.resize(10);
  {
    std::vector<Graph> a, b;
    const double s = seconds([&] {
      a.clear();
      for (const Graph& g : heavy) a.push_back(minimum_supergraph_oracle_serial(g, 14).minimum);
    }, 1);
    const double p = seconds([&] {
      b.clear();
      for (const Graph& g : heavy) b.push_back(minimum_supergraph_oracle(g, 14).minimum);
    }, 1);
    row("minimality oracle x" + std::to_string(heavy.size()), s, p, a == b);
  }

  const std::vector<Graph> corpus = line_graph_corpus(3, 2000, 8, 16);
  auto work = [](const Graph& g) {
    const Graph c = is_claw_o_heavy(g) ? c_closure(g).graph : o_closure(g).graph;
    return is_hamiltonian(c).hamiltonian();
  };
  std::vector<bool> a, b;
  const double s = seconds([&] { a = parallel_map(corpus, work, false); }, 1);
  const double p = seconds([&] { b = parallel_map(corpus, work, true); }, 1);
  row("corpus closure+ham x2000", s, p, a == b);
  return 0;
}
