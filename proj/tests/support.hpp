#pragma once

#include <string>
#include <vector>

#include "hamclosure/corpus.hpp"
#include "hamclosure/graph.hpp"
#include "hamclosure/graph_io.hpp"

namespace hamclosure::test {

inline Graph named(const std::string& name) { return curated(name); }

// Small mixed corpus shared by the property tests.
inline std::vector<Graph> small_corpus(std::uint64_t seed, int count, int n_min, int n_max) {
  std::vector<Graph> out;
  for (NamedGraph& g : curated_graphs()) out.push_back(std::move(g.graph));
  for (Graph& g : random_corpus(seed, count, n_min, n_max, 0.2, 0.9)) out.push_back(std::move(g));
  for (Graph& g : line_graph_corpus(seed + 1, count / 4, n_min, n_max)) out.push_back(std::move(g));
  for (Graph& g : dense_corpus(seed + 2, count / 4, n_min, n_max, 12)) out.push_back(std::move(g));
  return out;
}

inline std::string g6(const Graph& g) { return emit_graph6(g); }

}  // namespace hamclosure::test
