#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hamclosure/families.hpp"
#include "hamclosure/graph.hpp"

namespace hamclosure {

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// Small named graphs used throughout the tests: C4, C5, K2,3, K1,3, net,
/// bull, diamond, wounded, G8 and friends.
std::vector<NamedGraph> curated_graphs();
/// Throws InputError for an unknown name.
Graph curated(const std::string& name);

/// The minimal C3NQ member: K4 on a1=0, c2=1, c3=2, w=3 and the path
/// b2=4, a2=5, a3=6, b3=7.
Graph g8();

/// G(n, p) draws with n uniform in [n_min, n_max] and p uniform in
/// [p_min, p_max].
std::vector<Graph> random_corpus(std::uint64_t seed, int count, int n_min, int n_max, double p_min = 0.2,
                                 double p_max = 0.8);

/// Line graphs of random root graphs, so every member is claw-free.
/// Orders fall in [n_min, n_max].
std::vector<Graph> line_graph_corpus(std::uint64_t seed, int count, int n_min, int n_max);

/// Random bipartite graphs: sides split uniformly, each cross pair kept with
/// probability p drawn from [p_min, p_max]. Triangle-free by construction.
std::vector<Graph> bipartite_corpus(std::uint64_t seed, int count, int n_min, int n_max, double p_min, double p_max);

/// K_n minus at most `max_missing` random edges.
std::vector<Graph> dense_corpus(std::uint64_t seed, int count, int n_min, int n_max, int max_missing);

/// Parameter grid for one family; not every entry is valid for every seed.
std::vector<FamilyParams> family_grid(Family f);

/// Members of `f` from the grid and seeds 1..seeds, with order in
/// [n_min, n_max], deduplicated by labelled graph.
std::vector<NamedGraph> family_members(Family f, int seeds, int n_min, int n_max);

/// Every graph obtained by adding or removing one edge.
std::vector<Graph> one_edge_perturbations(const Graph& g);

}  // namespace hamclosure
