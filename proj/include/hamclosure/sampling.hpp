#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "hamclosure/graph.hpp"

namespace hamclosure {

using GraphPredicate = std::function<bool(const Graph&)>;

/// Seeded G(n,p) draws filtered by a predicate.
///
/// The stream is a pure function of (n, p, seed, predicate): each call to
/// next() keeps drawing until the predicate accepts, and gives up with
/// SamplingExhausted after `max_attempts` consecutive rejections.
class GraphSampler {
 public:
  struct Stats {
    std::uint64_t attempts = 0;
    std::uint64_t yielded = 0;
    double yield_ratio() const { return attempts == 0 ? 0.0 : static_cast<double>(yielded) / static_cast<double>(attempts); }
  };

  GraphSampler(int n, double p, std::uint64_t seed, GraphPredicate predicate = {},
               std::uint64_t max_attempts = 100000);

  Graph next();
  /// Up to k graphs; stops early (without throwing) once the sampler is exhausted.
  std::vector<Graph> take(std::size_t k);

  const Stats& stats() const { return stats_; }

 private:
  Graph draw();

  int n_;
  double p_;
  GraphPredicate predicate_;
  std::uint64_t max_attempts_;
  std::mt19937_64 rng_;
  Stats stats_;
};

/// One unfiltered G(n,p) draw from the given engine.
Graph random_graph(int n, double p, std::mt19937_64& rng);

}  // namespace hamclosure
