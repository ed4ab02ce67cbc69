#include "hamclosure/sampling.hpp"

#include <string>

#include "hamclosure/errors.hpp"

namespace hamclosure {

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

GraphSampler::GraphSampler(int n, double p, std::uint64_t seed, GraphPredicate predicate, std::uint64_t max_attempts)
    : n_(n), p_(p), predicate_(std::move(predicate)), max_attempts_(max_attempts), rng_(seed) {
  if (n < 0) throw InputError("sampler: negative vertex count");
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("sampler: edge probability must lie in [0,1]");
}

Graph GraphSampler::draw() { return random_graph(n_, p_, rng_); }

Graph GraphSampler::next() {
  for (std::uint64_t i = 0; i < max_attempts_; ++i) {
    ++stats_.attempts;
    Graph g = draw();
    if (!predicate_ || predicate_(g)) {
      ++stats_.yielded;
      return g;
    }
  }
  throw SamplingExhausted("no graph accepted in " + std::to_string(max_attempts_) + " attempts (n=" +
                          std::to_string(n_) + ", p=" + std::to_string(p_) + ")");
}

std::vector<Graph> GraphSampler::take(std::size_t k) {
  std::vector<Graph> out;
  out.reserve(k);
  try {
    while (out.size() < k) out.push_back(next());
  } catch (const SamplingExhausted&) {
  }
  return out;
}

}  // namespace hamclosure
