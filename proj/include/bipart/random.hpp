#pragma once

#include <cstdint>
#include <random>

#include "bipart/graph.hpp"

namespace bipart {

/// Seeded generator for reproducible instance sampling. mt19937_64 has a
/// standardised sequence, so equal seeds give byte-identical instances on
/// every platform; bounded draws use plain modulo.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}
  uint64_t next() { return gen_(); }
  int below(int k) { return static_cast<int>(next() % static_cast<uint64_t>(k)); }
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return unit() < p; }

 private:
  std::mt19937_64 gen_;
};

/// Erdos-Renyi digraph: every ordered pair becomes an arc with probability p.
Digraph random_digraph(Rng& rng, int n, double p);

/// Erdos-Renyi graph on unordered pairs.
Graph random_graph(Rng& rng, int n, double p);

/// Random permutation of 0..n-1 (Fisher-Yates).
std::vector<int> random_permutation(Rng& rng, int n);

/// Strong random digraph: either rejection-samples plain ER digraphs (up to
/// max_attempts, then throws ResourceExceededError), or overlays a random
/// spanning cycle on an ER digraph, which is always strong.
Digraph random_strong_digraph(Rng& rng, int n, double p, bool spanning_cycle,
                              int max_attempts = 1000);

/// ER digraph resampled until minimum total degree >= 1.
Digraph random_digraph_min_degree1(Rng& rng, int n, double p, int max_attempts = 1000);

/// ER graph resampled until connected.
Graph random_connected_graph(Rng& rng, int n, double p, int max_attempts = 1000);

/// ER graph resampled until minimum degree >= k.
Graph random_graph_min_degree(Rng& rng, int n, double p, int k, int max_attempts = 10000);

}  // namespace bipart
