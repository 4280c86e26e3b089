#include "bipart/random.hpp"

#include "bipart/core.hpp"

namespace bipart {

Digraph random_digraph(Rng& rng, int n, double p) {
  std::vector<std::pair<int, int>> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && rng.bernoulli(p)) arcs.emplace_back(u, v);
  return Digraph(n, arcs);
}

Graph random_graph(Rng& rng, int n, double p) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

std::vector<int> random_permutation(Rng& rng, int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
  return perm;
}

Digraph random_strong_digraph(Rng& rng, int n, double p, bool spanning_cycle,
                              int max_attempts) {
  if (spanning_cycle) {
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && rng.bernoulli(p)) arcs.emplace_back(u, v);
    if (n >= 2) {
      std::vector<int> perm = random_permutation(rng, n);
      for (int i = 0; i < n; ++i) arcs.emplace_back(perm[i], perm[(i + 1) % n]);
    }
    return Digraph(n, arcs);
  }
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Digraph d = random_digraph(rng, n, p);
    if (is_strong(d)) return d;
  }
  throw ResourceExceededError("could not sample a strong digraph by rejection");
}

Digraph random_digraph_min_degree1(Rng& rng, int n, double p, int max_attempts) {
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Digraph d = random_digraph(rng, n, p);
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) ok = d.degree(v) >= 1;
    if (ok) return d;
  }
  throw ResourceExceededError("could not sample a digraph with minimum degree 1");
}

Graph random_connected_graph(Rng& rng, int n, double p, int max_attempts) {
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Graph g = random_graph(rng, n, p);
    if (g.connected()) return g;
  }
  throw ResourceExceededError("could not sample a connected graph");
}

Graph random_graph_min_degree(Rng& rng, int n, double p, int k, int max_attempts) {
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Graph g = random_graph(rng, n, p);
    if (g.min_degree() >= k) return g;
  }
  throw ResourceExceededError("could not sample a graph with minimum degree " + std::to_string(k));
}

}  // namespace bipart
