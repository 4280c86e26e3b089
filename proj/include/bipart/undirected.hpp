#pragma once

#include "bipart/oracle.hpp"
#include "bipart/spec.hpp"

namespace bipart {

/// Local-search partition with d_B(v) >= ceil(d_G(v)/2) for every vertex:
/// while some vertex has strictly more same-part than cross-part neighbours,
/// flip the lowest such vertex. At most |E| flips.
struct HalfDegreeResult {
  TwoPartition partition;
  int flips = 0;
};
HalfDegreeResult half_degree_partition(const Graph& g);

/// Exact maximum cut by branch and bound. Throws ResourceExceededError when
/// the graph has more than `max_order` vertices.
TwoPartition max_cut_partition(const Graph& g, int max_order = 20);

/// (min degree >= 1, min degree >= k) partition. When delta(G) >= k the
/// complement of a greedily grown maximal stable set always works; below that
/// threshold the question is delegated to exact_decide (the regime is
/// NP-complete for k >= 3, so the fallback is exponential in the worst case).
Certificate delta_1k_partition(const Graph& g, int k, const Budget& budget = {});

/// Decides the (min degree >= 1, min degree >= 2) problem in polynomial time.
/// Components of minimum degree >= 2 always admit a partition; for the rest
/// the degree-1 vertices S1 must form a stable set and every vertex of N(S1)
/// needs two neighbours in S1 or one outside S1 and N(S1). Witnesses come
/// from BFS layering over S1, parity colouring, then recolouring any
/// colour-2 vertex with exactly one colour-1 neighbour.
struct Delta12Result {
  Certificate certificate;
  int recolor_steps = 0;
};
Delta12Result delta_12_decide(const Graph& g);

}  // namespace bipart
