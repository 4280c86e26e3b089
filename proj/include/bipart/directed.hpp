#pragma once

#include <map>

#include "bipart/core.hpp"
#include "bipart/oracle.hpp"
#include "bipart/spec.hpp"

namespace bipart {

/// Vertex-disjoint non-trivial out- and in-stars. A spanning nebula of D
/// certifies an OUT_IN(1,1) partition and vice versa.
struct Nebula {
  std::vector<Star> stars;
  std::vector<int> covered_vertices() const;  // ascending, throws on overlap
};

/// One application of Reduction Rule A: an arc (x, y) with d+(x)=d-(y)=1 and
/// no reverse arc (y, x) is deleted together with x and y, and every
/// in-neighbour of x is shortcut to every out-neighbour of y (skipping loops
/// and existing arcs). Neighbourhood snapshots are taken in the digraph
/// current at reduction time. Without the no-reverse-arc condition the rule
/// can turn a yes-instance into a single vertex: in the digraph with arcs
/// 0->2, 1->0, 1->2, 2->1, the arc (2, 1) qualifies on degrees alone, yet
/// ({0,1},{2}) is a valid partition and the reduced digraph is a lone vertex.
struct ReductionStep {
  int x = -1;
  int y = -1;
  std::vector<int> in_of_x;   // N-(x), ascending
  std::vector<int> out_of_y;  // N+(y), ascending
  std::vector<std::pair<int, int>> shortcuts;  // arcs actually added
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
};

/// Result of exhaustively applying Rule A. The residue keeps its vertices
/// reindexed; vertex_ids maps them back to the input digraph's ids, which is
/// also the id space of the trace.
struct ReducedDigraph {
  Digraph graph;
  std::vector<int> vertex_ids;
  ReductionTrace trace;
};

/// Applies Rule A until no arc qualifies, always reducing the lowest (x, y)
/// arc first. Strongness is preserved step by step on strong inputs.
ReducedDigraph rule_a_reduce(const Digraph& d);

/// Replays the first `steps` trace entries forward from d (all of them if
/// steps < 0), returning the intermediate digraph in reindexed form.
ReducedDigraph replay_reduction(const Digraph& d, const ReductionTrace& trace, int steps = -1);

/// Extends a valid OUT_IN(1,1) colouring of the post-step digraph to one of
/// the pre-step digraph. The colouring maps original vertex ids to 1/2; x and
/// y must not be coloured yet. If some recorded in-neighbour of x has colour
/// 1 and some out-neighbour of y has colour 2, x gets 2 and y gets 1;
/// otherwise x gets 1 and y gets 2.
void lift_coloring(const ReductionStep& step, std::map<int, int>& coloring);

/// OUT_OUT(1,1) decision: no if D has a sink, no if some non-trivial terminal
/// strong component lacks an even directed cycle; otherwise yes, colouring
/// one even cycle per terminal component alternately and then repeatedly
/// giving any uncoloured vertex with a coloured out-neighbour the opposite
/// colour.
Certificate outdeg11_decide(const Digraph& d, long long even_cycle_budget = kDefaultNodeBudget);

/// OUT_IN(1,1) on strong digraphs: fully reduce via Rule A; the answer is no
/// exactly when the residue is a single vertex. Witnesses are found on the
/// residue by exact search and lifted back through the trace. If the witness
/// search runs out of budget the decision stands and the certificate notes
/// the omitted witness.
Certificate inout11_strong_decide(const Digraph& d, const Budget& budget = {});

/// Converts a valid OUT_IN(1,1) partition into a spanning nebula whose star
/// arcs all go from V1 to V2, by peeling one arc at a time and absorbing the
/// vertices that arc was the last support of into a star. Throws if the
/// partition is invalid.
Nebula partition_to_nebula(const Digraph& d, const TwoPartition& p);

/// Colours out-star roots 1 and their leaves 2, in-star roots 2 and their
/// leaves 1. The nebula must span V(D).
TwoPartition nebula_to_partition(const Digraph& d, const Nebula& n);

/// Given a spanning nebula of the condensation SC(D), builds an OUT_IN(1,1)
/// partition of D via winning/losing branchings: per out-star, an out-
/// branching of the star's cluster minus the first leaf component is peeled
/// into a galaxy, then an in-branching of that leaf component; in-stars are
/// handled conversely.
TwoPartition condensation_extend(const Digraph& d, const Nebula& condensation_nebula);

/// OUT_TOTAL(1,1) construction for digraphs with minimum degree >= 1: X1 has
/// the lowest-id vertex of each terminal strong component, each next layer
/// holds the uncovered vertices with an arc into the previous one; odd
/// layers go to V2, even layers to V1. Throws on isolated vertices.
TwoPartition out_total_partition(const Digraph& d);

}  // namespace bipart
