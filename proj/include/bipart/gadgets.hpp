#pragma once

#include <map>
#include <string>

#include "bipart/directed.hpp"
#include "bipart/oracle.hpp"

namespace bipart {

/// Role name ("x3", "c2", "Q1.y", ...) to vertex id. Vertex ids follow the
/// documented canonical layout of each generator, so equal inputs produce
/// byte-identical instances.
using LabelMap = std::map<std::string, int>;

struct LabeledGraph {
  Graph graph;
  LabelMap labels;
};

struct LabeledDigraph {
  Digraph digraph;
  LabelMap labels;
};

/// NAE-3-SAT to UND(k1,k2), 2 <= k1 <= k2. Per variable a copy of the gadget
/// X (chain v - X1 - X2 - {x, xbar} - X4 - X3 - z - v plus the edge x xbar);
/// per clause a copy of X' whose three connector vertices are identified with
/// the literal vertices. Layout: variable blocks then clause blocks, each
/// block ordered [v, z, x, xbar, X1.., X2.., X3.., X4..].
LabeledGraph und_nae_instance(const CnfFormula& f, int k1, int k2);

/// 3-SAT to UND(1,k), k >= 3. The k=3 core uses one G* gadget per variable
/// ([a1, a2, x, xbar, y1, y2, b1, b2]) and a triangle [y, y', y''] per
/// clause, with y joined to the literal vertices; k > 3 appends k-3 cliques
/// of size k with pendant chains whose pendant vertex sees all of the core.
LabeledGraph und_1k_instance(const CnfFormula& f, int k);

/// 3-SAT to OUT_IN(1,1) on an acyclic digraph M(F): per variable
/// [x, xbar, y, z] with y a source and z a sink, plus one sink c_j per
/// clause fed by its literal vertices.
LabeledDigraph acyclic_inout_instance(const CnfFormula& f);

/// 3-SAT to OUT_IN(1,1) with boundary vertices a, b: W(F) has an OUT_IN(1,1)
/// colouring with a -> 2, b -> 1 iff F is satisfiable. Rejects formulas
/// satisfied by the all-true or the all-false assignment. Layout:
/// [a, b, c1..cm, v1..vn].
LabeledDigraph w_instance(const CnfFormula& f);

/// W(F) plus vertices c, d and arcs b->c, c->d, d->a; pinning c to colour 2
/// makes the whole digraph a yes-instance iff F is satisfiable.
struct WPrimeInstance {
  Digraph digraph;
  LabelMap labels;
  int pinned_vertex = -1;
  int pinned_color = 2;
};
WPrimeInstance w_prime_instance(const CnfFormula& f);

/// Builds a member of D^c(H) that has an OUT_IN(1,1) partition iff F is
/// satisfiable. H must be a connected acyclic digraph of order >= 2 without
/// an OUT_IN(1,1) partition (checked against the oracle). A maximal
/// partitionable induced H' is grown greedily from the sinks; the first
/// H-arc from outside H' into H' selects the replaced vertex y; every other
/// outside vertex gets a private 4-cycle and y becomes a copy of W(F).
LabeledDigraph pattern_instance(const Digraph& h, const CnfFormula& f, const Budget& budget = {});

/// 3-SAT to OUT_IN(k1,1) on strong digraphs, k1 >= 2. Per variable a gadget
/// Q ([y, v, vbar, W.., Z..], |W| = |Z| = k1-1), one vertex per clause, a
/// directed cycle through all Z vertices, arcs c_j -> y1 and literal arcs
/// into the clause vertices. Variables missing a polarity are padded with
/// the neutral clause (x | !x | !x) first.
LabeledDigraph strong_outin_k1_instance(const CnfFormula& f, int k1);

/// 3-SAT to OUT_IN(2,2) on strong digraphs via the gadget Q'
/// ([w, y, y', v, vbar, z] with 12 arcs). Padded like
/// strong_outin_k1_instance. Each clause vertex additionally receives the
/// arc y'_1 -> c_j, which turns its in-degree-two requirement into "at least
/// one true literal".
LabeledDigraph strong_22_instance(const CnfFormula& f);

/// Adds x1, x2 with all arcs V(D) -> x2, x1 -> V(D) and x1 <-> x2. For a
/// nonempty D the result is strong and has an OUT_IN(k1,k2) partition iff D
/// has an OUT_IN(k1-1,k2-1) partition (k1, k2 >= 2).
LabeledDigraph lift_k1k2(const Digraph& d);

/// Adds the gadget G_r(X) to the host: new vertex blocks Y and Z of size
/// r = |X| with all arcs X -> Y, Y -> Z, Z -> X (2r vertices, 3r^2 arcs).
LabeledDigraph gadget_gr(const Digraph& host, const std::vector<int>& x_set);

/// The r-strong eulerian digraph with no strong 2-partition: a balanced core
/// U on 2r-1 vertices (arcless by default) plus one gadget G_r(X) per
/// r-subset X of U, subsets in lexicographic order.
LabeledDigraph eulerian_counterexample(int r);
LabeledDigraph eulerian_counterexample(int r, const Digraph& core);

/// Hypergraph 2-colourability to strong 2-partition (and to eulerian
/// semi-degree >= 1 partition): ground set plus one gadget G_r(X_i) per
/// hyperedge. H must be connected and r-uniform with r >= 2.
LabeledDigraph hypergraph_instance(const Hypergraph& h);

/// Pads every variable that lacks a positive or a negative occurrence with
/// the satisfiability-preserving clause (x | !x | !x). Used by the strong
/// gadget generators; exposed for tests.
CnfFormula pad_both_polarities(const CnfFormula& f);

}  // namespace bipart
