#pragma once

#include <optional>
#include <vector>

#include "bipart/graph.hpp"

namespace bipart {

inline constexpr long long kDefaultNodeBudget = 10'000'000;

/// Strong components of a digraph together with the condensation SC(D).
/// Components are listed in reverse topological order of the condensation:
/// every condensation arc goes from a higher component index to a lower one,
/// so terminal components come first.
struct SccResult {
  std::vector<std::vector<int>> components;  // each sorted ascending
  Digraph condensation;                      // acyclic, simple
  std::vector<int> component_of;             // vertex -> component index
};

SccResult strong_components(const Digraph& d);

bool is_strong(const Digraph& d);

/// True iff D - S is strong for every vertex set S with |S| < k.
/// Digraphs with at most k vertices are not k-strong by convention.
bool is_k_strong(const Digraph& d, int k);

/// d+(v) = d-(v) everywhere and the underlying graph is connected.
/// The one-vertex digraph with no arcs is eulerian.
bool is_eulerian(const Digraph& d);

/// Minimum number of edges whose removal disconnects G (0 if G is already
/// disconnected), via max-flow min-cut from vertex 0 against all other sinks.
/// Requires at least two vertices.
int edge_connectivity(const Graph& g);

/// Spanning subdigraph keeping exactly the arcs with endpoints in different
/// parts (both directions kept).
Digraph bipartite_subdigraph(const Digraph& d, const TwoPartition& p);

/// Undirected counterpart of bipartite_subdigraph.
Graph bipartite_subgraph(const Graph& g, const TwoPartition& p);

/// A simple directed cycle of even length, if one exists. Exact simple-cycle
/// enumeration with even-length early exit; deterministic (cycles explored in
/// lexicographic canonical order). Throws ResourceExceededError if the
/// enumeration expands more than `budget` search nodes.
std::optional<std::vector<int>> find_even_cycle(const Digraph& d,
                                                long long budget = kDefaultNodeBudget);

/// True iff B has a spanning set of vertex-disjoint directed cycles, decided
/// by perfect matching between out-copies and in-copies of the vertices.
bool has_cycle_factor(const Digraph& b);

/// A directed walk (entry, interior..., exit) whose interior vertices are new
/// to the host subdigraph and whose endpoints lie in it. Length counts arcs.
struct Handle {
  int entry = -1;
  std::vector<int> interior;
  int exit = -1;
  int length() const { return static_cast<int>(interior.size()) + 1; }
};

struct HandleDecomposition {
  std::vector<int> initial_cycle;  // vertex sequence, arcs consecutive and last->first
  std::vector<Handle> handles;
};

/// Ear-style decomposition of a strong digraph: a shortest cycle, then
/// repeatedly a shortest non-trivial handle for the union built so far, until
/// the union spans V(D). Ties are broken lexicographically (cycle: canonical
/// sequence starting at its minimum vertex; handle: entry id, then interior
/// sequence, then exit id). Requires a strong digraph with at least one arc.
HandleDecomposition handle_decomposition(const Digraph& d);

/// Spanning out-/in-branching: parent[root] = -1; for an out-branching the
/// host arc is parent[v] -> v, for an in-branching it is v -> parent[v].
struct Branching {
  int root = -1;
  std::vector<int> parent;
  bool out_direction = true;
};

/// A non-trivial out- or in-star: the root dominates (out) or is dominated by
/// (in) every leaf in the host digraph.
struct Star {
  int root = -1;
  std::vector<int> leaves;  // ascending, non-empty
  bool out_star = true;
};

enum class BranchingVerdict { Winning, Losing };

struct BranchingGalaxy {
  Branching branching;
  BranchingVerdict verdict;
  std::vector<Star> stars;  // vertex-disjoint; spans V, or V minus root if losing
};

/// Builds the BFS branching from `root` (neighbours scanned ascending) and
/// runs the peel-deepest-leaf procedure on it. Winning: the peeled stars span
/// all vertices; losing: they span all vertices except the root. Throws if
/// the root does not reach (out) / is not reached by (in) every vertex.
BranchingGalaxy branching_galaxy(const Digraph& host, int root, bool out_direction);

}  // namespace bipart
