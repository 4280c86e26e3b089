#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bipart {

/// Thrown when a search exceeds its configured node budget. Callers always
/// get either a correct answer or this error, never a truncated answer.
class ResourceExceededError : public std::runtime_error {
 public:
  explicit ResourceExceededError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Simple undirected graph over vertex ids 0..n-1. No loops, no parallel
/// edges; duplicate edges collapse on construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  int edge_count() const { return edge_count_; }
  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  int min_degree() const;
  /// Edges as (min, max) pairs in ascending order.
  std::vector<std::pair<int, int>> edges() const;
  bool connected() const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;
  int n_ = 0;
  int edge_count_ = 0;
  std::vector<std::vector<int>> adj_;
};

/// Simple directed graph over vertex ids 0..n-1. Directed 2-cycles are
/// allowed; loops and parallel arcs are not (duplicates collapse on
/// construction, loops are rejected).
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);
  Digraph(int n, const std::vector<std::pair<int, int>>& arcs);

  int order() const { return n_; }
  int arc_count() const { return arc_count_; }
  bool has_arc(int u, int v) const;
  const std::vector<int>& out_neighbors(int v) const;
  const std::vector<int>& in_neighbors(int v) const;
  int out_degree(int v) const { return static_cast<int>(out_neighbors(v).size()); }
  int in_degree(int v) const { return static_cast<int>(in_neighbors(v).size()); }
  int degree(int v) const { return out_degree(v) + in_degree(v); }
  /// Distinct adjacent vertices (union of in- and out-neighbourhoods), ascending.
  std::vector<int> neighbors(int v) const;
  /// Arcs as (tail, head) pairs in ascending order.
  std::vector<std::pair<int, int>> arcs() const;
  Digraph reversed() const;
  Graph underlying_graph() const;

  bool operator==(const Digraph&) const = default;

 private:
  void check_vertex(int v) const;
  int n_ = 0;
  int arc_count_ = 0;
  std::vector<std::vector<int>> out_, in_;
};

/// A sub(di)graph induced by a vertex subset, with the reindexed ids mapped
/// back to the host's ids.
struct InducedSubdigraph {
  Digraph graph;
  std::vector<int> vertex_ids;  // vertex_ids[new_id] = host id
};

InducedSubdigraph induced_subdigraph(const Digraph& d, const std::vector<int>& vertices);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> vertex_ids;
};

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

/// An assignment of every vertex to part 1 or part 2. Parts may be empty.
class TwoPartition {
 public:
  TwoPartition() = default;
  /// colors[v] must be 1 or 2 for every v.
  explicit TwoPartition(std::vector<int> colors);
  /// All listed vertices get colour 1, the rest colour 2.
  static TwoPartition from_part1(int n, const std::vector<int>& part1);

  int size() const { return static_cast<int>(colors_.size()); }
  int color_of(int v) const;
  const std::vector<int>& colors() const { return colors_; }
  /// Vertices of colour i (i in {1,2}), ascending.
  std::vector<int> part(int i) const;

  bool operator==(const TwoPartition&) const = default;

 private:
  std::vector<int> colors_;
};

}  // namespace bipart
