#include "bipart/graph.hpp"

#include <algorithm>

namespace bipart {

namespace {

void sort_unique(std::vector<int>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool contains_sorted(const std::vector<int>& v, int x) {
  return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

Graph::Graph(int n) : n_(n), adj_(n) {
  if (n < 0) throw std::invalid_argument("graph order must be non-negative");
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [u, v] : edges) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) sort_unique(a);
  for (int v = 0; v < n_; ++v) edge_count_ += static_cast<int>(adj_[v].size());
  edge_count_ /= 2;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return contains_sorted(adj_[u], v);
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

int Graph::min_degree() const {
  int d = n_ == 0 ? 0 : degree(0);
  for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> es;
  es.reserve(edge_count_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) es.emplace_back(u, v);
  return es;
}

bool Graph::connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(n_, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj_[u])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n_;
}

Digraph::Digraph(int n) : n_(n), out_(n), in_(n) {
  if (n < 0) throw std::invalid_argument("digraph order must be non-negative");
}

Digraph::Digraph(int n, const std::vector<std::pair<int, int>>& arcs) : Digraph(n) {
  for (auto [u, v] : arcs) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop arc at vertex " + std::to_string(u));
    out_[u].push_back(v);
    in_[v].push_back(u);
  }
  for (auto& a : out_) sort_unique(a);
  for (auto& a : in_) sort_unique(a);
  for (int v = 0; v < n_; ++v) arc_count_ += static_cast<int>(out_[v].size());
}

void Digraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
}

bool Digraph::has_arc(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return contains_sorted(out_[u], v);
}

const std::vector<int>& Digraph::out_neighbors(int v) const {
  check_vertex(v);
  return out_[v];
}

const std::vector<int>& Digraph::in_neighbors(int v) const {
  check_vertex(v);
  return in_[v];
}

std::vector<int> Digraph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> nb = out_[v];
  nb.insert(nb.end(), in_[v].begin(), in_[v].end());
  sort_unique(nb);
  return nb;
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
  std::vector<std::pair<int, int>> as;
  as.reserve(arc_count_);
  for (int u = 0; u < n_; ++u)
    for (int v : out_[u]) as.emplace_back(u, v);
  return as;
}

Digraph Digraph::reversed() const {
  std::vector<std::pair<int, int>> as;
  as.reserve(arc_count_);
  for (auto [u, v] : arcs()) as.emplace_back(v, u);
  return Digraph(n_, as);
}

Graph Digraph::underlying_graph() const {
  std::vector<std::pair<int, int>> es;
  es.reserve(arc_count_);
  for (auto [u, v] : arcs()) es.emplace_back(u, v);
  return Graph(n_, es);
}

InducedSubdigraph induced_subdigraph(const Digraph& d, const std::vector<int>& vertices) {
  std::vector<int> ids = vertices;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<int> index(d.order(), -1);
  for (int i = 0; i < static_cast<int>(ids.size()); ++i) {
    if (ids[i] < 0 || ids[i] >= d.order())
      throw std::invalid_argument("induced subdigraph vertex out of range");
    index[ids[i]] = i;
  }
  std::vector<std::pair<int, int>> as;
  for (int u : ids)
    for (int v : d.out_neighbors(u))
      if (index[v] >= 0) as.emplace_back(index[u], index[v]);
  return {Digraph(static_cast<int>(ids.size()), as), ids};
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> ids = vertices;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<int> index(g.order(), -1);
  for (int i = 0; i < static_cast<int>(ids.size()); ++i) {
    if (ids[i] < 0 || ids[i] >= g.order())
      throw std::invalid_argument("induced subgraph vertex out of range");
    index[ids[i]] = i;
  }
  std::vector<std::pair<int, int>> es;
  for (int u : ids)
    for (int v : g.neighbors(u))
      if (u < v && index[v] >= 0) es.emplace_back(index[u], index[v]);
  return {Graph(static_cast<int>(ids.size()), es), ids};
}

TwoPartition::TwoPartition(std::vector<int> colors) : colors_(std::move(colors)) {
  for (int c : colors_)
    if (c != 1 && c != 2) throw std::invalid_argument("partition colour must be 1 or 2");
}

TwoPartition TwoPartition::from_part1(int n, const std::vector<int>& part1) {
  std::vector<int> colors(n, 2);
  for (int v : part1) {
    if (v < 0 || v >= n) throw std::invalid_argument("partition vertex out of range");
    colors[v] = 1;
  }
  return TwoPartition(std::move(colors));
}

int TwoPartition::color_of(int v) const {
  if (v < 0 || v >= size()) throw std::invalid_argument("vertex out of range");
  return colors_[v];
}

std::vector<int> TwoPartition::part(int i) const {
  std::vector<int> vs;
  for (int v = 0; v < size(); ++v)
    if (colors_[v] == i) vs.push_back(v);
  return vs;
}

}  // namespace bipart
