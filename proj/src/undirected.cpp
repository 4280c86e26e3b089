#include "bipart/undirected.hpp"

#include <algorithm>

namespace bipart {

HalfDegreeResult half_degree_partition(const Graph& g) {
  int n = g.order();
  std::vector<int> colors(n, 1);
  int flips = 0;
  while (true) {
    int candidate = -1;
    for (int v = 0; v < n && candidate < 0; ++v) {
      int cross = 0;
      for (int u : g.neighbors(v)) cross += colors[u] != colors[v] ? 1 : 0;
      int same = g.degree(v) - cross;
      if (same > cross) candidate = v;
    }
    if (candidate < 0) break;
    colors[candidate] = 3 - colors[candidate];
    ++flips;
  }
  return {TwoPartition(std::move(colors)), flips};
}

namespace {

void max_cut_search(const Graph& g, int v, std::vector<int>& colors, int cut,
                    int remaining_edges, int& best_cut, std::vector<int>& best_colors) {
  // remaining_edges counts edges with an undecided endpoint; the first
  // optimum found is kept, so an equal upper bound prunes too.
  if (cut + remaining_edges <= best_cut) return;
  if (v == g.order()) {
    if (cut > best_cut) {
      best_cut = cut;
      best_colors = colors;
    }
    return;
  }
  int edges_to_earlier = 0;
  for (int u : g.neighbors(v)) edges_to_earlier += u < v ? 1 : 0;
  for (int color = 1; color <= 2; ++color) {
    colors[v] = color;
    int gained = 0;
    for (int u : g.neighbors(v))
      if (u < v && colors[u] != color) ++gained;
    max_cut_search(g, v + 1, colors, cut + gained,
                   remaining_edges - edges_to_earlier, best_cut, best_colors);
  }
  colors[v] = 0;
}

}  // namespace

TwoPartition max_cut_partition(const Graph& g, int max_order) {
  if (g.order() > max_order)
    throw ResourceExceededError("max_cut_partition exact-search bound exceeded");
  if (g.order() == 0) return TwoPartition(std::vector<int>{});
  std::vector<int> colors(g.order(), 0), best_colors(g.order(), 1);
  int best_cut = -1;
  max_cut_search(g, 0, colors, 0, g.edge_count(), best_cut, best_colors);
  return TwoPartition(std::move(best_colors));
}

Certificate delta_1k_partition(const Graph& g, int k, const Budget& budget) {
  if (k < 1) throw std::invalid_argument("delta_1k_partition requires k >= 1");
  if (g.order() == 0)
    return yes_certificate(Instance{g}, PartitionSpec::und(1, k), TwoPartition(std::vector<int>{}));
  if (g.min_degree() >= k) {
    std::vector<char> in_stable(g.order(), 0);
    for (int v = 0; v < g.order(); ++v) {
      bool blocked = false;
      for (int u : g.neighbors(v)) blocked = blocked || in_stable[u];
      if (!blocked) in_stable[v] = 1;
    }
    std::vector<int> colors(g.order());
    for (int v = 0; v < g.order(); ++v) colors[v] = in_stable[v] ? 2 : 1;
    return yes_certificate(Instance{g}, PartitionSpec::und(1, k), TwoPartition(std::move(colors)),
                           {"maximal stable set construction"});
  }
  Certificate c = exact_decide(g, PartitionSpec::und(1, k), budget);
  c.trace.insert(c.trace.begin(), "min degree below k, delegated to exact search");
  return c;
}

namespace {

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(g.order(), 0);
  for (int s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp, stack = {s};
    seen[s] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int w : g.neighbors(u))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace

Delta12Result delta_12_decide(const Graph& g) {
  const PartitionSpec spec = PartitionSpec::und(1, 2);
  int n = g.order();
  if (n == 0) return {yes_certificate(Instance{g}, spec, TwoPartition(std::vector<int>{})), 0};

  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 0)
      return {no_certificate("isolated vertex " + std::to_string(v)), 0};

  std::vector<char> in_s1(n, 0);
  std::vector<int> s1;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 1) {
      in_s1[v] = 1;
      s1.push_back(v);
    }

  // Characterisation: S1 stable, and every vertex of N(S1) has two
  // neighbours in S1 or one neighbour outside S1 and N(S1).
  for (int v : s1)
    for (int u : g.neighbors(v))
      if (in_s1[u])
        return {no_certificate("degree-1 vertices " + std::to_string(std::min(u, v)) + " and " +
                               std::to_string(std::max(u, v)) + " are adjacent"),
                0};
  std::vector<char> in_n1(n, 0);
  for (int v : s1) in_n1[g.neighbors(v).front()] = 1;
  for (int w = 0; w < n; ++w) {
    if (!in_n1[w]) continue;
    int s1_neighbors = 0;
    bool outside_neighbor = false;
    for (int u : g.neighbors(w)) {
      if (in_s1[u]) ++s1_neighbors;
      if (!in_s1[u] && !in_n1[u]) outside_neighbor = true;
    }
    if (s1_neighbors < 2 && !outside_neighbor)
      return {no_certificate("vertex " + std::to_string(w) +
                             " in N(S1) has neither two S1-neighbours nor a neighbour "
                             "outside S1 and N(S1)"),
              0};
  }

  // Witness. Components containing degree-1 vertices: BFS layers from S1,
  // odd layers colour 1, even colour 2. Components of min degree >= 2: the
  // complement of a greedy maximal stable set.
  std::vector<int> colors(n, 0), layer(n, 0);
  std::vector<int> frontier = s1;
  for (int v : s1) layer[v] = 1;
  int depth = 1;
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int v : frontier)
      for (int u : g.neighbors(v))
        if (layer[u] == 0) {
          layer[u] = depth + 1;
          next.push_back(u);
        }
    frontier = std::move(next);
    ++depth;
  }
  for (int v = 0; v < n; ++v)
    if (layer[v] > 0) colors[v] = layer[v] % 2 == 1 ? 1 : 2;
  for (const auto& comp : connected_components(g)) {
    if (layer[comp.front()] > 0) continue;
    std::vector<char> in_stable(n, 0);
    for (int v : comp) {
      bool blocked = false;
      for (int u : g.neighbors(v)) blocked = blocked || in_stable[u];
      if (!blocked) in_stable[v] = 1;
    }
    for (int v : comp) colors[v] = in_stable[v] ? 2 : 1;
  }

  // Recolour: a colour-2 vertex with exactly one colour-1 neighbour moves to
  // colour 1; the count of colour-2 vertices strictly decreases each step.
  int steps = 0;
  while (true) {
    int candidate = -1;
    for (int v = 0; v < n && candidate < 0; ++v) {
      if (colors[v] != 2) continue;
      int ones = 0;
      for (int u : g.neighbors(v)) ones += colors[u] == 1 ? 1 : 0;
      if (ones == 1) candidate = v;
    }
    if (candidate < 0) break;
    colors[candidate] = 1;
    ++steps;
  }

  Certificate cert = yes_certificate(Instance{g}, spec, TwoPartition(std::move(colors)),
                                     {"recolor steps: " + std::to_string(steps)});
  return {std::move(cert), steps};
}

}  // namespace bipart
