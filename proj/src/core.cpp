#include "bipart/core.hpp"

#include <algorithm>
#include <queue>

namespace bipart {

namespace {

void tarjan_visit(const Digraph& d, int v, int& counter, std::vector<int>& index,
                  std::vector<int>& lowlink, std::vector<int>& stack,
                  std::vector<char>& on_stack, std::vector<std::vector<int>>& components,
                  std::vector<int>& component_of) {
  index[v] = lowlink[v] = counter++;
  stack.push_back(v);
  on_stack[v] = 1;
  for (int w : d.out_neighbors(v)) {
    if (index[w] < 0) {
      tarjan_visit(d, w, counter, index, lowlink, stack, on_stack, components, component_of);
      lowlink[v] = std::min(lowlink[v], lowlink[w]);
    } else if (on_stack[w]) {
      lowlink[v] = std::min(lowlink[v], index[w]);
    }
  }
  if (lowlink[v] == index[v]) {
    std::vector<int> comp;
    int w;
    do {
      w = stack.back();
      stack.pop_back();
      on_stack[w] = 0;
      component_of[w] = static_cast<int>(components.size());
      comp.push_back(w);
    } while (w != v);
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
}

/// Forward/backward reachable count from vertex 0 restricted to alive vertices.
bool strong_under_mask(const Digraph& d, const std::vector<char>& alive, int alive_count) {
  if (alive_count == 0) return false;
  int start = -1;
  for (int v = 0; v < d.order(); ++v)
    if (alive[v]) {
      start = v;
      break;
    }
  for (int pass = 0; pass < 2; ++pass) {
    std::vector<char> seen(d.order(), 0);
    std::vector<int> stack = {start};
    seen[start] = 1;
    int count = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      const auto& nbrs = pass == 0 ? d.out_neighbors(u) : d.in_neighbors(u);
      for (int w : nbrs)
        if (alive[w] && !seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
    }
    if (count != alive_count) return false;
  }
  return true;
}

bool next_combination(std::vector<int>& comb, int n) {
  int k = static_cast<int>(comb.size());
  for (int i = k - 1; i >= 0; --i) {
    if (comb[i] < n - (k - i)) {
      ++comb[i];
      for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

SccResult strong_components(const Digraph& d) {
  int n = d.order();
  SccResult r;
  r.component_of.assign(n, -1);
  std::vector<int> index(n, -1), lowlink(n, -1), stack;
  std::vector<char> on_stack(n, 0);
  int counter = 0;
  for (int v = 0; v < n; ++v)
    if (index[v] < 0)
      tarjan_visit(d, v, counter, index, lowlink, stack, on_stack, r.components,
                   r.component_of);
  std::vector<std::pair<int, int>> carcs;
  for (auto [u, v] : d.arcs()) {
    int cu = r.component_of[u], cv = r.component_of[v];
    if (cu != cv) carcs.emplace_back(cu, cv);
  }
  r.condensation = Digraph(static_cast<int>(r.components.size()), carcs);
  return r;
}

bool is_strong(const Digraph& d) {
  if (d.order() == 0) return false;
  std::vector<char> alive(d.order(), 1);
  return strong_under_mask(d, alive, d.order());
}

bool is_k_strong(const Digraph& d, int k) {
  if (k < 1) throw std::invalid_argument("is_k_strong requires k >= 1");
  int n = d.order();
  if (n <= k) return false;
  for (int size = 0; size < k; ++size) {
    std::vector<int> comb(size);
    for (int i = 0; i < size; ++i) comb[i] = i;
    do {
      std::vector<char> alive(n, 1);
      for (int v : comb) alive[v] = 0;
      if (!strong_under_mask(d, alive, n - size)) return false;
    } while (next_combination(comb, n));
  }
  return true;
}

bool is_eulerian(const Digraph& d) {
  if (d.order() == 0) return false;
  for (int v = 0; v < d.order(); ++v)
    if (d.out_degree(v) != d.in_degree(v)) return false;
  return d.underlying_graph().connected();
}

int edge_connectivity(const Graph& g) {
  int n = g.order();
  if (n < 2) throw std::invalid_argument("edge_connectivity requires at least 2 vertices");
  int best = g.edge_count();
  for (int t = 1; t < n; ++t) {
    // Edmonds-Karp from 0 to t, unit capacity per arc direction.
    std::vector<std::vector<int>> cap(n, std::vector<int>(n, 0));
    for (auto [u, v] : g.edges()) cap[u][v] = cap[v][u] = 1;
    int flow = 0;
    while (true) {
      std::vector<int> pred(n, -1);
      std::queue<int> q;
      q.push(0);
      pred[0] = 0;
      while (!q.empty() && pred[t] < 0) {
        int u = q.front();
        q.pop();
        for (int v = 0; v < n; ++v)
          if (pred[v] < 0 && cap[u][v] > 0) {
            pred[v] = u;
            q.push(v);
          }
      }
      if (pred[t] < 0) break;
      for (int v = t; v != 0; v = pred[v]) {
        cap[pred[v]][v] -= 1;
        cap[v][pred[v]] += 1;
      }
      ++flow;
      if (flow >= best) break;
    }
    best = std::min(best, flow);
    if (best == 0) break;
  }
  return best;
}

Digraph bipartite_subdigraph(const Digraph& d, const TwoPartition& p) {
  if (p.size() != d.order())
    throw std::invalid_argument("partition does not cover the digraph");
  std::vector<std::pair<int, int>> as;
  for (auto [u, v] : d.arcs())
    if (p.color_of(u) != p.color_of(v)) as.emplace_back(u, v);
  return Digraph(d.order(), as);
}

Graph bipartite_subgraph(const Graph& g, const TwoPartition& p) {
  if (p.size() != g.order())
    throw std::invalid_argument("partition does not cover the graph");
  std::vector<std::pair<int, int>> es;
  for (auto [u, v] : g.edges())
    if (p.color_of(u) != p.color_of(v)) es.emplace_back(u, v);
  return Graph(g.order(), es);
}

namespace {

bool even_cycle_dfs(const Digraph& d, int s, std::vector<int>& path,
                    std::vector<char>& on_path, long long& budget,
                    std::vector<int>& result) {
  int u = path.back();
  for (int w : d.out_neighbors(u)) {
    if (--budget <= 0) throw ResourceExceededError("even-cycle enumeration budget exceeded");
    if (w == s && path.size() >= 2 && path.size() % 2 == 0) {
      result = path;
      return true;
    }
    if (w > s && !on_path[w]) {
      path.push_back(w);
      on_path[w] = 1;
      if (even_cycle_dfs(d, s, path, on_path, budget, result)) return true;
      on_path[w] = 0;
      path.pop_back();
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_even_cycle(const Digraph& d, long long budget) {
  // Cycles are enumerated grouped by their minimum vertex s, smallest first.
  for (int s = 0; s < d.order(); ++s) {
    std::vector<int> path = {s}, result;
    std::vector<char> on_path(d.order(), 0);
    on_path[s] = 1;
    if (even_cycle_dfs(d, s, path, on_path, budget, result)) return result;
  }
  return std::nullopt;
}

namespace {

bool kuhn_augment(const std::vector<std::vector<int>>& adj, int u,
                  std::vector<char>& used, std::vector<int>& match_right) {
  for (int v : adj[u]) {
    if (used[v]) continue;
    used[v] = 1;
    if (match_right[v] < 0 || kuhn_augment(adj, match_right[v], used, match_right)) {
      match_right[v] = u;
      return true;
    }
  }
  return false;
}

}  // namespace

bool has_cycle_factor(const Digraph& b) {
  int n = b.order();
  // Perfect matching out-copy -> in-copy; a permutation of arcs is exactly a
  // spanning union of vertex-disjoint directed cycles.
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = b.out_neighbors(v);
  std::vector<int> match_right(n, -1);
  int matched = 0;
  for (int u = 0; u < n; ++u) {
    std::vector<char> used(n, 0);
    if (kuhn_augment(adj, u, used, match_right)) ++matched;
  }
  return matched == n;
}

namespace {

/// BFS distances from `source` inside the full digraph.
std::vector<int> bfs_dist(const Digraph& d, int source) {
  std::vector<int> dist(d.order(), -1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : d.out_neighbors(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
  }
  return dist;
}

/// Lexicographically smallest cycle of length exactly `len` whose minimum
/// vertex is `s`, or empty if none. dist_to_s gives unrestricted shortest
/// path lengths to s, used as an admissible pruning bound.
bool fixed_length_cycle_dfs(const Digraph& d, int s, int len,
                            const std::vector<int>& dist_to_s, std::vector<int>& path,
                            std::vector<char>& on_path) {
  int u = path.back();
  int remaining = len - static_cast<int>(path.size());
  if (remaining == 0) return d.has_arc(u, s);
  for (int w : d.out_neighbors(u)) {
    if (w <= s || on_path[w]) continue;
    if (dist_to_s[w] < 0 || dist_to_s[w] > remaining) continue;
    path.push_back(w);
    on_path[w] = 1;
    if (fixed_length_cycle_dfs(d, s, len, dist_to_s, path, on_path)) return true;
    on_path[w] = 0;
    path.pop_back();
  }
  return false;
}

std::vector<int> shortest_cycle(const Digraph& d) {
  int n = d.order();
  std::vector<std::vector<int>> dist(n);
  for (int v = 0; v < n; ++v) dist[v] = bfs_dist(d, v);
  int best = -1;
  for (auto [u, v] : d.arcs())
    if (dist[v][u] >= 0) {
      int len = dist[v][u] + 1;
      if (best < 0 || len < best) best = len;
    }
  if (best < 0) throw std::invalid_argument("digraph has no cycle");
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist_to_s(n);
    for (int v = 0; v < n; ++v) dist_to_s[v] = dist[v][s];
    std::vector<int> path = {s};
    std::vector<char> on_path(n, 0);
    on_path[s] = 1;
    if (fixed_length_cycle_dfs(d, s, best, dist_to_s, path, on_path)) return path;
  }
  throw std::logic_error("shortest cycle reconstruction failed");
}

/// Minimum arcs from w to any in-set vertex through outside vertices
/// (the final arc enters the set); -1 if unreachable.
std::vector<int> exit_distance(const Digraph& d, const std::vector<char>& in_set) {
  int n = d.order();
  std::vector<int> e(n, -1);
  std::queue<int> q;
  for (int w = 0; w < n; ++w) {
    if (in_set[w]) continue;
    for (int t : d.out_neighbors(w))
      if (in_set[t]) {
        e[w] = 1;
        q.push(w);
        break;
      }
  }
  while (!q.empty()) {
    int w = q.front();
    q.pop();
    for (int u : d.in_neighbors(w))
      if (!in_set[u] && e[u] < 0) {
        e[u] = e[w] + 1;
        q.push(u);
      }
  }
  return e;
}

bool handle_interior_dfs(const Digraph& d, const std::vector<char>& in_set,
                         const std::vector<int>& exit_dist, int target_len,
                         std::vector<int>& interior, std::vector<char>& used,
                         int& exit_vertex) {
  int u = interior.back();
  int remaining = target_len - static_cast<int>(interior.size());
  if (remaining == 1) {
    for (int t : d.out_neighbors(u))
      if (in_set[t]) {
        exit_vertex = t;
        return true;
      }
    return false;
  }
  for (int w : d.out_neighbors(u)) {
    if (in_set[w] || used[w]) continue;
    if (exit_dist[w] < 0 || exit_dist[w] > remaining - 1) continue;
    interior.push_back(w);
    used[w] = 1;
    if (handle_interior_dfs(d, in_set, exit_dist, target_len, interior, used, exit_vertex))
      return true;
    used[w] = 0;
    interior.pop_back();
  }
  return false;
}

Handle shortest_handle(const Digraph& d, const std::vector<char>& in_set) {
  int n = d.order();
  std::vector<int> exit_dist = exit_distance(d, in_set);
  // Per entry vertex s: BFS through outside vertices; a handle whose last
  // interior vertex is w has length dist(w) + 1. Smallest length wins, ties
  // by smallest entry id.
  int best_len = -1, best_entry = -1;
  for (int s = 0; s < n; ++s) {
    if (!in_set[s]) continue;
    std::vector<int> dist(n, -1);
    std::queue<int> q;
    for (int w : d.out_neighbors(s))
      if (!in_set[w] && dist[w] < 0) {
        dist[w] = 1;
        q.push(w);
      }
    while (!q.empty()) {
      int w = q.front();
      q.pop();
      for (int u : d.out_neighbors(w))
        if (!in_set[u] && dist[u] < 0) {
          dist[u] = dist[w] + 1;
          q.push(u);
        }
    }
    int local = -1;
    for (int w = 0; w < n; ++w)
      if (!in_set[w] && dist[w] >= 0 && exit_dist[w] == 1)
        if (local < 0 || dist[w] + 1 < local) local = dist[w] + 1;
    if (local >= 0 && (best_len < 0 || local < best_len)) {
      best_len = local;
      best_entry = s;
    }
  }
  if (best_len < 0) throw std::logic_error("no non-trivial handle found in a strong digraph");
  Handle h;
  h.entry = best_entry;
  std::vector<char> used(n, 0);
  for (int w : d.out_neighbors(best_entry)) {
    if (in_set[w] || exit_dist[w] < 0 || exit_dist[w] > best_len - 1) continue;
    h.interior = {w};
    used.assign(n, 0);
    used[w] = 1;
    int exit_vertex = -1;
    if (handle_interior_dfs(d, in_set, exit_dist, best_len, h.interior, used, exit_vertex)) {
      h.exit = exit_vertex;
      return h;
    }
  }
  throw std::logic_error("handle reconstruction failed");
}

}  // namespace

HandleDecomposition handle_decomposition(const Digraph& d) {
  if (!is_strong(d)) throw std::invalid_argument("handle decomposition requires a strong digraph");
  if (d.arc_count() == 0)
    throw std::invalid_argument("handle decomposition requires at least one arc");
  HandleDecomposition result;
  result.initial_cycle = shortest_cycle(d);
  std::vector<char> in_set(d.order(), 0);
  int covered = 0;
  for (int v : result.initial_cycle) {
    in_set[v] = 1;
    ++covered;
  }
  while (covered < d.order()) {
    Handle h = shortest_handle(d, in_set);
    for (int v : h.interior) {
      in_set[v] = 1;
      ++covered;
    }
    result.handles.push_back(std::move(h));
  }
  return result;
}

BranchingGalaxy branching_galaxy(const Digraph& host, int root, bool out_direction) {
  int n = host.order();
  if (root < 0 || root >= n) throw std::invalid_argument("branching root out of range");
  Branching b;
  b.root = root;
  b.out_direction = out_direction;
  b.parent.assign(n, -1);
  std::vector<int> depth(n, -1);
  std::queue<int> q;
  depth[root] = 0;
  q.push(root);
  int reached = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    const auto& nbrs = out_direction ? host.out_neighbors(u) : host.in_neighbors(u);
    for (int w : nbrs)
      if (depth[w] < 0) {
        depth[w] = depth[u] + 1;
        b.parent[w] = u;
        ++reached;
        q.push(w);
      }
  }
  if (reached != n)
    throw std::invalid_argument(out_direction
                                    ? "root does not reach every vertex of the host"
                                    : "root is not reached from every vertex of the host");

  std::vector<int> alive_children(n, 0);
  for (int v = 0; v < n; ++v)
    if (v != root) ++alive_children[b.parent[v]];
  std::vector<char> alive(n, 1);
  int alive_count = n;

  BranchingGalaxy result;
  result.branching = b;
  while (true) {
    if (alive_count == 0) {
      result.verdict = BranchingVerdict::Winning;
      break;
    }
    if (alive_count == 1 && alive[root]) {
      result.verdict = BranchingVerdict::Losing;
      break;
    }
    // Deepest alive leaf, smallest id on ties.
    int leaf = -1;
    for (int v = 0; v < n; ++v)
      if (alive[v] && alive_children[v] == 0 && (leaf < 0 || depth[v] > depth[leaf]))
        leaf = v;
    int p = b.parent[leaf];
    Star star;
    star.root = p;
    star.out_star = out_direction;
    for (int v = 0; v < n; ++v)
      if (alive[v] && v != root && b.parent[v] == p) star.leaves.push_back(v);
    alive[p] = 0;
    --alive_count;
    if (p != root) --alive_children[b.parent[p]];
    for (int v : star.leaves) {
      alive[v] = 0;
      --alive_count;
    }
    result.stars.push_back(std::move(star));
  }
  return result;
}

}  // namespace bipart
