#include "bipart/directed.hpp"

#include <algorithm>
#include <set>

namespace bipart {

std::vector<int> Nebula::covered_vertices() const {
  std::vector<int> vs;
  for (const Star& s : stars) {
    vs.push_back(s.root);
    vs.insert(vs.end(), s.leaves.begin(), s.leaves.end());
  }
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
    throw std::invalid_argument("nebula stars are not vertex-disjoint");
  return vs;
}

namespace {

/// Mutable adjacency used while applying Rule A.
struct WorkingDigraph {
  std::vector<std::set<int>> out, in;
  std::vector<char> alive;

  explicit WorkingDigraph(const Digraph& d)
      : out(d.order()), in(d.order()), alive(d.order(), 1) {
    for (auto [u, v] : d.arcs()) {
      out[u].insert(v);
      in[v].insert(u);
    }
  }

  void remove_vertex(int v) {
    for (int u : in[v]) out[u].erase(v);
    for (int w : out[v]) in[w].erase(v);
    in[v].clear();
    out[v].clear();
    alive[v] = 0;
  }

  void add_arc(int u, int v) {
    out[u].insert(v);
    in[v].insert(u);
  }

  ReducedDigraph finish(ReductionTrace trace) const {
    std::vector<int> ids;
    for (int v = 0; v < static_cast<int>(alive.size()); ++v)
      if (alive[v]) ids.push_back(v);
    std::vector<int> index(alive.size(), -1);
    for (int i = 0; i < static_cast<int>(ids.size()); ++i) index[ids[i]] = i;
    std::vector<std::pair<int, int>> arcs;
    for (int u : ids)
      for (int v : out[u]) arcs.emplace_back(index[u], index[v]);
    return {Digraph(static_cast<int>(ids.size()), arcs), std::move(ids), std::move(trace)};
  }

  void apply(const ReductionStep& step) {
    remove_vertex(step.x);
    remove_vertex(step.y);
    for (auto [u, w] : step.shortcuts) add_arc(u, w);
  }
};

ReductionStep make_step(const WorkingDigraph& g, int x, int y) {
  ReductionStep step;
  step.x = x;
  step.y = y;
  step.in_of_x.assign(g.in[x].begin(), g.in[x].end());
  step.out_of_y.assign(g.out[y].begin(), g.out[y].end());
  for (int u : step.in_of_x) {
    if (u == x || u == y) continue;
    for (int w : step.out_of_y) {
      if (w == x || w == y || u == w) continue;
      if (!g.out[u].count(w)) step.shortcuts.emplace_back(u, w);
    }
  }
  return step;
}

}  // namespace

ReducedDigraph rule_a_reduce(const Digraph& d) {
  WorkingDigraph g(d);
  ReductionTrace trace;
  while (true) {
    int x = -1, y = -1;
    for (int v = 0; v < d.order() && x < 0; ++v) {
      if (!g.alive[v] || g.out[v].size() != 1) continue;
      int w = *g.out[v].begin();
      // The arc must not close a 2-cycle: deleting both ends of an x <-> y
      // pair can strand a vertex whose only cross support they were, and a
      // strong digraph containing a 2-cycle always has a partition anyway.
      if (g.in[w].size() == 1 && !g.out[w].count(v)) {
        x = v;
        y = w;
      }
    }
    if (x < 0) break;
    ReductionStep step = make_step(g, x, y);
    g.apply(step);
    trace.steps.push_back(std::move(step));
  }
  return g.finish(std::move(trace));
}

ReducedDigraph replay_reduction(const Digraph& d, const ReductionTrace& trace, int steps) {
  WorkingDigraph g(d);
  int limit = steps < 0 ? static_cast<int>(trace.steps.size()) : steps;
  if (limit > static_cast<int>(trace.steps.size()))
    throw std::invalid_argument("replay asks for more steps than the trace has");
  ReductionTrace prefix;
  for (int i = 0; i < limit; ++i) {
    g.apply(trace.steps[i]);
    prefix.steps.push_back(trace.steps[i]);
  }
  return g.finish(std::move(prefix));
}

void lift_coloring(const ReductionStep& step, std::map<int, int>& coloring) {
  if (coloring.count(step.x) || coloring.count(step.y))
    throw std::invalid_argument("lift_coloring: reduced endpoints already coloured");
  for (auto [v, c] : coloring)
    if (c != 1 && c != 2)
      throw std::invalid_argument("lift_coloring: colouring values must be 1 or 2");
  bool in_has_1 = false, out_has_2 = false;
  for (int u : step.in_of_x) {
    auto it = coloring.find(u);
    in_has_1 = in_has_1 || (it != coloring.end() && it->second == 1);
  }
  for (int v : step.out_of_y) {
    auto it = coloring.find(v);
    out_has_2 = out_has_2 || (it != coloring.end() && it->second == 2);
  }
  if (in_has_1 && out_has_2) {
    coloring[step.x] = 2;
    coloring[step.y] = 1;
  } else {
    coloring[step.x] = 1;
    coloring[step.y] = 2;
  }
}

Certificate outdeg11_decide(const Digraph& d, long long even_cycle_budget) {
  const PartitionSpec spec = PartitionSpec::out_out(1, 1);
  int n = d.order();
  if (n == 0) return yes_certificate(Instance{d}, spec, TwoPartition(std::vector<int>{}));
  for (int v = 0; v < n; ++v)
    if (d.out_degree(v) == 0)
      return no_certificate("sink-exists: vertex " + std::to_string(v));

  SccResult scc = strong_components(d);
  std::vector<int> colors(n, 0);
  std::vector<std::string> trace;
  for (int ci = 0; ci < static_cast<int>(scc.components.size()); ++ci) {
    if (scc.condensation.out_degree(ci) > 0) continue;  // not terminal
    InducedSubdigraph sub = induced_subdigraph(d, scc.components[ci]);
    auto cycle = find_even_cycle(sub.graph, even_cycle_budget);
    if (!cycle)
      return no_certificate("no even directed cycle in terminal strong component containing vertex " +
                            std::to_string(scc.components[ci].front()));
    std::string line = "terminal component cycle:";
    for (size_t j = 0; j < cycle->size(); ++j) {
      int v = sub.vertex_ids[(*cycle)[j]];
      colors[v] = j % 2 == 0 ? 1 : 2;
      line += " " + std::to_string(v);
    }
    trace.push_back(std::move(line));
  }
  // Every vertex reaches a terminal component, so colouring uncoloured
  // vertices opposite to a coloured out-neighbour exhausts V.
  while (true) {
    int pick = -1, via = -1;
    for (int v = 0; v < n && pick < 0; ++v) {
      if (colors[v] != 0) continue;
      for (int u : d.out_neighbors(v))
        if (colors[u] != 0) {
          pick = v;
          via = u;
          break;
        }
    }
    if (pick < 0) break;
    colors[pick] = 3 - colors[via];
  }
  for (int v = 0; v < n; ++v)
    if (colors[v] == 0) throw std::logic_error("outdeg11 colouring did not exhaust V");
  return yes_certificate(Instance{d}, spec, TwoPartition(std::move(colors)), std::move(trace));
}

Certificate inout11_strong_decide(const Digraph& d, const Budget& budget) {
  const PartitionSpec spec = PartitionSpec::out_in(1, 1);
  if (!is_strong(d))
    throw std::invalid_argument("inout11_strong_decide requires a strong digraph");
  ReducedDigraph red = rule_a_reduce(d);
  std::vector<std::string> trace = {"rule-a steps: " + std::to_string(red.trace.steps.size()),
                                    "residue order: " + std::to_string(red.graph.order())};
  for (const ReductionStep& s : red.trace.steps)
    trace.push_back("reduced arc (" + std::to_string(s.x) + ", " + std::to_string(s.y) + ")");
  if (red.graph.order() == 1) return no_certificate("reduced-to-single-vertex", std::move(trace));

  Certificate residue_cert;
  try {
    residue_cert = exact_decide(red.graph, spec, budget);
  } catch (const ResourceExceededError&) {
    Certificate c;
    c.yes = true;
    c.reason = "witness omitted: resource";
    c.trace = std::move(trace);
    return c;
  }
  if (!residue_cert.yes)
    throw std::logic_error("irreducible strong residue of order >= 2 must admit a partition");
  std::map<int, int> coloring;
  for (int i = 0; i < red.graph.order(); ++i)
    coloring[red.vertex_ids[i]] = residue_cert.witness->color_of(i);
  for (auto it = red.trace.steps.rbegin(); it != red.trace.steps.rend(); ++it)
    lift_coloring(*it, coloring);
  std::vector<int> colors(d.order());
  for (int v = 0; v < d.order(); ++v) {
    auto it = coloring.find(v);
    if (it == coloring.end()) throw std::logic_error("lifted colouring misses a vertex");
    colors[v] = it->second;
  }
  return yes_certificate(Instance{d}, spec, TwoPartition(std::move(colors)), std::move(trace));
}

Nebula partition_to_nebula(const Digraph& d, const TwoPartition& p) {
  if (!check_partition(d, PartitionSpec::out_in(1, 1), p).empty())
    throw std::invalid_argument("partition_to_nebula needs a valid OUT_IN(1,1) partition");
  int n = d.order();
  // Work inside the spanning subdigraph of arcs from V1 to V2.
  std::vector<std::vector<int>> out(n), in(n);
  for (auto [u, v] : d.arcs())
    if (p.color_of(u) == 1 && p.color_of(v) == 2) {
      out[u].push_back(v);
      in[v].push_back(u);
    }
  std::vector<char> alive(n, 1);
  int alive_count = n;
  Nebula nebula;

  auto alive_out = [&](int v) {
    std::vector<int> r;
    for (int w : out[v])
      if (alive[w]) r.push_back(w);
    return r;
  };
  auto alive_in = [&](int v) {
    std::vector<int> r;
    for (int w : in[v])
      if (alive[w]) r.push_back(w);
    return r;
  };

  while (alive_count > 0) {
    int v1 = -1, v2 = -1;
    for (int u = 0; u < n && v1 < 0; ++u) {
      if (!alive[u] || p.color_of(u) != 1) continue;
      for (int w : out[u])
        if (alive[w]) {
          v1 = u;
          v2 = w;
          break;
        }
    }
    if (v1 < 0) throw std::logic_error("no arc left although vertices remain");

    // Would removing just {v1, v2} keep the rest valid?
    bool broken = false;
    for (int w = 0; w < n && !broken; ++w) {
      if (!alive[w] || w == v1 || w == v2) continue;
      if (p.color_of(w) == 1) {
        auto outs = alive_out(w);
        broken = outs.empty() || (outs.size() == 1 && outs[0] == v2);
      } else {
        auto ins = alive_in(w);
        broken = ins.empty() || (ins.size() == 1 && ins[0] == v1);
      }
    }
    if (!broken) {
      nebula.stars.push_back({v1, {v2}, true});
      alive[v1] = alive[v2] = 0;
      alive_count -= 2;
      continue;
    }
    // Absorb the dependent set into one star.
    std::vector<int> dependent2;  // alive V2 vertices whose only in-neighbour is v1
    for (int w = 0; w < n; ++w) {
      if (!alive[w] || p.color_of(w) != 2) continue;
      auto ins = alive_in(w);
      if (ins.size() == 1 && ins[0] == v1) dependent2.push_back(w);
    }
    bool dependent2_beyond_v2 =
        std::any_of(dependent2.begin(), dependent2.end(), [&](int w) { return w != v2; });
    if (dependent2_beyond_v2) {
      nebula.stars.push_back({v1, dependent2, true});
      alive[v1] = 0;
      --alive_count;
      for (int w : dependent2) {
        alive[w] = 0;
        --alive_count;
      }
      continue;
    }
    std::vector<int> dependent1;  // alive V1 vertices whose only out-neighbour is v2
    for (int w = 0; w < n; ++w) {
      if (!alive[w] || p.color_of(w) != 1) continue;
      auto outs = alive_out(w);
      if (outs.size() == 1 && outs[0] == v2) dependent1.push_back(w);
    }
    if (std::none_of(dependent1.begin(), dependent1.end(), [&](int w) { return w != v1; }))
      throw std::logic_error("peeling found no dependent set although removal breaks validity");
    nebula.stars.push_back({v2, dependent1, false});
    alive[v2] = 0;
    --alive_count;
    for (int w : dependent1) {
      alive[w] = 0;
      --alive_count;
    }
  }
  return nebula;
}

TwoPartition nebula_to_partition(const Digraph& d, const Nebula& n) {
  std::vector<int> colors(d.order(), 0);
  auto set_color = [&](int v, int c) {
    if (v < 0 || v >= d.order()) throw std::invalid_argument("nebula vertex out of range");
    if (colors[v] != 0) throw std::invalid_argument("nebula stars overlap at vertex " + std::to_string(v));
    colors[v] = c;
  };
  for (const Star& s : n.stars) {
    if (s.leaves.empty()) throw std::invalid_argument("trivial star in nebula");
    set_color(s.root, s.out_star ? 1 : 2);
    for (int leaf : s.leaves) {
      if (s.out_star && !d.has_arc(s.root, leaf))
        throw std::invalid_argument("out-star root does not dominate leaf");
      if (!s.out_star && !d.has_arc(leaf, s.root))
        throw std::invalid_argument("in-star root is not dominated by leaf");
      set_color(leaf, s.out_star ? 2 : 1);
    }
  }
  for (int v = 0; v < d.order(); ++v)
    if (colors[v] == 0)
      throw std::invalid_argument("nebula does not span vertex " + std::to_string(v));
  TwoPartition p(std::move(colors));
  if (!check_partition(d, PartitionSpec::out_in(1, 1), p).empty())
    throw std::logic_error("nebula colouring failed validation");
  return p;
}

namespace {

void color_galaxy_stars(const std::vector<Star>& stars, const std::vector<int>& to_global,
                        std::vector<int>& colors) {
  auto set_color = [&](int v, int c) {
    if (colors[v] != 0 && colors[v] != c)
      throw std::logic_error("conflicting colours in condensation extension");
    colors[v] = c;
  };
  for (const Star& s : stars) {
    set_color(to_global[s.root], s.out_star ? 1 : 2);
    for (int leaf : s.leaves) set_color(to_global[leaf], s.out_star ? 2 : 1);
  }
}

}  // namespace

TwoPartition condensation_extend(const Digraph& d, const Nebula& condensation_nebula) {
  SccResult scc = strong_components(d);
  int m = static_cast<int>(scc.components.size());
  std::vector<int> covered = condensation_nebula.covered_vertices();
  if (static_cast<int>(covered.size()) != m)
    throw std::invalid_argument("nebula does not span the condensation");
  for (int i = 0; i < m; ++i)
    if (covered[i] != i) throw std::invalid_argument("nebula does not span the condensation");

  std::vector<int> colors(d.order(), 0);
  for (const Star& star : condensation_nebula.stars) {
    if (star.leaves.empty()) throw std::invalid_argument("trivial star in condensation nebula");
    for (int leaf : star.leaves) {
      bool arc_ok = star.out_star ? scc.condensation.has_arc(star.root, leaf)
                                  : scc.condensation.has_arc(leaf, star.root);
      if (!arc_ok)
        throw std::invalid_argument("condensation lacks the arc required by a nebula star");
    }
    std::vector<char> in_leaf_comp(m, 0);
    for (int leaf : star.leaves) in_leaf_comp[leaf] = 1;

    // First arc between the root component and a leaf component, in the
    // star's direction; it selects the distinguished leaf component S1.
    int u = -1, v = -1, s1 = -1;
    for (auto [a, b] : d.arcs()) {
      int ca = scc.component_of[a], cb = scc.component_of[b];
      bool match = star.out_star ? (ca == star.root && in_leaf_comp[cb])
                                 : (in_leaf_comp[ca] && cb == star.root);
      if (match) {
        if (star.out_star) {
          u = a;
          v = b;
          s1 = cb;
        } else {
          v = a;
          u = b;
          s1 = ca;
        }
        break;
      }
    }
    if (u < 0) throw std::logic_error("no arc between root and leaf components");

    // Star-respecting cluster minus (S1 - v): component-internal arcs plus
    // arcs between the root component and the leaf components in the star's
    // direction. Extra condensation arcs among leaves are dropped so that v
    // is an endpoint of the branching, which makes it winning.
    std::vector<int> cluster_vertices;
    for (int w : scc.components[star.root]) cluster_vertices.push_back(w);
    for (int leaf : star.leaves)
      for (int w : scc.components[leaf])
        if (leaf != s1 || w == v) cluster_vertices.push_back(w);
    std::sort(cluster_vertices.begin(), cluster_vertices.end());
    std::vector<int> local_index(d.order(), -1);
    for (int i = 0; i < static_cast<int>(cluster_vertices.size()); ++i)
      local_index[cluster_vertices[i]] = i;
    std::vector<std::pair<int, int>> arcs;
    for (auto [a, b] : d.arcs()) {
      if (local_index[a] < 0 || local_index[b] < 0) continue;
      int ca = scc.component_of[a], cb = scc.component_of[b];
      bool keep = ca == cb || (star.out_star ? (ca == star.root && in_leaf_comp[cb])
                                             : (in_leaf_comp[ca] && cb == star.root));
      if (keep) arcs.emplace_back(local_index[a], local_index[b]);
    }
    Digraph cluster(static_cast<int>(cluster_vertices.size()), arcs);

    BranchingGalaxy bg = branching_galaxy(cluster, local_index[u], star.out_star);
    if (bg.verdict != BranchingVerdict::Winning)
      throw std::logic_error("branching over the cluster must be winning");
    color_galaxy_stars(bg.stars, cluster_vertices, colors);

    InducedSubdigraph s1_sub = induced_subdigraph(d, scc.components[s1]);
    int v_local = static_cast<int>(std::lower_bound(s1_sub.vertex_ids.begin(),
                                                    s1_sub.vertex_ids.end(), v) -
                                   s1_sub.vertex_ids.begin());
    BranchingGalaxy bg2 = branching_galaxy(s1_sub.graph, v_local, !star.out_star);
    color_galaxy_stars(bg2.stars, s1_sub.vertex_ids, colors);
    if (bg2.verdict == BranchingVerdict::Losing && colors[v] == 0)
      throw std::logic_error("distinguished leaf vertex left uncoloured");
  }

  for (int w = 0; w < d.order(); ++w)
    if (colors[w] == 0) throw std::logic_error("condensation extension left a vertex uncoloured");
  TwoPartition p(std::move(colors));
  if (!check_partition(d, PartitionSpec::out_in(1, 1), p).empty())
    throw std::logic_error("condensation extension failed validation");
  return p;
}

TwoPartition out_total_partition(const Digraph& d) {
  int n = d.order();
  for (int v = 0; v < n; ++v)
    if (d.degree(v) == 0)
      throw std::invalid_argument("isolated vertex " + std::to_string(v));
  SccResult scc = strong_components(d);
  std::vector<int> layer(n, 0);
  std::vector<int> current;
  for (int ci = 0; ci < static_cast<int>(scc.components.size()); ++ci)
    if (scc.condensation.out_degree(ci) == 0) {
      int rep = scc.components[ci].front();
      layer[rep] = 1;
      current.push_back(rep);
    }
  int depth = 1;
  while (!current.empty()) {
    std::vector<int> next;
    for (int u : current)
      for (int w : d.in_neighbors(u))
        if (layer[w] == 0) {
          layer[w] = depth + 1;
          next.push_back(w);
        }
    current = std::move(next);
    ++depth;
  }
  std::vector<int> colors(n);
  for (int v = 0; v < n; ++v) {
    if (layer[v] == 0) throw std::logic_error("layering missed a vertex");
    colors[v] = layer[v] % 2 == 1 ? 2 : 1;
  }
  TwoPartition p(std::move(colors));
  if (!check_partition(d, PartitionSpec::out_total(1, 1), p).empty())
    throw std::logic_error("out-total layering failed validation");
  return p;
}

}  // namespace bipart
