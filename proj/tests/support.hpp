#pragma once

// Test-side reference implementations. These stay independent of the library
// paths they cross-check: reachability is transitive closure over bit rows,
// cycle factors come from permutation search, and all degree constraints are
// recounted directly from the arc lists.

#include <cstdint>
#include <optional>

#include "bipart/oracle.hpp"
#include "bipart/spec.hpp"

namespace testsupport {

using bipart::CnfFormula;
using bipart::Digraph;
using bipart::Graph;
using bipart::Instance;
using bipart::PartitionSpec;
using bipart::SpecKind;
using bipart::TwoPartition;

inline std::vector<uint64_t> closure_rows(int n, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<uint64_t> row(n, 0);
  for (auto [u, v] : arcs) row[u] |= 1ull << v;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (row[i] >> k & 1) row[i] |= row[k];
  return row;
}

inline bool ref_strong(int n, const std::vector<std::pair<int, int>>& arcs) {
  if (n == 0) return false;
  if (n == 1) return true;
  auto row = closure_rows(n, arcs);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && !(row[u] >> v & 1)) return false;
  return true;
}

inline bool ref_underlying_connected(int n, const std::vector<std::pair<int, int>>& arcs) {
  if (n <= 1) return true;
  std::vector<std::pair<int, int>> sym = arcs;
  for (auto [u, v] : arcs) sym.emplace_back(v, u);
  auto row = closure_rows(n, sym);
  for (int v = 1; v < n; ++v)
    if (!(row[0] >> v & 1)) return false;
  return true;
}

inline bool ref_cycle_factor_search(const std::vector<std::vector<char>>& arc, int n, int v,
                                    std::vector<char>& used) {
  if (v == n) return true;
  for (int w = 0; w < n; ++w)
    if (arc[v][w] && !used[w]) {
      used[w] = 1;
      if (ref_cycle_factor_search(arc, n, v + 1, used)) return true;
      used[w] = 0;
    }
  return false;
}

/// Checks a full colouring against a spec by direct recount.
inline bool ref_valid(const Instance& instance, const PartitionSpec& spec,
                      const std::vector<int>& colors) {
  for (auto [v, c] : spec.pins)
    if (colors[v] != c) return false;
  if (const Graph* g = std::get_if<Graph>(&instance)) {
    int n = g->order();
    for (int v = 0; v < n; ++v) {
      int need = colors[v] == 1 ? spec.k1 : spec.k2;
      int have = 0;
      for (int u : g->neighbors(v)) have += colors[u] != colors[v] ? 1 : 0;
      if (have < need) return false;
    }
    return true;
  }
  const Digraph& d = std::get<Digraph>(instance);
  int n = d.order();
  auto cross_out = [&](int v) {
    int c = 0;
    for (int u : d.out_neighbors(v)) c += colors[u] != colors[v] ? 1 : 0;
    return c;
  };
  auto cross_in = [&](int v) {
    int c = 0;
    for (int u : d.in_neighbors(v)) c += colors[u] != colors[v] ? 1 : 0;
    return c;
  };
  switch (spec.kind) {
    case SpecKind::OutOut:
      for (int v = 0; v < n; ++v)
        if (cross_out(v) < (colors[v] == 1 ? spec.k1 : spec.k2)) return false;
      return true;
    case SpecKind::OutIn:
      for (int v = 0; v < n; ++v) {
        if (colors[v] == 1 && cross_out(v) < spec.k1) return false;
        if (colors[v] == 2 && cross_in(v) < spec.k2) return false;
      }
      return true;
    case SpecKind::OutTotal:
      for (int v = 0; v < n; ++v) {
        if (colors[v] == 1 && cross_out(v) < spec.k1) return false;
        if (colors[v] == 2) {
          int have = 0;
          for (int u : d.neighbors(v)) have += colors[u] != colors[v] ? 1 : 0;
          if (have < spec.k2) return false;
        }
      }
      return true;
    case SpecKind::StrongB: {
      std::vector<std::pair<int, int>> cross;
      for (auto [u, v] : d.arcs())
        if (colors[u] != colors[v]) cross.emplace_back(u, v);
      return ref_strong(n, cross);
    }
    case SpecKind::EulerBSemi1: {
      std::vector<std::pair<int, int>> cross;
      std::vector<int> dout(n, 0), din(n, 0);
      for (auto [u, v] : d.arcs())
        if (colors[u] != colors[v]) {
          cross.emplace_back(u, v);
          ++dout[u];
          ++din[v];
        }
      for (int v = 0; v < n; ++v)
        if (dout[v] != din[v] || dout[v] < 1) return false;
      return ref_underlying_connected(n, cross);
    }
    case SpecKind::CycleFactorB: {
      std::vector<std::vector<char>> arc(n, std::vector<char>(n, 0));
      for (auto [u, v] : d.arcs())
        if (colors[u] != colors[v]) arc[u][v] = 1;
      std::vector<char> used(n, 0);
      return ref_cycle_factor_search(arc, n, 0, used);
    }
    case SpecKind::TotalDom:
      for (int v = 0; v < n; ++v) {
        int same = 0, cross = 0;
        for (int u : d.out_neighbors(v)) (colors[u] == colors[v] ? same : cross) += 1;
        if (same < 1 || cross < 1) return false;
      }
      return true;
    case SpecKind::Und:
      return false;  // handled by the graph branch
  }
  return false;
}

struct NaiveResult {
  bool yes = false;
  std::optional<TwoPartition> witness;
};

/// Plain 2^n enumeration, no propagation. Colour of vertex v = 1 + bit v.
inline NaiveResult naive_decide(const Instance& instance, const PartitionSpec& spec) {
  int n = bipart::instance_order(instance);
  for (uint64_t bits = 0; bits < (1ull << n); ++bits) {
    std::vector<int> colors(n);
    for (int v = 0; v < n; ++v) colors[v] = 1 + ((bits >> v) & 1);
    if (ref_valid(instance, spec, colors)) return {true, TwoPartition(std::move(colors))};
  }
  return {false, std::nullopt};
}

// Enumeration of all labelled (di)graphs on n vertices via arc bitmasks.

inline int digraph_arc_slots(int n) { return n * (n - 1); }

inline Digraph digraph_from_mask(int n, uint64_t mask) {
  std::vector<std::pair<int, int>> arcs;
  int slot = 0;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      if (mask >> slot & 1) arcs.emplace_back(u, v);
      ++slot;
    }
  return Digraph(n, arcs);
}

inline int graph_edge_slots(int n) { return n * (n - 1) / 2; }

inline Graph graph_from_mask(int n, uint64_t mask) {
  std::vector<std::pair<int, int>> edges;
  int slot = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (mask >> slot & 1) edges.emplace_back(u, v);
      ++slot;
    }
  return Graph(n, edges);
}

inline CnfFormula make_formula(int variables, std::vector<std::array<int, 3>> clauses) {
  CnfFormula f;
  f.variable_count = variables;
  f.clauses = std::move(clauses);
  f.validate();
  return f;
}

}  // namespace testsupport
