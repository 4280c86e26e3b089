#include "bipart/gadgets.hpp"

#include <algorithm>

namespace bipart {

namespace {

void add_all_edges(std::vector<std::pair<int, int>>& edges, const std::vector<int>& a,
                   const std::vector<int>& b) {
  for (int u : a)
    for (int v : b) edges.emplace_back(u, v);
}

std::vector<int> block_range(int base, int count) {
  std::vector<int> ids(count);
  for (int i = 0; i < count; ++i) ids[i] = base + i;
  return ids;
}

int literal_vertex(int lit, int block_size, int x_offset, int xbar_offset) {
  int var = std::abs(lit) - 1;
  return var * block_size + (lit > 0 ? x_offset : xbar_offset);
}

}  // namespace

LabeledGraph und_nae_instance(const CnfFormula& f, int k1, int k2) {
  f.validate();
  if (k1 < 2 || k1 > k2) throw std::invalid_argument("und_nae_instance requires 2 <= k1 <= k2");
  int n = f.variable_count, m = static_cast<int>(f.clauses.size());
  // Block layout (variables and clauses alike):
  //   [v, z, x, xbar, X1 (k1-1), X2 (k2-1), X3 (k2-1), X4 (k1-1)]
  const int block = 4 + 2 * (k1 - 1) + 2 * (k2 - 1);
  const int off_x1 = 4, off_x2 = off_x1 + (k1 - 1), off_x3 = off_x2 + (k2 - 1),
            off_x4 = off_x3 + (k2 - 1);
  std::vector<std::pair<int, int>> edges;
  LabelMap labels;

  auto add_xprime = [&](int base, const std::string& prefix) {
    std::vector<int> vv = {base}, zz = {base + 1}, xx = {base + 2, base + 3};
    std::vector<int> x1 = block_range(base + off_x1, k1 - 1);
    std::vector<int> x2 = block_range(base + off_x2, k2 - 1);
    std::vector<int> x3 = block_range(base + off_x3, k2 - 1);
    std::vector<int> x4 = block_range(base + off_x4, k1 - 1);
    add_all_edges(edges, vv, x1);
    add_all_edges(edges, x1, x2);
    add_all_edges(edges, x2, xx);
    add_all_edges(edges, xx, x4);
    add_all_edges(edges, x4, x3);
    add_all_edges(edges, x3, zz);
    edges.emplace_back(base, base + 1);  // vz
    labels[prefix + ".v"] = base;
    labels[prefix + ".z"] = base + 1;
    for (int t = 0; t < k1 - 1; ++t) labels[prefix + ".X1[" + std::to_string(t) + "]"] = x1[t];
    for (int t = 0; t < k2 - 1; ++t) labels[prefix + ".X2[" + std::to_string(t) + "]"] = x2[t];
    for (int t = 0; t < k2 - 1; ++t) labels[prefix + ".X3[" + std::to_string(t) + "]"] = x3[t];
    for (int t = 0; t < k1 - 1; ++t) labels[prefix + ".X4[" + std::to_string(t) + "]"] = x4[t];
  };

  for (int i = 0; i < n; ++i) {
    int base = i * block;
    add_xprime(base, "X" + std::to_string(i + 1));
    edges.emplace_back(base + 2, base + 3);  // the x-xbar edge of gadget X
    labels["x" + std::to_string(i + 1)] = base + 2;
    labels["xbar" + std::to_string(i + 1)] = base + 3;
  }
  for (int j = 0; j < m; ++j) {
    int base = (n + j) * block;
    std::string prefix = "Y" + std::to_string(j + 1);
    add_xprime(base, prefix);
    labels[prefix + ".x"] = base + 2;
    labels[prefix + ".xbar"] = base + 3;
    // The three connector vertices are identified with the literal vertices.
    for (int lit : CnfFormula::distinct_literals(f.clauses[j])) {
      int lv = literal_vertex(lit, block, 2, 3);
      edges.emplace_back(base + 2, lv);
      edges.emplace_back(base + 3, lv);
    }
  }
  return {Graph((n + m) * block, edges), std::move(labels)};
}

LabeledGraph und_1k_instance(const CnfFormula& f, int k) {
  f.validate();
  if (k < 3) throw std::invalid_argument("und_1k_instance requires k >= 3");
  int n = f.variable_count, m = static_cast<int>(f.clauses.size());
  // Core blocks: [a1, a2, x, xbar, y1, y2, b1, b2] per variable, then
  // [y, y', y''] per clause; the k > 3 lift appends cliques and pendants.
  std::vector<std::pair<int, int>> edges;
  LabelMap labels;
  for (int i = 0; i < n; ++i) {
    int base = 8 * i;
    std::string g = "G" + std::to_string(i + 1);
    std::vector<int> a = {base, base + 1}, x = {base + 2, base + 3},
                     y = {base + 4, base + 5}, b = {base + 6, base + 7};
    add_all_edges(edges, a, x);
    add_all_edges(edges, x, y);
    add_all_edges(edges, y, b);
    labels[g + ".a1"] = base;
    labels[g + ".a2"] = base + 1;
    labels["x" + std::to_string(i + 1)] = base + 2;
    labels["xbar" + std::to_string(i + 1)] = base + 3;
    labels[g + ".y1"] = base + 4;
    labels[g + ".y2"] = base + 5;
    labels[g + ".b1"] = base + 6;
    labels[g + ".b2"] = base + 7;
  }
  for (int j = 0; j < m; ++j) {
    int base = 8 * n + 3 * j;
    std::string c = "C" + std::to_string(j + 1);
    edges.emplace_back(base, base + 1);
    edges.emplace_back(base + 1, base + 2);
    edges.emplace_back(base, base + 2);
    labels[c + ".y"] = base;
    labels[c + ".y1"] = base + 1;
    labels[c + ".y2"] = base + 2;
    for (int lit : CnfFormula::distinct_literals(f.clauses[j]))
      edges.emplace_back(base, literal_vertex(lit, 8, 2, 3));
  }
  int core_order = 8 * n + 3 * m;
  for (int t = 0; t < k - 3; ++t) {
    int base = core_order + t * (k + 1);
    std::string kp = "K" + std::to_string(t + 1);
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) edges.emplace_back(base + i, base + j);
      labels[kp + "[" + std::to_string(i) + "]"] = base + i;
    }
    int pendant = base + k;
    edges.emplace_back(base, pendant);  // x_t y_t
    labels[kp + ".y"] = pendant;
    for (int v = 0; v < core_order; ++v) edges.emplace_back(pendant, v);
  }
  int order = core_order + (k - 3) * (k + 1);
  return {Graph(order, edges), std::move(labels)};
}

LabeledDigraph acyclic_inout_instance(const CnfFormula& f) {
  f.validate();
  int n = f.variable_count, m = static_cast<int>(f.clauses.size());
  std::vector<std::pair<int, int>> arcs;
  LabelMap labels;
  for (int i = 0; i < n; ++i) {
    int base = 4 * i;  // [x, xbar, y, z]
    arcs.emplace_back(base + 2, base);
    arcs.emplace_back(base + 2, base + 1);
    arcs.emplace_back(base, base + 3);
    arcs.emplace_back(base + 1, base + 3);
    labels["x" + std::to_string(i + 1)] = base;
    labels["xbar" + std::to_string(i + 1)] = base + 1;
    labels["y" + std::to_string(i + 1)] = base + 2;
    labels["z" + std::to_string(i + 1)] = base + 3;
  }
  for (int j = 0; j < m; ++j) {
    int cj = 4 * n + j;
    labels["c" + std::to_string(j + 1)] = cj;
    for (int lit : CnfFormula::distinct_literals(f.clauses[j]))
      arcs.emplace_back(literal_vertex(lit, 4, 0, 1), cj);
  }
  return {Digraph(4 * n + m, arcs), std::move(labels)};
}

namespace {

void require_w_preconditions(const CnfFormula& f) {
  f.validate();
  std::vector<bool> all_true(f.variable_count, true), all_false(f.variable_count, false);
  if (f.satisfied_by(all_true))
    throw std::invalid_argument("formula is satisfied by the all-true assignment");
  if (f.satisfied_by(all_false))
    throw std::invalid_argument("formula is satisfied by the all-false assignment");
}

void build_w_arcs(const CnfFormula& f, int a, int b, int c_base, int v_base,
                  std::vector<std::pair<int, int>>& arcs) {
  int n = f.variable_count, m = static_cast<int>(f.clauses.size());
  for (int j = 0; j < m; ++j) {
    arcs.emplace_back(a, c_base + j);
    arcs.emplace_back(c_base + j, b);
  }
  for (int i = 0; i < n; ++i) {
    arcs.emplace_back(b, v_base + i);
    arcs.emplace_back(v_base + i, a);
  }
  for (int j = 0; j < m; ++j)
    for (int lit : CnfFormula::distinct_literals(f.clauses[j])) {
      int vi = v_base + std::abs(lit) - 1;
      if (lit > 0)
        arcs.emplace_back(c_base + j, vi);
      else
        arcs.emplace_back(vi, c_base + j);
    }
}

void label_w(const CnfFormula& f, int a, int b, int c_base, int v_base,
             const std::string& prefix, LabelMap& labels) {
  labels[prefix + "a"] = a;
  labels[prefix + "b"] = b;
  for (int j = 0; j < static_cast<int>(f.clauses.size()); ++j)
    labels[prefix + "c" + std::to_string(j + 1)] = c_base + j;
  for (int i = 0; i < f.variable_count; ++i)
    labels[prefix + "v" + std::to_string(i + 1)] = v_base + i;
}

}  // namespace

LabeledDigraph w_instance(const CnfFormula& f) {
  require_w_preconditions(f);
  int n = f.variable_count, m = static_cast<int>(f.clauses.size());
  std::vector<std::pair<int, int>> arcs;
  build_w_arcs(f, 0, 1, 2, 2 + m, arcs);
  LabelMap labels;
  label_w(f, 0, 1, 2, 2 + m, "", labels);
  return {Digraph(n + m + 2, arcs), std::move(labels)};
}

WPrimeInstance w_prime_instance(const CnfFormula& f) {
  LabeledDigraph w = w_instance(f);
  int n = w.digraph.order();
  std::vector<std::pair<int, int>> arcs = w.digraph.arcs();
  arcs.emplace_back(1, n);      // bc
  arcs.emplace_back(n, n + 1);  // cd
  arcs.emplace_back(n + 1, 0);  // da
  w.labels["c"] = n;
  w.labels["d"] = n + 1;
  return {Digraph(n + 2, arcs), std::move(w.labels), n, 2};
}

LabeledDigraph pattern_instance(const Digraph& h, const CnfFormula& f, const Budget& budget) {
  require_w_preconditions(f);
  const PartitionSpec oi = PartitionSpec::out_in(1, 1);
  int hn = h.order();
  if (hn < 2) throw std::invalid_argument("pattern digraph must have order >= 2");
  if (!h.underlying_graph().connected())
    throw std::invalid_argument("pattern digraph must be connected");
  for (const auto& comp : strong_components(h).components)
    if (comp.size() > 1) throw std::invalid_argument("pattern digraph must be acyclic");
  if (exact_decide(h, oi, budget).yes)
    throw std::invalid_argument("pattern digraph admits an OUT_IN(1,1) partition");

  // Grow a maximal partitionable induced subdigraph H' from the sinks.
  std::vector<char> in_hprime(hn, 0);
  for (int v = 0; v < hn; ++v)
    if (h.out_degree(v) == 0) {
      in_hprime[v] = 1;
      for (int u : h.in_neighbors(v)) in_hprime[u] = 1;
    }
  auto hprime_vertices = [&]() {
    std::vector<int> vs;
    for (int v = 0; v < hn; ++v)
      if (in_hprime[v]) vs.push_back(v);
    return vs;
  };
  bool grew = true;
  while (grew) {
    grew = false;
    for (int v = 0; v < hn; ++v) {
      if (in_hprime[v]) continue;
      std::vector<int> vs = hprime_vertices();
      vs.push_back(v);
      if (exact_decide(induced_subdigraph(h, vs).graph, oi, budget).yes) {
        in_hprime[v] = 1;
        grew = true;
        break;
      }
    }
  }

  // First H-arc leaving the complement into H' selects x and the replaced y.
  int x = -1, y = -1;
  for (auto [a, b] : h.arcs())
    if (!in_hprime[a] && in_hprime[b]) {
      x = a;
      y = b;
      break;
    }
  if (x < 0) throw std::logic_error("no arc from the complement into H'");

  // Layout: H vertices except y in ascending order, then private triples for
  // every complement vertex other than x, then the W block.
  std::vector<int> new_id(hn, -1);
  int next = 0;
  LabelMap labels;
  for (int v = 0; v < hn; ++v)
    if (v != y) {
      new_id[v] = next++;
      labels["H." + std::to_string(v)] = new_id[v];
    }
  std::vector<std::pair<int, int>> arcs;
  for (int u = 0; u < hn; ++u) {
    if (u == y || u == x || in_hprime[u]) continue;
    int base = next;
    next += 3;
    std::string p = "H." + std::to_string(u) + ".p";
    labels[p + "1"] = base;
    labels[p + "2"] = base + 1;
    labels[p + "3"] = base + 2;
    arcs.emplace_back(base, base + 1);
    arcs.emplace_back(base + 1, base + 2);
    arcs.emplace_back(base + 2, new_id[u]);
    arcs.emplace_back(new_id[u], base);
  }
  int a = next, b = next + 1, c_base = next + 2,
      v_base = next + 2 + static_cast<int>(f.clauses.size());
  build_w_arcs(f, a, b, c_base, v_base, arcs);
  label_w(f, a, b, c_base, v_base, "W.", labels);
  next = v_base + f.variable_count;
  for (auto [u, w] : h.arcs()) {
    if (u == y)
      arcs.emplace_back(b, new_id[w]);
    else if (w == y)
      arcs.emplace_back(new_id[u], a);
    else
      arcs.emplace_back(new_id[u], new_id[w]);
  }
  return {Digraph(next, arcs), std::move(labels)};
}

CnfFormula pad_both_polarities(const CnfFormula& f) {
  f.validate();
  CnfFormula padded = f;
  std::vector<char> pos(f.variable_count, 0), neg(f.variable_count, 0);
  for (const auto& clause : f.clauses)
    for (int lit : clause) (lit > 0 ? pos : neg)[std::abs(lit) - 1] = 1;
  for (int i = 0; i < f.variable_count; ++i)
    if (!pos[i] || !neg[i]) padded.clauses.push_back({i + 1, -(i + 1), -(i + 1)});
  return padded;
}

LabeledDigraph strong_outin_k1_instance(const CnfFormula& f, int k1) {
  if (k1 < 2) throw std::invalid_argument("strong_outin_k1_instance requires k1 >= 2");
  if (f.variable_count == 0) throw std::invalid_argument("formula has no variables");
  CnfFormula padded = pad_both_polarities(f);
  int n = padded.variable_count, m = static_cast<int>(padded.clauses.size());
  // Gadget Q block: [y, v, vbar, W (k1-1), Z (k1-1)].
  const int block = 3 + 2 * (k1 - 1);
  std::vector<std::pair<int, int>> arcs;
  LabelMap labels;
  std::vector<int> all_z;
  for (int i = 0; i < n; ++i) {
    int base = i * block;
    std::string q = "Q" + std::to_string(i + 1);
    int yv = base, vv = base + 1, vb = base + 2;
    arcs.emplace_back(yv, vv);
    arcs.emplace_back(yv, vb);
    labels[q + ".y"] = yv;
    labels["v" + std::to_string(i + 1)] = vv;
    labels["vbar" + std::to_string(i + 1)] = vb;
    for (int t = 0; t < k1 - 1; ++t) {
      int w = base + 3 + t;
      arcs.emplace_back(w, yv);
      arcs.emplace_back(yv, w);
      labels[q + ".W[" + std::to_string(t) + "]"] = w;
    }
    for (int t = 0; t < k1 - 1; ++t) {
      int z = base + 3 + (k1 - 1) + t;
      arcs.emplace_back(vv, z);
      arcs.emplace_back(vb, z);
      arcs.emplace_back(z, yv);
      labels[q + ".Z[" + std::to_string(t) + "]"] = z;
      all_z.push_back(z);
    }
  }
  if (all_z.size() > 1)
    for (size_t t = 0; t < all_z.size(); ++t)
      arcs.emplace_back(all_z[t], all_z[(t + 1) % all_z.size()]);
  for (int j = 0; j < m; ++j) {
    int cj = n * block + j;
    labels["c" + std::to_string(j + 1)] = cj;
    arcs.emplace_back(cj, 0);  // c_j -> y_1
    for (int lit : padded.clauses[j]) {
      int var = std::abs(lit) - 1;
      arcs.emplace_back(var * block + (lit > 0 ? 1 : 2), cj);
    }
  }
  return {Digraph(n * block + m, arcs), std::move(labels)};
}

LabeledDigraph strong_22_instance(const CnfFormula& f) {
  if (f.variable_count == 0) throw std::invalid_argument("formula has no variables");
  CnfFormula padded = pad_both_polarities(f);
  int n = padded.variable_count, m = static_cast<int>(padded.clauses.size());
  // Gadget Q' block: [w, y, y', v, vbar, z].
  std::vector<std::pair<int, int>> arcs;
  LabelMap labels;
  for (int i = 0; i < n; ++i) {
    int base = 6 * i;
    int w = base, y = base + 1, yp = base + 2, v = base + 3, vb = base + 4, z = base + 5;
    std::string q = "Q" + std::to_string(i + 1);
    labels[q + ".w"] = w;
    labels[q + ".y"] = y;
    labels[q + ".yp"] = yp;
    labels["v" + std::to_string(i + 1)] = v;
    labels["vbar" + std::to_string(i + 1)] = vb;
    labels[q + ".z"] = z;
    arcs.emplace_back(yp, y);
    arcs.emplace_back(y, w);
    arcs.emplace_back(yp, w);
    arcs.emplace_back(w, yp);
    arcs.emplace_back(y, v);
    arcs.emplace_back(y, vb);
    arcs.emplace_back(yp, v);
    arcs.emplace_back(yp, vb);
    arcs.emplace_back(yp, z);
    arcs.emplace_back(z, y);
    arcs.emplace_back(v, z);
    arcs.emplace_back(vb, z);
  }
  if (n > 1)
    for (int i = 0; i < n; ++i) arcs.emplace_back(6 * i + 5, 6 * ((i + 1) % n) + 5);
  for (int j = 0; j < m; ++j) {
    int cj = 6 * n + j;
    labels["c" + std::to_string(j + 1)] = cj;
    arcs.emplace_back(cj, 1);  // c_j -> y_1
    arcs.emplace_back(2, cj);  // y'_1 -> c_j, guarantees one V1 in-neighbour
    for (int lit : padded.clauses[j]) {
      int var = std::abs(lit) - 1;
      arcs.emplace_back(6 * var + (lit > 0 ? 3 : 4), cj);
    }
  }
  return {Digraph(6 * n + m, arcs), std::move(labels)};
}

LabeledDigraph lift_k1k2(const Digraph& d) {
  int n = d.order();
  std::vector<std::pair<int, int>> arcs = d.arcs();
  for (int v = 0; v < n; ++v) {
    arcs.emplace_back(v, n + 1);
    arcs.emplace_back(n, v);
  }
  arcs.emplace_back(n, n + 1);
  arcs.emplace_back(n + 1, n);
  LabelMap labels = {{"x1", n}, {"x2", n + 1}};
  return {Digraph(n + 2, arcs), std::move(labels)};
}

namespace {

void append_gr(std::vector<std::pair<int, int>>& arcs, int& next, const std::vector<int>& x_set,
               const std::string& prefix, LabelMap& labels) {
  int r = static_cast<int>(x_set.size());
  std::vector<int> y = block_range(next, r), z = block_range(next + r, r);
  next += 2 * r;
  for (int t = 0; t < r; ++t) {
    labels["Y" + prefix + "[" + std::to_string(t) + "]"] = y[t];
    labels["Z" + prefix + "[" + std::to_string(t) + "]"] = z[t];
  }
  for (int a : x_set)
    for (int b : y) arcs.emplace_back(a, b);
  for (int a : y)
    for (int b : z) arcs.emplace_back(a, b);
  for (int a : z)
    for (int b : x_set) arcs.emplace_back(a, b);
}

}  // namespace

LabeledDigraph gadget_gr(const Digraph& host, const std::vector<int>& x_set) {
  if (x_set.empty()) throw std::invalid_argument("gadget_gr needs a non-empty X");
  std::vector<int> xs = x_set;
  std::sort(xs.begin(), xs.end());
  if (std::adjacent_find(xs.begin(), xs.end()) != xs.end())
    throw std::invalid_argument("gadget_gr X vertices must be distinct");
  for (int v : xs)
    if (v < 0 || v >= host.order()) throw std::invalid_argument("gadget_gr X vertex out of range");
  std::vector<std::pair<int, int>> arcs = host.arcs();
  int next = host.order();
  LabelMap labels;
  append_gr(arcs, next, xs, "", labels);
  return {Digraph(next, arcs), std::move(labels)};
}

LabeledDigraph eulerian_counterexample(int r) {
  if (r < 1) throw std::invalid_argument("eulerian_counterexample requires r >= 1");
  return eulerian_counterexample(r, Digraph(2 * r - 1));
}

LabeledDigraph eulerian_counterexample(int r, const Digraph& core) {
  if (r < 1) throw std::invalid_argument("eulerian_counterexample requires r >= 1");
  int u = 2 * r - 1;
  if (core.order() != u)
    throw std::invalid_argument("core must have exactly 2r-1 vertices");
  for (int v = 0; v < u; ++v)
    if (core.out_degree(v) != core.in_degree(v))
      throw std::invalid_argument("core must be balanced (d+ = d- everywhere)");
  std::vector<std::pair<int, int>> arcs = core.arcs();
  int next = u;
  LabelMap labels;
  for (int v = 0; v < u; ++v) labels["U[" + std::to_string(v) + "]"] = v;
  // One gadget per r-subset of the core, subsets in lexicographic order.
  std::vector<int> subset(r);
  for (int i = 0; i < r; ++i) subset[i] = i;
  while (true) {
    std::string tag = "(";
    for (int i = 0; i < r; ++i) tag += (i ? "," : "") + std::to_string(subset[i]);
    tag += ")";
    append_gr(arcs, next, subset, tag, labels);
    int i = r - 1;
    while (i >= 0 && subset[i] == u - (r - i)) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < r; ++j) subset[j] = subset[j - 1] + 1;
  }
  return {Digraph(next, arcs), std::move(labels)};
}

LabeledDigraph hypergraph_instance(const Hypergraph& h) {
  h.validate();
  if (!h.connected()) throw std::invalid_argument("hypergraph must be connected");
  std::vector<std::pair<int, int>> arcs;
  int next = h.ground_size;
  LabelMap labels;
  for (int v = 0; v < h.ground_size; ++v) labels["u" + std::to_string(v)] = v;
  for (int i = 0; i < static_cast<int>(h.edges.size()); ++i)
    append_gr(arcs, next, h.edges[i], std::to_string(i + 1), labels);
  return {Digraph(next, arcs), std::move(labels)};
}

}  // namespace bipart
