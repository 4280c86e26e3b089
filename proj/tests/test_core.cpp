#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "bipart/core.hpp"
#include "bipart/gadgets.hpp"
#include "bipart/random.hpp"
#include "support.hpp"

using namespace bipart;
namespace ts = testsupport;

TEST_CASE("digraph construction collapses duplicates and rejects loops") {
  Digraph d(3, {{0, 1}, {0, 1}, {1, 0}, {1, 2}});
  CHECK(d.arc_count() == 3);
  CHECK(d.has_arc(0, 1));
  CHECK(d.has_arc(1, 0));
  CHECK(!d.has_arc(2, 1));
  CHECK_THROWS_AS(Digraph(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Digraph(2, {{0, 2}}), std::invalid_argument);
  CHECK(d.neighbors(0) == std::vector<int>{1});
  CHECK(d.neighbors(1) == std::vector<int>{0, 2});
}

TEST_CASE("graph construction") {
  Graph g(4, {{0, 1}, {1, 0}, {2, 3}});
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(1, 0));
  CHECK(!g.connected());
  CHECK(Graph(3, {{0, 1}, {1, 2}}).connected());
  CHECK_THROWS_AS(Graph(2, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("strong components: single vertex") {
  SccResult r = strong_components(Digraph(1));
  CHECK(r.components.size() == 1);
  CHECK(r.condensation.order() == 1);
  CHECK(r.condensation.arc_count() == 0);
}

TEST_CASE("strong components: 2-cycle is one component") {
  SccResult r = strong_components(Digraph(2, {{0, 1}, {1, 0}}));
  CHECK(r.components.size() == 1);
  CHECK(r.components[0] == std::vector<int>{0, 1});
}

TEST_CASE("strong components: path has three components and a 2-arc condensation path") {
  SccResult r = strong_components(Digraph(3, {{0, 1}, {1, 2}}));
  CHECK(r.components.size() == 3);
  CHECK(r.condensation.arc_count() == 2);
  // Reverse topological order: every condensation arc goes to a lower index.
  for (auto [u, v] : r.condensation.arcs()) CHECK(u > v);
  CHECK(r.component_of[0] != r.component_of[1]);
}

TEST_CASE("condensation is acyclic and contraction reproduces its arcs exactly") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + rng.below(7);
    Digraph d = random_digraph(rng, n, 0.3);
    SccResult r = strong_components(d);
    for (const auto& comp : r.components)
      CHECK(ts::ref_strong(static_cast<int>(comp.size()),
                           induced_subdigraph(d, comp).graph.arcs()));
    std::set<std::pair<int, int>> contracted;
    for (auto [u, v] : d.arcs()) {
      int cu = r.component_of[u], cv = r.component_of[v];
      if (cu != cv) contracted.insert({cu, cv});
    }
    std::set<std::pair<int, int>> cond;
    for (auto [u, v] : r.condensation.arcs()) {
      CHECK(u > v);  // acyclic by index order
      cond.insert({u, v});
    }
    CHECK(contracted == cond);
  }
}

TEST_CASE("edge connectivity examples") {
  CHECK(edge_connectivity(Graph(2, {{0, 1}})) == 1);
  CHECK(edge_connectivity(Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})) == 2);
  Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  // Independent oracle: enumerate all edge subsets and find the smallest
  // whose removal disconnects K4.
  auto edges = k4.edges();
  int best = static_cast<int>(edges.size());
  for (uint64_t mask = 0; mask < (1ull << edges.size()); ++mask) {
    std::vector<std::pair<int, int>> kept;
    for (size_t i = 0; i < edges.size(); ++i)
      if (!(mask >> i & 1)) kept.push_back(edges[i]);
    std::vector<std::pair<int, int>> sym = kept;
    for (auto [u, v] : kept) sym.emplace_back(v, u);
    if (!ts::ref_underlying_connected(4, sym))
      best = std::min<int>(best, static_cast<int>(__builtin_popcountll(mask)));
  }
  CHECK(best == 3);
  CHECK(edge_connectivity(k4) == 3);
  CHECK(edge_connectivity(Graph(4, {{0, 1}, {2, 3}})) == 0);
  CHECK_THROWS_AS(edge_connectivity(Graph(1)), std::invalid_argument);
}

TEST_CASE("is_k_strong small cases and convention") {
  CHECK(is_k_strong(Digraph(2, {{0, 1}, {1, 0}}), 1));
  CHECK(!is_k_strong(Digraph(3, {{0, 1}, {1, 2}, {2, 0}}), 2));
  CHECK(!is_k_strong(Digraph(2, {{0, 1}, {1, 0}}), 2));  // n <= k
  LabeledDigraph g2 = gadget_gr(Digraph(2), {0, 1});
  CHECK(g2.digraph.order() == 6);
  CHECK(is_k_strong(g2.digraph, 2));
}

namespace {

bool ref_k_strong(const Digraph& d, int k) {
  int n = d.order();
  if (n <= k) return false;
  for (uint64_t mask = 0; mask < (1ull << n); ++mask) {
    if (__builtin_popcountll(mask) >= k) continue;
    std::vector<int> kept;
    for (int v = 0; v < n; ++v)
      if (!(mask >> v & 1)) kept.push_back(v);
    auto sub = induced_subdigraph(d, kept);
    if (!ts::ref_strong(sub.graph.order(), sub.graph.arcs())) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("is_k_strong agrees with deletion plus reachability exhaustively up to n = 3") {
  for (int n = 1; n <= 3; ++n)
    for (uint64_t mask = 0; mask < (1ull << ts::digraph_arc_slots(n)); ++mask) {
      Digraph d = ts::digraph_from_mask(n, mask);
      for (int k = 1; k <= 3; ++k) CHECK(is_k_strong(d, k) == ref_k_strong(d, k));
    }
}

TEST_CASE("is_k_strong agrees with deletion plus reachability") {
  Rng rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 2 + rng.below(6);
    Digraph d = random_digraph(rng, n, 0.45);
    for (int k = 1; k <= 3; ++k) {
      bool expected = n > k;
      if (expected) {
        // Every deletion of fewer than k vertices must leave a strong digraph.
        for (uint64_t mask = 0; mask < (1ull << n) && expected; ++mask) {
          if (__builtin_popcountll(mask) >= k) continue;
          std::vector<int> kept;
          for (int v = 0; v < n; ++v)
            if (!(mask >> v & 1)) kept.push_back(v);
          auto sub = induced_subdigraph(d, kept);
          expected = ts::ref_strong(sub.graph.order(), sub.graph.arcs());
        }
      }
      CHECK(is_k_strong(d, k) == expected);
    }
  }
}

TEST_CASE("is_eulerian examples") {
  CHECK(is_eulerian(Digraph(2, {{0, 1}, {1, 0}})));
  CHECK(!is_eulerian(Digraph(2, {{0, 1}})));
  CHECK(is_eulerian(Digraph(1)));
  CHECK(!is_eulerian(Digraph(3, {{0, 1}, {1, 0}})));  // isolated vertex
  LabeledDigraph d2 = eulerian_counterexample(2);
  for (int v = 0; v < d2.digraph.order(); ++v)
    CHECK(d2.digraph.out_degree(v) == d2.digraph.in_degree(v));
  CHECK(is_eulerian(d2.digraph));
}

TEST_CASE("find_even_cycle examples") {
  auto two = find_even_cycle(Digraph(2, {{0, 1}, {1, 0}}));
  REQUIRE(two.has_value());
  CHECK(two->size() == 2);
  CHECK(!find_even_cycle(Digraph(3, {{0, 1}, {1, 2}, {2, 0}})).has_value());
  // Triangle plus a chord that closes a 2-cycle: the 2-cycle is returned.
  auto chord = find_even_cycle(Digraph(3, {{0, 1}, {1, 2}, {2, 0}, {1, 0}}));
  REQUIRE(chord.has_value());
  CHECK(*chord == std::vector<int>{0, 1});
  CHECK_THROWS_AS(find_even_cycle(Digraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), 2),
                  ResourceExceededError);
}

TEST_CASE("find_even_cycle returns genuine even cycles on random digraphs") {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + rng.below(6);
    Digraph d = random_digraph(rng, n, 0.3);
    auto cycle = find_even_cycle(d);
    if (!cycle) continue;
    CHECK(cycle->size() % 2 == 0);
    for (size_t i = 0; i < cycle->size(); ++i)
      CHECK(d.has_arc((*cycle)[i], (*cycle)[(i + 1) % cycle->size()]));
    std::set<int> distinct(cycle->begin(), cycle->end());
    CHECK(distinct.size() == cycle->size());
  }
}

TEST_CASE("handle decomposition examples") {
  // C4 is its own shortest cycle, no handles.
  HandleDecomposition c4 = handle_decomposition(Digraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
  CHECK(c4.initial_cycle == std::vector<int>{0, 1, 2, 3});
  CHECK(c4.handles.empty());

  // 2-cycle {0,1} plus w=2 with arcs 1->2, 2->0: one handle (1, [2], 0).
  HandleDecomposition h =
      handle_decomposition(Digraph(3, {{0, 1}, {1, 0}, {1, 2}, {2, 0}}));
  CHECK(h.initial_cycle == std::vector<int>{0, 1});
  REQUIRE(h.handles.size() == 1);
  CHECK(h.handles[0].entry == 1);
  CHECK(h.handles[0].interior == std::vector<int>{2});
  CHECK(h.handles[0].exit == 0);
  CHECK(h.handles[0].length() == 2);

  // Complete digraph on 3 vertices: initial 2-cycle, one handle of length 2.
  HandleDecomposition k3 =
      handle_decomposition(Digraph(3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}}));
  CHECK(k3.initial_cycle == std::vector<int>{0, 1});
  REQUIRE(k3.handles.size() == 1);
  CHECK(k3.handles[0].length() == 2);

  CHECK_THROWS_AS(handle_decomposition(Digraph(2, {{0, 1}})), std::invalid_argument);
  CHECK_THROWS_AS(handle_decomposition(Digraph(1)), std::invalid_argument);
}

TEST_CASE("handle decomposition spans and stays disjoint on random strong digraphs") {
  Rng rng(33);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 2 + rng.below(7);
    Digraph d = random_strong_digraph(rng, n, 0.3, true);
    HandleDecomposition hd = handle_decomposition(d);
    std::set<int> seen(hd.initial_cycle.begin(), hd.initial_cycle.end());
    CHECK(seen.size() == hd.initial_cycle.size());
    size_t total = hd.initial_cycle.size();
    for (size_t i = 0; i < hd.initial_cycle.size(); ++i)
      CHECK(d.has_arc(hd.initial_cycle[i], hd.initial_cycle[(i + 1) % hd.initial_cycle.size()]));
    for (const Handle& h : hd.handles) {
      CHECK(h.interior.size() >= 1);
      CHECK(seen.count(h.entry));
      int prev = h.entry;
      for (int v : h.interior) {
        CHECK(d.has_arc(prev, v));
        CHECK(!seen.count(v));
        seen.insert(v);
        prev = v;
      }
      CHECK(d.has_arc(prev, h.exit));
      CHECK(seen.count(h.exit));
      total += h.interior.size();
    }
    CHECK(static_cast<int>(total) == n);
    CHECK(static_cast<int>(seen.size()) == n);
  }
}

TEST_CASE("branching galaxy examples") {
  BranchingGalaxy single = branching_galaxy(Digraph(2, {{0, 1}}), 0, true);
  CHECK(single.verdict == BranchingVerdict::Winning);
  REQUIRE(single.stars.size() == 1);
  CHECK(single.stars[0].root == 0);
  CHECK(single.stars[0].leaves == std::vector<int>{1});

  BranchingGalaxy path = branching_galaxy(Digraph(3, {{0, 1}, {1, 2}}), 0, true);
  CHECK(path.verdict == BranchingVerdict::Losing);
  REQUIRE(path.stars.size() == 1);
  CHECK(path.stars[0].root == 1);
  CHECK(path.stars[0].leaves == std::vector<int>{2});

  BranchingGalaxy star = branching_galaxy(Digraph(4, {{0, 1}, {0, 2}, {0, 3}}), 0, true);
  CHECK(star.verdict == BranchingVerdict::Winning);
  REQUIRE(star.stars.size() == 1);
  CHECK(star.stars[0].root == 0);
  CHECK(star.stars[0].leaves == std::vector<int>{1, 2, 3});

  CHECK_THROWS_AS(branching_galaxy(Digraph(2), 0, true), std::invalid_argument);
}

TEST_CASE("branching galaxy stars partition the host and respect domination") {
  Rng rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 1 + rng.below(8);
    Digraph d = random_strong_digraph(rng, n, 0.3, true);
    for (bool out : {true, false}) {
      int root = trial % n;
      BranchingGalaxy bg = branching_galaxy(d, root, out);
      std::set<int> covered;
      for (const Star& s : bg.stars) {
        CHECK(!s.leaves.empty());
        CHECK(!covered.count(s.root));
        covered.insert(s.root);
        for (int leaf : s.leaves) {
          CHECK(!covered.count(leaf));
          covered.insert(leaf);
          CHECK((out ? d.has_arc(s.root, leaf) : d.has_arc(leaf, s.root)));
        }
      }
      if (bg.verdict == BranchingVerdict::Winning)
        CHECK(static_cast<int>(covered.size()) == n);
      else {
        CHECK(static_cast<int>(covered.size()) == n - 1);
        CHECK(!covered.count(root));
      }
    }
  }
}

TEST_CASE("bipartite subdigraph keeps exactly the crossing arcs") {
  Digraph two(2, {{0, 1}, {1, 0}});
  CHECK(bipartite_subdigraph(two, TwoPartition({1, 2})).arc_count() == 2);
  CHECK(bipartite_subdigraph(two, TwoPartition({1, 1})).arc_count() == 0);
  Digraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(bipartite_subdigraph(c4, TwoPartition({1, 2, 1, 2})).arc_count() == 4);

  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + rng.below(7);
    Digraph d = random_digraph(rng, n, 0.4);
    std::vector<int> colors(n);
    for (int v = 0; v < n; ++v) colors[v] = 1 + rng.below(2);
    TwoPartition p(colors);
    Digraph b = bipartite_subdigraph(d, p);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (u == v) continue;
        bool expected = d.has_arc(u, v) && colors[u] != colors[v];
        CHECK(b.has_arc(u, v) == expected);
      }
  }
}

TEST_CASE("cycle factor examples and exhaustive agreement up to n = 5") {
  CHECK(has_cycle_factor(Digraph(2, {{0, 1}, {1, 0}})));
  CHECK(!has_cycle_factor(Digraph(2, {{0, 1}})));
  Digraph c4_plus(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 4}});
  CHECK(has_cycle_factor(c4_plus));

  for (int n = 1; n <= 5; ++n) {
    long long disagreements = 0;
    for (uint64_t mask = 0; mask < (1ull << ts::digraph_arc_slots(n)); ++mask) {
      Digraph d = ts::digraph_from_mask(n, mask);
      std::vector<std::vector<char>> arc(n, std::vector<char>(n, 0));
      for (auto [u, v] : d.arcs()) arc[u][v] = 1;
      std::vector<char> used(n, 0);
      if (has_cycle_factor(d) != ts::ref_cycle_factor_search(arc, n, 0, used)) ++disagreements;
    }
    CHECK(disagreements == 0);
  }
}
