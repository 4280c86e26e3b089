#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bipart/gadgets.hpp"
#include "bipart/oracle.hpp"
#include "bipart/random.hpp"
#include "support.hpp"

using namespace bipart;
namespace ts = testsupport;

namespace {

const std::vector<PartitionSpec> directed_specs = {
    PartitionSpec::out_out(1, 1), PartitionSpec::out_out(1, 2), PartitionSpec::out_out(2, 2),
    PartitionSpec::out_in(1, 1),  PartitionSpec::out_in(1, 2),  PartitionSpec::out_in(2, 2),
    PartitionSpec::out_total(1, 1), PartitionSpec::out_total(2, 1),
    PartitionSpec::strong_b(), PartitionSpec::euler_b_semi1(), PartitionSpec::cycle_factor_b(),
    PartitionSpec::total_dom()};

const std::vector<PartitionSpec> undirected_specs = {
    PartitionSpec::und(1, 1), PartitionSpec::und(1, 2), PartitionSpec::und(2, 2),
    PartitionSpec::und(0, 1)};

Hypergraph fano_plane() {
  Hypergraph h;
  h.ground_size = 7;
  h.r = 3;
  h.edges = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
  return h;
}

}  // namespace

TEST_CASE("spec parsing round trip and errors") {
  for (const char* text : {"und 1 2", "out-out 1 1", "out-in 2 1", "out-total 1 1", "strong-b",
                           "euler-b-semi1", "cyclefactor-b", "totaldom"})
    CHECK(PartitionSpec::parse(text).to_string() == text);
  CHECK_THROWS_AS(PartitionSpec::parse("und 1"), std::invalid_argument);
  CHECK_THROWS_AS(PartitionSpec::parse("strong-b 1 1"), std::invalid_argument);
  CHECK_THROWS_AS(PartitionSpec::parse("frobnicate"), std::invalid_argument);
  CHECK_THROWS_AS(PartitionSpec::parse("und -1 2"), std::invalid_argument);
}

TEST_CASE("check_partition examples") {
  Digraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(check_partition(c4, PartitionSpec::out_out(1, 1), TwoPartition({1, 2, 1, 2})).empty());
  // (V, {}) satisfies OUT_OUT(k, 0) for every digraph.
  CHECK(check_partition(c4, PartitionSpec::out_out(0, 5), TwoPartition({1, 1, 1, 1})).empty());
  Digraph arc(2, {{0, 1}});
  CHECK(check_partition(arc, PartitionSpec::out_in(1, 1), TwoPartition({1, 2})).empty());
  CHECK(!check_partition(arc, PartitionSpec::out_in(1, 1), TwoPartition({2, 1})).empty());
  // Pins are reported as violations, not errors.
  auto pinned = PartitionSpec::out_in(1, 1).with_pin(0, 2);
  auto violations = check_partition(arc, pinned, TwoPartition({1, 2}));
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].vertex == 0);
  // Kind mismatch is an error.
  CHECK_THROWS_AS(check_partition(Instance{arc}, PartitionSpec::und(1, 1), TwoPartition({1, 2})),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      check_partition(Instance{Graph(2, {{0, 1}})}, PartitionSpec::strong_b(), TwoPartition({1, 2})),
      std::invalid_argument);
}

TEST_CASE("exact_decide spec examples") {
  CHECK(!exact_decide(Digraph(3, {{0, 1}, {1, 2}, {2, 0}}), PartitionSpec::out_in(1, 1)).yes);
  Certificate two = exact_decide(Digraph(2, {{0, 1}, {1, 0}}), PartitionSpec::strong_b());
  CHECK(two.yes);
  REQUIRE(two.witness.has_value());
  CHECK(two.witness->color_of(0) != two.witness->color_of(1));
  // The 15-vertex eulerian counterexample has no strong 2-partition.
  Certificate d2 = exact_decide(eulerian_counterexample(2).digraph, PartitionSpec::strong_b());
  CHECK(!d2.yes);
  CHECK(d2.reason == "exhausted-search");
}

TEST_CASE("exact_decide equals naive enumeration on all digraphs up to n = 3") {
  for (int n = 1; n <= 3; ++n)
    for (uint64_t mask = 0; mask < (1ull << ts::digraph_arc_slots(n)); ++mask) {
      Digraph d = ts::digraph_from_mask(n, mask);
      for (const PartitionSpec& spec : directed_specs) {
        ts::NaiveResult expected = ts::naive_decide(Instance{d}, spec);
        Certificate got = exact_decide(d, spec);
        CHECK(got.yes == expected.yes);
        if (got.yes) CHECK(check_partition(d, spec, *got.witness).empty());
      }
    }
  for (int n = 1; n <= 4; ++n)
    for (uint64_t mask = 0; mask < (1ull << ts::graph_edge_slots(n)); ++mask) {
      Graph g = ts::graph_from_mask(n, mask);
      for (const PartitionSpec& spec : undirected_specs) {
        ts::NaiveResult expected = ts::naive_decide(Instance{g}, spec);
        Certificate got = exact_decide(g, spec);
        CHECK(got.yes == expected.yes);
      }
    }
}

TEST_CASE("exact_decide equals naive enumeration on random n = 6 instances with pins") {
  Rng rng(77);
  for (int trial = 0; trial < 250; ++trial) {
    Digraph d = random_digraph(rng, 6, 0.35);
    PartitionSpec spec = directed_specs[trial % directed_specs.size()];
    if (trial % 3 == 0) spec = spec.with_pin(rng.below(6), 1 + rng.below(2));
    ts::NaiveResult expected = ts::naive_decide(Instance{d}, spec);
    Certificate got = exact_decide(d, spec);
    CHECK(got.yes == expected.yes);
    if (got.yes) CHECK(check_partition(d, spec, *got.witness).empty());
  }
}

TEST_CASE("exact_decide equals naive enumeration on random n = 7 instances") {
  Rng rng(7777);
  for (int trial = 0; trial < 200; ++trial) {
    Digraph d = random_digraph(rng, 7, trial % 2 == 0 ? 0.2 : 0.4);
    for (const PartitionSpec& spec : directed_specs)
      CHECK(exact_decide(d, spec).yes == ts::naive_decide(Instance{d}, spec).yes);
    Graph g = random_graph(rng, 7, trial % 2 == 0 ? 0.25 : 0.45);
    for (const PartitionSpec& spec : undirected_specs)
      CHECK(exact_decide(g, spec).yes == ts::naive_decide(Instance{g}, spec).yes);
  }
}

TEST_CASE("pins are respected by witnesses") {
  Digraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  for (int v = 0; v < 4; ++v)
    for (int c = 1; c <= 2; ++c) {
      Certificate cert = exact_decide(c4, PartitionSpec::out_in(1, 1).with_pin(v, c));
      REQUIRE(cert.yes);
      CHECK(cert.witness->color_of(v) == c);
    }
}

TEST_CASE("OUT_IN monotonicity: shrinking thresholds keeps the witness valid") {
  Rng rng(123);
  for (int trial = 0; trial < 100; ++trial) {
    Digraph d = random_digraph(rng, 6, 0.5);
    Certificate cert = exact_decide(d, PartitionSpec::out_in(2, 2));
    if (!cert.yes) continue;
    for (int k1 = 1; k1 <= 2; ++k1)
      for (int k2 = 1; k2 <= 2; ++k2)
        CHECK(check_partition(d, PartitionSpec::out_in(k1, k2), *cert.witness).empty());
  }
}

TEST_CASE("exact_decide budget is explicit") {
  Digraph big = eulerian_counterexample(2).digraph;
  CHECK_THROWS_AS(exact_decide(big, PartitionSpec::strong_b(), Budget{5}), ResourceExceededError);
}

TEST_CASE("sat_brute examples") {
  CnfFormula f1 = ts::make_formula(1, {{1, 1, 1}});
  auto sat = sat_brute(f1, SatMode::Sat);
  REQUIRE(sat.has_value());
  CHECK((*sat)[0] == true);
  CHECK(!sat_brute(f1, SatMode::NotAllEqual).has_value());
  CnfFormula f2 = ts::make_formula(1, {{1, 1, 1}, {-1, -1, -1}});
  CHECK(!sat_brute(f2, SatMode::Sat).has_value());
  CnfFormula nae = ts::make_formula(2, {{1, 1, 2}});
  auto got = sat_brute(nae, SatMode::NotAllEqual);
  REQUIRE(got.has_value());
  CHECK((*got)[0] != (*got)[1]);
  CnfFormula wide = ts::make_formula(30, {{1, 2, 3}});
  CHECK_THROWS_AS(sat_brute(wide, SatMode::Sat), ResourceExceededError);
}

TEST_CASE("hyper2color_brute examples") {
  Hypergraph single;
  single.ground_size = 3;
  single.r = 3;
  single.edges = {{0, 1, 2}};
  auto coloring = hyper2color_brute(single);
  REQUIRE(coloring.has_value());
  CHECK(((*coloring)[0] != (*coloring)[1] || (*coloring)[0] != (*coloring)[2]));

  Hypergraph complete4;
  complete4.ground_size = 4;
  complete4.r = 3;
  complete4.edges = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  CHECK(hyper2color_brute(complete4).has_value());

  CHECK(!hyper2color_brute(fano_plane()).has_value());
}

TEST_CASE("hypergraph validation") {
  Hypergraph bad;
  bad.ground_size = 3;
  bad.r = 3;
  bad.edges = {{0, 1, 1}};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  CHECK(fano_plane().connected());
  Hypergraph uncovered;
  uncovered.ground_size = 4;
  uncovered.r = 3;
  uncovered.edges = {{0, 1, 2}};
  CHECK(!uncovered.connected());
}
