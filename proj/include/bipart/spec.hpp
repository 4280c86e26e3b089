#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bipart/graph.hpp"

namespace bipart {

/// The constraint pair being tested, one value per problem variant:
///   Und(k1,k2)      each v in Vi has >= ki neighbours across      (graphs)
///   OutOut(k1,k2)   each v in Vi has >= ki out-neighbours across  (digraphs)
///   OutIn(k1,k2)    v in V1: >= k1 out-neighbours in V2,
///                   v in V2: >= k2 in-neighbours in V1
///   OutTotal(k1,k2) v in V1: >= k1 out-neighbours in V2,
///                   v in V2: >= k2 neighbours (either direction) in V1
///   StrongB         B_D(V1,V2) is strong
///   EulerBSemi1     B_D(V1,V2) is eulerian with minimum semi-degree >= 1
///   CycleFactorB    B_D(V1,V2) has a cycle factor
///   TotalDom        every vertex has an out-neighbour in its own part and
///                   one in the other part
enum class SpecKind { Und, OutOut, OutIn, OutTotal, StrongB, EulerBSemi1, CycleFactorB, TotalDom };

bool is_directed_kind(SpecKind kind);
bool has_degree_params(SpecKind kind);

struct PartitionSpec {
  SpecKind kind = SpecKind::Und;
  int k1 = 0;
  int k2 = 0;
  std::map<int, int> pins;  // vertex -> required colour

  static PartitionSpec und(int k1, int k2) { return {SpecKind::Und, k1, k2, {}}; }
  static PartitionSpec out_out(int k1, int k2) { return {SpecKind::OutOut, k1, k2, {}}; }
  static PartitionSpec out_in(int k1, int k2) { return {SpecKind::OutIn, k1, k2, {}}; }
  static PartitionSpec out_total(int k1, int k2) { return {SpecKind::OutTotal, k1, k2, {}}; }
  static PartitionSpec strong_b() { return {SpecKind::StrongB, 0, 0, {}}; }
  static PartitionSpec euler_b_semi1() { return {SpecKind::EulerBSemi1, 0, 0, {}}; }
  static PartitionSpec cycle_factor_b() { return {SpecKind::CycleFactorB, 0, 0, {}}; }
  static PartitionSpec total_dom() { return {SpecKind::TotalDom, 0, 0, {}}; }

  PartitionSpec with_pin(int vertex, int color) const;

  /// Grammar: "und K1 K2" | "out-out K1 K2" | "out-in K1 K2" |
  /// "out-total K1 K2" | "strong-b" | "euler-b-semi1" | "cyclefactor-b" |
  /// "totaldom". Pins are not part of the string.
  static PartitionSpec parse(const std::string& text);
  std::string to_string() const;
};

using Instance = std::variant<Graph, Digraph>;

int instance_order(const Instance& instance);
bool instance_is_directed(const Instance& instance);
/// Throws std::invalid_argument when the spec kind does not match the
/// instance kind (Und needs a graph, everything else a digraph).
void require_compatible(const Instance& instance, const PartitionSpec& spec);

/// One failed constraint. `vertex` is -1 for whole-partition properties
/// (strongness, connectivity, cycle factor existence).
struct Violation {
  int vertex = -1;
  std::string message;
};

std::vector<Violation> check_partition(const Graph& g, const PartitionSpec& spec,
                                       const TwoPartition& p);
std::vector<Violation> check_partition(const Digraph& d, const PartitionSpec& spec,
                                       const TwoPartition& p);
std::vector<Violation> check_partition(const Instance& instance, const PartitionSpec& spec,
                                       const TwoPartition& p);

/// Decision result: yes with a validated witness, or no with a structured
/// reason. `trace` optionally logs the construction. A yes certificate may
/// omit the witness only when witness construction ran out of budget, which
/// the reason then states explicitly.
struct Certificate {
  bool yes = false;
  std::optional<TwoPartition> witness;
  std::string reason;
  std::vector<std::string> trace;
};

/// Builds a yes certificate and asserts the witness against the spec;
/// throws std::logic_error if the witness fails. Every solver in the
/// repository returns its yes answers through this harness.
Certificate yes_certificate(const Instance& instance, const PartitionSpec& spec,
                            TwoPartition witness, std::vector<std::string> trace = {});
Certificate no_certificate(std::string reason, std::vector<std::string> trace = {});

}  // namespace bipart
