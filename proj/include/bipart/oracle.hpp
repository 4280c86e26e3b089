#pragma once

#include <array>
#include <optional>
#include <vector>

#include "bipart/spec.hpp"

namespace bipart {

/// Node limit for backtracking searches. Exceeding it raises
/// ResourceExceededError; the oracle never silently returns a wrong answer.
struct Budget {
  long long node_limit = 10'000'000;
};

/// 3-SAT / NAE-3-SAT formula. Literals are DIMACS-style: +v for x_v, -v for
/// the negation, variables numbered 1..variable_count. Clauses have exactly
/// three literal slots; repeats are allowed.
struct CnfFormula {
  int variable_count = 0;
  std::vector<std::array<int, 3>> clauses;

  void validate() const;
  /// Distinct literals of a clause, ascending by (variable, sign).
  static std::vector<int> distinct_literals(const std::array<int, 3>& clause);
  bool satisfied_by(const std::vector<bool>& assignment) const;
  bool nae_satisfied_by(const std::vector<bool>& assignment) const;
};

/// r-uniform hypergraph over ground set 0..ground_size-1.
struct Hypergraph {
  int ground_size = 0;
  int r = 0;
  std::vector<std::vector<int>> edges;  // each sorted, size r, distinct members

  void validate() const;
  /// Vertices sharing a hyperedge linked; every ground vertex must appear.
  bool connected() const;
};

enum class SatMode { Sat, NotAllEqual };

/// Exhaustive SAT / NAE-SAT. Returns an assignment (index 0 = variable 1) or
/// nullopt. Throws ResourceExceededError when variable_count exceeds
/// max_variables.
std::optional<std::vector<bool>> sat_brute(const CnfFormula& f, SatMode mode,
                                           int max_variables = 24);

/// Exhaustive proper 2-colouring (no monochromatic hyperedge); colours 1/2.
std::optional<std::vector<int>> hyper2color_brute(const Hypergraph& h,
                                                  int max_ground = 24);

/// Complete backtracking decision for any partition spec, with constraint
/// propagation: per-vertex colour domains are pruned whenever a colour can no
/// longer collect enough supporters, and an assigned vertex whose remaining
/// supporters are exactly as many as it needs pins them all. Branches on the
/// lowest-id undecided vertex, colour 1 first. Sound and complete within the
/// node budget.
Certificate exact_decide(const Instance& instance, const PartitionSpec& spec,
                         const Budget& budget = {});
Certificate exact_decide(const Graph& g, const PartitionSpec& spec, const Budget& budget = {});
Certificate exact_decide(const Digraph& d, const PartitionSpec& spec, const Budget& budget = {});

}  // namespace bipart
