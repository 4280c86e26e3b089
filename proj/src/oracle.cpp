#include "bipart/oracle.hpp"

#include <algorithm>

#include "bipart/core.hpp"

namespace bipart {

void CnfFormula::validate() const {
  if (variable_count < 0) throw std::invalid_argument("negative variable count");
  for (const auto& clause : clauses)
    for (int lit : clause) {
      int v = std::abs(lit);
      if (v < 1 || v > variable_count)
        throw std::invalid_argument("literal " + std::to_string(lit) +
                                    " references no variable");
    }
}

std::vector<int> CnfFormula::distinct_literals(const std::array<int, 3>& clause) {
  std::vector<int> lits(clause.begin(), clause.end());
  std::sort(lits.begin(), lits.end(),
            [](int a, int b) { return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a < b; });
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  return lits;
}

bool CnfFormula::satisfied_by(const std::vector<bool>& assignment) const {
  for (const auto& clause : clauses) {
    bool any_true = false;
    for (int lit : clause) {
      bool value = assignment.at(std::abs(lit) - 1);
      if (lit < 0) value = !value;
      any_true = any_true || value;
    }
    if (!any_true) return false;
  }
  return true;
}

bool CnfFormula::nae_satisfied_by(const std::vector<bool>& assignment) const {
  for (const auto& clause : clauses) {
    bool any_true = false, any_false = false;
    for (int lit : clause) {
      bool value = assignment.at(std::abs(lit) - 1);
      if (lit < 0) value = !value;
      (value ? any_true : any_false) = true;
    }
    if (!any_true || !any_false) return false;
  }
  return true;
}

void Hypergraph::validate() const {
  if (r < 2) throw std::invalid_argument("hypergraph rank must be >= 2");
  if (ground_size < 0) throw std::invalid_argument("negative ground set");
  for (const auto& edge : edges) {
    if (static_cast<int>(edge.size()) != r)
      throw std::invalid_argument("hyperedge is not of size r");
    for (int v : edge)
      if (v < 0 || v >= ground_size)
        throw std::invalid_argument("hyperedge member out of range");
    for (size_t i = 1; i < edge.size(); ++i)
      if (edge[i - 1] >= edge[i])
        throw std::invalid_argument("hyperedge members must be distinct ascending");
  }
}

bool Hypergraph::connected() const {
  if (ground_size == 0) return false;
  std::vector<int> comp(ground_size, -1);
  std::vector<std::vector<int>> adj(ground_size);
  for (const auto& edge : edges)
    for (size_t i = 1; i < edge.size(); ++i) {
      adj[edge[0]].push_back(edge[i]);
      adj[edge[i]].push_back(edge[0]);
    }
  std::vector<int> stack = {0};
  comp[0] = 0;
  int seen = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj[u])
      if (comp[w] < 0) {
        comp[w] = 0;
        ++seen;
        stack.push_back(w);
      }
  }
  if (seen != ground_size) return false;
  std::vector<char> covered(ground_size, 0);
  for (const auto& edge : edges)
    for (int v : edge) covered[v] = 1;
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

std::optional<std::vector<bool>> sat_brute(const CnfFormula& f, SatMode mode,
                                           int max_variables) {
  f.validate();
  if (f.variable_count > max_variables)
    throw ResourceExceededError("sat_brute variable bound exceeded");
  int n = f.variable_count;
  for (unsigned long long bits = 0; bits < (1ull << n); ++bits) {
    std::vector<bool> assignment(n);
    for (int v = 0; v < n; ++v) assignment[v] = (bits >> v) & 1;
    bool ok = mode == SatMode::Sat ? f.satisfied_by(assignment)
                                   : f.nae_satisfied_by(assignment);
    if (ok) return assignment;
  }
  return std::nullopt;
}

std::optional<std::vector<int>> hyper2color_brute(const Hypergraph& h, int max_ground) {
  h.validate();
  if (h.ground_size > max_ground)
    throw ResourceExceededError("hyper2color_brute ground bound exceeded");
  int n = h.ground_size;
  for (unsigned long long bits = 0; bits < (1ull << n); ++bits) {
    std::vector<int> colors(n);
    for (int v = 0; v < n; ++v) colors[v] = ((bits >> v) & 1) ? 2 : 1;
    bool ok = true;
    for (const auto& edge : h.edges) {
      bool mono = true;
      for (int v : edge) mono = mono && colors[v] == colors[edge[0]];
      if (mono) {
        ok = false;
        break;
      }
    }
    if (ok) return colors;
  }
  return std::nullopt;
}

namespace {

// One counting constraint a vertex of a given colour must meet: at least k of
// the vertices in `nbrs` coloured `same ? own : other`.
struct Requirement {
  const std::vector<int>* nbrs;
  bool same;
  int k;
};

class ExactSearch {
 public:
  ExactSearch(const Instance& instance, const PartitionSpec& spec, const Budget& budget)
      : instance_(instance), spec_(spec), budget_(budget) {
    n_ = instance_order(instance);
    if (const Digraph* d = std::get_if<Digraph>(&instance_)) {
      all_neighbors_.resize(n_);
      for (int v = 0; v < n_; ++v) all_neighbors_[v] = d->neighbors(v);
    }
  }

  Certificate run() {
    std::vector<uint8_t> domains(n_, 3);
    for (auto [v, c] : spec_.pins) domains[v] = static_cast<uint8_t>(1 << (c - 1));
    nodes_ = 0;
    witness_.reset();
    if (search(domains))
      return yes_certificate(instance_, spec_, *witness_,
                             {"search nodes: " + std::to_string(nodes_)});
    return no_certificate("exhausted-search",
                          {"search nodes: " + std::to_string(nodes_)});
  }

 private:
  // Requirements for vertex v if coloured `color`. StrongB, EulerBSemi1 and
  // CycleFactorB contribute their necessary local conditions (a cross
  // out-neighbour and a cross in-neighbour); the full property is checked on
  // complete assignments.
  void requirements(int v, int color, std::vector<Requirement>& out) const {
    out.clear();
    int need = color == 1 ? spec_.k1 : spec_.k2;
    switch (spec_.kind) {
      case SpecKind::Und:
        out.push_back({&std::get<Graph>(instance_).neighbors(v), false, need});
        break;
      case SpecKind::OutOut:
        out.push_back({&std::get<Digraph>(instance_).out_neighbors(v), false, need});
        break;
      case SpecKind::OutIn:
        if (color == 1)
          out.push_back({&std::get<Digraph>(instance_).out_neighbors(v), false, spec_.k1});
        else
          out.push_back({&std::get<Digraph>(instance_).in_neighbors(v), false, spec_.k2});
        break;
      case SpecKind::OutTotal:
        if (color == 1)
          out.push_back({&std::get<Digraph>(instance_).out_neighbors(v), false, spec_.k1});
        else
          out.push_back({&all_neighbors_[v], false, spec_.k2});
        break;
      case SpecKind::StrongB:
      case SpecKind::EulerBSemi1:
      case SpecKind::CycleFactorB: {
        const Digraph& d = std::get<Digraph>(instance_);
        if (n_ >= 2 || spec_.kind != SpecKind::StrongB) {
          out.push_back({&d.out_neighbors(v), false, 1});
          out.push_back({&d.in_neighbors(v), false, 1});
        }
        break;
      }
      case SpecKind::TotalDom: {
        const Digraph& d = std::get<Digraph>(instance_);
        out.push_back({&d.out_neighbors(v), true, 1});
        out.push_back({&d.out_neighbors(v), false, 1});
        break;
      }
    }
  }

  bool propagate(std::vector<uint8_t>& domains) const {
    std::vector<Requirement> reqs;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < n_; ++v) {
        for (int color = 1; color <= 2; ++color) {
          if (!(domains[v] & (1 << (color - 1)))) continue;
          requirements(v, color, reqs);
          for (const Requirement& r : reqs) {
            if (r.k == 0) continue;
            int needed = r.same ? color : 3 - color;
            uint8_t bit = static_cast<uint8_t>(1 << (needed - 1));
            int possible = 0;
            for (int u : *r.nbrs) possible += (domains[u] & bit) ? 1 : 0;
            if (possible < r.k) {
              domains[v] = static_cast<uint8_t>(domains[v] & ~(1 << (color - 1)));
              changed = true;
              break;
            }
          }
          if (domains[v] == 0) return false;
        }
        // A decided vertex whose possible supporters are exactly as many as
        // it needs pins all of them.
        if (domains[v] == 1 || domains[v] == 2) {
          int color = domains[v] == 1 ? 1 : 2;
          requirements(v, color, reqs);
          for (const Requirement& r : reqs) {
            if (r.k == 0) continue;
            int needed = r.same ? color : 3 - color;
            uint8_t bit = static_cast<uint8_t>(1 << (needed - 1));
            int possible = 0;
            for (int u : *r.nbrs) possible += (domains[u] & bit) ? 1 : 0;
            if (possible < r.k) return false;
            if (possible == r.k)
              for (int u : *r.nbrs)
                if (domains[u] == 3) {
                  domains[u] = bit;
                  changed = true;
                }
          }
        }
      }
    }
    return true;
  }

  bool search(std::vector<uint8_t> domains) {
    if (++nodes_ > budget_.node_limit)
      throw ResourceExceededError("exact_decide node budget exceeded");
    if (!propagate(domains)) return false;
    int branch = -1;
    for (int v = 0; v < n_; ++v)
      if (domains[v] == 3) {
        branch = v;
        break;
      }
    if (branch < 0) {
      std::vector<int> colors(n_);
      for (int v = 0; v < n_; ++v) colors[v] = domains[v] == 1 ? 1 : 2;
      TwoPartition p(std::move(colors));
      if (!check_partition(instance_, spec_, p).empty()) return false;
      witness_ = std::move(p);
      return true;
    }
    for (int color = 1; color <= 2; ++color) {
      std::vector<uint8_t> child = domains;
      child[branch] = static_cast<uint8_t>(1 << (color - 1));
      if (search(std::move(child))) return true;
    }
    return false;
  }

  const Instance& instance_;
  const PartitionSpec& spec_;
  const Budget& budget_;
  int n_ = 0;
  long long nodes_ = 0;
  std::vector<std::vector<int>> all_neighbors_;
  std::optional<TwoPartition> witness_;
};

}  // namespace

Certificate exact_decide(const Instance& instance, const PartitionSpec& spec,
                         const Budget& budget) {
  require_compatible(instance, spec);
  return ExactSearch(instance, spec, budget).run();
}

Certificate exact_decide(const Graph& g, const PartitionSpec& spec, const Budget& budget) {
  return exact_decide(Instance{g}, spec, budget);
}

Certificate exact_decide(const Digraph& d, const PartitionSpec& spec, const Budget& budget) {
  return exact_decide(Instance{d}, spec, budget);
}

}  // namespace bipart
