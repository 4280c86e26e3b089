#include "bipart/spec.hpp"

#include <algorithm>
#include <sstream>

#include "bipart/core.hpp"

namespace bipart {

bool is_directed_kind(SpecKind kind) { return kind != SpecKind::Und; }

bool has_degree_params(SpecKind kind) {
  switch (kind) {
    case SpecKind::Und:
    case SpecKind::OutOut:
    case SpecKind::OutIn:
    case SpecKind::OutTotal:
      return true;
    default:
      return false;
  }
}

PartitionSpec PartitionSpec::with_pin(int vertex, int color) const {
  if (color != 1 && color != 2) throw std::invalid_argument("pin colour must be 1 or 2");
  PartitionSpec s = *this;
  s.pins[vertex] = color;
  return s;
}

PartitionSpec PartitionSpec::parse(const std::string& text) {
  std::istringstream in(text);
  std::string word;
  if (!(in >> word)) throw std::invalid_argument("empty partition spec");
  PartitionSpec s;
  bool needs_ks = true;
  if (word == "und")
    s.kind = SpecKind::Und;
  else if (word == "out-out")
    s.kind = SpecKind::OutOut;
  else if (word == "out-in")
    s.kind = SpecKind::OutIn;
  else if (word == "out-total")
    s.kind = SpecKind::OutTotal;
  else {
    needs_ks = false;
    if (word == "strong-b")
      s.kind = SpecKind::StrongB;
    else if (word == "euler-b-semi1")
      s.kind = SpecKind::EulerBSemi1;
    else if (word == "cyclefactor-b")
      s.kind = SpecKind::CycleFactorB;
    else if (word == "totaldom")
      s.kind = SpecKind::TotalDom;
    else
      throw std::invalid_argument("unknown partition spec kind: " + word);
  }
  if (needs_ks) {
    if (!(in >> s.k1 >> s.k2))
      throw std::invalid_argument("spec '" + word + "' needs two integer parameters");
    if (s.k1 < 0 || s.k2 < 0) throw std::invalid_argument("spec parameters must be >= 0");
  }
  std::string extra;
  if (in >> extra) throw std::invalid_argument("trailing tokens in partition spec: " + extra);
  return s;
}

std::string PartitionSpec::to_string() const {
  std::ostringstream out;
  switch (kind) {
    case SpecKind::Und: out << "und " << k1 << " " << k2; break;
    case SpecKind::OutOut: out << "out-out " << k1 << " " << k2; break;
    case SpecKind::OutIn: out << "out-in " << k1 << " " << k2; break;
    case SpecKind::OutTotal: out << "out-total " << k1 << " " << k2; break;
    case SpecKind::StrongB: out << "strong-b"; break;
    case SpecKind::EulerBSemi1: out << "euler-b-semi1"; break;
    case SpecKind::CycleFactorB: out << "cyclefactor-b"; break;
    case SpecKind::TotalDom: out << "totaldom"; break;
  }
  return out.str();
}

int instance_order(const Instance& instance) {
  return std::visit([](const auto& g) { return g.order(); }, instance);
}

bool instance_is_directed(const Instance& instance) {
  return std::holds_alternative<Digraph>(instance);
}

void require_compatible(const Instance& instance, const PartitionSpec& spec) {
  bool directed = instance_is_directed(instance);
  if (is_directed_kind(spec.kind) && !directed)
    throw std::invalid_argument("spec '" + spec.to_string() + "' needs a digraph instance");
  if (!is_directed_kind(spec.kind) && directed)
    throw std::invalid_argument("spec '" + spec.to_string() + "' needs a graph instance");
  for (auto [v, c] : spec.pins) {
    if (v < 0 || v >= instance_order(instance))
      throw std::invalid_argument("pin vertex " + std::to_string(v) + " out of range");
    if (c != 1 && c != 2) throw std::invalid_argument("pin colour must be 1 or 2");
  }
}

namespace {

void check_pins(const PartitionSpec& spec, const TwoPartition& p, std::vector<Violation>& out) {
  for (auto [v, c] : spec.pins)
    if (p.color_of(v) != c)
      out.push_back({v, "pin violated: vertex " + std::to_string(v) + " must have colour " +
                            std::to_string(c)});
}

int count_with_color(const std::vector<int>& vertices, const TwoPartition& p, int color) {
  int c = 0;
  for (int v : vertices)
    if (p.color_of(v) == color) ++c;
  return c;
}

void check_count(int v, int have, int need, const char* what, std::vector<Violation>& out) {
  if (have < need)
    out.push_back({v, "vertex " + std::to_string(v) + " has " + std::to_string(have) + " " +
                          what + ", needs " + std::to_string(need)});
}

}  // namespace

std::vector<Violation> check_partition(const Graph& g, const PartitionSpec& spec,
                                       const TwoPartition& p) {
  require_compatible(Instance{g}, spec);
  if (p.size() != g.order()) throw std::invalid_argument("partition does not cover the instance");
  std::vector<Violation> out;
  check_pins(spec, p, out);
  for (int v = 0; v < g.order(); ++v) {
    int i = p.color_of(v);
    int need = i == 1 ? spec.k1 : spec.k2;
    check_count(v, count_with_color(g.neighbors(v), p, 3 - i), need,
                "cross neighbours", out);
  }
  return out;
}

std::vector<Violation> check_partition(const Digraph& d, const PartitionSpec& spec,
                                       const TwoPartition& p) {
  require_compatible(Instance{d}, spec);
  if (p.size() != d.order()) throw std::invalid_argument("partition does not cover the instance");
  std::vector<Violation> out;
  check_pins(spec, p, out);
  switch (spec.kind) {
    case SpecKind::OutOut:
      for (int v = 0; v < d.order(); ++v) {
        int i = p.color_of(v);
        int need = i == 1 ? spec.k1 : spec.k2;
        check_count(v, count_with_color(d.out_neighbors(v), p, 3 - i), need,
                    "cross out-neighbours", out);
      }
      break;
    case SpecKind::OutIn:
      for (int v = 0; v < d.order(); ++v) {
        if (p.color_of(v) == 1)
          check_count(v, count_with_color(d.out_neighbors(v), p, 2), spec.k1,
                      "out-neighbours in V2", out);
        else
          check_count(v, count_with_color(d.in_neighbors(v), p, 1), spec.k2,
                      "in-neighbours in V1", out);
      }
      break;
    case SpecKind::OutTotal:
      for (int v = 0; v < d.order(); ++v) {
        if (p.color_of(v) == 1)
          check_count(v, count_with_color(d.out_neighbors(v), p, 2), spec.k1,
                      "out-neighbours in V2", out);
        else
          check_count(v, count_with_color(d.neighbors(v), p, 1), spec.k2,
                      "neighbours in V1", out);
      }
      break;
    case SpecKind::StrongB: {
      if (!is_strong(bipartite_subdigraph(d, p)))
        out.push_back({-1, "bipartite subdigraph is not strongly connected"});
      break;
    }
    case SpecKind::EulerBSemi1: {
      Digraph b = bipartite_subdigraph(d, p);
      for (int v = 0; v < b.order(); ++v) {
        if (b.out_degree(v) != b.in_degree(v))
          out.push_back({v, "vertex " + std::to_string(v) + " unbalanced in bipartite subdigraph"});
        if (b.out_degree(v) < 1 || b.in_degree(v) < 1)
          out.push_back({v, "vertex " + std::to_string(v) + " has semi-degree 0 in bipartite subdigraph"});
      }
      if (b.order() == 0 || !b.underlying_graph().connected())
        out.push_back({-1, "bipartite subdigraph is not connected"});
      break;
    }
    case SpecKind::CycleFactorB:
      if (!has_cycle_factor(bipartite_subdigraph(d, p)))
        out.push_back({-1, "bipartite subdigraph has no cycle factor"});
      break;
    case SpecKind::TotalDom:
      for (int v = 0; v < d.order(); ++v) {
        int i = p.color_of(v);
        check_count(v, count_with_color(d.out_neighbors(v), p, i), 1,
                    "out-neighbours in its own part", out);
        check_count(v, count_with_color(d.out_neighbors(v), p, 3 - i), 1,
                    "out-neighbours in the other part", out);
      }
      break;
    case SpecKind::Und:
      break;  // unreachable, require_compatible rejects
  }
  return out;
}

std::vector<Violation> check_partition(const Instance& instance, const PartitionSpec& spec,
                                       const TwoPartition& p) {
  if (const Graph* g = std::get_if<Graph>(&instance)) return check_partition(*g, spec, p);
  return check_partition(std::get<Digraph>(instance), spec, p);
}

Certificate yes_certificate(const Instance& instance, const PartitionSpec& spec,
                            TwoPartition witness, std::vector<std::string> trace) {
  auto violations = check_partition(instance, spec, witness);
  if (!violations.empty())
    throw std::logic_error("yes certificate carries an invalid witness: " +
                           violations.front().message);
  Certificate c;
  c.yes = true;
  c.witness = std::move(witness);
  c.trace = std::move(trace);
  return c;
}

Certificate no_certificate(std::string reason, std::vector<std::string> trace) {
  Certificate c;
  c.yes = false;
  c.reason = std::move(reason);
  c.trace = std::move(trace);
  return c;
}

}  // namespace bipart
