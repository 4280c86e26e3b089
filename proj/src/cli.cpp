#include "bipart/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "bipart/core.hpp"
#include "bipart/directed.hpp"
#include "bipart/gadgets.hpp"
#include "bipart/io.hpp"
#include "bipart/random.hpp"
#include "bipart/undirected.hpp"

namespace bipart::cli {

namespace {

long long default_budget() {
  if (const char* env = std::getenv("BIPART_BUDGET")) {
    char* end = nullptr;
    long long value = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && value > 0) return value;
    throw std::invalid_argument("BIPART_BUDGET must be a positive integer");
  }
  return kDefaultNodeBudget;
}

PartitionSpec spec_with_pins(const std::string& spec_text,
                             const std::vector<std::string>& pin_args) {
  PartitionSpec spec = PartitionSpec::parse(spec_text);
  for (const std::string& pin : pin_args) {
    size_t eq = pin.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("pin must look like V=1 or V=2");
    int v = std::stoi(pin.substr(0, eq));
    int c = std::stoi(pin.substr(eq + 1));
    spec = spec.with_pin(v, c);
  }
  return spec;
}

bool zero_threshold(const PartitionSpec& spec) {
  return has_degree_params(spec.kind) && (spec.k1 == 0 || spec.k2 == 0);
}

Certificate trivial_zero_partition(const Instance& instance, const PartitionSpec& spec) {
  int n = instance_order(instance);
  // With k1 = 0 all vertices can sit in V1; with k2 = 0 in V2.
  int color = spec.k1 == 0 ? 1 : 2;
  return yes_certificate(instance, spec, TwoPartition(std::vector<int>(n, color)),
                         {"one-sided partition, zero threshold"});
}

}  // namespace

bool poly_available(const PartitionSpec& spec) {
  if (!spec.pins.empty()) return false;
  if (zero_threshold(spec)) return true;
  switch (spec.kind) {
    case SpecKind::Und:
      return spec.k1 == 1 && spec.k2 >= 1;
    case SpecKind::OutOut:
    case SpecKind::OutIn:
    case SpecKind::OutTotal:
      return spec.k1 == 1 && spec.k2 == 1;
    default:
      return false;
  }
}

Certificate poly_decide(const Instance& instance, const PartitionSpec& spec,
                        const Budget& budget) {
  require_compatible(instance, spec);
  if (!spec.pins.empty())
    throw std::invalid_argument("poly mode does not support pins; use exact mode");
  if (!poly_available(spec))
    throw std::invalid_argument("no polynomial algorithm for spec '" + spec.to_string() + "'");
  if (zero_threshold(spec)) return trivial_zero_partition(instance, spec);
  switch (spec.kind) {
    case SpecKind::Und: {
      const Graph& g = std::get<Graph>(instance);
      if (spec.k2 == 2) return delta_12_decide(g).certificate;
      return delta_1k_partition(g, spec.k2, budget);
    }
    case SpecKind::OutOut:
      return outdeg11_decide(std::get<Digraph>(instance), budget.node_limit);
    case SpecKind::OutIn: {
      const Digraph& d = std::get<Digraph>(instance);
      if (!is_strong(d))
        throw std::invalid_argument(
            "out-in 1 1 has a polynomial algorithm only for strong digraphs");
      return inout11_strong_decide(d, budget);
    }
    case SpecKind::OutTotal: {
      const Digraph& d = std::get<Digraph>(instance);
      for (int v = 0; v < d.order(); ++v)
        if (d.degree(v) == 0)
          return no_certificate("isolated vertex " + std::to_string(v));
      return yes_certificate(instance, spec, out_total_partition(d), {"terminal-layer construction"});
    }
    default:
      throw std::invalid_argument("no polynomial algorithm for spec '" + spec.to_string() + "'");
  }
}

namespace {

int cmd_decide(const std::string& input, const std::string& spec_text,
               const std::vector<std::string>& pins, const std::string& mode,
               bool assert_strong, bool with_trace, long long budget_nodes,
               std::ostream& out) {
  Instance instance = io::parse_instance_file(input);
  PartitionSpec spec = spec_with_pins(spec_text, pins);
  require_compatible(instance, spec);
  if (assert_strong) {
    const Digraph* d = std::get_if<Digraph>(&instance);
    if (!d || !is_strong(*d))
      throw std::invalid_argument("--strong given but the instance is not a strong digraph");
  }
  Budget budget{budget_nodes};
  Certificate cert =
      mode == "poly" ? poly_decide(instance, spec, budget) : exact_decide(instance, spec, budget);
  out << io::format_certificate(cert, with_trace);
  return cert.yes ? 0 : 1;
}

int cmd_verify(const std::string& input, const std::string& partition_path,
               const std::string& spec_text, const std::vector<std::string>& pins,
               std::ostream& out) {
  Instance instance = io::parse_instance_file(input);
  PartitionSpec spec = spec_with_pins(spec_text, pins);
  require_compatible(instance, spec);
  TwoPartition p = io::parse_partition_file(partition_path, instance_order(instance));
  auto violations = check_partition(instance, spec, p);
  if (violations.empty()) {
    out << "ok\n";
    return 0;
  }
  for (const auto& v : violations) out << "violation: " << v.message << "\n";
  return 1;
}

int cmd_gadget(const std::string& name, const std::string& cnf_path,
               const std::string& hypergraph_path, const std::string& pattern_path,
               const std::string& input_path, const std::string& x_list, int k, int k1, int k2,
               int r, const std::string& out_prefix, long long budget_nodes, std::ostream& out) {
  auto need_cnf = [&]() {
    if (cnf_path.empty()) throw std::invalid_argument("generator '" + name + "' needs --cnf");
    return io::parse_dimacs_file(cnf_path);
  };
  auto need_digraph = [&](const std::string& path, const char* flag) {
    if (path.empty())
      throw std::invalid_argument("generator '" + name + "' needs " + std::string(flag));
    Instance instance = io::parse_instance_file(path);
    if (!std::holds_alternative<Digraph>(instance))
      throw std::invalid_argument(std::string(flag) + " must name a digraph file");
    return std::get<Digraph>(instance);
  };

  Instance instance{Digraph()};
  LabelMap labels;
  std::string pin_note;
  if (name == "und-nae") {
    auto g = und_nae_instance(need_cnf(), k1, k2);
    instance = g.graph;
    labels = std::move(g.labels);
  } else if (name == "und-1k") {
    auto g = und_1k_instance(need_cnf(), k);
    instance = g.graph;
    labels = std::move(g.labels);
  } else if (name == "m-of-f") {
    auto g = acyclic_inout_instance(need_cnf());
    instance = g.digraph;
    labels = std::move(g.labels);
  } else if (name == "w") {
    auto g = w_instance(need_cnf());
    instance = g.digraph;
    labels = std::move(g.labels);
  } else if (name == "w-prime") {
    auto g = w_prime_instance(need_cnf());
    instance = g.digraph;
    labels = std::move(g.labels);
    pin_note = "pin: vertex " + std::to_string(g.pinned_vertex) + " colour " +
               std::to_string(g.pinned_color);
  } else if (name == "pattern") {
    auto g = pattern_instance(need_digraph(pattern_path, "--pattern"), need_cnf(),
                              Budget{budget_nodes});
    instance = g.digraph;
    labels = std::move(g.labels);
  } else if (name == "q") {
    auto g = strong_outin_k1_instance(need_cnf(), k1);
    instance = g.digraph;
    labels = std::move(g.labels);
  } else if (name == "q-prime") {
    auto g = strong_22_instance(need_cnf());
    instance = g.digraph;
    labels = std::move(g.labels);
  } else if (name == "lift") {
    auto g = lift_k1k2(need_digraph(input_path, "--input"));
    instance = g.digraph;
    labels = std::move(g.labels);
  } else if (name == "gr") {
    if (x_list.empty()) throw std::invalid_argument("generator 'gr' needs --x");
    std::vector<int> xs;
    std::istringstream xin(x_list);
    std::string token;
    while (std::getline(xin, token, ',')) xs.push_back(std::stoi(token));
    auto g = gadget_gr(need_digraph(input_path, "--input"), xs);
    instance = g.digraph;
    labels = std::move(g.labels);
  } else if (name == "euler-counterexample") {
    if (r < 1) throw std::invalid_argument("generator 'euler-counterexample' needs --r >= 1");
    auto g = input_path.empty() ? eulerian_counterexample(r)
                                : eulerian_counterexample(r, need_digraph(input_path, "--input"));
    instance = g.digraph;
    labels = std::move(g.labels);
  } else if (name == "hypergraph") {
    if (hypergraph_path.empty())
      throw std::invalid_argument("generator 'hypergraph' needs --hypergraph");
    auto g = hypergraph_instance(io::parse_hypergraph_file(hypergraph_path));
    instance = g.digraph;
    labels = std::move(g.labels);
  } else {
    throw std::invalid_argument("unknown generator: " + name);
  }

  io::write_instance_file(out_prefix + ".graph", instance);
  io::write_labels_file(out_prefix + ".labels", labels);
  out << "wrote " << out_prefix << ".graph (" << instance_order(instance) << " vertices)\n";
  out << "wrote " << out_prefix << ".labels\n";
  if (!pin_note.empty()) out << pin_note << "\n";
  return 0;
}

int cmd_fuzz(const std::string& spec_text, const std::string& range, int trials, uint64_t seed,
             bool strong, bool spanning_cycle, long long budget_nodes, std::ostream& out) {
  PartitionSpec spec = PartitionSpec::parse(spec_text);
  if (!poly_available(spec))
    throw std::invalid_argument("fuzz needs a spec with a polynomial algorithm");
  size_t dots = range.find("..");
  if (dots == std::string::npos) throw std::invalid_argument("--n must look like A..B");
  int lo = std::stoi(range.substr(0, dots));
  int hi = std::stoi(range.substr(dots + 2));
  if (lo < 1 || hi < lo) throw std::invalid_argument("--n must satisfy 1 <= A <= B");
  bool directed = is_directed_kind(spec.kind);
  if (spec.kind == SpecKind::OutIn && !strong)
    throw std::invalid_argument("fuzz 'out-in 1 1' needs --strong instances");

  Rng rng(seed);
  Budget budget{budget_nodes};
  int agree = 0, resource = 0;
  for (int t = 0; t < trials; ++t) {
    int n = lo + rng.below(hi - lo + 1);
    double p = t % 2 == 0 ? 0.2 : 0.4;
    Instance instance{Graph()};
    try {
      if (!directed)
        instance = random_graph(rng, n, p);
      else if (strong)
        instance = random_strong_digraph(rng, n, p, spanning_cycle);
      else if (spec.kind == SpecKind::OutTotal)
        instance = random_digraph_min_degree1(rng, n, p);
      else
        instance = random_digraph(rng, n, p);
    } catch (const ResourceExceededError&) {
      ++resource;
      continue;
    }
    bool poly_yes, exact_yes;
    try {
      poly_yes = poly_decide(instance, spec, budget).yes;
      exact_yes = exact_decide(instance, spec, budget).yes;
    } catch (const ResourceExceededError&) {
      ++resource;
      continue;
    }
    if (poly_yes != exact_yes) {
      std::string path = "fuzz-disagreement-" + std::to_string(t) + ".graph";
      io::write_instance_file(path, instance);
      out << "fuzz spec=" << spec.to_string() << " n=" << lo << ".." << hi << " trials=" << trials
          << " seed=" << seed << "\n";
      out << "disagreement at trial " << t << ": poly=" << (poly_yes ? "yes" : "no")
          << " exact=" << (exact_yes ? "yes" : "no") << ", instance dumped to " << path << "\n";
      return 1;
    }
    ++agree;
  }
  out << "fuzz spec=" << spec.to_string() << " n=" << lo << ".." << hi << " trials=" << trials
      << " seed=" << seed << "\n";
  out << "agree=" << agree << " disagree=0 resource=" << resource << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"2-partition laboratory for graphs and digraphs"};
  app.require_subcommand(1);

  std::string input, partition_path, spec_text, mode = "exact", range = "4..8", out_prefix;
  std::string cnf_path, hypergraph_path, pattern_path, x_list, gadget_name;
  std::vector<std::string> pins;
  bool assert_strong = false, with_trace = false, spanning_cycle = false;
  int k = 3, k1 = 2, k2 = 2, r = -1, trials = 100;
  uint64_t seed = 1;
  long long budget_nodes = 0;  // resolved after parsing so --budget beats the env var

  CLI::App* decide = app.add_subcommand("decide", "decide whether a partition exists");
  decide->add_option("input", input, "instance file")->required();
  decide->add_option("--spec", spec_text, "partition spec string")->required();
  decide->add_option("--mode", mode, "poly or exact")->check(CLI::IsMember({"poly", "exact"}));
  decide->add_option("--pin", pins, "pin a vertex, e.g. --pin 3=1");
  decide->add_flag("--strong", assert_strong, "assert that the input digraph is strong");
  decide->add_flag("--trace", with_trace, "print the construction trace");
  decide->add_option("--budget", budget_nodes, "search node budget");

  CLI::App* verify = app.add_subcommand("verify", "check a partition against a spec");
  verify->add_option("input", input, "instance file")->required();
  verify->add_option("partition", partition_path, "partition file")->required();
  verify->add_option("--spec", spec_text, "partition spec string")->required();
  verify->add_option("--pin", pins, "pin a vertex, e.g. --pin 3=1");

  CLI::App* gadget = app.add_subcommand("gadget", "generate a reduction instance");
  gadget->add_option("name", gadget_name, "generator name")->required();
  gadget->add_option("--cnf", cnf_path, "DIMACS cnf input");
  gadget->add_option("--hypergraph", hypergraph_path, "hypergraph input");
  gadget->add_option("--pattern", pattern_path, "pattern digraph input");
  gadget->add_option("--input", input, "digraph input");
  gadget->add_option("--x", x_list, "comma separated X vertices for gr");
  gadget->add_option("--k", k, "k for und-1k");
  gadget->add_option("--k1", k1, "k1 for und-nae and q");
  gadget->add_option("--k2", k2, "k2 for und-nae");
  gadget->add_option("--r", r, "r for euler-counterexample");
  gadget->add_option("--out", out_prefix, "output file prefix")->required();
  gadget->add_option("--budget", budget_nodes, "search node budget (pattern oracle checks)");

  CLI::App* fuzz = app.add_subcommand("fuzz", "cross-check poly against exact on random instances");
  fuzz->add_option("--spec", spec_text, "partition spec string")->required();
  fuzz->add_option("--n", range, "order range A..B");
  fuzz->add_option("--trials", trials, "number of trials");
  fuzz->add_option("--seed", seed, "random seed");
  fuzz->add_flag("--strong", assert_strong, "sample strong digraphs");
  fuzz->add_flag("--spanning-cycle", spanning_cycle, "overlay a random spanning cycle");
  fuzz->add_option("--budget", budget_nodes, "search node budget");

  std::vector<const char*> argv = {"bipart"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (budget_nodes <= 0) budget_nodes = default_budget();
    if (decide->parsed())
      return cmd_decide(input, spec_text, pins, mode, assert_strong, with_trace, budget_nodes, out);
    if (verify->parsed()) return cmd_verify(input, partition_path, spec_text, pins, out);
    if (gadget->parsed())
      return cmd_gadget(gadget_name, cnf_path, hypergraph_path, pattern_path, input, x_list, k,
                        k1, k2, r, out_prefix, budget_nodes, out);
    if (fuzz->parsed())
      return cmd_fuzz(spec_text, range, trials, seed, assert_strong, spanning_cycle, budget_nodes,
                      out);
    err << "error: no subcommand\n";
    return 2;
  } catch (const ResourceExceededError& e) {
    err << "resource: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace bipart::cli
