#include "bipart/io.hpp"

#include <fstream>
#include <sstream>

namespace bipart::io {

namespace {

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  return in;
}

/// Next non-comment, non-blank line.
bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Instance parse_instance(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) throw std::invalid_argument("empty instance file");
  std::istringstream header(line);
  std::string kind;
  int n = -1;
  if (!(header >> kind >> n) || n < 0)
    throw std::invalid_argument("instance header must be 'digraph N' or 'graph N'");
  if (kind != "digraph" && kind != "graph")
    throw std::invalid_argument("instance header must be 'digraph N' or 'graph N'");
  std::vector<std::pair<int, int>> pairs;
  while (next_content_line(in, line)) {
    std::istringstream row(line);
    int u, v;
    if (!(row >> u >> v)) throw std::invalid_argument("bad edge line: " + line);
    std::string extra;
    if (row >> extra) throw std::invalid_argument("bad edge line: " + line);
    pairs.emplace_back(u, v);
  }
  if (kind == "digraph") return Digraph(n, pairs);
  return Graph(n, pairs);
}

Instance parse_instance_file(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_instance(in);
}

std::string format_instance(const Instance& instance) {
  std::ostringstream out;
  if (const Digraph* d = std::get_if<Digraph>(&instance)) {
    out << "digraph " << d->order() << "\n";
    for (auto [u, v] : d->arcs()) out << u << " " << v << "\n";
  } else {
    const Graph& g = std::get<Graph>(instance);
    out << "graph " << g.order() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  }
  return out.str();
}

void write_instance_file(const std::string& path, const Instance& instance) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << format_instance(instance);
}

std::string format_certificate(const Certificate& cert, bool with_trace) {
  std::ostringstream out;
  out << "answer " << (cert.yes ? "yes" : "no") << "\n";
  if (!cert.reason.empty()) out << "# reason: " << cert.reason << "\n";
  if (with_trace)
    for (const std::string& line : cert.trace) out << "# " << line << "\n";
  if (cert.witness)
    for (int v = 0; v < cert.witness->size(); ++v)
      out << v << " " << cert.witness->color_of(v) << "\n";
  return out.str();
}

TwoPartition parse_partition(std::istream& in, int n) {
  std::string line;
  if (!next_content_line(in, line)) throw std::invalid_argument("empty partition file");
  std::istringstream header(line);
  std::string word, answer;
  if (!(header >> word >> answer) || word != "answer")
    throw std::invalid_argument("partition file must start with 'answer yes|no'");
  if (answer == "no")
    throw std::invalid_argument("partition file carries a no answer, nothing to verify");
  if (answer != "yes") throw std::invalid_argument("answer must be yes or no");
  std::vector<int> colors(n, 0);
  while (next_content_line(in, line)) {
    std::istringstream row(line);
    int v, c;
    if (!(row >> v >> c)) throw std::invalid_argument("bad partition line: " + line);
    if (v < 0 || v >= n) throw std::invalid_argument("partition vertex out of range: " + line);
    if (c != 1 && c != 2) throw std::invalid_argument("partition colour must be 1 or 2: " + line);
    if (colors[v] != 0) throw std::invalid_argument("vertex mapped twice: " + line);
    colors[v] = c;
  }
  for (int v = 0; v < n; ++v)
    if (colors[v] == 0)
      throw std::invalid_argument("partition misses vertex " + std::to_string(v));
  return TwoPartition(std::move(colors));
}

TwoPartition parse_partition_file(const std::string& path, int n) {
  auto in = open_or_throw(path);
  return parse_partition(in, n);
}

CnfFormula parse_dimacs(std::istream& in) {
  CnfFormula f;
  std::string line;
  bool saw_header = false;
  std::vector<int> pending;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string first;
    if (!(row >> first)) continue;
    if (first == "c" || first[0] == 'c' || first[0] == '#') continue;
    if (first == "p") {
      std::string fmt;
      int nv = -1, nc = -1;
      if (!(row >> fmt >> nv >> nc) || fmt != "cnf" || nv < 0)
        throw std::invalid_argument("bad DIMACS header");
      f.variable_count = nv;
      saw_header = true;
      continue;
    }
    if (!saw_header) throw std::invalid_argument("DIMACS clause before header");
    std::istringstream row2(line);
    int lit;
    while (row2 >> lit) {
      if (lit == 0) {
        if (pending.empty()) throw std::invalid_argument("empty clause in DIMACS input");
        if (pending.size() > 3)
          throw std::invalid_argument("clause with more than 3 literals rejected");
        while (pending.size() < 3) pending.push_back(pending.back());
        f.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
      } else {
        pending.push_back(lit);
      }
    }
  }
  if (!pending.empty()) throw std::invalid_argument("unterminated clause in DIMACS input");
  if (!saw_header) throw std::invalid_argument("missing DIMACS header");
  f.validate();
  return f;
}

CnfFormula parse_dimacs_file(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_dimacs(in);
}

Hypergraph parse_hypergraph(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) throw std::invalid_argument("empty hypergraph file");
  std::istringstream header(line);
  std::string kind;
  Hypergraph h;
  if (!(header >> kind >> h.ground_size >> h.r) || kind != "hypergraph")
    throw std::invalid_argument("hypergraph header must be 'hypergraph N r'");
  while (next_content_line(in, line)) {
    std::istringstream row(line);
    std::vector<int> edge;
    int v;
    while (row >> v) edge.push_back(v);
    if (static_cast<int>(edge.size()) != h.r)
      throw std::invalid_argument("hyperedge line must list exactly r vertices: " + line);
    std::sort(edge.begin(), edge.end());
    h.edges.push_back(std::move(edge));
  }
  h.validate();
  return h;
}

Hypergraph parse_hypergraph_file(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_hypergraph(in);
}

std::string format_labels(const LabelMap& labels) {
  std::ostringstream out;
  for (const auto& [name, id] : labels) out << name << " " << id << "\n";
  return out.str();
}

void write_labels_file(const std::string& path, const LabelMap& labels) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << format_labels(labels);
}

}  // namespace bipart::io
