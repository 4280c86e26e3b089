#pragma once

#include <iosfwd>
#include <string>

#include "bipart/gadgets.hpp"
#include "bipart/oracle.hpp"
#include "bipart/spec.hpp"

namespace bipart::io {

/// Edge-list format: first line "digraph N" or "graph N", then one "u v"
/// pair per line (0-based, written in ascending order). Lines starting with
/// '#' and blank lines are ignored on input.
Instance parse_instance(std::istream& in);
Instance parse_instance_file(const std::string& path);
std::string format_instance(const Instance& instance);
void write_instance_file(const std::string& path, const Instance& instance);

/// Certificate / partition format: "answer yes" or "answer no" first, then
/// one "v colour" line per vertex for yes answers. '#' comment lines are
/// ignored on input and used for reasons and traces on output.
std::string format_certificate(const Certificate& cert, bool with_trace = false);
/// Parses a yes-certificate into a partition over n vertices; throws on a
/// no-certificate or an incomplete mapping.
TwoPartition parse_partition(std::istream& in, int n);
TwoPartition parse_partition_file(const std::string& path, int n);

/// DIMACS cnf. Clauses with fewer than three literals are padded by
/// repeating their last literal; clauses with more are rejected.
CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs_file(const std::string& path);

/// Hypergraph format: first line "hypergraph N r", then one hyperedge per
/// line as r vertex ids. '#' comments ignored.
Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph_file(const std::string& path);

/// Label map sidecar: one "name id" line per label, names sorted.
std::string format_labels(const LabelMap& labels);
void write_labels_file(const std::string& path, const LabelMap& labels);

}  // namespace bipart::io
