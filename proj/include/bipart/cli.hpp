#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bipart/oracle.hpp"
#include "bipart/spec.hpp"

namespace bipart::cli {

/// Runs the command line tool. Exit codes: 0 = yes / ok, 1 = no / violations
/// / fuzz disagreement, 2 = usage, parse or resource errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Polynomial-route decision for the specs that have one: zero-threshold
/// degree specs (trivial one-sided partition), und 1 k, und 1 2, out-out 1 1,
/// out-in 1 1 on strong inputs, out-total 1 1. Throws std::invalid_argument
/// for anything else (including pinned specs and out-in on non-strong
/// inputs).
Certificate poly_decide(const Instance& instance, const PartitionSpec& spec,
                        const Budget& budget = {});

bool poly_available(const PartitionSpec& spec);

}  // namespace bipart::cli
