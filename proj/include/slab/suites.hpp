#pragma once

// Single dispatch point over every verification suite, plus the batch
// runner that executes all of them under one master seed.
//
// The ORACLE suite lives here rather than in a module: it cross-checks the
// norm evaluator against plain admissible-set enumeration and the
// membership decision against its three independent replay paths (weight
// table, incremental cursor, certificate), so it deliberately straddles
// module boundaries.

#include <string>
#include <vector>

#include "slab/report.hpp"

namespace slab {

// Every id run_suite accepts, in the order run_all executes them.
const std::vector<std::string>& suite_ids();

// Routes the id to its owning module. Unknown ids raise
// std::invalid_argument listing the known ones.
SuiteReport run_suite(const std::string& suite_id, const SuiteConfig& cfg);

struct AggregateReport {
  uint64_t master_seed = 1;
  bool pass = false;        // every suite ran to completion and passed
  int capacity_errors = 0;  // suites stopped by a capacity limit
  std::vector<SuiteReport> suites;

  nlohmann::ordered_json json() const;  // header + per-suite reports
};

// Runs every suite with the shared config. A suite stopped by a capacity
// error is recorded as failed with the message in its notes, and the run
// continues with the remaining suites.
AggregateReport run_all(const SuiteConfig& cfg);

}  // namespace slab
