#pragma once

// Report plumbing shared by every verification suite: exact-rational JSON
// encoding, the per-suite result record, and the reproducibility header
// that lets a run be replayed from its report alone.

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "slab/ordinal.hpp"
#include "slab/rational.hpp"

namespace slab {

inline const char* tool_version() { return "0.1.0"; }

// Display-only decimal rendering, always paired with the exact value.
std::string rat_approx(const Rat& r);

struct SuiteReport {
  std::string suite;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  bool pass = false;
  bool has_ratio = false;
  Rat max_ratio;                  // worst observed ratio for the suite bound
  nlohmann::ordered_json witness; // violating instance, null when none
  std::vector<std::string> notes;

  void ratio(const Rat& r) {
    if (!has_ratio || r > max_ratio) max_ratio = r;
    has_ratio = true;
  }
  nlohmann::ordered_json json() const;
};

// Header embedded in every emitted report: tool version, the fundamental
// sequence convention in force, effective capacities, and the master seed.
nlohmann::ordered_json report_header(uint64_t master_seed);

// Knobs shared by all verification suites. Suites pick their own defaults
// for anything left at the zero value.
struct SuiteConfig {
  uint64_t seed = 1;
  int samples = 0;              // 0 = suite default
  std::vector<Ordinal> alphas;  // empty = suite default
  // Optional reference-space override for L211/L213; unsupported spaces are
  // rejected with an explanation instead of running a vacuous suite.
  std::string space_override;
  // Replaces the suite's proved constant, to demonstrate that a too-small
  // claim is refuted with a witness. Ignored by the exact-value suites.
  std::optional<Rat> bound_override;
};

}  // namespace slab
