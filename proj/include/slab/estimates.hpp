#pragma once

// Domination constants between finite vector sequences, and the sampled
// inequality suites built on them. The exact path reduces the constant to
// a vertex enumeration: the reference ball {a : ||sum a_n e_{k_n}||_V <= 1}
// is a polytope cut out by the dual functionals of V, and the objective
// a -> ||sum a_n x_n||_X is a maximum of linear forms, so its maximum over
// the ball is attained at a vertex.

#include <optional>
#include <string>
#include <vector>

#include "slab/report.hpp"
#include "slab/spaces.hpp"

namespace slab {

enum class DominationMode { Exact, Sampled };

struct DominationReport {
  Rat lower_bound;
  std::optional<Rat> upper_bound;  // empty = unverified (sampled mode)
  bool exact = false;
  std::vector<Rat> witness;  // coefficients attaining lower_bound
  std::string mode;          // "exact_vertex" or "sampled"
  nlohmann::ordered_json json() const;
};

// Least C with ||sum a_n x_n||_X <= C ||sum a_n e_{k_n}||_V over all
// coefficient choices. xs must be normalized in X; ref_indices strictly
// increasing, one per vector. Exact mode requires |xs| within the exact
// arity capacity; sampled mode only certifies the lower bound.
DominationReport domination_constant(const std::vector<RatVec>& xs,
                                     const SpacePtr& X,
                                     const std::vector<int>& ref_indices,
                                     const SpacePtr& V, DominationMode mode,
                                     uint64_t seed = 1);

// suite_id in {P31, P24, L211, R212, L213}.
SuiteReport run_estimate_suite(const std::string& suite_id,
                               const SuiteConfig& cfg);

}  // namespace slab
