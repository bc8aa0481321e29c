#pragma once

// Finite-stage derivative machinery over hereditary families: iterated
// derivatives (remove the sets with no one-point extension inside the
// family), Cantor-Bendixson-style ranks of explicit finite families, and
// exact l1-lower certificates for finite vector sequences.
//
// Derivative queries against a transfinite family are decided through a
// probe: for nonempty F, membership of F in the k-th derivative reduces to
// one membership test of F extended by k consecutive elements, because
// pulling an extension element down to just above the current max never
// destroys membership (tested exhaustively against a search oracle). Only
// the empty set needs an honest search over first elements, and that search
// is horizon-limited: a negative answer below the horizon is reported as
// inexact rather than silently false.

#include <memory>
#include <vector>

#include "slab/finset.hpp"
#include "slab/report.hpp"
#include "slab/schreier.hpp"
#include "slab/spaces.hpp"

namespace slab {

class FamilyOracle;

struct DerivativeAnswer {
  bool member;
  // False only for a horizon-limited negative on an empty-set search: the
  // answer is "no witness below the horizon", not a proof of absence.
  bool exact;
};

// Is F in fam^(k)? k = 0 asks about fam itself. horizon bounds the search
// over first elements when F is empty (a Derived oracle's own horizon takes
// precedence).
DerivativeAnswer derivative_member(const FinSet& F, const FamilyOracle& fam,
                                   int k, int horizon = 200);

// Least k with fam^(k) empty; fam must be explicit. Equals 1 + the length
// of the longest extension chain inside the family.
int cb_rank_finite(const FamilyOracle& fam);

class FamilyOracle {
 public:
  enum class Kind { Schreier, Explicit, Derived };

  static FamilyOracle schreier(const Ordinal& alpha);
  // Validates heredity: dropping any element of a member yields a member.
  static FamilyOracle explicit_family(std::vector<FinSet> members);
  // The family base^(stages); horizon bounds empty-set extension searches.
  static FamilyOracle derived(const FamilyOracle& base, int stages,
                              int horizon);

  Kind kind() const;
  const std::vector<FinSet>& members() const;  // Explicit only

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
  friend DerivativeAnswer derivative_member(const FinSet&, const FamilyOracle&,
                                            int, int);
  friend int cb_rank_finite(const FamilyOracle&);
};

struct L1LowerCertificate {
  Rat rho;
  std::vector<RatVec> vectors;
  Rat min_value;                // exact min over the simplex of the norm
  std::vector<Rat> minimizer;   // a point attaining it
  bool member = false;          // min_value >= rho
  nlohmann::ordered_json json() const;
};

// Exact min over {a >= 0, sum a_n = 1} of ||sum a_n x_n||_X, as a linear
// program over the dual functionals. xs normalized, arity-capped.
L1LowerCertificate h_rho_member(const std::vector<RatVec>& xs,
                                const SpacePtr& X, const Rat& rho);

// The witness family over a window: every nonempty admissible set E paired
// with its top element (the index of the basis vector it contributes).
struct WitnessBranch {
  FinSet set;
  int leaf;  // max E
};
std::vector<WitnessBranch> build_pr46_tree(const Ordinal& alpha, int window);

// suite_id in {DERIV, PR46, HRHO}.
SuiteReport run_index_suite(const std::string& suite_id,
                            const SuiteConfig& cfg);

}  // namespace slab
