#pragma once

// The transfinite family hierarchy S_alpha over finite subsets of N:
//   S_0       = { {n} : n >= 1 } plus the empty set
//   S_(b+1)   = { F : F splits into at most min F consecutive nonempty
//                 pieces, each a member of S_b }
//   S_lim     = { F : F in S_(lim[n]) for some 1 <= n <= min F }
// with the empty set a member at every level. All three clauses make each
// family hereditary (subsets of members are members) and spreading (moving
// elements to the right preserves membership); the test suite checks both
// exhaustively on small windows.
//
// Membership for the successor step is decided by dynamic programming over
// split points of the element list, not by a greedy rule, so correctness
// does not lean on any structure lemma. The MembershipCursor below *is*
// greedy (longest-feasible-prefix blocks); it exists so that exhaustive
// sweeps can amortize work across neighboring sets, and the tests pin it to
// member() on full windows before any sweep trusts it.

#include <cstdint>
#include <memory>
#include <vector>

#include "slab/finset.hpp"
#include "slab/ordinal.hpp"
#include "slab/rational.hpp"

namespace slab {

namespace detail {
struct Node;  // interned compiled form of an ordinal's family
}

// Replayable membership certificate: leaves for the base family, block
// splits for successor steps, the chosen sequence index for limit steps.
struct Certificate {
  enum class Kind { Leaf, Blocks, LimitChoice };
  Kind kind = Kind::Leaf;
  FinSet set;
  uint64_t limit_n = 0;                 // LimitChoice only
  std::vector<Certificate> children;    // Blocks: one per piece;
                                        // LimitChoice: exactly one

  nlohmann::ordered_json json() const;
};

class SchreierFamily {
 public:
  explicit SchreierFamily(const Ordinal& alpha);

  const Ordinal& alpha() const { return alpha_; }

  bool member(const FinSet& F) const;

  // Certificate if F is a member; nullopt-like empty pointer otherwise.
  std::unique_ptr<Certificate> partition_witness(const FinSet& F) const;

  // True iff some k > max F keeps F extendable. For nonempty F a single
  // probe with max F + 1 decides this: pulling the last element of a member
  // down (keeping it above the rest) preserves membership, so if any
  // extension works, the smallest one does. The probe lemma is verified
  // exhaustively in the tests. The empty set always extends to singletons.
  bool can_extend(const FinSet& F) const;

  // Precondition: F is a member (throws otherwise).
  bool is_maximal(const FinSet& F) const;

  const detail::Node* root() const { return root_; }

 private:
  Ordinal alpha_;
  const detail::Node* root_;
};

// All members inside [1..window], in lexicographic order (the empty set
// first). With only_maximal, keeps exactly the members with no valid
// extension inside the window; note this is maximality relative to the
// window, not absolute maximality (is_maximal decides that).
std::vector<FinSet> enumerate_admissible(int window, const Ordinal& alpha,
                                         bool only_maximal);

// max over family members E contained in elems of the weight sum over E.
// weights must be nonnegative and aligned with elems (strictly increasing).
// This is the workhorse behind the norm oracles: it never enumerates the
// family, it runs the same split recursion as member() on best-weight
// tables. The empty set counts, so the result is at least 0.
Rat max_admissible_weight(const Ordinal& alpha, const std::vector<int>& elems,
                          const std::vector<Rat>& weights);

// Checks a certificate against the recursion, independently of member().
bool validate_certificate(const Certificate& cert, const Ordinal& alpha);

// Incremental membership automaton over sets built element by element.
// push(k) appends k (which must exceed the current max) and reports whether
// the grown set is a member; pop() undoes the last push. A fresh cursor
// holds the empty set, which is always a member.
//
// Inside, each successor level keeps the greedy decomposition: extend the
// current piece while it stays a member of the child family, else close it
// and start a new piece. Greedy piece counts are minimal: if F splits into
// m feasible consecutive pieces, the longest feasible first piece covers
// the first piece of any such split, and cutting the covered elements from
// the remaining pieces keeps them feasible (hereditarily), so greedy never
// needs more pieces. Limit levels run one child automaton per admissible
// sequence index and OR their verdicts; a child gone dead stays dead by
// heredity.
class MembershipCursor {
 public:
  explicit MembershipCursor(const SchreierFamily& fam);
  ~MembershipCursor();
  MembershipCursor(const MembershipCursor&) = delete;
  MembershipCursor& operator=(const MembershipCursor&) = delete;

  bool push(int k);
  void pop();
  bool member() const { return dead_depth_ == 0; }
  int depth() const { return depth_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  int dead_depth_ = 0;
  int depth_ = 0;
  int last_ = 0;
};

}  // namespace slab
