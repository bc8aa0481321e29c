#pragma once

// Sequence spaces with exactly computable norms on finitely supported
// rational vectors. A space is a small expression tree:
//
//   c0                    sup norm
//   l1                    sum norm
//   schreier(a)           max of |x| sums over admissible sets (level a)
//   rsum1(V)              scalar coordinate at index 1 glued to V by a
//                         1-sum; V sees indices shifted down by one
//   zv(Z, V)              block seminorm: max over breakpoint tuples
//                         1 <= m_0 < ... < m_n of the V-norm of
//                         sum_i ||x restricted to [m_(i-1), m_i)||_Z e_(m_(i-1))
//   restrict(V; m1,...)   the closed span of the listed V coordinates,
//                         with the inherited norm (indices stay put)
//   ilv(Z, V; m1,...)     sup-sum of Z acting on the listed coordinates
//                         (re-indexed 1,2,... in list order) and V acting
//                         on all the others (indices stay put)
//
// Every space here is 1-unconditional: the norm only sees absolute values
// of coordinates. Norms are exact rationals throughout; nothing is floated.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "slab/ordinal.hpp"
#include "slab/rational.hpp"

namespace slab {

// Finitely supported vector with rational coordinates at indices >= 1.
// Zero coordinates are never stored, so support() is exactly the nonzero
// index set.
class RatVec {
 public:
  RatVec() = default;

  const Rat& at(int i) const;          // 0 for indices off the support
  void set(int i, const Rat& v);       // setting 0 erases
  void add(int i, const Rat& v);
  void add_scaled(const RatVec& v, const Rat& c);

  bool zero() const { return entries_.empty(); }
  int min_index() const;               // 0 when the vector is zero
  int max_index() const;               // 0 when the vector is zero
  size_t support_size() const { return entries_.size(); }
  std::vector<int> support() const;

  const std::map<int, Rat>& entries() const { return entries_; }

  RatVec scaled(const Rat& c) const;
  Rat dot(const RatVec& other) const;

  std::string str() const;
  nlohmann::ordered_json json() const;  // [[index, "num", "den"], ...]

  bool operator==(const RatVec& o) const { return entries_ == o.entries_; }
  bool operator!=(const RatVec& o) const { return !(*this == o); }
  bool operator<(const RatVec& o) const { return entries_ < o.entries_; }

  static RatVec unit(int i);

 private:
  std::map<int, Rat> entries_;
};

// Expects an array of [index, numerator, denominator] triples; numerator
// and denominator may be JSON integers or decimal strings.
RatVec parse_ratvec(const nlohmann::json& j);

struct SpaceSpec;
using SpacePtr = std::shared_ptr<const SpaceSpec>;

struct SpaceSpec {
  enum class Kind { C0, L1, Schreier, RSum1, ZV, Restrict, Interleave };

  Kind kind = Kind::C0;
  Ordinal alpha;          // Schreier only
  SpacePtr a;             // RSum1: V; ZV: Z; Restrict: V; Interleave: Z
  SpacePtr b;             // ZV: V; Interleave: V
  std::vector<int> idx;   // Restrict / Interleave, strictly increasing

  // All constructions here preserve 1-unconditionality, and the canonical
  // basis projections they admit have norm one.
  bool is_one_unconditional = true;
  Rat projection_constant_claim = Rat(1);

  std::string str() const;

  static SpacePtr c0();
  static SpacePtr l1();
  static SpacePtr schreier(const Ordinal& alpha);
  static SpacePtr rsum1(SpacePtr right);
  static SpacePtr zv(SpacePtr base, SpacePtr weights);
  static SpacePtr restrict_to(SpacePtr of, std::vector<int> idx);
  static SpacePtr interleave(SpacePtr blocks, SpacePtr rest,
                             std::vector<int> idx);
};

// Grammar (whitespace free-form):
//   space := c0 | l1 | schreier(<ordinal>) | rsum1(space) | zv(space, space)
//          | restrict(space; i1,i2,...) | ilv(space, space; i1,i2,...)
SpacePtr parse_space(const std::string& text);

Rat norm(const SpacePtr& space, const RatVec& x);

// x / norm(x); rejects the zero vector.
RatVec normalize(const SpacePtr& space, const RatVec& x);

// Visits every breakpoint tuple the block seminorm of `zvspace` ranges over
// for x (the ascending subsets of [1 .. max support + 1] of size >= 2),
// together with the value contributed through that tuple. norm(zvspace, x)
// is exactly the maximum of the visited values (0 when x = 0).
void zv_scan(
    const SpacePtr& zvspace, const RatVec& x,
    const std::function<void(const std::vector<int>&, const Rat&)>& visit);

// Functionals phi, given by coefficient vectors with phi(x) = phi.dot(x),
// such that norm(x) = max over the list of phi.dot(x) for every x supported
// inside [1..window]. The list is closed under negation and deterministic.
// Combinatorial blowups (l1 sign patterns, admissible-set sign patterns
// past the configured set size, block-seminorm composites) raise
// CapacityError rather than degrade silently.
std::vector<RatVec> dual_functionals(const SpacePtr& space, int window);

// Deterministic pseudo-random normalized block sequence: [1..window] is cut
// into `count` chunks at uniformly chosen distinct points, each vector gets
// a uniform nonempty subset of its chunk as support, coordinates draw
// numerators from [-8..8] minus 0 and denominators from [1..8], and each
// vector is normalized in the given space. Successive supports are strictly
// separated, so the result is a block basis.
std::vector<RatVec> random_block_sequence(const SpacePtr& space, int count,
                                          int window, uint64_t seed);

}  // namespace slab
