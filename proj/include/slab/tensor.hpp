#pragma once

// Finite-window injective tensor products. A TensorOp is a finite rational
// matrix read as an operator from the dual of its column space into its row
// space; the injective norm is that operator norm, computed exactly by
// sweeping the row space's dual functional list. On top sit the square
// blocking (matrix shells max(i, j) = n), its projections, and the two-sided
// row/column splitting that turns a shell-block sequence into two banded
// sequences.

#include <map>
#include <string>
#include <vector>

#include "slab/report.hpp"
#include "slab/spaces.hpp"

namespace slab {

// Sparse rational matrix between coordinate spaces: row indices live in
// e_space's basis, column indices in f_space's. Zero rows are never stored.
struct TensorOp {
  SpacePtr e_space;
  SpacePtr f_space;
  std::map<int, RatVec> rows;

  TensorOp() = default;
  TensorOp(SpacePtr e, SpacePtr f)
      : e_space(std::move(e)), f_space(std::move(f)) {}

  Rat at(int i, int j) const;
  void set(int i, int j, const Rat& v);  // setting 0 erases
  void add(int i, int j, const Rat& v);
  void add_scaled(const TensorOp& o, const Rat& c);

  bool zero() const { return rows.empty(); }
  int max_row() const;  // 0 when zero
  int max_col() const;  // 0 when zero
  // shell index max(i, j) of a nonzero entry, smallest and largest
  int min_shell() const;  // 0 when zero
  int max_shell() const;  // 0 when zero

  // rows kept in [row_lo, row_hi), columns in [col_lo, col_hi)
  TensorOp restricted(int row_lo, int row_hi, int col_lo, int col_hi) const;
  TensorOp transpose() const;
  TensorOp scaled(const Rat& c) const;

  // the column vector g∘u, one coordinate per column of u
  RatVec apply_left(const RatVec& g) const;

  bool same_entries(const TensorOp& o) const { return rows == o.rows; }

  nlohmann::ordered_json json() const;
  static TensorOp parse(const nlohmann::json& j);
};

// Exact operator norm of u from (f_space)* into e_space: the max over the
// row space's dual functional list g of the f_space-norm of g∘u. Matrix
// support is capped per side by the tensor window.
Rat injective_norm(const TensorOp& u);

// The shell component of u: entries with max(i, j) = n, i.e. the difference
// between the [1..n]-square corner restriction and the [1..n-1] one.
TensorOp square_block_projection(const TensorOp& u, int n);

struct BlockSplit {
  std::vector<TensorOp> a;  // banded rows, columns before each block's shell
  std::vector<TensorOp> b;  // banded columns; first entry is zero
};

// Split a successive shell-block sequence u_n (min shell indices given in
// min_shells, which is validated) into a_n + b_n = u_n with a_n supported on
// rows [m_n, m_{n+1}) x columns [1, m_n) and b_n on columns [m_n, m_{n+1}),
// except that the first block is taken whole on the a side. Restrictions
// never raise the norm here (coordinate bases), so normalized input gives
// both parts norm at most 1.
BlockSplit lemma66_split(const std::vector<TensorOp>& u_blocks,
                         const std::vector<int>& min_shells);

// P61: banded-range operator sums against the scaled shell-start basis
//      vectors, with the upper-estimate constant 2; also replays the shell
//      projection identity and transpose invariance per sample.
// L66: normalized shell-block sequences: the split identity, both parts
//      norm at most 1, and the factor-4 domination by the min-shell basis
//      vectors.
SuiteReport run_tensor_suite(const std::string& suite_id,
                             const SuiteConfig& cfg);

}  // namespace slab
