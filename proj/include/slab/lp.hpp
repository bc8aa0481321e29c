#pragma once

// Exact rational linear programming, sized for the small programs that show
// up here (a handful of variables, up to a few thousand rows). Dictionary
// simplex with Bland's pivoting rule, so termination needs no perturbation
// and every reported optimum is exact.

#include <vector>

#include "slab/rational.hpp"

namespace slab {

struct SimplexGame {
  Rat value;               // min over the simplex of the row maximum
  std::vector<Rat> point;  // a minimizer, nonnegative with coordinate sum 1
};

// min over {a >= 0, sum a = 1} of max_j rows[j] . a. rows must be nonempty
// and rectangular with at least one column.
SimplexGame minimax_on_simplex(const std::vector<std::vector<Rat>>& rows);

struct LpSolution {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status;
  Rat value;               // objective at the optimum (Optimal only)
  std::vector<Rat> point;  // an optimal x (Optimal only)
};

// maximize c . x subject to A x <= b, x >= 0.
LpSolution solve_lp(const std::vector<std::vector<Rat>>& A,
                    const std::vector<Rat>& b, const std::vector<Rat>& c);

}  // namespace slab
