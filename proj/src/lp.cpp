#include "slab/lp.hpp"

#include <stdexcept>

namespace slab {

namespace {

// Dictionary:
//   x_basic[i] = rhs[i] + sum_j T[i][j] * x_nonbasic[j]
//   z          = z0     + sum_j obj[j] * x_nonbasic[j]
// Variable ids: 0 is the phase-1 auxiliary, 1..n the decision variables,
// n+1..n+m the slacks. Bland's rule picks the smallest eligible id.
struct Dict {
  std::vector<int> basic;
  std::vector<int> nonbasic;
  std::vector<std::vector<Rat>> T;
  std::vector<Rat> rhs;
  std::vector<Rat> obj;
  Rat z0;

  void pivot(size_t row, size_t col) {
    Rat piv = T[row][col];
    size_t cols = nonbasic.size();
    std::swap(basic[row], nonbasic[col]);

    // row for the entering variable
    std::vector<Rat>& r = T[row];
    Rat inv = Rat(1) / piv;
    for (size_t j = 0; j < cols; ++j) r[j] = -r[j] * inv;
    r[col] = inv;
    rhs[row] = -rhs[row] * inv;

    for (size_t i = 0; i < T.size(); ++i) {
      if (i == row) continue;
      Rat f = T[i][col];
      if (f == 0) continue;
      T[i][col] = 0;
      for (size_t j = 0; j < cols; ++j) T[i][j] += f * r[j];
      rhs[i] += f * rhs[row];
    }
    Rat f = obj[col];
    if (f != 0) {
      obj[col] = 0;
      for (size_t j = 0; j < cols; ++j) obj[j] += f * r[j];
      z0 += f * rhs[row];
    }
  }

  // One Bland step. Returns false at an optimum; throws on an unbounded ray.
  bool step() {
    size_t cols = nonbasic.size();
    size_t enter = cols;
    for (size_t j = 0; j < cols; ++j)
      if (obj[j] > 0 && (enter == cols || nonbasic[j] < nonbasic[enter]))
        enter = j;
    if (enter == cols) return false;

    size_t leave = T.size();
    Rat best;
    for (size_t i = 0; i < T.size(); ++i) {
      if (T[i][enter] >= 0) continue;
      Rat limit = -rhs[i] / T[i][enter];
      if (leave == T.size() || limit < best ||
          (limit == best && basic[i] < basic[leave])) {
        leave = i;
        best = limit;
      }
    }
    if (leave == T.size()) throw std::runtime_error("unbounded ray");
    pivot(leave, enter);
    return true;
  }

  void run() {
    while (step()) {
    }
  }
};

}  // namespace

LpSolution solve_lp(const std::vector<std::vector<Rat>>& A,
                    const std::vector<Rat>& b, const std::vector<Rat>& c) {
  size_t m = A.size();
  size_t n = c.size();
  if (b.size() != m) throw std::invalid_argument("rhs size mismatch");
  for (const auto& row : A)
    if (row.size() != n) throw std::invalid_argument("ragged constraint row");

  Dict d;
  d.basic.resize(m);
  d.nonbasic.resize(n);
  for (size_t i = 0; i < m; ++i) d.basic[i] = static_cast<int>(n + 1 + i);
  for (size_t j = 0; j < n; ++j) d.nonbasic[j] = static_cast<int>(j + 1);
  d.rhs = b;
  d.T.assign(m, std::vector<Rat>(n));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < n; ++j) d.T[i][j] = -A[i][j];

  bool need_phase1 = false;
  for (const Rat& v : b)
    if (v < 0) need_phase1 = true;

  if (need_phase1) {
    // auxiliary column: x_slack = b - Ax + x0
    for (size_t i = 0; i < m; ++i) d.T[i].push_back(Rat(1));
    d.nonbasic.push_back(0);
    d.obj.assign(n + 1, Rat(0));
    d.obj[n] = Rat(-1);  // maximize -x0
    d.z0 = 0;

    size_t worst = 0;
    for (size_t i = 1; i < m; ++i)
      if (d.rhs[i] < d.rhs[worst]) worst = i;
    d.pivot(worst, n);  // feasible dictionary for the auxiliary program
    d.run();

    if (d.z0 != 0) {
      LpSolution out;
      out.status = LpSolution::Status::Infeasible;
      return out;
    }
    // drive x0 out of the basis if it sits there at value zero
    for (size_t i = 0; i < m; ++i) {
      if (d.basic[i] != 0) continue;
      size_t col = d.nonbasic.size();
      for (size_t j = 0; j < d.nonbasic.size(); ++j)
        if (d.T[i][j] != 0) {
          col = j;
          break;
        }
      if (col == d.nonbasic.size())
        throw std::logic_error("degenerate auxiliary row");
      d.pivot(i, col);
      break;
    }
    // delete the x0 column
    size_t col = 0;
    while (d.nonbasic[col] != 0) ++col;
    d.nonbasic.erase(d.nonbasic.begin() + static_cast<long>(col));
    for (auto& row : d.T) row.erase(row.begin() + static_cast<long>(col));
  }

  // phase-2 objective in terms of the current nonbasic set
  d.obj.assign(d.nonbasic.size(), Rat(0));
  d.z0 = 0;
  for (size_t v = 1; v <= n; ++v) {
    const Rat& cv = c[v - 1];
    if (cv == 0) continue;
    bool placed = false;
    for (size_t j = 0; j < d.nonbasic.size() && !placed; ++j)
      if (d.nonbasic[j] == static_cast<int>(v)) {
        d.obj[j] += cv;
        placed = true;
      }
    for (size_t i = 0; i < m && !placed; ++i)
      if (d.basic[i] == static_cast<int>(v)) {
        d.z0 += cv * d.rhs[i];
        for (size_t j = 0; j < d.nonbasic.size(); ++j)
          d.obj[j] += cv * d.T[i][j];
        placed = true;
      }
  }

  LpSolution out;
  try {
    d.run();
  } catch (const std::runtime_error&) {
    out.status = LpSolution::Status::Unbounded;
    return out;
  }

  out.status = LpSolution::Status::Optimal;
  out.value = d.z0;
  out.point.assign(n, Rat(0));
  for (size_t i = 0; i < m; ++i)
    if (d.basic[i] >= 1 && d.basic[i] <= static_cast<int>(n))
      out.point[static_cast<size_t>(d.basic[i] - 1)] = d.rhs[i];
  return out;
}

SimplexGame minimax_on_simplex(const std::vector<std::vector<Rat>>& rows) {
  if (rows.empty()) throw std::invalid_argument("no rows");
  size_t m = rows[0].size();
  if (m == 0) throw std::invalid_argument("no columns");
  for (const auto& r : rows)
    if (r.size() != m) throw std::invalid_argument("ragged row");

  // min t  s.t.  rows[j].a <= t,  a in the simplex;  t = u - w with
  // u, w >= 0, maximizing w - u.
  std::vector<std::vector<Rat>> A;
  std::vector<Rat> b;
  for (const auto& r : rows) {
    std::vector<Rat> row = r;
    row.push_back(Rat(-1));
    row.push_back(Rat(1));
    A.push_back(std::move(row));
    b.push_back(Rat(0));
  }
  std::vector<Rat> ones(m, Rat(1)), negones(m, Rat(-1));
  ones.push_back(Rat(0));
  ones.push_back(Rat(0));
  negones.push_back(Rat(0));
  negones.push_back(Rat(0));
  A.push_back(std::move(ones));
  b.push_back(Rat(1));
  A.push_back(std::move(negones));
  b.push_back(Rat(-1));

  std::vector<Rat> c(m + 2, Rat(0));
  c[m] = Rat(-1);
  c[m + 1] = Rat(1);

  LpSolution sol = solve_lp(A, b, c);
  if (sol.status != LpSolution::Status::Optimal)
    throw std::logic_error("simplex game program must be solvable");

  SimplexGame out;
  out.value = -sol.value;
  out.point.assign(sol.point.begin(), sol.point.begin() + static_cast<long>(m));
  return out;
}

}  // namespace slab
