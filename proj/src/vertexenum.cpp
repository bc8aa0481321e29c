#include "slab/vertexenum.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "slab/capacity.hpp"

namespace slab {

namespace {

struct Vert {
  std::vector<Rat> x;
  std::vector<int> tight;  // constraint ids, ascending
};

int rank_of(const std::vector<const std::vector<Rat>*>& rows, int m) {
  std::vector<std::vector<Rat>> work;
  work.reserve(rows.size());
  for (const auto* r : rows) work.push_back(*r);
  int rank = 0;
  for (int col = 0; col < m && rank < static_cast<int>(work.size()); ++col) {
    int pivot = -1;
    for (int i = rank; i < static_cast<int>(work.size()); ++i)
      if (work[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(work[rank], work[pivot]);
    for (int i = rank + 1; i < static_cast<int>(work.size()); ++i) {
      if (work[i][col] == 0) continue;
      Rat f = work[i][col] / work[rank][col];
      for (int j = col; j < m; ++j) work[i][j] -= f * work[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::vector<int> shared_tight(const Vert& a, const Vert& b) {
  std::vector<int> out;
  std::set_intersection(a.tight.begin(), a.tight.end(), b.tight.begin(),
                        b.tight.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::vector<std::vector<Rat>> polytope_vertices(
    const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b,
    const Rat& box, int m) {
  if (m < 1 || m > 10)
    throw CapacityError("vertex enumeration in dimension " +
                        std::to_string(m));
  if (box <= 0) throw std::invalid_argument("box bound must be positive");
  if (A.size() != b.size()) throw std::invalid_argument("rhs size mismatch");
  for (const auto& row : A)
    if (static_cast<int>(row.size()) != m)
      throw std::invalid_argument("constraint row of wrong dimension");

  // Global constraint list: 2m box facets, then the input rows.
  std::vector<std::vector<Rat>> cons;
  std::vector<Rat> rhs;
  for (int i = 0; i < m; ++i) {
    std::vector<Rat> row(m, Rat(0));
    row[i] = Rat(1);
    cons.push_back(row);
    rhs.push_back(box);
    row[i] = Rat(-1);
    cons.push_back(row);
    rhs.push_back(box);
  }
  size_t first_cut = cons.size();
  for (size_t k = 0; k < A.size(); ++k) {
    cons.push_back(A[k]);
    rhs.push_back(b[k]);
  }

  auto tight_at = [&](const std::vector<Rat>& x, size_t upto) {
    std::vector<int> out;
    for (size_t k = 0; k < upto; ++k) {
      Rat lhs(0);
      for (int j = 0; j < m; ++j) lhs += cons[k][j] * x[j];
      if (lhs == rhs[k]) out.push_back(static_cast<int>(k));
    }
    return out;
  };

  // box corners
  std::vector<Vert> verts;
  for (uint32_t mask = 0; mask < (1u << m); ++mask) {
    Vert v;
    v.x.resize(m);
    for (int i = 0; i < m; ++i)
      v.x[i] = (mask >> i) & 1 ? box : Rat(-box);
    v.tight = tight_at(v.x, first_cut);
    verts.push_back(std::move(v));
  }

  for (size_t t = first_cut; t < cons.size(); ++t) {
    std::vector<Rat> slack(verts.size());
    bool any_out = false;
    for (size_t i = 0; i < verts.size(); ++i) {
      Rat lhs(0);
      for (int j = 0; j < m; ++j) lhs += cons[t][j] * verts[i].x[j];
      slack[i] = rhs[t] - lhs;
      if (slack[i] < 0) any_out = true;
    }
    if (!any_out) {
      for (size_t i = 0; i < verts.size(); ++i)
        if (slack[i] == 0) verts[i].tight.push_back(static_cast<int>(t));
      continue;
    }

    std::vector<size_t> inside, outside;
    for (size_t i = 0; i < verts.size(); ++i) {
      if (slack[i] > 0) inside.push_back(i);
      if (slack[i] < 0) outside.push_back(i);
    }

    std::map<std::vector<Rat>, Vert> fresh;
    for (size_t ui : inside) {
      for (size_t wi : outside) {
        const Vert& u = verts[ui];
        const Vert& w = verts[wi];
        std::vector<int> shared = shared_tight(u, w);
        if (static_cast<int>(shared.size()) < m - 1) continue;
        std::vector<const std::vector<Rat>*> rows;
        rows.reserve(shared.size());
        for (int k : shared) rows.push_back(&cons[static_cast<size_t>(k)]);
        if (rank_of(rows, m) != m - 1) continue;  // not an edge

        // cut point on the segment from u to w
        Rat lambda = slack[ui] / (slack[ui] - slack[wi]);
        Vert nv;
        nv.x.resize(m);
        for (int j = 0; j < m; ++j)
          nv.x[j] = u.x[j] + lambda * (w.x[j] - u.x[j]);
        if (fresh.count(nv.x)) continue;
        nv.tight = tight_at(nv.x, t + 1);
        fresh.emplace(nv.x, std::move(nv));
      }
    }

    std::vector<Vert> next;
    for (size_t i = 0; i < verts.size(); ++i) {
      if (slack[i] < 0) continue;
      if (slack[i] == 0) verts[i].tight.push_back(static_cast<int>(t));
      next.push_back(std::move(verts[i]));
    }
    for (auto& [x, v] : fresh) next.push_back(std::move(v));
    verts = std::move(next);
  }

  std::vector<std::vector<Rat>> out;
  out.reserve(verts.size());
  for (auto& v : verts) out.push_back(std::move(v.x));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace slab
