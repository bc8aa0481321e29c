#include "slab/tensor.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "slab/capacity.hpp"
#include "slab/rng.hpp"

namespace slab {

namespace {

void check_pos(int i, int j) {
  if (i < 1 || j < 1)
    throw std::invalid_argument("matrix indices start at 1");
}

}  // namespace

Rat TensorOp::at(int i, int j) const {
  auto it = rows.find(i);
  return it == rows.end() ? Rat(0) : it->second.at(j);
}

void TensorOp::set(int i, int j, const Rat& v) {
  check_pos(i, j);
  RatVec& row = rows[i];
  row.set(j, v);
  if (row.zero()) rows.erase(i);
}

void TensorOp::add(int i, int j, const Rat& v) {
  check_pos(i, j);
  RatVec& row = rows[i];
  row.add(j, v);
  if (row.zero()) rows.erase(i);
}

void TensorOp::add_scaled(const TensorOp& o, const Rat& c) {
  if (c == 0) return;
  for (const auto& [i, row] : o.rows)
    for (const auto& [j, v] : row.entries()) add(i, j, v * c);
}

int TensorOp::max_row() const {
  return rows.empty() ? 0 : rows.rbegin()->first;
}

int TensorOp::max_col() const {
  int best = 0;
  for (const auto& [i, row] : rows) best = std::max(best, row.max_index());
  return best;
}

int TensorOp::min_shell() const {
  int best = std::numeric_limits<int>::max();
  for (const auto& [i, row] : rows)
    best = std::min(best, std::max(i, row.min_index()));
  return rows.empty() ? 0 : best;
}

int TensorOp::max_shell() const {
  int best = 0;
  for (const auto& [i, row] : rows)
    best = std::max(best, std::max(i, row.max_index()));
  return best;
}

TensorOp TensorOp::restricted(int row_lo, int row_hi, int col_lo,
                              int col_hi) const {
  TensorOp out(e_space, f_space);
  for (const auto& [i, row] : rows) {
    if (i < row_lo || i >= row_hi) continue;
    for (const auto& [j, v] : row.entries())
      if (j >= col_lo && j < col_hi) out.set(i, j, v);
  }
  return out;
}

TensorOp TensorOp::transpose() const {
  TensorOp out(f_space, e_space);
  for (const auto& [i, row] : rows)
    for (const auto& [j, v] : row.entries()) out.set(j, i, v);
  return out;
}

TensorOp TensorOp::scaled(const Rat& c) const {
  TensorOp out(e_space, f_space);
  if (c == 0) return out;
  for (const auto& [i, row] : rows) out.rows.emplace(i, row.scaled(c));
  return out;
}

RatVec TensorOp::apply_left(const RatVec& g) const {
  RatVec out;
  for (const auto& [i, row] : rows) {
    const Rat& gi = g.at(i);
    if (gi != 0) out.add_scaled(row, gi);
  }
  return out;
}

nlohmann::ordered_json TensorOp::json() const {
  nlohmann::ordered_json j;
  j["e_space"] = e_space->str();
  j["f_space"] = f_space->str();
  nlohmann::ordered_json es = nlohmann::ordered_json::array();
  for (const auto& [i, row] : rows)
    for (const auto& [c, v] : row.entries())
      es.push_back({i, c, v.get_num().get_str(), v.get_den().get_str()});
  j["entries"] = es;
  return j;
}

TensorOp TensorOp::parse(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("e_space") || !j.contains("f_space") ||
      !j.contains("entries"))
    throw std::invalid_argument(
        "matrix JSON needs e_space, f_space and entries");
  TensorOp out(parse_space(j.at("e_space").get<std::string>()),
               parse_space(j.at("f_space").get<std::string>()));
  auto num_of = [](const nlohmann::json& x) -> Int {
    if (x.is_number_integer()) return Int(static_cast<long>(x.get<int64_t>()));
    if (x.is_string()) return Int(x.get<std::string>());
    throw std::invalid_argument("matrix entry parts must be integers");
  };
  for (const auto& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 4)
      throw std::invalid_argument("matrix entries are [i, j, num, den]");
    const int r = e[0].get<int>();
    const int c = e[1].get<int>();
    Int num = num_of(e[2]), den = num_of(e[3]);
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rat v(num, den);
    v.canonicalize();
    out.add(r, c, v);
  }
  return out;
}

Rat injective_norm(const TensorOp& u) {
  if (u.zero()) return Rat(0);
  const int cap = capacity().tensor_window;
  if (u.max_row() > cap || u.max_col() > cap)
    throw CapacityError("matrix support exceeds the tensor window " +
                        std::to_string(cap) + " (rows to " +
                        std::to_string(u.max_row()) + ", columns to " +
                        std::to_string(u.max_col()) + ")");
  // distinct dual functionals of the row space, seen through u's row
  // support only; each yields a candidate column vector to measure
  std::vector<int> rsup;
  for (const auto& [i, row] : u.rows) rsup.push_back(i);
  std::set<std::vector<Rat>> seen;
  Rat best(0);
  for (const RatVec& g : dual_functionals(u.e_space, u.max_row())) {
    std::vector<Rat> key(rsup.size());
    bool any = false;
    for (size_t t = 0; t < rsup.size(); ++t) {
      key[t] = g.at(rsup[t]);
      if (key[t] != 0) any = true;
    }
    if (!any || !seen.insert(std::move(key)).second) continue;
    Rat val = norm(u.f_space, u.apply_left(g));
    if (val > best) best = val;
  }
  return best;
}

TensorOp square_block_projection(const TensorOp& u, int n) {
  if (n < 1) throw std::invalid_argument("shell index must be >= 1");
  TensorOp out(u.e_space, u.f_space);
  for (const auto& [i, row] : u.rows) {
    if (i > n) continue;
    for (const auto& [j, v] : row.entries())
      if (std::max(i, j) == n) out.set(i, j, v);
  }
  return out;
}

BlockSplit lemma66_split(const std::vector<TensorOp>& u_blocks,
                         const std::vector<int>& min_shells) {
  if (u_blocks.empty())
    throw std::invalid_argument("need at least one block");
  if (min_shells.size() != u_blocks.size())
    throw std::invalid_argument("one min shell index per block");
  const std::string ename = u_blocks.front().e_space->str();
  const std::string fname = u_blocks.front().f_space->str();
  for (size_t n = 0; n < u_blocks.size(); ++n) {
    const TensorOp& un = u_blocks[n];
    if (un.zero())
      throw std::invalid_argument("zero block has no shell support");
    if (un.e_space->str() != ename || un.f_space->str() != fname)
      throw std::invalid_argument("blocks must share their spaces");
    if (un.min_shell() != min_shells[n])
      throw std::invalid_argument(
          "min shell list does not match the blocks (block " +
          std::to_string(n + 1) + " starts at shell " +
          std::to_string(un.min_shell()) + ")");
    if (n + 1 < u_blocks.size() &&
        un.max_shell() >= u_blocks[n + 1].min_shell())
      throw std::invalid_argument("blocks must occupy successive shells");
  }
  const int huge = std::numeric_limits<int>::max();
  BlockSplit out;
  for (size_t n = 0; n < u_blocks.size(); ++n) {
    const TensorOp& un = u_blocks[n];
    if (n == 0) {
      // the first band on the a side opens all the way down to 1, so the
      // whole block goes there
      out.a.push_back(un);
      out.b.push_back(TensorOp(un.e_space, un.f_space));
      continue;
    }
    const int m = min_shells[n];
    const int next = n + 1 < u_blocks.size() ? min_shells[n + 1]
                                             : u_blocks.back().max_shell() + 1;
    out.a.push_back(un.restricted(m, next, 1, m));
    out.b.push_back(un.restricted(1, huge, m, next));
  }
  return out;
}

// ---------------------------------------------------------------------------
// suites

namespace {

void set_witness(SuiteReport& rep, nlohmann::ordered_json w) {
  rep.pass = false;
  if (rep.witness.is_null()) rep.witness = std::move(w);
}

Rat palette(Rng& rng) {
  const int num = 1 + static_cast<int>(rng.below(3));
  const int den = 1 + static_cast<int>(rng.below(3));
  Rat v = rat(num, den);
  return rng.flip() ? v : -v;
}

// ascending choice of `count` distinct values from [lo..hi]
std::vector<int> pick_ascending(Rng& rng, int lo, int hi, int count) {
  std::set<int> got;
  while (static_cast<int>(got.size()) < count) got.insert(rng.range(lo, hi));
  return {got.begin(), got.end()};
}

std::vector<Ordinal> tensor_alphas(const SuiteConfig& cfg) {
  if (!cfg.alphas.empty()) return cfg.alphas;
  return {Ordinal::nat(1), Ordinal::nat(2)};
}

nlohmann::ordered_json alphas_json(const std::vector<Ordinal>& alphas) {
  nlohmann::ordered_json names = nlohmann::ordered_json::array();
  for (const auto& a : alphas) names.push_back(a.str());
  return names;
}

SuiteReport suite_p61(const SuiteConfig& cfg) {
  SuiteReport rep;
  rep.suite = "P61";
  const int samples = cfg.samples > 0 ? cfg.samples : 200;
  const int window = 8;
  const Rat bound = cfg.bound_override.value_or(Rat(2));
  auto alphas = tensor_alphas(cfg);
  rep.config = {{"seed", cfg.seed},
                {"samples", samples},
                {"window", window},
                {"bound", rat_str(bound)},
                {"alphas", alphas_json(alphas)}};
  rep.pass = true;
  for (size_t ai = 0; ai < alphas.size() && rep.pass; ++ai) {
    SpacePtr X = SpaceSpec::schreier(alphas[ai]);
    for (int s = 0; s < samples && rep.pass; ++s) {
      Rng rng = sample_rng(cfg.seed, (300 + ai) * 1048576 +
                                         static_cast<uint64_t>(s));
      const int nblocks = 2 + static_cast<int>(rng.below(2));
      // row bands [k_{n-1}, k_n) from cuts 1 = k_0 < ... < k_l <= 9
      std::vector<int> cuts = {1};
      for (int c : pick_ascending(rng, 2, window + 1, nblocks))
        cuts.push_back(c);
      std::vector<TensorOp> blocks;
      TensorOp sum(X, X);
      for (int n = 0; n < nblocks; ++n) {
        TensorOp un(X, X);
        const int picks = 1 + static_cast<int>(rng.below(3));
        for (int t = 0; t < picks; ++t)
          un.add(rng.range(cuts[n], cuts[n + 1] - 1), rng.range(1, window),
                 palette(rng));
        sum.add_scaled(un, Rat(1));
        blocks.push_back(std::move(un));
      }
      const Rat lhs = injective_norm(sum);
      RatVec marks;
      for (int n = 0; n < nblocks; ++n)
        marks.add(cuts[n], injective_norm(blocks[n]));
      const Rat rhs = bound * norm(X, marks);
      if (rhs == 0) {
        if (lhs != 0)
          set_witness(rep, {{"alpha", alphas[ai].str()},
                            {"sample", s},
                            {"check", "zero blocks, nonzero sum"}});
        continue;
      }
      if (lhs > rhs)
        set_witness(rep, {{"alpha", alphas[ai].str()},
                          {"sample", s},
                          {"lhs", rat_json(lhs)},
                          {"rhs", rat_json(rhs)},
                          {"cuts", cuts}});
      else
        rep.ratio(lhs / rhs);
      // shell projections stitch the operator back together...
      TensorOp stitched(X, X);
      for (int n = 1; n <= sum.max_shell(); ++n)
        stitched.add_scaled(square_block_projection(sum, n), Rat(1));
      if (!stitched.same_entries(sum)) {
        set_witness(rep, {{"alpha", alphas[ai].str()},
                          {"sample", s},
                          {"check", "shell projection identity"}});
        continue;
      }
      // ...different shells never overlap...
      if (sum.max_shell() >= 2) {
        const int na = rng.range(1, sum.max_shell());
        const int nb = rng.range(1, sum.max_shell());
        if (na != nb &&
            !square_block_projection(square_block_projection(sum, na), nb)
                 .zero())
          set_witness(rep, {{"alpha", alphas[ai].str()},
                            {"sample", s},
                            {"check", "shell projections overlap"}});
      }
      // ...and the adjoint has the same norm
      if (injective_norm(sum.transpose()) != lhs)
        set_witness(rep, {{"alpha", alphas[ai].str()},
                          {"sample", s},
                          {"check", "transpose changed the norm"}});
    }
  }
  return rep;
}

SuiteReport suite_l66(const SuiteConfig& cfg) {
  SuiteReport rep;
  rep.suite = "L66";
  const int samples = cfg.samples > 0 ? cfg.samples : 200;
  const int window = 8;
  const Rat bound = cfg.bound_override.value_or(Rat(4));
  auto alphas = tensor_alphas(cfg);
  rep.config = {{"seed", cfg.seed},
                {"samples", samples},
                {"window", window},
                {"bound", rat_str(bound)},
                {"alphas", alphas_json(alphas)}};
  rep.pass = true;
  for (size_t ai = 0; ai < alphas.size() && rep.pass; ++ai) {
    SpacePtr X = SpaceSpec::schreier(alphas[ai]);
    for (int s = 0; s < samples && rep.pass; ++s) {
      Rng rng = sample_rng(cfg.seed, (400 + ai) * 1048576 +
                                         static_cast<uint64_t>(s));
      const int nblocks = 2 + static_cast<int>(rng.below(2));
      // disjoint shell ranges [v_0, v_1], [v_2, v_3], ...
      auto v = pick_ascending(rng, 1, window, 2 * nblocks);
      std::vector<TensorOp> blocks;
      std::vector<int> mins;
      for (int n = 0; n < nblocks; ++n) {
        const int lo = v[2 * n], hi = v[2 * n + 1];
        TensorOp un(X, X);
        const int extras = static_cast<int>(rng.below(3));
        for (int t = 0; t < extras; ++t) {
          const int shell = rng.range(lo, hi);
          if (rng.flip())
            un.add(shell, rng.range(1, shell), palette(rng));
          else
            un.add(rng.range(1, shell), shell, palette(rng));
        }
        // anchor the min shell so the block is nonzero exactly from lo on
        un.set(lo, lo, palette(rng));
        blocks.push_back(un.scaled(Rat(1) / injective_norm(un)));
        mins.push_back(lo);
      }
      BlockSplit split = lemma66_split(blocks, mins);
      for (int n = 0; n < nblocks && rep.pass; ++n) {
        TensorOp back = split.a[n];
        back.add_scaled(split.b[n], Rat(1));
        if (!back.same_entries(blocks[n])) {
          set_witness(rep, {{"alpha", alphas[ai].str()},
                            {"sample", s},
                            {"block", n + 1},
                            {"check", "split does not sum back"}});
          break;
        }
        if (injective_norm(split.a[n]) > 1 ||
            injective_norm(split.b[n]) > 1) {
          set_witness(rep, {{"alpha", alphas[ai].str()},
                            {"sample", s},
                            {"block", n + 1},
                            {"check", "split part above norm one"}});
          break;
        }
      }
      if (!rep.pass) break;
      std::vector<Rat> coeff;
      TensorOp combo(X, X);
      RatVec marks;
      for (int n = 0; n < nblocks; ++n) {
        coeff.push_back(palette(rng));
        combo.add_scaled(blocks[n], coeff.back());
        marks.add(mins[n], coeff.back());
      }
      const Rat lhs = injective_norm(combo);
      const Rat rhs = bound * norm(X, marks);
      if (lhs > rhs) {
        nlohmann::ordered_json cj = nlohmann::ordered_json::array();
        for (const Rat& c : coeff) cj.push_back(rat_json(c));
        set_witness(rep, {{"alpha", alphas[ai].str()},
                          {"sample", s},
                          {"lhs", rat_json(lhs)},
                          {"rhs", rat_json(rhs)},
                          {"coefficients", cj},
                          {"min_shells", mins}});
      } else if (rhs != 0) {
        rep.ratio(lhs / rhs);
      }
    }
  }
  return rep;
}

}  // namespace

SuiteReport run_tensor_suite(const std::string& suite_id,
                             const SuiteConfig& cfg) {
  if (suite_id == "P61") return suite_p61(cfg);
  if (suite_id == "L66") return suite_l66(cfg);
  throw std::invalid_argument("unknown tensor suite '" + suite_id +
                              "' (expected P61 or L66)");
}

}  // namespace slab
