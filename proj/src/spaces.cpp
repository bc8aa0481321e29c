#include "slab/spaces.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstring>
#include <set>
#include <sstream>
#include <stdexcept>

#include "slab/capacity.hpp"
#include "slab/rng.hpp"
#include "slab/schreier.hpp"

namespace slab {

namespace {
const Rat kZeroRat(0);
}

// --- RatVec ----------------------------------------------------------------

const Rat& RatVec::at(int i) const {
  auto it = entries_.find(i);
  return it == entries_.end() ? kZeroRat : it->second;
}

void RatVec::set(int i, const Rat& v) {
  if (i < 1) throw std::invalid_argument("vector index must be >= 1");
  if (v == 0)
    entries_.erase(i);
  else
    entries_[i] = v;
}

void RatVec::add(int i, const Rat& v) { set(i, at(i) + v); }

void RatVec::add_scaled(const RatVec& v, const Rat& c) {
  if (c == 0) return;
  for (const auto& [i, q] : v.entries_) add(i, c * q);
}

int RatVec::min_index() const {
  return entries_.empty() ? 0 : entries_.begin()->first;
}

int RatVec::max_index() const {
  return entries_.empty() ? 0 : entries_.rbegin()->first;
}

std::vector<int> RatVec::support() const {
  std::vector<int> out;
  out.reserve(entries_.size());
  for (const auto& [i, q] : entries_) out.push_back(i);
  return out;
}

RatVec RatVec::scaled(const Rat& c) const {
  RatVec out;
  if (c == 0) return out;
  for (const auto& [i, q] : entries_)
    out.entries_.emplace_hint(out.entries_.end(), i, c * q);
  return out;
}

Rat RatVec::dot(const RatVec& other) const {
  // walk the shorter support
  const RatVec& small = support_size() <= other.support_size() ? *this : other;
  const RatVec& big = support_size() <= other.support_size() ? other : *this;
  Rat acc(0);
  for (const auto& [i, q] : small.entries_) {
    auto it = big.entries_.find(i);
    if (it != big.entries_.end()) acc += q * it->second;
  }
  return acc;
}

std::string RatVec::str() const {
  if (entries_.empty()) return "0";
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [i, q] : entries_) {
    if (!first) os << ", ";
    first = false;
    os << i << ": " << rat_str(q);
  }
  os << "}";
  return os.str();
}

nlohmann::ordered_json RatVec::json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [i, q] : entries_) {
    nlohmann::ordered_json entry = nlohmann::ordered_json::array();
    entry.push_back(i);
    entry.push_back(q.get_num().get_str());
    entry.push_back(q.get_den().get_str());
    arr.push_back(std::move(entry));
  }
  return arr;
}

RatVec RatVec::unit(int i) {
  RatVec v;
  v.set(i, Rat(1));
  return v;
}

namespace {

Int json_int(const nlohmann::json& j, const char* what) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument(std::string("bad integer string for ") +
                                  what);
    }
  }
  throw std::invalid_argument(std::string("expected integer or string for ") +
                              what);
}

}  // namespace

RatVec parse_ratvec(const nlohmann::json& j) {
  if (!j.is_array())
    throw std::invalid_argument("vector must be an array of triples");
  RatVec out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 3)
      throw std::invalid_argument(
          "vector entry must be [index, numerator, denominator]");
    if (!e[0].is_number_integer() || e[0].get<long long>() < 1 ||
        e[0].get<long long>() > 1000000000)
      throw std::invalid_argument("vector index must be a positive integer");
    int idx = static_cast<int>(e[0].get<long long>());
    Int num = json_int(e[1], "numerator");
    Int den = json_int(e[2], "denominator");
    if (den <= 0) throw std::invalid_argument("denominator must be positive");
    if (out.at(idx) != 0)
      throw std::invalid_argument("duplicate vector index " +
                                  std::to_string(idx));
    Rat q(num, den);
    q.canonicalize();
    out.set(idx, q);
  }
  return out;
}

// --- SpaceSpec -------------------------------------------------------------

namespace {

void check_indices(const std::vector<int>& idx) {
  if (idx.empty()) throw std::invalid_argument("empty index list");
  int prev = 0;
  for (int i : idx) {
    if (i <= prev)
      throw std::invalid_argument(
          "index list must be strictly increasing and >= 1");
    prev = i;
  }
}

}  // namespace

SpacePtr SpaceSpec::c0() {
  auto s = std::make_shared<SpaceSpec>();
  s->kind = Kind::C0;
  return s;
}

SpacePtr SpaceSpec::l1() {
  auto s = std::make_shared<SpaceSpec>();
  s->kind = Kind::L1;
  return s;
}

SpacePtr SpaceSpec::schreier(const Ordinal& alpha) {
  auto s = std::make_shared<SpaceSpec>();
  s->kind = Kind::Schreier;
  s->alpha = alpha;
  return s;
}

SpacePtr SpaceSpec::rsum1(SpacePtr right) {
  if (!right) throw std::invalid_argument("rsum1 needs a component space");
  auto s = std::make_shared<SpaceSpec>();
  s->kind = Kind::RSum1;
  s->a = std::move(right);
  return s;
}

SpacePtr SpaceSpec::zv(SpacePtr base, SpacePtr weights) {
  if (!base || !weights)
    throw std::invalid_argument("zv needs two component spaces");
  auto s = std::make_shared<SpaceSpec>();
  s->kind = Kind::ZV;
  s->a = std::move(base);
  s->b = std::move(weights);
  return s;
}

SpacePtr SpaceSpec::restrict_to(SpacePtr of, std::vector<int> idx) {
  if (!of) throw std::invalid_argument("restrict needs a component space");
  check_indices(idx);
  auto s = std::make_shared<SpaceSpec>();
  s->kind = Kind::Restrict;
  s->a = std::move(of);
  s->idx = std::move(idx);
  return s;
}

SpacePtr SpaceSpec::interleave(SpacePtr blocks, SpacePtr rest,
                               std::vector<int> idx) {
  if (!blocks || !rest)
    throw std::invalid_argument("ilv needs two component spaces");
  check_indices(idx);
  auto s = std::make_shared<SpaceSpec>();
  s->kind = Kind::Interleave;
  s->a = std::move(blocks);
  s->b = std::move(rest);
  s->idx = std::move(idx);
  return s;
}

std::string SpaceSpec::str() const {
  auto join = [](const std::vector<int>& idx) {
    std::string out;
    for (size_t i = 0; i < idx.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(idx[i]);
    }
    return out;
  };
  switch (kind) {
    case Kind::C0:
      return "c0";
    case Kind::L1:
      return "l1";
    case Kind::Schreier:
      return "schreier(" + alpha.str() + ")";
    case Kind::RSum1:
      return "rsum1(" + a->str() + ")";
    case Kind::ZV:
      return "zv(" + a->str() + ", " + b->str() + ")";
    case Kind::Restrict:
      return "restrict(" + a->str() + "; " + join(idx) + ")";
    case Kind::Interleave:
      return "ilv(" + a->str() + ", " + b->str() + "; " + join(idx) + ")";
  }
  return "";  // unreachable
}

// --- parser ----------------------------------------------------------------

namespace {

struct SpaceParser {
  const std::string& s;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("bad space at position " +
                                std::to_string(pos) + ": " + what);
  }

  void ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }

  void expect(char c) {
    ws();
    if (pos >= s.size() || s[pos] != c)
      fail(std::string("expected '") + c + "'");
    ++pos;
  }

  std::string ident() {
    ws();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected a space name");
    return s.substr(start, pos - start);
  }

  int integer() {
    ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) fail("expected an index");
    if (pos - start > 9) fail("index out of range");
    return std::stoi(s.substr(start, pos - start));
  }

  std::vector<int> indices() {
    std::vector<int> out;
    out.push_back(integer());
    ws();
    while (pos < s.size() && s[pos] == ',') {
      ++pos;
      out.push_back(integer());
      ws();
    }
    return out;
  }

  // Consumes an ordinal expression up to (and including) the parenthesis
  // closing the enclosing call: the ordinal grammar has its own parser, so
  // just balance parentheses to find the boundary.
  Ordinal ordinal_arg() {
    ws();
    size_t start = pos;
    int depth = 0;
    while (pos < s.size()) {
      char c = s[pos];
      if (c == '(') ++depth;
      if (c == ')') {
        if (depth == 0) break;
        --depth;
      }
      ++pos;
    }
    if (pos >= s.size()) fail("unterminated ordinal argument");
    std::string inner = s.substr(start, pos - start);
    ++pos;  // consume ')'
    return parse_ordinal(inner);
  }

  SpacePtr space() {
    std::string id = ident();
    if (id == "c0") return SpaceSpec::c0();
    if (id == "l1") return SpaceSpec::l1();
    if (id == "schreier") {
      expect('(');
      return SpaceSpec::schreier(ordinal_arg());
    }
    if (id == "rsum1") {
      expect('(');
      SpacePtr r = space();
      expect(')');
      return SpaceSpec::rsum1(std::move(r));
    }
    if (id == "zv") {
      expect('(');
      SpacePtr z = space();
      expect(',');
      SpacePtr v = space();
      expect(')');
      return SpaceSpec::zv(std::move(z), std::move(v));
    }
    if (id == "restrict") {
      expect('(');
      SpacePtr v = space();
      expect(';');
      std::vector<int> m = indices();
      expect(')');
      return SpaceSpec::restrict_to(std::move(v), std::move(m));
    }
    if (id == "ilv") {
      expect('(');
      SpacePtr z = space();
      expect(',');
      SpacePtr v = space();
      expect(';');
      std::vector<int> m = indices();
      expect(')');
      return SpaceSpec::interleave(std::move(z), std::move(v), std::move(m));
    }
    fail("unknown space '" + id + "'");
  }
};

}  // namespace

SpacePtr parse_space(const std::string& text) {
  SpaceParser p{text};
  SpacePtr out = p.space();
  p.ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return out;
}

// --- norms -------------------------------------------------------------

namespace {

// The index-1 coordinate is the scalar summand; everything above it shifts
// down by one for the component space.
RatVec rsum1_tail(const RatVec& x) {
  RatVec tail;
  for (const auto& [i, q] : x.entries())
    if (i >= 2) tail.set(i - 1, q);
  return tail;
}

void split_interleave(const SpaceSpec& sp, const RatVec& x, RatVec& zpart,
                      RatVec& vpart) {
  for (const auto& [i, q] : x.entries()) {
    auto it = std::lower_bound(sp.idx.begin(), sp.idx.end(), i);
    if (it != sp.idx.end() && *it == i) {
      int rank = static_cast<int>(it - sp.idx.begin()) + 1;
      zpart.set(rank, q);
    } else {
      vpart.set(i, q);
    }
  }
}

// Shared enumeration behind the block seminorm and zv_scan. For every
// ascending breakpoint tuple m_0 < ... < m_n inside [1 .. max support + 1]
// with n >= 1, visit(tuple, value) receives the V-norm of the vector whose
// m_(i-1) coordinate is the Z-norm of x restricted to [m_(i-1), m_i).
// Larger breakpoints change nothing: a segment past the support has Z-norm
// zero and contributes no coordinate, and widening the last segment beyond
// max support + 1 leaves its restriction as-is, so the bounded maximum is
// the true supremum.
template <typename Fn>
void zv_enumerate(const SpaceSpec& sp, const RatVec& x, Fn&& visit) {
  if (x.zero()) return;
  int top = x.max_index();
  require_window(top + 1, capacity().zv_window + 1,
                 "block-seminorm breakpoint range");
  int universe = top + 1;

  // segment Z-norms for every breakpoint pair lo < hi: [lo, hi)
  std::vector<std::vector<Rat>> seg(
      static_cast<size_t>(universe) + 1,
      std::vector<Rat>(static_cast<size_t>(universe) + 1));
  for (int lo = 1; lo <= universe; ++lo) {
    RatVec piece;
    for (int hi = lo + 1; hi <= universe; ++hi) {
      const Rat& c = x.at(hi - 1);
      if (c != 0) piece.set(hi - 1, c);
      seg[lo][hi] = norm(sp.a, piece);
    }
  }

  std::vector<int> bp;
  for (uint32_t mask = 0; mask < (1u << universe); ++mask) {
    if (std::popcount(mask) < 2) continue;
    bp.clear();
    for (uint32_t m = mask; m != 0; m &= m - 1)
      bp.push_back(std::countr_zero(m) + 1);
    RatVec varg;
    for (size_t t = 0; t + 1 < bp.size(); ++t) {
      const Rat& c = seg[bp[t]][bp[t + 1]];
      if (c != 0) varg.set(bp[t], c);
    }
    visit(bp, norm(sp.b, varg));
  }
}

Rat zv_norm(const SpaceSpec& sp, const RatVec& x) {
  Rat best(0);
  zv_enumerate(sp, x, [&best](const std::vector<int>&, const Rat& value) {
    if (value > best) best = value;
  });
  return best;
}

}  // namespace

void zv_scan(
    const SpacePtr& zvspace, const RatVec& x,
    const std::function<void(const std::vector<int>&, const Rat&)>& visit) {
  if (!zvspace || zvspace->kind != SpaceSpec::Kind::ZV)
    throw std::invalid_argument("zv_scan needs a zv space");
  zv_enumerate(*zvspace, x, visit);
}

Rat norm(const SpacePtr& space, const RatVec& x) {
  if (!space) throw std::invalid_argument("null space");
  switch (space->kind) {
    case SpaceSpec::Kind::C0: {
      Rat best(0);
      for (const auto& [i, q] : x.entries()) {
        Rat a = rabs(q);
        if (a > best) best = a;
      }
      return best;
    }

    case SpaceSpec::Kind::L1: {
      Rat total(0);
      for (const auto& [i, q] : x.entries()) total += rabs(q);
      return total;
    }

    case SpaceSpec::Kind::Schreier: {
      std::vector<int> elems;
      std::vector<Rat> weights;
      elems.reserve(x.support_size());
      weights.reserve(x.support_size());
      for (const auto& [i, q] : x.entries()) {
        elems.push_back(i);
        weights.push_back(rabs(q));
      }
      // Members reaching outside the support can be trimmed to it without
      // losing weight (subsets of members are members), so optimizing over
      // the support alone is exact.
      return max_admissible_weight(space->alpha, elems, weights);
    }

    case SpaceSpec::Kind::RSum1:
      return rabs(x.at(1)) + norm(space->a, rsum1_tail(x));

    case SpaceSpec::Kind::ZV:
      return zv_norm(*space, x);

    case SpaceSpec::Kind::Restrict: {
      for (const auto& [i, q] : x.entries())
        if (!std::binary_search(space->idx.begin(), space->idx.end(), i))
          throw std::invalid_argument(
              "vector has support outside the restricted coordinates (index " +
              std::to_string(i) + ")");
      return norm(space->a, x);
    }

    case SpaceSpec::Kind::Interleave: {
      RatVec zpart, vpart;
      split_interleave(*space, x, zpart, vpart);
      return rmax(norm(space->a, zpart), norm(space->b, vpart));
    }
  }
  throw std::logic_error("unhandled space kind");
}

RatVec normalize(const SpacePtr& space, const RatVec& x) {
  Rat n = norm(space, x);
  if (n == 0) throw std::invalid_argument("cannot normalize the zero vector");
  return x.scaled(Rat(1) / n);
}

// --- dual functionals --------------------------------------------------

namespace {

constexpr size_t kDualCap = size_t(1) << 18;

void guard_dual_count(size_t n) {
  if (n > kDualCap)
    throw CapacityError("dual functional family past " +
                        std::to_string(kDualCap) + " members");
}

std::vector<RatVec> zv_duals(const SpaceSpec& sp, int window) {
  // Composites: pick a breakpoint tuple, a component-V functional psi, and
  // for each segment where psi has a nonzero coefficient a restriction of a
  // component-Z functional to that segment; the composite acts as
  //   x |-> sum_t psi(m_t) * phi_t(x restricted to [m_t, m_(t+1))).
  // Both component lists are sign-closed, so the maximum over composites
  // reproduces the norm: each composite is dominated by the tuple's value
  // (|psi| stays in the dual ball by 1-unconditionality), and the optimal
  // tuple's value is attained by matching signs segment by segment.
  if (window > 18)
    throw CapacityError("block-seminorm dual family over window " +
                        std::to_string(window));
  int universe = window + 1;
  auto fz = dual_functionals(sp.a, window);
  auto fv = dual_functionals(sp.b, window);

  std::map<std::pair<int, int>, std::vector<RatVec>> segf;
  auto segment_functionals =
      [&](int lo, int hi) -> const std::vector<RatVec>& {
    auto key = std::make_pair(lo, hi);
    auto it = segf.find(key);
    if (it != segf.end()) return it->second;
    std::set<RatVec> ded;
    for (const RatVec& psi : fz) {
      RatVec r;
      for (const auto& [i, q] : psi.entries())
        if (lo <= i && i < hi) r.set(i, q);
      if (!r.zero()) ded.insert(std::move(r));
    }
    return segf
        .emplace(key, std::vector<RatVec>(ded.begin(), ded.end()))
        .first->second;
  };

  std::set<RatVec> out;
  std::vector<int> bp;
  for (uint32_t mask = 0; mask < (1u << universe); ++mask) {
    if (std::popcount(mask) < 2) continue;
    bp.clear();
    for (uint32_t m = mask; m != 0; m &= m - 1)
      bp.push_back(std::countr_zero(m) + 1);
    size_t nseg = bp.size() - 1;
    for (const RatVec& psi : fv) {
      std::vector<size_t> active;
      for (size_t t = 0; t < nseg; ++t)
        if (psi.at(bp[t]) != 0) active.push_back(t);
      if (active.empty()) continue;
      RatVec acc;
      auto dfs = [&](auto&& self, size_t ai) -> void {
        if (ai == active.size()) {
          out.insert(acc);
          guard_dual_count(out.size());
          return;
        }
        size_t t = active[ai];
        for (const RatVec& phi : segment_functionals(bp[t], bp[t + 1])) {
          RatVec saved = acc;
          acc.add_scaled(phi, psi.at(bp[t]));
          self(self, ai + 1);
          acc = std::move(saved);
        }
      };
      dfs(dfs, 0);
    }
  }
  return std::vector<RatVec>(out.begin(), out.end());
}

}  // namespace

std::vector<RatVec> dual_functionals(const SpacePtr& space, int window) {
  if (!space) throw std::invalid_argument("null space");
  if (window < 1) throw std::invalid_argument("dual window must be >= 1");

  switch (space->kind) {
    case SpaceSpec::Kind::C0: {
      std::vector<RatVec> out;
      for (int i = 1; i <= window; ++i) {
        out.push_back(RatVec::unit(i));
        out.push_back(RatVec::unit(i).scaled(Rat(-1)));
      }
      return out;
    }

    case SpaceSpec::Kind::L1: {
      if (window > 18)
        throw CapacityError("sign-pattern dual family over window " +
                            std::to_string(window));
      std::vector<RatVec> out;
      for (uint32_t mask = 0; mask < (1u << window); ++mask) {
        RatVec phi;
        for (int i = 0; i < window; ++i)
          phi.set(i + 1, (mask >> i) & 1 ? Rat(1) : Rat(-1));
        out.push_back(std::move(phi));
      }
      return out;
    }

    case SpaceSpec::Kind::Schreier: {
      // Window-maximal admissible sets majorize all admissible sets for
      // nonnegative weight sums, so their sign patterns norm every vector
      // supported in the window.
      auto sets = enumerate_admissible(window, space->alpha, true);
      std::vector<RatVec> out;
      for (const FinSet& f : sets) {
        int len = f.size();
        if (len > capacity().dual_set_size)
          throw CapacityError(
              "admissible set of size " + std::to_string(len) +
              " in dual family (cap " +
              std::to_string(capacity().dual_set_size) +
              "; raise SLAB_DUAL_SET_SIZE or shrink the window)");
        for (uint32_t mask = 0; mask < (1u << len); ++mask) {
          RatVec phi;
          for (int i = 0; i < len; ++i)
            phi.set(f.elems[i], (mask >> i) & 1 ? Rat(1) : Rat(-1));
          out.push_back(std::move(phi));
          guard_dual_count(out.size());
        }
      }
      return out;
    }

    case SpaceSpec::Kind::RSum1: {
      std::vector<RatVec> out;
      if (window == 1) {
        out.push_back(RatVec::unit(1));
        out.push_back(RatVec::unit(1).scaled(Rat(-1)));
        return out;
      }
      auto inner = dual_functionals(space->a, window - 1);
      for (const RatVec& psi : inner) {
        for (int sign : {1, -1}) {
          RatVec phi;
          phi.set(1, Rat(sign));
          for (const auto& [i, q] : psi.entries()) phi.set(i + 1, q);
          out.push_back(std::move(phi));
          guard_dual_count(out.size());
        }
      }
      return out;
    }

    case SpaceSpec::Kind::ZV:
      return zv_duals(*space, window);

    case SpaceSpec::Kind::Restrict: {
      // Same functionals with the off-subspace coefficients dropped; the
      // values on subspace vectors are untouched.
      auto inner = dual_functionals(space->a, window);
      std::set<RatVec> ded;
      for (const RatVec& psi : inner) {
        RatVec phi;
        for (const auto& [i, q] : psi.entries())
          if (std::binary_search(space->idx.begin(), space->idx.end(), i))
            phi.set(i, q);
        if (!phi.zero()) ded.insert(std::move(phi));
      }
      return std::vector<RatVec>(ded.begin(), ded.end());
    }

    case SpaceSpec::Kind::Interleave: {
      std::set<RatVec> ded;
      int listed = 0;
      for (int i : space->idx)
        if (i <= window) ++listed;
      if (listed >= 1) {
        for (const RatVec& psi : dual_functionals(space->a, listed)) {
          RatVec phi;
          for (const auto& [k, q] : psi.entries()) {
            if (k <= listed) phi.set(space->idx[k - 1], q);
          }
          if (!phi.zero()) ded.insert(std::move(phi));
        }
      }
      for (const RatVec& psi : dual_functionals(space->b, window)) {
        RatVec phi;
        for (const auto& [i, q] : psi.entries())
          if (!std::binary_search(space->idx.begin(), space->idx.end(), i))
            phi.set(i, q);
        if (!phi.zero()) ded.insert(std::move(phi));
      }
      guard_dual_count(ded.size());
      return std::vector<RatVec>(ded.begin(), ded.end());
    }
  }
  throw std::logic_error("unhandled space kind");
}

// --- block sequences ---------------------------------------------------

std::vector<RatVec> random_block_sequence(const SpacePtr& space, int count,
                                          int window, uint64_t seed) {
  if (count < 1) throw std::invalid_argument("need at least one vector");
  if (window < count)
    throw std::invalid_argument("window too small for that many blocks");
  if (window > 40)
    throw CapacityError("block sequence window " + std::to_string(window));

  Rng rng(seed);
  // count-1 distinct cut points make count nonempty chunks of [1..window]
  std::set<int> cuts;
  while (static_cast<int>(cuts.size()) < count - 1)
    cuts.insert(static_cast<int>(rng.range(1, window - 1)));

  std::vector<RatVec> out;
  int lo = 1;
  auto cut = cuts.begin();
  for (int c = 0; c < count; ++c) {
    int hi = (cut == cuts.end()) ? window : *cut++;
    int len = hi - lo + 1;
    uint64_t mask = rng.below((uint64_t(1) << len) - 1) + 1;  // nonempty
    RatVec v;
    for (int i = 0; i < len; ++i) {
      if (!((mask >> i) & 1)) continue;
      long num = 0;
      while (num == 0) num = static_cast<long>(rng.range(0, 16)) - 8;
      v.set(lo + i, rat(num, static_cast<long>(rng.range(1, 8))));
    }
    out.push_back(normalize(space, v));
    lo = hi + 1;
  }
  return out;
}

}  // namespace slab
