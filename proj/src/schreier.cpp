#include "slab/schreier.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "slab/capacity.hpp"

namespace slab {

namespace detail {

// Compiled form of one family. Limit nodes grow their approximant list on
// demand (the n-th approximant is the family of the n-th fundamental
// sequence element). Nodes are interned globally by ordinal, so equal
// ordinals share one node and the per-call memo can key on small ids.
struct Node {
  enum class Kind { Zero, Succ, Limit };
  Kind kind;
  uint64_t id;
  const Node* child = nullptr;  // Succ only
  Ordinal alpha;                // Limit only (approximant expansion)
  mutable std::vector<const Node*> approx;  // Limit only, approx[n-1]
};

namespace {

std::mutex g_intern_mutex;
std::map<std::string, std::unique_ptr<Node>>& intern_table() {
  static std::map<std::string, std::unique_ptr<Node>> t;
  return t;
}
uint64_t g_next_id = 0;

const Node* compile_locked(const Ordinal& alpha) {
  std::string key = alpha.str();
  auto& table = intern_table();
  auto it = table.find(key);
  if (it != table.end()) return it->second.get();

  auto node = std::make_unique<Node>();
  node->id = g_next_id++;
  switch (alpha.classify()) {
    case Ordinal::Kind::Zero:
      node->kind = Node::Kind::Zero;
      break;
    case Ordinal::Kind::Successor:
      node->kind = Node::Kind::Succ;
      node->child = compile_locked(alpha.predecessor());
      break;
    case Ordinal::Kind::Limit:
      node->kind = Node::Kind::Limit;
      node->alpha = alpha;
      break;
  }
  const Node* out = node.get();
  table.emplace(std::move(key), std::move(node));
  return out;
}

}  // namespace

const Node* compile(const Ordinal& alpha) {
  std::lock_guard<std::mutex> lock(g_intern_mutex);
  return compile_locked(alpha);
}

const Node* approximant(const Node* limit, int n) {
  assert(limit->kind == Node::Kind::Limit && n >= 1);
  {
    std::lock_guard<std::mutex> lock(g_intern_mutex);
    if (static_cast<size_t>(n) > limit->approx.size()) {
      for (size_t i = limit->approx.size(); i < static_cast<size_t>(n); ++i)
        limit->approx.push_back(
            compile_locked(limit->alpha.fundamental(i + 1)));
    }
    return limit->approx[n - 1];
  }
}

namespace {

// Limit membership scans sequence indices n = 1..min F. Minima beyond this
// bound would force that many compiled approximant families; no sane input
// gets near it, so refuse instead of thrashing.
constexpr int kLimitMinCap = 10000;

// Per-call memo over (node, contiguous piece of the queried set). Windows
// stay below 64 elements, so the piece packs into the low bits.
struct Memo {
  std::unordered_map<uint64_t, bool> seen;
  static uint64_t key(const Node* n, int lo, int hi) {
    return (n->id << 12) | (static_cast<uint64_t>(lo) << 6) |
           static_cast<uint64_t>(hi);
  }
};

bool member_span(const Node* node, const int* s, int lo, int hi, Memo& memo);

bool member_span_uncached(const Node* node, const int* s, int lo, int hi,
                          Memo& memo) {
  int len = hi - lo;
  if (len == 0) return true;  // empty set belongs to every family

  switch (node->kind) {
    case Node::Kind::Zero:
      return len <= 1;

    case Node::Kind::Succ: {
      // pieces[i] = fewest consecutive nonempty child-family pieces covering
      // the first i elements; membership iff pieces[len] <= min.
      int m = s[lo];
      int allowed = std::min(m, len);
      constexpr int kInf = 1 << 30;
      std::vector<int> pieces(static_cast<size_t>(len) + 1, kInf);
      pieces[0] = 0;
      for (int i = 0; i < len; ++i) {
        if (pieces[i] >= allowed) continue;  // another piece would overflow
        // Feasible piece lengths from i form an initial segment (prefixes of
        // a member are members), so stop at the first failure.
        for (int e = i + 1; e <= len; ++e) {
          if (!member_span(node->child, s, lo + i, lo + e, memo)) break;
          if (pieces[i] + 1 < pieces[e]) pieces[e] = pieces[i] + 1;
        }
      }
      return pieces[len] <= allowed;
    }

    case Node::Kind::Limit: {
      int m = s[lo];
      if (m > kLimitMinCap)
        throw CapacityError("limit-family membership with min element " +
                            std::to_string(m) + " (cap " +
                            std::to_string(kLimitMinCap) + ")");
      for (int n = 1; n <= m; ++n) {
        if (member_span(approximant(node, n), s, lo, hi, memo)) return true;
      }
      return false;
    }
  }
  return false;  // unreachable
}

bool member_span(const Node* node, const int* s, int lo, int hi, Memo& memo) {
  uint64_t k = Memo::key(node, lo, hi);
  auto it = memo.seen.find(k);
  if (it != memo.seen.end()) return it->second;
  bool value = member_span_uncached(node, s, lo, hi, memo);
  memo.seen.emplace(k, value);
  return value;
}

bool member_set(const Node* node, const int* s, int len) {
  Memo memo;
  return member_span(node, s, 0, len, memo);
}

// --- weight optimizer ----------------------------------------------------
//
// best_from(node, p, q) = max total weight of a nonempty family member
// drawn from positions [p..q] whose minimum is exactly position p. Succ
// nodes reduce to a chain table A[b][i] = best weight of at most b
// consecutive blocks, the first starting exactly at position i, everything
// inside [i..q]; the table is shared across all p for the same (node, q).

struct WeightCtx {
  const int* s;
  const Rat* w;
  int len;
  std::unordered_map<uint64_t, Rat> best;
  std::unordered_map<uint64_t, std::vector<std::vector<Rat>>> chains;
  static uint64_t key(const Node* n, int p, int q) {
    return (n->id << 12) | (static_cast<uint64_t>(p) << 6) |
           static_cast<uint64_t>(q);
  }
};

Rat best_from(const Node* node, int p, int q, WeightCtx& ctx);

const std::vector<std::vector<Rat>>& chain_for(const Node* node, int q,
                                               WeightCtx& ctx) {
  uint64_t k = WeightCtx::key(node, 0, q);
  auto it = ctx.chains.find(k);
  if (it != ctx.chains.end()) return it->second;

  int n = q + 1;  // usable start positions 0..q
  std::vector<std::vector<Rat>> A(static_cast<size_t>(n) + 1,
                                  std::vector<Rat>(static_cast<size_t>(n)));
  for (int i = 0; i <= q; ++i) A[1][i] = best_from(node->child, i, q, ctx);
  for (int b = 2; b <= n; ++b) {
    for (int i = 0; i <= q; ++i) {
      Rat acc = A[b - 1][i];  // spend fewer blocks
      for (int j = i + 1; j <= q; ++j) {
        Rat cand = best_from(node->child, i, j - 1, ctx) + A[b - 1][j];
        if (cand > acc) acc = cand;
      }
      A[b][i] = acc;
    }
  }
  return ctx.chains.emplace(k, std::move(A)).first->second;
}

Rat best_from(const Node* node, int p, int q, WeightCtx& ctx) {
  uint64_t k = WeightCtx::key(node, p, q);
  auto it = ctx.best.find(k);
  if (it != ctx.best.end()) return it->second;

  Rat out;
  switch (node->kind) {
    case Node::Kind::Zero:
      out = ctx.w[p];  // singletons only
      break;
    case Node::Kind::Succ: {
      const auto& A = chain_for(node, q, ctx);
      int bmax = q - p + 1;
      if (ctx.s[p] < bmax) bmax = ctx.s[p];
      out = A[bmax][p];
      break;
    }
    case Node::Kind::Limit: {
      int m = ctx.s[p];
      if (m > kLimitMinCap)
        throw CapacityError("limit-family weight table with min element " +
                            std::to_string(m));
      out = best_from(approximant(node, 1), p, q, ctx);
      for (int i = 2; i <= m; ++i) {
        Rat cand = best_from(approximant(node, i), p, q, ctx);
        if (cand > out) out = cand;
      }
      break;
    }
  }
  return ctx.best.emplace(k, std::move(out)).first->second;
}

}  // namespace

}  // namespace detail

Rat max_admissible_weight(const Ordinal& alpha, const std::vector<int>& elems,
                          const std::vector<Rat>& weights) {
  if (elems.size() != weights.size())
    throw std::invalid_argument("element/weight length mismatch");
  FinSet check;
  check.elems = elems;
  check.validate();
  for (const Rat& r : weights)
    if (r < 0) throw std::invalid_argument("negative weight");
  if (elems.empty()) return Rat(0);
  if (elems.size() >= 60)
    throw CapacityError("weight table over " + std::to_string(elems.size()) +
                        " positions");

  const detail::Node* root = detail::compile(alpha);
  detail::WeightCtx ctx{elems.data(), weights.data(),
                        static_cast<int>(elems.size()),
                        {},
                        {}};
  int L = ctx.len;
  Rat best(0);  // the empty set is always a member
  for (int p = 0; p < L; ++p) {
    Rat cand = detail::best_from(root, p, L - 1, ctx);
    if (cand > best) best = cand;
  }
  return best;
}

namespace detail {
namespace {

FinSet slice(const int* s, int lo, int hi) {
  FinSet out;
  out.elems.assign(s + lo, s + hi);
  return out;
}

// Witness construction mirrors member_span but keeps split parents.
bool build_cert(const Node* node, const int* s, int lo, int hi, Memo& memo,
                Certificate& out) {
  out.set = slice(s, lo, hi);
  int len = hi - lo;
  if (len == 0) {
    out.kind = Certificate::Kind::Leaf;
    return true;
  }
  switch (node->kind) {
    case Node::Kind::Zero:
      out.kind = Certificate::Kind::Leaf;
      return len <= 1;

    case Node::Kind::Succ: {
      int m = s[lo];
      int allowed = std::min(m, len);
      constexpr int kInf = 1 << 30;
      std::vector<int> pieces(static_cast<size_t>(len) + 1, kInf);
      std::vector<int> from(static_cast<size_t>(len) + 1, -1);
      pieces[0] = 0;
      for (int i = 0; i < len; ++i) {
        if (pieces[i] >= allowed) continue;
        for (int e = i + 1; e <= len; ++e) {
          if (!member_span(node->child, s, lo + i, lo + e, memo)) break;
          if (pieces[i] + 1 < pieces[e]) {
            pieces[e] = pieces[i] + 1;
            from[e] = i;
          }
        }
      }
      if (pieces[len] > allowed) return false;
      std::vector<int> cuts;  // split offsets, reconstructed right to left
      for (int at = len; at > 0; at = from[at]) cuts.push_back(at);
      cuts.push_back(0);
      std::reverse(cuts.begin(), cuts.end());
      out.kind = Certificate::Kind::Blocks;
      out.children.resize(cuts.size() - 1);
      for (size_t b = 0; b + 1 < cuts.size(); ++b) {
        bool ok = build_cert(node->child, s, lo + cuts[b], lo + cuts[b + 1],
                             memo, out.children[b]);
        assert(ok);
        (void)ok;
      }
      return true;
    }

    case Node::Kind::Limit: {
      int m = s[lo];
      if (m > kLimitMinCap)
        throw CapacityError("limit-family witness with min element " +
                            std::to_string(m));
      for (int n = 1; n <= m; ++n) {
        if (member_span(approximant(node, n), s, lo, hi, memo)) {
          out.kind = Certificate::Kind::LimitChoice;
          out.limit_n = static_cast<uint64_t>(n);
          out.children.resize(1);
          bool ok = build_cert(approximant(node, n), s, lo, hi, memo,
                               out.children[0]);
          assert(ok);
          (void)ok;
          return true;
        }
      }
      return false;
    }
  }
  return false;  // unreachable
}

}  // namespace
}  // namespace detail

SchreierFamily::SchreierFamily(const Ordinal& alpha)
    : alpha_(alpha), root_(detail::compile(alpha)) {}

bool SchreierFamily::member(const FinSet& F) const {
  F.validate();
  detail::Memo memo;
  return detail::member_span(root_, F.elems.data(), 0, F.size(), memo);
}

std::unique_ptr<Certificate> SchreierFamily::partition_witness(
    const FinSet& F) const {
  F.validate();
  detail::Memo memo;
  if (!detail::member_span(root_, F.elems.data(), 0, F.size(), memo))
    return nullptr;
  auto cert = std::make_unique<Certificate>();
  bool ok =
      detail::build_cert(root_, F.elems.data(), 0, F.size(), memo, *cert);
  assert(ok);
  (void)ok;
  return cert;
}

bool SchreierFamily::can_extend(const FinSet& F) const {
  if (F.empty()) return true;  // every singleton is a member
  return member(F.with(F.max_or_zero() + 1));
}

bool SchreierFamily::is_maximal(const FinSet& F) const {
  if (!member(F))
    throw std::invalid_argument("is_maximal called on a non-member " +
                                F.str());
  return !can_extend(F);
}

std::vector<FinSet> enumerate_admissible(int window, const Ordinal& alpha,
                                         bool only_maximal) {
  require_window(window, capacity().schreier_window, "admissible enumeration");
  SchreierFamily fam(alpha);
  std::vector<FinSet> out;
  FinSet cur;
  // Preorder depth-first search emits lexicographic order directly.
  auto rec = [&](auto&& self) -> void {
    std::vector<int> valid;
    for (int k = cur.max_or_zero() + 1; k <= window; ++k) {
      cur.elems.push_back(k);
      if (fam.member(cur)) valid.push_back(k);
      cur.elems.pop_back();
    }
    if (!only_maximal || valid.empty()) out.push_back(cur);
    for (int k : valid) {
      cur.elems.push_back(k);
      self(self);
      cur.elems.pop_back();
    }
  };
  rec(rec);
  return out;
}

bool validate_certificate(const Certificate& cert, const Ordinal& alpha) {
  if (cert.set.empty())
    return cert.children.empty() && cert.kind == Certificate::Kind::Leaf;

  switch (alpha.classify()) {
    case Ordinal::Kind::Zero:
      return cert.kind == Certificate::Kind::Leaf && cert.set.size() == 1;

    case Ordinal::Kind::Successor: {
      if (cert.kind != Certificate::Kind::Blocks) return false;
      if (cert.children.empty()) return false;
      if (static_cast<int>(cert.children.size()) > cert.set.min_or_inf())
        return false;
      // Pieces must concatenate to the set, in order, each nonempty.
      std::vector<int> glued;
      for (const auto& c : cert.children) {
        if (c.set.empty()) return false;
        if (!glued.empty() && c.set.min_or_inf() <= glued.back()) return false;
        glued.insert(glued.end(), c.set.elems.begin(), c.set.elems.end());
      }
      if (glued != cert.set.elems) return false;
      Ordinal beta = alpha.predecessor();
      for (const auto& c : cert.children)
        if (!validate_certificate(c, beta)) return false;
      return true;
    }

    case Ordinal::Kind::Limit: {
      if (cert.kind != Certificate::Kind::LimitChoice) return false;
      if (cert.limit_n < 1 ||
          cert.limit_n > static_cast<uint64_t>(cert.set.min_or_inf()))
        return false;
      if (cert.children.size() != 1) return false;
      if (!(cert.children[0].set == cert.set)) return false;
      return validate_certificate(cert.children[0],
                                  alpha.fundamental(cert.limit_n));
    }
  }
  return false;
}

nlohmann::ordered_json Certificate::json() const {
  nlohmann::ordered_json j;
  j["set"] = set.json();
  switch (kind) {
    case Kind::Leaf:
      j["kind"] = "leaf";
      break;
    case Kind::Blocks: {
      j["kind"] = "blocks";
      auto arr = nlohmann::ordered_json::array();
      for (const auto& c : children) arr.push_back(c.json());
      j["pieces"] = std::move(arr);
      break;
    }
    case Kind::LimitChoice:
      j["kind"] = "limit";
      j["n"] = limit_n;
      j["inner"] = children[0].json();
      break;
  }
  return j;
}

FinSet parse_finset(const std::string& text) {
  std::vector<int> elems;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (!std::isdigit(static_cast<unsigned char>(text[pos])))
      throw std::invalid_argument("bad set element at position " +
                                  std::to_string(pos) + " in '" + text + "'");
    long v = 0;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000000000)
        throw std::invalid_argument("set element out of range");
      ++pos;
    }
    elems.push_back(static_cast<int>(v));
    skip_ws();
    if (pos < text.size()) {
      if (text[pos] != ',')
        throw std::invalid_argument("expected ',' at position " +
                                    std::to_string(pos) + " in '" + text +
                                    "'");
      ++pos;
      skip_ws();
      if (pos == text.size())
        throw std::invalid_argument("trailing ',' in '" + text + "'");
    }
  }
  return FinSet(std::move(elems));  // validates order and positivity
}

// ---------------------------------------------------------------------------
// Incremental cursor

namespace {

using detail::Node;

struct BlockCursor {
  virtual ~BlockCursor() = default;
  // Appends k to the tracked set iff the grown set stays a member; on
  // failure the cursor is untouched.
  virtual bool try_extend(int k) = 0;
  // Undoes the most recent successful try_extend.
  virtual void undo() = 0;
};

std::unique_ptr<BlockCursor> make_cursor(const Node* node);

struct ZeroCursor final : BlockCursor {
  int count = 0;
  bool try_extend(int) override {
    if (count >= 1) return false;
    count = 1;
    return true;
  }
  void undo() override { count = 0; }
};

struct SuccCursor final : BlockCursor {
  const Node* child;
  int m = 0;     // min element, fixed by the first extension
  int used = 0;  // pieces opened so far (greedy count)
  std::vector<std::unique_ptr<BlockCursor>> pieces;  // slots reused across undo
  std::vector<uint8_t> actions;  // 0 extend piece, 1 new piece, 2 first elem

  explicit SuccCursor(const Node* c) : child(c) {}

  BlockCursor* piece_slot(int idx) {
    while (static_cast<int>(pieces.size()) <= idx)
      pieces.push_back(make_cursor(child));
    return pieces[static_cast<size_t>(idx)].get();
  }

  bool try_extend(int k) override {
    if (used == 0) {
      m = k;
      bool ok = piece_slot(0)->try_extend(k);
      assert(ok);  // singletons belong to every family
      (void)ok;
      used = 1;
      actions.push_back(2);
      return true;
    }
    if (pieces[static_cast<size_t>(used - 1)]->try_extend(k)) {
      actions.push_back(0);
      return true;
    }
    // Greedy: current piece is as long as it can be; a new piece is the only
    // option, and the piece budget is the min element.
    if (used + 1 > m) return false;
    bool ok = piece_slot(used)->try_extend(k);
    assert(ok);
    (void)ok;
    ++used;
    actions.push_back(1);
    return true;
  }

  void undo() override {
    uint8_t a = actions.back();
    actions.pop_back();
    pieces[static_cast<size_t>(used - 1)]->undo();
    if (a == 1) {
      --used;
    } else if (a == 2) {
      used = 0;
      m = 0;
    }
  }
};

// Running one child automaton per sequence index sounds natural but nests
// badly: every extension would fan out into every live child, and a couple
// of limit levels stacked (w^2 and up) multiply into astronomically many
// cursor objects. A limit level instead keeps the elements seen so far and
// asks the membership DP directly; the try is transactional for free, and
// incrementality is only lost at limit levels, which no hot sweep touches.
struct LimitCursor final : BlockCursor {
  const Node* node;
  std::vector<int> history;

  explicit LimitCursor(const Node* n) : node(n) {}

  bool try_extend(int k) override {
    history.push_back(k);
    if (detail::member_set(node, history.data(),
                           static_cast<int>(history.size())))
      return true;
    history.pop_back();
    return false;
  }

  void undo() override { history.pop_back(); }
};

std::unique_ptr<BlockCursor> make_cursor(const Node* node) {
  switch (node->kind) {
    case Node::Kind::Zero:
      return std::make_unique<ZeroCursor>();
    case Node::Kind::Succ:
      return std::make_unique<SuccCursor>(node->child);
    case Node::Kind::Limit:
      return std::make_unique<LimitCursor>(node);
  }
  return nullptr;  // unreachable
}

}  // namespace

struct MembershipCursor::Impl {
  std::unique_ptr<BlockCursor> top;
  std::vector<int> stack;
};

MembershipCursor::MembershipCursor(const SchreierFamily& fam)
    : impl_(std::make_unique<Impl>()) {
  impl_->top = make_cursor(fam.root());
}

MembershipCursor::~MembershipCursor() = default;

bool MembershipCursor::push(int k) {
  if (k <= last_)
    throw std::invalid_argument("cursor elements must strictly increase");
  if (dead_depth_ > 0) {
    ++dead_depth_;
  } else if (!impl_->top->try_extend(k)) {
    dead_depth_ = 1;
  }
  impl_->stack.push_back(k);
  last_ = k;
  ++depth_;
  return dead_depth_ == 0;
}

void MembershipCursor::pop() {
  if (impl_->stack.empty()) throw std::logic_error("pop on empty cursor");
  if (dead_depth_ > 0) {
    --dead_depth_;
  } else {
    impl_->top->undo();
  }
  impl_->stack.pop_back();
  last_ = impl_->stack.empty() ? 0 : impl_->stack.back();
  --depth_;
}

}  // namespace slab
