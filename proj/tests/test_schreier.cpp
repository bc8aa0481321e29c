#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "slab/capacity.hpp"
#include "slab/rng.hpp"
#include "slab/schreier.hpp"

using namespace slab;

namespace {

Ordinal O(const std::string& s) { return parse_ordinal(s); }

FinSet from_mask(uint32_t mask, int base = 1) {
  FinSet f;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) f.elems.push_back(base + i);
  return f;
}

// Independent reference: direct recursion with exhaustive split search (no
// piece-count minimization, no prefix pruning). Results are cached by
// (ordinal, set) so limit levels finish in reasonable time; the search
// itself stays the dumb one.
std::map<std::pair<std::string, std::vector<int>>, bool> g_naive_memo;

bool naive_member(const FinSet& F, const Ordinal& alpha);

bool naive_split(const std::vector<int>& v, size_t from, int budget,
                 const Ordinal& beta) {
  if (from == v.size()) return true;
  if (budget == 0) return false;
  for (size_t to = from + 1; to <= v.size(); ++to) {
    FinSet piece;
    piece.elems.assign(v.begin() + from, v.begin() + to);
    if (naive_member(piece, beta) && naive_split(v, to, budget - 1, beta))
      return true;
  }
  return false;
}

bool naive_member(const FinSet& F, const Ordinal& alpha) {
  if (F.empty()) return true;
  auto key = std::make_pair(alpha.str(), F.elems);
  auto it = g_naive_memo.find(key);
  if (it != g_naive_memo.end()) return it->second;
  bool out = false;
  switch (alpha.classify()) {
    case Ordinal::Kind::Zero:
      out = F.size() <= 1;
      break;
    case Ordinal::Kind::Successor:
      out = naive_split(F.elems, 0, std::min(F.min_or_inf(), F.size()),
                        alpha.predecessor());
      break;
    case Ordinal::Kind::Limit:
      for (int n = 1; n <= F.min_or_inf() && !out; ++n)
        out = naive_member(F, alpha.fundamental(static_cast<uint64_t>(n)));
      break;
  }
  g_naive_memo.emplace(std::move(key), out);
  return out;
}

const char* kAlphaList[] = {"1", "2", "3", "w", "w+1", "w*2", "w^2"};

}  // namespace

TEST_CASE("hand-picked memberships") {
  SchreierFamily s1(O("1")), s2(O("2"));
  CHECK(s1.member(FinSet{}));
  CHECK(s1.member(FinSet{2, 3}));
  CHECK_FALSE(s1.member(FinSet{1, 2}));
  CHECK(s1.member(FinSet{1}));
  CHECK(s2.member(FinSet{2, 3, 6, 7, 8, 9}));
  CHECK_FALSE(s2.member(FinSet{1, 2}));
  CHECK(s2.member(FinSet{3, 4, 5, 9, 10, 11, 12, 13}));
  for (const char* a : kAlphaList) {
    SchreierFamily fam(O(a));
    CHECK(fam.member(FinSet{}));
    for (int n = 1; n <= 30; ++n) CHECK(fam.member(FinSet{n}));
  }
  SchreierFamily sww(O("w^w"));
  CHECK(sww.member(FinSet{}));
  CHECK(sww.member(FinSet{17}));
}

TEST_CASE("level one closed form on a 15 element window") {
  SchreierFamily s1(O("1"));
  for (uint32_t mask = 0; mask < (1u << 15); ++mask) {
    FinSet f = from_mask(mask);
    bool closed = f.empty() || f.size() <= f.min_or_inf();
    CHECK(s1.member(f) == closed);
  }
}

TEST_CASE("dynamic programming matches naive split search") {
  // Every subset of [1..12] for the first three levels.
  for (const char* a : {"1", "2", "3"}) {
    Ordinal alpha = O(a);
    SchreierFamily fam(alpha);
    for (uint32_t mask = 0; mask < (1u << 12); ++mask) {
      FinSet f = from_mask(mask);
      CHECK(fam.member(f) == naive_member(f, alpha));
    }
  }
  // Limit levels on a smaller window (naive limit search is expensive).
  for (const char* a : {"w", "w+1", "w*2", "w^2"}) {
    Ordinal alpha = O(a);
    SchreierFamily fam(alpha);
    for (uint32_t mask = 0; mask < (1u << 9); ++mask) {
      FinSet f = from_mask(mask);
      CHECK(fam.member(f) == naive_member(f, alpha));
    }
  }
}

TEST_CASE("hereditary and spreading on a small window") {
  for (const char* a : kAlphaList) {
    SchreierFamily fam(O(a));
    // Collect membership of every subset of [1..8] once.
    std::vector<bool> in(1u << 8);
    for (uint32_t mask = 0; mask < (1u << 8); ++mask)
      in[mask] = fam.member(from_mask(mask));
    for (uint32_t mask = 0; mask < (1u << 8); ++mask) {
      if (!in[mask]) continue;
      // Subsets of members are members.
      for (uint32_t sub = mask;; sub = (sub - 1) & mask) {
        CHECK(in[sub]);
        if (sub == 0) break;
      }
    }
    // Spreads: move every element weakly right within [1..10].
    for (uint32_t mask = 0; mask < (1u << 8); ++mask) {
      if (!in[mask]) continue;
      FinSet f = from_mask(mask);
      // Enumerate spreads recursively.
      std::vector<int> g(f.elems.size());
      auto rec = [&](auto&& self, size_t i) -> void {
        if (i == f.elems.size()) {
          CHECK(fam.member(FinSet(g)));
          return;
        }
        int lo = std::max(f.elems[i], i ? g[i - 1] + 1 : 1);
        for (int v = lo; v <= 10; ++v) {
          g[i] = v;
          self(self, i + 1);
        }
      };
      rec(rec, 0);
    }
  }
}

TEST_CASE("last element can always be pulled down toward the rest") {
  // For members F u {k}, replacing k by any j with max F < j <= k keeps
  // membership. This is what justifies deciding extension with max F + 1.
  for (const char* a : kAlphaList) {
    SchreierFamily fam(O(a));
    for (uint32_t mask = 0; mask < (1u << 8); ++mask) {
      FinSet f = from_mask(mask);
      int mx = f.max_or_zero();
      for (int k = mx + 1; k <= 12; ++k) {
        if (!fam.member(f.with(k))) continue;
        for (int j = mx + 1; j <= k; ++j) CHECK(fam.member(f.with(j)));
      }
    }
  }
}

TEST_CASE("extension and maximality") {
  SchreierFamily s1(O("1"));
  CHECK_FALSE(s1.can_extend(FinSet{2, 3}));
  CHECK(s1.can_extend(FinSet{3, 4}));
  CHECK(s1.can_extend(FinSet{}));
  SchreierFamily sw(O("w"));
  CHECK(sw.can_extend(FinSet{}));
  CHECK(s1.is_maximal(FinSet{1}));
  CHECK(s1.is_maximal(FinSet{2, 3}));
  CHECK_FALSE(s1.is_maximal(FinSet{3, 4}));
  CHECK_THROWS_AS(s1.is_maximal(FinSet{1, 2}), std::invalid_argument);

  // can_extend agrees with a direct search over a generous tail.
  for (const char* a : kAlphaList) {
    SchreierFamily fam(O(a));
    for (uint32_t mask = 1; mask < (1u << 8); ++mask) {
      FinSet f = from_mask(mask);
      if (!fam.member(f)) continue;
      bool any = false;
      for (int k = f.max_or_zero() + 1; k <= 40 && !any; ++k)
        any = fam.member(f.with(k));
      CHECK(fam.can_extend(f) == any);
    }
  }
}

TEST_CASE("witness certificates validate and match membership") {
  for (const char* a : {"1", "2", "w", "w*2"}) {
    Ordinal alpha = O(a);
    SchreierFamily fam(alpha);
    for (uint32_t mask = 0; mask < (1u << 10); ++mask) {
      FinSet f = from_mask(mask);
      auto cert = fam.partition_witness(f);
      if (fam.member(f)) {
        REQUIRE(cert != nullptr);
        CHECK(validate_certificate(*cert, alpha));
        CHECK(cert->set == f);
      } else {
        CHECK(cert == nullptr);
      }
    }
  }
  // The forced split: 6 elements, min 2, only one legal two-piece cut.
  SchreierFamily s2(O("2"));
  auto cert = s2.partition_witness(FinSet{2, 3, 6, 7, 8, 9});
  REQUIRE(cert != nullptr);
  REQUIRE(cert->kind == Certificate::Kind::Blocks);
  REQUIRE(cert->children.size() == 2);
  CHECK(cert->children[0].set == FinSet{2, 3});
  CHECK(cert->children[1].set == FinSet{6, 7, 8, 9});
}

TEST_CASE("tampered certificates are rejected") {
  SchreierFamily s2(O("2"));
  auto cert = s2.partition_witness(FinSet{2, 3, 6, 7, 8, 9});
  REQUIRE(cert != nullptr);
  Certificate bad = *cert;
  bad.children[0].set = FinSet{2};  // pieces no longer glue to the set
  CHECK_FALSE(validate_certificate(bad, O("2")));
  Certificate wrong_level = *cert;
  CHECK_FALSE(validate_certificate(wrong_level, O("1")));
}

TEST_CASE("enumeration in lexicographic order") {
  auto all = enumerate_admissible(3, O("1"), false);
  std::vector<FinSet> want = {FinSet{}, FinSet{1}, FinSet{2}, FinSet{2, 3},
                              FinSet{3}};
  CHECK(all == want);

  auto mx = enumerate_admissible(3, O("1"), true);
  std::vector<FinSet> want_mx = {FinSet{1}, FinSet{2, 3}, FinSet{3}};
  CHECK(mx == want_mx);

  auto base = enumerate_admissible(2, O("0"), false);
  std::vector<FinSet> want_base = {FinSet{}, FinSet{1}, FinSet{2}};
  CHECK(base == want_base);
}

TEST_CASE("enumeration equals membership filter") {
  for (const char* a : {"1", "2", "w"}) {
    Ordinal alpha = O(a);
    SchreierFamily fam(alpha);
    auto got = enumerate_admissible(8, alpha, false);
    std::vector<FinSet> want;
    for (uint32_t mask = 0; mask < (1u << 8); ++mask) {
      FinSet f = from_mask(mask);
      if (fam.member(f)) want.push_back(f);
    }
    std::sort(want.begin(), want.end());
    CHECK(got.size() == want.size());
    auto sorted_got = got;
    std::sort(sorted_got.begin(), sorted_got.end());
    CHECK(sorted_got == want);
    CHECK(std::is_sorted(got.begin(), got.end()));

    auto got_mx = enumerate_admissible(8, alpha, true);
    std::vector<FinSet> want_mx;
    for (const auto& f : want) {
      bool ext = false;
      for (int k = f.max_or_zero() + 1; k <= 8 && !ext; ++k)
        ext = fam.member(f.with(k));
      if (!ext) want_mx.push_back(f);
    }
    auto sorted_mx = got_mx;
    std::sort(sorted_mx.begin(), sorted_mx.end());
    CHECK(sorted_mx == want_mx);
  }
}

TEST_CASE("enumeration window capacity is enforced") {
  CHECK_THROWS_AS(enumerate_admissible(23, O("1"), false), CapacityError);
}

TEST_CASE("cursor verdicts equal member() along a full subset walk") {
  for (const char* a : kAlphaList) {
    Ordinal alpha = O(a);
    SchreierFamily fam(alpha);
    MembershipCursor cur(fam);
    CHECK(cur.member());  // empty set
    FinSet f;
    auto rec = [&](auto&& self, int from) -> void {
      for (int k = from; k <= 12; ++k) {
        bool verdict = cur.push(k);
        f.elems.push_back(k);
        CHECK(verdict == fam.member(f));
        CHECK(cur.member() == verdict);
        self(self, k + 1);
        f.elems.pop_back();
        cur.pop();
      }
    };
    rec(rec, 1);
    CHECK(cur.depth() == 0);
  }
}

TEST_CASE("cursor rejects non-increasing pushes") {
  SchreierFamily s1(O("1"));
  MembershipCursor cur(s1);
  cur.push(3);
  CHECK_THROWS_AS(cur.push(3), std::invalid_argument);
  CHECK_THROWS_AS(cur.push(2), std::invalid_argument);
  cur.pop();
  CHECK_THROWS_AS(cur.pop(), std::logic_error);
}

TEST_CASE("set parsing") {
  CHECK(parse_finset("2,3,6") == FinSet{2, 3, 6});
  CHECK(parse_finset(" 2 , 3 ") == FinSet{2, 3});
  CHECK(parse_finset("") == FinSet{});
  CHECK(parse_finset("7") == FinSet{7});
  CHECK_THROWS_AS(parse_finset("3,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_finset("2,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_finset("0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_finset("2,"), std::invalid_argument);
  CHECK_THROWS_AS(parse_finset("2;3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_finset("a"), std::invalid_argument);
}

TEST_CASE("weight optimizer matches brute force over member subsets") {
  Rng rng(414243);
  for (const char* a : kAlphaList) {
    Ordinal alpha = O(a);
    SchreierFamily fam(alpha);
    for (int rep = 0; rep < 6; ++rep) {
      // Random support of up to 9 elements, some reps pushed far right to
      // exercise large minima (big block budgets, deep limit scans).
      int base = (rep % 2 == 0) ? 1 : static_cast<int>(rng.range(20, 40));
      int span = 12;
      std::vector<int> elems;
      for (int k = base; k < base + span; ++k)
        if (rng.flip() && elems.size() < 9) elems.push_back(k);
      if (elems.empty()) elems.push_back(base);
      std::vector<Rat> weights;
      for (size_t i = 0; i < elems.size(); ++i)
        weights.push_back(rat(rng.range(0, 12), rng.range(1, 8)));

      Rat brute(0);
      int L = static_cast<int>(elems.size());
      for (int mask = 0; mask < (1 << L); ++mask) {
        FinSet f;
        Rat total(0);
        for (int i = 0; i < L; ++i)
          if (mask & (1 << i)) {
            f.elems.push_back(elems[i]);
            total += weights[i];
          }
        if (total > brute && fam.member(f)) brute = total;
      }
      CHECK(max_admissible_weight(alpha, elems, weights) == brute);
    }
  }
  CHECK(max_admissible_weight(O("w"), {}, {}) == Rat(0));
  CHECK_THROWS_AS(max_admissible_weight(O("1"), {1, 2}, {Rat(1)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(max_admissible_weight(O("1"), {1}, {Rat(-1)}),
                  std::invalid_argument);
}
