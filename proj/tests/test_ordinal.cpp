#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "slab/ordinal.hpp"
#include "slab/rng.hpp"

using namespace slab;

namespace {

Ordinal O(const std::string& s) { return parse_ordinal(s); }

// Random normal form, depth-bounded so exponents stay small towers.
Ordinal random_ordinal(Rng& rng, int depth) {
  if (depth == 0) return Ordinal::nat(rng.below(20));
  int nterms = rng.range(1, 3);
  std::vector<Ordinal> exps;
  for (int i = 0; i < nterms; ++i) exps.push_back(random_ordinal(rng, depth - 1));
  std::sort(exps.begin(), exps.end(),
            [](const Ordinal& a, const Ordinal& b) { return compare(a, b) > 0; });
  exps.erase(std::unique(exps.begin(), exps.end(),
                         [](const Ordinal& a, const Ordinal& b) {
                           return compare(a, b) == 0;
                         }),
             exps.end());
  std::vector<Ordinal::Term> terms;
  for (const auto& e : exps)
    terms.push_back({e, static_cast<uint64_t>(rng.range(1, 5))});
  // Drop a trailing w^0 * c term sometimes to vary successor/limit shapes.
  return Ordinal::from_terms(std::move(terms));
}

}  // namespace

TEST_CASE("parse and format basic forms") {
  CHECK(O("0").is_zero());
  CHECK(O("0").str() == "0");
  CHECK(O("5").nat_value() == 5);
  CHECK(O("5").str() == "5");
  CHECK(O("w").str() == "w");
  CHECK(O("w*2").str() == "w*2");
  CHECK(O("w^2*3 + w + 5").str() == "w^2*3 + w + 5");
  CHECK(O("w^2*3+w+5").str() == "w^2*3 + w + 5");
  CHECK(O("w^w").str() == "w^w");
  CHECK(O("w^(w+1)").str() == "w^(w + 1)");
  CHECK(O("w^w^2").str() == "w^w^2");
  CHECK(O("w^(w*2)").str() == "w^(w*2)");
  CHECK(compare(O("w^w^2"), O("w^(w^2)")) == 0);
}

TEST_CASE("parse rejects garbage and non-normal forms") {
  CHECK_THROWS_AS(O("w + w^2"), std::invalid_argument);
  CHECK_THROWS_AS(O("w + w"), std::invalid_argument);
  CHECK_THROWS_AS(O("1 + 1"), std::invalid_argument);
  CHECK_THROWS_AS(O("0 + 1"), std::invalid_argument);
  CHECK_THROWS_AS(O("w*0"), std::invalid_argument);
  CHECK_THROWS_AS(O(""), std::invalid_argument);
  CHECK_THROWS_AS(O("w^"), std::invalid_argument);
  CHECK_THROWS_AS(O("w^2 junk"), std::invalid_argument);
  CHECK_THROWS_AS(O("x"), std::invalid_argument);
  CHECK_THROWS_AS(O("(w"), std::invalid_argument);
}

TEST_CASE("comparison") {
  CHECK(compare(O("w"), O("2")) > 0);
  CHECK(compare(O("w^2 + w*3"), O("w^2 + w*3")) == 0);
  CHECK(compare(O("w^3"), O("w^w")) < 0);
  CHECK(compare(O("w*2"), O("w + 5")) > 0);
  CHECK(compare(O("w^2"), O("w*1000")) > 0);
  CHECK(O("3") < O("w"));
  CHECK(O("w + 1") < O("w + 2"));
}

TEST_CASE("classification and predecessor") {
  CHECK(O("0").classify() == Ordinal::Kind::Zero);
  CHECK(O("7").classify() == Ordinal::Kind::Successor);
  CHECK(O("w").classify() == Ordinal::Kind::Limit);
  CHECK(O("w^2 + 5").classify() == Ordinal::Kind::Successor);
  CHECK(O("w^2").classify() == Ordinal::Kind::Limit);
  CHECK(O("w^2 + 5").predecessor() == O("w^2 + 4"));
  CHECK(O("w + 1").predecessor() == O("w"));
  CHECK(O("1").predecessor() == O("0"));
  CHECK_THROWS_AS(O("w").predecessor(), std::logic_error);
  CHECK_THROWS_AS(O("0").predecessor(), std::logic_error);
}

TEST_CASE("trichotomy below w*3 with exact successor gaps") {
  // Enumerate w*a + b for a in 0..2, b in 0..15, check order matches the
  // (a, b) lexicographic oracle and successors step by exactly one.
  std::vector<Ordinal> all;
  std::vector<std::pair<int, int>> tag;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 15; ++b) {
      std::vector<Ordinal::Term> terms;
      if (a > 0) terms.push_back({Ordinal::nat(1), static_cast<uint64_t>(a)});
      if (b > 0) terms.push_back({Ordinal(), static_cast<uint64_t>(b)});
      all.push_back(Ordinal::from_terms(std::move(terms)));
      tag.emplace_back(a, b);
    }
  for (size_t i = 0; i < all.size(); ++i) {
    for (size_t j = 0; j < all.size(); ++j) {
      int want = tag[i] < tag[j] ? -1 : (tag[i] == tag[j] ? 0 : 1);
      CHECK(compare(all[i], all[j]) == want);
    }
    auto kind = all[i].classify();
    if (tag[i].second == 0)
      CHECK(kind == (tag[i].first == 0 ? Ordinal::Kind::Zero
                                       : Ordinal::Kind::Limit));
    else
      CHECK(kind == Ordinal::Kind::Successor);
    if (kind == Ordinal::Kind::Successor) {
      Ordinal p = all[i].predecessor();
      CHECK(compare(p, all[i]) < 0);
      // No ordinal in the enumeration sits strictly between p and all[i].
      for (const auto& q : all)
        CHECK(!(compare(p, q) < 0 && compare(q, all[i]) < 0));
    }
  }
}

TEST_CASE("fundamental sequence defining rules") {
  CHECK(O("w").fundamental(3) == O("3"));
  CHECK(O("w").fundamental(1) == O("1"));
  CHECK(O("w^2").fundamental(4) == O("w*4"));
  CHECK(O("w^w").fundamental(3) == O("w^3"));
  CHECK(O("w*2").fundamental(7) == O("w + 7"));
  CHECK(O("w^2 + w").fundamental(5) == O("w^2 + 5"));
  CHECK(O("w^w*2").fundamental(3) == O("w^w + w^3"));
  CHECK(O("w^(w+1)").fundamental(4) == O("w^w*4"));
  CHECK_THROWS_AS(O("5").fundamental(1), std::logic_error);
  CHECK_THROWS_AS(O("0").fundamental(1), std::logic_error);
}

TEST_CASE("fundamental sequences increase strictly and stay below the limit") {
  const char* limits[] = {"w",      "w*2",     "w*3",    "w^2",     "w^2 + w",
                          "w^2*2",  "w^3",     "w^w",    "w^w + w", "w^w*2"};
  for (const char* ls : limits) {
    Ordinal a = O(ls);
    REQUIRE(a.classify() == Ordinal::Kind::Limit);
    for (uint64_t n = 1; n < 50; ++n) {
      CHECK(compare(a.fundamental(n), a.fundamental(n + 1)) < 0);
      CHECK(compare(a.fundamental(n + 1), a) < 0);
    }
  }
}

TEST_CASE("format then parse is the identity on random normal forms") {
  Rng rng(20260819);
  int checked = 0;
  while (checked < 1000) {
    Ordinal o = random_ordinal(rng, 2);
    Ordinal back = parse_ordinal(o.str());
    CHECK(compare(o, back) == 0);
    ++checked;
  }
}
