#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "slab/capacity.hpp"
#include "slab/rng.hpp"
#include "slab/schreier.hpp"
#include "slab/spaces.hpp"

using namespace slab;

namespace {

Ordinal O(const std::string& s) { return parse_ordinal(s); }

RatVec vec(std::initializer_list<std::pair<int, Rat>> entries) {
  RatVec v;
  for (const auto& [i, q] : entries) v.set(i, q);
  return v;
}

// Independent norm oracle for the admissible-set spaces: literally the max
// of |x| sums over every member of the family inside the support.
Rat schreier_norm_brute(const Ordinal& alpha, const RatVec& x) {
  SchreierFamily fam(alpha);
  std::vector<int> supp = x.support();
  int L = static_cast<int>(supp.size());
  Rat best(0);
  for (int mask = 0; mask < (1 << L); ++mask) {
    FinSet f;
    Rat total(0);
    for (int i = 0; i < L; ++i)
      if (mask & (1 << i)) {
        f.elems.push_back(supp[i]);
        total += rabs(x.at(supp[i]));
      }
    if (total > best && fam.member(f)) best = total;
  }
  return best;
}

RatVec random_vec(Rng& rng, int window, int max_support) {
  RatVec v;
  int picks = rng.range(1, max_support);
  for (int t = 0; t < picks; ++t) {
    long num = static_cast<long>(rng.range(0, 16)) - 8;
    if (num != 0)
      v.set(rng.range(1, window), rat(num, static_cast<long>(rng.range(1, 8))));
  }
  return v;
}

}  // namespace

TEST_CASE("vector plumbing") {
  RatVec v;
  CHECK(v.zero());
  CHECK(v.at(3) == 0);
  CHECK(v.min_index() == 0);
  CHECK(v.max_index() == 0);

  v.set(3, rat(1, 2));
  v.set(7, rat(-2));
  CHECK(v.support() == std::vector<int>{3, 7});
  CHECK(v.min_index() == 3);
  CHECK(v.max_index() == 7);
  v.add(3, rat(-1, 2));
  CHECK(v.at(3) == 0);
  CHECK(v.support_size() == 1);
  CHECK_THROWS_AS(v.set(0, Rat(1)), std::invalid_argument);

  RatVec a = vec({{1, rat(1)}, {2, rat(2)}});
  RatVec b = vec({{2, rat(3)}, {9, rat(5)}});
  CHECK(a.dot(b) == 6);
  CHECK(a.scaled(rat(-1, 2)) == vec({{1, rat(-1, 2)}, {2, rat(-1)}}));
  CHECK(a.str() == "{1: 1, 2: 2}");

  RatVec c = a;
  c.add_scaled(b, rat(2));
  CHECK(c == vec({{1, rat(1)}, {2, rat(8)}, {9, rat(10)}}));
}

TEST_CASE("vector json round trip") {
  RatVec v = vec({{2, rat(-3, 4)}, {11, rat(7)}});
  auto j = v.json();
  CHECK(j.dump() == R"([[2,"-3","4"],[11,"7","1"]])");
  CHECK(parse_ratvec(nlohmann::json::parse(j.dump())) == v);

  CHECK(parse_ratvec(nlohmann::json::parse("[]")) == RatVec());
  CHECK(parse_ratvec(nlohmann::json::parse("[[1, 2, 4]]")) ==
        vec({{1, rat(1, 2)}}));
  CHECK_THROWS_AS(parse_ratvec(nlohmann::json::parse("[[1,1]]")),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_ratvec(nlohmann::json::parse("[[0,1,1]]")),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_ratvec(nlohmann::json::parse("[[1,1,0]]")),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_ratvec(nlohmann::json::parse("[[1,1,1],[1,2,1]]")),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_ratvec(nlohmann::json::parse(R"([[1,"x",1]])")),
                  std::invalid_argument);
}

TEST_CASE("space grammar round trips") {
  for (const char* text : {
           "c0",
           "l1",
           "schreier(1)",
           "schreier(w^2)",
           "schreier(w^(w + 1)*3 + w*2 + 5)",
           "rsum1(c0)",
           "rsum1(rsum1(l1))",
           "zv(c0, rsum1(c0))",
           "zv(schreier(w), l1)",
           "restrict(schreier(1); 2,4,6)",
           "ilv(c0, schreier(1); 1,3,5)",
           "ilv(zv(c0, c0), rsum1(c0); 2,3)",
       }) {
    SpacePtr sp = parse_space(text);
    CHECK(sp->str() == text);
    CHECK(parse_space(sp->str())->str() == sp->str());
  }
  CHECK(parse_space("  zv( c0 ,rsum1( c0 ) ) ")->str() ==
        "zv(c0, rsum1(c0))");

  for (const char* bad : {
           "", "c1", "c0x", "c0 junk", "schreier", "schreier()",
           "schreier(q)", "schreier(w", "zv(c0)", "zv(c0,)", "rsum1()",
           "restrict(c0)", "restrict(c0;)", "restrict(c0; 3,2)",
           "restrict(c0; 0)", "ilv(c0, c0)", "ilv(c0; 1)", "zv(c0, c0) x",
       }) {
    CHECK_THROWS_AS(parse_space(bad), std::invalid_argument);
  }
}

TEST_CASE("plain norms") {
  auto c0 = SpaceSpec::c0();
  auto l1 = SpaceSpec::l1();
  RatVec x = vec({{1, rat(1, 2)}, {4, rat(-3)}, {9, rat(2)}});
  CHECK(norm(c0, RatVec()) == 0);
  CHECK(norm(l1, RatVec()) == 0);
  CHECK(norm(c0, x) == 3);
  CHECK(norm(l1, x) == rat(11, 2));
}

TEST_CASE("admissible-set norm against brute force") {
  Rng rng(911001);
  for (const char* a : {"1", "2", "3", "w", "w+1", "w*2", "w^2"}) {
    Ordinal alpha = O(a);
    SpacePtr sp = SpaceSpec::schreier(alpha);
    for (int rep = 0; rep < 12; ++rep) {
      RatVec x = random_vec(rng, rep % 2 ? 12 : 30, 9);
      CHECK(norm(sp, x) == schreier_norm_brute(alpha, x));
    }
  }
}

TEST_CASE("admissible-set norm pinned values") {
  auto s1 = SpaceSpec::schreier(O("1"));
  CHECK(norm(s1, vec({{1, rat(1)}, {2, rat(1)}})) == 1);
  CHECK(norm(s1, vec({{1, rat(1)}, {2, rat(1)}, {3, rat(1)}})) == 2);
  // all-ones on [1..2n] picks up exactly n
  for (int n : {1, 2, 3, 4}) {
    RatVec ones;
    for (int i = 1; i <= 2 * n; ++i) ones.set(i, rat(1));
    CHECK(norm(s1, ones) == n);
  }
  auto s2 = SpaceSpec::schreier(O("2"));
  RatVec x = vec({{2, rat(1)}, {3, rat(1)}, {6, rat(1)},
                  {7, rat(1)}, {8, rat(1)}, {9, rat(1)}});
  CHECK(norm(s2, x) == 6);  // the whole support is admissible at level 2
  CHECK(norm(s1, x) == 4);  // but not at level 1: best is {6,7,8,9}
}

TEST_CASE("scalar 1-sum norm") {
  auto sp = parse_space("rsum1(c0)");
  CHECK(norm(sp, vec({{1, rat(1)}})) == 1);
  CHECK(norm(sp, vec({{1, rat(1)}, {2, rat(1)}})) == 2);
  CHECK(norm(sp, vec({{2, rat(1)}, {5, rat(-1)}})) == 1);
  CHECK(norm(sp, vec({{1, rat(-1, 2)}, {3, rat(1, 4)}})) == rat(3, 4));

  auto sp2 = parse_space("rsum1(l1)");
  CHECK(norm(sp2, vec({{1, rat(1)}, {2, rat(1)}, {3, rat(1)}})) == 3);
}

TEST_CASE("block seminorm identities") {
  Rng rng(776001);
  auto zcc = parse_space("zv(c0, c0)");
  auto zcl = parse_space("zv(c0, l1)");
  auto zlc = parse_space("zv(l1, c0)");
  auto c0 = SpaceSpec::c0();
  auto l1 = SpaceSpec::l1();
  for (int rep = 0; rep < 10; ++rep) {
    RatVec x = random_vec(rng, 9, 6);
    CHECK(norm(zcc, x) == norm(c0, x));
    CHECK(norm(zcl, x) == norm(l1, x));
    CHECK(norm(zlc, x) == norm(l1, x));
  }
}

TEST_CASE("block seminorm picks up the scalar coordinate") {
  auto sp = parse_space("zv(c0, rsum1(c0))");
  // one half at 2n and 2n+1: a tuple opening at 1 routes one half through
  // the 1-sum scalar and keeps the other in the sup part
  for (int n : {1, 2, 3}) {
    RatVec x = vec({{2 * n, rat(1, 2)}, {2 * n + 1, rat(1, 2)}});
    CHECK(norm(sp, x) == 1);
  }
  CHECK(norm(sp, vec({{1, rat(1, 2)}, {2, rat(1, 2)}})) == 1);
  CHECK(norm(sp, vec({{2, rat(1)}, {3, rat(1)}})) == 2);
}

TEST_CASE("block seminorm dominates the base norm") {
  Rng rng(776002);
  for (const char* vtext : {"c0", "l1", "rsum1(c0)"}) {
    for (const char* ztext : {"c0", "schreier(1)"}) {
      SpacePtr z = parse_space(ztext);
      SpacePtr sp = SpaceSpec::zv(z, parse_space(vtext));
      for (int rep = 0; rep < 6; ++rep) {
        RatVec x = random_vec(rng, 8, 5);
        CHECK(norm(sp, x) >= norm(z, x));
      }
    }
  }
}

TEST_CASE("breakpoint scan covers exactly the ascending tuples") {
  auto sp = parse_space("zv(c0, rsum1(c0))");
  RatVec x = vec({{2, rat(1, 2)}, {3, rat(1, 2)}});
  std::set<std::vector<int>> seen;
  Rat best(0);
  zv_scan(sp, x, [&](const std::vector<int>& bp, const Rat& value) {
    CHECK(bp.size() >= 2);
    for (size_t i = 0; i + 1 < bp.size(); ++i) CHECK(bp[i] < bp[i + 1]);
    CHECK(bp.back() <= 4);
    CHECK(bp.front() >= 1);
    seen.insert(bp);
    if (value > best) best = value;
  });
  // subsets of {1,2,3,4} with at least two elements
  CHECK(seen.size() == 11);
  CHECK(best == norm(sp, x));
  CHECK_THROWS_AS(zv_scan(SpaceSpec::c0(), x, [](auto&, auto&) {}),
                  std::invalid_argument);
}

TEST_CASE("restricted coordinate spans") {
  auto sp = parse_space("restrict(schreier(1); 2,4,6)");
  CHECK(norm(sp, vec({{2, rat(1)}, {4, rat(1)}})) == 2);
  CHECK(norm(sp, RatVec()) == 0);
  CHECK_THROWS_AS(norm(sp, vec({{3, rat(1)}})), std::invalid_argument);
}

TEST_CASE("interleaved sup-sum") {
  auto sp = parse_space("ilv(c0, schreier(1); 2,4)");
  // listed coordinates re-index to 1,2 for the block space; the rest stay
  CHECK(norm(sp, vec({{2, rat(3)}, {3, rat(1)}})) == 3);
  CHECK(norm(sp, vec({{2, rat(1, 2)}, {4, rat(1, 2)}})) == rat(1, 2));
  CHECK(norm(sp, vec({{5, rat(1)}, {6, rat(1)}, {7, rat(1)}})) == 3);

  auto spl = parse_space("ilv(l1, c0; 2,4)");
  CHECK(norm(spl, vec({{2, rat(1)}, {4, rat(1)}, {9, rat(5)}})) == 5);
}

TEST_CASE("norms are 1-unconditional") {
  Rng rng(515151);
  for (const char* text : {
           "c0", "l1", "schreier(2)", "schreier(w)", "rsum1(c0)",
           "zv(c0, rsum1(c0))", "zv(schreier(1), l1)",
           "ilv(c0, schreier(1); 2,4)",
       }) {
    SpacePtr sp = parse_space(text);
    for (int rep = 0; rep < 5; ++rep) {
      RatVec x = random_vec(rng, 8, 5);
      RatVec flipped;
      for (const auto& [i, q] : x.entries())
        flipped.set(i, rng.flip() ? q : Rat(-q));
      CHECK(norm(sp, x) == norm(sp, flipped));
    }
  }
}

TEST_CASE("admissible-set norm is spreading-monotone") {
  Rng rng(515152);
  for (const char* a : {"1", "2", "w"}) {
    SpacePtr sp = SpaceSpec::schreier(O(a));
    for (int rep = 0; rep < 8; ++rep) {
      RatVec x = random_vec(rng, 10, 6);
      RatVec spread;
      int bump = rng.range(1, 5);
      for (const auto& [i, q] : x.entries()) spread.set(i + bump, q);
      CHECK(norm(sp, spread) >= norm(sp, x));
    }
  }
}

TEST_CASE("normalize") {
  auto sp = parse_space("schreier(1)");
  RatVec x = vec({{1, rat(3)}, {2, rat(-4)}});
  RatVec u = normalize(sp, x);
  CHECK(norm(sp, u) == 1);
  CHECK(u == x.scaled(rat(1, 4)));
  CHECK_THROWS_AS(normalize(sp, RatVec()), std::invalid_argument);
}

TEST_CASE("dual functionals norm every vector in the window") {
  Rng rng(333444);
  for (const char* text : {
           "c0", "l1", "schreier(1)", "schreier(2)", "schreier(w)",
           "rsum1(c0)", "rsum1(l1)", "rsum1(rsum1(c0))", "zv(c0, c0)",
           "zv(c0, rsum1(c0))", "zv(c0, l1)", "restrict(schreier(1); 2,3,5)",
           "ilv(c0, schreier(1); 2,4)",
       }) {
    SpacePtr sp = parse_space(text);
    const int window = 5;
    auto duals = dual_functionals(sp, window);
    REQUIRE(!duals.empty());

    // sign closure
    std::set<RatVec> pool(duals.begin(), duals.end());
    for (const RatVec& phi : duals)
      CHECK(pool.count(phi.scaled(Rat(-1))) == 1);

    bool restricted = text == std::string("restrict(schreier(1); 2,3,5)");
    for (int rep = 0; rep < 8; ++rep) {
      RatVec x;
      for (int i = 1; i <= window; ++i) {
        if (restricted && i != 2 && i != 3 && i != 5) continue;
        long num = static_cast<long>(rng.range(0, 8)) - 4;
        if (num != 0) x.set(i, rat(num, static_cast<long>(rng.range(1, 4))));
      }
      Rat best(0);
      for (const RatVec& phi : duals) {
        Rat v = phi.dot(x);
        if (v > best) best = v;
      }
      CHECK(best == norm(sp, x));
    }

    // determinism
    CHECK(dual_functionals(sp, window) == duals);
  }
}

TEST_CASE("dual functional capacity limits") {
  CHECK_THROWS_AS(dual_functionals(SpaceSpec::l1(), 19), CapacityError);
  // level-1 admissible sets inside [1..22] reach size 11, past the
  // per-set sign-pattern cap
  CHECK_THROWS_AS(dual_functionals(parse_space("schreier(1)"), 22),
                  CapacityError);
  CHECK_THROWS_AS(dual_functionals(SpaceSpec::c0(), 0),
                  std::invalid_argument);
}

TEST_CASE("block seminorm support capacity") {
  auto sp = parse_space("zv(c0, c0)");
  RatVec x = vec({{capacity().zv_window + 1, rat(1)}});
  CHECK_THROWS_AS(norm(sp, x), CapacityError);
}

TEST_CASE("random block sequences") {
  auto sp = parse_space("schreier(1)");
  auto seq = random_block_sequence(sp, 4, 16, 77001);
  REQUIRE(seq.size() == 4);
  for (size_t k = 0; k < seq.size(); ++k) {
    CHECK(!seq[k].zero());
    CHECK(norm(sp, seq[k]) == 1);
    if (k + 1 < seq.size())
      CHECK(seq[k].max_index() < seq[k + 1].min_index());
  }
  CHECK(seq.back().max_index() <= 16);

  CHECK(random_block_sequence(sp, 4, 16, 77001) == seq);
  CHECK(random_block_sequence(sp, 4, 16, 77002) != seq);

  auto single = random_block_sequence(SpaceSpec::l1(), 1, 3, 5);
  CHECK(norm(SpaceSpec::l1(), single[0]) == 1);

  CHECK_THROWS_AS(random_block_sequence(sp, 5, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_block_sequence(sp, 0, 4, 1), std::invalid_argument);
}
