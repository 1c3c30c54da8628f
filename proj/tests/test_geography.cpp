#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "telescope/error.hpp"
#include "telescope/geography.hpp"

using namespace telescope;

TEST_CASE("characteristic numbers") {
  CHECK(char_from_es(5, -1) == CharNumbers{5, -1, 7, 1});
  CHECK(char_from_es(10, -6) == CharNumbers{10, -6, 2, 1});
  CHECK(char_from_es(0, 0) == CharNumbers{0, 0, 0, 0});
  CHECK_THROWS_AS(char_from_es(5, 0), Error);
  CHECK(es_from_char(7, 1) == EulerSignature{5, -1});
  CHECK(es_from_char(0, 0) == EulerSignature{0, 0});
  // (21, 3) is A_3: e = 15, sigma = -3.
  CHECK(es_from_char(21, 3) == EulerSignature{15, -3});
  const auto a3 = compose_recipe({1, 3});
  CHECK(char_from_es(a3.e, a3.sigma).c1sq == 21);
}

TEST_CASE("es and char are mutually inverse") {
  for (long e = -40; e <= 40; ++e)
    for (long s = -40; s <= 40; ++s) {
      if ((e + s) % 4 != 0) continue;
      const CharNumbers cn = char_from_es(e, s);
      REQUIRE(es_from_char(cn.c1sq, cn.chi_h) == EulerSignature{e, s});
    }
}

TEST_CASE("betti numbers from characteristic numbers") {
  CHECK(betti_from_char(char_from_es(10, -2), 0) == BettiPair{0, 3, 5});
  const BettiPair a = betti_from_char(char_from_es(5, -1), 2);
  CHECK(a.b2() == 7);
  CHECK(a == BettiPair{2, 3, 4});
  // The prototype core has chi_h = 1/2, so it is built by hand.
  CHECK(betti_from_char(CharNumbers{.e = 2, .sigma = 0, .c1sq = 4, .chi_h = 0}, 0) == BettiPair{0, 0, 0});
  CHECK_THROWS_AS(betti_from_char(char_from_es(0, 0), 0), Error);   // b2 = -2
  CHECK_THROWS_AS(betti_from_char(char_from_es(6, -10), 0), Error); // |sigma| > b2
}

TEST_CASE("tabulated geography points") {
  auto pt = [](FamilyRecipe r) {
    const auto p = theorem1_point(r);
    return std::pair{p.c, p.chi};
  };
  CHECK(pt({1, 3}) == std::pair{21L, 3L});
  CHECK(pt({6, 1, 1, 0}) == std::pair{13L, 2L});
  CHECK(pt({15, 1, 1}) == std::pair{6L, 2L});
  CHECK(pt({5, 2, std::nullopt, 1}) == std::pair{28L, 4L});
  CHECK(pt({5, 3, std::nullopt, 2}) == std::pair{3L * 22, 3L * 3});
}

TEST_CASE("tabulated betti numbers of the finite-group members") {
  CHECK(prop14_betti({1, 2}) == BettiPair{0, 3, 5});
  CHECK(prop14_betti({5, 1, std::nullopt, 1}) == BettiPair{0, 3, 5});
  CHECK(prop14_betti({7, 1, 1}) == BettiPair{0, 3, 7});
  CHECK(prop14_betti({4, 1}) == BettiPair{0, 1, 7});
  CHECK(prop14_betti({5, 1, std::nullopt, 0}) == BettiPair{0, 1, 3});
}

TEST_CASE("cross check examples") {
  const auto r1 = cross_check({1, 2});
  CHECK(r1.ok());
  CHECK(r1.point.c == 14);
  CHECK(r1.point.chi == 2);
  CHECK(r1.derived == BettiPair{0, 3, 5});
  const auto r4 = cross_check({4, 1});
  CHECK(r4.ok());
  CHECK(r4.derived == BettiPair{0, 1, 7});
  const auto r5 = cross_check({5, 1, std::nullopt, 0});
  CHECK(r5.ok());
  CHECK(r5.point.c == 6);
  CHECK(r5.derived == BettiPair{0, 1, 3});
}

TEST_CASE("tabulated formulas agree with composition and the betti oracle") {
  for (const auto& r : recipes_in_bounds(4, 4, 2)) {
    const auto t = compose_recipe(r);
    const CharNumbers cn = char_from_es(t.e, t.sigma);
    const GeographyPoint pt = theorem1_point(r);
    REQUIRE(cn.c1sq == pt.c);
    REQUIRE(cn.chi_h == pt.chi);
    REQUIRE(sum_formula(r.k).e.evaluate(r) == t.e);
    REQUIRE(sum_formula(r.k).sigma.evaluate(r) == t.sigma);
    const auto b = oracle::betti_from_point(pt.c, pt.chi);
    REQUIRE(prop14_betti(r) == BettiPair{0, b.plus, b.minus});
    REQUIRE(t.sigma < 0);
  }
}

TEST_CASE("enumerate points") {
  const auto small = enumerate_points(1, 1, 0);
  std::set<std::pair<long, long>> pts;
  for (const auto& p : small) pts.emplace(p.c, p.chi);
  for (auto want : {std::pair{7L, 1L}, {5L, 1L}, {4L, 1L}, {2L, 1L}, {6L, 1L}}) CHECK(pts.count(want) == 1);

  const auto pts2 = enumerate_points(2, 2, 0);
  std::set<std::pair<long, long>> fam1;
  for (const auto& p : pts2)
    if (p.family.k == 1) fam1.emplace(p.c, p.chi);
  CHECK(fam1 == std::set<std::pair<long, long>>{{7, 1}, {14, 2}});
  const auto a1 = std::find_if(pts2.begin(), pts2.end(), [](const GeographyPoint& p) { return p.family.k == 1; });
  CHECK(a1->c == 7);
  CHECK(a1->chi == 1);

  // Sorted, and unique per (c, chi, group).
  std::set<std::tuple<long, long, GroupTag>> seen;
  for (std::size_t i = 0; i < pts2.size(); ++i) {
    REQUIRE(seen.emplace(pts2[i].c, pts2[i].chi, pts2[i].group).second);
    if (i) REQUIRE(std::pair{pts2[i - 1].chi, pts2[i - 1].c} <= std::pair{pts2[i].chi, pts2[i].c});
  }
}

TEST_CASE("group tags") {
  CHECK(first_betti(GroupTag::z_z) == 2);
  CHECK(first_betti(GroupTag::z_zp) == 1);
  CHECK(first_betti(GroupTag::zq_zp) == 0);
  CHECK(first_betti(GroupTag::zp_zp) == 0);
  for (GroupTag t : kAllGroupTags)
    CHECK(static_cast<long>(abelian_invariants(standard_presentation(t)).free_rank) == first_betti(t));
}
