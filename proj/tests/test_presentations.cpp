#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "telescope/error.hpp"
#include "telescope/presentation.hpp"

using namespace telescope;

namespace {

Presentation pres(std::vector<std::string> gens, const std::vector<std::string>& rels) {
  return Presentation::parse(std::move(gens), rels);
}

Presentation t_pres(const std::vector<std::string>& rels) { return pres({"t1", "t2"}, rels); }

}  // namespace

TEST_CASE("adjoin relator") {
  const Presentation base = t_pres({"[t1,t2]"});
  const long p = 5, q = 7;
  const Presentation y1 = adjoin_relator(base, base.word("t2^" + std::to_string(p)));
  CHECK(y1 == t_pres({"[t1,t2]", "t2^5"}));
  CHECK(adjoin_relator(y1, Word()) == y1);
  const Presentation y2 = adjoin_relator(y1, y1.word("t1^" + std::to_string(q)));
  CHECK(abelian_invariants(y2) == abelian_invariants(t_pres({"[t1,t2]", "t1^7", "t2^5"})));
  CHECK(y2.relators().size() == 3);
}

TEST_CASE("tietze on the genus-2 sum presentations") {
  const Presentation p = pres({"alpha1", "alpha2", "alpha3"}, {"[alpha1,alpha2]", "[alpha2,alpha3]", "alpha1 alpha3^2"});
  const TietzeResult r = tietze_simplify(p);
  CHECK(r.complete);
  CHECK(r.presentation.generator_count() == 2);
  CHECK(is_certifiably_abelian(r.presentation));
  CHECK(abelian_invariants(r.presentation) == AbelianInvariants{2, {}});

  const TietzeResult cyc = tietze_simplify(pres({"alpha1", "alpha3"}, {"alpha1 alpha3^2"}));
  CHECK(cyc.presentation == pres({"alpha3"}, {}));

  // After the second surgery: alpha4 = 1 and alpha3 = [alpha1^-1, alpha4^-1].
  const Presentation third = pres({"alpha1", "alpha2", "alpha3", "alpha4"},
                                  {"[alpha1,alpha2]", "[alpha2,alpha3]", "alpha1 alpha3^2", "alpha4",
                                   "alpha3^-1 alpha1^-1 alpha4^-1 alpha1 alpha4"});
  CHECK(tietze_simplify(third).presentation == pres({"alpha2"}, {}));

  const Presentation x = pres({"x"}, {});
  CHECK(tietze_simplify(x).presentation == x);
}

TEST_CASE("relation matrix") {
  const long p = 3;
  CHECK(relation_matrix(t_pres({"[t1,t2]", "t2^3"})) == IntegerMatrix{{0, 0}, {0, p}});
  // Relators are stored in the given order.
  CHECK(relation_matrix(pres({"x", "y"}, {"x^3", "y^3", "[x,y]"})) == IntegerMatrix{{p, 0}, {0, p}, {0, 0}});
  CHECK(relation_matrix(pres({"alpha1", "alpha3"}, {"alpha1 alpha3^2"})) == IntegerMatrix{{1, 2}});
}

TEST_CASE("abelian invariants") {
  for (long p : {3L, 5L, 11L}) {
    const std::string ps = std::to_string(p);
    CHECK(abelian_invariants(t_pres({"[t1,t2]", "t2^" + ps})) == AbelianInvariants{1, {Integer(p)}});
    CHECK(abelian_invariants(pres({"x", "y"}, {"x^" + ps, "y^" + ps, "[x,y]"})) ==
          AbelianInvariants{0, {Integer(p), Integer(p)}});
  }
  CHECK(abelian_invariants(pres({"alpha1", "alpha2", "alpha3"},
                                {"[alpha1,alpha2]", "[alpha2,alpha3]", "alpha1 alpha3^2"})) == AbelianInvariants{2, {}});
  CHECK(abelian_invariants(pres({"x"}, {"x"})).to_string() == "1");
  CHECK(abelian_invariants(t_pres({"[t1,t2]", "t2^3"})).to_string() == "Z + Z_3");
}

TEST_CASE("canonical abelian group matches the prime-power oracle") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 500; ++i) {
    std::vector<long> orders;
    std::vector<Integer> big;
    for (std::size_t j = 0; j < 1 + rng() % 4; ++j) {
      orders.push_back(1 + static_cast<long>(rng() % 60));
      big.push_back(orders.back());
    }
    REQUIRE(canonical_abelian_group(0, big).torsion == oracle::canonical_torsion(orders));
  }
  CHECK(canonical_abelian_group(0, {5, 3}).torsion == std::vector<Integer>{15});
  CHECK(canonical_abelian_group(0, {3, 3}).torsion == std::vector<Integer>{3, 3});
  CHECK(canonical_abelian_group(1, {0, 4, 1}) == AbelianInvariants{2, {4}});
}

TEST_CASE("certifiably abelian") {
  CHECK(is_certifiably_abelian(t_pres({"[t1,t2]", "t1^5", "t2^3"})));
  CHECK(is_certifiably_abelian(pres({"x"}, {})));
  CHECK_FALSE(is_certifiably_abelian(pres({"a", "b"}, {})));
}

TEST_CASE("generates full group") {
  const Presentation a = pres({"b1", "c"}, {"[b1,c]"});
  const std::vector<Word> cb{a.word("c"), a.word("b1")};
  CHECK(generates_full_group(cb, a));
  const Presentation c = pres({"alpha2", "alpha4"}, {"[alpha2,alpha4]"});
  const std::vector<Word> c_words{c.word("alpha4"), c.word("alpha2")};
  CHECK(generates_full_group(c_words, c));
  const Presentation z2 = pres({"x", "y"}, {"[x,y]"});
  const std::vector<Word> xx{z2.word("x"), z2.word("x")};
  CHECK_FALSE(generates_full_group(xx, z2));
  const std::vector<Word> sheared{z2.word("x y"), z2.word("y")};
  CHECK(generates_full_group(sheared, z2));
  const std::vector<Word> doubled{z2.word("x^2"), z2.word("y")};
  CHECK_FALSE(generates_full_group(doubled, z2));
  const Presentation free2 = pres({"a", "b"}, {});
  const std::vector<Word> ab{free2.word("a"), free2.word("b")};
  CHECK_THROWS_AS(generates_full_group(ab, free2), Error);
}

TEST_CASE("tietze preserves abelian invariants on random presentations") {
  std::mt19937_64 rng(23);
  const std::vector<std::string> gens{"a", "b", "c", "d"};
  for (int i = 0; i < 400; ++i) {
    std::vector<Word> rels;
    for (std::size_t j = 0; j < rng() % 5; ++j) {
      std::vector<Letter> v;
      for (std::size_t k = 0; k < 1 + rng() % 6; ++k)
        v.push_back({static_cast<int>(rng() % 4), rng() % 2 ? 1 : -1});
      rels.push_back(Word(v));
    }
    if (rng() % 2) rels.push_back(commutator(Word::power_of(0, 1), Word::power_of(1, 1)));
    const Presentation p(gens, rels);
    const TietzeResult r = tietze_simplify(p);
    REQUIRE(abelian_invariants(r.presentation) == abelian_invariants(p));
    REQUIRE(r.presentation.generator_count() <= p.generator_count());
    REQUIRE(tietze_simplify(p).presentation == r.presentation);
  }
}

TEST_CASE("adding a relator never enlarges the abelianization") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 300; ++i) {
    Presentation p = t_pres({"[t1,t2]"});
    for (int step = 0; step < 3; ++step) {
      const Word r = Word::power_of(0, static_cast<long>(rng() % 7)) * Word::power_of(1, static_cast<long>(rng() % 7));
      const Presentation q = adjoin_relator(p, r);
      const auto before = abelian_invariants(p), after = abelian_invariants(q);
      REQUIRE(after.free_rank <= before.free_rank);
      if (after.free_rank == before.free_rank && !before.torsion.empty()) {
        Integer ob = 1, oa = 1;
        for (const auto& t : before.torsion) ob *= t;
        for (const auto& t : after.torsion) oa *= t;
        REQUIRE(ob % oa == 0);
      }
      p = q;
    }
  }
}

TEST_CASE("presentation validation") {
  CHECK_THROWS_AS(Presentation({"x", "x"}, {}), Error);
  CHECK_THROWS_AS(Presentation({"x"}, {Word::power_of(3, 1)}), Error);
  CHECK(pres({"x", "y"}, {"x x^-1"}).relators().empty());
  CHECK(pres({"b1", "c"}, {"[b1,c]"}).to_string() == "<b1,c | b1 c b1^-1 c^-1>");
}

TEST_CASE("abelian coordinates") {
  const Presentation p = pres({"a", "b", "c"}, {"[a,b]", "[a,c]", "[b,c]", "c b^-1 a^-2"});
  const AbelianCoordinates coords(p);
  CHECK(coords.free_rank() == 2);
  CHECK(coords.is_trivial(p.word("c b^-1 a^-2")));
  CHECK_FALSE(coords.is_trivial(p.word("a")));
}
