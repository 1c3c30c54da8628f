#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "telescope/error.hpp"
#include "telescope/word.hpp"

using namespace telescope;

namespace {

const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kAC{"b1", "c"};

Word random_word(std::mt19937_64& rng, int gens, std::size_t len) {
  std::vector<Letter> v;
  for (std::size_t i = 0; i < len; ++i)
    v.push_back({static_cast<int>(rng() % gens), rng() % 2 ? 1 : -1});
  return Word(v);
}

}  // namespace

TEST_CASE("free reduction examples") {
  CHECK(free_reduce(parse_word("x x^-1", kXY)).empty());
  CHECK(format_word(free_reduce(parse_word("b1 c c^-1 b1", kAC)), kAC) == "b1^2");
  CHECK(free_reduce(parse_word("b1 c c^-1 b1", kAC)) == parse_word("b1 b1", kAC));
  const Word comm = parse_word("[x,y]", kXY);
  CHECK(comm == parse_word("x y x^-1 y^-1", kXY));
  CHECK(free_reduce(comm) == comm);
}

TEST_CASE("word grammar") {
  CHECK(parse_word("1", kXY).empty());
  CHECK(parse_word("x^3", kXY) == Word::power_of(0, 3));
  CHECK(parse_word("y^-2", kXY) == Word::power_of(1, -2));
  CHECK(parse_word("x^0", kXY).empty());
  CHECK(format_word(Word(), kXY) == "1");
  CHECK(format_word(parse_word("x x y^-1", kXY), kXY) == "x^2 y^-1");
  CHECK_THROWS_AS(parse_word("z", kXY), Error);
  CHECK_THROWS_AS(parse_word("x^", kXY), Error);
  CHECK_THROWS_AS(parse_word("[x,", kXY), Error);
  CHECK(is_valid_generator_name("alpha3"));
  CHECK_FALSE(is_valid_generator_name("3x"));
  CHECK_FALSE(is_valid_generator_name(""));
}

TEST_CASE("word algebra") {
  const Word x = Word::power_of(0, 1), y = Word::power_of(1, 1);
  CHECK(commutator(x, y) == x * y * x.inverse() * y.inverse());
  CHECK(free_reduce(commutator(x, y) * commutator(x, y).inverse()).empty());
  CHECK(x.pow(-3) == Word::power_of(0, -3));
  CHECK(cyclic_reduce(parse_word("y x y^-1", kXY)) == x);
  CHECK(exponent_sums(parse_word("x y^2 x^-3 [x,y]", kXY), 2) == std::vector<long>{-2, 2});
}

TEST_CASE("free reduction is idempotent and agrees with the naive oracle") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 5000; ++i) {
    const Word w = random_word(rng, 1 + static_cast<int>(rng() % 3), rng() % 24);
    const Word r = free_reduce(w);
    REQUIRE(free_reduce(r) == r);
    REQUIRE(r == oracle::naive_reduce(w));
    REQUIRE(exponent_sums(r, 3) == exponent_sums(w, 3));
    REQUIRE(free_reduce(w * w.inverse()).empty());
  }
}

TEST_CASE("format and parse round-trip") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    const Word w = free_reduce(random_word(rng, 2, rng() % 16));
    REQUIRE(parse_word(format_word(w, kXY), kXY) == w);
  }
}
