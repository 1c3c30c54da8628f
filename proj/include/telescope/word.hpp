#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace telescope {

/// One letter of a group word: generator index and exponent +1 or -1.
struct Letter {
  int generator = 0;
  int exponent = 1;

  Letter inverse() const { return {generator, -exponent}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A word in the free group on indexed generators. The empty word is the identity.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// g^k as a word of |k| letters.
  static Word power_of(int generator, long k);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  Word inverse() const;
  Word pow(long k) const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// [a, b] = a b a^-1 b^-1
Word commutator(const Word& a, const Word& b);

Word free_reduce(const Word& w);

/// Freely reduces, then strips letters that cancel around the cyclic boundary.
Word cyclic_reduce(const Word& w);

/// Exponent sum of each generator; the row of a relation matrix.
std::vector<long> exponent_sums(const Word& w, std::size_t generator_count);

/// Parses the whitespace-separated grammar: `name`, `name^k`, `[name,name]`, or `1`.
Word parse_word(std::string_view text, std::span<const std::string> generators);

/// Inverse of parse_word; runs of one letter print as `name^k`.
std::string format_word(const Word& w, std::span<const std::string> generators);

bool is_valid_generator_name(std::string_view name);

}  // namespace telescope
