#include "telescope/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "telescope/error.hpp"

namespace telescope {

Word Word::power_of(int generator, long k) {
  std::vector<Letter> letters(static_cast<std::size_t>(k < 0 ? -k : k),
                              Letter{generator, k < 0 ? -1 : 1});
  return Word(std::move(letters));
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return Word(std::move(out));
}

Word Word::pow(long k) const {
  const Word base = k < 0 ? inverse() : *this;
  const long times = k < 0 ? -k : k;
  std::vector<Letter> out;
  out.reserve(base.size() * static_cast<std::size_t>(times));
  for (long i = 0; i < times; ++i)
    out.insert(out.end(), base.letters_.begin(), base.letters_.end());
  return Word(std::move(out));
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.letters_.begin(), a.letters_.end());
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(out));
}

Word commutator(const Word& a, const Word& b) {
  return a * b * a.inverse() * b.inverse();
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const Letter& l : w.letters()) {
    if (!stack.empty() && stack.back() == l.inverse())
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return Word(std::move(stack));
}

Word cyclic_reduce(const Word& w) {
  const Word reduced = free_reduce(w);
  const auto& l = reduced.letters();
  std::size_t lo = 0;
  std::size_t hi = l.size();
  while (hi - lo >= 2 && l[lo] == l[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Letter>(l.begin() + static_cast<std::ptrdiff_t>(lo),
                                  l.begin() + static_cast<std::ptrdiff_t>(hi)));
}

std::vector<long> exponent_sums(const Word& w, std::size_t generator_count) {
  std::vector<long> sums(generator_count, 0);
  for (const Letter& l : w.letters()) sums.at(static_cast<std::size_t>(l.generator)) += l.exponent;
  return sums;
}

bool is_valid_generator_name(std::string_view name) {
  if (name.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

namespace {

int lookup(std::string_view name, std::span<const std::string> generators, std::string_view text) {
  auto it = std::find(generators.begin(), generators.end(), name);
  if (it == generators.end())
    throw Error(ErrorCode::parse,
                "unknown generator '" + std::string(name) + "' in word '" + std::string(text) + "'");
  return static_cast<int>(it - generators.begin());
}

}  // namespace

Word parse_word(std::string_view text, std::span<const std::string> generators) {
  std::vector<Letter> letters;
  std::istringstream in{std::string(text)};
  std::string token;
  bool saw_identity = false;
  bool saw_other = false;
  while (in >> token) {
    if (token == "1") {
      saw_identity = true;
      continue;
    }
    saw_other = true;
    if (token.front() == '[') {
      const auto comma = token.find(',');
      if (token.back() != ']' || comma == std::string::npos)
        throw Error(ErrorCode::parse, "malformed commutator '" + token + "'");
      const std::string a = token.substr(1, comma - 1);
      const std::string b = token.substr(comma + 1, token.size() - comma - 2);
      const int ia = lookup(a, generators, text);
      const int ib = lookup(b, generators, text);
      Word c = commutator(Word::power_of(ia, 1), Word::power_of(ib, 1));
      letters.insert(letters.end(), c.letters().begin(), c.letters().end());
      continue;
    }
    const auto caret = token.find('^');
    const std::string name = token.substr(0, caret);
    long exponent = 1;
    if (caret != std::string::npos) {
      const std::string digits = token.substr(caret + 1);
      const char* first = digits.data();
      const char* last = digits.data() + digits.size();
      if (first != last && *first == '+') ++first;
      auto [ptr, ec] = std::from_chars(first, last, exponent);
      if (digits.empty() || ec != std::errc{} || ptr != last)
        throw Error(ErrorCode::parse, "malformed exponent in '" + token + "'");
    }
    const int g = lookup(name, generators, text);
    Word p = Word::power_of(g, exponent);
    letters.insert(letters.end(), p.letters().begin(), p.letters().end());
  }
  if (saw_identity && saw_other)
    throw Error(ErrorCode::parse, "'1' must stand alone in word '" + std::string(text) + "'");
  return Word(std::move(letters));
}

std::string format_word(const Word& w, std::span<const std::string> generators) {
  if (w.empty()) return "1";
  std::string out;
  const auto& l = w.letters();
  for (std::size_t i = 0; i < l.size();) {
    std::size_t j = i;
    while (j < l.size() && l[j] == l[i]) ++j;
    const long run = static_cast<long>(j - i) * l[i].exponent;
    if (!out.empty()) out += ' ';
    out += generators[static_cast<std::size_t>(l[i].generator)];
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

}  // namespace telescope
