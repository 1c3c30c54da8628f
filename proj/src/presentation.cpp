#include "telescope/presentation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "telescope/error.hpp"

namespace telescope {

Presentation::Presentation(std::vector<std::string> generators, std::vector<Word> relators)
    : generators_(std::move(generators)) {
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (!is_valid_generator_name(g))
      throw Error(ErrorCode::parse, "invalid generator name '" + g + "'");
    if (!seen.insert(g).second) throw Error(ErrorCode::parse, "duplicate generator '" + g + "'");
  }
  const int count = static_cast<int>(generators_.size());
  for (const Word& r : relators) {
    for (const Letter& l : r.letters())
      if (l.generator < 0 || l.generator >= count || (l.exponent != 1 && l.exponent != -1))
        throw Error(ErrorCode::invalid_relator,
                    "relator letter references generator " + std::to_string(l.generator) +
                        " outside range [0, " + std::to_string(count) + ")");
    Word reduced = cyclic_reduce(r);
    if (!reduced.empty()) relators_.push_back(std::move(reduced));
  }
}

Presentation Presentation::parse(std::vector<std::string> generators,
                                 const std::vector<std::string>& relators) {
  std::vector<Word> words;
  words.reserve(relators.size());
  for (const auto& r : relators) words.push_back(parse_word(r, generators));
  return Presentation(std::move(generators), std::move(words));
}

std::string Presentation::to_string() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < generators_.size(); ++i) os << (i ? "," : "") << generators_[i];
  os << " |";
  for (std::size_t i = 0; i < relators_.size(); ++i)
    os << (i ? ", " : " ") << format(relators_[i]);
  os << '>';
  return os.str();
}

Presentation adjoin_relator(const Presentation& p, const Word& r) {
  std::vector<Word> relators = p.relators();
  relators.push_back(r);
  return Presentation(p.generators(), std::move(relators));
}

namespace {

bool is_commutator_shaped(const Word& w) {
  const auto& l = w.letters();
  return l.size() == 4 && l[0].generator != l[1].generator && l[2] == l[0].inverse() &&
         l[3] == l[1].inverse();
}

using CommuteTable = std::vector<std::vector<bool>>;

CommuteTable commute_table(const std::vector<Word>& relators, std::size_t n) {
  CommuteTable table(n, std::vector<bool>(n, false));
  for (std::size_t g = 0; g < n; ++g) table[g][g] = true;
  for (const Word& r : relators) {
    if (!is_commutator_shaped(r)) continue;
    const auto a = static_cast<std::size_t>(r.letters()[0].generator);
    const auto b = static_cast<std::size_t>(r.letters()[1].generator);
    table[a][b] = table[b][a] = true;
  }
  return table;
}

// Cancels x ... x^-1 around the cyclic word whenever every letter strictly
// between commutes with x. This is reduction in the right-angled Artin group
// defined by the known commutations, of which the presented group is a quotient.
bool commuting_reduce(std::vector<Letter>& w, const CommuteTable& commute) {
  bool changed = false;
  bool progress = true;
  while (progress && !w.empty()) {
    progress = false;
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n && !progress; ++i) {
      const Letter x = w[i];
      for (std::size_t k = 1; k < n; ++k) {
        const std::size_t j = (i + k) % n;
        const Letter y = w[j];
        if (y.generator == x.generator) {
          if (y.exponent == -x.exponent) {
            const std::size_t lo = std::min(i, j);
            const std::size_t hi = std::max(i, j);
            w.erase(w.begin() + static_cast<std::ptrdiff_t>(hi));
            w.erase(w.begin() + static_cast<std::ptrdiff_t>(lo));
            progress = changed = true;
          }
          break;
        }
        if (!commute[static_cast<std::size_t>(x.generator)][static_cast<std::size_t>(y.generator)])
          break;
      }
    }
  }
  return changed;
}

Word substitute(const Word& w, int generator, const Word& replacement) {
  std::vector<Letter> out;
  const Word inverse = replacement.inverse();
  for (const Letter& l : w.letters()) {
    if (l.generator != generator) {
      Letter shifted = l;
      if (shifted.generator > generator) --shifted.generator;
      out.push_back(shifted);
      continue;
    }
    const Word& piece = l.exponent > 0 ? replacement : inverse;
    out.insert(out.end(), piece.letters().begin(), piece.letters().end());
  }
  return Word(std::move(out));
}

// Within relator r = u g^e v (g occurring once), g^e = u^-1 v^-1. The
// replacement is expressed in the indices after g is removed.
Word solve_for(const Word& r, int generator) {
  const auto& l = r.letters();
  std::size_t pos = 0;
  while (l[pos].generator != generator) ++pos;
  const Word u(std::vector<Letter>(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(pos)));
  const Word v(std::vector<Letter>(l.begin() + static_cast<std::ptrdiff_t>(pos) + 1, l.end()));
  Word value = u.inverse() * v.inverse();
  if (l[pos].exponent < 0) value = value.inverse();
  // Shift indices above the eliminated generator.
  return substitute(free_reduce(value), generator, Word{});
}

struct Normalized {
  std::vector<Word> relators;
  bool changed = false;
};

Normalized normalize(const std::vector<Word>& relators) {
  Normalized out;
  for (const Word& r : relators) {
    Word reduced = cyclic_reduce(r);
    if (!(reduced == r)) out.changed = true;
    if (reduced.empty()) {
      out.changed = true;
      continue;
    }
    if (std::find(out.relators.begin(), out.relators.end(), reduced) != out.relators.end()) {
      out.changed = true;
      continue;
    }
    out.relators.push_back(std::move(reduced));
  }
  return out;
}

}  // namespace

TietzeResult tietze_simplify(const Presentation& p, const TietzeOptions& options) {
  std::vector<std::string> gens = p.generators();
  std::vector<Word> relators = p.relators();

  TietzeResult result;
  for (;;) {
    if (result.passes >= options.max_passes) {
      result.complete = false;
      break;
    }
    ++result.passes;

    Normalized norm = normalize(relators);
    relators = std::move(norm.relators);
    bool changed = norm.changed;

    const CommuteTable commute = commute_table(relators, gens.size());
    for (Word& r : relators) {
      if (is_commutator_shaped(r)) continue;
      std::vector<Letter> letters = r.letters();
      if (commuting_reduce(letters, commute)) {
        r = Word(std::move(letters));
        changed = true;
      }
    }
    norm = normalize(relators);
    relators = std::move(norm.relators);
    changed = changed || norm.changed;

    std::vector<std::size_t> order(relators.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return relators[a].size() < relators[b].size();
    });

    bool eliminated = false;
    for (std::size_t idx : order) {
      const Word& r = relators[idx];
      std::vector<int> counts(gens.size(), 0);
      for (const Letter& l : r.letters()) ++counts[static_cast<std::size_t>(l.generator)];
      const auto it = std::find(counts.begin(), counts.end(), 1);
      if (it == counts.end()) continue;
      const int g = static_cast<int>(it - counts.begin());
      const Word value = solve_for(r, g);
      std::vector<Word> next;
      next.reserve(relators.size() - 1);
      for (std::size_t j = 0; j < relators.size(); ++j)
        if (j != idx) next.push_back(substitute(relators[j], g, value));
      relators = std::move(next);
      gens.erase(gens.begin() + g);
      eliminated = true;
      break;
    }
    if (!eliminated && !changed) break;
  }
  result.presentation = Presentation(std::move(gens), std::move(relators));
  return result;
}

IntegerMatrix relation_matrix(const Presentation& p) {
  IntegerMatrix m(p.relators().size(), p.generator_count());
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    const auto sums = exponent_sums(p.relators()[i], p.generator_count());
    for (std::size_t j = 0; j < sums.size(); ++j) m(i, j) = sums[j];
  }
  return m;
}

AbelianInvariants canonical_abelian_group(std::size_t free_rank, std::vector<Integer> orders) {
  AbelianInvariants out{free_rank, {}};
  std::vector<Integer> finite;
  for (auto& o : orders) {
    Integer a = abs(o);
    if (a == 0)
      ++out.free_rank;
    else if (a != 1)
      finite.push_back(std::move(a));
  }
  // Diagonal matrix of the finite orders; its Smith form is the invariant-factor form.
  IntegerMatrix diag(finite.size(), finite.size());
  for (std::size_t i = 0; i < finite.size(); ++i) diag(i, i) = finite[i];
  for (const auto& d : smith_normal_form(diag).diagonal())
    if (d > 1) out.torsion.push_back(d);
  return out;
}

AbelianInvariants abelian_invariants(const Presentation& p) {
  const SmithDecomposition snf = smith_normal_form(relation_matrix(p));
  AbelianInvariants out;
  out.free_rank = p.generator_count() - snf.rank();
  for (const auto& d : snf.diagonal())
    if (d > 1) out.torsion.push_back(d);
  return out;
}

std::string AbelianInvariants::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < free_rank; ++i) out += out.empty() ? "Z" : " + Z";
  for (const auto& t : torsion) out += (out.empty() ? "Z_" : " + Z_") + t.get_str();
  return out.empty() ? "1" : out;
}

bool is_certifiably_abelian(const Presentation& p) {
  const Presentation s = tietze_simplify(p).presentation;
  const std::size_t n = s.generator_count();
  if (n <= 1) return true;
  const auto table = commute_table(s.relators(), n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (!table[a][b]) return false;
  return true;
}

AbelianCoordinates::AbelianCoordinates(const Presentation& p)
    : generator_count_(p.generator_count()) {
  SmithDecomposition snf = smith_normal_form(relation_matrix(p));
  rank_ = snf.rank();
  diagonal_ = snf.diagonal();
  v_ = std::move(snf.v);
}

std::vector<Integer> AbelianCoordinates::transform(const Word& w) const {
  const auto sums = exponent_sums(w, generator_count_);
  std::vector<Integer> y(generator_count_);
  for (std::size_t i = 0; i < generator_count_; ++i) {
    if (sums[i] == 0) continue;
    for (std::size_t j = 0; j < generator_count_; ++j) y[j] += sums[i] * v_(i, j);
  }
  return y;
}

std::vector<Integer> AbelianCoordinates::free_part(const Word& w) const {
  auto y = transform(w);
  return {y.begin() + static_cast<std::ptrdiff_t>(rank_), y.end()};
}

bool AbelianCoordinates::is_trivial(const Word& w) const {
  const auto y = transform(w);
  for (std::size_t i = 0; i < generator_count_; ++i) {
    if (i < rank_) {
      if (!mpz_divisible_p(y[i].get_mpz_t(), diagonal_[i].get_mpz_t())) return false;
    } else if (y[i] != 0) {
      return false;
    }
  }
  return true;
}

bool generates_full_group(std::span<const Word> words, const Presentation& p) {
  if (!is_certifiably_abelian(p))
    throw Error(ErrorCode::not_certified, "presentation is not certifiably abelian: " + p.to_string());
  const AbelianInvariants inv = abelian_invariants(p);
  if (!inv.is_free())
    throw Error(ErrorCode::not_certified, "group has torsion " + inv.to_string());
  if (words.size() != inv.free_rank)
    throw Error(ErrorCode::not_certified,
                "expected " + std::to_string(inv.free_rank) + " words, got " +
                    std::to_string(words.size()));
  for (const Word& w : words)
    for (const Letter& l : w.letters())
      if (l.generator < 0 || static_cast<std::size_t>(l.generator) >= p.generator_count())
        throw Error(ErrorCode::invalid_relator, "word uses a generator outside the presentation");
  const AbelianCoordinates coords(p);
  IntegerMatrix m(words.size(), words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto row = coords.free_part(words[i]);
    for (std::size_t j = 0; j < row.size(); ++j) m(i, j) = row[j];
  }
  return abs(determinant(m)) == 1;
}

}  // namespace telescope
