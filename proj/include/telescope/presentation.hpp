#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "telescope/integer_matrix.hpp"
#include "telescope/smith.hpp"
#include "telescope/word.hpp"

namespace telescope {

/// Finitely presented group. Relators are stored freely and cyclically
/// reduced; empty relators are dropped on construction.
class Presentation {
 public:
  Presentation() = default;

  /// Throws Error(invalid_relator) for out-of-range generators and
  /// Error(parse) for bad or duplicate generator names.
  Presentation(std::vector<std::string> generators, std::vector<Word> relators);

  /// Convenience: relators in the word grammar.
  static Presentation parse(std::vector<std::string> generators,
                            const std::vector<std::string>& relators);

  const std::vector<std::string>& generators() const noexcept { return generators_; }
  const std::vector<Word>& relators() const noexcept { return relators_; }
  std::size_t generator_count() const noexcept { return generators_.size(); }

  Word word(std::string_view text) const { return parse_word(text, generators_); }
  std::string format(const Word& w) const { return format_word(w, generators_); }
  std::string to_string() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
};

/// Quotient by the normal closure of r.
Presentation adjoin_relator(const Presentation& p, const Word& r);

struct TietzeOptions {
  std::size_t max_passes = 1000;
};

struct TietzeResult {
  Presentation presentation;
  /// False when the pass cap was hit; the presentation is still valid.
  bool complete = true;
  std::size_t passes = 0;
};

/// Deterministic simplification to a fixpoint. Each pass reduces relators,
/// cancels letters across generators known to commute (from commutator
/// relators), then eliminates at most one generator: the lowest-index
/// generator occurring exactly once in the shortest eligible relator.
TietzeResult tietze_simplify(const Presentation& p, const TietzeOptions& options = {});

/// Exponent-sum matrix; rows are relators, columns generators.
IntegerMatrix relation_matrix(const Presentation& p);

struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // each >= 2, each dividing the next

  bool is_free() const { return torsion.empty(); }
  bool is_finite() const { return free_rank == 0; }
  std::string to_string() const;
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Canonical invariant-factor form of a finite list of cyclic orders
/// (entries 0 are free summands, entries 1 are dropped).
AbelianInvariants canonical_abelian_group(std::size_t free_rank, std::vector<Integer> orders);

AbelianInvariants abelian_invariants(const Presentation& p);

/// Sound, incomplete: true only when every surviving pair of generators
/// after simplification has a commutator relator.
bool is_certifiably_abelian(const Presentation& p);

/// Coordinates of the abelianization obtained from the Smith form of the
/// relation matrix: a word maps to x*V, whose first `rank` entries are
/// torsion coordinates (mod d_i) and the rest free coordinates.
class AbelianCoordinates {
 public:
  explicit AbelianCoordinates(const Presentation& p);

  std::size_t free_rank() const noexcept { return generator_count_ - rank_; }
  std::vector<Integer> free_part(const Word& w) const;
  /// True iff the word maps to zero in the abelianization.
  bool is_trivial(const Word& w) const;

 private:
  std::vector<Integer> transform(const Word& w) const;

  std::size_t generator_count_ = 0;
  std::size_t rank_ = 0;
  std::vector<Integer> diagonal_;
  IntegerMatrix v_;
};

/// Whether the words form a basis of a certified free abelian group.
/// Throws Error(not_certified) when the precondition fails.
bool generates_full_group(std::span<const Word> words, const Presentation& p);

}  // namespace telescope
