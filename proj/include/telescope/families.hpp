#pragma once

#include <array>
#include <optional>
#include <string>

#include "telescope/construction.hpp"
#include "telescope/registry.hpp"

namespace telescope {

inline constexpr int kFamilyCount = 15;

/// Which blocks a family sums: n copies of `first`, then m copies of `second`.
struct FamilyShape {
  int k;
  char first;
  char second;  // '\0' for single-block families
  const char* label;

  bool two_parameter() const { return second != '\0'; }
  bool uses_genus() const { return first == 'B' || second == 'B'; }
};

const FamilyShape& family_shape(int k);

struct FamilyRecipe {
  int k = 1;
  long n = 1;
  std::optional<long> m;
  std::optional<int> g;

  /// Throws Error(invalid_recipe) unless the parameters fit family k.
  void validate() const;
  /// e.g. "A_n#m(B_g)[n=2,m=1,g=0]"
  std::string label() const;

  friend bool operator==(const FamilyRecipe&, const FamilyRecipe&) = default;
};

/// Coefficients of (a + a_g g) n + (b + b_g g) m + c.
struct LinearForm {
  long n = 0;
  long n_g = 0;
  long m = 0;
  long m_g = 0;
  long constant = 0;

  long evaluate(const FamilyRecipe& r) const;
};

/// Closed-form Euler characteristic and signature of each composed triple.
struct SumFormula {
  LinearForm e;
  LinearForm sigma;
};
const SumFormula& sum_formula(int k);

/// Left fold of telescoping_sum over the family's blocks.
TelescopingTriple compose_recipe(const FamilyRecipe& r, const Registry& registry = Registry::builtin());

/// All recipes with n <= n_max, m <= m_max, g <= g_max, ordered by (k, n, m, g).
std::vector<FamilyRecipe> recipes_in_bounds(long n_max, long m_max, int g_max);

}  // namespace telescope
