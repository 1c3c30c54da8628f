#include "telescope/families.hpp"

#include "telescope/error.hpp"

namespace telescope {

namespace {

constexpr std::array<FamilyShape, kFamilyCount> kShapes{{
    {1, 'A', '\0', "A_n"},
    {2, 'C', '\0', "C_n"},
    {3, 'D', '\0', "D_n"},
    {4, 'F', '\0', "F_n"},
    {5, 'B', '\0', "#n(B_g)"},
    {6, 'A', 'B', "A_n#m(B_g)"},
    {7, 'A', 'C', "A_n#C_m"},
    {8, 'A', 'D', "A_n#D_m"},
    {9, 'A', 'F', "A_n#F_m"},
    {10, 'B', 'C', "#n(B_g)#C_m"},
    {11, 'B', 'D', "#n(B_g)#D_m"},
    {12, 'B', 'F', "#n(B_g)#F_m"},
    {13, 'C', 'D', "C_n#D_m"},
    {14, 'C', 'F', "C_n#F_m"},
    {15, 'D', 'F', "D_n#F_m"},
}};

// e and sigma of the composed triples, item by item.
const std::array<SumFormula, kFamilyCount> kSums{{
    {{5, 0, 0, 0, 0}, {-1, 0, 0, 0, 0}},
    {{7, 0, 0, 0, 0}, {-3, 0, 0, 0, 0}},
    {{8, 0, 0, 0, 0}, {-4, 0, 0, 0, 0}},
    {{10, 0, 0, 0, 0}, {-6, 0, 0, 0, 0}},
    {{6, 4, 0, 0, 0}, {-2, 0, 0, 0, 0}},
    {{5, 0, 6, 4, 0}, {-1, 0, -2, 0, 0}},
    {{5, 0, 7, 0, 0}, {-1, 0, -3, 0, 0}},
    {{5, 0, 8, 0, 0}, {-1, 0, -4, 0, 0}},
    {{5, 0, 10, 0, 0}, {-1, 0, -6, 0, 0}},
    {{6, 4, 7, 0, 0}, {-2, 0, -3, 0, 0}},
    {{6, 4, 8, 0, 0}, {-2, 0, -4, 0, 0}},
    {{6, 4, 10, 0, 0}, {-2, 0, -6, 0, 0}},
    {{7, 0, 8, 0, 0}, {-3, 0, -4, 0, 0}},
    {{7, 0, 10, 0, 0}, {-3, 0, -6, 0, 0}},
    {{8, 0, 10, 0, 0}, {-4, 0, -6, 0, 0}},
}};

void check_family(int k) {
  if (k < 1 || k > kFamilyCount)
    throw Error(ErrorCode::invalid_recipe, "family index " + std::to_string(k) + " outside 1..15");
}

}  // namespace

const FamilyShape& family_shape(int k) {
  check_family(k);
  return kShapes[static_cast<std::size_t>(k - 1)];
}

const SumFormula& sum_formula(int k) {
  check_family(k);
  return kSums[static_cast<std::size_t>(k - 1)];
}

void FamilyRecipe::validate() const {
  const FamilyShape& shape = family_shape(k);
  if (n < 1) throw Error(ErrorCode::invalid_recipe, "n must be >= 1");
  if (shape.two_parameter() && !m)
    throw Error(ErrorCode::invalid_recipe, std::string("family ") + shape.label + " needs m");
  if (!shape.two_parameter() && m)
    throw Error(ErrorCode::invalid_recipe, std::string("family ") + shape.label + " takes no m");
  if (m && *m < 1) throw Error(ErrorCode::invalid_recipe, "m must be >= 1");
  if (shape.uses_genus() && !g)
    throw Error(ErrorCode::invalid_recipe, std::string("family ") + shape.label + " needs g");
  if (!shape.uses_genus() && g)
    throw Error(ErrorCode::invalid_recipe, std::string("family ") + shape.label + " takes no g");
  if (g && *g < 0) throw Error(ErrorCode::invalid_recipe, "g must be >= 0");
}

std::string FamilyRecipe::label() const {
  std::string out = family_shape(k).label;
  out += "[n=" + std::to_string(n);
  if (m) out += ",m=" + std::to_string(*m);
  if (g) out += ",g=" + std::to_string(*g);
  return out + "]";
}

long LinearForm::evaluate(const FamilyRecipe& r) const {
  const long g = r.g.value_or(0);
  return (n + n_g * g) * r.n + (m + m_g * g) * r.m.value_or(0) + constant;
}

TelescopingTriple compose_recipe(const FamilyRecipe& r, const Registry& registry) {
  r.validate();
  const FamilyShape& shape = family_shape(r.k);
  auto block = [&](char name) {
    const std::optional<int> g = name == 'B' ? r.g : std::nullopt;
    return registry.load_block(std::string(1, name), g);
  };
  const TelescopingTriple first = block(shape.first);
  TelescopingTriple acc = first;
  for (long i = 1; i < r.n; ++i) acc = telescoping_sum(acc, first);
  if (shape.two_parameter()) {
    const TelescopingTriple second = block(shape.second);
    for (long i = 0; i < *r.m; ++i) acc = telescoping_sum(acc, second);
  }
  return acc;
}

std::vector<FamilyRecipe> recipes_in_bounds(long n_max, long m_max, int g_max) {
  std::vector<FamilyRecipe> out;
  for (int k = 1; k <= kFamilyCount; ++k) {
    const FamilyShape& shape = family_shape(k);
    const int g_top = shape.uses_genus() ? g_max : 0;
    for (long n = 1; n <= n_max; ++n) {
      const long m_top = shape.two_parameter() ? m_max : 1;
      for (long m = 1; m <= m_top; ++m)
        for (int g = 0; g <= g_top; ++g) {
          FamilyRecipe r{k, n, std::nullopt, std::nullopt};
          if (shape.two_parameter()) r.m = m;
          if (shape.uses_genus()) r.g = g;
          out.push_back(r);
        }
    }
  }
  return out;
}

}  // namespace telescope
