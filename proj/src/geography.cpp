#include "telescope/geography.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>
#include <tuple>

#include "telescope/error.hpp"

namespace telescope {

namespace {

// (c, chi) of each item.
const std::array<PointFormula, kFamilyCount> kPointFormulas{{
    {{7, 0, 0, 0, 0}, {1, 0, 0, 0, 0}},
    {{5, 0, 0, 0, 0}, {1, 0, 0, 0, 0}},
    {{4, 0, 0, 0, 0}, {1, 0, 0, 0, 0}},
    {{2, 0, 0, 0, 0}, {1, 0, 0, 0, 0}},
    {{6, 8, 0, 0, 0}, {1, 1, 0, 0, 0}},
    {{7, 0, 6, 8, 0}, {1, 0, 1, 1, 0}},
    {{7, 0, 5, 0, 0}, {1, 0, 1, 0, 0}},
    {{7, 0, 4, 0, 0}, {1, 0, 1, 0, 0}},
    {{7, 0, 2, 0, 0}, {1, 0, 1, 0, 0}},
    {{6, 8, 5, 0, 0}, {1, 1, 1, 0, 0}},
    {{6, 8, 4, 0, 0}, {1, 1, 1, 0, 0}},
    {{6, 8, 2, 0, 0}, {1, 1, 1, 0, 0}},
    {{5, 0, 4, 0, 0}, {1, 0, 1, 0, 0}},
    {{5, 0, 2, 0, 0}, {1, 0, 1, 0, 0}},
    {{4, 0, 2, 0, 0}, {1, 0, 1, 0, 0}},
}};

// (b2+, b2-) of the prototypes with pi_1 = Z_p + Z_p.
const std::array<BettiFormula, kFamilyCount> kBettiFormulas{{
    {{2, 0, 0, 0, -1}, {3, 0, 0, 0, -1}},
    {{2, 0, 0, 0, -1}, {5, 0, 0, 0, -1}},
    {{2, 0, 0, 0, -1}, {6, 0, 0, 0, -1}},
    {{2, 0, 0, 0, -1}, {8, 0, 0, 0, -1}},
    {{2, 2, 0, 0, -1}, {4, 2, 0, 0, -1}},
    {{2, 0, 2, 2, -1}, {3, 0, 4, 2, -1}},
    {{2, 0, 2, 0, -1}, {3, 0, 5, 0, -1}},
    {{2, 0, 2, 0, -1}, {3, 0, 6, 0, -1}},
    {{2, 0, 2, 0, -1}, {3, 0, 8, 0, -1}},
    {{2, 2, 2, 0, -1}, {4, 2, 5, 0, -1}},
    {{2, 2, 2, 0, -1}, {4, 2, 6, 0, -1}},
    {{2, 2, 2, 0, -1}, {4, 2, 8, 0, -1}},
    {{2, 0, 2, 0, -1}, {5, 0, 6, 0, -1}},
    {{2, 0, 2, 0, -1}, {5, 0, 8, 0, -1}},
    {{2, 0, 2, 0, -1}, {6, 0, 8, 0, -1}},
}};

auto sort_key(const GeographyPoint& p) {
  return std::make_tuple(p.chi, p.c, p.family.k, p.family.n, p.family.m.value_or(0),
                         p.family.g.value_or(-1), static_cast<int>(p.group));
}

}  // namespace

CharNumbers char_from_es(long e, long sigma) {
  if ((e + sigma) % 4 != 0)
    throw Error(ErrorCode::non_integral_chi, "e + sigma = " + std::to_string(e + sigma) +
                                                 " is not divisible by 4");
  return CharNumbers{e, sigma, 2 * e + 3 * sigma, (e + sigma) / 4};
}

EulerSignature es_from_char(long c, long chi) { return {12 * chi - c, c - 8 * chi}; }

BettiPair betti_from_char(const CharNumbers& cn, long b1) {
  if (b1 < 0) throw Error(ErrorCode::inconsistent_input, "b1 must be nonnegative");
  const long b2 = cn.e - 2 + 2 * b1;
  if ((b2 + cn.sigma) % 2 != 0)
    throw Error(ErrorCode::inconsistent_input, "b2 and sigma have different parity");
  BettiPair out{b1, (b2 + cn.sigma) / 2, (b2 - cn.sigma) / 2};
  if (out.b2_plus < 0 || out.b2_minus < 0)
    throw Error(ErrorCode::inconsistent_input,
                "negative b2 split (" + std::to_string(out.b2_plus) + ", " + std::to_string(out.b2_minus) + ")");
  return out;
}

const char* to_string(GroupTag tag) {
  switch (tag) {
    case GroupTag::z_z: return "Z+Z";
    case GroupTag::z_zp: return "Z+Zp";
    case GroupTag::zq_zp: return "Zq+Zp";
    case GroupTag::zp_zp: return "Zp+Zp";
  }
  return "?";
}

Presentation standard_presentation(GroupTag tag) {
  switch (tag) {
    case GroupTag::z_z: return Presentation::parse({"x", "y"}, {"[x,y]"});
    case GroupTag::z_zp: return Presentation::parse({"x", "y"}, {"[x,y]", "y^3"});
    case GroupTag::zq_zp: return Presentation::parse({"x", "y"}, {"[x,y]", "x^3", "y^3"});
    case GroupTag::zp_zp: return Presentation::parse({"x", "y"}, {"x^3", "y^3", "[x,y]"});
  }
  return {};
}

long first_betti(GroupTag tag) {
  return static_cast<long>(abelian_invariants(standard_presentation(tag)).free_rank);
}

const PointFormula& theorem1_formula(int k) {
  family_shape(k);
  return kPointFormulas[static_cast<std::size_t>(k - 1)];
}

const BettiFormula& prop14_formula(int k) {
  family_shape(k);
  return kBettiFormulas[static_cast<std::size_t>(k - 1)];
}

GeographyPoint theorem1_point(const FamilyRecipe& r, GroupTag group) {
  r.validate();
  const PointFormula& f = theorem1_formula(r.k);
  return GeographyPoint{f.c.evaluate(r), f.chi.evaluate(r), r, group};
}

BettiPair prop14_betti(const FamilyRecipe& r) {
  r.validate();
  const BettiFormula& f = prop14_formula(r.k);
  return BettiPair{0, f.b2_plus.evaluate(r), f.b2_minus.evaluate(r)};
}

std::string CrossCheckReport::describe() const {
  std::ostringstream os;
  os << recipe.label() << " e=" << composed.e << " sigma=" << composed.sigma << " (c,chi)=("
     << composed.c1sq << "," << composed.chi_h << ") tabulated=(" << point.c << "," << point.chi
     << ") betti=(" << derived.b2_plus << "," << derived.b2_minus << ") tabulated=("
     << tabulated.b2_plus << "," << tabulated.b2_minus << ")";
  if (!sum_formula_ok) os << " [sum formula mismatch]";
  if (!theorem1_ok) os << " [point mismatch]";
  if (!prop14_ok) os << " [betti mismatch]";
  if (!negative_signature) os << " [signature not negative]";
  return os.str();
}

CrossCheckReport cross_check(const FamilyRecipe& r, const TelescopingTriple& composed) {
  CrossCheckReport rep;
  rep.recipe = r;
  rep.composed = char_from_es(composed.e, composed.sigma);
  rep.point = theorem1_point(r);
  rep.tabulated = prop14_betti(r);
  const SumFormula& sums = sum_formula(r.k);
  rep.sum_formula_ok = sums.e.evaluate(r) == composed.e && sums.sigma.evaluate(r) == composed.sigma;
  rep.theorem1_ok = rep.composed.c1sq == rep.point.c && rep.composed.chi_h == rep.point.chi;
  const EulerSignature es = es_from_char(rep.point.c, rep.point.chi);
  try {
    rep.derived = betti_from_char(char_from_es(es.e, es.sigma), 0);
    rep.prop14_ok = rep.derived == rep.tabulated;
  } catch (const Error&) {
    rep.prop14_ok = false;
  }
  rep.negative_signature = es.sigma < 0 && composed.sigma < 0;
  return rep;
}

CrossCheckReport cross_check(const FamilyRecipe& r, const Registry& registry) {
  return cross_check(r, compose_recipe(r, registry));
}

std::vector<GeographyPoint> all_realizations(long n_max, long m_max, int g_max) {
  std::vector<GeographyPoint> out;
  for (const FamilyRecipe& r : recipes_in_bounds(n_max, m_max, g_max))
    for (GroupTag tag : kAllGroupTags) out.push_back(theorem1_point(r, tag));
  std::sort(out.begin(), out.end(),
            [](const GeographyPoint& a, const GeographyPoint& b) { return sort_key(a) < sort_key(b); });
  return out;
}

std::vector<GeographyPoint> deduplicate(std::vector<GeographyPoint> points) {
  std::sort(points.begin(), points.end(),
            [](const GeographyPoint& a, const GeographyPoint& b) { return sort_key(a) < sort_key(b); });
  std::vector<GeographyPoint> out;
  std::set<std::tuple<long, long, int>> seen;
  for (auto& p : points) {
    if (!seen.emplace(p.c, p.chi, static_cast<int>(p.group)).second) continue;
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<GeographyPoint> enumerate_points(long n_max, long m_max, int g_max) {
  return deduplicate(all_realizations(n_max, m_max, g_max));
}

}  // namespace telescope
