#pragma once

#include <string>
#include <vector>

#include "telescope/families.hpp"
#include "telescope/presentation.hpp"

namespace telescope {

/// e, sigma and the geography coordinates c1^2 = 2e + 3 sigma, chi_h = (e + sigma) / 4.
struct CharNumbers {
  long e = 0;
  long sigma = 0;
  long c1sq = 0;
  long chi_h = 0;
  friend bool operator==(const CharNumbers&, const CharNumbers&) = default;
};

struct BettiPair {
  long b1 = 0;
  long b2_plus = 0;
  long b2_minus = 0;
  long b2() const { return b2_plus + b2_minus; }
  friend bool operator==(const BettiPair&, const BettiPair&) = default;
};

/// Throws Error(non_integral_chi) when e + sigma is not divisible by 4.
CharNumbers char_from_es(long e, long sigma);

struct EulerSignature {
  long e = 0;
  long sigma = 0;
  friend bool operator==(const EulerSignature&, const EulerSignature&) = default;
};
EulerSignature es_from_char(long c, long chi);

/// b2 = e - 2 + 2 b1 split by the signature. Throws Error(inconsistent_input)
/// if the split is negative or not integral.
BettiPair betti_from_char(const CharNumbers& cn, long b1);

enum class GroupTag { z_z, z_zp, zq_zp, zp_zp };
inline constexpr GroupTag kAllGroupTags[] = {GroupTag::z_z, GroupTag::z_zp, GroupTag::zq_zp, GroupTag::zp_zp};

const char* to_string(GroupTag tag);
/// A representative presentation (p = q = 3) of each tagged group.
Presentation standard_presentation(GroupTag tag);
/// Free rank of the abelianization of the tagged group.
long first_betti(GroupTag tag);

struct GeographyPoint {
  long c = 0;
  long chi = 0;
  FamilyRecipe family;
  GroupTag group = GroupTag::z_z;
};

struct PointFormula {
  LinearForm c;
  LinearForm chi;
};
struct BettiFormula {
  LinearForm b2_plus;
  LinearForm b2_minus;
};
const PointFormula& theorem1_formula(int k);
const BettiFormula& prop14_formula(int k);

GeographyPoint theorem1_point(const FamilyRecipe& r, GroupTag group = GroupTag::zq_zp);
/// Betti numbers of the finite-pi_1 members (b1 = 0).
BettiPair prop14_betti(const FamilyRecipe& r);

struct CrossCheckReport {
  FamilyRecipe recipe;
  CharNumbers composed;
  GeographyPoint point;
  BettiPair derived;
  BettiPair tabulated;
  bool sum_formula_ok = false;    // composed (e, sigma) equal the closed-form sums
  bool theorem1_ok = false;       // composed (c, chi) equal the tabulated point
  bool prop14_ok = false;         // Betti numbers from the point equal the tabulated ones
  bool negative_signature = false;

  bool ok() const { return sum_formula_ok && theorem1_ok && prop14_ok && negative_signature; }
  std::string describe() const;
};

CrossCheckReport cross_check(const FamilyRecipe& r, const Registry& registry = Registry::builtin());
/// Same checks against an already composed triple.
CrossCheckReport cross_check(const FamilyRecipe& r, const TelescopingTriple& composed);

/// Every (recipe, group) point within bounds, sorted by (chi, c, k, n, m, g, group).
std::vector<GeographyPoint> all_realizations(long n_max, long m_max, int g_max);
/// all_realizations deduplicated by (c, chi, group), keeping the first in sort order.
std::vector<GeographyPoint> enumerate_points(long n_max, long m_max, int g_max);
std::vector<GeographyPoint> deduplicate(std::vector<GeographyPoint> points);

}  // namespace telescope
