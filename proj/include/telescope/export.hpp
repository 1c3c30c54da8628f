#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "telescope/geography.hpp"

namespace telescope {

/// One CSV row: a geography point with the group-dependent Betti numbers.
struct ExportRow {
  GeographyPoint point;
  long e = 0;
  long sigma = 0;
  BettiPair betti;
  std::string hk_ok;  // "true"/"false" for Zp+Zp, "na" otherwise
  bool symplectic = true;
  bool minimal = true;
};

inline constexpr const char* kCsvHeader =
    "family,k,n,m,g,e,sigma,c1sq,chi_h,group,b1,b2plus,b2minus,hk_ok,symplectic,minimal";

std::vector<ExportRow> export_rows(const std::vector<GeographyPoint>& points,
                                   const Registry& registry = Registry::builtin());

void write_csv(std::ostream& os, const std::vector<ExportRow>& rows);
/// Scatter of the distinct (chi_h, c1^2) points with reference lines c = 8 chi and c = 12 chi.
void write_svg(std::ostream& os, const std::vector<ExportRow>& rows);

}  // namespace telescope
