#include "telescope/export.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <utility>

#include "telescope/homeo.hpp"

namespace telescope {

namespace {

bool recipe_minimal(const FamilyRecipe& r, const Registry& registry) {
  const FamilyShape& shape = family_shape(r.k);
  bool minimal = registry.record(std::string(1, shape.first)).minimal;
  if (shape.two_parameter()) minimal = minimal && registry.record(std::string(1, shape.second)).minimal;
  return minimal;
}

// Fixed-point hundredths, so the SVG text never depends on float formatting.
std::string fixed2(long hundredths) {
  const bool negative = hundredths < 0;
  const long v = negative ? -hundredths : hundredths;
  std::string frac = std::to_string(v % 100);
  if (frac.size() < 2) frac = "0" + frac;
  return (negative ? "-" : "") + std::to_string(v / 100) + "." + frac;
}

}  // namespace

std::vector<ExportRow> export_rows(const std::vector<GeographyPoint>& points, const Registry& registry) {
  std::vector<ExportRow> rows;
  rows.reserve(points.size());
  for (const auto& pt : points) {
    ExportRow row;
    row.point = pt;
    const EulerSignature es = es_from_char(pt.c, pt.chi);
    row.e = es.e;
    row.sigma = es.sigma;
    row.betti = betti_from_char(char_from_es(es.e, es.sigma), first_betti(pt.group));
    if (pt.group == GroupTag::zp_zp)
      row.hk_ok = hk_applicable(row.betti.b2(), row.sigma, false, FiniteGroupSpec{}.d_pi) ? "true" : "false";
    else
      row.hk_ok = "na";
    row.symplectic = true;
    row.minimal = recipe_minimal(pt.family, registry);
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_csv(std::ostream& os, const std::vector<ExportRow>& rows) {
  os << kCsvHeader << '\n';
  for (const auto& r : rows) {
    const FamilyRecipe& f = r.point.family;
    os << family_shape(f.k).label << ',' << f.k << ',' << f.n << ','
       << (f.m ? std::to_string(*f.m) : "") << ',' << (f.g ? std::to_string(*f.g) : "") << ','
       << r.e << ',' << r.sigma << ',' << r.point.c << ',' << r.point.chi << ','
       << to_string(r.point.group) << ',' << r.betti.b1 << ',' << r.betti.b2_plus << ','
       << r.betti.b2_minus << ',' << r.hk_ok << ',' << (r.symplectic ? "true" : "false") << ','
       << (r.minimal ? "true" : "false") << '\n';
  }
}

void write_svg(std::ostream& os, const std::vector<ExportRow>& rows) {
  constexpr long kWidth = 800;
  constexpr long kHeight = 600;
  constexpr long kMargin = 60;
  constexpr long kPlotW = kWidth - 2 * kMargin;
  constexpr long kPlotH = kHeight - 2 * kMargin;

  std::set<std::pair<long, long>> points;  // (chi, c)
  long chi_max = 1;
  for (const auto& r : rows) {
    points.emplace(r.point.chi, r.point.c);
    chi_max = std::max(chi_max, r.point.chi);
  }
  const long c_max = 12 * chi_max;

  auto px = [&](long chi) { return kMargin * 100 + chi * kPlotW * 100 / chi_max; };
  auto py = [&](long c) { return (kHeight - kMargin) * 100 - c * kPlotH * 100 / c_max; };

  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n"
     << "<text x=\"" << kWidth / 2 << "\" y=\"30\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        "font-size=\"16\">Realized (chi_h, c1^2) points: "
     << points.size() << "</text>\n";
  // Axes.
  os << "<line x1=\"" << kMargin << "\" y1=\"" << kHeight - kMargin << "\" x2=\"" << kWidth - kMargin
     << "\" y2=\"" << kHeight - kMargin << "\" stroke=\"black\"/>\n"
     << "<line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\"" << kMargin << "\" y2=\""
     << kHeight - kMargin << "\" stroke=\"black\"/>\n"
     << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 15
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">chi_h</text>\n"
     << "<text x=\"15\" y=\"" << kHeight / 2 << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        "font-size=\"12\" transform=\"rotate(-90 15 "
     << kHeight / 2 << ")\">c1^2</text>\n";
  for (long i = 0; i <= 4; ++i) {
    const long chi = chi_max * i / 4;
    const long c = c_max * i / 4;
    os << "<text x=\"" << fixed2(px(chi)) << "\" y=\"" << kHeight - kMargin + 16
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">" << chi << "</text>\n"
       << "<text x=\"" << kMargin - 6 << "\" y=\"" << fixed2(py(c) + 300)
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">" << c << "</text>\n";
  }
  // Reference lines c = 8 chi and c = 12 chi.
  for (const auto& [slope, color] : {std::pair<long, const char*>{8, "#1f77b4"}, {12, "#d62728"}}) {
    os << "<line x1=\"" << fixed2(px(0)) << "\" y1=\"" << fixed2(py(0)) << "\" x2=\"" << fixed2(px(chi_max))
       << "\" y2=\"" << fixed2(py(slope * chi_max)) << "\" stroke=\"" << color
       << "\" stroke-dasharray=\"4 3\"/>\n"
       << "<text x=\"" << fixed2(px(chi_max) - 400) << "\" y=\"" << fixed2(py(slope * chi_max) - 400)
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\" fill=\"" << color
       << "\">c = " << slope << " chi</text>\n";
  }
  for (const auto& [chi, c] : points)
    os << "<circle cx=\"" << fixed2(px(chi)) << "\" cy=\"" << fixed2(py(c)) << "\" r=\"2\" fill=\"#333333\"/>\n";
  os << "</svg>\n";
}

}  // namespace telescope
