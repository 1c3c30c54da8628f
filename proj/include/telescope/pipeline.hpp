#pragma once

#include "telescope/construction.hpp"

namespace telescope {

/// The two-surgery route from a telescoping triple to Z + Z_p and Z_q + Z_p.
struct QuotientPipeline {
  CurvePair curves;
  ManifoldState after_t1;  // +1/p on T1
  ManifoldState after_t2;  // then +1/q on T2
};

ManifoldState surgery_on_t1(const TelescopingTriple& t, const CurvePair& curves, long p);
ManifoldState surgery_on_t2(const ManifoldState& y1, const CurvePair& curves, long q);
QuotientPipeline run_quotient_pipeline(const TelescopingTriple& t, long p, long q);

/// X_0 of the botany family: +1/p surgery on T2 along the curve paired with
/// the generating T1 curve.
ManifoldState botany_base(const TelescopingTriple& t, long p);

}  // namespace telescope
