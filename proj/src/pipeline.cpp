#include "telescope/pipeline.hpp"

namespace telescope {

ManifoldState surgery_on_t1(const TelescopingTriple& t, const CurvePair& curves, long p) {
  return luttinger_surgery(t, SurgerySpec{TorusId::t1, curves.t1, 1, p, 0});
}

ManifoldState surgery_on_t2(const ManifoldState& y1, const CurvePair& curves, long q) {
  return luttinger_surgery(y1, SurgerySpec{TorusId::t2, curves.t2, 1, q, 0});
}

QuotientPipeline run_quotient_pipeline(const TelescopingTriple& t, long p, long q) {
  QuotientPipeline out;
  out.curves = quotient_pipeline_curves(t);
  out.after_t1 = surgery_on_t1(t, out.curves, p);
  out.after_t2 = surgery_on_t2(out.after_t1, out.curves, q);
  return out;
}

ManifoldState botany_base(const TelescopingTriple& t, long p) {
  const CurvePair curves = botany_curves(t);
  return luttinger_surgery(t, SurgerySpec{TorusId::t2, curves.t2, 1, p, 0});
}

}  // namespace telescope
