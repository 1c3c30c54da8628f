#pragma once

#include <optional>
#include <string>
#include <vector>

#include "telescope/presentation.hpp"

namespace telescope {

enum class TorusId { t1, t2 };
enum class Curve { m, l };

const char* to_string(TorusId id);
const char* to_string(Curve c);

/// Meridian and the two Lagrangian push-offs of a torus, as words in the
/// complement's fundamental group.
struct TorusData {
  TorusId id = TorusId::t1;
  Word meridian;
  Word pushoff_m;
  Word pushoff_l;

  const Word& curve(Curve c) const { return c == Curve::m ? pushoff_m : pushoff_l; }
  friend bool operator==(const TorusData&, const TorusData&) = default;
};

/// Relator exponents for mu^k * curve^p * other^q.
struct SurgerySpec {
  TorusId torus = TorusId::t1;
  Curve curve = Curve::l;
  long k = 1;
  long p = 1;
  long q = 0;
  friend bool operator==(const SurgerySpec&, const SurgerySpec&) = default;
};

/// Which relator the n/p torus surgery of the botany family adjoins.
enum class ExponentConvention {
  kill_xp,   // curve^p: the generator's p-th power is killed directly
  mu_n_m_p,  // mu^n * curve^p: the general surgery relator with k = n
};

const char* to_string(ExponentConvention c);
ExponentConvention parse_exponent_convention(std::string_view text);

/// One replayable construction step. Steps form a postfix program:
/// load_block pushes, sum pops two and pushes one, surgery and botany
/// rewrite the top.
struct ConstructionStep {
  enum class Kind { load_block, sum, surgery, botany };

  Kind kind = Kind::load_block;
  std::string block;
  std::optional<int> g;
  SurgerySpec surgery;
  long botany_n = 0;
  long botany_p = 0;
  ExponentConvention convention = ExponentConvention::kill_xp;

  friend bool operator==(const ConstructionStep&, const ConstructionStep&) = default;
};

using Provenance = std::vector<ConstructionStep>;

struct TelescopingTriple {
  std::string name;
  long e = 0;
  long sigma = 0;
  Presentation complement;
  TorusData t1{TorusId::t1, {}, {}, {}};
  TorusData t2{TorusId::t2, {}, {}, {}};
  bool minimal = true;
  bool h2_independent = true;  // asserted metadata, never computed
  bool spin = false;
  Provenance provenance;

  friend bool operator==(const TelescopingTriple&, const TelescopingTriple&) = default;
};

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;

  bool ok() const;
  std::string summary() const;
};

ValidationReport validate_triple(const TelescopingTriple& t);

/// Symplectic sum along outer T2 of `left` and T1 of `right`. The result
/// is written on a fresh presentation <t1, t2 | [t1, t2]>.
TelescopingTriple telescoping_sum(const TelescopingTriple& left, const TelescopingTriple& right);

struct ManifoldState {
  std::string name;
  long e = 0;
  long sigma = 0;
  Presentation pi1;
  std::vector<TorusData> tori;  // remaining surgery targets
  bool symplectic = true;
  bool minimal = true;
  bool spin = false;
  Provenance provenance;

  bool has_torus(TorusId id) const;
  const TorusData& torus(TorusId id) const;
  friend bool operator==(const ManifoldState&, const ManifoldState&) = default;
};

ManifoldState as_state(const TelescopingTriple& t);

/// Quotient by mu^k * curve^p * other^q; consumes the torus. Euler
/// characteristic and signature never change.
ManifoldState luttinger_surgery(const ManifoldState& x, const SurgerySpec& s);
ManifoldState luttinger_surgery(const TelescopingTriple& t, const SurgerySpec& s);

/// Choice of one T1 curve and one T2 curve whose classes form a basis of
/// pi_1 of the complement.
struct CurvePair {
  Curve t1;
  Curve t2;
};

/// Tries candidates in the given order and returns the first generating
/// pair. Throws Error(precondition) if none generates.
CurvePair generating_curves(const TelescopingTriple& t, std::span<const CurvePair> preference);

/// Preference (l_T1, m_T2) first, as in the two-surgery Z_q + Z_p pipeline.
CurvePair quotient_pipeline_curves(const TelescopingTriple& t);
/// Preference (m_T1, l_T2) first, as in the botany family construction.
CurvePair botany_curves(const TelescopingTriple& t);

/// The member X_n of the botany family built on x0 (a single +1/p surgery
/// on T2). Adjoins the relator selected by the convention along the T1
/// curve that generates the free part of pi_1(x0).
ManifoldState botany_family_member(const ManifoldState& x0, long n, long p,
                                   ExponentConvention convention = ExponentConvention::kill_xp);

}  // namespace telescope
