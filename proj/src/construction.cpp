#include "telescope/construction.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "telescope/error.hpp"

namespace telescope {

const char* to_string(TorusId id) { return id == TorusId::t1 ? "T1" : "T2"; }
const char* to_string(Curve c) { return c == Curve::m ? "m" : "l"; }

const char* to_string(ExponentConvention c) {
  return c == ExponentConvention::kill_xp ? "kill-xp" : "mu-n-m-p";
}

ExponentConvention parse_exponent_convention(std::string_view text) {
  if (text == "kill-xp") return ExponentConvention::kill_xp;
  if (text == "mu-n-m-p") return ExponentConvention::mu_n_m_p;
  throw Error(ErrorCode::parse, "unknown exponent convention '" + std::string(text) + "'");
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& c : checks) {
    if (c.passed) continue;
    os << (first ? "" : "; ") << c.name << ": " << c.detail;
    first = false;
  }
  return first ? "ok" : os.str();
}

namespace {

using Vec = std::vector<Integer>;

std::string format_vec(const Vec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].get_str();
  return out + ")";
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

Integer content(const Vec& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

// Rank-one span check for T1: both push-offs lie on one line and together
// generate a primitive vector. Returns the primitive generator and the
// multiples of it that the push-offs represent.
struct SummandSpan {
  Vec generator;
  Integer k_m;
  Integer k_l;
};

std::optional<SummandSpan> summand_span(const Vec& vm, const Vec& vl) {
  if (vm.size() != 2 || vl.size() != 2) return std::nullopt;
  if (vm[0] * vl[1] - vm[1] * vl[0] != 0) return std::nullopt;
  const Vec& lead = is_zero(vm) ? vl : vm;
  if (is_zero(lead)) return std::nullopt;
  const Integer c = content(lead);
  SummandSpan out;
  out.generator = {lead[0] / c, lead[1] / c};
  const std::size_t pivot = out.generator[0] != 0 ? 0 : 1;
  out.k_m = vm[pivot] / out.generator[pivot];
  out.k_l = vl[pivot] / out.generator[pivot];
  if (gcd(out.k_m, out.k_l) != 1) return std::nullopt;
  return out;
}

bool meridian_trivial(const Word& meridian, const Presentation& p, bool certified,
                      std::string& detail) {
  if (free_reduce(meridian).empty()) {
    detail = "freely trivial";
    return true;
  }
  if (!certified) {
    detail = "not freely trivial and group not certified abelian";
    return false;
  }
  if (AbelianCoordinates(p).is_trivial(meridian)) {
    detail = "trivial in the certified abelian group";
    return true;
  }
  detail = "nontrivial word " + p.format(meridian);
  return false;
}

Word word_from_vector(const Vec& v) {
  Word out;
  for (std::size_t i = 0; i < v.size(); ++i) out = out * Word::power_of(static_cast<int>(i), v[i].get_si());
  return out;
}

Vec scaled(const Vec& v, const Integer& k) {
  Vec out;
  for (const auto& x : v) out.push_back(x * k);
  return out;
}

Word compose_relator(const TorusData& t, Curve curve, long k, long p, long q) {
  const Curve other = curve == Curve::m ? Curve::l : Curve::m;
  return t.meridian.pow(k) * t.curve(curve).pow(p) * t.curve(other).pow(q);
}

}  // namespace

ValidationReport validate_triple(const TelescopingTriple& t) {
  ValidationReport report;
  const Presentation& p = t.complement;
  const bool certified = is_certifiably_abelian(p);
  const AbelianInvariants inv = abelian_invariants(p);

  report.checks.push_back({"complement certifiably abelian", certified,
                           certified ? "commutator certificate found" : "no certificate"});
  const bool z2 = inv.free_rank == 2 && inv.torsion.empty();
  report.checks.push_back({"complement abelianization Z^2", z2, inv.to_string()});

  for (const TorusData* torus : {&t.t1, &t.t2}) {
    std::string detail;
    const bool ok = meridian_trivial(torus->meridian, p, certified, detail);
    report.checks.push_back({std::string("meridian ") + to_string(torus->id) + " trivial", ok, detail});
  }

  bool t2_ok = false;
  std::string t2_detail;
  bool t1_ok = false;
  std::string t1_detail;
  if (certified && z2) {
    const std::array<Word, 2> pair{t.t2.pushoff_m, t.t2.pushoff_l};
    t2_ok = generates_full_group(pair, p);
    const AbelianCoordinates coords(p);
    t2_detail = "m=" + format_vec(coords.free_part(t.t2.pushoff_m)) +
                " l=" + format_vec(coords.free_part(t.t2.pushoff_l));
    const Vec vm = coords.free_part(t.t1.pushoff_m);
    const Vec vl = coords.free_part(t.t1.pushoff_l);
    t1_ok = summand_span(vm, vl).has_value();
    t1_detail = "m=" + format_vec(vm) + " l=" + format_vec(vl);
  } else {
    t2_detail = t1_detail = "complement is not a certified Z^2";
  }
  report.checks.push_back({"T2 push-offs generate", t2_ok, t2_detail});
  report.checks.push_back({"T1 push-offs span a summand", t1_ok, t1_detail});

  const bool divisible = (t.e + t.sigma) % 4 == 0;
  report.checks.push_back({"e + sigma divisible by 4", divisible,
                           "e=" + std::to_string(t.e) + " sigma=" + std::to_string(t.sigma)});
  report.checks.push_back({"H2 independence (asserted)", t.h2_independent,
                           t.h2_independent ? "asserted" : "not asserted"});
  return report;
}

TelescopingTriple telescoping_sum(const TelescopingTriple& left, const TelescopingTriple& right) {
  for (const TelescopingTriple* t : {&left, &right}) {
    const ValidationReport r = validate_triple(*t);
    if (!r.ok())
      throw Error(ErrorCode::precondition, "cannot sum invalid triple " + t->name + ": " + r.summary());
  }
  const AbelianCoordinates lc(left.complement);
  const AbelianCoordinates rc(right.complement);

  // The gluing identifies pi_1(T2) of `left` (a basis of pi_1(left)) with
  // pi_1(T1) of `right`; it is chosen so the class carrying left's T1
  // summand lands on the T1 class of `right` that maps to a primitive
  // vector. pi_1 of the sum is then pi_1(right).
  const auto left_t1 = summand_span(lc.free_part(left.t1.pushoff_m), lc.free_part(left.t1.pushoff_l));
  const auto right_t1 = summand_span(rc.free_part(right.t1.pushoff_m), rc.free_part(right.t1.pushoff_l));
  if (!left_t1 || !right_t1)
    throw Error(ErrorCode::precondition, "T1 push-offs do not span a summand");

  TelescopingTriple out;
  out.name = left.name + "#" + right.name;
  out.e = left.e + right.e;
  out.sigma = left.sigma + right.sigma;
  out.complement = Presentation::parse({"t1", "t2"}, {"[t1,t2]"});
  out.t1 = TorusData{TorusId::t1, Word{}, word_from_vector(scaled(right_t1->generator, left_t1->k_m)),
                     word_from_vector(scaled(right_t1->generator, left_t1->k_l))};
  out.t2 = TorusData{TorusId::t2, Word{}, word_from_vector(rc.free_part(right.t2.pushoff_m)),
                     word_from_vector(rc.free_part(right.t2.pushoff_l))};
  out.minimal = left.minimal && right.minimal;
  out.h2_independent = left.h2_independent && right.h2_independent;
  out.spin = left.spin && right.spin;
  out.provenance = left.provenance;
  out.provenance.insert(out.provenance.end(), right.provenance.begin(), right.provenance.end());
  ConstructionStep step;
  step.kind = ConstructionStep::Kind::sum;
  out.provenance.push_back(step);
  return out;
}

bool ManifoldState::has_torus(TorusId id) const {
  return std::any_of(tori.begin(), tori.end(), [id](const TorusData& t) { return t.id == id; });
}

const TorusData& ManifoldState::torus(TorusId id) const {
  for (const auto& t : tori)
    if (t.id == id) return t;
  throw Error(ErrorCode::consumed_torus, std::string("torus ") + to_string(id) + " already consumed");
}

ManifoldState as_state(const TelescopingTriple& t) {
  ManifoldState s;
  s.name = t.name;
  s.e = t.e;
  s.sigma = t.sigma;
  s.pi1 = t.complement;
  s.tori = {t.t1, t.t2};
  s.symplectic = true;
  s.minimal = t.minimal;
  s.spin = t.spin;
  s.provenance = t.provenance;
  return s;
}

ManifoldState luttinger_surgery(const ManifoldState& x, const SurgerySpec& s) {
  if (s.k == 0 && s.p == 0 && s.q == 0)
    throw Error(ErrorCode::degenerate_surgery, "surgery with k = p = q = 0");
  const TorusData torus = x.torus(s.torus);
  ManifoldState out = x;
  out.pi1 = adjoin_relator(x.pi1, compose_relator(torus, s.curve, s.k, s.p, s.q));
  std::erase_if(out.tori, [&](const TorusData& t) { return t.id == s.torus; });
  out.symplectic = x.symplectic && (s.k == 1 || s.k == -1);
  ConstructionStep step;
  step.kind = ConstructionStep::Kind::surgery;
  step.surgery = s;
  out.provenance.push_back(step);
  return out;
}

ManifoldState luttinger_surgery(const TelescopingTriple& t, const SurgerySpec& s) {
  return luttinger_surgery(as_state(t), s);
}

CurvePair generating_curves(const TelescopingTriple& t, std::span<const CurvePair> preference) {
  for (const CurvePair& pair : preference) {
    const std::array<Word, 2> words{t.t1.curve(pair.t1), t.t2.curve(pair.t2)};
    if (generates_full_group(words, t.complement)) return pair;
  }
  throw Error(ErrorCode::precondition, "no pair of T1/T2 push-offs generates pi_1 of " + t.name);
}

CurvePair quotient_pipeline_curves(const TelescopingTriple& t) {
  static constexpr std::array<CurvePair, 4> order{{{Curve::l, Curve::m},
                                                   {Curve::m, Curve::l},
                                                   {Curve::m, Curve::m},
                                                   {Curve::l, Curve::l}}};
  return generating_curves(t, order);
}

CurvePair botany_curves(const TelescopingTriple& t) {
  static constexpr std::array<CurvePair, 4> order{{{Curve::m, Curve::l},
                                                   {Curve::l, Curve::m},
                                                   {Curve::m, Curve::m},
                                                   {Curve::l, Curve::l}}};
  return generating_curves(t, order);
}

ManifoldState botany_family_member(const ManifoldState& x0, long n, long p,
                                   ExponentConvention convention) {
  if (n < 0) throw Error(ErrorCode::precondition, "botany index n must be >= 0");
  if (p < 2) throw Error(ErrorCode::precondition, "botany requires p >= 2");
  if (x0.provenance.empty() || x0.provenance.back().kind != ConstructionStep::Kind::surgery ||
      x0.provenance.back().surgery.torus != TorusId::t2 || x0.provenance.back().surgery.p != p ||
      x0.tori.size() != 1 || !x0.has_torus(TorusId::t1))
    throw Error(ErrorCode::precondition,
                "botany base must come from a single 1/p surgery on T2 with T1 remaining");
  const AbelianInvariants expected{1, {Integer(p)}};
  if (abelian_invariants(x0.pi1) != expected)
    throw Error(ErrorCode::precondition, "botany base must have pi_1 = Z + Z_" + std::to_string(p));

  // The surgered curve must carry the free generator x of pi_1(x0).
  const TorusData& t1 = x0.torus(TorusId::t1);
  const AbelianCoordinates coords(x0.pi1);
  std::optional<Curve> curve;
  for (Curve c : {Curve::m, Curve::l}) {
    const auto v = coords.free_part(t1.curve(c));
    if (v.size() == 1 && abs(v[0]) == 1) {
      curve = c;
      break;
    }
  }
  if (!curve)
    throw Error(ErrorCode::precondition, "no T1 push-off generates the free part of pi_1(x0)");

  const Word relator = convention == ExponentConvention::kill_xp
                           ? t1.curve(*curve).pow(p)
                           : t1.meridian.pow(n) * t1.curve(*curve).pow(p);
  ManifoldState out = x0;
  out.pi1 = adjoin_relator(x0.pi1, relator);
  out.tori.clear();
  out.symplectic = x0.symplectic && n == 1;
  ConstructionStep step;
  step.kind = ConstructionStep::Kind::botany;
  step.botany_n = n;
  step.botany_p = p;
  step.convention = convention;
  step.surgery = SurgerySpec{TorusId::t1, *curve, n, p, 0};
  out.provenance.push_back(step);
  return out;
}

}  // namespace telescope
