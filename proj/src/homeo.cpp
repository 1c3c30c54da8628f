#include "telescope/homeo.hpp"

#include <cstdlib>

#include "telescope/error.hpp"

namespace telescope {

bool is_odd_prime(long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

FiniteGroupSpec FiniteGroupSpec::zp_zp(long p) {
  if (!is_odd_prime(p)) throw Error(ErrorCode::precondition, std::to_string(p) + " is not an odd prime");
  return FiniteGroupSpec{p, 1};
}

Presentation FiniteGroupSpec::standard_presentation() const {
  const std::string e = std::to_string(p);
  return Presentation::parse({"x", "y"}, {"x^" + e, "y^" + e, "[x,y]"});
}

long presentation_euler_char(const Presentation& p) {
  return 1 - static_cast<long>(p.generator_count()) + static_cast<long>(p.relators().size());
}

long d_pi_upper_bound(const Presentation& p) { return presentation_euler_char(p) - 1; }

const char* to_string(FormType t) { return t == FormType::even ? "even" : "odd"; }

HomeoInvariants PrototypeSpec::invariants() const {
  const std::vector<Integer> torsion{Integer(p), Integer(p)};
  return HomeoInvariants{e(), sigma(), FormType::odd, 0, AbelianInvariants{0, torsion}};
}

long hk_threshold(bool spin, long d_pi) { return spin ? 2 * d_pi : 2 * d_pi + 2; }

bool hk_applicable(long b2, long sigma, bool spin, long d_pi) {
  return b2 - std::labs(sigma) > hk_threshold(spin, d_pi);
}

HomeoInvariants homeo_invariants(const ManifoldState& state) {
  // Smooth, so Kirby-Siebenmann vanishes; odd order pi_1 makes the type the
  // parity of the intersection form, carried by the spin flag.
  return HomeoInvariants{state.e, state.sigma, state.spin ? FormType::even : FormType::odd, 0,
                         abelian_invariants(state.pi1)};
}

PrototypeSpec prototype_for(const ManifoldState& state, long p) {
  const FiniteGroupSpec group = FiniteGroupSpec::zp_zp(p);
  const AbelianInvariants expected{0, {Integer(group.p), Integer(group.p)}};
  const AbelianInvariants actual = abelian_invariants(state.pi1);
  if (actual != expected || !is_certifiably_abelian(state.pi1))
    throw Error(ErrorCode::pi1_mismatch, "prototype needs pi_1 = Z_" + std::to_string(p) + " + Z_" +
                                             std::to_string(p) + ", got " + actual.to_string());
  if (state.spin) throw Error(ErrorCode::spin_state, "prototypes are non-spin");
  const long b2 = state.e - 2;
  if (b2 < 0 || (b2 + state.sigma) % 2 != 0 || b2 < std::labs(state.sigma))
    throw Error(ErrorCode::inconsistent_input, "no prototype with e = " + std::to_string(state.e) +
                                                   ", sigma = " + std::to_string(state.sigma));
  return PrototypeSpec{(b2 + state.sigma) / 2, (b2 - state.sigma) / 2, p};
}

MinParameterReport min_parameters(int k, std::optional<int> g, long max_sum) {
  const FamilyShape& shape = family_shape(k);
  MinParameterReport report;
  report.k = k;
  report.g = shape.uses_genus() ? std::optional<int>(g.value_or(0)) : std::nullopt;
  const long d_pi = 1;
  const long threshold = hk_threshold(false, d_pi);
  const long start = shape.two_parameter() ? 2 : 1;
  for (long sum = start; sum <= max_sum; ++sum) {
    const long n_top = shape.two_parameter() ? sum - 1 : sum;
    for (long n = shape.two_parameter() ? 1 : sum; n <= n_top; ++n) {
      FamilyRecipe r{k, n, std::nullopt, report.g};
      if (shape.two_parameter()) r.m = sum - n;
      BoundaryRow row;
      row.n = n;
      row.m = r.m;
      row.betti = prop14_betti(r);
      row.lhs = row.betti.b2() - std::labs(row.betti.b2_plus - row.betti.b2_minus);
      row.threshold = threshold;
      row.passes = hk_applicable(row.betti.b2(), row.betti.b2_plus - row.betti.b2_minus, false, d_pi);
      report.tried.push_back(row);
      if (row.passes) {
        report.first = row;
        return report;
      }
    }
  }
  return report;
}

}  // namespace telescope
