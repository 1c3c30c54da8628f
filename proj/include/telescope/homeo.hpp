#pragma once

#include <optional>
#include <vector>

#include "telescope/construction.hpp"
#include "telescope/geography.hpp"

namespace telescope {

bool is_odd_prime(long p);

/// Z_p + Z_p with p an odd prime; the only group whose d(pi) is stored exactly.
struct FiniteGroupSpec {
  long p = 3;
  long d_pi = 1;

  /// Throws Error(precondition) unless p is an odd prime.
  static FiniteGroupSpec zp_zp(long p);
  Presentation standard_presentation() const;
};

/// Euler characteristic 1 - #generators + #relators of the presentation 2-complex.
long presentation_euler_char(const Presentation& p);
/// d(pi) <= chi(K) - 1 for the 2-complex K of any presentation of pi.
long d_pi_upper_bound(const Presentation& p);

enum class FormType { even, odd };
const char* to_string(FormType t);

struct HomeoInvariants {
  long e = 0;
  long sigma = 0;
  FormType type = FormType::odd;
  int ks = 0;
  AbelianInvariants pi1;
  friend bool operator==(const HomeoInvariants&, const HomeoInvariants&) = default;
};

/// b2+ CP^2 # b2- CP^2-bar # (surgered L(p,1) x S^1).
struct PrototypeSpec {
  long b2_plus = 0;
  long b2_minus = 0;
  long p = 3;

  long e() const { return 2 + b2_plus + b2_minus; }
  long sigma() const { return b2_plus - b2_minus; }
  HomeoInvariants invariants() const;
  friend bool operator==(const PrototypeSpec&, const PrototypeSpec&) = default;
};

/// Hambleton-Kreck range: b2 - |sigma| > 2 d (spin) or > 2 d + 2 (non-spin).
bool hk_applicable(long b2, long sigma, bool spin, long d_pi);
long hk_threshold(bool spin, long d_pi);

HomeoInvariants homeo_invariants(const ManifoldState& state);

/// Throws Error(pi1_mismatch) unless pi_1(state) abelianizes to Z_p + Z_p with
/// a commutator certificate, Error(spin_state) for spin states.
PrototypeSpec prototype_for(const ManifoldState& state, long p);

struct BoundaryRow {
  long n = 0;
  std::optional<long> m;
  BettiPair betti;
  long lhs = 0;        // b2 - |sigma|
  long threshold = 0;  // 2 d + 2
  bool passes = false;
};

struct MinParameterReport {
  int k = 1;
  std::optional<int> g;
  std::optional<BoundaryRow> first;  // first passing parameters
  std::vector<BoundaryRow> tried;    // every candidate up to and including `first`
};

/// Smallest (n, m) by n + m, then n, for which the non-spin criterion with
/// d(pi) = 1 holds on the tabulated Betti numbers.
MinParameterReport min_parameters(int k, std::optional<int> g = std::nullopt, long max_sum = 200);

}  // namespace telescope
