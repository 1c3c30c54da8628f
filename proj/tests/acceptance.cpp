// Runs every acceptance criterion and prints one PASS/FAIL line each.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "telescope/commands.hpp"
#include "telescope/error.hpp"
#include "telescope/geography.hpp"
#include "telescope/homeo.hpp"
#include "telescope/pipeline.hpp"
#include "telescope/smith.hpp"

using namespace telescope;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

constexpr long kNMax = 10, kMMax = 10;
constexpr int kGMax = 5;

int failures = 0;

void run(int id, const std::string& title, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s > 0 && secs > budget_s) {
    out.ok = false;
    out.detail += " (over the " + std::to_string(static_cast<int>(budget_s)) + " s budget)";
  }
  if (!out.ok) ++failures;
  std::printf("%s criterion %d: %s | %s | %.2f s\n", out.ok ? "PASS" : "FAIL", id, title.c_str(), out.detail.c_str(),
              secs);
  std::fflush(stdout);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

IntegerMatrix from_digits(std::size_t rows, std::size_t cols, long code, long base, long offset) {
  IntegerMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows * cols; ++i) {
    a(i / cols, i % cols) = code % base - offset;
    code /= base;
  }
  return a;
}

}  // namespace

int main() {
  const Registry& registry = Registry::builtin();
  const auto recipes = recipes_in_bounds(kNMax, kMMax, kGMax);
  std::vector<long> primes = default_primes();

  run(1, "geography points regenerated", 5, [&] {
    long checked = 0;
    for (const auto& r : recipes) {
      const auto t = compose_recipe(r, registry);
      const CharNumbers cn = char_from_es(t.e, t.sigma);
      const GeographyPoint pt = theorem1_point(r);
      if (cn.c1sq != pt.c || cn.chi_h != pt.chi) return Outcome{false, "mismatch at " + r.label()};
      ++checked;
    }
    return Outcome{true, std::to_string(checked) + " identities over 15 families"};
  });

  run(2, "betti numbers cross-check", 0, [&] {
    long checked = 0;
    for (const auto& r : recipes) {
      const GeographyPoint pt = theorem1_point(r);
      const EulerSignature es = es_from_char(pt.c, pt.chi);
      const BettiPair b = betti_from_char(char_from_es(es.e, es.sigma), 0);
      const auto o = oracle::betti_from_point(pt.c, pt.chi);
      if (b != prop14_betti(r) || b.b2_plus != o.plus || b.b2_minus != o.minus)
        return Outcome{false, "mismatch at " + r.label()};
      ++checked;
    }
    return Outcome{true, std::to_string(checked) + " identities"};
  });

  std::vector<std::pair<ManifoldState, long>> members;  // p = q botany members for criterion 7
  run(3, "pi_1 pipeline", 30, [&] {
    long one = 0, two = 0;
    for (const auto& r : recipes) {
      const auto t = compose_recipe(r, registry);
      const CurvePair curves = quotient_pipeline_curves(t);
      for (long p : primes) {
        const ManifoldState y1 = surgery_on_t1(t, curves, p);
        if (abelian_invariants(y1.pi1) != AbelianInvariants{1, {Integer(p)}} || !is_certifiably_abelian(y1.pi1))
          return Outcome{false, "one surgery at " + r.label() + " p=" + std::to_string(p)};
        ++one;
        for (long q : primes) {
          const ManifoldState y2 = surgery_on_t2(y1, curves, q);
          const auto want = oracle::canonical_torsion({q, p});
          const auto got = abelian_invariants(y2.pi1);
          if (got.free_rank != 0 || got.torsion != want || !is_certifiably_abelian(y2.pi1))
            return Outcome{false, "two surgeries at " + r.label() + " p=" + std::to_string(p) +
                                      " q=" + std::to_string(q) + ": " + got.to_string()};
          ++two;
        }
      }
    }
    return Outcome{true, std::to_string(recipes.size()) + " triples, " + std::to_string(one) + " Z+Zp and " +
                             std::to_string(two) + " Zq+Zp quotients, all certified"};
  });

  run(4, "block and genus-2 sum presentations", 0, [&] {
    for (const char* name : {"A", "C"}) {
      const auto t = registry.load_block(name);
      const auto simple = tietze_simplify(t.complement).presentation;
      if (abelian_invariants(simple) != AbelianInvariants{2, {}} || simple.generator_count() != 2 ||
          !is_certifiably_abelian(simple))
        return Outcome{false, std::string(name) + " does not simplify to Z^2"};
      if (!validate_triple(t).ok()) return Outcome{false, std::string(name) + ": " + validate_triple(t).summary()};
    }
    const std::vector<std::string> gens{"alpha1", "alpha2", "alpha3", "alpha4"};
    const Presentation first = Presentation::parse({"alpha1", "alpha2", "alpha3"},
                                                   {"[alpha1,alpha2]", "[alpha2,alpha3]", "alpha1 alpha3^2"});
    const Presentation second = Presentation::parse({"alpha1", "alpha3"}, {"alpha1 alpha3^2"});
    const Presentation third = Presentation::parse(
        gens, {"[alpha1,alpha2]", "[alpha2,alpha3]", "alpha1 alpha3^2", "alpha4", "alpha3^-1 alpha1^-1 alpha4^-1 alpha1 alpha4"});
    const AbelianInvariants z2{2, {}}, z{1, {}};
    for (const auto& [p, want] : {std::pair{first, z2}, {second, z}, {third, z}}) {
      const auto simple = tietze_simplify(p).presentation;
      if (abelian_invariants(simple) != want || !is_certifiably_abelian(simple))
        return Outcome{false, "genus-2 sum presentation gave " + abelian_invariants(simple).to_string()};
    }
    return Outcome{true, "A, C -> Z^2 with valid push-offs; genus-2 sums -> Z+Z, Z, Z"};
  });

  run(5, "Smith normal form properties", 60, [&] {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> entry(-9, 9);
    for (int i = 0; i < 10000; ++i) {
      IntegerMatrix a(1 + rng() % 6, 1 + rng() % 6);
      for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = entry(rng);
      if (!certifies(smith_normal_form(a), a)) return Outcome{false, "certificate fails on " + to_string(a)};
    }
    // Every matrix with at most 6 entries in [-5, 5]; a sample of 3x3.
    long exhaustive = 0;
    for (std::size_t rows = 1; rows <= 3; ++rows)
      for (std::size_t cols = 1; cols <= 3; ++cols) {
        if (rows * cols > 6) continue;
        long total = 1;
        for (std::size_t i = 0; i < rows * cols; ++i) total *= 11;
        for (long code = 0; code < total; ++code) {
          const IntegerMatrix a = from_digits(rows, cols, code, 11, 5);
          if (smith_normal_form(a).diagonal() != oracle::invariant_factors(a))
            return Outcome{false, "oracle mismatch on " + to_string(a)};
          ++exhaustive;
        }
      }
    std::uniform_int_distribution<long> small(-5, 5);
    const long sampled = 200000;
    for (long i = 0; i < sampled; ++i) {
      IntegerMatrix a(3, 3);
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) a(r, c) = small(rng);
      if (smith_normal_form(a).diagonal() != oracle::invariant_factors(a))
        return Outcome{false, "oracle mismatch on " + to_string(a)};
    }
    return Outcome{true, "10000 certificates; oracle agrees on all " + std::to_string(exhaustive) +
                             " matrices up to 2x3/3x2 and " + std::to_string(sampled) + " sampled 3x3"};
  });

  run(6, "Hambleton-Kreck thresholds", 0, [&] {
    const auto f1 = min_parameters(1);
    if (!f1.first || f1.first->n != 2) return Outcome{false, "family 1 boundary is not n = 2"};
    const std::string table = hk_threshold_csv(kGMax);
    if (table != slurp(TELESCOPE_GOLDEN_DIR "/hk_thresholds.csv"))
      return Outcome{false, "threshold table differs from the golden file"};
    for (int k = 1; k <= kFamilyCount; ++k) {
      const auto& shape = family_shape(k);
      for (int g = 0; g <= (shape.uses_genus() ? kGMax : 0); ++g) {
        const auto rep = min_parameters(k, shape.uses_genus() ? std::optional<int>(g) : std::nullopt);
        if (!rep.first) return Outcome{false, "no boundary for family " + std::to_string(k)};
        for (const auto& row : rep.tried) {
          FamilyRecipe r{k, row.n, row.m, rep.g};
          if (row.passes != (theorem1_point(r).chi >= 2))
            return Outcome{false, "closed form disagrees at " + r.label()};
        }
      }
    }
    const auto f4 = min_parameters(4);
    return Outcome{true, "family 1 first passes at n = 2, family 4 at n = " + std::to_string(f4.first->n) +
                             "; table matches golden file"};
  });

  run(7, "prototype matching", 0, [&] {
    long matched = 0;
    for (const auto& r : recipes) {
      const auto t = compose_recipe(r, registry);
      for (long p : primes) {
        const ManifoldState x0 = botany_base(t, p);
        for (long n : {0L, 1L, 2L}) {
          const ManifoldState m = botany_family_member(x0, n, p);
          const PrototypeSpec proto = prototype_for(m, p);
          const HomeoInvariants want = proto.invariants(), got = homeo_invariants(m);
          if (want != got || want.type != FormType::odd || want.ks != 0 || proto.e() != m.e ||
              proto.sigma() != m.sigma)
            return Outcome{false, "mismatch at " + r.label() + " p=" + std::to_string(p)};
          ++matched;
        }
      }
    }
    return Outcome{true, std::to_string(matched) + " botany members match (e, sigma, odd, KS = 0)"};
  });

  run(8, "enumerate determinism", 0, [&] {
    const auto dir = std::filesystem::temp_directory_path() / "telescope_acceptance";
    std::filesystem::create_directories(dir);
    std::string csv[2], svg[2];
    for (int i = 0; i < 2; ++i) {
      RunConfig cfg;
      cfg.csv = dir / ("run" + std::to_string(i) + ".csv");
      cfg.svg = dir / ("run" + std::to_string(i) + ".svg");
      std::ostringstream sink;
      if (cmd_enumerate(cfg, registry, sink) != kExitOk) return Outcome{false, "enumerate failed"};
      csv[i] = slurp(*cfg.csv);
      svg[i] = slurp(*cfg.svg);
    }
    if (csv[0] != csv[1] || svg[0] != svg[1]) return Outcome{false, "outputs differ between runs"};
    return Outcome{true, "CSV " + std::to_string(csv[0].size()) + " bytes and SVG " + std::to_string(svg[0].size()) +
                             " bytes identical"};
  });

  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
