#include "telescope/commands.hpp"

#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "telescope/catalog.hpp"
#include "telescope/error.hpp"
#include "telescope/export.hpp"
#include "telescope/geography.hpp"
#include "telescope/homeo.hpp"
#include "telescope/pipeline.hpp"

namespace telescope {

namespace {

std::string linear(long base, long per_g) {
  if (per_g == 0) return std::to_string(base);
  const long mag = std::labs(per_g);
  return std::to_string(base) + (per_g < 0 ? "-" : "+") + (mag == 1 ? "" : std::to_string(mag)) + "g";
}

std::string recipe_with_primes(const FamilyRecipe& r, long p, std::optional<long> q = std::nullopt) {
  std::string s = r.label() + " p=" + std::to_string(p);
  if (q) s += " q=" + std::to_string(*q);
  return s;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw Error(ErrorCode::io, "cannot write " + path.string());
  return os;
}

}  // namespace

std::vector<long> default_primes() {
  std::vector<long> primes;
  for (long p = 3; p <= 47; p += 2)
    if (is_odd_prime(p)) primes.push_back(p);
  return primes;
}

void RunConfig::validate() const {
  if (n_max < 1 || m_max < 1) throw Error(ErrorCode::precondition, "--n-max and --m-max must be >= 1");
  if (g_max < 0) throw Error(ErrorCode::precondition, "--g-max must be >= 0");
  if (primes.empty()) throw Error(ErrorCode::precondition, "--primes is empty");
  for (long p : primes)
    if (!is_odd_prime(p)) throw Error(ErrorCode::precondition, std::to_string(p) + " is not an odd prime");
}

Registry RunConfig::load_registry() const { return registry ? Registry::load_file(*registry) : Registry::builtin(); }

std::size_t VerifyReport::failures() const {
  std::size_t n = 0;
  for (const auto& l : lines) n += l.ok ? 0 : 1;
  return n;
}

const CheckLine* VerifyReport::first_failure() const {
  for (const auto& l : lines)
    if (!l.ok) return &l;
  return nullptr;
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["scope"] = scope;
  j["checks"] = lines.size();
  j["failures"] = failures();
  auto& items = j["items"] = nlohmann::ordered_json::array();
  for (const auto& l : lines)
    items.push_back({{"check", l.check}, {"subject", l.subject}, {"ok", l.ok}, {"detail", l.detail}});
  return j.dump(1) + "\n";
}

VerifyScope parse_verify_scope(std::string_view text) {
  if (text == "theorem1") return VerifyScope::theorem1;
  if (text == "prop14") return VerifyScope::prop14;
  if (text == "pi1") return VerifyScope::pi1;
  if (text == "hk") return VerifyScope::hk;
  if (text == "all") return VerifyScope::all;
  throw Error(ErrorCode::precondition, "unknown verify scope '" + std::string(text) + "'");
}

VerifyReport verify_theorem1(const RunConfig& cfg, const Registry& registry) {
  VerifyReport report{"theorem1", {}, {}};
  for (const auto& r : recipes_in_bounds(cfg.n_max, cfg.m_max, cfg.g_max)) {
    const CrossCheckReport x = cross_check(r, compose_recipe(r, registry));
    report.lines.push_back({"sum-formula", r.label(), x.sum_formula_ok, x.describe()});
    report.lines.push_back({"theorem1-point", r.label(), x.theorem1_ok && x.negative_signature, x.describe()});
  }
  return report;
}

VerifyReport verify_prop14(const RunConfig& cfg, const Registry&) {
  VerifyReport report{"prop14", {}, {}};
  for (const auto& r : recipes_in_bounds(cfg.n_max, cfg.m_max, cfg.g_max)) {
    const GeographyPoint pt = theorem1_point(r);
    const EulerSignature es = es_from_char(pt.c, pt.chi);
    const BettiPair derived = betti_from_char(char_from_es(es.e, es.sigma), 0);
    const BettiPair tabulated = prop14_betti(r);
    const bool ok = derived == tabulated && derived.b2_plus == 2 * pt.chi - 1 &&
                    derived.b2_minus == 10 * pt.chi - pt.c - 1;
    std::ostringstream detail;
    detail << "derived (" << derived.b2_plus << ',' << derived.b2_minus << ") tabulated (" << tabulated.b2_plus
           << ',' << tabulated.b2_minus << ')';
    report.lines.push_back({"prop14-betti", r.label(), ok, detail.str()});
  }
  return report;
}

VerifyReport verify_pi1(const RunConfig& cfg, const Registry& registry) {
  VerifyReport report{"pi1", {}, {}};
  for (const auto& r : recipes_in_bounds(cfg.n_max, cfg.m_max, cfg.g_max)) {
    const TelescopingTriple t = compose_recipe(r, registry);
    const CurvePair curves = quotient_pipeline_curves(t);
    for (long p : cfg.primes) {
      const ManifoldState y1 = surgery_on_t1(t, curves, p);
      const AbelianInvariants g1 = abelian_invariants(y1.pi1);
      const bool ok1 = g1 == AbelianInvariants{1, {Integer(p)}} && is_certifiably_abelian(y1.pi1);
      report.lines.push_back({"one-surgery", recipe_with_primes(r, p), ok1, g1.to_string()});

      bool ok2 = true;
      std::string detail = "Zq + Z" + std::to_string(p) + " for every q";
      for (long q : cfg.primes) {
        const ManifoldState y2 = surgery_on_t2(y1, curves, q);
        const AbelianInvariants g2 = abelian_invariants(y2.pi1);
        if (g2 != canonical_abelian_group(0, {Integer(q), Integer(p)}) || !is_certifiably_abelian(y2.pi1)) {
          ok2 = false;
          detail = "q=" + std::to_string(q) + ": " + g2.to_string();
          break;
        }
      }
      report.lines.push_back({"two-surgeries", recipe_with_primes(r, p), ok2, detail});

      // Botany members with p = q match their prototype.
      const ManifoldState x0 = botany_base(t, p);
      for (long n : {1L, 2L}) {
        const ManifoldState member = botany_family_member(x0, n, p, cfg.convention);
        bool ok = false;
        std::string why;
        try {
          const PrototypeSpec proto = prototype_for(member, p);
          const HomeoInvariants want = proto.invariants();
          ok = want == homeo_invariants(member) && want.type == FormType::odd && want.ks == 0 &&
               member.symplectic == (n == 1);
          why = "prototype (" + std::to_string(proto.b2_plus) + "," + std::to_string(proto.b2_minus) + ")";
        } catch (const Error& e) {
          why = e.what();
        }
        report.lines.push_back({"prototype", recipe_with_primes(r, p) + " n=" + std::to_string(n), ok, why});
      }
    }
  }
  return report;
}

std::string hk_threshold_csv(int g_max) {
  std::ostringstream os;
  os << "k,family,g,n,m,b2plus,b2minus,sigma,lhs,threshold\n";
  for (int k = 1; k <= kFamilyCount; ++k) {
    const FamilyShape& shape = family_shape(k);
    const int g_top = shape.uses_genus() ? g_max : 0;
    for (int g = 0; g <= g_top; ++g) {
      const MinParameterReport rep = min_parameters(k, shape.uses_genus() ? std::optional<int>(g) : std::nullopt);
      os << k << ',' << shape.label << ',' << (rep.g ? std::to_string(*rep.g) : "") << ',';
      if (!rep.first) {
        os << ",,,,,," << hk_threshold(false, 1) << '\n';
        continue;
      }
      const BoundaryRow& b = *rep.first;
      os << b.n << ',' << (b.m ? std::to_string(*b.m) : "") << ',' << b.betti.b2_plus << ',' << b.betti.b2_minus
         << ',' << b.betti.b2_plus - b.betti.b2_minus << ',' << b.lhs << ',' << b.threshold << '\n';
    }
  }
  return os.str();
}

VerifyReport verify_hk(const RunConfig& cfg) {
  VerifyReport report{"hk", {}, {}};
  report.tables.push_back(hk_threshold_csv(cfg.g_max));
  for (int k = 1; k <= kFamilyCount; ++k) {
    const FamilyShape& shape = family_shape(k);
    for (int g = 0; g <= (shape.uses_genus() ? cfg.g_max : 0); ++g) {
      const auto rep = min_parameters(k, shape.uses_genus() ? std::optional<int>(g) : std::nullopt);
      const std::string subject = std::string(shape.label) + (rep.g ? " g=" + std::to_string(*rep.g) : "");
      report.lines.push_back({"hk-boundary-found", subject, rep.first.has_value(), ""});
      // Every candidate before the boundary fails and the boundary passes.
      bool ok = rep.first.has_value();
      for (std::size_t i = 0; i + 1 < rep.tried.size(); ++i) ok = ok && !rep.tried[i].passes;
      report.lines.push_back({"hk-boundary-minimal", subject, ok, std::to_string(rep.tried.size()) + " candidates"});
    }
  }
  // b2 - |sigma| = 2 b2+ = 4 chi - 2 on the whole range, so the criterion is chi >= 2.
  for (const auto& r : recipes_in_bounds(cfg.n_max, cfg.m_max, cfg.g_max)) {
    const BettiPair b = prop14_betti(r);
    const long sigma = b.b2_plus - b.b2_minus;
    const bool hk = hk_applicable(b.b2(), sigma, false, 1);
    const bool ok = hk == (theorem1_point(r).chi >= 2);
    report.lines.push_back({"hk-closed-form", r.label(), ok, hk ? "applies" : "does not apply"});
  }
  return report;
}

int cmd_blocks_list(const Registry& registry, std::ostream& out) {
  out << "block   e       sigma   c1sq    chi_h   status\n";
  bool all_ok = true;
  for (const auto& b : registry.blocks()) {
    const std::string name = b.parameter ? b.name + "_" + *b.parameter : b.name;
    std::string c, chi;
    if (b.parameter) {
      c = linear(2 * b.e + 3 * b.sigma, 2 * b.e_per_g + 3 * b.sigma_per_g);
      if ((b.e + b.sigma) % 4 == 0 && (b.e_per_g + b.sigma_per_g) % 4 == 0)
        chi = linear((b.e + b.sigma) / 4, (b.e_per_g + b.sigma_per_g) / 4);
      else
        chi = "?";
    } else {
      c = std::to_string(2 * b.e + 3 * b.sigma);
      chi = (b.e + b.sigma) % 4 == 0 ? std::to_string((b.e + b.sigma) / 4) : "?";
    }
    std::string status = "ok";
    try {
      if (b.parameter)
        for (int g = 0; g <= 2; ++g) registry.load_block(b.name, g);
      else
        registry.load_block(b.name);
    } catch (const Error& e) {
      status = std::string("invalid: ") + e.what();
      all_ok = false;
    }
    auto pad = [](const std::string& s) { return s.size() >= 8 ? s + " " : s + std::string(8 - s.size(), ' '); };
    out << pad(name) << pad(linear(b.e, b.e_per_g)) << pad(linear(b.sigma, b.sigma_per_g)) << pad(c) << pad(chi)
        << status << '\n';
  }
  return all_ok ? kExitOk : kExitConfig;
}

int cmd_verify(VerifyScope scope, const RunConfig& cfg, const Registry& registry, std::ostream& out) {
  cfg.validate();
  std::vector<VerifyReport> reports;
  if (scope == VerifyScope::theorem1 || scope == VerifyScope::all) reports.push_back(verify_theorem1(cfg, registry));
  if (scope == VerifyScope::prop14 || scope == VerifyScope::all) reports.push_back(verify_prop14(cfg, registry));
  if (scope == VerifyScope::pi1 || scope == VerifyScope::all) reports.push_back(verify_pi1(cfg, registry));
  if (scope == VerifyScope::hk || scope == VerifyScope::all) reports.push_back(verify_hk(cfg));

  std::size_t failures = 0;
  for (const auto& r : reports) {
    out << r.scope << ": " << r.lines.size() << " checks, " << r.failures() << " failures\n";
    for (const auto& t : r.tables) out << t;
    if (const CheckLine* f = r.first_failure())
      out << "  first counterexample: " << f->check << " " << f->subject << ": " << f->detail << '\n';
    failures += r.failures();
  }
  if (cfg.report) {
    std::ofstream os = open_output(*cfg.report);
    os << "[\n";
    for (std::size_t i = 0; i < reports.size(); ++i) os << (i ? ",\n" : "") << reports[i].to_json();
    os << "]\n";
  }
  return failures == 0 ? kExitOk : kExitVerification;
}

int cmd_enumerate(const RunConfig& cfg, const Registry& registry, std::ostream& out) {
  cfg.validate();
  const auto rows = export_rows(enumerate_points(cfg.n_max, cfg.m_max, cfg.g_max), registry);
  if (cfg.csv) {
    std::ofstream os = open_output(*cfg.csv);
    write_csv(os, rows);
  } else {
    write_csv(out, rows);
  }
  if (cfg.svg) {
    std::ofstream os = open_output(*cfg.svg);
    write_svg(os, rows);
  }
  if (cfg.catalog) {
    std::set<std::string> known;
    if (std::filesystem::exists(*cfg.catalog))
      for (const auto& e : load_catalog(*cfg.catalog, registry)) known.insert(e.checksum);
    // Per recipe: the Zq + Zp manifold for the first two primes and the
    // symplectic botany member over the first prime.
    const long p = cfg.primes.front();
    const long q = cfg.primes.size() > 1 ? cfg.primes[1] : p;
    std::vector<CatalogEntry> fresh;
    for (const auto& r : recipes_in_bounds(cfg.n_max, cfg.m_max, cfg.g_max)) {
      const TelescopingTriple t = compose_recipe(r, registry);
      const auto pipeline = run_quotient_pipeline(t, p, q);
      const ManifoldState member = botany_family_member(botany_base(t, p), 1, p, cfg.convention);
      for (const ManifoldState* s : {&pipeline.after_t2, &member}) {
        CatalogEntry e = make_entry(*s, r);
        if (known.insert(e.checksum).second) fresh.push_back(std::move(e));
      }
    }
    append_entries(*cfg.catalog, fresh);
    out << "catalog: appended " << fresh.size() << " entries to " << cfg.catalog->string() << '\n';
  }
  return kExitOk;
}

int cmd_botany(const FamilyRecipe& family, long p, const std::vector<long>& n_list, const RunConfig& cfg,
               const Registry& registry, std::ostream& out) {
  family.validate();
  if (!is_odd_prime(p)) throw Error(ErrorCode::precondition, std::to_string(p) + " is not an odd prime");
  if (n_list.empty()) throw Error(ErrorCode::precondition, "empty member list");

  const BettiPair betti = prop14_betti(family);
  const long sigma = betti.b2_plus - betti.b2_minus;
  const bool hk = hk_applicable(betti.b2(), sigma, false, FiniteGroupSpec::zp_zp(p).d_pi);
  const long nm = family.n + family.m.value_or(0);
  out << family.label() << " p=" << p << ": b2+=" << betti.b2_plus << " b2-=" << betti.b2_minus
      << " b2-|sigma|=" << betti.b2() - std::labs(sigma) << " threshold=" << hk_threshold(false, 1)
      << " hk=" << (hk ? "applicable" : "not applicable") << '\n';
  if ((nm < 2 || !hk) && !cfg.override_hk) {
    out << "refused: ";
    if (nm < 2) out << "n + m = " << nm << " < 2";
    if (nm < 2 && !hk) out << " and ";
    if (!hk) out << "Hambleton-Kreck inequality fails";
    out << "; pass --override-hk to build the members anyway\n";
    return kExitConfig;
  }

  const TelescopingTriple t = compose_recipe(family, registry);
  const ManifoldState x0 = botany_base(t, p);
  out << "n       pi1             symplectic  prototype(b2+,b2-)  hk\n";
  for (long n : n_list) {
    const ManifoldState member = botany_family_member(x0, n, p, cfg.convention);
    const PrototypeSpec proto = prototype_for(member, p);  // throws pi1_mismatch
    std::string row = std::to_string(n);
    row.resize(8, ' ');
    std::string group = abelian_invariants(member.pi1).to_string();
    group.resize(16, ' ');
    std::string symp = member.symplectic ? "true" : "false";
    symp.resize(12, ' ');
    std::string pr = "(" + std::to_string(proto.b2_plus) + "," + std::to_string(proto.b2_minus) + ")";
    pr.resize(20, ' ');
    out << row << group << symp << pr << (hk ? "applicable" : "not applicable") << '\n';
  }
  return kExitOk;
}

int cmd_catalog_check(const RunConfig& cfg, const Registry& registry, std::ostream& out) {
  if (!cfg.catalog) throw Error(ErrorCode::precondition, "--catalog is required");
  const auto entries = load_catalog(*cfg.catalog, registry);
  out << cfg.catalog->string() << ": " << entries.size() << " entries verified\n";
  return kExitOk;
}

}  // namespace telescope
