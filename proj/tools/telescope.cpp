#include <iostream>

#include <CLI11.hpp>

#include "telescope/commands.hpp"
#include "telescope/error.hpp"

using namespace telescope;

namespace {

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::pi1_mismatch:
    case ErrorCode::catalog_corrupt:
    case ErrorCode::not_certified:
      return kExitVerification;
    default:
      return kExitConfig;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Telescoping-triple construction calculus and geography tools"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string registry_path, csv, svg, catalog, report, convention = "kill-xp";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--registry", registry_path, "Block registry file (default: built-in)");
    sub->add_option("--n-max", cfg.n_max, "Largest n")->capture_default_str();
    sub->add_option("--m-max", cfg.m_max, "Largest m")->capture_default_str();
    sub->add_option("--g-max", cfg.g_max, "Largest genus parameter g")->capture_default_str();
    sub->add_option("--primes", cfg.primes, "Comma-separated odd primes")->delimiter(',');
    sub->add_option("--csv", csv, "CSV output path");
    sub->add_option("--svg", svg, "SVG output path");
    sub->add_option("--catalog", catalog, "Append-only catalog file");
    sub->add_option("--report", report, "JSON report path (verify)");
    sub->add_option("--exponent-convention", convention, "Botany relator: kill-xp or mu-n-m-p")
        ->check(CLI::IsMember({"kill-xp", "mu-n-m-p"}));
    sub->add_flag("--override-hk", cfg.override_hk, "Build botany members outside the Hambleton-Kreck range");
  };

  auto* blocks = app.add_subcommand("blocks", "Registered building blocks");
  auto* blocks_list = blocks->add_subcommand("list", "List blocks with validation status");
  blocks->require_subcommand(1);
  add_common(blocks_list);

  std::string scope;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("scope", scope, "theorem1 | prop14 | pi1 | hk | all")
      ->required()
      ->check(CLI::IsMember({"theorem1", "prop14", "pi1", "hk", "all"}));
  add_common(verify);

  auto* enumerate = app.add_subcommand("enumerate", "Export the realized geography points");
  add_common(enumerate);

  FamilyRecipe family;
  long m = 0, g = -1, p = 3;
  std::vector<long> members{1, 2, 3, 4, 5};
  auto* botany = app.add_subcommand("botany", "Build members of the exotic family over Z_p + Z_p");
  botany->add_option("--family", family.k, "Family index 1..15")->required();
  botany->add_option("--n", family.n, "First recipe parameter")->required();
  botany->add_option("--m", m, "Second recipe parameter (two-block families)");
  botany->add_option("--g", g, "Genus parameter (families with B_g)");
  botany->add_option("--p", p, "Odd prime")->capture_default_str();
  botany->add_option("--members", members, "Comma-separated member indices n")->delimiter(',');
  add_common(botany);

  auto* catalog_cmd = app.add_subcommand("catalog", "Catalog maintenance");
  auto* catalog_check = catalog_cmd->add_subcommand("check", "Re-verify every catalog record");
  catalog_cmd->require_subcommand(1);
  add_common(catalog_check);

  CLI11_PARSE(app, argc, argv);

  try {
    if (!registry_path.empty()) cfg.registry = registry_path;
    if (!csv.empty()) cfg.csv = csv;
    if (!svg.empty()) cfg.svg = svg;
    if (!catalog.empty()) cfg.catalog = catalog;
    if (!report.empty()) cfg.report = report;
    cfg.convention = parse_exponent_convention(convention);
    const Registry registry = cfg.load_registry();

    if (blocks_list->parsed()) return cmd_blocks_list(registry, std::cout);
    if (verify->parsed()) return cmd_verify(parse_verify_scope(scope), cfg, registry, std::cout);
    if (enumerate->parsed()) return cmd_enumerate(cfg, registry, std::cout);
    if (botany->parsed()) {
      if (botany->count("--m")) family.m = m;
      if (botany->count("--g")) family.g = static_cast<int>(g);
      return cmd_botany(family, p, members, cfg, registry, std::cout);
    }
    if (catalog_check->parsed()) return cmd_catalog_check(cfg, registry, std::cout);
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kExitConfig;
}
