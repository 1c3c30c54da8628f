#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "telescope/construction.hpp"
#include "telescope/families.hpp"
#include "telescope/registry.hpp"

namespace telescope {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerification = 1;
inline constexpr int kExitConfig = 2;

std::vector<long> default_primes();  // odd primes 3..47

struct RunConfig {
  std::optional<std::filesystem::path> registry;
  long n_max = 10;
  long m_max = 10;
  int g_max = 5;
  std::vector<long> primes = default_primes();
  std::optional<std::filesystem::path> csv;
  std::optional<std::filesystem::path> svg;
  std::optional<std::filesystem::path> catalog;
  std::optional<std::filesystem::path> report;  // JSON report of verify
  ExponentConvention convention = ExponentConvention::kill_xp;
  bool override_hk = false;

  /// Throws Error(precondition): n_max, m_max >= 1, g_max >= 0, primes odd primes.
  void validate() const;
  Registry load_registry() const;
};

/// One checked identity.
struct CheckLine {
  std::string check;
  std::string subject;
  bool ok = true;
  std::string detail;
};

struct VerifyReport {
  std::string scope;
  std::vector<CheckLine> lines;
  std::vector<std::string> tables;  // human-readable extras (hk threshold table)

  std::size_t failures() const;
  const CheckLine* first_failure() const;
  std::string to_json() const;
};

enum class VerifyScope { theorem1, prop14, pi1, hk, all };
VerifyScope parse_verify_scope(std::string_view text);

VerifyReport verify_theorem1(const RunConfig& cfg, const Registry& registry);
VerifyReport verify_prop14(const RunConfig& cfg, const Registry& registry);
/// Both quotient groups for every recipe and p, q in cfg.primes, and the
/// prototype match of the p = q botany members.
VerifyReport verify_pi1(const RunConfig& cfg, const Registry& registry);
VerifyReport verify_hk(const RunConfig& cfg);

/// k,family,g,n,m,b2plus,b2minus,sigma,lhs,threshold; one row per family
/// (per genus for families containing B_g) at the first passing parameters.
std::string hk_threshold_csv(int g_max);

int cmd_blocks_list(const Registry& registry, std::ostream& out);
int cmd_verify(VerifyScope scope, const RunConfig& cfg, const Registry& registry, std::ostream& out);
int cmd_enumerate(const RunConfig& cfg, const Registry& registry, std::ostream& out);
int cmd_botany(const FamilyRecipe& family, long p, const std::vector<long>& n_list, const RunConfig& cfg,
               const Registry& registry, std::ostream& out);
int cmd_catalog_check(const RunConfig& cfg, const Registry& registry, std::ostream& out);

}  // namespace telescope
