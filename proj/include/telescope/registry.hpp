#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "telescope/construction.hpp"

namespace telescope {

struct TorusRecord {
  std::string meridian;
  std::string pushoff_m;
  std::string pushoff_l;
};

/// One block as written in the registry file. Parametric blocks (B_g)
/// carry e = e + e_per_g * g and sigma = sigma + sigma_per_g * g.
struct BlockRecord {
  std::string name;
  std::optional<std::string> parameter;
  long e = 0;
  long e_per_g = 0;
  long sigma = 0;
  long sigma_per_g = 0;
  std::vector<std::string> generators;
  std::vector<std::string> relators;
  TorusRecord t1;
  TorusRecord t2;
  bool minimal = true;
  bool spin = false;
  bool h2_independent = true;
  int line = 0;  // line of the block's "name" key in the source text
};

class Registry {
 public:
  /// Throws Error(parse) with line:column diagnostics for malformed text,
  /// Error(registry_validation) for schema violations or an empty registry.
  static Registry parse(std::string_view text, std::string source = "<memory>");
  static Registry load_file(const std::filesystem::path& path);
  /// The registry shipped with the library (data/blocks.json).
  static const Registry& builtin();
  static std::string_view builtin_text();

  const std::vector<BlockRecord>& blocks() const noexcept { return blocks_; }
  const std::string& source() const noexcept { return source_; }
  const BlockRecord& record(std::string_view name) const;

  /// Builds the triple without validating it.
  TelescopingTriple instantiate(std::string_view name, std::optional<int> g = std::nullopt) const;
  /// Builds and validates; Error(registry_validation) if a telescoping-triple check fails.
  TelescopingTriple load_block(std::string_view name, std::optional<int> g = std::nullopt) const;

 private:
  std::string source_;
  std::vector<BlockRecord> blocks_;
};

/// Re-executes a provenance program. The final stack item must be the only one.
ManifoldState replay(const Provenance& steps, const Registry& registry);

}  // namespace telescope
