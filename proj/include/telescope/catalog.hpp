#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "telescope/families.hpp"
#include "telescope/geography.hpp"

namespace telescope {

/// One verified construction. Every field except `checksum` is a function
/// of (recipe, provenance); loading re-derives them by replay.
struct CatalogEntry {
  long c = 0;
  long chi = 0;
  BettiPair betti;
  AbelianInvariants group;
  FamilyRecipe recipe;
  std::optional<long> p;
  std::optional<long> q;
  std::optional<long> botany_n;
  bool symplectic = false;
  bool minimal = false;
  bool irreducible = false;
  bool spin = false;
  Provenance provenance;
  std::string checksum;  // SHA-256 of the canonical record without this field

  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

/// Derives an entry from a constructed state; fills the checksum.
CatalogEntry make_entry(const ManifoldState& state, const FamilyRecipe& recipe);

/// Canonical single-line JSON of the entry, checksum last.
std::string serialize_entry(const CatalogEntry& entry);
/// Throws Error(catalog_corrupt) on malformed lines or checksum mismatch.
CatalogEntry parse_entry(std::string_view line);

std::string sha256_hex(std::string_view data);

/// Appends records; never rewrites existing lines.
void append_entries(const std::filesystem::path& path, const std::vector<CatalogEntry>& entries);

/// Loads and re-verifies every record: checksum, then replay of the
/// provenance against the registry must reproduce every stored field.
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path,
                                       const Registry& registry = Registry::builtin());

}  // namespace telescope
