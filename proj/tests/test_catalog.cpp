#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "telescope/catalog.hpp"
#include "telescope/error.hpp"
#include "telescope/pipeline.hpp"

using namespace telescope;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("telescope_test_" + name);
  fs::remove(p);
  return p;
}

std::vector<CatalogEntry> sample_entries() {
  std::vector<CatalogEntry> out;
  for (FamilyRecipe r : {FamilyRecipe{1, 2}, FamilyRecipe{6, 1, 2, 1}, FamilyRecipe{14, 2, 1}}) {
    const auto t = compose_recipe(r);
    const auto pipe = run_quotient_pipeline(t, 5, 3);
    out.push_back(make_entry(pipe.after_t1, r));
    out.push_back(make_entry(pipe.after_t2, r));
    out.push_back(make_entry(botany_family_member(botany_base(t, 3), 4, 3, ExponentConvention::mu_n_m_p), r));
  }
  return out;
}

}  // namespace

TEST_CASE("sha256") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("entries carry the derived fields") {
  const auto entries = sample_entries();
  const CatalogEntry& y2 = entries[1];
  CHECK(y2.c == 14);
  CHECK(y2.chi == 2);
  CHECK(y2.betti == BettiPair{0, 3, 5});
  CHECK(y2.group == AbelianInvariants{0, {15}});
  CHECK(y2.p == 5);
  CHECK(y2.q == 3);
  CHECK_FALSE(y2.botany_n);
  CHECK(y2.symplectic);
  const CatalogEntry& y1 = entries[0];
  CHECK(y1.betti.b1 == 1);
  CHECK_FALSE(y1.q);
  const CatalogEntry& x4 = entries[2];
  CHECK(x4.botany_n == 4);
  CHECK(x4.p == 3);
  CHECK_FALSE(x4.symplectic);
  CHECK(x4.group == AbelianInvariants{0, {3, 3}});
}

TEST_CASE("serialize and parse round-trip") {
  for (const auto& e : sample_entries()) {
    const std::string line = serialize_entry(e);
    CHECK(line.find('\n') == std::string::npos);
    CHECK(parse_entry(line) == e);
    CHECK(serialize_entry(parse_entry(line)) == line);
  }
}

TEST_CASE("tampering is detected") {
  const auto e = sample_entries()[1];
  std::string line = serialize_entry(e);
  const auto pos = line.find("\"c\":14");
  REQUIRE(pos != std::string::npos);
  line.replace(pos, 6, "\"c\":15");
  try {
    parse_entry(line);
    FAIL("expected a checksum failure");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::catalog_corrupt);
  }
  CHECK_THROWS_AS(parse_entry("not json"), Error);
}

TEST_CASE("catalog append and reload") {
  const fs::path path = temp_file("catalog.jsonl");
  const auto entries = sample_entries();
  append_entries(path, {entries.begin(), entries.begin() + 4});
  append_entries(path, {entries.begin() + 4, entries.end()});
  const auto loaded = load_catalog(path);
  CHECK(loaded == entries);

  // A record whose checksum is consistent but whose fields disagree with
  // the replayed provenance is rejected.
  CatalogEntry forged = entries[0];
  forged.c = 99;
  std::string body = serialize_entry(forged);
  body = body.substr(0, body.find(",\"checksum\"")) + "}";
  forged.checksum = sha256_hex(body);
  CHECK(parse_entry(serialize_entry(forged)) == forged);
  std::ofstream(path, std::ios::app) << serialize_entry(forged) << '\n';
  CHECK_THROWS_AS(load_catalog(path), Error);
  fs::remove(path);
}
