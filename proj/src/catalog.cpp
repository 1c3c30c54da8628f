#include "telescope/catalog.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include <json.hpp>
#include <openssl/evp.h>

#include "telescope/error.hpp"

namespace telescope {

namespace {

using ordered = nlohmann::ordered_json;

ordered step_json(const ConstructionStep& s) {
  ordered j;
  switch (s.kind) {
    case ConstructionStep::Kind::load_block:
      j["op"] = "load";
      j["block"] = s.block;
      if (s.g) j["g"] = *s.g;
      break;
    case ConstructionStep::Kind::sum:
      j["op"] = "sum";
      break;
    case ConstructionStep::Kind::surgery:
      j["op"] = "surgery";
      j["torus"] = to_string(s.surgery.torus);
      j["curve"] = to_string(s.surgery.curve);
      j["k"] = s.surgery.k;
      j["p"] = s.surgery.p;
      j["q"] = s.surgery.q;
      break;
    case ConstructionStep::Kind::botany:
      j["op"] = "botany";
      j["n"] = s.botany_n;
      j["p"] = s.botany_p;
      j["convention"] = to_string(s.convention);
      j["curve"] = to_string(s.surgery.curve);
      break;
  }
  return j;
}

ConstructionStep parse_step(const ordered& j) {
  ConstructionStep s;
  const std::string op = j.at("op").get<std::string>();
  auto torus = [](const std::string& t) {
    if (t == "T1") return TorusId::t1;
    if (t == "T2") return TorusId::t2;
    throw Error(ErrorCode::catalog_corrupt, "bad torus '" + t + "'");
  };
  auto curve = [](const std::string& c) {
    if (c == "m") return Curve::m;
    if (c == "l") return Curve::l;
    throw Error(ErrorCode::catalog_corrupt, "bad curve '" + c + "'");
  };
  if (op == "load") {
    s.kind = ConstructionStep::Kind::load_block;
    s.block = j.at("block").get<std::string>();
    if (j.contains("g")) s.g = j.at("g").get<int>();
  } else if (op == "sum") {
    s.kind = ConstructionStep::Kind::sum;
  } else if (op == "surgery") {
    s.kind = ConstructionStep::Kind::surgery;
    s.surgery = SurgerySpec{torus(j.at("torus").get<std::string>()), curve(j.at("curve").get<std::string>()),
                            j.at("k").get<long>(), j.at("p").get<long>(), j.at("q").get<long>()};
  } else if (op == "botany") {
    s.kind = ConstructionStep::Kind::botany;
    s.botany_n = j.at("n").get<long>();
    s.botany_p = j.at("p").get<long>();
    s.convention = parse_exponent_convention(j.at("convention").get<std::string>());
    s.surgery = SurgerySpec{TorusId::t1, curve(j.at("curve").get<std::string>()), s.botany_n, s.botany_p, 0};
  } else {
    throw Error(ErrorCode::catalog_corrupt, "unknown provenance op '" + op + "'");
  }
  return s;
}

ordered body_json(const CatalogEntry& e) {
  ordered j;
  j["c"] = e.c;
  j["chi"] = e.chi;
  j["b1"] = e.betti.b1;
  j["b2plus"] = e.betti.b2_plus;
  j["b2minus"] = e.betti.b2_minus;
  ordered torsion = ordered::array();
  for (const auto& t : e.group.torsion) torsion.push_back(t.get_str());
  j["group"] = {{"free_rank", e.group.free_rank}, {"torsion", torsion}};
  ordered recipe;
  recipe["k"] = e.recipe.k;
  recipe["n"] = e.recipe.n;
  if (e.recipe.m) recipe["m"] = *e.recipe.m;
  if (e.recipe.g) recipe["g"] = *e.recipe.g;
  j["recipe"] = recipe;
  ordered surgery = ordered::object();
  if (e.p) surgery["p"] = *e.p;
  if (e.q) surgery["q"] = *e.q;
  if (e.botany_n) surgery["botany_n"] = *e.botany_n;
  j["surgery"] = surgery;
  j["flags"] = {{"symplectic", e.symplectic},
                {"minimal", e.minimal},
                {"irreducible", e.irreducible},
                {"spin", e.spin}};
  ordered steps = ordered::array();
  for (const auto& s : e.provenance) steps.push_back(step_json(s));
  j["provenance"] = steps;
  return j;
}

}  // namespace

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorCode::io, "SHA-256 computation failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xf];
  }
  return out;
}

CatalogEntry make_entry(const ManifoldState& state, const FamilyRecipe& recipe) {
  CatalogEntry e;
  const CharNumbers cn = char_from_es(state.e, state.sigma);
  e.c = cn.c1sq;
  e.chi = cn.chi_h;
  e.group = abelian_invariants(state.pi1);
  e.betti = betti_from_char(cn, static_cast<long>(e.group.free_rank));
  e.recipe = recipe;
  for (const auto& step : state.provenance) {
    if (step.kind == ConstructionStep::Kind::surgery) {
      if (step.surgery.torus == TorusId::t1)
        e.p = step.surgery.p;
      else
        e.q = step.surgery.p;
    } else if (step.kind == ConstructionStep::Kind::botany) {
      e.botany_n = step.botany_n;
      e.p = step.botany_p;
    }
  }
  e.symplectic = state.symplectic;
  e.minimal = state.minimal;
  // Minimal with residually finite pi_1; the botany members carry the
  // flag from the family construction.
  e.irreducible = state.minimal;
  e.spin = state.spin;
  e.provenance = state.provenance;
  e.checksum = sha256_hex(body_json(e).dump());
  return e;
}

std::string serialize_entry(const CatalogEntry& entry) {
  ordered j = body_json(entry);
  j["checksum"] = entry.checksum;
  return j.dump();
}

CatalogEntry parse_entry(std::string_view line) {
  ordered j;
  try {
    j = ordered::parse(line.begin(), line.end());
  } catch (const ordered::parse_error& ex) {
    throw Error(ErrorCode::catalog_corrupt, std::string("malformed catalog record: ") + ex.what());
  }
  CatalogEntry e;
  try {
    e.c = j.at("c").get<long>();
    e.chi = j.at("chi").get<long>();
    e.betti = BettiPair{j.at("b1").get<long>(), j.at("b2plus").get<long>(), j.at("b2minus").get<long>()};
    e.group.free_rank = j.at("group").at("free_rank").get<std::size_t>();
    for (const auto& t : j.at("group").at("torsion")) e.group.torsion.emplace_back(t.get<std::string>());
    const auto& r = j.at("recipe");
    e.recipe.k = r.at("k").get<int>();
    e.recipe.n = r.at("n").get<long>();
    if (r.contains("m")) e.recipe.m = r.at("m").get<long>();
    if (r.contains("g")) e.recipe.g = r.at("g").get<int>();
    const auto& s = j.at("surgery");
    if (s.contains("p")) e.p = s.at("p").get<long>();
    if (s.contains("q")) e.q = s.at("q").get<long>();
    if (s.contains("botany_n")) e.botany_n = s.at("botany_n").get<long>();
    const auto& f = j.at("flags");
    e.symplectic = f.at("symplectic").get<bool>();
    e.minimal = f.at("minimal").get<bool>();
    e.irreducible = f.at("irreducible").get<bool>();
    e.spin = f.at("spin").get<bool>();
    for (const auto& step : j.at("provenance")) e.provenance.push_back(parse_step(step));
    e.checksum = j.at("checksum").get<std::string>();
  } catch (const ordered::exception& ex) {
    throw Error(ErrorCode::catalog_corrupt, std::string("catalog record schema: ") + ex.what());
  }
  const std::string expected = sha256_hex(body_json(e).dump());
  if (expected != e.checksum)
    throw Error(ErrorCode::catalog_corrupt, "checksum mismatch: stored " + e.checksum + ", computed " + expected);
  return e;
}

void append_entries(const std::filesystem::path& path, const std::vector<CatalogEntry>& entries) {
  std::ofstream out(path, std::ios::binary | std::ios::app);
  if (!out) throw Error(ErrorCode::io, "cannot open catalog " + path.string() + " for appending");
  for (const auto& e : entries) out << serialize_entry(e) << '\n';
  if (!out) throw Error(ErrorCode::io, "write to catalog " + path.string() + " failed");
}

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path, const Registry& registry) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot read catalog " + path.string());
  std::vector<CatalogEntry> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    const std::string where = path.string() + ":" + std::to_string(number) + ": ";
    CatalogEntry stored;
    try {
      stored = parse_entry(line);
    } catch (const Error& e) {
      throw Error(ErrorCode::catalog_corrupt, where + e.what());
    }
    const CatalogEntry replayed = make_entry(replay(stored.provenance, registry), stored.recipe);
    if (!(replayed == stored))
      throw Error(ErrorCode::catalog_corrupt, where + "replay does not reproduce the stored record");
    out.push_back(stored);
  }
  return out;
}

}  // namespace telescope
