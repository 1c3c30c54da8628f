#include "telescope/registry.hpp"

#include <fstream>
#include <sstream>
#include <variant>

#include <json.hpp>

#include "telescope/error.hpp"

namespace telescope {

namespace detail {
extern const std::string_view kBuiltinRegistry;
}

namespace {

using nlohmann::json;

std::pair<int, int> line_col(std::string_view text, std::size_t byte) {
  int line = 1;
  int col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

int line_of_name(std::string_view text, const std::string& name) {
  const std::string needle = "\"" + name + "\"";
  std::size_t pos = 0;
  while ((pos = text.find(needle, pos)) != std::string_view::npos) {
    const std::size_t before = text.rfind("\"name\"", pos);
    if (before != std::string_view::npos && text.substr(before, pos - before).find(',') == std::string_view::npos)
      return line_col(text, pos).first;
    pos += needle.size();
  }
  return 0;
}

[[noreturn]] void schema_error(const std::string& source, int line, const std::string& what) {
  std::ostringstream os;
  os << source;
  if (line > 0) os << ':' << line;
  os << ": " << what;
  throw Error(ErrorCode::registry_validation, os.str());
}

template <typename T>
T field(const json& obj, const char* key, const std::string& source, int line, const std::string& where) {
  if (!obj.contains(key)) schema_error(source, line, where + ": missing field '" + key + "'");
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    schema_error(source, line, where + ": field '" + key + "' has the wrong type");
  }
}

TorusRecord torus_record(const json& tori, const char* key, const std::string& source, int line,
                         const std::string& where) {
  if (!tori.contains(key)) schema_error(source, line, where + ": missing torus '" + key + "'");
  const json& t = tori.at(key);
  const std::string w = where + " torus " + key;
  return TorusRecord{field<std::string>(t, "meridian", source, line, w),
                     field<std::string>(t, "pushoff_m", source, line, w),
                     field<std::string>(t, "pushoff_l", source, line, w)};
}

}  // namespace

Registry Registry::parse(std::string_view text, std::string source) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    throw Error(ErrorCode::parse, source + ":" + std::to_string(line) + ":" + std::to_string(col) +
                                      ": malformed registry: " + e.what());
  }
  if (!doc.is_object() || !doc.contains("blocks") || !doc.at("blocks").is_array())
    schema_error(source, 1, "registry must be an object with a 'blocks' array");
  if (doc.at("blocks").empty()) schema_error(source, 1, "registry contains no blocks");

  Registry reg;
  reg.source_ = source;
  std::size_t index = 0;
  for (const json& b : doc.at("blocks")) {
    const std::string where = "block #" + std::to_string(index++);
    if (!b.is_object()) schema_error(source, 0, where + ": not an object");
    BlockRecord rec;
    rec.name = field<std::string>(b, "name", source, 0, where);
    rec.line = line_of_name(text, rec.name);
    const std::string at = "block '" + rec.name + "'";
    for (const auto& existing : reg.blocks_)
      if (existing.name == rec.name) schema_error(source, rec.line, at + ": duplicate block name");
    if (b.contains("parameter")) rec.parameter = field<std::string>(b, "parameter", source, rec.line, at);
    rec.e = field<long>(b, "e", source, rec.line, at);
    rec.sigma = field<long>(b, "sigma", source, rec.line, at);
    if (b.contains("e_per_g")) rec.e_per_g = field<long>(b, "e_per_g", source, rec.line, at);
    if (b.contains("sigma_per_g")) rec.sigma_per_g = field<long>(b, "sigma_per_g", source, rec.line, at);
    rec.generators = field<std::vector<std::string>>(b, "generators", source, rec.line, at);
    rec.relators = field<std::vector<std::string>>(b, "relators", source, rec.line, at);
    const json tori = field<json>(b, "tori", source, rec.line, at);
    rec.t1 = torus_record(tori, "T1", source, rec.line, at);
    rec.t2 = torus_record(tori, "T2", source, rec.line, at);
    if (b.contains("flags")) {
      const json& f = b.at("flags");
      if (f.contains("minimal")) rec.minimal = field<bool>(f, "minimal", source, rec.line, at);
      if (f.contains("spin")) rec.spin = field<bool>(f, "spin", source, rec.line, at);
      if (f.contains("h2_independent"))
        rec.h2_independent = field<bool>(f, "h2_independent", source, rec.line, at);
    }
    if (!rec.parameter && (rec.e_per_g != 0 || rec.sigma_per_g != 0))
      schema_error(source, rec.line, at + ": per-g coefficients need a 'parameter'");
    if (rec.parameter && *rec.parameter != "g")
      schema_error(source, rec.line, at + ": only the parameter 'g' is supported");
    // Words must parse against the block's generators.
    try {
      Presentation::parse(rec.generators, rec.relators);
      for (const TorusRecord* t : {&rec.t1, &rec.t2})
        for (const std::string* w : {&t->meridian, &t->pushoff_m, &t->pushoff_l})
          parse_word(*w, rec.generators);
    } catch (const Error& e) {
      schema_error(source, rec.line, at + ": " + e.what());
    }
    reg.blocks_.push_back(std::move(rec));
  }
  return reg;
}

Registry Registry::load_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot read registry file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path.string());
}

std::string_view Registry::builtin_text() { return detail::kBuiltinRegistry; }

const Registry& Registry::builtin() {
  static const Registry reg = parse(detail::kBuiltinRegistry, "<builtin>");
  return reg;
}

const BlockRecord& Registry::record(std::string_view name) const {
  for (const auto& b : blocks_)
    if (b.name == name) return b;
  throw Error(ErrorCode::unknown_block, "unknown block '" + std::string(name) + "'");
}

TelescopingTriple Registry::instantiate(std::string_view name, std::optional<int> g) const {
  const BlockRecord& rec = record(name);
  if (rec.parameter && !g)
    throw Error(ErrorCode::precondition, "block " + rec.name + " needs the parameter g");
  if (!rec.parameter && g)
    throw Error(ErrorCode::precondition, "block " + rec.name + " takes no parameter");
  if (g && *g < 0) throw Error(ErrorCode::precondition, "g must be >= 0");

  TelescopingTriple t;
  t.name = g ? rec.name + "_" + std::to_string(*g) : rec.name;
  t.e = rec.e + rec.e_per_g * g.value_or(0);
  t.sigma = rec.sigma + rec.sigma_per_g * g.value_or(0);
  t.complement = Presentation::parse(rec.generators, rec.relators);
  auto torus = [&](TorusId id, const TorusRecord& r) {
    return TorusData{id, t.complement.word(r.meridian), t.complement.word(r.pushoff_m),
                     t.complement.word(r.pushoff_l)};
  };
  t.t1 = torus(TorusId::t1, rec.t1);
  t.t2 = torus(TorusId::t2, rec.t2);
  t.minimal = rec.minimal;
  t.spin = rec.spin;
  t.h2_independent = rec.h2_independent;
  ConstructionStep step;
  step.kind = ConstructionStep::Kind::load_block;
  step.block = rec.name;
  step.g = g;
  t.provenance.push_back(step);
  return t;
}

TelescopingTriple Registry::load_block(std::string_view name, std::optional<int> g) const {
  TelescopingTriple t = instantiate(name, g);
  const ValidationReport report = validate_triple(t);
  if (!report.ok()) {
    const BlockRecord& rec = record(name);
    throw Error(ErrorCode::registry_validation,
                source_ + ":" + std::to_string(rec.line) + ": block '" + rec.name +
                    "' is not a telescoping triple: " + report.summary());
  }
  return t;
}

ManifoldState replay(const Provenance& steps, const Registry& registry) {
  using Item = std::variant<TelescopingTriple, ManifoldState>;
  std::vector<Item> stack;
  auto pop_triple = [&]() {
    if (stack.empty() || !std::holds_alternative<TelescopingTriple>(stack.back()))
      throw Error(ErrorCode::catalog_corrupt, "provenance: expected a telescoping triple on the stack");
    TelescopingTriple t = std::get<TelescopingTriple>(std::move(stack.back()));
    stack.pop_back();
    return t;
  };
  auto pop_state = [&]() {
    if (stack.empty()) throw Error(ErrorCode::catalog_corrupt, "provenance: empty stack");
    Item item = std::move(stack.back());
    stack.pop_back();
    if (auto* t = std::get_if<TelescopingTriple>(&item)) return as_state(*t);
    return std::get<ManifoldState>(std::move(item));
  };

  for (const ConstructionStep& step : steps) {
    switch (step.kind) {
      case ConstructionStep::Kind::load_block:
        stack.emplace_back(registry.load_block(step.block, step.g));
        break;
      case ConstructionStep::Kind::sum: {
        TelescopingTriple right = pop_triple();
        TelescopingTriple left = pop_triple();
        stack.emplace_back(telescoping_sum(left, right));
        break;
      }
      case ConstructionStep::Kind::surgery:
        stack.emplace_back(luttinger_surgery(pop_state(), step.surgery));
        break;
      case ConstructionStep::Kind::botany:
        stack.emplace_back(botany_family_member(pop_state(), step.botany_n, step.botany_p, step.convention));
        break;
    }
  }
  if (stack.size() != 1) throw Error(ErrorCode::catalog_corrupt, "provenance does not reduce to one manifold");
  return pop_state();
}

}  // namespace telescope
