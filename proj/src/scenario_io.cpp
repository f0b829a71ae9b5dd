#include "wadefect/scenario_io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "wadefect/errors.hpp"

namespace wadefect {
namespace {

bool is_integer_literal(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// DOM builder that keeps the raw text of integer literals nlohmann would
// otherwise turn into doubles.
class IntegerPreservingSax : public nlohmann::json_sax<Json> {
 public:
  explicit IntegerPreservingSax(Json& root) : root_(root) {}

  bool null() override { return put(nullptr) != nullptr; }
  bool boolean(bool v) override { return put(v) != nullptr; }
  bool number_integer(number_integer_t v) override { return put(v) != nullptr; }
  bool number_unsigned(number_unsigned_t v) override { return put(v) != nullptr; }
  bool number_float(number_float_t v, const string_t& raw) override {
    if (is_integer_literal(raw)) return put(Json{{"int_str", raw}}) != nullptr;
    return put(v) != nullptr;
  }
  bool string(string_t& v) override { return put(v) != nullptr; }
  bool binary(binary_t& v) override { return put(Json::binary(v)) != nullptr; }
  bool start_object(std::size_t) override { return open(Json::object()); }
  bool key(string_t& k) override {
    if (stack_.back()->contains(k)) {
      error_ = "duplicate member \"" + k + "\"";
      return false;
    }
    key_ = k;
    return true;
  }
  bool end_object() override {
    stack_.pop_back();
    return true;
  }
  bool start_array(std::size_t) override { return open(Json::array()); }
  bool end_array() override {
    stack_.pop_back();
    return true;
  }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception& ex) override {
    error_ = ex.what();
    return false;
  }

  const std::string& error() const { return error_; }

 private:
  Json* put(Json v) {
    if (stack_.empty()) {
      root_ = std::move(v);
      return &root_;
    }
    Json& top = *stack_.back();
    if (top.is_array()) {
      top.push_back(std::move(v));
      return &top.back();
    }
    top[key_] = std::move(v);
    return &top[key_];
  }
  bool open(Json container) {
    Json* p = put(std::move(container));
    stack_.push_back(p);
    return true;
  }

  Json& root_;
  std::vector<Json*> stack_;
  std::string key_;
  std::string error_;
};

void check_members(const Json& obj, const std::string& where, const std::set<std::string>& allowed,
                   const std::set<std::string>& required) {
  if (!obj.is_object()) throw SchemaError(where + ": expected an object");
  for (const auto& [k, v] : obj.items())
    if (!allowed.count(k)) throw SchemaError(where + ": unknown member \"" + k + "\"");
  for (const auto& k : required)
    if (!obj.contains(k)) throw SchemaError(where + ": missing member \"" + k + "\"");
}

const Json& require_array(const Json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an array");
  return j;
}

std::size_t index_from_json(const Json& j, const std::string& where) {
  const Integer x = integer_from_json(j, where);
  if (sgn(x) < 0 || !x.fits_ulong_p()) throw SchemaError(where + ": expected a nonnegative index");
  return x.get_ui();
}

std::vector<std::size_t> index_list(const Json& j, const std::string& where) {
  require_array(j, where);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(index_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<IntVector> integer_rows(const Json& j, const std::string& where) {
  require_array(j, where);
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string w = where + "[" + std::to_string(i) + "]";
    require_array(j[i], w);
    IntVector row;
    for (std::size_t k = 0; k < j[i].size(); ++k) row.push_back(integer_from_json(j[i][k], w + "[" + std::to_string(k) + "]"));
    rows.push_back(std::move(row));
  }
  return rows;
}

GroupPtr load_group(const Json& j, const GroupLimits& limits) {
  check_members(j, "group", {"permutation_generators", "cayley_table"}, {});
  if (j.size() != 1) throw SchemaError("group: give exactly one of \"permutation_generators\" or \"cayley_table\"");
  if (j.contains("permutation_generators")) {
    const Json& gens = require_array(j["permutation_generators"], "group.permutation_generators");
    std::vector<Permutation> perms;
    for (std::size_t i = 0; i < gens.size(); ++i)
      perms.push_back(index_list(gens[i], "group.permutation_generators[" + std::to_string(i) + "]"));
    return std::make_shared<const CayleyGroup>(CayleyGroup::from_permutations(perms, limits));
  }
  const Json& rows = require_array(j["cayley_table"], "group.cayley_table");
  std::vector<std::vector<std::size_t>> table;
  for (std::size_t i = 0; i < rows.size(); ++i)
    table.push_back(index_list(rows[i], "group.cayley_table[" + std::to_string(i) + "]"));
  return std::make_shared<const CayleyGroup>(CayleyGroup::from_table(table, limits));
}

GammaModule load_module(const Json& j, GroupPtr group) {
  check_members(j, "module", {"generators", "relations", "action"}, {"generators", "action"});
  const std::size_t n = index_from_json(j["generators"], "module.generators");

  std::vector<IntVector> relation_columns;
  if (j.contains("relations")) relation_columns = integer_rows(j["relations"], "module.relations");
  for (std::size_t c = 0; c < relation_columns.size(); ++c)
    if (relation_columns[c].size() != n)
      throw ModuleError("module.relations[" + std::to_string(c) + "] has length " +
                        std::to_string(relation_columns[c].size()) + ", expected " + std::to_string(n));

  const Json& action = require_array(j["action"], "module.action");
  std::vector<IntMatrix> matrices;
  for (std::size_t s = 0; s < action.size(); ++s) {
    const std::string w = "module.action[" + std::to_string(s) + "]";
    auto rows = integer_rows(action[s], w);
    if (rows.size() != n) throw ModuleError(w + " must have " + std::to_string(n) + " rows");
    for (const auto& r : rows)
      if (r.size() != n) throw ModuleError(w + " must have " + std::to_string(n) + " columns");
    matrices.push_back(IntMatrix::from_rows(rows, n));
  }
  return GammaModule::create(std::move(group), n, IntMatrix::from_columns(relation_columns, n), std::move(matrices));
}

Subgroup load_subgroup(const Json& j, const CayleyGroup& g, const std::string& where, std::string& name) {
  check_members(j, where, {"elements", "generator_words", "name"}, {});
  const bool has_elements = j.contains("elements");
  if (has_elements == j.contains("generator_words"))
    throw SchemaError(where + ": give exactly one of \"elements\" or \"generator_words\"");
  name.clear();
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw SchemaError(where + ".name: expected a string");
    name = j["name"].get<std::string>();
  }
  if (has_elements) return subgroup_from_elements(g, index_list(j["elements"], where + ".elements"));
  const Json& words = require_array(j["generator_words"], where + ".generator_words");
  std::vector<Element> seed;
  for (std::size_t i = 0; i < words.size(); ++i)
    seed.push_back(g.evaluate(index_list(words[i], where + ".generator_words[" + std::to_string(i) + "]")));
  return subgroup_closure(g, seed);
}

}  // namespace

Json parse_json_text(const std::string& text) {
  Json root;
  IntegerPreservingSax sax(root);
  if (!Json::sax_parse(text, &sax)) throw SchemaError("malformed JSON: " + sax.error());
  return root;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

void write_json_file(const std::string& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << doc.dump(2) << '\n';
}

Json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(static_cast<std::int64_t>(x.get_si()));
  return Json{{"int_str", x.get_str()}};
}

Integer integer_from_json(const Json& j, const std::string& where) {
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_object() && j.size() == 1 && j.contains("int_str") && j["int_str"].is_string()) {
    const auto& s = j["int_str"].get_ref<const std::string&>();
    if (is_integer_literal(s)) return Integer(s);
  }
  throw SchemaError(where + ": expected an integer");
}

LoadedScenario load_scenario(const Json& doc, const GroupLimits& limits) {
  check_members(doc, "scenario", {"schema_version", "name", "description", "group", "module", "S", "S_complement"},
                {"group", "module", "S", "S_complement"});
  if (doc.contains("schema_version") && integer_from_json(doc["schema_version"], "schema_version") != kSchemaVersion)
    throw SchemaError("unsupported schema_version (expected " + std::to_string(kSchemaVersion) + ")");
  for (const char* k : {"name", "description"})
    if (doc.contains(k) && !doc[k].is_string()) throw SchemaError(std::string(k) + ": expected a string");
  require_array(doc["S"], "S");
  require_array(doc["S_complement"], "S_complement");

  GroupPtr group = load_group(doc["group"], limits);
  GammaModule module = load_module(doc["module"], group);
  LoadedScenario out{Scenario{group, std::move(module), {}, {}}, doc.value("name", std::string{}), {}, {}};
  std::string name;
  for (std::size_t i = 0; i < doc["S"].size(); ++i) {
    out.scenario.s_subgroups.push_back(load_subgroup(doc["S"][i], *group, "S[" + std::to_string(i) + "]", name));
    out.s_names.push_back(name);
  }
  for (std::size_t i = 0; i < doc["S_complement"].size(); ++i) {
    out.scenario.sc_subgroups.push_back(
        load_subgroup(doc["S_complement"][i], *group, "S_complement[" + std::to_string(i) + "]", name));
    out.sc_names.push_back(name);
  }
  check_scenario(out.scenario);
  return out;
}

Json permutation_group_to_json(const std::vector<Permutation>& generators) {
  return Json{{"permutation_generators", generators}};
}

Json module_to_json(const GammaModule& m) {
  Json relations = Json::array();
  for (std::size_t c = 0; c < m.relations().cols(); ++c) {
    Json col = Json::array();
    for (std::size_t r = 0; r < m.rank(); ++r) col.push_back(integer_to_json(m.relations()(r, c)));
    relations.push_back(std::move(col));
  }
  Json action = Json::array();
  for (const auto& a : m.generator_action()) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < a.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(integer_to_json(a(r, c)));
      rows.push_back(std::move(row));
    }
    action.push_back(std::move(rows));
  }
  return Json{{"generators", m.rank()}, {"relations", relations}, {"action", action}};
}

Json subgroup_to_json(const Subgroup& h, const std::string& name) {
  Json j{{"elements", h.elements}};
  if (!name.empty()) j["name"] = name;
  return j;
}

Json result_document(const FinAbInvariants& inv, const std::optional<std::string>& shortcut,
                     const std::map<std::string, double>& timings_ms) {
  Json factors = Json::array();
  for (const auto& d : inv.factors) factors.push_back(integer_to_json(d));
  Json doc{{"schema_version", kSchemaVersion},
           {"invariant_factors", factors},
           {"order", integer_to_json(inv.order())},
           {"pretty", inv.pretty()},
           {"shortcut", shortcut ? Json(*shortcut) : Json(nullptr)},
           {"timings_ms", timings_ms}};
  return doc;
}

}  // namespace wadefect
