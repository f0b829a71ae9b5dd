#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "wadefect/defect.hpp"

namespace wadefect {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Integer literals too wide for 64 bits come back as {"int_str": "<digits>"},
// the same encoding accepted on input, so no precision is lost.
Json parse_json_text(const std::string& text);
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& doc);

Json integer_to_json(const Integer& x);
Integer integer_from_json(const Json& j, const std::string& where);

struct LoadedScenario {
  Scenario scenario;
  std::string name;
  std::vector<std::string> s_names;   // "" when a subgroup carries no name
  std::vector<std::string> sc_names;
};

// Structural problems throw SchemaError; group, subgroup and module
// validation failures throw GroupError / ModuleError.
LoadedScenario load_scenario(const Json& doc, const GroupLimits& limits = {});

Json permutation_group_to_json(const std::vector<Permutation>& generators);
Json module_to_json(const GammaModule& m);
Json subgroup_to_json(const Subgroup& h, const std::string& name = {});

Json result_document(const FinAbInvariants& inv, const std::optional<std::string>& shortcut,
                     const std::map<std::string, double>& timings_ms);

}  // namespace wadefect
