#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "wadefect/catalog.hpp"
#include "wadefect/errors.hpp"
#include "wadefect/scenario_io.hpp"

using namespace wadefect;

namespace {

Json klein_doc() { return catalog_entry("klein-norm-one-both-places").document; }

Json strip_timings(Json j) {
  j.erase("timings_ms");
  return j;
}

Json result_of(const Json& doc) {
  const auto r = defect(load_scenario(doc).scenario);
  return result_document(r.invariants, r.shortcut, r.timings_ms);
}

}  // namespace

TEST_CASE("unknown members are rejected") {
  Json d = klein_doc();
  d["extra"] = 1;
  CHECK_THROWS_AS(load_scenario(d), SchemaError);
  d = klein_doc();
  d["module"]["extra"] = 1;
  CHECK_THROWS_AS(load_scenario(d), SchemaError);
  d = klein_doc();
  d["group"]["extra"] = 1;
  CHECK_THROWS_AS(load_scenario(d), SchemaError);
  d = klein_doc();
  d["S"][0]["extra"] = 1;
  CHECK_THROWS_AS(load_scenario(d), SchemaError);
}

TEST_CASE("missing or conflicting members are rejected") {
  for (const char* k : {"group", "module", "S", "S_complement"}) {
    Json d = klein_doc();
    d.erase(k);
    CHECK_THROWS_AS(load_scenario(d), SchemaError);
  }
  Json d = klein_doc();
  d["module"].erase("action");
  CHECK_THROWS_AS(load_scenario(d), SchemaError);
  d = klein_doc();
  d["S"][0]["elements"] = Json::array({0});
  CHECK_THROWS_AS(load_scenario(d), SchemaError);
  d = klein_doc();
  d["group"]["cayley_table"] = Json::array({Json::array({0})});
  CHECK_THROWS_AS(load_scenario(d), SchemaError);
  d = klein_doc();
  d["schema_version"] = 2;
  CHECK_THROWS_AS(load_scenario(d), SchemaError);
}

TEST_CASE("non-integer entries are rejected") {
  for (const Json& bad : {Json(1.5), Json("1"), Json(true), Json(nullptr), Json::array()}) {
    Json d = klein_doc();
    d["module"]["action"][0][0][0] = bad;
    CHECK_THROWS_AS(load_scenario(d), SchemaError);
  }
  Json d = klein_doc();
  d["module"]["generators"] = -1;
  CHECK_THROWS_AS(load_scenario(d), SchemaError);
  CHECK_THROWS_AS(load_scenario(parse_json_text(R"({"group": {"permutation_generators": [[1.0, 0]]},
    "module": {"generators": 0, "action": [[]]}, "S": [], "S_complement": []})")),
                  SchemaError);
}

TEST_CASE("semantic errors map to group and module errors") {
  Json d = klein_doc();
  d["module"]["action"][0] = Json::array({Json::array({1, 0, 0}), Json::array({0, 1, 0}), Json::array({0, 0, 2})});
  CHECK_THROWS_AS(load_scenario(d), ModuleError);
  d = klein_doc();
  d["module"]["action"].erase(1);
  CHECK_THROWS_AS(load_scenario(d), ModuleError);
  d = klein_doc();
  d["group"]["permutation_generators"][0] = Json::array({0, 0, 1, 2});
  CHECK_THROWS_AS(load_scenario(d), GroupError);
  d = klein_doc();
  d["S"][0] = Json{{"elements", Json::array({0, 1, 2})}};
  CHECK_THROWS_AS(load_scenario(d), GroupError);
  d = klein_doc();
  d["S"][0] = Json{{"generator_words", Json::array({Json::array({5})})}};
  CHECK_THROWS_AS(load_scenario(d), GroupError);
  CHECK_THROWS_AS(load_scenario(klein_doc(), GroupLimits{3, 512}), GroupError);
}

TEST_CASE("malformed JSON and duplicate members") {
  CHECK_THROWS_AS(parse_json_text("{"), SchemaError);
  CHECK_THROWS_AS(parse_json_text(R"({"a": 1, "a": 2})"), SchemaError);
  CHECK_NOTHROW(parse_json_text(R"({"a": {"b": 1}, "c": {"b": 2}})"));
}

TEST_CASE("wide integer literals survive parsing") {
  const Json j = parse_json_text(R"([123456789012345678901234567890, -98765432109876543210, 7])");
  CHECK(j[0] == Json{{"int_str", "123456789012345678901234567890"}});
  CHECK(integer_from_json(j[0], "x") == Integer("123456789012345678901234567890"));
  CHECK(integer_from_json(j[1], "x") == Integer("-98765432109876543210"));
  CHECK(integer_from_json(j[2], "x") == 7);
  CHECK(integer_from_json(Json{{"int_str", "-5"}}, "x") == -5);
  CHECK_THROWS_AS(integer_from_json(Json{{"int_str", "5x"}}, "x"), SchemaError);
  const Integer big("340282366920938463463374607431768211456");
  CHECK(integer_from_json(integer_to_json(big), "x") == big);
  CHECK(integer_to_json(Integer(42)) == Json(42));
}

TEST_CASE("relations beyond 64 bits") {
  // C2 acting trivially on Z / 2^70
  const std::string text = R"({"group": {"permutation_generators": [[1, 0]]},
    "module": {"generators": 1, "relations": [[1180591620717411303424]], "action": [[[1]]]},
    "S": [{"elements": [0, 1]}], "S_complement": []})";
  const auto loaded = load_scenario(parse_json_text(text));
  CHECK(h1(loaded.scenario.module, whole_group(*loaded.scenario.group)).factors == std::vector<Integer>{2});
  CHECK(module_to_json(loaded.scenario.module)["relations"][0][0] ==
        Json{{"int_str", "1180591620717411303424"}});
}

TEST_CASE("cayley table input keeps its indexing") {
  // Klein group as a table, identity at index 0, all elements as generators
  const std::string text = R"({"group": {"cayley_table": [[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]]},
    "module": {"generators": 1, "action": [[[1]], [[1]], [[1]], [[1]]]},
    "S": [{"elements": [0, 1, 2, 3], "name": "full"}], "S_complement": [{"elements": [0, 1]}]})";
  const auto loaded = load_scenario(parse_json_text(text));
  CHECK(loaded.scenario.group->order() == 4);
  CHECK(loaded.s_names == std::vector<std::string>{"full"});
  CHECK(loaded.sc_names == std::vector<std::string>{""});
  CHECK(h1(loaded.scenario.module, loaded.scenario.s_subgroups[0]).factors == std::vector<Integer>{2, 2});
}

TEST_CASE("round trip through a file") {
  const auto dir = std::filesystem::temp_directory_path() / "wa_defect_io_test";
  std::filesystem::create_directories(dir);
  for (const auto& e : catalog_entries()) {
    const auto path = (dir / (e.name + ".json")).string();
    write_json_file(path, e.document);
    const Json reread = read_json_file(path);
    CHECK(reread == e.document);
    CHECK(strip_timings(result_of(reread)).dump() == strip_timings(result_of(e.document)).dump());
  }
  std::filesystem::remove_all(dir);
  CHECK_THROWS_AS(read_json_file((dir / "missing.json").string()), SchemaError);
}

TEST_CASE("result document") {
  FinAbInvariants inv{{Integer(2), Integer(4)}, 0};
  const Json r = result_document(inv, std::string("free-module"), {{"total", 1.5}});
  CHECK(r["invariant_factors"] == Json::array({2, 4}));
  CHECK(r["order"] == 8);
  CHECK(r["pretty"] == "Z/2 x Z/4");
  CHECK(r["shortcut"] == "free-module");
  CHECK(r["schema_version"] == 1);
  CHECK(result_document(FinAbInvariants{}, std::nullopt, {})["order"] == 1);
  CHECK(result_document(FinAbInvariants{}, std::nullopt, {})["shortcut"].is_null());
}

TEST_CASE("catalog lookup") {
  CHECK(catalog_names().size() == 5);
  try {
    catalog_entry("nope");
    FAIL("expected LookupError");
  } catch (const LookupError& e) {
    CHECK(std::string(e.what()).find("quasi-trivial-free") != std::string::npos);
  }
  const Json d = catalog_entry("klein-norm-one-both-places").document;
  CHECK(d["group"]["permutation_generators"].size() == 2);
  CHECK(d["S"].size() == 2);
  CHECK(d["S_complement"].empty());
}
