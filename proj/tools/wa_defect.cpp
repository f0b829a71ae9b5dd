// wa_defect: weak approximation defect of a reductive group from finite Galois data.
//
// Exit codes:
//   0  success
//   1  usage, I/O, schema or lookup error
//   2  group or module validation error
//   3  oracle mismatch between the two H_1 computations
//   4  selfcheck reported a failure

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "wadefect/catalog.hpp"
#include "wadefect/defect.hpp"
#include "wadefect/scenario_io.hpp"
#include "wadefect/selfcheck.hpp"

using namespace wadefect;

namespace {

enum ExitCode { kOk = 0, kInput = 1, kValidation = 2, kOracle = 3, kSelfcheck = 4 };

GroupLimits limits_from_env() {
  GroupLimits limits;
  if (const char* cap = std::getenv("WA_DEFECT_GROUP_CAP")) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(cap, &used);
      if (used != std::string(cap).size() || v == 0) throw std::invalid_argument(cap);
      limits.order_cap = v;
    } catch (const std::exception&) {
      throw SchemaError(std::string("WA_DEFECT_GROUP_CAP must be a positive integer, got \"") + cap + "\"");
    }
  }
  return limits;
}

void emit(const Json& doc, const std::string& label, const std::string& format) {
  if (format == "json") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::cout << label << doc["pretty"].get<std::string>() << "\n";
  std::cout << "invariant factors: " << doc["invariant_factors"].dump() << "\n";
  if (!doc["shortcut"].is_null()) std::cout << "shortcut: " << doc["shortcut"].get<std::string>() << "\n";
}

void run_checks(const LoadedScenario& loaded) {
  validate(loaded.scenario.module);
  check_scenario(loaded.scenario);
  const FreeCover cover = free_cover(loaded.scenario.module);
  cover.lattice().check_group_law();
}

void run_bar_oracle(const Scenario& sc) {
  const CayleyGroup& g = *sc.group;
  const FreeCover cover = free_cover(sc.module);
  auto compare = [&](const Subgroup& h, const std::string& what) {
    const FinAbInvariants a = h1(cover, h);
    const FinAbInvariants b = h1_bar(sc.module, h);
    if (!(a == b)) throw OracleMismatch("H_1 of " + what + ": free cover gives " + a.pretty() + ", bar complex gives " + b.pretty());
  };
  compare(whole_group(g), "the full group");
  for (std::size_t i = 0; i < sc.s_subgroups.size(); ++i) compare(sc.s_subgroups[i], "S[" + std::to_string(i) + "]");
  for (std::size_t i = 0; i < sc.sc_subgroups.size(); ++i)
    compare(sc.sc_subgroups[i], "S_complement[" + std::to_string(i) + "]");
  for (const auto& c : cyclic_subgroups(g)) compare(c, "a cyclic subgroup of order " + std::to_string(c.order()));
}

std::optional<std::size_t> parse_index(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
  return std::stoul(s);
}

// "full", a subgroup name from the file, "S:i", "Sc:i" / "complement:i", or a bare index into S.
Subgroup select_subgroup(const LoadedScenario& loaded, const std::string& selector) {
  const Scenario& sc = loaded.scenario;
  if (selector == "full") return whole_group(*sc.group);
  auto pick = [&](const std::vector<Subgroup>& list, const std::string& index, const char* what) {
    const auto i = parse_index(index);
    if (!i || *i >= list.size())
      throw LookupError(std::string("subgroup selector: ") + what + " has " + std::to_string(list.size()) +
                        " entries, no index \"" + index + "\"");
    return list[*i];
  };
  if (auto i = parse_index(selector)) return pick(sc.s_subgroups, selector, "S");
  const auto colon = selector.find(':');
  if (colon != std::string::npos) {
    const std::string head = selector.substr(0, colon), tail = selector.substr(colon + 1);
    if (head == "S") return pick(sc.s_subgroups, tail, "S");
    if (head == "Sc" || head == "complement") return pick(sc.sc_subgroups, tail, "S_complement");
  }
  for (std::size_t i = 0; i < loaded.s_names.size(); ++i)
    if (loaded.s_names[i] == selector) return sc.s_subgroups[i];
  for (std::size_t i = 0; i < loaded.sc_names.size(); ++i)
    if (loaded.sc_names[i] == selector) return sc.sc_subgroups[i];
  throw LookupError("unknown subgroup selector \"" + selector +
                    "\" (use full, a subgroup name, an index into S, S:i or Sc:i)");
}

int cmd_compute(const std::string& path, const std::string& format, bool bar_oracle, bool check) {
  const LoadedScenario loaded = load_scenario(read_json_file(path), limits_from_env());
  if (check) run_checks(loaded);
  if (bar_oracle) run_bar_oracle(loaded.scenario);
  const DefectResult r = defect(loaded.scenario);
  emit(result_document(r.invariants, r.shortcut, r.timings_ms), "A_S = ", format);
  return kOk;
}

int cmd_h1(const std::string& path, const std::string& selector, const std::string& format, bool bar_oracle,
           bool check) {
  const LoadedScenario loaded = load_scenario(read_json_file(path), limits_from_env());
  if (check) run_checks(loaded);
  const Subgroup h = select_subgroup(loaded, selector);
  const FinAbInvariants inv = h1(loaded.scenario.module, h);
  if (bar_oracle) {
    const FinAbInvariants b = h1_bar(loaded.scenario.module, h);
    if (!(inv == b)) throw OracleMismatch("H_1: free cover gives " + inv.pretty() + ", bar complex gives " + b.pretty());
  }
  emit(result_document(inv, std::nullopt, {}), "H_1 = ", format);
  return kOk;
}

int cmd_catalog(const std::string& name, const std::string& write_path, bool list) {
  if (list) {
    for (const auto& e : catalog_entries()) std::cout << e.name << "  " << e.summary << "\n";
    return kOk;
  }
  if (name.empty()) throw LookupError("catalog: give an entry name or --list");
  const CatalogEntry& entry = catalog_entry(name);
  if (write_path.empty())
    std::cout << entry.document.dump(2) << "\n";
  else
    write_json_file(write_path, entry.document);
  return kOk;
}

int cmd_selfcheck(std::uint64_t seed, const std::string& format) {
  SelfcheckOptions options;
  options.seed = seed;
  const auto outcomes = run_selfcheck(options);
  bool ok = true;
  Json doc = Json::array();
  for (const auto& o : outcomes) {
    ok = ok && o.passed;
    if (format == "json")
      doc.push_back({{"name", o.name}, {"passed", o.passed}, {"detail", o.detail}});
    else
      std::cout << (o.passed ? "PASS  " : "FAIL  ") << o.name << "  " << o.detail << "\n";
  }
  if (format == "json") std::cout << doc.dump(2) << "\n";
  return ok ? kOk : kSelfcheck;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weak approximation defect of reductive groups from finite Galois data"};
  app.require_subcommand(1);

  std::string format = "text";
  bool bar_oracle = false;
  bool check = false;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--emit", format, "output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option_function<std::string>(
           "--oracle", [&](const std::string&) { bar_oracle = true; }, "recompute every H_1 with the bar complex")
        ->check(CLI::IsMember({"bar"}));
    sub->add_flag("--check", check, "run all module and scenario validations");
  };

  std::string path;
  auto* compute = app.add_subcommand("compute", "compute the defect of a scenario file");
  compute->add_option("file", path, "scenario JSON")->required();
  add_common(compute);

  std::string selector;
  auto* h1cmd = app.add_subcommand("h1", "H_1 of a subgroup with coefficients in the module");
  h1cmd->add_option("file", path, "scenario JSON")->required();
  h1cmd->add_option("--subgroup", selector, "full, a subgroup name, an index into S, S:i or Sc:i")->required();
  add_common(h1cmd);

  std::string entry, write_path;
  bool list = false;
  auto* catalog = app.add_subcommand("catalog", "print or write a shipped scenario");
  catalog->add_option("name", entry, "catalog entry");
  catalog->add_option("--write", write_path, "write the scenario to this path");
  catalog->add_flag("--list", list, "list the available entries");

  std::uint64_t seed = 1;
  auto* selfcheck = app.add_subcommand("selfcheck", "run the built-in invariant suite");
  selfcheck->add_option("--seed", seed, "seed for the random instances");
  selfcheck->add_option("--emit", format, "output format")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*compute) return cmd_compute(path, format, bar_oracle, check);
    if (*h1cmd) return cmd_h1(path, selector, format, bar_oracle, check);
    if (*catalog) return cmd_catalog(entry, write_path, list);
    if (*selfcheck) return cmd_selfcheck(seed, format);
  } catch (const OracleMismatch& e) {
    std::cerr << "oracle mismatch: " << e.what() << "\n";
    return kOracle;
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kInput;
  } catch (const LookupError& e) {
    std::cerr << "lookup error: " << e.what() << "\n";
    return kInput;
  } catch (const GroupError& e) {
    std::cerr << "group error: " << e.what() << "\n";
    return kValidation;
  } catch (const ModuleError& e) {
    std::cerr << "module error: " << e.what() << "\n";
    return kValidation;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
