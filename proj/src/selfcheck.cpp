#include "wadefect/selfcheck.hpp"

#include "wadefect/catalog.hpp"
#include "wadefect/random_instances.hpp"
#include "wadefect/smith.hpp"

namespace wadefect {
namespace {

bool is_unit(const Integer& x) { return cmpabs(x, 1UL) == 0; }

CheckOutcome snf_check(Rng& rng, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    const auto rows = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 6)(rng));
    const auto cols = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 6)(rng));
    const IntMatrix a = random_matrix(rng, rows, cols, -9, 9);
    if (auto why = smith_postcondition_failure(a); !why.empty())
      return {"smith-postconditions", false, why + " for " + to_string(a)};
  }
  return {"smith-postconditions", true, std::to_string(count) + " matrices"};
}

CheckOutcome oracle_check(Rng& rng, std::size_t count) {
  const auto names = test_group_names();
  for (std::size_t i = 0; i < count; ++i) {
    const GroupPtr g = named_group(names[i % names.size()]);
    const GammaModule m = random_module(rng, g);
    const Subgroup h = random_subgroup(rng, *g);
    const auto a = h1(m, h);
    const auto b = h1_bar(m, h);
    if (!(a == b))
      return {"h1-bar-oracle", false,
              "group " + names[i % names.size()] + ": cover gives " + a.pretty() + ", bar complex gives " + b.pretty()};
  }
  return {"h1-bar-oracle", true, std::to_string(count) + " modules"};
}

CheckOutcome catalog_check(const CatalogEntry& entry, const SelfcheckOptions& options) {
  const std::string name = "catalog:" + entry.name;
  const auto it = options.expected_override.find(entry.name);
  const FinAbInvariants& expected = it == options.expected_override.end() ? entry.expected : it->second;
  try {
    const LoadedScenario loaded = load_scenario(entry.document);
    const DefectResult with = defect(loaded.scenario);
    const DefectResult without = defect(loaded.scenario, DefectOptions{false});
    if (!(with.invariants == expected))
      return {name, false, "got " + with.invariants.pretty() + ", expected " + expected.pretty()};
    if (!(without.invariants == expected))
      return {name, false, "without shortcuts got " + without.invariants.pretty() + ", expected " + expected.pretty()};
    return {name, true, expected.pretty()};
  } catch (const std::exception& e) {
    return {name, false, e.what()};
  }
}

}  // namespace

std::string smith_postcondition_failure(const IntMatrix& a) {
  const SmithDecomposition s = smith_normal_form(a);
  if (!(s.u * a * s.v == s.d)) return "U A V != D";
  if (!is_unit(determinant(s.u))) return "U not unimodular";
  if (!is_unit(determinant(s.v))) return "V not unimodular";
  if (!(s.u * s.u_inverse).is_identity()) return "U * U^-1 != I";
  for (std::size_t i = 0; i < s.d.rows(); ++i)
    for (std::size_t j = 0; j < s.d.cols(); ++j)
      if (i != j && s.d(i, j) != 0) return "D not diagonal";
  for (std::size_t i = 0; i < s.diagonal.size(); ++i) {
    if (s.diagonal[i] != s.d(i, i)) return "diagonal list disagrees with D";
    if (sgn(s.diagonal[i]) < 0) return "negative diagonal entry";
    if (i + 1 < s.diagonal.size()) {
      const Integer& next = s.diagonal[i + 1];
      if (s.diagonal[i] == 0 ? next != 0 : next % s.diagonal[i] != 0) return "divisibility chain broken";
    }
  }
  return {};
}

std::vector<CheckOutcome> run_selfcheck(const SelfcheckOptions& options) {
  Rng rng(options.seed);
  std::vector<CheckOutcome> out;
  out.push_back(snf_check(rng, options.matrices));
  out.push_back(oracle_check(rng, options.modules));
  for (const auto& entry : catalog_entries()) out.push_back(catalog_check(entry, options));
  return out;
}

}  // namespace wadefect
