#include "wadefect/catalog.hpp"

#include <array>

#include "wadefect/gamma_module.hpp"

namespace wadefect {
namespace {

Permutation cycle(std::size_t n) {
  Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = (i + 1) % n;
  return p;
}

// Left multiplications by i and j on {±1, ±i, ±j, ±k}; element u + 4s is (-1)^s u.
std::vector<Permutation> quaternion_generators() {
  // unit product table: {sign, unit} for 1, i, j, k
  static constexpr std::array<std::array<std::array<int, 2>, 4>, 4> mul{{
      {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
      {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
      {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
      {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
  }};
  auto left = [&](std::size_t unit) {
    Permutation p(8);
    for (std::size_t x = 0; x < 8; ++x) {
      const std::size_t u = x % 4, s = x / 4;
      const auto& prod = mul[unit][u];
      p[x] = static_cast<std::size_t>(prod[1]) + 4 * ((s + static_cast<std::size_t>(prod[0])) % 2);
    }
    return p;
  };
  return {left(1), left(2)};
}

const std::vector<Permutation> kKleinGenerators{{1, 0, 3, 2}, {2, 3, 0, 1}};

Json whole_by_words(const std::string& name) {
  return Json{{"generator_words", Json::array({Json::array({0}), Json::array({1})})}, {"name", name}};
}

Json cyclic_by_word(std::size_t generator, const std::string& name) {
  return Json{{"generator_words", Json::array({Json::array({generator})})}, {"name", name}};
}

Json klein_document(const std::string& name, const std::string& description, const GammaModule& module, Json s,
                    Json sc) {
  return Json{{"schema_version", kSchemaVersion},
              {"name", name},
              {"description", description},
              {"group", permutation_group_to_json(kKleinGenerators)},
              {"module", module_to_json(module)},
              {"S", std::move(s)},
              {"S_complement", std::move(sc)}};
}

std::vector<CatalogEntry> build_catalog() {
  const GroupPtr klein = named_group("klein");
  const GammaModule norm_one = norm_one_module(klein);
  const GammaModule regular = induced_module(klein, trivial_subgroup(*klein));
  const GammaModule cosets = induced_module(klein, subgroup_closure(*klein, {klein->generator_indices()[0]}));

  // F_p(t)(sqrt t, sqrt(t^2-1)) / F_p(t), p = 3 mod 4: the places t and t+1
  // have decomposition group the whole Klein group, every other place a cyclic one.
  std::vector<CatalogEntry> out;
  out.push_back({"klein-norm-one-both-places",
                 "norm one torus of a biquadratic extension, S contains both places with full decomposition group",
                 klein_document("klein-norm-one-both-places",
                                "Norm-one torus over F_p(t) split by F_p(sqrt(t), sqrt(t^2-1)), p = 3 mod 4; "
                                "S = {t, t+1}.",
                                norm_one, Json::array({whole_by_words("t"), whole_by_words("t+1")}), Json::array()),
                 FinAbInvariants{{Integer(2)}, 0}});
  out.push_back({"klein-norm-one-one-place",
                 "same torus, S contains t only; the place t+1 lies outside S",
                 klein_document("klein-norm-one-one-place",
                                "Norm-one torus, S = {t}; t+1 is in the complement with full decomposition group.",
                                norm_one, Json::array({whole_by_words("t")}), Json::array({whole_by_words("t+1")})),
                 FinAbInvariants{}});
  out.push_back({"klein-norm-one-complement-full",
                 "same torus, both full-decomposition places lie outside S",
                 klein_document("klein-norm-one-complement-full",
                                "Norm-one torus, S = {t-1} (cyclic decomposition group); t and t+1 are both "
                                "in the complement.",
                                norm_one, Json::array({cyclic_by_word(0, "t-1")}),
                                Json::array({whole_by_words("t"), whole_by_words("t+1")})),
                 FinAbInvariants{}});
  out.push_back({"quasi-trivial-free",
                 "induced torus R_{L/K} G_m over the Klein group, cocharacters Z[G]",
                 klein_document("quasi-trivial-free", "Quasi-trivial torus with free cocharacter module Z[G].", regular,
                                Json::array({whole_by_words("t"), whole_by_words("t+1")}), Json::array()),
                 FinAbInvariants{}});
  out.push_back({"perm-module-coset",
                 "permutation module Z[G/H] for H of order 2 in the Klein group",
                 klein_document("perm-module-coset",
                                "Quasi-trivial torus R_{K'/K} G_m, K' the fixed field of an order-2 subgroup.", cosets,
                                Json::array({whole_by_words("t")}), Json::array()),
                 FinAbInvariants{}});
  return out;
}

}  // namespace

std::vector<Permutation> named_group_generators(const std::string& name) {
  if (name == "klein") return kKleinGenerators;
  if (name == "S3") return {{1, 2, 0}, {1, 0, 2}};
  if (name == "D4") return {{1, 2, 3, 0}, {0, 3, 2, 1}};
  if (name == "Q8") return quaternion_generators();
  if (name == "A4") return {{1, 2, 0, 3}, {0, 2, 3, 1}};
  if (name.size() >= 2 && name[0] == 'C') {
    try {
      std::size_t used = 0;
      const unsigned long n = std::stoul(name.substr(1), &used);
      if (used == name.size() - 1 && n >= 1 && n <= 64) return {cycle(n)};
    } catch (const std::exception&) {
    }
  }
  throw LookupError("unknown group name \"" + name + "\" (known: C1..C64, klein, S3, D4, Q8, A4)");
}

GroupPtr named_group(const std::string& name) {
  return std::make_shared<const CayleyGroup>(CayleyGroup::from_permutations(named_group_generators(name)));
}

std::vector<std::string> test_group_names() {
  std::vector<std::string> names;
  for (int n = 1; n <= 12; ++n) names.push_back("C" + std::to_string(n));
  for (const char* s : {"klein", "S3", "D4", "Q8", "A4"}) names.emplace_back(s);
  return names;
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& e : catalog_entries()) names.push_back(e.name);
  return names;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return e;
  std::string known;
  for (const auto& n : catalog_names()) known += (known.empty() ? "" : ", ") + n;
  throw LookupError("unknown catalog entry \"" + name + "\"; available: " + known);
}

}  // namespace wadefect
