#include "wadefect/defect.hpp"

#include <chrono>

#include "wadefect/errors.hpp"

namespace wadefect {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

bool is_whole(const CayleyGroup& g, const Subgroup& h) { return h.order() == g.order(); }

// im(S_nc) / (im(S_nc) ∩ (im(S^c_nc) + im(Cyc))) inside Y_G.
FinAbInvariants image_quotient(const GammaLattice& y, const std::vector<const Subgroup*>& numerator,
                               const std::vector<const Subgroup*>& denominator) {
  const CayleyGroup& g = *y.group;
  const IntMatrix relations = hermite_basis(coinvariants(y, whole_group(g)).relations);

  std::map<std::vector<Element>, IntMatrix> cache;
  auto image = [&](const Subgroup& h) -> const IntMatrix& {
    auto it = cache.find(h.elements);
    if (it == cache.end()) {
      // torsion of Y_H, pushed forward along the identity of Y
      auto gens = torsion_generators(coinvariants(y, h)).generators;
      it = cache.emplace(h.elements, IntMatrix::from_columns(gens, y.rank)).first;
    }
    return it->second;
  };

  IntMatrix top = relations;
  for (const Subgroup* h : numerator) top = hconcat(top, image(*h));
  IntMatrix bottom = relations;
  for (const Subgroup* h : denominator) bottom = hconcat(bottom, image(*h));

  const IntMatrix n1 = hermite_basis(top);
  const IntMatrix n2 = hermite_basis(bottom);
  return finite_quotient(n1, lattice_intersection(n1, n2));
}

std::vector<const Subgroup*> complement_with_cyclic(const CayleyGroup& g, const std::vector<Subgroup>& listed,
                                                    const std::vector<Subgroup>& cyclic) {
  std::vector<const Subgroup*> out;
  for (const auto& h : listed)
    if (!is_cyclic(g, h)) out.push_back(&h);
  for (const auto& h : cyclic) out.push_back(&h);
  return out;
}

void require_subgroups(const CayleyGroup& g, const std::vector<Subgroup>& list, const char* what) {
  for (std::size_t i = 0; i < list.size(); ++i)
    if (!is_subgroup(g, list[i]))
      throw GroupError(std::string(what) + "[" + std::to_string(i) + "] is not a subgroup of the group");
}

}  // namespace

void check_scenario(const Scenario& sc) {
  if (!sc.group) throw GroupError("scenario has no group");
  if (!(sc.module.group() == *sc.group)) throw ModuleError("scenario module is defined over a different group");
  require_subgroups(*sc.group, sc.s_subgroups, "S");
  require_subgroups(*sc.group, sc.sc_subgroups, "S_complement");
}

SubgroupGens local_image(const GammaLattice& y, const Subgroup& h) {
  SubgroupGens gens = torsion_generators(coinvariants(y, h));
  gens.ambient = coinvariants(y, whole_group(*y.group));
  return gens;
}

SubgroupGens local_image(const FreeCover& cover, const Subgroup& h) { return local_image(cover.lattice(), h); }

bool is_permutation_free(const GammaModule& m) {
  if (!m.relation_free()) return false;
  const CayleyGroup& g = m.group();
  const std::size_t n = m.rank();
  for (std::size_t x = 0; x < g.order(); ++x) {
    const IntMatrix& a = m.action(x);
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t ones = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (a(i, j) == 1)
          ++ones;
        else if (sgn(a(i, j)) != 0)
          return false;
      }
      if (ones != 1) return false;
      if (x != g.identity() && a(j, j) == 1) return false;
    }
  }
  return true;
}

std::optional<DefectResult> quick_vanish(const Scenario& sc) {
  const CayleyGroup& g = *sc.group;
  auto trivial = [](const char* tag) {
    DefectResult r;
    r.shortcut = tag;
    return r;
  };
  for (const auto& h : sc.sc_subgroups)
    if (is_whole(g, h)) return trivial(shortcut::complement_full_group);
  bool all_cyclic = true;
  for (const auto& h : sc.s_subgroups) all_cyclic = all_cyclic && is_cyclic(g, h);
  if (all_cyclic) return trivial(shortcut::all_cyclic_s);
  if (is_permutation_free(sc.module)) return trivial(shortcut::free_module);
  return std::nullopt;
}

Scenario reduce_to_noncyclic(const Scenario& sc) {
  Scenario out{sc.group, sc.module, {}, sc.sc_subgroups};
  for (const auto& h : sc.s_subgroups)
    if (!is_cyclic(*sc.group, h)) out.s_subgroups.push_back(h);
  return out;
}

DefectResult defect(const Scenario& sc, const DefectOptions& options) {
  const auto start = Clock::now();
  check_scenario(sc);
  const CayleyGroup& g = *sc.group;

  DefectResult result;
  for (std::size_t i = 0; i < sc.s_subgroups.size(); ++i)
    if (!is_cyclic(g, sc.s_subgroups[i])) result.s_nc_used.push_back(i);

  if (options.use_shortcuts) {
    if (auto quick = quick_vanish(sc)) {
      quick->s_nc_used = result.s_nc_used;
      quick->timings_ms["total"] = elapsed_ms(start);
      return *quick;
    }
  }

  auto t = Clock::now();
  const FreeCover cover = free_cover(sc.module);
  result.timings_ms["free_cover"] = elapsed_ms(t);

  t = Clock::now();
  std::vector<const Subgroup*> numerator;
  for (std::size_t i : result.s_nc_used) numerator.push_back(&sc.s_subgroups[i]);
  const auto cyclic = cyclic_subgroups(g);
  result.invariants = image_quotient(cover.lattice(), numerator, complement_with_cyclic(g, sc.sc_subgroups, cyclic));
  result.timings_ms["images"] = elapsed_ms(t);
  result.timings_ms["total"] = elapsed_ms(start);
  if (!result.invariants.is_finite()) throw Error("internal: defect group is infinite");
  return result;
}

FinAbInvariants ch1_torus(const GammaModule& y, const std::vector<Subgroup>& s_subgroups,
                          const std::vector<Subgroup>& sc_subgroups) {
  if (!y.relation_free()) throw PreconditionError("ch1_torus: cocharacter lattice must have no relations");
  const CayleyGroup& g = y.group();
  require_subgroups(g, s_subgroups, "S");
  require_subgroups(g, sc_subgroups, "S_complement");
  std::vector<const Subgroup*> numerator;
  for (const auto& h : s_subgroups)
    if (!is_cyclic(g, h)) numerator.push_back(&h);
  const auto cyclic = cyclic_subgroups(g);
  return image_quotient(GammaLattice::from_module(y), numerator, complement_with_cyclic(g, sc_subgroups, cyclic));
}

}  // namespace wadefect
