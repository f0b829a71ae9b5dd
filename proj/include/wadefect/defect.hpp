#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wadefect/gamma_module.hpp"
#include "wadefect/homology.hpp"

namespace wadefect {

// Finite data describing A_S(G): the splitting group, M = pi_1^alg(G), one
// decomposition group per place of S, and the non-cyclic decomposition groups
// known to occur outside S. Every cyclic subgroup is adjoined to the latter
// automatically.
struct Scenario {
  GroupPtr group;
  GammaModule module;
  std::vector<Subgroup> s_subgroups;
  std::vector<Subgroup> sc_subgroups;
};

void check_scenario(const Scenario& sc);

namespace shortcut {
inline constexpr const char* complement_full_group = "complement-full-group";
inline constexpr const char* all_cyclic_s = "all-cyclic-S";
inline constexpr const char* free_module = "free-module";
}  // namespace shortcut

struct DefectResult {
  FinAbInvariants invariants;
  std::vector<std::size_t> s_nc_used;
  std::optional<std::string> shortcut;
  std::map<std::string, double> timings_ms;
};

struct DefectOptions {
  bool use_shortcuts = true;
};

// Image of the torsion of Y_H in Y_G, as vectors in Y-coordinates.
SubgroupGens local_image(const GammaLattice& y, const Subgroup& h);
SubgroupGens local_image(const FreeCover& cover, const Subgroup& h);

DefectResult defect(const Scenario& sc, const DefectOptions& options = {});

// Ch^1_S(B) of a torus with cocharacter lattice y (no relations allowed).
FinAbInvariants ch1_torus(const GammaModule& y, const std::vector<Subgroup>& s_subgroups,
                          const std::vector<Subgroup>& sc_subgroups);

std::optional<DefectResult> quick_vanish(const Scenario& sc);

Scenario reduce_to_noncyclic(const Scenario& sc);

// Relation-free and every element permutes the basis, freely when nontrivial.
bool is_permutation_free(const GammaModule& m);

}  // namespace wadefect
