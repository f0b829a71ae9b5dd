#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "wadefect/defect.hpp"

namespace wadefect {

using Rng = std::mt19937_64;

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi);

// Random unimodular matrix and its inverse, built from elementary operations.
std::pair<IntMatrix, IntMatrix> random_unimodular(Rng& rng, std::size_t n, std::size_t steps);

Subgroup random_subgroup(Rng& rng, const CayleyGroup& g);

struct RandomModuleOptions {
  std::size_t max_rank = 4;
  long relation_bound = 4;  // relation entries stay in [-bound, bound]
};

// Direct sum of small permutation, sign and augmentation pieces, in scrambled
// coordinates, optionally modulo a random stable sublattice.
GammaModule random_module(Rng& rng, GroupPtr g, const RandomModuleOptions& options = {});

struct RandomScenarioOptions {
  std::size_t max_module_rank = 4;
  std::size_t max_s = 3;
  std::size_t max_sc = 2;
};

Scenario random_scenario(Rng& rng, const RandomScenarioOptions& options = {});

}  // namespace wadefect
