#include "wadefect/random_instances.hpp"

#include <algorithm>

#include "wadefect/catalog.hpp"

namespace wadefect {
namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

std::size_t pick(Rng& rng, std::size_t n) { return static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1)); }

bool within(const IntMatrix& m, long bound) {
  for (const auto& x : m.entries())
    if (cmpabs(x, static_cast<unsigned long>(bound)) > 0) return false;
  return true;
}

}  // namespace

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(rng, lo, hi);
  return m;
}

std::pair<IntMatrix, IntMatrix> random_unimodular(Rng& rng, std::size_t n, std::size_t steps) {
  IntMatrix p = IntMatrix::identity(n);
  IntMatrix p_inverse = IntMatrix::identity(n);
  if (n < 2) return {p, p_inverse};
  for (std::size_t s = 0; s < steps; ++s) {
    const std::size_t i = pick(rng, n);
    std::size_t j = pick(rng, n - 1);
    if (j >= i) ++j;
    const Integer c = uniform(rng, 0, 1) ? 1 : -1;
    // p <- (I + c e_i e_j^T) p,  p_inverse <- p_inverse (I - c e_i e_j^T)
    p.add_row_multiple(i, j, c);
    p_inverse.add_column_multiple(j, i, -c);
  }
  return {p, p_inverse};
}

Subgroup random_subgroup(Rng& rng, const CayleyGroup& g) {
  const auto subs = all_subgroups(g);
  return subs[pick(rng, subs.size())];
}

GammaModule random_module(Rng& rng, GroupPtr g, const RandomModuleOptions& options) {
  const auto subs = all_subgroups(*g);
  const std::size_t target = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(options.max_rank)));

  std::optional<GammaModule> sum;
  std::size_t rank = 0;
  while (rank < target) {
    const std::size_t room = target - rank;
    std::vector<GammaModule> pieces{trivial_module(g, 1)};
    for (const auto& h : subs) {
      const std::size_t index = g->order() / h.order();
      if (index == 2) pieces.push_back(character_module(g, h));
      if (index >= 2 && index <= room) pieces.push_back(induced_module(g, h));
    }
    if (g->order() > 1 && g->order() - 1 <= room) pieces.push_back(norm_one_module(g));
    GammaModule piece = pieces[pick(rng, pieces.size())];
    rank += piece.rank();
    sum = sum ? direct_sum(*sum, piece) : piece;
  }

  const auto [p, p_inverse] = random_unimodular(rng, sum->rank(), 2 * sum->rank());
  GammaModule scrambled = change_basis(*sum, p, p_inverse);
  if (uniform(rng, 0, 2) == 0) return scrambled;

  const std::size_t n = scrambled.rank();
  for (int attempt = 0; attempt < 20; ++attempt) {
    IntMatrix rel(n, 0);
    const std::size_t seeds = static_cast<std::size_t>(uniform(rng, 1, 2));
    for (std::size_t s = 0; s < seeds; ++s) {
      const IntMatrix v = random_matrix(rng, n, 1, -2, 2);
      for (std::size_t x = 0; x < g->order(); ++x) rel = hconcat(rel, scrambled.action(x) * v);
    }
    if (uniform(rng, 0, 2) == 0) {
      IntMatrix scaled = IntMatrix::identity(n);
      const long m = uniform(rng, 2, 4);
      for (std::size_t i = 0; i < n; ++i) scaled(i, i) = m;
      rel = hconcat(rel, scaled);
    }
    if (rel.is_zero() || !within(rel, options.relation_bound)) continue;
    return GammaModule::create(g, n, std::move(rel), scrambled.generator_action());
  }
  return scrambled;
}

Scenario random_scenario(Rng& rng, const RandomScenarioOptions& options) {
  // half of the draws use a non-cyclic group
  const auto names = test_group_names();
  const std::vector<std::string> noncyclic_groups{"klein", "S3", "D4", "Q8", "A4"};
  GroupPtr g = named_group(uniform(rng, 0, 1) ? noncyclic_groups[pick(rng, noncyclic_groups.size())]
                                              : names[pick(rng, names.size())]);
  const auto subs = all_subgroups(*g);
  std::vector<Subgroup> noncyclic;
  for (const auto& h : subs)
    if (!is_cyclic(*g, h)) noncyclic.push_back(h);

  GammaModule module = uniform(rng, 0, 2) == 0 && g->order() > 1
                           ? norm_one_module(g)
                           : random_module(rng, g, RandomModuleOptions{options.max_module_rank, 4});
  Scenario sc{g, std::move(module), {}, {}};
  const std::size_t ns = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(options.max_s)));
  for (std::size_t i = 0; i < ns; ++i) {
    const bool favour = !noncyclic.empty() && uniform(rng, 0, 3) != 0;
    sc.s_subgroups.push_back(favour ? noncyclic[pick(rng, noncyclic.size())] : subs[pick(rng, subs.size())]);
  }
  const std::size_t nsc = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(options.max_sc)));
  for (std::size_t i = 0; i < nsc; ++i) {
    Subgroup h = subs[pick(rng, subs.size())];
    // the whole group in the complement is usually redrawn
    if (h.order() == g->order() && uniform(rng, 0, 3) != 0) h = subs[pick(rng, subs.size())];
    sc.sc_subgroups.push_back(std::move(h));
  }
  return sc;
}

}  // namespace wadefect
