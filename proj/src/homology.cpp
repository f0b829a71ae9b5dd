#include "wadefect/homology.hpp"

#include <string>

#include "wadefect/errors.hpp"

namespace wadefect {
namespace {

void require_subgroup(const CayleyGroup& g, const Subgroup& h) {
  if (!is_subgroup(g, h)) throw GroupError("subgroup is not a valid subgroup of the module's group");
}

// Generators of h if they really generate it, otherwise all of its elements.
std::vector<Element> generating_set(const CayleyGroup& g, const Subgroup& h) {
  if (subgroup_closure(g, h.generators).elements == h.elements) return h.generators;
  return h.elements;
}

IntMatrix coordinates_in(const IntMatrix& hermite, const IntMatrix& vectors, const char* what) {
  std::vector<IntVector> coords;
  coords.reserve(vectors.cols());
  for (std::size_t j = 0; j < vectors.cols(); ++j) {
    auto x = solve_in_hermite_basis(hermite, vectors.column(j));
    if (!x) throw Error(std::string("internal: ") + what);
    coords.push_back(std::move(*x));
  }
  return IntMatrix::from_columns(coords, hermite.cols());
}

// Columns (x - 1) e_j for x in a generating set of h.
AbelianPresentation coinvariants_of(const CayleyGroup& g, std::size_t rank, const std::vector<IntMatrix>& action,
                                    const Subgroup& h) {
  require_subgroup(g, h);
  if (action.size() != g.order()) throw ModuleError("lattice action does not cover every element");
  const auto gens = generating_set(g, h);
  IntMatrix rel(rank, rank * gens.size());
  for (std::size_t s = 0; s < gens.size(); ++s) {
    const IntMatrix& a = action[gens[s]];
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < rank; ++j) {
        Integer& dst = rel(i, s * rank + j);
        dst = a(i, j);
        if (i == j) --dst;
      }
  }
  return AbelianPresentation(rank, std::move(rel));
}

}  // namespace

FreeCover free_cover(const GammaModule& m) {
  const CayleyGroup& g = m.group();
  const std::size_t n = m.rank();
  const std::size_t big = n * g.order();

  FreeCover cover{m, big, IntMatrix(n, big), {}, {}};
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t r = 0; r < n; ++r) cover.projection(r, x * n + i) = m.action(x)(r, i);

  // x in Y  <=>  P x + R z = 0 for some z
  const IntMatrix k = kernel_basis(hconcat(cover.projection, m.relations()));
  cover.kernel_basis = hermite_basis(k.rows_range(0, big));

  const auto quotient = cokernel_invariants(m.presentation());
  if (cover.kernel_basis.cols() != big - quotient.free_rank)
    throw Error("internal: free cover kernel has rank " + std::to_string(cover.kernel_basis.cols()) + ", expected " +
                std::to_string(big - quotient.free_rank));

  const std::size_t r = cover.kernel_basis.cols();
  cover.kernel = GammaLattice{m.group_ptr(), r, {}};
  cover.kernel.action.reserve(g.order());
  for (std::size_t h = 0; h < g.order(); ++h) {
    // h (x, i) = (h x, i)
    IntMatrix moved(big, r);
    for (std::size_t x = 0; x < g.order(); ++x) {
      const std::size_t target = g.mul(h, x) * n;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < r; ++c) moved(target + i, c) = cover.kernel_basis(x * n + i, c);
    }
    cover.kernel.action.push_back(coordinates_in(cover.kernel_basis, moved, "kernel of the free cover is not stable"));
  }
  return cover;
}

AbelianPresentation coinvariants(const GammaLattice& y, const Subgroup& h) {
  return coinvariants_of(*y.group, y.rank, y.action, h);
}

FinAbInvariants tate_h_minus1(const GammaLattice& y, const Subgroup& h) {
  FinAbInvariants inv = cokernel_invariants(coinvariants(y, h));
  inv.free_rank = 0;
  return inv;
}

FinAbInvariants h1(const FreeCover& cover, const Subgroup& h) {
  FinAbInvariants inv =
      cokernel_invariants(coinvariants_of(cover.module.group(), cover.kernel.rank, cover.kernel.action, h));
  inv.free_rank = 0;
  return inv;
}

FinAbInvariants h1(const GammaModule& m, const Subgroup& h) {
  require_subgroup(m.group(), h);
  return h1(free_cover(m), h);
}

FinAbInvariants h1_bar(const GammaModule& m, const Subgroup& h, const BarComplexLimits& limits) {
  const CayleyGroup& g = m.group();
  require_subgroup(g, h);
  const std::size_t d = h.order();
  if (d > limits.max_subgroup_order)
    throw PreconditionError("h1_bar: subgroup order " + std::to_string(d) + " exceeds the bar complex cap of " +
                            std::to_string(limits.max_subgroup_order));
  const std::size_t n = m.rank();
  const IntMatrix& rel = m.relations();
  const std::size_t k = rel.cols();
  auto local = [&](Element x) {
    for (std::size_t i = 0; i < d; ++i)
      if (h.elements[i] == x) return i;
    throw Error("internal: element outside subgroup");
  };

  // C_1 = M^d, block a holds m [h_a]
  const std::size_t c1 = d * n;
  IntMatrix d1(n, c1);
  for (std::size_t a = 0; a < d; ++a) {
    const IntMatrix& inv = m.action(g.inverse(h.elements[a]));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t r = 0; r < n; ++r) d1(r, a * n + i) = inv(r, i) - (r == i ? 1 : 0);
  }
  const IntMatrix cycles_full = kernel_basis(hconcat(d1, rel));
  const IntMatrix cycles = hermite_basis(cycles_full.rows_range(0, c1));

  // boundaries of C_2 = M^{d^2}, plus the relations of M in every block of C_1
  IntMatrix bounds(c1, d * d * n + d * k);
  std::size_t col = 0;
  for (std::size_t a = 0; a < d; ++a) {
    const IntMatrix& inv = m.action(g.inverse(h.elements[a]));
    for (std::size_t b = 0; b < d; ++b) {
      const std::size_t ab = local(g.mul(h.elements[a], h.elements[b]));
      for (std::size_t i = 0; i < n; ++i, ++col) {
        for (std::size_t r = 0; r < n; ++r) bounds(b * n + r, col) += inv(r, i);
        bounds(ab * n + i, col) -= 1;
        bounds(a * n + i, col) += 1;
      }
    }
  }
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t j = 0; j < k; ++j, ++col)
      for (std::size_t r = 0; r < n; ++r) bounds(a * n + r, col) = rel(r, j);

  const IntMatrix boundary_basis = hermite_basis(bounds);
  const IntMatrix w = coordinates_in(cycles, boundary_basis, "bar complex boundaries are not cycles");
  return cokernel_invariants(AbelianPresentation(cycles.cols(), w));
}

}  // namespace wadefect
