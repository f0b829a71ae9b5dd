#pragma once

#include <vector>

#include "wadefect/gamma_module.hpp"
#include "wadefect/lattice.hpp"

namespace wadefect {

// 0 -> Y -> Z[G]^n -> M -> 0.
//
// Z[G]^n has basis (g, i) at position g * n + i (canonical element index
// first, generator second); (g, i) maps to g * m_i. kernel_basis holds a basis
// of Y in Hermite form and lattice().action[g] is the matrix of g in that basis.
struct FreeCover {
  GammaModule module;
  std::size_t cover_rank = 0;
  IntMatrix projection;    // n x cover_rank
  IntMatrix kernel_basis;  // cover_rank x rank(Y)
  GammaLattice kernel;

  const GammaLattice& lattice() const { return kernel; }
};

FreeCover free_cover(const GammaModule& m);

// Y_H = Y / span{(h - 1) y}, in the coordinates of Y's basis.
AbelianPresentation coinvariants(const GammaLattice& y, const Subgroup& h);

// Tate H^{-1}(H, Y) of a lattice: the torsion of the coinvariants.
FinAbInvariants tate_h_minus1(const GammaLattice& y, const Subgroup& h);

// H_1(H, M) as the torsion of Y_H for the free cover of M.
FinAbInvariants h1(const GammaModule& m, const Subgroup& h);
FinAbInvariants h1(const FreeCover& cover, const Subgroup& h);

struct BarComplexLimits {
  std::size_t max_subgroup_order = 64;
};

// H_1(H, M) straight from the inhomogeneous bar complex
//   d(m [g1|g2]) = g1^{-1} m [g2] - m [g1 g2] + m [g1],   d(m [g]) = g^{-1} m - m,
// with chain groups taken modulo the relations of M.
FinAbInvariants h1_bar(const GammaModule& m, const Subgroup& h, const BarComplexLimits& limits = {});

}  // namespace wadefect
