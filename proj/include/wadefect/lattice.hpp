#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wadefect/int_matrix.hpp"

namespace wadefect {

// Isomorphism type of a finitely generated abelian group:
// Z/d_1 x ... x Z/d_k x Z^free_rank with 1 < d_1 | d_2 | ... | d_k.
struct FinAbInvariants {
  std::vector<Integer> factors;
  std::size_t free_rank = 0;

  // Accepts any list of cyclic orders (1 and 0 allowed) and returns the canonical form.
  static FinAbInvariants from_cyclic_orders(const std::vector<Integer>& orders);

  bool is_trivial() const { return factors.empty() && free_rank == 0; }
  bool is_finite() const { return free_rank == 0; }
  Integer order() const;  // product of factors; requires finiteness
  std::string pretty() const;

  friend bool operator==(const FinAbInvariants&, const FinAbInvariants&) = default;
};

// Z^ambient_rank modulo the span of the columns of relations.
struct AbelianPresentation {
  std::size_t ambient_rank = 0;
  IntMatrix relations;  // ambient_rank rows

  AbelianPresentation() = default;
  AbelianPresentation(std::size_t n, IntMatrix rel);
};

// Subgroup of an abelian presentation given by generators in ambient coordinates.
struct SubgroupGens {
  AbelianPresentation ambient;
  std::vector<IntVector> generators;

  IntMatrix as_matrix() const;
};

FinAbInvariants cokernel_invariants(const AbelianPresentation& p);
SubgroupGens torsion_generators(const AbelianPresentation& p);

// Column Hermite normal form of the lattice spanned by the columns of b:
// pivot rows strictly increase from column to column, each pivot is positive,
// entries to the left of a pivot in its row lie in [0, pivot). Zero columns
// are dropped, so the result is a basis and equal lattices give equal matrices.
IntMatrix hermite_basis(const IntMatrix& b);

// Saturated basis of {x : a x = 0}, in Hermite form.
IntMatrix kernel_basis(const IntMatrix& a);

IntMatrix lattice_sum(const IntMatrix& b1, const IntMatrix& b2);
IntMatrix lattice_intersection(const IntMatrix& b1, const IntMatrix& b2);

bool membership(const IntVector& v, const IntMatrix& b);
bool contains_lattice(const IntMatrix& outer, const IntMatrix& inner);

// Coordinates of v in a basis already in Hermite form (as returned by hermite_basis).
std::optional<IntVector> solve_in_hermite_basis(const IntMatrix& hermite, const IntVector& v);

// span(num) / span(den) for den inside num and of equal rank.
FinAbInvariants finite_quotient(const IntMatrix& num, const IntMatrix& den);

}  // namespace wadefect
