#pragma once

#include <vector>

#include "wadefect/int_matrix.hpp"

namespace wadefect {

// U * A * V == D with U, V unimodular and D diagonal, d_1 | d_2 | ... .
// u_inverse: columns i with d_i > 1 generate the torsion of the cokernel.
struct SmithDecomposition {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
  IntMatrix u_inverse;
  std::vector<Integer> diagonal;  // length min(rows, cols), nonnegative

  std::size_t rank() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

// Only D and U^-1 (u and v left empty); enough to read off torsion generators.
SmithDecomposition smith_left(const IntMatrix& a);

// Diagonal only; skips the transform bookkeeping.
std::vector<Integer> smith_diagonal(const IntMatrix& a);

std::size_t matrix_rank(const IntMatrix& a);

}  // namespace wadefect
