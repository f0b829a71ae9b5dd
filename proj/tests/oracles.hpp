#pragma once

// Brute-force reference computations, kept independent of the library's
// elimination routines.

#include <numeric>
#include <vector>

#include "wadefect/gamma_module.hpp"
#include "wadefect/homology.hpp"
#include "wadefect/int_matrix.hpp"

namespace oracle {

using wadefect::IntMatrix;
using wadefect::Integer;

// Laplace expansion along the first row.
inline Integer laplace_det(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, k = 0; c < n; ++c)
        if (c != j) minor(r - 1, k++) = a(r, c);
    const Integer term = a(0, j) * laplace_det(minor);
    total += (j % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// d_k = D_k / D_{k-1} where D_k is the gcd of all k x k minors.
inline std::vector<Integer> invariant_factors_from_minors(const IntMatrix& a) {
  const std::size_t m = std::min(a.rows(), a.cols());
  std::vector<Integer> out;
  Integer previous = 1;
  for (std::size_t k = 1; k <= m; ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(a.rows(), k, 0, cur, rs);
    subsets(a.cols(), k, 0, cur, cs);
    Integer g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(r[i], c[j]);
        const Integer d = laplace_det(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    if (g == 0) {
      out.resize(m, 0);
      return out;
    }
    out.push_back(g / previous);
    previous = g;
  }
  return out;
}

// Membership in the lattice spanned by the columns of a nonsingular square
// matrix, by Cramer's rule.
inline bool in_full_lattice(const IntMatrix& b, const std::vector<Integer>& v) {
  const Integer det = laplace_det(b);
  for (std::size_t i = 0; i < b.cols(); ++i) {
    IntMatrix bi = b;
    for (std::size_t r = 0; r < b.rows(); ++r) bi(r, i) = v[r];
    if (laplace_det(bi) % det != 0) return false;
  }
  return true;
}

// Calls f on every integer vector of length n with entries in [-r, r].
template <class F>
void for_each_in_box(std::size_t n, long r, F&& f) {
  std::vector<Integer> v(n, -r);
  while (true) {
    f(v);
    std::size_t i = 0;
    while (i < n && v[i] == r) v[i++] = -r;
    if (i == n) return;
    ++v[i];
  }
}

// Relation-free module carrying the action of a free cover's kernel lattice.
inline wadefect::GammaModule module_of_lattice(const wadefect::GammaLattice& y) {
  std::vector<IntMatrix> act;
  for (auto s : y.group->generator_indices()) act.push_back(y.action[s]);
  return wadefect::GammaModule::create(y.group, y.rank, IntMatrix(y.rank, 0), std::move(act));
}

}  // namespace oracle
