#include "wadefect/lattice.hpp"

#include <sstream>

#include "wadefect/errors.hpp"
#include "wadefect/smith.hpp"

namespace wadefect {

FinAbInvariants FinAbInvariants::from_cyclic_orders(const std::vector<Integer>& orders) {
  IntMatrix d(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) d(i, i) = orders[i];
  FinAbInvariants out;
  for (const auto& x : smith_diagonal(d)) {
    if (sgn(x) == 0)
      ++out.free_rank;
    else if (x != 1)
      out.factors.push_back(x);
  }
  return out;
}

Integer FinAbInvariants::order() const {
  if (free_rank != 0) throw PreconditionError("order of an infinite abelian group");
  Integer n = 1;
  for (const auto& d : factors) n *= d;
  return n;
}

std::string FinAbInvariants::pretty() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& d : factors) {
    os << (first ? "" : " x ") << "Z/" << d;
    first = false;
  }
  if (free_rank > 0) {
    os << (first ? "" : " x ") << "Z";
    if (free_rank > 1) os << '^' << free_rank;
  }
  return os.str();
}

AbelianPresentation::AbelianPresentation(std::size_t n, IntMatrix rel)
    : ambient_rank(n), relations(std::move(rel)) {
  if (relations.rows() != ambient_rank) {
    if (relations.rows() == 0 && relations.cols() == 0)
      relations = IntMatrix(ambient_rank, 0);
    else
      throw DimensionError("relation matrix row count differs from ambient rank");
  }
}

IntMatrix SubgroupGens::as_matrix() const {
  return IntMatrix::from_columns(generators, ambient.ambient_rank);
}

FinAbInvariants cokernel_invariants(const AbelianPresentation& p) {
  FinAbInvariants out;
  std::size_t rank = 0;
  if (p.relations.cols() > 0 && p.ambient_rank > 0) {
    for (const auto& x : smith_diagonal(p.relations)) {
      if (sgn(x) == 0) continue;
      ++rank;
      if (x != 1) out.factors.push_back(x);
    }
  }
  out.free_rank = p.ambient_rank - rank;
  return out;
}

SubgroupGens torsion_generators(const AbelianPresentation& p) {
  SubgroupGens out{p, {}};
  if (p.relations.cols() == 0 || p.ambient_rank == 0) return out;
  const auto snf = smith_left(p.relations);
  for (std::size_t i = 0; i < snf.diagonal.size(); ++i) {
    const Integer& d = snf.diagonal[i];
    if (sgn(d) != 0 && d != 1) out.generators.push_back(snf.u_inverse.column(i));
  }
  return out;
}

IntMatrix hermite_basis(const IntMatrix& b) {
  const std::size_t n = b.rows();
  // zero columns are dropped up front
  std::vector<IntVector> cols;
  for (std::size_t j = 0; j < b.cols(); ++j) {
    IntVector c = b.column(j);
    bool zero = true;
    for (const auto& x : c)
      if (sgn(x) != 0) {
        zero = false;
        break;
      }
    if (!zero) cols.push_back(std::move(c));
  }
  IntMatrix w = IntMatrix::from_columns(cols, n);
  const std::size_t m = w.cols();

  std::size_t r = 0;
  Integer q;
  for (std::size_t i = 0; i < n && r < m; ++i) {
    while (true) {
      std::size_t best = m;
      for (std::size_t j = r; j < m; ++j) {
        if (sgn(w(i, j)) != 0 && (best == m || cmpabs(w(i, j), w(i, best)) < 0)) best = j;
      }
      if (best == m) break;
      w.swap_columns(r, best);
      bool done = true;
      for (std::size_t j = r + 1; j < m; ++j) {
        if (sgn(w(i, j)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), w(i, j).get_mpz_t(), w(i, r).get_mpz_t());
        w.add_column_multiple(j, r, -q);
        if (sgn(w(i, j)) != 0) done = false;
      }
      if (done) break;
    }
    if (r < m && sgn(w(i, r)) != 0) {
      if (sgn(w(i, r)) < 0) w.negate_column(r);
      for (std::size_t k = 0; k < r; ++k) {
        mpz_fdiv_q(q.get_mpz_t(), w(i, k).get_mpz_t(), w(i, r).get_mpz_t());
        w.add_column_multiple(k, r, -q);
      }
      ++r;
    }
  }
  return w.columns(0, r);
}

IntMatrix kernel_basis(const IntMatrix& a) {
  const std::size_t n = a.cols();
  if (a.rows() == 0) return IntMatrix::identity(n);
  if (n == 0) return IntMatrix(0, 0);
  const auto snf = smith_normal_form(a);
  const std::size_t r = snf.rank();
  return hermite_basis(snf.v.columns(r, n - r));
}

IntMatrix lattice_sum(const IntMatrix& b1, const IntMatrix& b2) {
  if (b1.rows() != b2.rows()) throw DimensionError("lattice_sum: ambient dimensions differ");
  return hermite_basis(hconcat(b1, b2));
}

IntMatrix lattice_intersection(const IntMatrix& b1, const IntMatrix& b2) {
  if (b1.rows() != b2.rows()) throw DimensionError("lattice_intersection: ambient dimensions differ");
  const IntMatrix h1 = hermite_basis(b1);
  const IntMatrix h2 = hermite_basis(b2);
  if (h1.cols() == 0 || h2.cols() == 0) return IntMatrix(b1.rows(), 0);
  IntMatrix neg2(h2.rows(), h2.cols());
  for (std::size_t i = 0; i < h2.rows(); ++i)
    for (std::size_t j = 0; j < h2.cols(); ++j) neg2(i, j) = -h2(i, j);
  const IntMatrix k = kernel_basis(hconcat(h1, neg2));
  return hermite_basis(h1 * k.rows_range(0, h1.cols()));
}

std::optional<IntVector> solve_in_hermite_basis(const IntMatrix& h, const IntVector& v) {
  if (v.size() != h.rows()) throw DimensionError("vector length differs from ambient rank");
  IntVector x(h.cols());
  std::vector<std::size_t> support;  // indices with x[k] != 0
  std::size_t row = 0;
  Integer acc;
  for (std::size_t j = 0; j < h.cols(); ++j) {
    while (row < h.rows() && sgn(h(row, j)) == 0) ++row;
    if (row == h.rows()) throw PreconditionError("basis is not in Hermite form");
    acc = v[row];
    for (std::size_t k : support) mpz_submul(acc.get_mpz_t(), h(row, k).get_mpz_t(), x[k].get_mpz_t());
    if (!mpz_divisible_p(acc.get_mpz_t(), h(row, j).get_mpz_t())) return std::nullopt;
    mpz_divexact(x[j].get_mpz_t(), acc.get_mpz_t(), h(row, j).get_mpz_t());
    if (sgn(x[j]) != 0) support.push_back(j);
    ++row;
  }
  for (std::size_t i = 0; i < h.rows(); ++i) {
    acc = v[i];
    for (std::size_t k : support) mpz_submul(acc.get_mpz_t(), h(i, k).get_mpz_t(), x[k].get_mpz_t());
    if (sgn(acc) != 0) return std::nullopt;
  }
  return x;
}

bool membership(const IntVector& v, const IntMatrix& b) {
  if (v.size() != b.rows()) throw DimensionError("membership: vector length differs from ambient rank");
  return solve_in_hermite_basis(hermite_basis(b), v).has_value();
}

bool contains_lattice(const IntMatrix& outer, const IntMatrix& inner) {
  if (outer.rows() != inner.rows()) throw DimensionError("containment: ambient dimensions differ");
  const IntMatrix h = hermite_basis(outer);
  for (std::size_t j = 0; j < inner.cols(); ++j)
    if (!solve_in_hermite_basis(h, inner.column(j))) return false;
  return true;
}

FinAbInvariants finite_quotient(const IntMatrix& num, const IntMatrix& den) {
  if (num.rows() != den.rows()) throw DimensionError("finite_quotient: ambient dimensions differ");
  const IntMatrix hn = hermite_basis(num);
  const IntMatrix hd = hermite_basis(den);
  std::vector<IntVector> coords;
  coords.reserve(hd.cols());
  for (std::size_t j = 0; j < hd.cols(); ++j) {
    auto x = solve_in_hermite_basis(hn, hd.column(j));
    if (!x) throw PreconditionError("finite_quotient: denominator lattice is not contained in numerator");
    coords.push_back(std::move(*x));
  }
  if (hn.cols() != hd.cols())
    throw InfiniteQuotientError("finite_quotient: lattices have different ranks (infinite quotient)");
  return cokernel_invariants(AbelianPresentation(hn.cols(), IntMatrix::from_columns(coords, hn.cols())));
}

}  // namespace wadefect
