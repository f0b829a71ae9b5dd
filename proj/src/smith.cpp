#include "wadefect/smith.hpp"

#include <algorithm>
#include <optional>

namespace wadefect {
namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

enum class Tracking { none, left_inverse, both };

// Elimination with least-absolute-value pivoting. Untracked transform
// matrices stay empty.
template <Tracking T>
class SmithEliminator {
  static constexpr bool kLeft = T == Tracking::both;
  static constexpr bool kLeftInverse = T != Tracking::none;
  static constexpr bool kRight = T == Tracking::both;

 public:
  explicit SmithEliminator(const IntMatrix& a) : a_(a) {
    if constexpr (kLeft) u_ = IntMatrix::identity(a.rows());
    if constexpr (kLeftInverse) u_inverse_ = IntMatrix::identity(a.rows());
    if constexpr (kRight) v_ = IntMatrix::identity(a.cols());
  }

  void run() {
    const std::size_t m = a_.rows();
    const std::size_t n = a_.cols();
    const std::size_t steps = std::min(m, n);
    for (std::size_t t = 0; t < steps; ++t) {
      auto pivot = least_nonzero(t, t);
      if (!pivot) break;
      move_to_pivot(t, *pivot);
      while (true) {
        if (!clear_cross(t)) {
          auto p = least_in_cross(t);
          move_to_pivot(t, *p);
          continue;
        }
        auto bad = nondivisible_entry(t);
        if (!bad) break;
        add_row(t, bad->row, 1);
      }
      if (sgn(a_(t, t)) < 0) {
        a_.negate_column(t);
        if constexpr (kRight) v_.negate_column(t);
      }
    }
  }

  IntMatrix& matrix() { return a_; }
  IntMatrix& u() { return u_; }
  IntMatrix& v() { return v_; }
  IntMatrix& u_inverse() { return u_inverse_; }

 private:
  std::optional<Position> least_nonzero(std::size_t r0, std::size_t c0) const {
    std::optional<Position> best;
    const Integer* best_value = nullptr;
    for (std::size_t i = r0; i < a_.rows(); ++i) {
      for (std::size_t j = c0; j < a_.cols(); ++j) {
        const Integer& x = a_(i, j);
        if (sgn(x) == 0) continue;
        if (!best_value || cmpabs(x, *best_value) < 0) {
          best = Position{i, j};
          best_value = &x;
          if (x == 1 || x == -1) return best;
        }
      }
    }
    return best;
  }

  std::optional<Position> least_in_cross(std::size_t t) const {
    std::optional<Position> best;
    const Integer* best_value = nullptr;
    auto consider = [&](std::size_t i, std::size_t j) {
      const Integer& x = a_(i, j);
      if (sgn(x) != 0 && (!best_value || cmpabs(x, *best_value) < 0)) {
        best = Position{i, j};
        best_value = &x;
      }
    };
    consider(t, t);
    for (std::size_t i = t + 1; i < a_.rows(); ++i) consider(i, t);
    for (std::size_t j = t + 1; j < a_.cols(); ++j) consider(t, j);
    return best;
  }

  void move_to_pivot(std::size_t t, Position p) {
    swap_rows(t, p.row);
    swap_cols(t, p.col);
  }

  // Reduces row t and column t modulo the pivot. Returns true when both are clear.
  bool clear_cross(std::size_t t) {
    bool clear = true;
    Integer q;
    for (std::size_t i = t + 1; i < a_.rows(); ++i) {
      if (sgn(a_(i, t)) == 0) continue;
      mpz_tdiv_q(q.get_mpz_t(), a_(i, t).get_mpz_t(), a_(t, t).get_mpz_t());
      add_row(i, t, -q);
      if (sgn(a_(i, t)) != 0) clear = false;
    }
    for (std::size_t j = t + 1; j < a_.cols(); ++j) {
      if (sgn(a_(t, j)) == 0) continue;
      mpz_tdiv_q(q.get_mpz_t(), a_(t, j).get_mpz_t(), a_(t, t).get_mpz_t());
      add_col(j, t, -q);
      if (sgn(a_(t, j)) != 0) clear = false;
    }
    return clear;
  }

  std::optional<Position> nondivisible_entry(std::size_t t) const {
    const Integer& p = a_(t, t);
    if (p == 1 || p == -1) return std::nullopt;
    for (std::size_t i = t + 1; i < a_.rows(); ++i)
      for (std::size_t j = t + 1; j < a_.cols(); ++j)
        if (sgn(a_(i, j)) != 0 && !mpz_divisible_p(a_(i, j).get_mpz_t(), p.get_mpz_t()))
          return Position{i, j};
    return std::nullopt;
  }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    a_.swap_rows(i, k);
    if constexpr (kLeft) u_.swap_rows(i, k);
    if constexpr (kLeftInverse) u_inverse_.swap_columns(i, k);
  }

  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    a_.swap_columns(j, k);
    if constexpr (kRight) v_.swap_columns(j, k);
  }

  // row dst += c * row src
  void add_row(std::size_t dst, std::size_t src, const Integer& c) {
    a_.add_row_multiple(dst, src, c);
    if constexpr (kLeft) u_.add_row_multiple(dst, src, c);
    if constexpr (kLeftInverse) u_inverse_.add_column_multiple(src, dst, -c);
  }

  void add_col(std::size_t dst, std::size_t src, const Integer& c) {
    a_.add_column_multiple(dst, src, c);
    if constexpr (kRight) v_.add_column_multiple(dst, src, c);
  }

  IntMatrix a_;
  IntMatrix u_;
  IntMatrix v_;
  IntMatrix u_inverse_;
};

std::vector<Integer> read_diagonal(const IntMatrix& d) {
  const std::size_t k = std::min(d.rows(), d.cols());
  std::vector<Integer> diag(k);
  for (std::size_t i = 0; i < k; ++i) diag[i] = d(i, i);
  return diag;
}

}  // namespace

std::size_t SmithDecomposition::rank() const {
  return static_cast<std::size_t>(
      std::count_if(diagonal.begin(), diagonal.end(), [](const Integer& x) { return sgn(x) != 0; }));
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  SmithEliminator<Tracking::both> elim(a);
  elim.run();
  SmithDecomposition out;
  out.d = std::move(elim.matrix());
  out.u = std::move(elim.u());
  out.v = std::move(elim.v());
  out.u_inverse = std::move(elim.u_inverse());
  out.diagonal = read_diagonal(out.d);
  return out;
}

std::vector<Integer> smith_diagonal(const IntMatrix& a) {
  SmithEliminator<Tracking::none> elim(a);
  elim.run();
  return read_diagonal(elim.matrix());
}

SmithDecomposition smith_left(const IntMatrix& a) {
  SmithEliminator<Tracking::left_inverse> elim(a);
  elim.run();
  SmithDecomposition out;
  out.d = std::move(elim.matrix());
  out.u_inverse = std::move(elim.u_inverse());
  out.diagonal = read_diagonal(out.d);
  return out;
}

std::size_t matrix_rank(const IntMatrix& a) {
  auto diag = smith_diagonal(a);
  return static_cast<std::size_t>(
      std::count_if(diag.begin(), diag.end(), [](const Integer& x) { return sgn(x) != 0; }));
}

}  // namespace wadefect
