#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace wadefect {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

IntVector make_vector(std::initializer_list<long> values);

// Sign of |a| - |b|.
inline int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }
inline int cmpabs(const Integer& a, unsigned long b) { return mpz_cmpabs_ui(a.get_mpz_t(), b); }

// Dense row-major matrix of arbitrary precision integers. Either dimension
// may be zero; a matrix with zero columns denotes the zero lattice.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  // rows is explicit; an empty column list still has an ambient dimension.
  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Integer> entries() const { return data_; }

  IntVector column(std::size_t c) const;
  IntVector row(std::size_t r) const;
  void set_column(std::size_t c, const IntVector& v);

  IntMatrix transpose() const;
  IntMatrix columns(std::size_t first, std::size_t count) const;
  IntMatrix rows_range(std::size_t first, std::size_t count) const;

  bool is_zero() const;
  bool is_identity() const;

  // in-place elementary operations used by the normal form routines
  void swap_rows(std::size_t a, std::size_t b);
  void swap_columns(std::size_t a, std::size_t b);
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void add_column_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);
  void negate_column(std::size_t c);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& v);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);

IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);
IntMatrix vconcat(const IntMatrix& a, const IntMatrix& b);
IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);

// Bareiss fraction-free elimination; square input only.
Integer determinant(const IntMatrix& a);

std::string to_string(const IntMatrix& a);
std::string to_string(const IntVector& v);

}  // namespace wadefect
