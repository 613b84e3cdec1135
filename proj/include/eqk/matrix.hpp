#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "eqk/error.hpp"

namespace eqk {

using Int = std::int64_t;
/// A lattice point in coordinates of a fixed basis.
using Vec = std::vector<Int>;

// Overflow-checked arithmetic. All arithmetic in this library is exact; an
// intermediate that leaves the int64 range raises ErrorCode::Overflow.
inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer overflow in addition");
  return r;
}
inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer overflow in subtraction");
  return r;
}
inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer overflow in multiplication");
  return r;
}

Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, Int k);
Vec negate(const Vec& a);
Int dot(const Vec& a, const Vec& b);
bool is_zero(const Vec& a);
/// Nonnegative gcd of the entries; 0 for the zero vector.
Int content(const Vec& a);
std::string to_string(const Vec& v);

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<Vec>& columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Int operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec column(std::size_t j) const;
  std::span<const Int> data() const noexcept { return data_; }

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& other) const;
  Vec operator*(const Vec& v) const;
  IntMatrix operator-() const;
  IntMatrix operator+(const IntMatrix& other) const;
  IntMatrix operator-(const IntMatrix& other) const;

  bool operator==(const IntMatrix& other) const = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, Int k);
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, Int k);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  /// Rows [begin, end) as a new matrix.
  IntMatrix row_block(std::size_t begin, std::size_t end) const;
  /// Columns [begin, end) as a new matrix.
  IntMatrix col_block(std::size_t begin, std::size_t end) const;

  bool is_square() const noexcept { return rows_ == cols_; }
  std::string key() const;  // byte key for hashing

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Exact determinant (fraction-free Bareiss elimination).
Int determinant(const IntMatrix& m);

/// Inverse of a matrix with determinant +-1.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Rank over Q.
std::size_t rank(const IntMatrix& m);

/// The unique X with A X = B for invertible A. Throws InvalidInput if A is
/// singular or X is not integral.
IntMatrix solve_exact(const IntMatrix& a, const IntMatrix& b);

}  // namespace eqk
