#ifndef SLACKMAT_MATRIX_HPP
#define SLACKMAT_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "slackmat/rational.hpp"

namespace slackmat {

/// Dense row-major matrix of Rationals. Empty shapes (0 x q, p x 0) are legal.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix ones(std::size_t rows, std::size_t cols);
  /// All rows must have length `cols`.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rational> row_view(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  std::vector<Vector> row_list() const;
  std::vector<Vector> column_list() const;

  Matrix transpose() const;
  /// Rows [first, first + count).
  Matrix row_block(std::size_t first, std::size_t count) const;
  Matrix select_columns(std::span<const std::size_t> indices) const;
  Matrix select_rows(std::span<const std::size_t> indices) const;

  bool is_nonnegative() const;
  bool is_zero_row(std::size_t i) const;
  bool is_zero_column(std::size_t j) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& a);
/// a * x for a column vector x.
Vector operator*(const Matrix& a, const Vector& x);
/// [a | b], same row count.
Matrix hstack(const Matrix& a, const Matrix& b);
/// a on top of b, same column count.
Matrix vstack(const Matrix& a, const Matrix& b);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

// Vector helpers.
Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Vector scaled(std::span<const Rational> v, const Rational& s);
Vector added(std::span<const Rational> a, std::span<const Rational> b);
Vector subtracted(std::span<const Rational> a, std::span<const Rational> b);
bool is_zero_vector(std::span<const Rational> v);
bool is_nonnegative(std::span<const Rational> v);

}  // namespace slackmat

#endif  // SLACKMAT_MATRIX_HPP
