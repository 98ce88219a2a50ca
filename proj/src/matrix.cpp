#include "slackmat/matrix.hpp"

#include <algorithm>
#include <ostream>

#include "slackmat/errors.hpp"

namespace slackmat {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidInput("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::ones(std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  std::fill(m.data_.begin(), m.data_.end(), Rational(1));
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InvalidInput("row length mismatch");
    std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * cols));
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  return from_rows(columns, rows).transpose();
}

Vector Matrix::row(std::size_t i) const {
  auto v = row_view(i);
  return Vector(v.begin(), v.end());
}

Vector Matrix::column(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

std::vector<Vector> Matrix::row_list() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

std::vector<Vector> Matrix::column_list() const {
  std::vector<Vector> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::row_block(std::size_t first, std::size_t count) const {
  if (first + count > rows_) throw InvalidInput("row block out of range");
  Matrix b(count, cols_);
  std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(first * cols_), count * cols_, b.data_.begin());
  return b;
}

Matrix Matrix::select_columns(std::span<const std::size_t> indices) const {
  Matrix s(rows_, indices.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < indices.size(); ++k) s(i, k) = (*this)(i, indices[k]);
  return s;
}

Matrix Matrix::select_rows(std::span<const std::size_t> indices) const {
  Matrix s(indices.size(), cols_);
  for (std::size_t k = 0; k < indices.size(); ++k)
    for (std::size_t j = 0; j < cols_; ++j) s(k, j) = (*this)(indices[k], j);
  return s;
}

bool Matrix::is_nonnegative() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.sign() >= 0; });
}

bool Matrix::is_zero_row(std::size_t i) const { return is_zero_vector(row_view(i)); }

bool Matrix::is_zero_column(std::size_t j) const {
  for (std::size_t i = 0; i < rows_; ++i)
    if (!(*this)(i, j).is_zero()) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InvalidInput("matrix product: inner dimensions differ");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidInput("matrix difference: shapes differ");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= s;
  return c;
}

Vector operator*(const Matrix& a, const Vector& x) {
  if (a.cols() != x.size()) throw InvalidInput("matrix-vector product: dimension mismatch");
  Vector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) y[i] = dot(a.row_view(i), x);
  return y;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw InvalidInput("hstack: row counts differ");
  Matrix c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw InvalidInput("vstack: column counts differ");
  Matrix c(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, j) = b(i, j);
  return c;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
  }
  return os << ']';
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw InvalidInput("dot: length mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

Vector scaled(std::span<const Rational> v, const Rational& s) {
  Vector out(v.begin(), v.end());
  for (auto& x : out) x *= s;
  return out;
}

Vector added(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw InvalidInput("add: length mismatch");
  Vector out(a.begin(), a.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

Vector subtracted(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw InvalidInput("subtract: length mismatch");
  Vector out(a.begin(), a.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

bool is_zero_vector(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

bool is_nonnegative(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.sign() >= 0; });
}

}  // namespace slackmat
