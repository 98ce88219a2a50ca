#include "slackmat/linalg.hpp"

#include <utility>

#include "slackmat/errors.hpp"

namespace slackmat {

RrefResult rref(const Matrix& m) {
  RrefResult out{m, {}, 0};
  Matrix& r = out.reduced;
  const std::size_t rows = r.rows();
  const std::size_t cols = r.cols();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows; ++col) {
    std::size_t pivot = lead;
    while (pivot < rows && r(pivot, col).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != lead)
      for (std::size_t j = 0; j < cols; ++j) std::swap(r(pivot, j), r(lead, j));
    const Rational inv = r(lead, col).reciprocal();
    for (std::size_t j = col; j < cols; ++j) r(lead, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == lead || r(i, col).is_zero()) continue;
      const Rational f = r(i, col);
      for (std::size_t j = col; j < cols; ++j)
        if (!r(lead, j).is_zero()) r(i, j) -= f * r(lead, j);
    }
    out.pivot_columns.push_back(col);
    ++lead;
  }
  out.rank = out.pivot_columns.size();
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::vector<Vector> right_kernel_basis(const Matrix& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivot_columns) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < r.rank; ++k) v[r.pivot_columns[k]] = -r.reduced(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> left_kernel_basis(const Matrix& m) { return right_kernel_basis(m.transpose()); }

std::optional<Vector> solve_linear(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw InvalidInput("solve_linear: right-hand side length differs from row count");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const RrefResult r = rref(aug);
  if (!r.pivot_columns.empty() && r.pivot_columns.back() == a.cols()) return std::nullopt;
  Vector x(a.cols());
  for (std::size_t k = 0; k < r.rank; ++k) x[r.pivot_columns[k]] = r.reduced(k, a.cols());
  return x;
}

RankFactorization rank_factorization(const Matrix& m) {
  const RrefResult r = rref(m);
  return {m.select_columns(r.pivot_columns), r.reduced.row_block(0, r.rank)};
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("inverse: matrix is not square");
  const std::size_t n = m.rows();
  const RrefResult r = rref(hstack(m, Matrix::identity(n)));
  if (r.rank < n || (n > 0 && r.pivot_columns[n - 1] != n - 1)) throw InvalidInput("inverse: matrix is singular");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

std::vector<std::size_t> independent_rows(const Matrix& m) {
  // pivot columns of m^T are the first independent rows of m
  return rref(m.transpose()).pivot_columns;
}

Vector project_out(const Vector& v, const std::vector<Vector>& basis) {
  if (basis.empty()) return v;
  const std::size_t k = basis.size();
  Matrix gram(k, k);
  Vector rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = dot(basis[i], basis[j]);
    rhs[i] = dot(basis[i], v);
  }
  const auto coeffs = solve_linear(gram, rhs);
  if (!coeffs) throw InvalidInput("project_out: degenerate basis");
  Vector out = v;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[j] -= (*coeffs)[i] * basis[i][j];
  return out;
}

}  // namespace slackmat
