#ifndef SLACKMAT_LINALG_HPP
#define SLACKMAT_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "slackmat/matrix.hpp"

namespace slackmat {

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank = 0;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of { x : m x = 0 }, one vector per free column of rref(m).
std::vector<Vector> right_kernel_basis(const Matrix& m);

/// Basis of { y : y^T m = 0 }; size is rows(m) - rank(m).
std::vector<Vector> left_kernel_basis(const Matrix& m);

/// Some x with a x = b, or nullopt. The returned solution sets every free
/// variable of rref([a | b]) to zero. Throws InvalidInput on size mismatch.
std::optional<Vector> solve_linear(const Matrix& a, const Vector& b);

struct RankFactorization {
  Matrix left;   // p x k, full column rank
  Matrix right;  // k x q, full row rank
};

/// m = C R where C holds the pivot columns of m and R the nonzero rows of rref(m).
RankFactorization rank_factorization(const Matrix& m);

/// Inverse of a square nonsingular matrix; throws InvalidInput otherwise.
Matrix inverse(const Matrix& m);

/// Indices of a maximal linearly independent subset of the rows, greedy in
/// input order.
std::vector<std::size_t> independent_rows(const Matrix& m);

/// Orthogonal projection of v onto the orthogonal complement of span(basis).
Vector project_out(const Vector& v, const std::vector<Vector>& basis);

}  // namespace slackmat

#endif  // SLACKMAT_LINALG_HPP
