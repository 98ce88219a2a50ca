#include "slackmat/combinatorial.hpp"

#include "slackmat/errors.hpp"
#include "slackmat/linalg.hpp"

namespace slackmat {

Matrix IncidencePattern::to_matrix() const {
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j) ? 1 : 0;
  return m;
}

IncidencePattern incidence_matrix(const Matrix& m) {
  if (!m.is_nonnegative()) throw InvalidInput("incidence_matrix: matrix has a negative entry");
  IncidencePattern inc(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) inc.set(i, j, m(i, j).is_zero());
  return inc;
}

std::size_t affine_row_dimension(const Matrix& m) {
  if (m.rows() == 0) throw InvalidInput("affine_row_dimension: no rows");
  return rank(hstack(Matrix::ones(m.rows(), 1), m)) - 1;
}

bool polygon_slack_check(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() < 3) throw NotApplicable("polygon_slack_check: needs a square matrix with n >= 3");
  const IncidencePattern inc = incidence_matrix(m);
  const std::size_t n = m.rows();
  if (affine_row_dimension(m) != 2) return false;

  // Bipartite zero graph: nodes 0..n-1 are rows, n..2n-1 are columns.
  std::vector<std::vector<std::size_t>> adj(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (inc(i, j)) {
        adj[i].push_back(n + j);
        adj[n + j].push_back(i);
      }
  for (const auto& a : adj)
    if (a.size() != 2) return false;

  // 2-regular, so it is a single cycle iff it is connected.
  std::size_t visited = 1;
  std::size_t prev = 0;
  std::size_t cur = adj[0][0];
  while (cur != 0) {
    ++visited;
    const std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = next;
  }
  return visited == 2 * n;
}

}  // namespace slackmat
