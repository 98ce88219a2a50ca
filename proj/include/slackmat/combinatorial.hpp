#ifndef SLACKMAT_COMBINATORIAL_HPP
#define SLACKMAT_COMBINATORIAL_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "slackmat/matrix.hpp"

namespace slackmat {

/// 0/1 matrix with entry 1 exactly where the source matrix is zero.
class IncidencePattern {
 public:
  IncidencePattern() = default;
  IncidencePattern(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), bits_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool operator()(std::size_t i, std::size_t j) const { return bits_[i * cols_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool v) { bits_[i * cols_ + j] = v ? 1 : 0; }

  Matrix to_matrix() const;

  friend bool operator==(const IncidencePattern&, const IncidencePattern&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Throws InvalidInput on a negative entry.
IncidencePattern incidence_matrix(const Matrix& m);

/**
 * Vertex-facet slack matrix of an n-gon.
 *
 * True iff the rows span an affine plane and the zero entries can be
 * permuted onto the cyclic two-band: every row and every column holds
 * exactly two zeros and the row/column graph joined by zeros is one cycle of
 * length 2n. Throws NotApplicable unless m is square with n >= 3, and
 * InvalidInput on a negative entry.
 */
bool polygon_slack_check(const Matrix& m);

/// Dimension of aff(rows(m)); throws InvalidInput when m has no rows.
std::size_t affine_row_dimension(const Matrix& m);

}  // namespace slackmat

#endif  // SLACKMAT_COMBINATORIAL_HPP
