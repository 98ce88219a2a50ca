// Worked examples and seeded random generators shared by the test binaries.
#ifndef SLACKMAT_TESTS_FIXTURES_HPP
#define SLACKMAT_TESTS_FIXTURES_HPP

#include <algorithm>
#include <cstddef>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "slackmat/matrix.hpp"
#include "slackmat/polyhedral.hpp"

namespace fixtures {

using slackmat::Halfspace;
using slackmat::Matrix;
using slackmat::PolytopeRep;
using slackmat::Rational;
using slackmat::Vector;

// Triangular prism, unit slacks.
inline Matrix prism() {
  return {{1, 1, 0, 0, 0}, {1, 0, 1, 0, 0}, {1, 0, 0, 1, 0},
          {0, 1, 0, 0, 1}, {0, 0, 1, 0, 1}, {0, 0, 0, 1, 1}};
}

// Same prism, columns rescaled so that 1 is also in the row span.
inline Matrix prism_scaled() {
  return {{2, 2, 0, 0, 0}, {2, 0, 4, 0, 0}, {2, 0, 0, 4, 0},
          {0, 2, 0, 0, 2}, {0, 0, 4, 0, 2}, {0, 0, 0, 4, 2}};
}

inline PolytopeRep prism_points() {
  return PolytopeRep::from_points(3, {{0, 1, -1}, {2, -1, -1}, {-2, -1, -1}, {0, 1, 1}, {2, -1, 1}, {-2, -1, 1}});
}

// z <= 1, -y <= 1, -x+y <= 1, x+y <= 1, -z <= 1
inline PolytopeRep prism_halfspaces() {
  return PolytopeRep::from_halfspaces(
      3, {{1, {0, 0, 1}}, {1, {0, -1, 0}}, {1, {-1, 1, 0}}, {1, {1, 1, 0}}, {1, {0, 0, -1}}});
}

inline std::vector<Vector> bisimplex_vertices() {
  return {{0, 0, 1}, {0, -1, 0}, {-1, 1, 0}, {1, 1, 0}, {0, 0, -1}};
}

// Slack matrix of the homogenized square that is not a slack matrix of the square.
inline Matrix square_cone_slack() {
  return {{Rational(4, 3), 0, Rational(4, 3), 0}, {2, 0, 0, 2}, {0, 2, 2, 0}, {0, 4, 0, 4}};
}

inline Matrix square_factor_left() {
  return {{Rational(2, 3), Rational(2, 3), Rational(2, 3)}, {1, 1, -1}, {1, -1, 1}, {2, -2, -2}};
}

inline Matrix square_factor_right() { return {{1, 1, 1, 1}, {1, -1, 0, 0}, {0, 0, 1, -1}}; }

inline std::vector<Vector> square_quadrilateral() {
  return {{Rational(2, 3), Rational(2, 3)}, {1, -1}, {-1, 1}, {-2, -2}};
}

inline PolytopeRep square_points() { return PolytopeRep::from_points(2, {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}); }

inline PolytopeRep square_halfspaces() {
  return PolytopeRep::from_halfspaces(2, {{1, {1, 0}}, {1, {-1, 0}}, {1, {0, 1}}, {1, {0, -1}}});
}

inline Matrix square_vertex_facet() { return {{0, 2, 0, 2}, {0, 2, 2, 0}, {2, 0, 0, 2}, {2, 0, 2, 0}}; }

// Slack matrix of the half-plane {x2 >= 0} that fails the generating condition.
inline Matrix half_plane_counterexample() { return {{1, 2}, {2, 1}, {0, 0}, {0, 0}}; }

// ---- random inputs -----------------------------------------------------------

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Rational small_rational(Rng& rng, int max_num = 4) {
  static constexpr long kDen[] = {1, 1, 1, 2, 3};
  return Rational(uniform(rng, 0, max_num), kDen[uniform(rng, 0, 4)]);
}

inline Rational positive_rational(Rng& rng) { return Rational(uniform(rng, 1, 5), uniform(rng, 1, 3)); }

inline Matrix sparse_matrix(Rng& rng, std::size_t p, std::size_t q, int zero_percent) {
  Matrix m(p, q);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < q; ++j)
      if (uniform(rng, 1, 100) > zero_percent) m(i, j) = positive_rational(rng);
  return m;
}

inline Matrix low_rank_matrix(Rng& rng, std::size_t p, std::size_t q, std::size_t k) {
  return sparse_matrix(rng, p, k, 40) * sparse_matrix(rng, k, q, 40);
}

/// Full-dimensional polytope in R^d: hull of random lattice points, retried
/// until it has between d+1 and max_vertices vertices.
inline std::vector<Vector> random_polytope_vertices(Rng& rng, std::size_t d, std::size_t max_vertices, int box = 3) {
  while (true) {
    const std::size_t count = static_cast<std::size_t>(uniform(rng, static_cast<int>(d) + 1, static_cast<int>(max_vertices)));
    std::vector<Vector> pts;
    for (std::size_t k = 0; k < count; ++k) {
      Vector v;
      for (std::size_t j = 0; j < d; ++j) v.push_back(uniform(rng, -box, box));
      pts.push_back(v);
    }
    if (oracle::affine_dimension(pts, d) != d) continue;
    auto verts = oracle::hull_vertices(pts, d);
    if (verts.size() >= d + 1 && verts.size() <= max_vertices) return verts;
  }
}

inline Matrix scale_rows(Matrix m, const Vector& s) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= s[i];
  return m;
}

inline Matrix scale_columns(Matrix m, const Vector& s) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= s[j];
  return m;
}

inline Vector positive_vector(Rng& rng, std::size_t n) {
  Vector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(positive_rational(rng));
  return v;
}

inline Matrix with_zero_rows(const Matrix& m, std::size_t k) { return slackmat::vstack(m, Matrix(k, m.cols())); }

/// Convex lattice polygon with exactly n vertices, counterclockwise.
inline std::vector<Vector> random_lattice_polygon(Rng& rng, std::size_t n) {
  const int box = 3 + static_cast<int>(n);
  while (true) {
    std::vector<Vector> pts;
    for (std::size_t k = 0; k < 3 * n; ++k) pts.push_back({uniform(rng, -box, box), uniform(rng, -box, box)});
    if (oracle::affine_dimension(pts, 2) != 2) continue;
    auto verts = oracle::hull_vertices(pts, 2);
    if (verts.size() != n) continue;
    // Counterclockwise order around the vertex centroid, by exact angle comparison.
    Vector c{0, 0};
    for (const auto& v : verts) c = slackmat::added(c, v);
    c = slackmat::scaled(c, Rational(1, static_cast<long>(n)));
    auto half = [&](const Vector& v) {
      const Rational y = v[1] - c[1], x = v[0] - c[0];
      return (y > 0 || (y == 0 && x > 0)) ? 0 : 1;
    };
    std::sort(verts.begin(), verts.end(), [&](const Vector& a, const Vector& b) {
      if (half(a) != half(b)) return half(a) < half(b);
      return (a[0] - c[0]) * (b[1] - c[1]) - (a[1] - c[1]) * (b[0] - c[0]) > 0;
    });
    return verts;
  }
}

/// Edge inequalities of a counterclockwise polygon; edge j runs from vertex j to j+1.
inline std::vector<Halfspace> polygon_edges(const std::vector<Vector>& v) {
  std::vector<Halfspace> out;
  for (std::size_t j = 0; j < v.size(); ++j) {
    const Vector& a = v[j];
    const Vector& b = v[(j + 1) % v.size()];
    // cross(b - a, x - a) >= 0  <=>  (dy, -dx) . x <= (dy, -dx) . a
    const Vector normal{b[1] - a[1], a[0] - b[0]};
    out.push_back({slackmat::dot(normal, a), normal});
  }
  return out;
}

}  // namespace fixtures

#endif  // SLACKMAT_TESTS_FIXTURES_HPP
