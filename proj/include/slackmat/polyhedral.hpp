#ifndef SLACKMAT_POLYHEDRAL_HPP
#define SLACKMAT_POLYHEDRAL_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "slackmat/matrix.hpp"

namespace slackmat {

enum class Form { V, H };

/**
 * A polyhedral cone in R^n.
 *
 * V-form: cone(vectors) + span(lineality_basis); the vectors are the rows of
 * a generator matrix A. H-form: { x : x^T b >= 0 for every b in vectors };
 * the vectors are the columns of an inequality matrix B. Equations appear as
 * pairs of opposite normals. Representations need not be minimal.
 */
struct ConeRep {
  Form form = Form::V;
  std::size_t ambient_dim = 0;
  std::vector<Vector> vectors;
  std::vector<Vector> lineality_basis;  // V-form only

  static ConeRep generated_by(std::size_t n, std::vector<Vector> generators, std::vector<Vector> lineality = {});
  static ConeRep defined_by(std::size_t n, std::vector<Vector> normals);

  /// Rows are the generators (V) or the normals (H).
  Matrix vector_matrix() const;

  friend bool operator==(const ConeRep&, const ConeRep&) = default;
};

/// normal . x <= bound
struct Halfspace {
  Rational bound;
  Vector normal;

  friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

/// A polytope as conv(points) (V-form) or as the intersection of halfspaces (H-form).
struct PolytopeRep {
  Form form = Form::V;
  std::size_t ambient_dim = 0;
  std::vector<Vector> points;
  std::vector<Halfspace> inequalities;

  static PolytopeRep from_points(std::size_t n, std::vector<Vector> points);
  static PolytopeRep from_halfspaces(std::size_t n, std::vector<Halfspace> inequalities);

  friend bool operator==(const PolytopeRep&, const PolytopeRep&) = default;
};

// ---- double description ----------------------------------------------------

/**
 * H-form to minimal V-form.
 *
 * The lineality space L is the common kernel of the normals. The cone is
 * projected onto the row space of the normals (the orthogonal complement of
 * L), its extreme rays are enumerated there by incremental double
 * description, and lifted back. The result holds a basis of L plus one
 * 1-norm-normalized generator per extreme ray of the pointed part.
 */
ConeRep dd_h_to_v(const ConeRep& h);

/// V-form to minimal H-form: facet normals of the cone followed by +/- pairs
/// spanning lin(K)^perp. Runs dd_h_to_v on the dual cone.
ConeRep dd_v_to_h(const ConeRep& v);

/// v scaled by a positive rational to unit 1-norm. Throws InvalidInput for v = 0.
Vector canonical_ray(std::span<const Rational> v);

/// Drops zero and duplicate generators, moves lineality into lineality_basis,
/// and removes generators that are not extreme. Uses exact LP membership tests.
ConeRep minimal_vrep(const ConeRep& v);

struct LinealityInfo {
  std::size_t lineality_dim = 0;
  bool pointed = true;
};

LinealityInfo lineality_and_pointedness(const ConeRep& c);

/// Generators (1, v) for points; normals (beta, -a) for halfspaces a.x <= beta.
ConeRep homogenize(const PolytopeRep& p);

/// S = A B; throws InvalidInput("not a representation pair") on a negative entry.
Matrix slack_of_cone(const Matrix& a, const Matrix& b);

/// S_ij = beta_j - a_j . v_i; throws InvalidInput when some point violates some inequality.
Matrix slack_of_polytope(const PolytopeRep& v, const PolytopeRep& h);

/// Linear dimension of the cone. H-form detects implicit equalities by LP.
std::size_t dimension(const ConeRep& c);
/// Affine dimension. H-form detects implicit equalities by LP and throws
/// InvalidInput("empty") when the system is infeasible.
std::size_t dimension(const PolytopeRep& p);

/// Exact LP test that 0 lies in the interior of conv(points).
bool origin_in_interior(const PolytopeRep& v);

/// Polar of a V-polytope with 0 in its interior; vertices are the facet
/// normals a/beta. Throws InvalidInput when 0 is not interior.
PolytopeRep polar(const PolytopeRep& v);

/// Facets of conv(points), plus equation pairs when it is not full-dimensional.
PolytopeRep polytope_v_to_h(const PolytopeRep& v);

/// Vertices of a bounded H-polytope; throws InvalidInput when empty or unbounded.
PolytopeRep polytope_h_to_v(const PolytopeRep& h);

/// Rows (1, v_i): the generator matrix of the homogenization cone.
Matrix homogenized_points(const PolytopeRep& v);
/// Columns (beta_j, -a_j): the inequality matrix of the homogenization cone.
Matrix homogenized_inequalities(const PolytopeRep& h);

}  // namespace slackmat

#endif  // SLACKMAT_POLYHEDRAL_HPP
