#ifndef SLACKMAT_RECOGNITION_HPP
#define SLACKMAT_RECOGNITION_HPP

#include <optional>
#include <string_view>

#include "slackmat/matrix.hpp"
#include "slackmat/polyhedral.hpp"

namespace slackmat {

enum class SlackKind { Cone, Polytope };

/// Why a matrix was rejected, and therefore which certificate shape applies.
enum class RejectReason {
  None,
  /// Cone generating condition fails. Certificate: witness point + separator.
  NotConeGenerating,
  /// 1 is not in the column span. Certificate: y with y^T M = 0, y^T 1 = 1.
  OnesNotInColumnSpan,
  /// rank(M) < 2, so no polytope of dimension >= 1. Certificate: none beyond rank.
  RankBelowTwo,
};

std::string_view to_string(RejectReason r);

/// Which span the witness of a NotConeGenerating certificate lives in.
enum class SpanConvention {
  Column,  // witness x in M R^q  (p-vector), separator tested against columns
  Row,     // witness x in R^p M  (q-vector), separator tested against rows
};

struct NoCertificate {
  RejectReason reason = RejectReason::NotConeGenerating;
  SpanConvention convention = SpanConvention::Column;
  Vector witness_point;
  Vector separator;

  friend bool operator==(const NoCertificate&, const NoCertificate&) = default;
};

struct YesCertificate {
  Matrix a;  // generators (rows)
  Matrix b;  // inequality normals (columns)
  // Polytope verdicts only.
  std::optional<Vector> mu;  // M mu = 1
  std::optional<PolytopeRep> vertices;
  std::optional<PolytopeRep> facets;

  friend bool operator==(const YesCertificate&, const YesCertificate&) = default;
};

struct RecognitionResult {
  bool verdict = false;
  SlackKind kind = SlackKind::Cone;
  RejectReason reason = RejectReason::None;
  std::size_t rank = 0;
  std::optional<YesCertificate> yes;
  std::optional<NoCertificate> no;
};

/**
 * Column cone generating condition: M R_+^q == M R^q cap R_+^p.
 *
 * K = { x >= 0 : l^T x = 0 for every l in a left-kernel basis of M } is
 * converted to its extreme rays by double description; the condition holds
 * iff every normalized ray equals a normalized nonzero column of M. An
 * unmatched ray becomes the witness of the NoCertificate; on yes the
 * certificate holds the rank factorization of m. Throws
 * InvalidInput on a negative entry.
 */
RecognitionResult ccgc_check(const Matrix& m);

/// Row cone generating condition, computed as ccgc_check(m^T); no-certificates use
/// the row convention and yes-factors are transposed back to m = A B.
RecognitionResult rcgc_check(const Matrix& m);

/// Cone slack test, the same verdict and certificate as ccgc_check.
RecognitionResult is_cone_slack(const Matrix& m);

/// Polytope slack test: rank >= 2, 1 in the column span, and the column
/// generating condition.
RecognitionResult is_polytope_slack(const Matrix& m);

/// conv(rows) == aff(rows) cap R_+^q, decided by double description on the
/// affine slice of the orthant. Throws InvalidInput when rank(m) < 2.
bool affine_criterion_check(const Matrix& m);

/// Pure-arithmetic re-check of a rejection certificate against m.
bool verify_no_certificate(const Matrix& m, const NoCertificate& cert);

/// A (rows) times B (columns) reproduces m exactly.
bool verify_yes_certificate(const Matrix& m, const YesCertificate& cert);

struct ConeRealization {
  ConeRep generators;
  ConeRep inequalities;
};

/// Throws InvalidInput when m is not a cone slack matrix.
ConeRealization reconstruct_cone(const Matrix& m);

struct PolytopeRealization {
  PolytopeRep vertices;
  PolytopeRep facets;
  Vector mu;
};

/// Throws InvalidInput when m is not a polytope slack matrix.
PolytopeRealization reconstruct_polytope(const Matrix& m);

/**
 * Polytope realization from a given rank factorization m = a b.
 *
 * mu solves m mu = 1 with free variables at zero and c = b mu, so a c = 1.
 * U has first column c and standard basis vectors elsewhere, skipping the
 * first nonzero coordinate of c. Then a U = [1, V] and U^{-1} b = [w, -W]^T.
 * Does not re-check that m is a slack matrix.
 */
PolytopeRealization realize_from_factorization(const Matrix& m, const Matrix& a, const Matrix& b);

/// Zero rows removed, rows scaled to unit sum, then the polytope test.
/// Must agree with is_cone_slack.
bool cone_check_via_polytope(const Matrix& m);

struct PolarRealization {
  PolytopeRep polytope;       // conv(rows A), 0 interior
  PolytopeRep facets;         // { x : -B_j . x <= 1 }
  PolytopeRep polar_vertices; // conv(-B_j)
  Rational scale;             // alpha with 1 in conv(rows(alpha m))
  Matrix scaled_matrix;       // alpha m
};

/// Requires m and m^T to be polytope slack matrices; throws InvalidInput otherwise.
PolarRealization polar_realization(const Matrix& m);

}  // namespace slackmat

#endif  // SLACKMAT_RECOGNITION_HPP
