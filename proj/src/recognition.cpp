#include "slackmat/recognition.hpp"

#include <set>
#include <stdexcept>

#include "slackmat/errors.hpp"
#include "slackmat/linalg.hpp"
#include "slackmat/lp.hpp"

namespace slackmat {

namespace {

void require_nonnegative(const Matrix& m, const char* op) {
  if (!m.is_nonnegative()) throw InvalidInput(std::string(op) + ": matrix has a negative entry");
}

Vector unit(std::size_t n, std::size_t i) {
  Vector e(n);
  e[i] = 1;
  return e;
}

// First normal of the H-form of cone(generators) that x violates.
Vector separating_normal(const std::vector<Vector>& generators, std::size_t n, const Vector& x) {
  const ConeRep h = dd_v_to_h(ConeRep::generated_by(n, generators));
  for (const auto& b : h.vectors)
    if (dot(b, x).sign() < 0) return b;
  throw std::logic_error("separating_normal: point lies in the cone");
}

RecognitionResult reject(SlackKind kind, std::size_t r, NoCertificate cert) {
  RecognitionResult out;
  out.verdict = false;
  out.kind = kind;
  out.reason = cert.reason;
  out.rank = r;
  out.no = std::move(cert);
  return out;
}

}  // namespace

std::string_view to_string(RejectReason r) {
  switch (r) {
    case RejectReason::None:
      return "none";
    case RejectReason::NotConeGenerating:
      return "not-cone-generating";
    case RejectReason::OnesNotInColumnSpan:
      return "ones-not-in-column-span";
    case RejectReason::RankBelowTwo:
      return "rank-below-two";
  }
  return "unknown";
}

RecognitionResult ccgc_check(const Matrix& m) {
  require_nonnegative(m, "ccgc_check");
  const std::size_t p = m.rows();
  const std::size_t r = rank(m);

  // K = M R^q cap R_+^p as an H-form cone in R^p
  std::vector<Vector> normals;
  for (std::size_t i = 0; i < p; ++i) normals.push_back(unit(p, i));
  for (const auto& l : left_kernel_basis(m)) {
    normals.push_back(l);
    normals.push_back(scaled(l, Rational(-1)));
  }
  const ConeRep rays = dd_h_to_v(ConeRep::defined_by(p, std::move(normals)));

  std::set<Vector> columns;
  std::vector<Vector> nonzero_columns;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (m.is_zero_column(j)) continue;
    Vector c = m.column(j);
    columns.insert(canonical_ray(c));
    nonzero_columns.push_back(std::move(c));
  }

  for (const auto& ray : rays.vectors) {
    if (columns.count(ray)) continue;
    NoCertificate cert;
    cert.reason = RejectReason::NotConeGenerating;
    cert.convention = SpanConvention::Column;
    cert.witness_point = ray;
    cert.separator = separating_normal(nonzero_columns, p, ray);
    return reject(SlackKind::Cone, r, std::move(cert));
  }

  RecognitionResult out;
  out.verdict = true;
  out.kind = SlackKind::Cone;
  out.rank = r;
  auto f = rank_factorization(m);
  out.yes = YesCertificate{std::move(f.left), std::move(f.right), {}, {}, {}};
  return out;
}

RecognitionResult rcgc_check(const Matrix& m) {
  require_nonnegative(m, "rcgc_check");
  RecognitionResult out = ccgc_check(m.transpose());
  if (out.no) out.no->convention = SpanConvention::Row;
  if (out.yes) {
    // m^T = A B, so m = B^T A^T
    Matrix a = out.yes->b.transpose();
    out.yes->b = out.yes->a.transpose();
    out.yes->a = std::move(a);
  }
  return out;
}

RecognitionResult is_cone_slack(const Matrix& m) { return ccgc_check(m); }

RecognitionResult is_polytope_slack(const Matrix& m) {
  require_nonnegative(m, "is_polytope_slack");
  const std::size_t r = rank(m);
  if (r < 2) return reject(SlackKind::Polytope, r, {RejectReason::RankBelowTwo, SpanConvention::Column, {}, {}});

  const Vector ones(m.rows(), Rational(1));
  if (!solve_linear(m, ones)) {
    // 1 is not orthogonal to the left kernel; some basis vector sees it
    for (const auto& y : left_kernel_basis(m)) {
      const Rational s = dot(y, ones);
      if (s.is_zero()) continue;
      return reject(SlackKind::Polytope, r,
                    {RejectReason::OnesNotInColumnSpan, SpanConvention::Column, scaled(y, s.reciprocal()), {}});
    }
    throw std::logic_error("is_polytope_slack: no left-kernel vector separates 1");
  }

  RecognitionResult out = ccgc_check(m);
  out.kind = SlackKind::Polytope;
  if (!out.verdict) return out;

  PolytopeRealization real = realize_from_factorization(m, out.yes->a, out.yes->b);
  out.yes->mu = std::move(real.mu);
  out.yes->vertices = std::move(real.vertices);
  out.yes->facets = std::move(real.facets);
  return out;
}

bool affine_criterion_check(const Matrix& m) {
  require_nonnegative(m, "affine_criterion_check");
  if (rank(m) < 2) throw InvalidInput("affine_criterion_check: rank below two");
  const std::size_t q = m.cols();

  // Homogenized slice { (t, x) in rowspan([1, M]) : t >= 0, x >= 0 }
  const Matrix lifted = hstack(Matrix::ones(m.rows(), 1), m);
  std::vector<Vector> normals;
  for (std::size_t i = 0; i <= q; ++i) normals.push_back(unit(q + 1, i));
  for (const auto& k : right_kernel_basis(lifted)) {
    normals.push_back(k);
    normals.push_back(scaled(k, Rational(-1)));
  }
  const ConeRep rays = dd_h_to_v(ConeRep::defined_by(q + 1, std::move(normals)));

  std::set<Vector> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.insert(m.row(i));
  for (const auto& ray : rays.vectors) {
    if (ray[0].is_zero()) return false;  // unbounded slice
    Vector vertex(ray.begin() + 1, ray.end());
    if (!rows.count(scaled(vertex, ray[0].reciprocal()))) return false;
  }
  return true;
}

bool verify_no_certificate(const Matrix& m, const NoCertificate& cert) {
  if (!m.is_nonnegative()) return false;
  const std::size_t p = m.rows();
  const std::size_t q = m.cols();
  switch (cert.reason) {
    case RejectReason::None:
      return false;
    case RejectReason::RankBelowTwo:
      return rank(m) < 2;
    case RejectReason::OnesNotInColumnSpan: {
      const Vector& y = cert.witness_point;
      if (y.size() != p) return false;
      for (std::size_t j = 0; j < q; ++j)
        if (!dot(y, m.column(j)).is_zero()) return false;
      Rational s;
      for (const auto& v : y) s += v;
      return !s.is_zero();
    }
    case RejectReason::NotConeGenerating:
      break;
  }

  const bool column = cert.convention == SpanConvention::Column;
  const Matrix& gens_src = column ? m.transpose() : m;  // rows of gens_src are the generators
  const std::size_t len = column ? p : q;
  const Vector& x = cert.witness_point;
  const Vector& h = cert.separator;
  if (x.size() != len || h.size() != len) return false;
  if (!is_nonnegative(x)) return false;
  // span membership: x is annihilated by every vector orthogonal to the generators
  for (const auto& k : right_kernel_basis(gens_src))
    if (!dot(k, x).is_zero()) return false;
  for (std::size_t i = 0; i < gens_src.rows(); ++i)
    if (dot(gens_src.row_view(i), h).sign() < 0) return false;
  return dot(x, h).sign() < 0;
}

bool verify_yes_certificate(const Matrix& m, const YesCertificate& cert) {
  if (cert.a.rows() != m.rows() || cert.b.cols() != m.cols() || cert.a.cols() != cert.b.rows()) return false;
  if (cert.a * cert.b != m) return false;
  if (cert.mu) {
    if (cert.mu->size() != m.cols()) return false;
    if (m * *cert.mu != Vector(m.rows(), Rational(1))) return false;
  }
  return true;
}

ConeRealization reconstruct_cone(const Matrix& m) {
  const RecognitionResult r = is_cone_slack(m);
  if (!r.verdict) throw InvalidInput("reconstruct_cone: not a cone slack matrix");
  const Matrix& a = r.yes->a;
  const Matrix& b = r.yes->b;
  return {ConeRep::generated_by(a.cols(), a.row_list()), ConeRep::defined_by(b.rows(), b.column_list())};
}

PolytopeRealization realize_from_factorization(const Matrix& m, const Matrix& a, const Matrix& b) {
  if (a.rows() != m.rows() || b.cols() != m.cols() || a.cols() != b.rows() || a * b != m)
    throw InvalidInput("realize_from_factorization: factors do not reproduce the matrix");
  const std::size_t k = a.cols();
  if (k == 0) throw InvalidInput("realize_from_factorization: rank zero");
  const Vector ones(m.rows(), Rational(1));
  const auto mu = solve_linear(m, ones);
  if (!mu) throw InvalidInput("realize_from_factorization: 1 is not in the column span");

  const Vector c = b * *mu;
  std::size_t pivot = 0;
  while (pivot < k && c[pivot].is_zero()) ++pivot;
  if (pivot == k) throw std::logic_error("realize_from_factorization: c vanishes");

  Matrix u(k, k);
  for (std::size_t i = 0; i < k; ++i) u(i, 0) = c[i];
  for (std::size_t j = 0, col = 1; j < k; ++j)
    if (j != pivot) u(j, col++) = 1;

  const Matrix au = a * u;
  const Matrix ub = inverse(u) * b;

  std::vector<Vector> points;
  for (std::size_t i = 0; i < au.rows(); ++i) {
    if (au(i, 0) != 1) throw std::logic_error("realize_from_factorization: first column is not 1");
    points.emplace_back(au.row_view(i).begin() + 1, au.row_view(i).end());
  }
  std::vector<Halfspace> halfspaces;
  for (std::size_t j = 0; j < ub.cols(); ++j) {
    Vector normal(k - 1);
    for (std::size_t i = 1; i < k; ++i) normal[i - 1] = -ub(i, j);
    halfspaces.push_back({ub(0, j), std::move(normal)});
  }
  return {PolytopeRep::from_points(k - 1, std::move(points)), PolytopeRep::from_halfspaces(k - 1, std::move(halfspaces)),
          *mu};
}

PolytopeRealization reconstruct_polytope(const Matrix& m) {
  RecognitionResult r = is_polytope_slack(m);
  if (!r.verdict) throw InvalidInput("reconstruct_polytope: not a polytope slack matrix");
  return {std::move(*r.yes->vertices), std::move(*r.yes->facets), std::move(*r.yes->mu)};
}

bool cone_check_via_polytope(const Matrix& m) {
  require_nonnegative(m, "cone_check_via_polytope");
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m.is_zero_row(i)) continue;
    Rational sum;
    for (const auto& x : m.row_view(i)) sum += x;
    rows.push_back(scaled(m.row_view(i), sum.reciprocal()));
  }
  const Matrix dm = Matrix::from_rows(rows, m.cols());
  if (rank(dm) < 2) return true;  // rank 0 and 1 are cone slack
  return is_polytope_slack(dm).verdict;
}

PolarRealization polar_realization(const Matrix& m) {
  if (!is_polytope_slack(m).verdict) throw InvalidInput("polar_realization: matrix is not a polytope slack matrix");
  const Matrix mt = m.transpose();
  if (!is_polytope_slack(mt).verdict)
    throw InvalidInput("polar_realization: transpose is not a polytope slack matrix");

  // y >= 0 with y^T M = 1^T
  const std::size_t p = m.rows();
  std::vector<LinearConstraint> cons;
  for (std::size_t j = 0; j < m.cols(); ++j) cons.push_back({m.column(j), Relation::Equal, 1});
  for (std::size_t i = 0; i < p; ++i) cons.push_back({unit(p, i), Relation::GreaterEqual, 0});
  const auto y = find_feasible_point(p, cons);
  if (!y) throw std::logic_error("polar_realization: 1 is not in the row cone");

  Rational alpha;
  for (const auto& v : *y) alpha += v;
  const Matrix scaled_m = alpha * m;
  const RankFactorization f = rank_factorization(scaled_m - Matrix::ones(m.rows(), m.cols()));
  const std::size_t d = f.left.cols();

  std::vector<Halfspace> facets;
  std::vector<Vector> polar_points;
  for (std::size_t j = 0; j < f.right.cols(); ++j) {
    Vector normal = scaled(f.right.column(j), Rational(-1));
    facets.push_back({1, normal});
    polar_points.push_back(std::move(normal));
  }
  PolarRealization out{PolytopeRep::from_points(d, f.left.row_list()),
                       PolytopeRep::from_halfspaces(d, std::move(facets)),
                       PolytopeRep::from_points(d, std::move(polar_points)), alpha, scaled_m};

  std::vector<Halfspace> polar_facets;
  for (const auto& v : out.polytope.points) polar_facets.push_back({1, v});
  const PolytopeRep polar_h = PolytopeRep::from_halfspaces(d, std::move(polar_facets));
  if (slack_of_polytope(out.polytope, out.facets) != scaled_m ||
      slack_of_polytope(out.polar_vertices, polar_h) != scaled_m.transpose() || !origin_in_interior(out.polytope))
    throw std::logic_error("polar_realization: realization check failed");
  return out;
}

}  // namespace slackmat
