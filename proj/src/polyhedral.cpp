#include "slackmat/polyhedral.hpp"

#include <set>

#include "slackmat/errors.hpp"
#include "slackmat/linalg.hpp"
#include "slackmat/lp.hpp"

namespace slackmat {

namespace {

void check_lengths(const std::vector<Vector>& vs, std::size_t n, const char* what) {
  for (const auto& v : vs)
    if (v.size() != n) throw InvalidInput(std::string(what) + ": vector length differs from ambient dimension");
}

// x in cone(generators): lambda >= 0 with sum lambda_i g_i = x.
bool in_cone(const Vector& x, const std::vector<Vector>& generators) {
  const std::size_t k = generators.size();
  std::vector<LinearConstraint> cons;
  for (std::size_t j = 0; j < x.size(); ++j) {
    Vector row(k);
    for (std::size_t i = 0; i < k; ++i) row[i] = generators[i][j];
    cons.push_back({std::move(row), Relation::Equal, x[j]});
  }
  for (std::size_t i = 0; i < k; ++i) {
    Vector row(k);
    row[i] = 1;
    cons.push_back({std::move(row), Relation::GreaterEqual, 0});
  }
  return find_feasible_point(k, cons).has_value();
}

std::vector<LinearConstraint> as_constraints(const PolytopeRep& h) {
  std::vector<LinearConstraint> cons;
  for (const auto& hs : h.inequalities) cons.push_back({hs.normal, Relation::LessEqual, hs.bound});
  return cons;
}

// Rank of the rows listed in `rows`, or 0 when none.
std::size_t rank_of(const std::vector<Vector>& rows, std::size_t n) {
  if (rows.empty()) return 0;
  return rank(Matrix::from_rows(rows, n));
}

}  // namespace

ConeRep ConeRep::generated_by(std::size_t n, std::vector<Vector> generators, std::vector<Vector> lineality) {
  check_lengths(generators, n, "cone generators");
  check_lengths(lineality, n, "cone lineality");
  return {Form::V, n, std::move(generators), std::move(lineality)};
}

ConeRep ConeRep::defined_by(std::size_t n, std::vector<Vector> normals) {
  check_lengths(normals, n, "cone normals");
  return {Form::H, n, std::move(normals), {}};
}

Matrix ConeRep::vector_matrix() const { return Matrix::from_rows(vectors, ambient_dim); }

PolytopeRep PolytopeRep::from_points(std::size_t n, std::vector<Vector> points) {
  check_lengths(points, n, "polytope points");
  PolytopeRep p;
  p.form = Form::V;
  p.ambient_dim = n;
  p.points = std::move(points);
  return p;
}

PolytopeRep PolytopeRep::from_halfspaces(std::size_t n, std::vector<Halfspace> inequalities) {
  for (const auto& h : inequalities)
    if (h.normal.size() != n) throw InvalidInput("polytope inequality: normal length differs from ambient dimension");
  PolytopeRep p;
  p.form = Form::H;
  p.ambient_dim = n;
  p.inequalities = std::move(inequalities);
  return p;
}

ConeRep minimal_vrep(const ConeRep& v) {
  if (v.form != Form::V) throw InvalidInput("minimal_vrep: expected a V-form cone");
  const std::size_t n = v.ambient_dim;

  std::vector<Vector> all;
  std::set<Vector> seen;
  auto push = [&](const Vector& g) {
    if (is_zero_vector(g)) return;
    Vector c = canonical_ray(g);
    if (seen.insert(c).second) all.push_back(std::move(c));
  };
  for (const auto& g : v.vectors) push(g);
  for (const auto& l : v.lineality_basis) {
    push(l);
    push(scaled(l, Rational(-1)));
  }

  // lineal(cone(G)) is spanned by the generators g with -g in cone(G)
  std::vector<Vector> in_lineality, rest;
  for (const auto& g : all) (in_cone(scaled(g, Rational(-1)), all) ? in_lineality : rest).push_back(g);

  std::vector<Vector> lineality;
  if (!in_lineality.empty()) {
    const Matrix lm = Matrix::from_rows(in_lineality, n);
    for (auto i : independent_rows(lm)) lineality.push_back(in_lineality[i]);
  }

  std::vector<Vector> projected;
  seen.clear();
  for (const auto& g : rest) {
    Vector p = project_out(g, lineality);
    if (is_zero_vector(p)) continue;
    p = canonical_ray(p);
    if (seen.insert(p).second) projected.push_back(std::move(p));
  }

  std::vector<Vector> extreme;
  for (std::size_t i = 0; i < projected.size(); ++i) {
    std::vector<Vector> others;
    for (std::size_t j = 0; j < projected.size(); ++j)
      if (j != i) others.push_back(projected[j]);
    if (!in_cone(projected[i], others)) extreme.push_back(projected[i]);
  }
  return ConeRep::generated_by(n, std::move(extreme), std::move(lineality));
}

LinealityInfo lineality_and_pointedness(const ConeRep& c) {
  std::size_t dim = 0;
  if (c.form == Form::H)
    dim = right_kernel_basis(c.vector_matrix()).size();
  else
    dim = minimal_vrep(c).lineality_basis.size();
  return {dim, dim == 0};
}

ConeRep homogenize(const PolytopeRep& p) {
  const std::size_t n = p.ambient_dim;
  std::vector<Vector> out;
  if (p.form == Form::V) {
    for (const auto& v : p.points) {
      Vector g{Rational(1)};
      g.insert(g.end(), v.begin(), v.end());
      out.push_back(std::move(g));
    }
    return ConeRep::generated_by(n + 1, std::move(out));
  }
  for (const auto& h : p.inequalities) {
    Vector b{h.bound};
    for (const auto& a : h.normal) b.push_back(-a);
    out.push_back(std::move(b));
  }
  return ConeRep::defined_by(n + 1, std::move(out));
}

Matrix homogenized_points(const PolytopeRep& v) {
  if (v.form != Form::V) throw InvalidInput("expected a V-form polytope");
  return homogenize(v).vector_matrix();
}

Matrix homogenized_inequalities(const PolytopeRep& h) {
  if (h.form != Form::H) throw InvalidInput("expected an H-form polytope");
  return homogenize(h).vector_matrix().transpose();
}

Matrix slack_of_cone(const Matrix& a, const Matrix& b) {
  Matrix s = a * b;
  if (!s.is_nonnegative()) throw InvalidInput("not a representation pair");
  return s;
}

Matrix slack_of_polytope(const PolytopeRep& v, const PolytopeRep& h) {
  if (v.form != Form::V || h.form != Form::H) throw InvalidInput("slack_of_polytope: expected (V-form, H-form)");
  if (v.ambient_dim != h.ambient_dim) throw InvalidInput("slack_of_polytope: ambient dimensions differ");
  Matrix s = homogenized_points(v) * homogenized_inequalities(h);
  if (!s.is_nonnegative()) throw InvalidInput("slack_of_polytope: a point violates an inequality");
  return s;
}

std::size_t dimension(const ConeRep& c) {
  const std::size_t n = c.ambient_dim;
  if (c.form == Form::V) {
    std::vector<Vector> all = c.vectors;
    all.insert(all.end(), c.lineality_basis.begin(), c.lineality_basis.end());
    return rank_of(all, n);
  }
  std::vector<LinearConstraint> cone;
  for (const auto& b : c.vectors) cone.push_back({b, Relation::GreaterEqual, 0});
  std::vector<Vector> implicit;
  for (const auto& b : c.vectors) {
    auto cons = cone;
    cons.push_back({b, Relation::LessEqual, 1});
    const LpOutcome r = lp_solve(b, cons, Sense::Maximize);
    if (r.status == LpStatus::Optimal && r.optimal_value.is_zero()) implicit.push_back(b);
  }
  return n - rank_of(implicit, n);
}

std::size_t dimension(const PolytopeRep& p) {
  const std::size_t n = p.ambient_dim;
  if (p.form == Form::V) {
    if (p.points.empty()) throw InvalidInput("empty");
    return rank(homogenized_points(p)) - 1;
  }
  const auto cons = as_constraints(p);
  if (!find_feasible_point(n, cons)) throw InvalidInput("empty");
  // a_j x <= beta_j is implicit iff max (beta_j - a_j x) over the polyhedron is 0
  std::vector<Vector> implicit;
  for (const auto& h : p.inequalities) {
    const LpOutcome r = lp_solve(scaled(h.normal, Rational(-1)), cons, Sense::Maximize);
    if (r.status == LpStatus::Optimal && (r.optimal_value + h.bound).is_zero()) implicit.push_back(h.normal);
  }
  return n - rank_of(implicit, n);
}

bool origin_in_interior(const PolytopeRep& v) {
  if (v.form != Form::V) throw InvalidInput("origin_in_interior: expected a V-form polytope");
  if (v.points.empty() || dimension(v) != v.ambient_dim) return false;
  // max t  s.t.  sum l_i v_i = 0, sum l_i = 1, l_i >= t, t <= 1; variables (l, t)
  const std::size_t k = v.points.size();
  std::vector<LinearConstraint> cons;
  for (std::size_t j = 0; j < v.ambient_dim; ++j) {
    Vector row(k + 1);
    for (std::size_t i = 0; i < k; ++i) row[i] = v.points[i][j];
    cons.push_back({std::move(row), Relation::Equal, 0});
  }
  Vector sum(k + 1, Rational(1));
  sum[k] = 0;
  cons.push_back({std::move(sum), Relation::Equal, 1});
  for (std::size_t i = 0; i < k; ++i) {
    Vector row(k + 1);
    row[i] = 1;
    row[k] = -1;
    cons.push_back({std::move(row), Relation::GreaterEqual, 0});
  }
  Vector cap(k + 1);
  cap[k] = 1;
  cons.push_back({cap, Relation::LessEqual, 1});
  const LpOutcome r = lp_solve(cap, cons, Sense::Maximize);
  return r.status == LpStatus::Optimal && r.optimal_value.sign() > 0;
}

PolytopeRep polytope_v_to_h(const PolytopeRep& v) {
  if (v.form != Form::V) throw InvalidInput("polytope_v_to_h: expected a V-form polytope");
  if (v.points.empty()) throw InvalidInput("empty");
  const ConeRep h = dd_v_to_h(homogenize(v));
  std::vector<Halfspace> out;
  for (const auto& b : h.vectors) {
    Vector a(b.begin() + 1, b.end());
    out.push_back({b[0], scaled(a, Rational(-1))});
  }
  return PolytopeRep::from_halfspaces(v.ambient_dim, std::move(out));
}

PolytopeRep polytope_h_to_v(const PolytopeRep& h) {
  if (h.form != Form::H) throw InvalidInput("polytope_h_to_v: expected an H-form polytope");
  ConeRep cone = homogenize(h);
  Vector e0(h.ambient_dim + 1);
  e0[0] = 1;
  cone.vectors.push_back(std::move(e0));
  const ConeRep v = dd_h_to_v(cone);
  if (!v.lineality_basis.empty()) throw InvalidInput("polytope_h_to_v: unbounded");
  std::vector<Vector> points;
  for (const auto& r : v.vectors) {
    if (r[0].is_zero()) throw InvalidInput("polytope_h_to_v: unbounded");
    Vector p(r.begin() + 1, r.end());
    points.push_back(scaled(p, r[0].reciprocal()));
  }
  if (points.empty()) throw InvalidInput("empty");
  return PolytopeRep::from_points(h.ambient_dim, std::move(points));
}

PolytopeRep polar(const PolytopeRep& v) {
  if (!origin_in_interior(v)) throw InvalidInput("polar: 0 is not an interior point");
  const PolytopeRep facets = polytope_v_to_h(v);
  std::vector<Vector> points;
  for (const auto& f : facets.inequalities) points.push_back(scaled(f.normal, f.bound.reciprocal()));
  return PolytopeRep::from_points(v.ambient_dim, std::move(points));
}

}  // namespace slackmat
