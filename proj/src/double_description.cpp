#include <algorithm>
#include <set>

#include "slackmat/errors.hpp"
#include "slackmat/linalg.hpp"
#include "slackmat/polyhedral.hpp"

namespace slackmat {

namespace {

struct Ray {
  Vector coords;
  std::vector<bool> tight;  // per constraint, meaningful for processed ones only
};

// Extreme rays of { a : G a >= 0 } where rank(G) = cols(G), i.e. the cone is pointed.
std::vector<Vector> pointed_extreme_rays(const Matrix& g) {
  const std::size_t dim = g.cols();
  const std::size_t m = g.rows();
  if (dim == 0) return {};

  const auto basis_rows = independent_rows(g);
  if (basis_rows.size() != dim) throw InvalidInput("double description: cone is not pointed");

  std::vector<bool> processed(m, false);
  for (auto r : basis_rows) processed[r] = true;

  // The initial simplicial cone { a : G_I a >= 0 } is generated by the columns of G_I^{-1}.
  const Matrix inv = inverse(g.select_rows(basis_rows));
  std::vector<Ray> rays;
  for (std::size_t k = 0; k < dim; ++k) {
    Ray r{canonical_ray(inv.column(k)), std::vector<bool>(m, false)};
    for (std::size_t i = 0; i < dim; ++i) r.tight[basis_rows[i]] = i != k;
    rays.push_back(std::move(r));
  }

  auto adjacent = [&](const Ray& a, const Ray& b) {
    std::vector<std::size_t> common;
    for (std::size_t j = 0; j < m; ++j)
      if (processed[j] && a.tight[j] && b.tight[j]) common.push_back(j);
    if (common.size() + 2 < dim) return false;
    return rank(g.select_rows(common)) + 2 == dim;
  };

  for (std::size_t h = 0; h < m; ++h) {
    if (processed[h]) continue;
    const auto row = g.row_view(h);
    std::vector<Rational> value(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      value[i] = dot(row, rays[i].coords);
      if (value[i].sign() > 0) pos.push_back(i);
      if (value[i].sign() < 0) neg.push_back(i);
    }
    if (neg.empty()) {
      for (std::size_t i = 0; i < rays.size(); ++i) rays[i].tight[h] = value[i].is_zero();
      processed[h] = true;
      continue;
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (value[i].sign() < 0) continue;
      Ray r = rays[i];
      r.tight[h] = value[i].is_zero();
      next.push_back(std::move(r));
    }
    for (auto p : pos)
      for (auto q : neg) {
        if (!adjacent(rays[p], rays[q])) continue;
        // value[p] * ray_q - value[q] * ray_p lies on the hyperplane h
        Vector c = added(scaled(rays[q].coords, value[p]), scaled(rays[p].coords, -value[q]));
        Ray r{canonical_ray(c), std::vector<bool>(m, false)};
        for (std::size_t j = 0; j < m; ++j) r.tight[j] = processed[j] && rays[p].tight[j] && rays[q].tight[j];
        r.tight[h] = true;
        next.push_back(std::move(r));
      }
    processed[h] = true;
    rays = std::move(next);
  }

  std::vector<Vector> out;
  std::set<Vector> seen;
  for (auto& r : rays)
    if (seen.insert(r.coords).second) out.push_back(std::move(r.coords));
  return out;
}

}  // namespace

Vector canonical_ray(std::span<const Rational> v) {
  Rational norm;
  for (const auto& x : v) norm += x.abs();
  if (norm.is_zero()) throw InvalidInput("canonical_ray: zero vector");
  return scaled(v, norm.reciprocal());
}

ConeRep dd_h_to_v(const ConeRep& h) {
  if (h.form != Form::H) throw InvalidInput("dd_h_to_v: expected an H-form cone");
  const std::size_t n = h.ambient_dim;
  const Matrix normals = h.vector_matrix();

  std::vector<Vector> lineality = right_kernel_basis(normals);
  const RrefResult r = rref(normals);
  const Matrix row_basis = r.reduced.row_block(0, r.rank);  // basis of lineality^perp

  // In coordinates a with x = row_basis^T a, constraint j reads (normals row_basis^T)_j a >= 0.
  const Matrix projected = normals * row_basis.transpose();
  std::vector<Vector> rays;
  for (const auto& a : pointed_extreme_rays(projected)) {
    Vector x(n);
    for (std::size_t k = 0; k < a.size(); ++k)
      for (std::size_t j = 0; j < n; ++j)
        if (!a[k].is_zero()) x[j] += a[k] * row_basis(k, j);
    rays.push_back(canonical_ray(x));
  }
  return ConeRep::generated_by(n, std::move(rays), std::move(lineality));
}

ConeRep dd_v_to_h(const ConeRep& v) {
  if (v.form != Form::V) throw InvalidInput("dd_v_to_h: expected a V-form cone");
  std::vector<Vector> dual_normals = v.vectors;
  for (const auto& l : v.lineality_basis) {
    dual_normals.push_back(l);
    dual_normals.push_back(scaled(l, Rational(-1)));
  }
  const ConeRep dual = dd_h_to_v(ConeRep::defined_by(v.ambient_dim, std::move(dual_normals)));
  std::vector<Vector> normals = dual.vectors;
  for (const auto& e : dual.lineality_basis) {
    normals.push_back(e);
    normals.push_back(scaled(e, Rational(-1)));
  }
  return ConeRep::defined_by(v.ambient_dim, std::move(normals));
}

}  // namespace slackmat
