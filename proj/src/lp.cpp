#include "slackmat/lp.hpp"

#include <cstddef>

#include "slackmat/errors.hpp"
#include "slackmat/matrix.hpp"

namespace slackmat {

namespace {

// Dense tableau for  min c^T z  s.t.  T z = rhs, z >= 0, with an explicit basis.
class Tableau {
 public:
  Tableau(Matrix t, Vector rhs, std::vector<std::size_t> basis)
      : t_(std::move(t)), rhs_(std::move(rhs)), basis_(std::move(basis)), active_(t_.rows(), true) {}

  enum class Result { Optimal, Unbounded };

  // Columns >= allowed_cols never enter.
  Result minimize(const Vector& cost, std::size_t allowed_cols) {
    for (;;) {
      const Vector rc = reduced_costs(cost);
      std::size_t entering = allowed_cols;
      for (std::size_t j = 0; j < allowed_cols; ++j)
        if (rc[j].sign() < 0) {
          entering = j;
          break;
        }
      if (entering == allowed_cols) return Result::Optimal;

      std::size_t leaving = t_.rows();
      Rational best;
      for (std::size_t i = 0; i < t_.rows(); ++i) {
        if (!active_[i] || t_(i, entering).sign() <= 0) continue;
        const Rational ratio = rhs_[i] / t_(i, entering);
        if (leaving == t_.rows() || ratio < best || (ratio == best && basis_[i] < basis_[leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      if (leaving == t_.rows()) return Result::Unbounded;
      pivot(leaving, entering);
    }
  }

  Vector reduced_costs(const Vector& cost) const {
    Vector rc = cost;
    for (std::size_t i = 0; i < t_.rows(); ++i) {
      if (!active_[i] || cost[basis_[i]].is_zero()) continue;
      const Rational& cb = cost[basis_[i]];
      for (std::size_t j = 0; j < t_.cols(); ++j)
        if (!t_(i, j).is_zero()) rc[j] -= cb * t_(i, j);
    }
    return rc;
  }

  Rational objective_value(const Vector& cost) const {
    Rational v;
    for (std::size_t i = 0; i < t_.rows(); ++i)
      if (active_[i]) v += cost[basis_[i]] * rhs_[i];
    return v;
  }

  // y^T = c_B^T B^{-1}, read off the columns that started as the identity.
  Vector duals(const Vector& cost, std::size_t identity_start) const {
    Vector y(t_.rows());
    for (std::size_t r = 0; r < t_.rows(); ++r)
      for (std::size_t i = 0; i < t_.rows(); ++i)
        if (active_[i]) y[r] += cost[basis_[i]] * t_(i, identity_start + r);
    return y;
  }

  // Pivots basic columns >= first_banned out of the basis; rows where that is
  // impossible are linearly dependent and get deactivated.
  void expel_basic_columns(std::size_t first_banned) {
    for (std::size_t i = 0; i < t_.rows(); ++i) {
      if (!active_[i] || basis_[i] < first_banned) continue;
      std::size_t j = 0;
      while (j < first_banned && t_(i, j).is_zero()) ++j;
      if (j < first_banned)
        pivot(i, j);
      else
        active_[i] = false;
    }
  }

  Vector values() const {
    Vector z(t_.cols());
    for (std::size_t i = 0; i < t_.rows(); ++i)
      if (active_[i]) z[basis_[i]] = rhs_[i];
    return z;
  }

 private:
  void pivot(std::size_t row, std::size_t col) {
    const Rational inv = t_(row, col).reciprocal();
    for (std::size_t j = 0; j < t_.cols(); ++j) t_(row, j) *= inv;
    rhs_[row] *= inv;
    for (std::size_t i = 0; i < t_.rows(); ++i) {
      if (i == row || !active_[i] || t_(i, col).is_zero()) continue;
      const Rational f = t_(i, col);
      for (std::size_t j = 0; j < t_.cols(); ++j)
        if (!t_(row, j).is_zero()) t_(i, j) -= f * t_(row, j);
      rhs_[i] -= f * rhs_[row];
    }
    basis_[row] = col;
  }

  Matrix t_;
  Vector rhs_;
  std::vector<std::size_t> basis_;
  std::vector<bool> active_;
};

}  // namespace

LpOutcome lp_solve(const Vector& objective, std::span<const LinearConstraint> constraints, Sense sense) {
  const std::size_t n = objective.size();
  const std::size_t m = constraints.size();
  for (const auto& c : constraints)
    if (c.coefficients.size() != n) throw InvalidInput("lp_solve: constraint length differs from objective length");

  // Columns: x+ (n), x- (n), one slack per inequality, one artificial per row.
  std::size_t slacks = 0;
  for (const auto& c : constraints) slacks += c.relation != Relation::Equal;
  const std::size_t art_start = 2 * n + slacks;
  const std::size_t cols = art_start + m;

  Matrix t(m, cols);
  Vector rhs(m);
  std::vector<int> flip(m, 1);
  std::vector<std::size_t> basis(m);
  std::size_t slack = 2 * n;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = constraints[i];
    flip[i] = c.rhs.sign() < 0 ? -1 : 1;
    const Rational s(flip[i]);
    for (std::size_t j = 0; j < n; ++j) {
      t(i, j) = s * c.coefficients[j];
      t(i, n + j) = -t(i, j);
    }
    if (c.relation == Relation::LessEqual) t(i, slack++) = s;
    if (c.relation == Relation::GreaterEqual) t(i, slack++) = -s;
    t(i, art_start + i) = 1;
    rhs[i] = s * c.rhs;
    basis[i] = art_start + i;
  }

  Tableau tab(std::move(t), std::move(rhs), std::move(basis));
  Vector phase1(cols);
  for (std::size_t i = 0; i < m; ++i) phase1[art_start + i] = 1;
  tab.minimize(phase1, art_start);

  LpOutcome out;
  const Rational infeasibility = tab.objective_value(phase1);
  if (infeasibility.sign() > 0) {
    const Vector y = tab.duals(phase1, art_start);
    out.status = LpStatus::Infeasible;
    out.dual_certificate.resize(m);
    for (std::size_t i = 0; i < m; ++i) out.dual_certificate[i] = -Rational(flip[i]) * y[i] / infeasibility;
    return out;
  }

  tab.expel_basic_columns(art_start);
  Vector phase2(cols);
  for (std::size_t j = 0; j < n; ++j) {
    phase2[j] = sense == Sense::Minimize ? objective[j] : -objective[j];
    phase2[n + j] = -phase2[j];
  }
  if (tab.minimize(phase2, art_start) == Tableau::Result::Unbounded) {
    out.status = LpStatus::Unbounded;
    return out;
  }
  const Vector z = tab.values();
  out.status = LpStatus::Optimal;
  out.optimal_point.resize(n);
  for (std::size_t j = 0; j < n; ++j) out.optimal_point[j] = z[j] - z[n + j];
  out.optimal_value = dot(objective, out.optimal_point);
  return out;
}

std::optional<Vector> find_feasible_point(std::size_t num_vars, std::span<const LinearConstraint> constraints) {
  const LpOutcome r = lp_solve(Vector(num_vars), constraints, Sense::Minimize);
  if (r.status != LpStatus::Optimal) return std::nullopt;
  return r.optimal_point;
}

bool satisfies(std::span<const LinearConstraint> constraints, const Vector& x) {
  for (const auto& c : constraints) {
    if (c.coefficients.size() != x.size()) return false;
    const Rational lhs = dot(c.coefficients, x);
    switch (c.relation) {
      case Relation::LessEqual:
        if (lhs > c.rhs) return false;
        break;
      case Relation::GreaterEqual:
        if (lhs < c.rhs) return false;
        break;
      case Relation::Equal:
        if (lhs != c.rhs) return false;
        break;
    }
  }
  return true;
}

bool is_farkas_certificate(std::span<const LinearConstraint> constraints, const Vector& multipliers) {
  if (multipliers.size() != constraints.size()) return false;
  if (constraints.empty()) return false;
  const std::size_t n = constraints.front().coefficients.size();
  Vector combo(n);
  Rational bound;
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    const auto& c = constraints[i];
    const Rational& u = multipliers[i];
    if (c.coefficients.size() != n) return false;
    if (c.relation == Relation::LessEqual && u.sign() < 0) return false;
    if (c.relation == Relation::GreaterEqual && u.sign() > 0) return false;
    for (std::size_t j = 0; j < n; ++j) combo[j] += u * c.coefficients[j];
    bound += u * c.rhs;
  }
  return is_zero_vector(combo) && bound.sign() < 0;
}

}  // namespace slackmat
