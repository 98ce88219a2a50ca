#ifndef SLACKMAT_LP_HPP
#define SLACKMAT_LP_HPP

#include <optional>
#include <span>
#include <vector>

#include "slackmat/rational.hpp"

namespace slackmat {

enum class Relation { LessEqual, GreaterEqual, Equal };

/// coefficients . x  (relation)  rhs
struct LinearConstraint {
  Vector coefficients;
  Relation relation = Relation::LessEqual;
  Rational rhs;
};

enum class Sense { Maximize, Minimize };

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  Vector optimal_point;     // Optimal only
  Rational optimal_value;   // Optimal only
  /// Infeasible only. One multiplier u_i per constraint with u_i >= 0 on
  /// "<=" rows, u_i <= 0 on ">=" rows, free on "=" rows, sum u_i a_i = 0 and
  /// sum u_i b_i = -1; summing u_i (a_i x - b_i) then gives 0 <= -1.
  Vector dual_certificate;
};

/**
 * Exact two-phase primal simplex over free variables.
 *
 * Variables are unrestricted in sign; add explicit ">= 0" rows where needed.
 * Entering and leaving variables follow Bland's rule, so the method
 * terminates and the result is deterministic.
 */
LpOutcome lp_solve(const Vector& objective, std::span<const LinearConstraint> constraints, Sense sense);

/// Any point satisfying all constraints, or nullopt when infeasible.
std::optional<Vector> find_feasible_point(std::size_t num_vars, std::span<const LinearConstraint> constraints);

bool satisfies(std::span<const LinearConstraint> constraints, const Vector& x);

/// Checks the multiplier conditions documented on LpOutcome::dual_certificate.
bool is_farkas_certificate(std::span<const LinearConstraint> constraints, const Vector& multipliers);

}  // namespace slackmat

#endif  // SLACKMAT_LP_HPP
