#include <doctest.h>

#include <vector>

#include "fixtures.hpp"
#include "slackmat/lp.hpp"

using namespace slackmat;

namespace {

LinearConstraint le(Vector a, Rational b) { return {std::move(a), Relation::LessEqual, std::move(b)}; }
LinearConstraint ge(Vector a, Rational b) { return {std::move(a), Relation::GreaterEqual, std::move(b)}; }
LinearConstraint eq(Vector a, Rational b) { return {std::move(a), Relation::Equal, std::move(b)}; }

}  // namespace

TEST_CASE("bounded maximum") {
  const std::vector<LinearConstraint> cs{le({1}, 1)};
  const auto out = lp_solve({1}, cs, Sense::Maximize);
  REQUIRE(out.status == LpStatus::Optimal);
  CHECK(out.optimal_value == 1);
  CHECK(out.optimal_point == Vector{1});
}

TEST_CASE("infeasible system carries a Farkas certificate") {
  const std::vector<LinearConstraint> cs{le({1}, -1), ge({1}, 0)};
  const auto out = lp_solve({1}, cs, Sense::Maximize);
  REQUIRE(out.status == LpStatus::Infeasible);
  CHECK(is_farkas_certificate(cs, out.dual_certificate));
  CHECK_FALSE(find_feasible_point(1, cs));
}

TEST_CASE("unbounded objective") {
  const std::vector<LinearConstraint> cs{ge({1}, 0)};
  CHECK(lp_solve({1}, cs, Sense::Maximize).status == LpStatus::Unbounded);
  CHECK(lp_solve({1}, cs, Sense::Minimize).status == LpStatus::Optimal);
}

TEST_CASE("equalities and a degenerate vertex") {
  // max x + y  s.t. x + y + z = 1, x, y, z >= 0, x - y <= 0, x + 2y <= 1
  const std::vector<LinearConstraint> cs{eq({1, 1, 1}, 1), ge({1, 0, 0}, 0), ge({0, 1, 0}, 0),
                                         ge({0, 0, 1}, 0), le({1, -1, 0}, 0), le({1, 2, 0}, 1)};
  const auto out = lp_solve({1, 1, 0}, cs, Sense::Maximize);
  REQUIRE(out.status == LpStatus::Optimal);
  CHECK(out.optimal_value == Rational(2, 3));
  CHECK(satisfies(cs, out.optimal_point));
}

TEST_CASE("a bad certificate is rejected") {
  const std::vector<LinearConstraint> cs{le({1}, -1), ge({1}, 0)};
  CHECK_FALSE(is_farkas_certificate(cs, {1, 1}));
  CHECK_FALSE(is_farkas_certificate(cs, {-1, -1}));
  CHECK_FALSE(is_farkas_certificate(cs, {1}));
}

TEST_CASE("random systems: optimal points are feasible, infeasibility is certified") {
  fixtures::Rng rng(5);
  int optimal = 0, infeasible = 0, unbounded = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(fixtures::uniform(rng, 1, 4));
    const auto k = static_cast<std::size_t>(fixtures::uniform(rng, 1, 6));
    std::vector<LinearConstraint> cs;
    for (std::size_t i = 0; i < k; ++i) {
      Vector a(n);
      for (auto& x : a) x = fixtures::uniform(rng, -3, 3);
      const int kind = fixtures::uniform(rng, 0, 4);
      const Relation rel = kind == 0 ? Relation::Equal : (kind < 3 ? Relation::LessEqual : Relation::GreaterEqual);
      cs.push_back({a, rel, Rational(fixtures::uniform(rng, -4, 4))});
    }
    Vector c(n);
    for (auto& x : c) x = fixtures::uniform(rng, -2, 2);
    const auto out = lp_solve(c, cs, Sense::Maximize);
    switch (out.status) {
      case LpStatus::Optimal:
        ++optimal;
        CHECK(satisfies(cs, out.optimal_point));
        CHECK(dot(c, out.optimal_point) == out.optimal_value);
        // No feasible point does better: the constraint c.x >= value + 1/100 is infeasible.
        {
          auto tighter = cs;
          tighter.push_back(ge(c, out.optimal_value + Rational(1, 100)));
          CHECK_FALSE(find_feasible_point(n, tighter));
        }
        break;
      case LpStatus::Infeasible:
        ++infeasible;
        CHECK(is_farkas_certificate(cs, out.dual_certificate));
        break;
      case LpStatus::Unbounded:
        ++unbounded;
        REQUIRE(find_feasible_point(n, cs));
        break;
    }
  }
  CHECK(optimal > 0);
  CHECK(infeasible > 0);
  CHECK(unbounded > 0);
}
