#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "slackmat/errors.hpp"
#include "slackmat/linalg.hpp"
#include "slackmat/recognition.hpp"

using namespace slackmat;

namespace {

void check_certificate(const Matrix& m, const RecognitionResult& r) {
  if (r.verdict) {
    REQUIRE(r.yes);
    CHECK_FALSE(r.no);
    CHECK(r.yes->a * r.yes->b == m);
    CHECK(verify_yes_certificate(m, *r.yes));
  } else {
    REQUIRE(r.no);
    CHECK_FALSE(r.yes);
    CHECK(verify_no_certificate(m, *r.no));
  }
}

/// Mixed corpus of small nonnegative matrices.
Matrix random_candidate(fixtures::Rng& rng) {
  const auto p = static_cast<std::size_t>(fixtures::uniform(rng, 1, 5));
  const auto q = static_cast<std::size_t>(fixtures::uniform(rng, 1, 5));
  switch (fixtures::uniform(rng, 0, 2)) {
    case 0:
      return fixtures::sparse_matrix(rng, p, q, 50);
    case 1:
      return fixtures::low_rank_matrix(rng, p, q, static_cast<std::size_t>(fixtures::uniform(rng, 1, 3)));
    default: {
      const auto d = static_cast<std::size_t>(fixtures::uniform(rng, 1, 3));
      const auto verts = fixtures::random_polytope_vertices(rng, d, 5);
      const auto facets = oracle::facets_of_points(verts, d);
      return fixtures::scale_rows(oracle::slack(verts, facets), fixtures::positive_vector(rng, verts.size()));
    }
  }
}

}  // namespace

TEST_CASE("ccgc and rcgc on the worked examples") {
  CHECK(ccgc_check(fixtures::prism()).verdict);
  CHECK(rcgc_check(fixtures::prism()).verdict);
  CHECK(ccgc_check(Matrix::identity(3)).verdict);
  CHECK(rcgc_check(Matrix(2, 3)).verdict);

  const Matrix bad = fixtures::half_plane_counterexample();
  const auto c = ccgc_check(bad);
  CHECK_FALSE(c.verdict);
  CHECK(c.reason == RejectReason::NotConeGenerating);
  CHECK(c.no->convention == SpanConvention::Column);
  CHECK(verify_no_certificate(bad, *c.no));
  const auto r = rcgc_check(bad);
  CHECK_FALSE(r.verdict);
  CHECK(r.no->convention == SpanConvention::Row);
  CHECK(verify_no_certificate(bad, *r.no));

  CHECK_THROWS_AS(ccgc_check(Matrix{{1, -1}}), InvalidInput);
}

TEST_CASE("is_cone_slack") {
  const auto prism = is_cone_slack(fixtures::prism());
  CHECK(prism.verdict);
  check_certificate(fixtures::prism(), prism);
  CHECK(is_cone_slack(Matrix{{1}, {2}}).verdict);
  CHECK(is_cone_slack(Matrix{{1}, {2}}).rank == 1);
  CHECK(is_cone_slack(Matrix(2, 2)).verdict);
  const auto bad = is_cone_slack(fixtures::half_plane_counterexample());
  CHECK_FALSE(bad.verdict);
  check_certificate(fixtures::half_plane_counterexample(), bad);
  CHECK(is_cone_slack(fixtures::prism().transpose()).verdict);
}

TEST_CASE("is_polytope_slack") {
  const auto prism = is_polytope_slack(fixtures::prism());
  CHECK(prism.verdict);
  CHECK(prism.kind == SlackKind::Polytope);
  CHECK(prism.rank == 4);
  REQUIRE(prism.yes->mu);
  check_certificate(fixtures::prism(), prism);

  const auto t = is_polytope_slack(fixtures::prism().transpose());
  CHECK_FALSE(t.verdict);
  CHECK(t.reason == RejectReason::OnesNotInColumnSpan);
  check_certificate(fixtures::prism().transpose(), t);

  CHECK(is_polytope_slack(fixtures::square_cone_slack()).verdict);
  CHECK(is_polytope_slack(fixtures::prism_scaled()).verdict);
  CHECK(is_polytope_slack(fixtures::prism_scaled().transpose()).verdict);

  const auto rank1 = is_polytope_slack(Matrix{{1}, {2}});
  CHECK_FALSE(rank1.verdict);
  CHECK(rank1.reason == RejectReason::RankBelowTwo);
  check_certificate(Matrix{{1}, {2}}, rank1);
}

TEST_CASE("affine criterion") {
  CHECK(affine_criterion_check(Matrix::identity(3)));
  CHECK(affine_criterion_check(fixtures::prism()));
  CHECK_FALSE(affine_criterion_check(fixtures::half_plane_counterexample()));
  CHECK_FALSE(affine_criterion_check(fixtures::prism().transpose()));
  CHECK_THROWS_AS(affine_criterion_check(Matrix{{1}, {2}}), InvalidInput);
}

TEST_CASE("verify_no_certificate by hand") {
  const Matrix m = fixtures::half_plane_counterexample();
  NoCertificate cert{RejectReason::NotConeGenerating, SpanConvention::Row, {1, 0}, {-1, 2}};
  CHECK(verify_no_certificate(m, cert));
  cert.witness_point = {-1, 0};
  CHECK_FALSE(verify_no_certificate(m, cert));
  cert.witness_point = {1, 0};
  cert.separator = {1, -2};
  CHECK_FALSE(verify_no_certificate(m, cert));

  for (const auto& v : std::vector<NoCertificate>{
           {RejectReason::NotConeGenerating, SpanConvention::Column, {1, 0, 0}, {-1, 0, 0}},
           {RejectReason::NotConeGenerating, SpanConvention::Row, {0, 1, 0}, {0, -1, 1}},
           {RejectReason::OnesNotInColumnSpan, SpanConvention::Column, {1, 0, 0}, {}},
           {RejectReason::RankBelowTwo, SpanConvention::Column, {}, {}}})
    CHECK_FALSE(verify_no_certificate(Matrix::identity(3), v));
}

TEST_CASE("reconstruct_cone") {
  const auto id = reconstruct_cone(Matrix::identity(3));
  CHECK(id.generators.vectors.size() == 3);
  CHECK(slack_of_cone(id.generators.vector_matrix(), id.inequalities.vector_matrix().transpose()) == Matrix::identity(3));

  const auto sq = reconstruct_cone(fixtures::square_cone_slack());
  CHECK(sq.generators.ambient_dim == 3);
  const auto lin = lineality_and_pointedness(sq.inequalities);
  CHECK(lin.pointed);
  CHECK(minimal_vrep(sq.generators).vectors.size() == 4);

  const auto ray = reconstruct_cone(Matrix{{1}, {2}});
  CHECK(ray.generators.ambient_dim == 1);
  CHECK(slack_of_cone(ray.generators.vector_matrix(), ray.inequalities.vector_matrix().transpose()) == Matrix{{1}, {2}});

  CHECK_THROWS_AS(reconstruct_cone(fixtures::half_plane_counterexample()), InvalidInput);
}

TEST_CASE("reconstruct_polytope") {
  const Matrix sq = fixtures::square_cone_slack();
  const auto r = reconstruct_polytope(sq);
  CHECK(slack_of_polytope(r.vertices, r.facets) == sq);
  CHECK(sq * r.mu == Vector(4, Rational(1)));

  const auto given = realize_from_factorization(sq, fixtures::square_factor_left(), fixtures::square_factor_right());
  CHECK(oracle::point_set(given.vertices.points) == oracle::point_set(fixtures::square_quadrilateral()));
  CHECK(slack_of_polytope(given.vertices, given.facets) == sq);

  const auto tri = reconstruct_polytope(Matrix::identity(3));
  CHECK(tri.vertices.ambient_dim == 2);
  CHECK(oracle::affine_dimension(tri.vertices.points, 2) == 2);

  const auto prism = reconstruct_polytope(fixtures::prism());
  CHECK(prism.vertices.ambient_dim == 3);
  CHECK(oracle::hull_vertices(prism.vertices.points, 3).size() == 6);
  CHECK(oracle::facets_of_points(prism.vertices.points, 3).size() == 5);
  CHECK(slack_of_polytope(prism.vertices, prism.facets) == fixtures::prism());

  CHECK_THROWS_AS(reconstruct_polytope(fixtures::prism().transpose()), InvalidInput);
}

TEST_CASE("cone_check_via_polytope") {
  CHECK(cone_check_via_polytope(fixtures::prism()));
  CHECK_FALSE(cone_check_via_polytope(fixtures::half_plane_counterexample()));
  CHECK(cone_check_via_polytope(fixtures::with_zero_rows(fixtures::prism(), 2)));
}

TEST_CASE("polar_realization") {
  const auto pr = polar_realization(fixtures::prism_scaled());
  CHECK(origin_in_interior(pr.polytope));
  CHECK(pr.polar_vertices.points.size() == 5);
  CHECK(oracle::hull_vertices(pr.polar_vertices.points, 3).size() == 5);
  CHECK(oracle::hull_vertices(pr.polytope.points, 3).size() == 6);
  CHECK(slack_of_polytope(pr.polytope, pr.facets) == pr.scaled_matrix);
  // The polar's facets come from the rows of the polytope: slack is the transpose.
  std::vector<Halfspace> polar_facets;
  for (const auto& v : pr.polytope.points) polar_facets.push_back({1, v});
  CHECK(oracle::slack(pr.polar_vertices.points, polar_facets) == pr.scaled_matrix.transpose());

  const auto id = polar_realization(Matrix::identity(3));
  CHECK(id.scale == 3);
  CHECK(id.polytope.ambient_dim == 2);
  CHECK(origin_in_interior(id.polytope));
  CHECK(id.polar_vertices.points.size() == 3);

  CHECK_THROWS_AS(polar_realization(fixtures::prism()), InvalidInput);
}

TEST_CASE("random matrices: equivalences, invariances and certificates") {
  fixtures::Rng rng(31);
  int yes = 0, no = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const Matrix m = random_candidate(rng);
    const auto cone = is_cone_slack(m);
    const auto c = ccgc_check(m);
    const auto r = rcgc_check(m);
    check_certificate(m, cone);
    check_certificate(m, c);
    check_certificate(m, r);
    CHECK(c.verdict == cone.verdict);
    CHECK(r.verdict == cone.verdict);
    CHECK(cone_check_via_polytope(m) == cone.verdict);
    (cone.verdict ? yes : no)++;

    CHECK(is_cone_slack(m.transpose()).verdict == cone.verdict);
    CHECK(is_cone_slack(fixtures::with_zero_rows(m, 1)).verdict == cone.verdict);
    const Matrix scaled_m = fixtures::scale_columns(fixtures::scale_rows(m, fixtures::positive_vector(rng, m.rows())),
                                                    fixtures::positive_vector(rng, m.cols()));
    CHECK(is_cone_slack(scaled_m).verdict == cone.verdict);

    const auto poly = is_polytope_slack(m);
    check_certificate(m, poly);
    if (poly.verdict) CHECK(cone.verdict);
    if (rank(m) >= 2) CHECK(affine_criterion_check(m) == poly.verdict);
    CHECK(is_polytope_slack(fixtures::scale_columns(m, fixtures::positive_vector(rng, m.cols()))).verdict == poly.verdict);
    if (poly.verdict) {
      const auto re = reconstruct_polytope(m);
      CHECK(slack_of_polytope(re.vertices, re.facets) == m);
      CHECK(re.vertices.ambient_dim + 1 == poly.rank);
    }
  }
  CHECK(yes > 10);
  CHECK(no > 10);
}
