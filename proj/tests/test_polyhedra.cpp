#include <doctest.h>

#include "efforge/polyhedra.hpp"
#include "efforge/rng.hpp"

using namespace efforge;

namespace {

RatVec rv(std::initializer_list<long> xs) {
  RatVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

LinearRow row(std::initializer_list<long> coeffs, long rhs) {
  return {rv(coeffs), Rational(rhs)};
}

ExtendedFormulation identity_ef(int dim) {
  ExtendedFormulation ef;
  ef.dim = dim;
  ef.projection_offset = zeros(dim);
  for (int r = 0; r < dim; ++r) {
    RatVec prow = zeros(dim);
    prow[static_cast<size_t>(r)] = 1;
    ef.projection_matrix.push_back(std::move(prow));
  }
  return ef;
}

// [0,1] in one variable, inequalities {-x <= 0, x <= 1}, identity projection.
ExtendedFormulation unit_segment() {
  ExtendedFormulation ef = identity_ef(1);
  ef.inequalities = {row({-1}, 0), row({1}, 1)};
  return ef;
}

// conv{(0,0),(1,0),(0,1)} as {-x <= 0, x1 + x2 <= 1}.
ExtendedFormulation triangle() {
  ExtendedFormulation ef = identity_ef(2);
  ef.inequalities = {row({-1, 0}, 0), row({0, -1}, 0), row({1, 1}, 1)};
  return ef;
}

}  // namespace

TEST_CASE("optimize over simple formulations") {
  ExtendedFormulation segment = unit_segment();
  CHECK(optimize(segment, rv({1})).value == 1);
  CHECK(optimize(segment, rv({-1})).value == 0);
  AmbientOptimum opt = optimize(triangle(), rv({1, 1}));
  CHECK(opt.value == 1);

  ExtendedFormulation empty = identity_ef(1);
  empty.inequalities = {row({1}, -1), row({-1}, 0)};
  CHECK_THROWS_AS(optimize(empty, rv({1})), std::domain_error);

  ExtendedFormulation ray = identity_ef(1);
  ray.inequalities = {row({-1}, 0)};
  CHECK_THROWS_AS(optimize(ray, rv({1})), std::domain_error);
}

TEST_CASE("fiber membership") {
  ExtendedFormulation tri = triangle();
  CHECK(contains_in_fiber(tri, rv({0, 0})));
  CHECK(contains_in_fiber(tri, rv({1, 0})));
  RatVec interior = {rational_from_string("1/3"), rational_from_string("1/3")};
  CHECK(contains_in_fiber(tri, interior));
  CHECK_FALSE(contains_in_fiber(tri, rv({1, 1})));

  // A genuine extension: [0,1] as the shadow of the triangle.
  ExtendedFormulation shadow = triangle();
  shadow.projection_matrix = {rv({1, 0})};
  shadow.projection_offset = zeros(1);
  CHECK(contains_in_fiber(shadow, rv({1})));
  CHECK_FALSE(contains_in_fiber(shadow, rv({2})));
}

TEST_CASE("slack representation of the unit segment") {
  ExtendedFormulation slack = slack_representation(unit_segment());
  CHECK(slack.dim == 2);
  CHECK(slack.size() == 2);
  CHECK(slack.is_subspace_extension());
  REQUIRE(slack.equations.size() == 1);
  // The affine subspace is z1 + z2 = 1 (up to row scaling).
  const auto& eq = slack.equations[0];
  REQUIRE(sgn(eq.coeffs[0]) != 0);
  CHECK(eq.coeffs[1] == eq.coeffs[0]);
  CHECK(eq.rhs == eq.coeffs[0]);
  // Slack of x = 2/5 is (2/5, 3/5); it must project back to 2/5.
  RatVec z = {rational_from_string("2/5"), rational_from_string("3/5")};
  CHECK(slack.project(z) == RatVec{rational_from_string("2/5")});
  CHECK(optimize(slack, rv({1})).value == 1);
  CHECK(optimize(slack, rv({-1})).value == 0);
}

TEST_CASE("slack representation of the triangle") {
  ExtendedFormulation tri = triangle();
  ExtendedFormulation slack = slack_representation(tri);
  CHECK(slack.dim == 3);
  CHECK(slack.size() == 3);
  CHECK(slack.is_subspace_extension());
  CHECK(slack.equations.size() == 1);  // 3 slacks on a 2-dim affine subspace
  for (auto c : {rv({1, 0}), rv({-1, 0}), rv({0, 1}), rv({0, -1}), rv({1, 1})})
    CHECK(optimize(slack, c).value == optimize(tri, c).value);
}

TEST_CASE("slack representation is size-idempotent on subspace extensions") {
  // The 2-simplex {z >= 0, z1+z2+z3 = 1} is already a subspace extension.
  ExtendedFormulation simplex = identity_ef(3);
  simplex.equations = {row({1, 1, 1}, 1)};
  simplex.inequalities = {row({-1, 0, 0}, 0), row({0, -1, 0}, 0), row({0, 0, -1}, 0)};
  CHECK(simplex.is_subspace_extension());
  ExtendedFormulation slack = slack_representation(simplex);
  CHECK(slack.size() == simplex.size());
  CHECK(slack.is_subspace_extension());
}

TEST_CASE("slack size equals irredundant row count") {
  // Duplicated and dominated rows shrink away before the slack transform.
  ExtendedFormulation ef = unit_segment();
  ef.inequalities.push_back(row({1}, 3));   // dominated
  ef.inequalities.push_back(row({-1}, 0));  // duplicate
  LinearProgram irredundant = remove_redundant(ef_constraints_lp(ef, false));
  ExtendedFormulation slack = slack_representation(ef);
  CHECK(slack.size() == static_cast<int>(irredundant.inequalities.size()));
  CHECK(slack.size() == 2);
}

TEST_CASE("infeasible formulation has no slack representation") {
  ExtendedFormulation empty = identity_ef(1);
  empty.inequalities = {row({1}, -1), row({-1}, 0)};
  CHECK_THROWS_AS(slack_representation(empty), std::domain_error);
}

TEST_CASE("verify_projection_equals on the square") {
  ExtendedFormulation square = identity_ef(2);
  square.inequalities = {row({-1, 0}, 0), row({0, -1}, 0), row({1, 0}, 1), row({0, 1}, 1)};
  std::vector<RatVec> vertices = {rv({0, 0}), rv({1, 0}), rv({0, 1}), rv({1, 1})};
  auto suite = objective_suite(2, 30, kDefaultSeed);
  VerificationReport report = verify_projection_equals(square, vertices, suite);
  CHECK(report.ok());
  CHECK(report.summary() == "all checks passed");

  // Drop a facet: the formulation strictly contains the hull and some
  // objective exceeds the brute-force value.
  ExtendedFormulation corrupted = square;
  corrupted.inequalities.pop_back();
  VerificationReport bad = verify_projection_equals(corrupted, vertices, suite);
  CHECK_FALSE(bad.ok());
  CHECK_FALSE(bad.objective_failures.empty());
  CHECK(bad.vertex_failures.empty());

  // A foreign vertex is flagged by the fiber check.
  std::vector<RatVec> with_outlier = vertices;
  with_outlier.push_back(rv({2, 2}));
  VerificationReport outlier = verify_projection_equals(square, with_outlier, suite);
  CHECK(outlier.vertex_failures == std::vector<size_t>{4});

  CHECK_THROWS_AS(verify_projection_equals(square, {}, suite), std::domain_error);
}

TEST_CASE("projected points always sit in their own fiber") {
  // p(y) = y1 + y2 over the triangle: [0,1] is the shadow.
  ExtendedFormulation ef = triangle();
  ef.projection_matrix = {rv({1, 1})};
  ef.projection_offset = zeros(1);
  for (long num = 0; num <= 4; ++num) CHECK(contains_in_fiber(ef, {Rational(num) / 4}));
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Rational a = Rational(rng.next_int(0, 10)) / 20;
    Rational b = Rational(rng.next_int(0, 10)) / 20;
    CHECK(contains_in_fiber(ef, ef.project({a, b})));
  }
}
