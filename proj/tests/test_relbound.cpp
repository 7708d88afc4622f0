#include "doctest.h"

#include "linrel/relbound.hpp"

#include <cmath>
#include <limits>

using namespace linrel;

namespace {

Vector vec(std::initializer_list<Complex> entries) {
  Vector v(static_cast<Index>(entries.size()));
  Index i = 0;
  for (const Complex& z : entries) v(i++) = z;
  return v;
}

LinearRelation diag_op(double a, double b) {
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = a;
  d(1, 1) = b;
  return LinearRelation::from_operator(d, Field::complex);
}

}  // namespace

TEST_CASE("feasibility against closed-form optima") {
  const LinearRelation t = diag_op(1.0, 2.0);
  const LinearRelation s = diag_op(3.0, 1.0);

  // a = |S| dominates |S(x)| on the whole sphere.
  const TBoundFeasibility ok = t_bound_feasible(t, s, 3.0, 0.0);
  CHECK(ok.feasible);
  CHECK(ok.max_violation <= 1e-8);
  CHECK(ok.max_violation >= -1e-4);

  // max over unit x of |S x| - 1.2 |T x| is attained at e1 with value 1.8.
  const TBoundFeasibility bad = t_bound_feasible(t, s, 0.0, 1.2);
  CHECK_FALSE(bad.feasible);
  CHECK(bad.max_violation == doctest::Approx(1.8).epsilon(1e-4));
  REQUIRE(bad.witness.size() == 2);
  CHECK(std::abs(bad.witness(0)) == doctest::Approx(1.0).epsilon(1e-4));

  CHECK_THROWS_AS(t_bound_feasible(t, s, -1.0, 0.0), PreconditionError);
}

TEST_CASE("feasibility is deterministic") {
  const LinearRelation t = diag_op(1.0, 2.0);
  const LinearRelation s = diag_op(3.0, 1.0);
  const TBoundFeasibility r1 = t_bound_feasible(t, s, 0.5, 0.7);
  const TBoundFeasibility r2 = t_bound_feasible(t, s, 0.5, 0.7);
  CHECK(r1.max_violation == r2.max_violation);
  CHECK((r1.witness - r2.witness).norm() == 0.0);
}

TEST_CASE("trade-off curve matches hand values") {
  const LinearRelation t = diag_op(1.0, 2.0);
  const LinearRelation s = diag_op(3.0, 1.0);
  const RelBoundReport report = rel_bound_report(t, s);

  CHECK(report.certified_a_upper == doctest::Approx(3.0));
  CHECK(report.t_bound_estimate == 0.0);
  REQUIRE(report.b_grid.size() == 21);
  REQUIRE(report.min_a_given_b.size() == 21);
  REQUIRE(report.witnesses.size() == 21);

  // At b = 0 the curve is |S| = 3; at b = 2 the maximum of
  // |S x| - 2 |T x| over the sphere sits at e1 with value 1.
  CHECK(report.min_a_given_b.front() == doctest::Approx(3.0).epsilon(1e-4));
  CHECK(report.min_a_given_b.back() == doctest::Approx(1.0).epsilon(1e-3));
  for (size_t i = 1; i < report.min_a_given_b.size(); ++i) {
    CHECK(report.min_a_given_b[i] <= report.min_a_given_b[i - 1] + 1e-12);
  }
  for (const bool f : report.feasible) CHECK(f);
}

TEST_CASE("trivial domain short-circuits") {
  const LinearRelation pure_mul =
      LinearRelation::make({{vec({0, 0}), vec({1, 0})}}, 2, 2, Field::complex);
  const LinearRelation s =
      LinearRelation::from_operator(Matrix::Identity(2, 2), Field::complex);

  const RelBoundReport report = rel_bound_report(pure_mul, s);
  CHECK(report.trivial_domain);
  const TBoundFeasibility f = t_bound_feasible(pure_mul, s, 0.0, 0.0);
  CHECK(f.feasible);
  CHECK(f.max_violation == -std::numeric_limits<double>::infinity());
  CHECK(f.witness.size() == 0);
}

TEST_CASE("domain containment is required") {
  const LinearRelation t =
      LinearRelation::from_operator(Matrix::Identity(2, 2), Field::complex);
  const LinearRelation line = LinearRelation::make(
      {{vec({1, 0}), vec({1, 0})}}, 2, 2, Field::complex);
  CHECK_THROWS_AS(t_bound_feasible(t, line, 1.0, 0.0), PreconditionError);
  CHECK_THROWS_AS(rel_bound_report(t, line), PreconditionError);
}

TEST_CASE("sum inequalities on a dominated perturbation") {
  const LinearRelation t = diag_op(1.0, 2.0);
  const LinearRelation s = diag_op(0.1, 0.2);
  const SumInequalityReport r = verify_sum_inequalities(t, s);
  CHECK(r.b == 0.5);
  CHECK(r.a == doctest::Approx(0.2));
  CHECK(r.samples == 200);
  CHECK(r.worst_hypothesis <= 1e-10);
  CHECK(r.worst_sum_upper <= 1e-10);
  CHECK(r.worst_t_recovery <= 1e-10);
  CHECK(r.mulpart_residual < 1e-12);

  const SumInequalityReport fixed =
      verify_sum_inequalities(t, s, std::make_pair(0.0, 0.95));
  CHECK(fixed.worst_hypothesis <= 1e-10);

  CHECK_THROWS_AS(verify_sum_inequalities(t, s, std::make_pair(1.0, 1.0)),
                  PreconditionError);
  CHECK_THROWS_AS(verify_sum_inequalities(t, s, std::make_pair(-0.1, 0.5)),
                  PreconditionError);
}

TEST_CASE("sum inequalities demand compatible multivalued parts") {
  const LinearRelation t =
      LinearRelation::from_operator(Matrix::Identity(2, 2), Field::complex);
  // S has full domain but sends zero to span{e1}, which T does not absorb.
  const LinearRelation s = LinearRelation::make(
      {{vec({1, 0}), vec({0, 0})},
       {vec({0, 1}), vec({0, 0})},
       {vec({0, 0}), vec({1, 0})}},
      2, 2, Field::complex);
  CHECK_THROWS_AS(verify_sum_inequalities(t, s), PreconditionError);
}
