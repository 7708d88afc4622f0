#include "doctest.h"

#include "linrel/hermitian.hpp"
#include "linrel/norms.hpp"

#include <cmath>

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

Matrix shift2() {
  Matrix s = Matrix::Zero(2, 2);
  s(0, 1) = 1;
  return s;
}

}  // namespace

TEST_CASE("hermitian residual separates symmetric from not") {
  CHECK(hermitian_residual(diag_op(2.0, -3.0)) < 1e-14);
  CHECK(is_hermitian(diag_op(2.0, -3.0)));

  const LinearRelation shift =
      LinearRelation::from_operator(shift2(), Field::complex);
  CHECK(hermitian_residual(shift) > 0.3);
  CHECK_FALSE(is_hermitian(shift));
  CHECK_THROWS_AS(hermitian_report(shift), PreconditionError);

  const LinearRelation wide =
      LinearRelation::from_operator(Matrix::Zero(3, 2), Field::complex);
  CHECK_THROWS_AS(hermitian_residual(wide), DimensionError);
}

TEST_CASE("hermitian report classifies fixed spectra") {
  const HermitianReport indef = hermitian_report(diag_op(2.0, -3.0));
  CHECK(indef.hermitian);
  CHECK(indef.lower == doctest::Approx(-3.0));
  CHECK(indef.upper == doctest::Approx(2.0));
  CHECK(indef.definiteness == Definiteness::indefinite);
  REQUIRE(indef.compression_eigs.size() == 2);
  CHECK(indef.compression_eigs(0) == doctest::Approx(-3.0));
  CHECK(indef.compression_eigs(1) == doctest::Approx(2.0));

  CHECK(hermitian_report(diag_op(1.0, 1.0)).definiteness ==
        Definiteness::positive);
  CHECK(hermitian_report(diag_op(-1.0, -2.0)).definiteness ==
        Definiteness::negative);
  CHECK(hermitian_report(diag_op(0.0, 0.0)).definiteness ==
        Definiteness::nonnegative);
  CHECK(hermitian_report(diag_op(0.0, 2.0)).definiteness ==
        Definiteness::nonnegative);
  CHECK(hermitian_report(diag_op(0.0, -2.0)).definiteness ==
        Definiteness::nonpositive);
}

TEST_CASE("hermitian relation with a multivalued part") {
  // T(e1) = (2,0) + span{e2}: the form <y, x> is real on the graph, the
  // compression is the 1 x 1 matrix [2].
  const LinearRelation t = LinearRelation::make(
      {{vec({1, 0}), vec({2, 0})}, {vec({0, 0}), vec({0, 1})}}, 2, 2,
      Field::complex);
  CHECK(is_hermitian(t));
  const HermitianReport r = hermitian_report(t);
  CHECK(r.lower == doctest::Approx(2.0));
  CHECK(r.upper == doctest::Approx(2.0));
  CHECK(r.definiteness == Definiteness::positive);
  CHECK(relation_norm(t).value == doctest::Approx(2.0));
  CHECK(c_constant(t) == doctest::Approx(2.0));
}

TEST_CASE("trivial domain classification") {
  const LinearRelation pure_mul =
      LinearRelation::make({{vec({0, 0}), vec({1, 0})}}, 2, 2, Field::complex);
  const HermitianReport r = hermitian_report(pure_mul);
  CHECK(r.trivial_domain);
  CHECK(r.definiteness == Definiteness::none);
  CHECK(c_constant(pure_mul) == 0.0);
}

TEST_CASE("numerical radius on closed forms") {
  CHECK(numerical_radius(shift2()) == doctest::Approx(0.5));
  CHECK(numerical_radius(3.0 * shift2()) == doctest::Approx(1.5));
  CHECK(numerical_radius(Complex(0, 3) * shift2()) == doctest::Approx(1.5));

  Matrix normal = Matrix::Zero(2, 2);
  normal(0, 0) = 1;
  normal(1, 1) = Complex(0, 1);
  CHECK(numerical_radius(normal) == doctest::Approx(1.0));

  Matrix herm(2, 2);
  herm << 2, 0, 0, -3;
  CHECK(numerical_radius(herm) == doctest::Approx(3.0));

  CHECK(numerical_radius(Matrix(0, 0)) == 0.0);
  CHECK_THROWS_AS(numerical_radius(Matrix(2, 3)), DimensionError);
}

TEST_CASE("c constant of fixed relations") {
  const LinearRelation shift =
      LinearRelation::from_operator(shift2(), Field::complex);
  CHECK(c_constant(shift) == doctest::Approx(0.5));
  CHECK(relation_norm(shift).value <= 2.0 * c_constant(shift) + 1e-12);
  CHECK(c_constant(diag_op(2.0, -3.0)) == doctest::Approx(3.0));
  const LinearRelation wide =
      LinearRelation::from_operator(Matrix::Zero(3, 2), Field::complex);
  CHECK_THROWS_AS(c_constant(wide), DimensionError);
}

TEST_CASE("definiteness names") {
  CHECK(to_string(Definiteness::positive) == doctest::String("positive"));
  CHECK(to_string(Definiteness::indefinite) == doctest::String("indefinite"));
  CHECK(to_string(Definiteness::none) == doctest::String("none"));
}
