#include "doctest.h"

#include "linrel/subspace.hpp"
#include "linrel/types.hpp"

#include <cmath>

using namespace linrel;

namespace {

Vector vec(std::initializer_list<Complex> entries) {
  Vector v(static_cast<Index>(entries.size()));
  Index i = 0;
  for (const Complex& z : entries) v(i++) = z;
  return v;
}

Subspace spanv(std::vector<Vector> vectors, Index ambient_dim, Field field,
               double tol = -1.0) {
  return Subspace::span(vectors, ambient_dim, field, tol);
}

}  // namespace

TEST_CASE("span orthonormalizes and drops dependent columns") {
  Matrix g(3, 3);
  g.col(0) = vec({1, 0, 0});
  g.col(1) = vec({2, 0, 0});
  g.col(2) = vec({0, 1, 0});
  const Subspace s = Subspace::span(g, 3, Field::complex);
  CHECK(s.dim() == 2);
  CHECK(contains(s, vec({1, 0, 0})));
  CHECK(contains(s, vec({0, 1, 0})));
  CHECK_FALSE(contains(s, vec({0, 0, 1})));
  const Matrix gram = s.basis().adjoint() * s.basis();
  CHECK((gram - Matrix::Identity(2, 2)).norm() < 1e-14);
}

TEST_CASE("span is scale invariant for clean input") {
  const Subspace s =
      spanv({vec({1e-9, 0})}, 2, Field::complex);
  CHECK(s.dim() == 1);
  CHECK(contains(s, vec({1, 0})));
}

TEST_CASE("the scale floor suppresses noise-level columns") {
  // With a unit floor the cutoff is tol * 1 even though the largest
  // singular value is itself tiny, so a noise column yields dimension 0.
  Matrix g(2, 1);
  g.col(0) = vec({1e-12, -3e-13});
  CHECK(Subspace::span(g, 2, Field::complex, 1e-8).dim() == 1);
  CHECK(Subspace::span(g, 2, Field::complex, 1e-8, 1.0).dim() == 0);
}

TEST_CASE("zero and full subspaces") {
  const Subspace z(3, Field::complex);
  CHECK(z.is_zero());
  CHECK(z.dim() == 0);
  const Subspace f = Subspace::full(3, Field::complex);
  CHECK(f.is_full());
  CHECK(f.dim() == 3);
  CHECK_THROWS_AS(Subspace(0, Field::complex), DimensionError);
  CHECK_THROWS_AS(Subspace::span(Matrix(2, 1), 3, Field::complex),
                  DimensionError);
}

TEST_CASE("project, distance and membership tolerance") {
  const Subspace e = spanv({vec({1, 0})}, 2, Field::complex);
  const Vector v = vec({3, 4});
  CHECK((project(e, v) - vec({3, 0})).norm() < 1e-14);
  CHECK(distance(e, v) == doctest::Approx(4.0));
  CHECK(contains(e, vec({1, 1e-6}), 1e-5));
  CHECK_FALSE(contains(e, vec({1, 1e-6}), 1e-7));
  CHECK_THROWS_AS(distance(e, vec({1, 0, 0})), DimensionError);
}

TEST_CASE("intersection and sum") {
  const Subspace a =
      spanv({vec({1, 0, 0}), vec({0, 1, 0})}, 3, Field::complex);
  const Subspace b =
      spanv({vec({0, 1, 0}), vec({0, 0, 1})}, 3, Field::complex);
  const Subspace cap = intersect(a, b);
  CHECK(cap.dim() == 1);
  CHECK(contains(cap, vec({0, 1, 0})));
  CHECK(subspace_sum(a, b).is_full());

  const Subspace c = spanv({vec({0, 0, 1})}, 3, Field::complex);
  CHECK(intersect(a, c).is_zero());
  CHECK_THROWS_AS(intersect(a, Subspace::full(2, Field::complex)),
                  DimensionError);
}

TEST_CASE("complement is orthogonal and fills the space") {
  const Subspace e = spanv({vec({1, 0, 0})}, 3, Field::complex);
  const Subspace c = complement(e);
  CHECK(c.dim() == 2);
  CHECK((c.basis().adjoint() * e.basis()).norm() < 1e-14);
  CHECK(subspace_sum(e, c).is_full());
  CHECK(complement(Subspace(3, Field::complex)).is_full());
  CHECK(complement(Subspace::full(3, Field::complex)).is_zero());
}

TEST_CASE("inclusion and equality are presentation independent") {
  const Subspace diag =
      spanv({vec({1, 1}), vec({1, -1})}, 2, Field::complex);
  const Subspace axes =
      spanv({vec({1, 0}), vec({0, 1})}, 2, Field::complex);
  CHECK(subspace_equal(diag, axes));
  CHECK(equality_residual(diag, axes) < 1e-14);

  const Subspace line = spanv({vec({1, 0})}, 2, Field::complex);
  CHECK(is_subspace_of(line, axes));
  CHECK_FALSE(is_subspace_of(axes, line));
  CHECK(equality_residual(line, axes) >= 1.0);
}

TEST_CASE("kernel basis") {
  Matrix a(1, 2);
  a << Complex(1), Complex(0);
  const Matrix k = kernel_basis(a, 1e-12);
  REQUIRE(k.cols() == 1);
  CHECK((a * k).norm() < 1e-14);
  CHECK(std::abs(k.col(0).norm() - 1.0) < 1e-14);

  CHECK(kernel_basis(Matrix::Identity(2, 2), 1e-12).cols() == 0);
  CHECK(kernel_basis(Matrix(0, 2), 1e-12).cols() == 2);
  CHECK(kernel_basis(Matrix(2, 0), 1e-12).cols() == 0);
}

TEST_CASE("real mode accepts real data and rejects complex input") {
  const Subspace axis = spanv({vec({2, 0})}, 2, Field::real);
  CHECK(axis.dim() == 1);
  CHECK(axis.basis().imag().norm() == 0.0);
  CHECK(contains(axis, vec({1, 0})));

  CHECK_THROWS_AS(spanv({vec({Complex(0, 1), 0})}, 2, Field::real),
                  DimensionError);
  CHECK_THROWS_AS(spanv({vec({1, Complex(0, 1)})}, 2, Field::real),
                  DimensionError);
}

TEST_CASE("a coarse tolerance merges nearby directions") {
  Matrix g(2, 2);
  g.col(0) = vec({1, 0});
  g.col(1) = vec({1, 0.1});
  CHECK(Subspace::span(g, 2, Field::complex).dim() == 2);
  CHECK(Subspace::span(g, 2, Field::complex, 0.5).dim() == 1);
}
