#include "linrel/subspace.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>

namespace linrel {

double default_tol(Index ambient_dim) {
  const double d = static_cast<double>(std::max<Index>(ambient_dim, 1));
  return d * std::numeric_limits<double>::epsilon();
}

namespace {

// In real mode every stored basis must have exactly zero imaginary parts.
// A complex SVD of real data can still emit per-column phases, so rebuild a
// real orthonormal basis from the real and imaginary parts. For a
// conjugation-closed span this changes nothing but the representation.
Matrix realify(const Matrix& basis) {
  const Index d = basis.cols();
  if (d == 0) {
    Matrix out = basis;
    out.imag().setZero();
    return out;
  }
  RealMatrix stacked(basis.rows(), 2 * d);
  stacked << basis.real(), basis.imag();
  Eigen::JacobiSVD<RealMatrix> svd(stacked, Eigen::ComputeThinU);
  Matrix out = svd.matrixU().leftCols(d).cast<Complex>();
  return out;
}

Matrix orthonormal_range(const Matrix& vectors, double tol, Field field,
                         double scale) {
  if (field == Field::real && vectors.size() > 0 &&
      vectors.imag().cwiseAbs().maxCoeff() > 0.0) {
    throw DimensionError("real mode rejects vectors with nonzero imaginary parts");
  }
  if (vectors.cols() == 0 || vectors.rows() == 0) {
    return Matrix(vectors.rows(), 0);
  }
  Eigen::JacobiSVD<Matrix> svd(vectors, Eigen::ComputeThinU);
  const auto& sigma = svd.singularValues();
  const double smax = sigma.size() > 0 ? sigma(0) : 0.0;
  const double cutoff = tol * std::max(smax, scale);
  Index rank = 0;
  if (smax > 0.0) {
    while (rank < sigma.size() && sigma(rank) > cutoff) ++rank;
  }
  Matrix basis = svd.matrixU().leftCols(rank);
  if (field == Field::real) basis = realify(basis);
  return basis;
}

void require_compatible(const Subspace& e, const Subspace& f) {
  if (e.ambient_dim() != f.ambient_dim()) {
    throw DimensionError("subspace operands live in different ambient spaces");
  }
  if (e.field() != f.field()) {
    throw DimensionError("subspace operands use different scalar fields");
  }
}

}  // namespace

Subspace::Subspace(Index ambient_dim, Field field, double tol)
    : ambient_dim_(ambient_dim),
      field_(field),
      tol_(resolve_tol(tol, default_tol(ambient_dim))),
      basis_(ambient_dim, 0) {
  if (ambient_dim < 1) throw DimensionError("ambient dimension must be positive");
}

Subspace Subspace::span(const Matrix& vectors, Index ambient_dim, Field field,
                        double tol, double scale) {
  if (ambient_dim < 1) throw DimensionError("ambient dimension must be positive");
  if (vectors.rows() != ambient_dim) {
    throw DimensionError("spanning vectors do not match the ambient dimension");
  }
  Subspace s(ambient_dim, field, tol);
  s.basis_ = orthonormal_range(vectors, s.tol_, field, scale);
  return s;
}

Subspace Subspace::span(const std::vector<Vector>& vectors, Index ambient_dim,
                        Field field, double tol) {
  Matrix m(ambient_dim, static_cast<Index>(vectors.size()));
  for (Index j = 0; j < m.cols(); ++j) {
    if (vectors[static_cast<size_t>(j)].size() != ambient_dim) {
      throw DimensionError("spanning vectors do not match the ambient dimension");
    }
    m.col(j) = vectors[static_cast<size_t>(j)];
  }
  return span(m, ambient_dim, field, tol);
}

Subspace Subspace::full(Index ambient_dim, Field field, double tol) {
  Subspace s(ambient_dim, field, tol);
  s.basis_ = Matrix::Identity(ambient_dim, ambient_dim);
  return s;
}

Subspace Subspace::from_orthonormal(Matrix basis, Index ambient_dim,
                                    Field field, double tol) {
  Subspace s(ambient_dim, field, tol);
  if (basis.rows() != ambient_dim) {
    throw DimensionError("basis does not match the ambient dimension");
  }
  s.basis_ = std::move(basis);
  return s;
}

bool contains(const Subspace& e, const Vector& v, double tol) {
  if (v.size() != e.ambient_dim()) {
    throw DimensionError("vector does not match the ambient dimension");
  }
  const double t = resolve_tol(tol, e.tol());
  return distance(e, v) <= t * std::max(1.0, v.norm());
}

Vector project(const Subspace& e, const Vector& v) {
  if (v.size() != e.ambient_dim()) {
    throw DimensionError("vector does not match the ambient dimension");
  }
  if (e.is_zero()) return Vector::Zero(e.ambient_dim());
  return e.basis() * (e.basis().adjoint() * v);
}

double distance(const Subspace& e, const Vector& v) {
  return (v - project(e, v)).norm();
}

Subspace intersect(const Subspace& e, const Subspace& f) {
  require_compatible(e, f);
  const double tol = std::max(e.tol(), f.tol());
  if (e.is_zero() || f.is_zero()) return Subspace(e.ambient_dim(), e.field(), tol);
  Matrix stacked(e.ambient_dim(), e.dim() + f.dim());
  stacked << e.basis(), -f.basis();
  const Matrix k = kernel_basis(stacked, tol, 1.0);
  const Matrix vectors = e.basis() * k.topRows(e.dim());
  return Subspace::span(vectors, e.ambient_dim(), e.field(), tol, 1.0);
}

Subspace subspace_sum(const Subspace& e, const Subspace& f) {
  require_compatible(e, f);
  const double tol = std::max(e.tol(), f.tol());
  Matrix stacked(e.ambient_dim(), e.dim() + f.dim());
  stacked << e.basis(), f.basis();
  return Subspace::span(stacked, e.ambient_dim(), e.field(), tol);
}

Subspace complement(const Subspace& e) {
  if (e.is_zero()) return Subspace::full(e.ambient_dim(), e.field(), e.tol());
  Eigen::JacobiSVD<Matrix> svd(e.basis(), Eigen::ComputeFullU);
  Matrix rest = svd.matrixU().rightCols(e.ambient_dim() - e.dim());
  if (e.field() == Field::real) rest = realify(rest);
  return Subspace::from_orthonormal(std::move(rest), e.ambient_dim(), e.field(),
                                    e.tol());
}

namespace {

// Largest projection defect of inner's basis columns against outer.
double residual_against(const Subspace& inner, const Subspace& outer) {
  double worst = 0.0;
  for (Index j = 0; j < inner.dim(); ++j) {
    worst = std::max(worst, distance(outer, inner.basis().col(j)));
  }
  return worst;
}

}  // namespace

bool is_subspace_of(const Subspace& inner, const Subspace& outer, double tol) {
  require_compatible(inner, outer);
  const double t = resolve_tol(tol, std::max(inner.tol(), outer.tol()));
  return residual_against(inner, outer) <= t;
}

bool subspace_equal(const Subspace& e, const Subspace& f, double tol) {
  require_compatible(e, f);
  if (e.dim() != f.dim()) return false;
  const double t = resolve_tol(tol, std::max(e.tol(), f.tol()));
  return equality_residual(e, f) <= t;
}

double equality_residual(const Subspace& e, const Subspace& f) {
  require_compatible(e, f);
  if (e.dim() != f.dim()) {
    return 1.0 + static_cast<double>(std::abs(e.dim() - f.dim()));
  }
  return std::max(residual_against(e, f), residual_against(f, e));
}

Matrix kernel_basis(const Matrix& a, double tol, double scale) {
  const Index q = a.cols();
  if (q == 0) return Matrix(0, 0);
  if (a.rows() == 0) return Matrix::Identity(q, q);
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  const double smax = sigma.size() > 0 ? sigma(0) : 0.0;
  const double cutoff = tol * std::max(smax, scale);
  Index rank = 0;
  if (smax > 0.0) {
    while (rank < sigma.size() && sigma(rank) > cutoff) ++rank;
  }
  return svd.matrixV().rightCols(q - rank);
}

}  // namespace linrel
