#pragma once

#include "linrel/types.hpp"

#include <vector>

namespace linrel {

// A linear subspace of C^d (or R^d in real mode), stored as an orthonormal
// basis found by a rank-revealing SVD. The basis is canonical only up to a
// unitary right factor, so equality of subspaces is decided by mutual
// projection residuals, never by comparing entries.
class Subspace {
 public:
  // The zero subspace {0}.
  Subspace(Index ambient_dim, Field field, double tol = -1.0);

  // Orthonormalized span of the columns of `vectors` (an ambient_dim x k
  // matrix). Numerical rank keeps singular values above
  // tol * max(sigma_max, scale): scale 0 gives a purely relative cutoff,
  // while internal callers pass the natural scale of their data (1 for
  // blocks of orthonormal bases) so noise-only columns cannot rank up.
  static Subspace span(const Matrix& vectors, Index ambient_dim, Field field,
                       double tol = -1.0, double scale = 0.0);
  static Subspace span(const std::vector<Vector>& vectors, Index ambient_dim,
                       Field field, double tol = -1.0);

  // The full space.
  static Subspace full(Index ambient_dim, Field field, double tol = -1.0);

  // Wraps a matrix whose columns are already orthonormal.
  static Subspace from_orthonormal(Matrix basis, Index ambient_dim, Field field,
                                   double tol = -1.0);

  Index ambient_dim() const { return ambient_dim_; }
  Index dim() const { return basis_.cols(); }
  bool is_zero() const { return basis_.cols() == 0; }
  bool is_full() const { return basis_.cols() == ambient_dim_; }

  // ambient_dim x dim matrix with orthonormal columns.
  const Matrix& basis() const { return basis_; }

  Field field() const { return field_; }
  double tol() const { return tol_; }

 private:
  Index ambient_dim_;
  Field field_;
  double tol_;
  Matrix basis_;
};

// Membership test: distance(e, v) <= tol * max(1, |v|).
bool contains(const Subspace& e, const Vector& v, double tol = -1.0);

// Orthogonal projection of v onto e.
Vector project(const Subspace& e, const Vector& v);

// Euclidean distance from v to e.
double distance(const Subspace& e, const Vector& v);

Subspace intersect(const Subspace& e, const Subspace& f);
Subspace subspace_sum(const Subspace& e, const Subspace& f);

// Orthogonal complement within the ambient space.
Subspace complement(const Subspace& e);

// Is every basis vector of `inner` within tol of `outer`?
bool is_subspace_of(const Subspace& inner, const Subspace& outer,
                    double tol = -1.0);

// Same span, decided by dimension equality plus mutual projection residuals.
bool subspace_equal(const Subspace& e, const Subspace& f, double tol = -1.0);

// Continuous residual behind subspace_equal, for reporting: the largest
// projection defect of either basis against the other span. A dimension
// mismatch maps to 1 + |dim difference|.
double equality_residual(const Subspace& e, const Subspace& f);

// Orthonormal basis of the null space of a (not necessarily orthonormal)
// matrix, with the rank cutoff at tol * max(sigma_max, scale).
Matrix kernel_basis(const Matrix& a, double tol, double scale = 0.0);

}  // namespace linrel
