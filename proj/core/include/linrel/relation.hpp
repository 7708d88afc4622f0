#pragma once

#include "linrel/subspace.hpp"

#include <utility>
#include <vector>

namespace linrel {

class LinearRelation;

// A single-valued linear map extracted from a relation, kept in factored
// form: an orthonormal basis D of the domain, the action matrix A with
// columns orthogonal to the multivalued part, and a basis M of that
// multivalued part. The quotient-map and projection pictures share this
// representation; the tag records which construction produced it. Quotient
// classes are identified with their orthogonal representatives, so the
// quotient picture never materializes its own coordinate space.
class InducedOperator {
 public:
  enum class Kind { hat, tilde, arens };

  InducedOperator(Matrix domain_basis, Matrix map_matrix, Matrix mulpart_basis,
                  Kind kind, Field field, double tol);

  const Matrix& domain_basis() const { return domain_basis_; }   // n x d
  const Matrix& map_matrix() const { return map_matrix_; }       // m x d
  const Matrix& mulpart_basis() const { return mulpart_basis_; } // m x k

  Kind kind() const { return kind_; }
  Field field() const { return field_; }
  double tol() const { return tol_; }

  Index n() const { return domain_basis_.rows(); }
  Index m() const { return map_matrix_.rows(); }
  Index domain_dim() const { return domain_basis_.cols(); }
  Index mulpart_dim() const { return mulpart_basis_.cols(); }

  // Value at x, which must lie in the domain.
  Vector apply(const Vector& x) const;

  // The operator as a relation {(x, apply(x))}.
  LinearRelation graph() const;

  // d x d compression D* A of the action onto domain coordinates.
  // Requires a relation in one space (n == m).
  Matrix compression() const;

 private:
  Matrix domain_basis_;
  Matrix map_matrix_;
  Matrix mulpart_basis_;
  Kind kind_;
  Field field_;
  double tol_;
};

// A linear relation T between X = C^n and Y = C^m (R^n, R^m in real mode),
// stored as the subspace of X x Y spanned by its graph. Every derived object
// (domain, range, null space, multivalued part, induced operators) is
// recomputed from the graph; relations are immutable.
class LinearRelation {
 public:
  LinearRelation(Index n, Index m, Subspace graph);

  // Span of generator pairs (x_j, y_j).
  static LinearRelation make(const std::vector<std::pair<Vector, Vector>>& generators,
                             Index n, Index m, Field field, double tol = -1.0);

  // Graph of an everywhere-defined matrix operator.
  static LinearRelation from_operator(const Matrix& a, Field field,
                                      double tol = -1.0);

  Index n() const { return n_; }
  Index m() const { return m_; }
  const Subspace& graph() const { return graph_; }
  Field field() const { return graph_.field(); }
  double tol() const { return graph_.tol(); }
  Index graph_dim() const { return graph_.dim(); }

  // Top n rows / bottom m rows of the orthonormal graph basis.
  Matrix x_block() const { return graph_.basis().topRows(n_); }
  Matrix y_block() const { return graph_.basis().bottomRows(m_); }

 private:
  Index n_;
  Index m_;
  Subspace graph_;
};

Subspace domain(const LinearRelation& t);
Subspace range(const LinearRelation& t);

// The multivalued part T(0) = {y : (0, y) in T}.
Subspace mulpart(const LinearRelation& t);

// The null space {x : (x, 0) in T}.
Subspace nullspace(const LinearRelation& t);

// The image T(x) = {y0} + T(0), returned as the representative y0
// orthogonal to T(0) together with T(0) itself. Throws DomainError when
// x is outside the domain.
std::pair<Vector, Subspace> image_of(const LinearRelation& t, const Vector& x);

LinearRelation inverse(const LinearRelation& t);

// alpha T = {(x, alpha y)}. A genuinely complex alpha is rejected in real mode.
LinearRelation scalar_mul(Complex alpha, const LinearRelation& t);

// T + S = {(x, y + z) : (x, y) in T, (x, z) in S}.
LinearRelation relation_sum(const LinearRelation& t, const LinearRelation& s);

// Composition S T = {(x, z) : (x, y) in T, (y, z) in S for some y}.
LinearRelation product(const LinearRelation& s, const LinearRelation& t);

// Direct sum of relations with trivially intersecting graphs. Throws
// PreconditionError if the graphs overlap; operands must share (n, m).
LinearRelation dotted_sum(const LinearRelation& t, const LinearRelation& s);

// Are the graphs orthogonal as subspaces of X x Y?
bool is_orthogonal(const LinearRelation& t, const LinearRelation& s,
                   double tol = -1.0);

// Same (n, m) and equal graphs.
bool relation_equal(const LinearRelation& t, const LinearRelation& s,
                    double tol = -1.0);

// T split as operator_part (+) multivalued_part: the multivalued part is
// {0} x T(0), the operator part is the graph's orthogonal complement of it
// inside the graph, a single-valued relation with the same domain whose
// range is orthogonal to T(0).
struct ArensDecomposition {
  LinearRelation operator_part;
  LinearRelation multivalued_part;
};

ArensDecomposition arens_decompose(const LinearRelation& t);

// Induced operator obtained by projecting values onto the orthogonal
// complement of T(0): x maps to the representative of T(x) orthogonal to T(0).
InducedOperator induced_hat(const LinearRelation& t);

// Induced operator into the quotient Y / T(0), with classes identified with
// their orthogonal representatives. Numerically identical action to
// induced_hat; kept separate so both constructions can be cross-checked.
InducedOperator induced_tilde(const LinearRelation& t);

// Induced operator read off the Arens operator part.
InducedOperator induced_arens(const LinearRelation& t);

// Compression of a relation in one space onto its domain: generator pairs
// (D* x, D* y) over an orthonormal domain basis D. The result lives in
// C^d with a dense domain. Requires n == m and a nonzero domain.
LinearRelation compress_to_domain(const LinearRelation& t);

}  // namespace linrel
