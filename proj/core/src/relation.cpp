#include "linrel/relation.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <utility>

namespace linrel {

namespace {

void require_same_shape(const LinearRelation& t, const LinearRelation& s) {
  if (t.n() != s.n() || t.m() != s.m()) {
    throw DimensionError("relation operands have different (n, m) shapes");
  }
  if (t.field() != s.field()) {
    throw DimensionError("relation operands use different scalar fields");
  }
}

Matrix real_pinned(Matrix m, Field field) {
  if (field == Field::real) m = m.real().cast<Complex>();
  return m;
}

}  // namespace

InducedOperator::InducedOperator(Matrix domain_basis, Matrix map_matrix,
                                 Matrix mulpart_basis, Kind kind, Field field,
                                 double tol)
    : domain_basis_(std::move(domain_basis)),
      map_matrix_(std::move(map_matrix)),
      mulpart_basis_(std::move(mulpart_basis)),
      kind_(kind),
      field_(field),
      tol_(tol) {
  if (map_matrix_.cols() != domain_basis_.cols()) {
    throw DimensionError("induced operator blocks disagree on the domain dimension");
  }
  if (mulpart_basis_.rows() != map_matrix_.rows()) {
    throw DimensionError("induced operator blocks disagree on the value space");
  }
}

Vector InducedOperator::apply(const Vector& x) const {
  if (x.size() != n()) {
    throw DimensionError("vector does not match the relation's left space");
  }
  const Vector c = domain_basis_.adjoint() * x;
  const double defect = (x - domain_basis_ * c).norm();
  if (defect > tol_ * std::max(1.0, x.norm())) {
    throw DomainError("vector is not in the domain of the relation");
  }
  return map_matrix_ * c;
}

LinearRelation InducedOperator::graph() const {
  Matrix cols(n() + m(), domain_dim());
  cols << domain_basis_, map_matrix_;
  return LinearRelation(
      n(), m(), Subspace::span(cols, n() + m(), field_, tol_, 1.0));
}

Matrix InducedOperator::compression() const {
  if (n() != m()) {
    throw DimensionError("compression requires a relation in one space");
  }
  return real_pinned(domain_basis_.adjoint() * map_matrix_, field_);
}

LinearRelation::LinearRelation(Index n, Index m, Subspace graph)
    : n_(n), m_(m), graph_(std::move(graph)) {
  if (n < 1 || m < 1) throw DimensionError("relation spaces must have positive dimension");
  if (graph_.ambient_dim() != n + m) {
    throw DimensionError("graph subspace does not live in X x Y");
  }
}

LinearRelation LinearRelation::make(
    const std::vector<std::pair<Vector, Vector>>& generators, Index n, Index m,
    Field field, double tol) {
  if (n < 1 || m < 1) throw DimensionError("relation spaces must have positive dimension");
  Matrix cols(n + m, static_cast<Index>(generators.size()));
  for (Index j = 0; j < cols.cols(); ++j) {
    const auto& [x, y] = generators[static_cast<size_t>(j)];
    if (x.size() != n || y.size() != m) {
      throw DimensionError("generator pair does not match (n, m)");
    }
    cols.col(j).head(n) = x;
    cols.col(j).tail(m) = y;
  }
  if (field == Field::real && cols.size() > 0 &&
      cols.imag().cwiseAbs().maxCoeff() > 0.0) {
    throw DimensionError("real mode rejects generators with nonzero imaginary parts");
  }
  return LinearRelation(n, m, Subspace::span(cols, n + m, field, tol));
}

LinearRelation LinearRelation::from_operator(const Matrix& a, Field field,
                                             double tol) {
  const Index n = a.cols();
  const Index m = a.rows();
  if (n < 1 || m < 1) throw DimensionError("operator must have positive dimensions");
  if (field == Field::real && a.imag().cwiseAbs().maxCoeff() > 0.0) {
    throw DimensionError("real mode rejects operators with nonzero imaginary parts");
  }
  Matrix cols(n + m, n);
  cols << Matrix::Identity(n, n), a;
  return LinearRelation(n, m, Subspace::span(cols, n + m, field, tol));
}

Subspace domain(const LinearRelation& t) {
  // Blocks of an orthonormal graph basis live at scale 1, so rank cutoffs
  // here and below carry that floor; see Subspace::span.
  return Subspace::span(t.x_block(), t.n(), t.field(), t.tol(), 1.0);
}

Subspace range(const LinearRelation& t) {
  return Subspace::span(t.y_block(), t.m(), t.field(), t.tol(), 1.0);
}

Subspace mulpart(const LinearRelation& t) {
  const Matrix k = kernel_basis(t.x_block(), t.tol(), 1.0);
  return Subspace::span(t.y_block() * k, t.m(), t.field(), t.tol(), 1.0);
}

Subspace nullspace(const LinearRelation& t) {
  const Matrix k = kernel_basis(t.y_block(), t.tol(), 1.0);
  return Subspace::span(t.x_block() * k, t.n(), t.field(), t.tol(), 1.0);
}

std::pair<Vector, Subspace> image_of(const LinearRelation& t, const Vector& x) {
  if (x.size() != t.n()) {
    throw DimensionError("vector does not match the relation's left space");
  }
  if (t.graph_dim() == 0) {
    if (x.norm() > t.tol() * std::max(1.0, x.norm())) {
      throw DomainError("vector is not in the domain of the relation");
    }
    return {Vector::Zero(t.m()), mulpart(t)};
  }
  const Matrix xb = t.x_block();
  Eigen::JacobiSVD<Matrix> svd(xb, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(t.tol());
  const Vector c = svd.solve(x);
  if ((xb * c - x).norm() > t.tol() * std::max(1.0, x.norm())) {
    throw DomainError("vector is not in the domain of the relation");
  }
  const Subspace m = mulpart(t);
  Vector y = t.y_block() * c;
  y -= project(m, y);
  if (t.field() == Field::real) y = y.real().cast<Complex>();
  return {std::move(y), m};
}

LinearRelation inverse(const LinearRelation& t) {
  // Swapping the two coordinate blocks is unitary, so the swapped basis is
  // still orthonormal.
  Matrix swapped(t.m() + t.n(), t.graph_dim());
  swapped << t.y_block(), t.x_block();
  return LinearRelation(t.m(), t.n(),
                        Subspace::from_orthonormal(std::move(swapped),
                                                   t.m() + t.n(), t.field(),
                                                   t.tol()));
}

LinearRelation scalar_mul(Complex alpha, const LinearRelation& t) {
  if (t.field() == Field::real && alpha.imag() != 0.0) {
    throw PreconditionError("real mode rejects complex scalar multiples");
  }
  Matrix cols(t.n() + t.m(), t.graph_dim());
  cols << t.x_block(), alpha * t.y_block();
  // Rescale the columns so a tiny alpha cannot push pure-mulpart
  // directions below the rank cutoff.
  for (Index j = 0; j < cols.cols(); ++j) {
    const double len = cols.col(j).norm();
    if (len > 0.0) cols.col(j) /= len;
  }
  return LinearRelation(
      t.n(), t.m(),
      Subspace::span(cols, t.n() + t.m(), t.field(), t.tol(), 1.0));
}

LinearRelation relation_sum(const LinearRelation& t, const LinearRelation& s) {
  require_same_shape(t, s);
  const double tol = std::max(t.tol(), s.tol());
  // Pairs over a common x: solve T.x c = S.x e, then add the y parts.
  Matrix stacked(t.n(), t.graph_dim() + s.graph_dim());
  stacked << t.x_block(), -s.x_block();
  const Matrix k = kernel_basis(stacked, tol, 1.0);
  const Matrix c = k.topRows(t.graph_dim());
  const Matrix e = k.bottomRows(s.graph_dim());
  Matrix cols(t.n() + t.m(), k.cols());
  cols << t.x_block() * c, t.y_block() * c + s.y_block() * e;
  return LinearRelation(
      t.n(), t.m(),
      Subspace::span(cols, t.n() + t.m(), t.field(), tol, 1.0));
}

LinearRelation product(const LinearRelation& s, const LinearRelation& t) {
  if (t.m() != s.n()) {
    throw DimensionError("product needs the left factor to start where the right factor ends");
  }
  if (t.field() != s.field()) {
    throw DimensionError("relation operands use different scalar fields");
  }
  const double tol = std::max(t.tol(), s.tol());
  // Match y values: solve T.y c = S.x e, keep (T.x c, S.y e).
  Matrix stacked(t.m(), t.graph_dim() + s.graph_dim());
  stacked << t.y_block(), -s.x_block();
  const Matrix k = kernel_basis(stacked, tol, 1.0);
  const Matrix c = k.topRows(t.graph_dim());
  const Matrix e = k.bottomRows(s.graph_dim());
  Matrix cols(t.n() + s.m(), k.cols());
  cols << t.x_block() * c, s.y_block() * e;
  return LinearRelation(
      t.n(), s.m(),
      Subspace::span(cols, t.n() + s.m(), t.field(), tol, 1.0));
}

LinearRelation dotted_sum(const LinearRelation& t, const LinearRelation& s) {
  require_same_shape(t, s);
  if (!intersect(t.graph(), s.graph()).is_zero()) {
    throw PreconditionError("dotted sum requires graphs with trivial intersection");
  }
  return LinearRelation(t.n(), t.m(), subspace_sum(t.graph(), s.graph()));
}

bool is_orthogonal(const LinearRelation& t, const LinearRelation& s,
                   double tol) {
  require_same_shape(t, s);
  if (t.graph_dim() == 0 || s.graph_dim() == 0) return true;
  const double limit = resolve_tol(tol, std::max(t.tol(), s.tol()));
  const Matrix gram = t.graph().basis().adjoint() * s.graph().basis();
  return gram.cwiseAbs().maxCoeff() <= limit;
}

bool relation_equal(const LinearRelation& t, const LinearRelation& s,
                    double tol) {
  if (t.n() != s.n() || t.m() != s.m() || t.field() != s.field()) return false;
  return subspace_equal(t.graph(), s.graph(), tol);
}

ArensDecomposition arens_decompose(const LinearRelation& t) {
  const Subspace m = mulpart(t);
  const Index k = m.dim();
  Matrix inf_basis = Matrix::Zero(t.n() + t.m(), k);
  inf_basis.bottomRows(t.m()) = m.basis();
  // {0} x T(0) sits inside the graph; the operator part is its orthogonal
  // complement within the graph.
  const Matrix g = t.graph().basis();
  const Matrix residual = g - inf_basis * (inf_basis.adjoint() * g);
  LinearRelation op_part(
      t.n(), t.m(),
      Subspace::span(residual, t.n() + t.m(), t.field(), t.tol(), 1.0));
  LinearRelation mul_part(
      t.n(), t.m(),
      Subspace::from_orthonormal(std::move(inf_basis), t.n() + t.m(),
                                 t.field(), t.tol()));
  return {std::move(op_part), std::move(mul_part)};
}

namespace {

// Least-squares representative map: C with X C = D where D is an orthonormal
// basis of the domain, then the value block Y C.
std::pair<Matrix, Matrix> representative_blocks(const LinearRelation& t,
                                                const Matrix& dom_basis) {
  if (t.graph_dim() == 0 || dom_basis.cols() == 0) {
    return {Matrix(t.graph_dim(), 0), Matrix(t.m(), 0)};
  }
  const Matrix xb = t.x_block();
  Eigen::JacobiSVD<Matrix> svd(xb, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(t.tol());
  const Matrix c = svd.solve(dom_basis);
  return {c, t.y_block() * c};
}

}  // namespace

InducedOperator induced_hat(const LinearRelation& t) {
  const Subspace dom = domain(t);
  const Subspace mul = mulpart(t);
  const auto [c, y_rep] = representative_blocks(t, dom.basis());
  Matrix a = y_rep - mul.basis() * (mul.basis().adjoint() * y_rep);
  a = real_pinned(std::move(a), t.field());
  return InducedOperator(dom.basis(), std::move(a), mul.basis(),
                         InducedOperator::Kind::hat, t.field(), t.tol());
}

InducedOperator induced_tilde(const LinearRelation& t) {
  InducedOperator hat = induced_hat(t);
  return InducedOperator(hat.domain_basis(), hat.map_matrix(),
                         hat.mulpart_basis(), InducedOperator::Kind::tilde,
                         t.field(), t.tol());
}

InducedOperator induced_arens(const LinearRelation& t) {
  const ArensDecomposition dec = arens_decompose(t);
  const LinearRelation& op = dec.operator_part;
  const Subspace dom = domain(op);
  const auto [c, y_rep] = representative_blocks(op, dom.basis());
  // The operator part is single valued, so the representative is the value.
  return InducedOperator(dom.basis(), real_pinned(y_rep, t.field()),
                         mulpart(t).basis(), InducedOperator::Kind::arens,
                         t.field(), t.tol());
}

LinearRelation compress_to_domain(const LinearRelation& t) {
  if (t.n() != t.m()) {
    throw DimensionError("domain compression requires a relation in one space");
  }
  const Subspace dom = domain(t);
  const Index d = dom.dim();
  if (d == 0) {
    throw PreconditionError("domain compression requires a nonzero domain");
  }
  const Matrix dh = dom.basis().adjoint();
  Matrix cols(2 * d, t.graph_dim());
  cols << dh * t.x_block(), dh * t.y_block();
  return LinearRelation(
      d, d, Subspace::span(cols, 2 * d, t.field(), t.tol(), 1.0));
}

}  // namespace linrel
