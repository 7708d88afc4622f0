#include "linrel/norms.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace linrel {

double point_norm(const LinearRelation& t, const Vector& x) {
  return induced_hat(t).apply(x).norm();
}

double point_norm_via_quotient(const LinearRelation& t, const Vector& x) {
  if (x.size() != t.n()) {
    throw DimensionError("vector does not match the relation's left space");
  }
  if (t.graph_dim() == 0) {
    if (x.norm() > t.tol() * std::max(1.0, x.norm())) {
      throw DomainError("vector is not in the domain of the relation");
    }
    return 0.0;
  }
  const Matrix xb = t.x_block();
  Eigen::JacobiSVD<Matrix> svd(xb, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(t.tol());
  const Vector c = svd.solve(x);
  if ((xb * c - x).norm() > t.tol() * std::max(1.0, x.norm())) {
    throw DomainError("vector is not in the domain of the relation");
  }
  return distance(mulpart(t), t.y_block() * c);
}

NormReport relation_norm(const LinearRelation& t) {
  const InducedOperator op = induced_hat(t);
  NormReport report;
  if (op.domain_dim() == 0) {
    report.trivial_domain = true;
    return report;
  }
  if (t.field() == Field::real) {
    // The action matrix is exactly real here; the real SVD avoids the
    // phase freedom a complex decomposition may exercise.
    Eigen::JacobiSVD<RealMatrix> svd(op.map_matrix().real(),
                                     Eigen::ComputeThinV);
    report.singular_values = svd.singularValues();
    report.value = report.singular_values(0);
    report.achieved_at =
        op.domain_basis() * svd.matrixV().col(0).cast<Complex>();
  } else {
    Eigen::JacobiSVD<Matrix> svd(op.map_matrix(), Eigen::ComputeThinV);
    report.singular_values = svd.singularValues();
    report.value = report.singular_values(0);
    report.achieved_at = op.domain_basis() * svd.matrixV().col(0);
  }
  const double len = report.achieved_at.norm();
  if (len > 0.0) report.achieved_at /= len;
  return report;
}

double graph_norm(const LinearRelation& t, const Vector& x) {
  return x.norm() + point_norm(t, x);
}

Complex graph_inner(const LinearRelation& t, const Vector& x1,
                    const Vector& x2) {
  const InducedOperator op = induced_hat(t);
  const Vector y1 = op.apply(x1);
  const Vector y2 = op.apply(x2);
  Complex value = inner(x1, x2) + inner(y1, y2);
  if (t.field() == Field::real) value = Complex(value.real(), 0.0);
  return value;
}

}  // namespace linrel
