#include "linrel/hermitian.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace linrel {

const char* to_string(Definiteness d) {
  switch (d) {
    case Definiteness::positive: return "positive";
    case Definiteness::nonnegative: return "nonnegative";
    case Definiteness::negative: return "negative";
    case Definiteness::nonpositive: return "nonpositive";
    case Definiteness::indefinite: return "indefinite";
    case Definiteness::none: return "none";
  }
  return "none";
}

double hermitian_residual(const LinearRelation& t) {
  if (t.n() != t.m()) {
    throw DimensionError("hermitian test requires a relation in one space");
  }
  const Matrix xb = t.x_block();
  const Matrix yb = t.y_block();
  // <y_j, x_i> - <x_j, y_i> for all basis pairs: X* Y must be Hermitian.
  const Matrix form = xb.adjoint() * yb;
  if (form.size() == 0) return 0.0;
  return (form - form.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const LinearRelation& t, double tol) {
  return hermitian_residual(t) <= resolve_tol(tol, t.tol());
}

HermitianReport hermitian_report(const LinearRelation& t, double tol) {
  if (!is_hermitian(t, tol)) {
    throw PreconditionError("hermitian_report requires a Hermitian relation");
  }
  HermitianReport report;
  report.hermitian = true;
  const InducedOperator op = induced_hat(t);
  if (op.domain_dim() == 0) {
    report.trivial_domain = true;
    return report;
  }
  Matrix compression = op.compression();
  compression = 0.5 * (compression + compression.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<Matrix> eig(compression,
                                            Eigen::EigenvaluesOnly);
  report.compression_eigs = eig.eigenvalues();
  report.lower = report.compression_eigs(0);
  report.upper = report.compression_eigs(report.compression_eigs.size() - 1);

  const double band =
      resolve_tol(tol, t.tol()) *
      std::max(1.0, std::max(std::abs(report.lower), std::abs(report.upper)));
  const bool lower_pos = report.lower > band;
  const bool lower_nonneg = report.lower >= -band;
  const bool upper_neg = report.upper < -band;
  const bool upper_nonpos = report.upper <= band;
  if (lower_pos) {
    report.definiteness = Definiteness::positive;
  } else if (upper_neg) {
    report.definiteness = Definiteness::negative;
  } else if (lower_nonneg) {
    report.definiteness = Definiteness::nonnegative;
  } else if (upper_nonpos) {
    report.definiteness = Definiteness::nonpositive;
  } else {
    report.definiteness = Definiteness::indefinite;
  }
  return report;
}

namespace {

double top_hermitian_eig(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(m, Eigen::EigenvaluesOnly);
  return eig.eigenvalues()(m.rows() - 1);
}

}  // namespace

double numerical_radius(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionError("numerical radius requires a square matrix");
  }
  if (m.rows() == 0) return 0.0;
  const auto value_at = [&m](double theta) {
    const Complex phase(std::cos(theta), std::sin(theta));
    const Matrix rotated = phase * m;
    const Matrix herm = 0.5 * (rotated + rotated.adjoint().eval());
    return top_hermitian_eig(herm);
  };

  constexpr int grid = 64;
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double values[grid];
  for (int i = 0; i < grid; ++i) {
    values[i] = value_at(two_pi * i / grid);
  }

  constexpr double gr = 0.6180339887498949;
  const auto refine = [&](double lo, double hi) {
    double a = hi - gr * (hi - lo);
    double b = lo + gr * (hi - lo);
    double fa = value_at(a);
    double fb = value_at(b);
    while (hi - lo > 1e-10) {
      if (fa < fb) {
        lo = a;
        a = b;
        fa = fb;
        b = lo + gr * (hi - lo);
        fb = value_at(b);
      } else {
        hi = b;
        b = a;
        fb = fa;
        a = hi - gr * (hi - lo);
        fa = value_at(a);
      }
    }
    return std::max(fa, fb);
  };

  // Refine around every grid local maximum, so near-tied peaks cannot trick
  // a single-bracket search into the wrong basin.
  double best = values[0];
  for (int i = 0; i < grid; ++i) {
    best = std::max(best, values[i]);
    const double prev = values[(i + grid - 1) % grid];
    const double next = values[(i + 1) % grid];
    if (values[i] >= prev && values[i] >= next) {
      const double theta = two_pi * i / grid;
      best = std::max(best, refine(theta - two_pi / grid, theta + two_pi / grid));
    }
  }
  return best;
}

double c_constant(const LinearRelation& t) {
  if (t.n() != t.m()) {
    throw DimensionError("c_constant requires a relation in one space");
  }
  const InducedOperator op = induced_hat(t);
  if (op.domain_dim() == 0) return 0.0;
  return numerical_radius(op.compression());
}

}  // namespace linrel
