#pragma once

#include "linrel/relation.hpp"

namespace linrel {

// Sign pattern of the quadratic form <y, x> over the relation.
enum class Definiteness {
  positive,
  nonnegative,
  negative,
  nonpositive,
  indefinite,
  none,  // domain {0}: nothing to classify
};

const char* to_string(Definiteness d);

struct HermitianReport {
  bool hermitian = false;
  // Extremes of <y, x> / |x|^2 over the relation, i.e. the extremal
  // eigenvalues of the domain compression of the induced operator.
  double lower = 0.0;
  double upper = 0.0;
  Definiteness definiteness = Definiteness::none;
  // Full spectrum of the compression, ascending.
  RealVector compression_eigs;
  bool trivial_domain = false;
};

// Largest |<y2, x1> - <x2, y1>| over the graph basis pairs.
double hermitian_residual(const LinearRelation& t);

// Is <y2, x1> = <x2, y1> for all pairs in T? Requires n == m.
bool is_hermitian(const LinearRelation& t, double tol = -1.0);

// Bounds and definiteness class of a Hermitian relation. Throws
// PreconditionError on non-Hermitian input.
HermitianReport hermitian_report(const LinearRelation& t, double tol = -1.0);

// Numerical radius sup over unit vectors of |<Mc, c>|, computed as the
// maximum over rotations e^{i theta} M of the top eigenvalue of the
// Hermitian part, on a coarse grid refined by golden-section search.
double numerical_radius(const Matrix& m);

// C-constant of a relation in one space: the numerical radius of the domain
// compression of the induced operator. Real-mode relations are evaluated
// over the complex field (the storage is already complex).
double c_constant(const LinearRelation& t);

}  // namespace linrel
