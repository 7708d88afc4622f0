#pragma once

#include "linrel/relation.hpp"

namespace linrel {

struct NormReport {
  double value = 0.0;
  // Unit vector in the domain attaining the norm; empty when the domain is {0}.
  Vector achieved_at;
  // Singular values of the induced action matrix, descending.
  RealVector singular_values;
  bool trivial_domain = false;
};

// Norm of the image: |T(x)| = d(y, T(0)) for any representative y, equal to
// the length of the representative orthogonal to T(0). Throws DomainError
// outside the domain. Computed through the induced action matrix.
double point_norm(const LinearRelation& t, const Vector& x);

// Same value through the quotient-distance route: pick a least-squares
// representative straight from the graph and measure its distance to T(0),
// with no induced matrix involved. Kept as an independent code path.
double point_norm_via_quotient(const LinearRelation& t, const Vector& x);

// Operator norm sup |T(x)| over unit x in D(T), with the convention that a
// relation with domain {0} has norm 0.
NormReport relation_norm(const LinearRelation& t);

// |x| + |T(x)|.
double graph_norm(const LinearRelation& t, const Vector& x);

// <x1, x2> + <T(x1), T(x2)>, with the image inner product taken between the
// representatives orthogonal to T(0).
Complex graph_inner(const LinearRelation& t, const Vector& x1, const Vector& x2);

}  // namespace linrel
