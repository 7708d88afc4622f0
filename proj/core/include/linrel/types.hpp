#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace linrel {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

// Scalar field of a computation. Real mode runs the same complex code path
// with every imaginary part pinned to zero, so results stay real end to end.
enum class Field { real, complex };

inline const char* to_string(Field f) {
  return f == Field::real ? "real" : "complex";
}

// Shape mismatch or malformed input.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A vector argument lies outside the required domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A mathematical precondition fails: overlapping graphs in a dotted sum,
// non-Hermitian input to a Hermitian-only routine, infeasible generator
// constraints, and the like.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Inner product, linear in the first argument, conjugate-linear in the second.
inline Complex inner(const Vector& u, const Vector& v) { return v.dot(u); }

// Default relative tolerance for rank decisions and membership tests in the
// given ambient dimension. Rank cutoffs additionally scale by the largest
// singular value of the matrix at hand.
double default_tol(Index ambient_dim);

// Resolves an optional tolerance argument: negative means "use fallback".
inline double resolve_tol(double requested, double fallback) {
  return requested >= 0.0 ? requested : fallback;
}

}  // namespace linrel
