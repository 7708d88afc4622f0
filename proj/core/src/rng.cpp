#include "linrel/rng.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <numbers>

namespace linrel {

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::uniform_index(std::uint64_t n) {
  // Rejection-free modulo is fine here: n is tiny against 2^64, the bias is
  // far below anything observable in these tests.
  return next_u64() % n;
}

double Rng::gauss() {
  double u1 = uniform();
  if (u1 <= 0.0) u1 = 0x1.0p-53;
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

Complex Rng::cgauss(Field field) {
  if (field == Field::real) return Complex(gauss(), 0.0);
  constexpr double s = 0.7071067811865476;  // 1/sqrt(2)
  const double re = gauss();
  const double im = gauss();
  return Complex(s * re, s * im);
}

Vector Rng::gaussian_vector(Index dim, Field field) {
  Vector v(dim);
  for (Index i = 0; i < dim; ++i) v(i) = cgauss(field);
  return v;
}

Matrix Rng::gaussian_matrix(Index rows, Index cols, Field field) {
  Matrix m(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) m(i, j) = cgauss(field);
  }
  return m;
}

Vector Rng::unit_vector(Index dim, Field field) {
  if (dim < 1) throw DimensionError("unit vector needs a positive dimension");
  for (;;) {
    Vector v = gaussian_vector(dim, field);
    const double n = v.norm();
    if (n > 1e-6) return v / n;
  }
}

Matrix Rng::random_orthonormal(Index dim, Index k, Field field) {
  if (k < 0 || k > dim) throw DimensionError("orthonormal frame size out of range");
  if (k == 0) return Matrix(dim, 0);
  const Matrix g = gaussian_matrix(dim, k, field);
  if (field == Field::real) {
    // Run the real SVD so orthonormality is exact, not up to a phase.
    Eigen::JacobiSVD<RealMatrix> svd(g.real(), Eigen::ComputeThinU);
    return svd.matrixU().leftCols(k).cast<Complex>();
  }
  Eigen::JacobiSVD<Matrix> svd(g, Eigen::ComputeThinU);
  return svd.matrixU().leftCols(k);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::string_view suite,
                          std::uint64_t trial) {
  // FNV-1a over the suite name, then two splitmix rounds against the
  // caller's seed and trial index.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : suite) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  std::uint64_t mixed = splitmix64(h ^ splitmix64(seed));
  mixed = splitmix64(mixed ^ (trial + 1));
  return mixed != 0 ? mixed : 0x9e3779b97f4a7c15ULL;
}

}  // namespace linrel
