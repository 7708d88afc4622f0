#pragma once

#include "linrel/types.hpp"

#include <cstdint>
#include <random>
#include <string_view>

namespace linrel {

// Deterministic random source. All randomness in the library flows through
// this class so that a (seed, suite, trial) triple reproduces a run exactly,
// across platforms. std::mt19937_64 supplies the raw stream; the floating
// point reductions are spelled out here instead of using std::uniform_* or
// std::normal_distribution, whose outputs are implementation defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform();

  // Uniform integer in [0, n), n >= 1.
  std::uint64_t uniform_index(std::uint64_t n);

  // Standard normal via Box-Muller. One value per call, no cached spare.
  double gauss();

  // Standard complex normal in complex mode (unit total variance),
  // standard real normal with zero imaginary part in real mode.
  Complex cgauss(Field field);

  Vector gaussian_vector(Index dim, Field field);
  Matrix gaussian_matrix(Index rows, Index cols, Field field);

  // Unit vector drawn from the rotation-invariant distribution.
  Vector unit_vector(Index dim, Field field);

  // dim x k matrix with orthonormal columns spanning a Haar-random subspace.
  Matrix random_orthonormal(Index dim, Index k, Field field);

 private:
  std::mt19937_64 gen_;
};

// Stable seed for one trial of one suite: mixes the run seed, the suite name,
// and the trial index so that suites and trials draw independent streams.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view suite,
                          std::uint64_t trial);

}  // namespace linrel
