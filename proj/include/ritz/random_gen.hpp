#pragma once

#include <cstdint>
#include <random>

#include "ritz/subspace.hpp"
#include "ritz/types.hpp"

namespace ritz {

// splitmix64 finalizer, used to spread (seed, trial) pairs into independent
// substream seeds.
std::uint64_t splitmix64(std::uint64_t x);

// Deterministic version-stable generator: an mt19937_64 core (fully pinned
// by the standard) with the distributions written out here, so identical
// seeds give identical streams on every platform and library version.
// Uniform doubles take the top 53 bits; normals use Box-Muller with the
// second value cached.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  // Independent substream for one trial of a seeded run.
  static Rng for_trial(std::uint64_t seed, std::uint64_t trial_id);

  std::uint64_t next_u64();
  std::uint64_t below(std::uint64_t n);  // uniform in [0, n), rejection sampled
  double uniform();                      // [0, 1)
  double uniform(double lo, double hi);
  double normal();
  Complex normal_complex();  // real and imaginary parts N(0, 1/2)

 private:
  std::mt19937_64 gen_;
  bool have_cached_ = false;
  double cached_ = 0.0;
};

// Gaussian Hermitian matrix (M + M^H)/2; the average is exactly Hermitian
// entrywise.  kind selects real symmetric or complex Hermitian.
HermitianMatrix gen_hermitian(Rng& rng, Index n, MatrixKind kind);

// Orthonormalized Gaussian n x p block; redraws in the (measure-zero) event
// of rank deficiency.
Subspace gen_subspace(Rng& rng, Index n, Index p, MatrixKind kind);

// Span of p distinct eigenvectors of A, chosen by a partial Fisher-Yates
// draw over the columns of the eigendecomposition.
Subspace gen_invariant_subspace(Rng& rng, const HermitianMatrix& a, Index p);

}  // namespace ritz
