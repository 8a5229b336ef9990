#include "ritz/random_gen.hpp"

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

namespace ritz {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) : gen_(splitmix64(seed)) {}

Rng Rng::for_trial(std::uint64_t seed, std::uint64_t trial_id) {
  return Rng(seed + 0x9E3779B97F4A7C15ULL * (trial_id + 1));
}

std::uint64_t Rng::next_u64() { return gen_(); }

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw Error("empty draw range");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x = next_u64();
  while (x >= limit) x = next_u64();
  return x % n;
}

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
  if (have_cached_) {
    have_cached_ = false;
    return cached_;
  }
  // u1 in (0, 1] keeps the log finite.
  const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * std::numbers::pi * u2;
  cached_ = r * std::sin(phi);
  have_cached_ = true;
  return r * std::cos(phi);
}

Complex Rng::normal_complex() {
  const double re = normal();
  const double im = normal();
  return Complex(re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0);
}

HermitianMatrix gen_hermitian(Rng& rng, Index n, MatrixKind kind) {
  Matrix m(n, n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) {
      m(i, j) = kind == MatrixKind::real ? Complex(rng.normal(), 0.0) : rng.normal_complex();
    }
  }
  return HermitianMatrix((m + m.adjoint()) / 2.0);
}

Subspace gen_subspace(Rng& rng, Index n, Index p, MatrixKind kind) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    Matrix m(n, p);
    for (Index j = 0; j < p; ++j) {
      for (Index i = 0; i < n; ++i) {
        m(i, j) = kind == MatrixKind::real ? Complex(rng.normal(), 0.0) : rng.normal_complex();
      }
    }
    const Subspace s = orthonormalize(m);
    if (s.dim() == p) return s;
  }
  throw Error("random block stayed rank deficient");
}

Subspace gen_invariant_subspace(Rng& rng, const HermitianMatrix& a, Index p) {
  const Index n = a.n();
  if (p < 1 || p > n) throw Error("subspace dimension out of range");
  const EighResult e = eigh(a);
  std::vector<Index> idx(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (Index j = 0; j < p; ++j) {
    const Index k = j + static_cast<Index>(rng.below(static_cast<std::uint64_t>(n - j)));
    std::swap(idx[static_cast<std::size_t>(j)], idx[static_cast<std::size_t>(k)]);
  }
  Matrix b(n, p);
  for (Index j = 0; j < p; ++j) b.col(j) = e.vectors.col(idx[static_cast<std::size_t>(j)]);
  return Subspace::from_orthonormal(b);
}

}  // namespace ritz
