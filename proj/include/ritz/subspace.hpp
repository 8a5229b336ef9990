#pragma once

#include "ritz/numeric.hpp"
#include "ritz/types.hpp"

namespace ritz {

// Column span of an orthonormal n x p basis, 1 <= p <= n.
class Subspace {
 public:
  // Rank-revealing orthonormalization of arbitrary columns; drops directions
  // whose singular value falls below the rank cutoff.
  static Subspace orthonormalized(const Matrix& m, const TolerancePolicy& tol = {});

  // Accepts an already-orthonormal basis; B^H B must equal I within
  // n * atol * 1e2 entrywise.
  static Subspace from_orthonormal(Matrix basis, const TolerancePolicy& tol = {});

  const Matrix& basis() const { return b_; }
  Index ambient() const { return b_.rows(); }
  Index dim() const { return b_.cols(); }
  Matrix projector() const { return b_ * b_.adjoint(); }

 private:
  explicit Subspace(Matrix b) : b_(std::move(b)) {}
  Matrix b_;
};

Subspace orthonormalize(const Matrix& m, const TolerancePolicy& tol = {});

// Principal angles in [0, pi/2], stored decreasing.
class AngleVector {
 public:
  explicit AngleVector(RealVector radians_any_order);

  const RealVector& radians() const { return a_; }
  Index size() const { return a_.size(); }
  double max() const { return a_(0); }
  double min() const { return a_(a_.size() - 1); }

  RealVector cosines() const;  // cos of the decreasing angles (nondecreasing values)
  RealVector sines() const;    // nonincreasing values
  // Errors with "tangent infinite" when any cosine <= atol.
  RealVector tangents(const TolerancePolicy& tol = {}) const;

 private:
  RealVector a_;
};

// min(p, q) principal angles between the spans.  Cosines come from the SVD
// of X^H Y; angles with cosine > sqrt(2)/2 are recomputed from the sine-based
// SVD of the smaller basis projected off the larger span, which keeps small
// angles accurate.
AngleVector principal_angles(const Subspace& x, const Subspace& y);

// Orthonormal basis of span(X) + span(Y); dimension between max(p, q) and
// p + q depending on intersection rank.
Subspace join(const Subspace& x, const Subspace& y, const TolerancePolicy& tol = {});

// B (B^H M): orthogonal projection of the columns of M onto the subspace.
Matrix project_onto(const Subspace& s, const Matrix& m);

// S((I - P_p) P_q P_p) on the full ambient space; equals
// (sin(theta) cos(theta)) over the principal angles, padded with zeros.
DecreasingVector projector_product_singvals(const Subspace& p, const Subspace& q);

// Loads a basis file and orthonormalizes it; warns on stderr when the
// columns deviate from orthonormality by more than 1e-8.
Subspace read_subspace(const std::string& path, const TolerancePolicy& tol = {});

}  // namespace ritz
