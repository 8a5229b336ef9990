#include "ritz/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

#include "ritz/matrix_io.hpp"

namespace ritz {

Subspace Subspace::orthonormalized(const Matrix& m, const TolerancePolicy& tol) {
  return Subspace(orthonormal_cols(m, 0.0, tol));
}

Subspace Subspace::from_orthonormal(Matrix basis, const TolerancePolicy& tol) {
  if (basis.rows() == 0 || basis.cols() == 0) throw Error("Subspace: empty subspace");
  if (basis.cols() > basis.rows()) throw Error("Subspace: more columns than ambient dimension");
  const Matrix gram = basis.adjoint() * basis;
  const double dev = (gram - Matrix::Identity(basis.cols(), basis.cols())).cwiseAbs().maxCoeff();
  if (dev > 1e2 * tol.atol * static_cast<double>(basis.rows()))
    throw Error("Subspace: basis not orthonormal");
  return Subspace(std::move(basis));
}

Subspace orthonormalize(const Matrix& m, const TolerancePolicy& tol) {
  return Subspace::orthonormalized(m, tol);
}

AngleVector::AngleVector(RealVector radians_any_order) {
  if (!all_finite(radians_any_order)) throw Error("AngleVector: non-finite angle");
  if (radians_any_order.size() == 0) throw Error("AngleVector: empty");
  for (Index i = 0; i < radians_any_order.size(); ++i) {
    const double pi_half = std::acos(0.0);
    if (radians_any_order(i) < -1e-12 || radians_any_order(i) > pi_half + 1e-12)
      throw Error("AngleVector: angle outside [0, pi/2]");
    radians_any_order(i) = std::clamp(radians_any_order(i), 0.0, pi_half);
  }
  a_ = sorted_desc(std::move(radians_any_order));
}

RealVector AngleVector::cosines() const { return a_.array().cos(); }

RealVector AngleVector::sines() const { return a_.array().sin(); }

RealVector AngleVector::tangents(const TolerancePolicy& tol) const {
  RealVector t(a_.size());
  for (Index i = 0; i < a_.size(); ++i) {
    const double c = std::cos(a_(i));
    if (c <= tol.atol) throw Error("tangent infinite");
    t(i) = std::sin(a_(i)) / c;
  }
  return t;
}

AngleVector principal_angles(const Subspace& x, const Subspace& y) {
  if (x.ambient() != y.ambient()) throw Error("principal_angles: ambient dimensions differ");
  const Index m = std::min(x.dim(), y.dim());

  // Decreasing cosines pair with increasing angles.
  const RealVector cos_desc = svd_decreasing(x.basis().adjoint() * y.basis()).values();

  // Sines from the complement of the larger span applied to the smaller
  // basis: exactly m values, decreasing, pairing with decreasing angles.
  const Subspace& big = x.dim() >= y.dim() ? x : y;
  const Subspace& small = x.dim() >= y.dim() ? y : x;
  const Matrix off = small.basis() - big.basis() * (big.basis().adjoint() * small.basis());
  const RealVector sin_desc = svd_decreasing(off).values();

  const double cos_switch = std::sqrt(0.5);
  RealVector theta(m);
  for (Index j = 0; j < m; ++j) {
    const double c = std::clamp(cos_desc(m - 1 - j), 0.0, 1.0);
    const double s = std::clamp(sin_desc(j), 0.0, 1.0);
    theta(j) = c > cos_switch ? std::asin(s) : std::acos(c);
  }
  return AngleVector(std::move(theta));
}

Subspace join(const Subspace& x, const Subspace& y, const TolerancePolicy& tol) {
  if (x.ambient() != y.ambient()) throw Error("join: ambient dimensions differ");
  Matrix c(x.ambient(), x.dim() + y.dim());
  c << x.basis(), y.basis();
  return Subspace::orthonormalized(c, tol);
}

Matrix project_onto(const Subspace& s, const Matrix& m) {
  if (s.ambient() != m.rows()) throw Error("project_onto: dimension mismatch");
  return s.basis() * (s.basis().adjoint() * m);
}

DecreasingVector projector_product_singvals(const Subspace& p, const Subspace& q) {
  if (p.ambient() != q.ambient()) throw Error("projector_product_singvals: ambient dimensions differ");
  const Index n = p.ambient();
  const Matrix pp = p.projector();
  const Matrix t = (Matrix::Identity(n, n) - pp) * q.projector() * pp;
  return svd_decreasing(t);
}

Subspace read_subspace(const std::string& path, const TolerancePolicy& tol) {
  const LoadedMatrix lm = read_matrix(path);
  const Matrix& b = lm.mat;
  Subspace s = Subspace::orthonormalized(b, tol);
  double adjustment = 0.0;
  if (s.dim() == b.cols()) {
    const Matrix gram = b.adjoint() * b;
    adjustment = (gram - Matrix::Identity(b.cols(), b.cols())).cwiseAbs().maxCoeff();
  } else {
    adjustment = 1.0;  // rank loss: columns were far from an orthonormal basis
  }
  if (adjustment > 1e-8)
    std::cerr << "warning: " << path << ": columns adjusted by orthonormalization (deviation "
              << format_double(adjustment) << ")\n";
  return s;
}

}  // namespace ritz
