#include "ritz/numeric.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace ritz {

double check_tol(const TolerancePolicy& tol, Index n, double scale_x, double scale_y) {
  const double scale = std::max({scale_x, scale_y, 1.0});
  return tol.atol + tol.rtol * (static_cast<double>(n) * scale);
}

double rank_cutoff(const TolerancePolicy& tol, Index rows, Index cols) {
  if (tol.rank_tol_factor > 0.0) return tol.rank_tol_factor;
  return 1e-10 * static_cast<double>(std::max(rows, cols));
}

bool all_finite(const Matrix& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
  return true;
}

bool all_finite(const RealVector& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!std::isfinite(v(i))) return false;
  return true;
}

RealVector sorted_desc(RealVector v) {
  std::sort(v.data(), v.data() + v.size(), std::greater<double>());
  return v;
}

RealVector pad_zeros(const RealVector& v, Index m) {
  if (m < v.size()) throw Error("pad_zeros: target length shorter than input");
  RealVector out = RealVector::Zero(m);
  out.head(v.size()) = v;
  return out;
}

DecreasingVector::DecreasingVector(RealVector v) {
  if (!all_finite(v)) throw Error("DecreasingVector: non-finite entry");
  v_ = sorted_desc(std::move(v));
}

double DecreasingVector::max() const {
  if (v_.size() == 0) throw Error("DecreasingVector: empty");
  return v_(0);
}

double DecreasingVector::min() const {
  if (v_.size() == 0) throw Error("DecreasingVector: empty");
  return v_(v_.size() - 1);
}

HermitianMatrix::HermitianMatrix(Matrix m, const TolerancePolicy& tol) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw Error("HermitianMatrix: not square");
  if (!all_finite(m_)) throw Error("HermitianMatrix: non-finite entry");
  const double scale = std::max(1.0, m_.cwiseAbs().maxCoeff());
  const double dev = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  if (dev > tol.hermitian_tol * scale) throw Error("HermitianMatrix: not Hermitian within tolerance");
}

HermitianMatrix HermitianMatrix::symmetrized(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error("HermitianMatrix: not square");
  Matrix h = (m + m.adjoint()) / 2.0;
  if (!all_finite(h)) throw Error("HermitianMatrix: non-finite entry");
  return HermitianMatrix(std::move(h), unchecked_tag{});
}

double HermitianMatrix::max_abs() const {
  return m_.size() == 0 ? 0.0 : m_.cwiseAbs().maxCoeff();
}

EighResult eigh(const HermitianMatrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a.mat());
  if (solver.info() != Eigen::Success) throw Error("eigh: solver failed");
  const Index n = a.n();
  // Eigen sorts ascending; reverse to decreasing.
  RealVector vals(n);
  Matrix vecs(n, n);
  for (Index i = 0; i < n; ++i) {
    vals(i) = solver.eigenvalues()(n - 1 - i);
    vecs.col(i) = solver.eigenvectors().col(n - 1 - i);
  }
  return EighResult{DecreasingVector(std::move(vals)), std::move(vecs)};
}

DecreasingVector svd_decreasing(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return DecreasingVector(RealVector::Zero(0));
  Eigen::JacobiSVD<Matrix> svd(m);
  return DecreasingVector(svd.singularValues());
}

double spectral_norm(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  return svd_decreasing(m).max();
}

HermitianMatrix psd_sqrt(const HermitianMatrix& a, const TolerancePolicy& tol) {
  EighResult ed = eigh(a);
  const double scale = std::max(1.0, a.max_abs());
  RealVector sq(ed.values.size());
  for (Index i = 0; i < ed.values.size(); ++i) {
    double lam = ed.values[i];
    if (lam < -tol.atol * scale) throw Error("psd_sqrt: not PSD");
    sq(i) = std::sqrt(std::max(lam, 0.0));
  }
  Matrix r = ed.vectors * sq.asDiagonal() * ed.vectors.adjoint();
  return HermitianMatrix::symmetrized(r);
}

Matrix orthonormal_cols(const Matrix& m, double cutoff, const TolerancePolicy& tol) {
  if (m.rows() == 0 || m.cols() == 0) throw Error("orthonormal_cols: empty subspace");
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU);
  const RealVector& s = svd.singularValues();
  const double rel = cutoff > 0.0 ? cutoff : rank_cutoff(tol, m.rows(), m.cols());
  const double smax = s(0);
  Index rank = 0;
  while (rank < s.size() && s(rank) > rel * smax && s(rank) > 0.0) ++rank;
  if (rank == 0) throw Error("orthonormal_cols: empty subspace");
  return svd.matrixU().leftCols(rank);
}

}  // namespace ritz
