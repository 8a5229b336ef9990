#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace ritz {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class MatrixKind { real, cplx };

// Tolerances shared across validation and verdicts.  Verdict comparisons use
// check_tol(); rank decisions use rank_cutoff() relative to the largest
// singular value.
struct TolerancePolicy {
  double atol = 1e-12;
  double rtol = 1e-10;
  double hermitian_tol = 1e-10;  // scaled by max(1, max|A_ij|) at the check site
  double rank_tol_factor = 0.0;  // 0 selects the default 1e-10 * max(rows, cols)
};

// atol + rtol * (n * max(scale_x, scale_y, 1))
double check_tol(const TolerancePolicy& tol, Index n, double scale_x, double scale_y);

// Relative cutoff below which singular values are treated as rank-deficient.
double rank_cutoff(const TolerancePolicy& tol, Index rows, Index cols);

bool all_finite(const Matrix& m);
bool all_finite(const RealVector& v);

RealVector sorted_desc(RealVector v);

// Appends zeros up to length m; m must be >= v.size().
RealVector pad_zeros(const RealVector& v, Index m);

// Real vector stored in non-increasing order.  The constructor stores the
// decreasing rearrangement of its argument and rejects non-finite entries.
class DecreasingVector {
 public:
  DecreasingVector() = default;
  explicit DecreasingVector(RealVector v);

  const RealVector& values() const { return v_; }
  Index size() const { return v_.size(); }
  double operator[](Index i) const { return v_(i); }
  double max() const;
  double min() const;
  double sum() const { return v_.sum(); }

 private:
  RealVector v_;
};

// Square matrix validated to be Hermitian within
// hermitian_tol * max(1, max|A_ij|) entrywise.  Failing inputs are rejected,
// not symmetrized; symmetrized() is for products that are Hermitian in exact
// arithmetic but carry rounding noise.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(Matrix m, const TolerancePolicy& tol = {});

  static HermitianMatrix symmetrized(const Matrix& m);

  const Matrix& mat() const { return m_; }
  Index n() const { return m_.rows(); }
  double max_abs() const;

 private:
  struct unchecked_tag {};
  HermitianMatrix(Matrix m, unchecked_tag) : m_(std::move(m)) {}
  Matrix m_;
};

}  // namespace ritz
