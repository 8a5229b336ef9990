#pragma once

#include "ritz/types.hpp"

namespace ritz {

// Eigendecomposition of a Hermitian matrix with eigenvalues in decreasing
// order; vectors.col(i) belongs to values[i].
struct EighResult {
  DecreasingVector values;
  Matrix vectors;
};

EighResult eigh(const HermitianMatrix& a);

// Singular values of a dense matrix, decreasing.  min(rows, cols) values.
DecreasingVector svd_decreasing(const Matrix& m);

double spectral_norm(const Matrix& m);

// Principal (PSD) square root.  Eigenvalues below -atol raise "not PSD";
// small negative rounding is clamped to zero.
HermitianMatrix psd_sqrt(const HermitianMatrix& a, const TolerancePolicy& tol = {});

// Rank-revealing orthonormal basis of the column span: left singular vectors
// whose singular value exceeds cutoff * s_max.  cutoff <= 0 selects
// rank_cutoff(tol, rows, cols).  Rank zero raises "empty subspace".
Matrix orthonormal_cols(const Matrix& m, double cutoff = 0.0, const TolerancePolicy& tol = {});

}  // namespace ritz
