#pragma once

#include "ritz/numeric.hpp"
#include "ritz/subspace.hpp"
#include "ritz/types.hpp"

namespace ritz {

// Matrix Rayleigh quotient X^H A X with its spectrum and the block residual
// A X - X (X^H A X).  X^H residual = 0 up to rounding.
struct RitzData {
  HermitianMatrix rq;
  DecreasingVector values;
  Matrix residual;
};

RitzData ritz(const HermitianMatrix& a, const Subspace& x);

// S(R_X): singular values of the residual block, one per Ritz column.
DecreasingVector residual_singvals(const RitzData& r);

// S(P_onto M) for an n x p block M: singular values of B^H M zero-padded to
// p entries (projecting cannot add nonzero singular values).
DecreasingVector projected_singvals(const Subspace& onto, const Matrix& m);

struct SpectrumExtremes {
  double lambda_max;
  double lambda_min;
};

// Extreme Ritz values of A restricted to span(X) + span(Y).
SpectrumExtremes ritz_extremes_on_join(const HermitianMatrix& a, const Subspace& x, const Subspace& y,
                                       const TolerancePolicy& tol = {});

// True when ||R_X||_2 <= n ||A||_2 1e-10, the threshold under which a span
// is treated as A-invariant.
bool is_invariant(const HermitianMatrix& a, const Subspace& x, const RitzData& r);

}  // namespace ritz
