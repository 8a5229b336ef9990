#pragma once

#include "ritz/bounds.hpp"
#include "ritz/numeric.hpp"
#include "ritz/subspace.hpp"
#include "ritz/types.hpp"

namespace ritz {

// Hermitian pair after the common affine map t -> (t - shift)/scale that
// puts both spectra into [0,1].  A single map for the pair keeps eigenvalue
// differences uniformly rescaled.
struct NormalizedPair {
  HermitianMatrix f;
  HermitianMatrix g;
  double shift = 0.0;
  double scale = 1.0;
};

// shift = min of the two spectra, scale = max - min (1 for a degenerate
// point spectrum).
NormalizedPair normalize_pair(const HermitianMatrix& f_raw, const HermitianMatrix& g_raw);

// The 2n x 2n orthogonal projector
//   P(F) = [[F, sqrt(F(I-F))], [sqrt((I-F)F), I-F]]
// of rank n.  Needs the spectrum of F in [0,1]; eigenvalues within atol of
// the interval are clamped, larger excursions are an error.  All matrix
// functions come from one eigendecomposition of F, so the blocks are
// mutually consistent.
HermitianMatrix dilation_projector(const HermitianMatrix& f, const TolerancePolicy& tol = {});

// Orthonormal basis [sqrt(F); sqrt(I-F)] of range(P(F)).
Matrix dilation_basis(const HermitianMatrix& f, const TolerancePolicy& tol = {});

// Closed-form residual singular values of the coordinate projector
// diag(I, 0) on range(P(F)): (sqrt(Λ(F)) sqrt(1 - Λ(F)))↓.  Vanishes iff F
// is an orthogonal projector.
DecreasingVector dilation_residual_singvals(const HermitianMatrix& f, const TolerancePolicy& tol = {});

// Principal angles between range(P(F)) and range(P(G)): the cosines are
// S(sqrt(F) sqrt(G) + sqrt(I-F) sqrt(I-G)).
AngleVector dilation_angles(const HermitianMatrix& f, const HermitianMatrix& g,
                            const TolerancePolicy& tol = {});

// Additive perturbation bound through the dilation: after normalize_pair,
//   |Λ(F) - Λ(G)| ≺_w {S(R_F) + S(R_G)} tan Θ(range P(F), range P(G)),
// reported on the original scale (both sides multiplied back by scale).
// Conjecture-grade.  All angles must stay below π/2.
BoundReport eval_additive_bound(const HermitianMatrix& f_raw, const HermitianMatrix& g_raw,
                                const TolerancePolicy& tol = {});

// Weyl baseline |Λ(F) - Λ(G)| ≺_w S(F - G) on the raw pair; proven.
BoundReport eval_weyl_additive(const HermitianMatrix& f_raw, const HermitianMatrix& g_raw,
                               const TolerancePolicy& tol = {});

}  // namespace ritz
