#include "ritz/dilation.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace ritz {

namespace {

// Eigendecomposition of F with the spectrum validated against [0,1] and
// clamped within the atol window.
struct UnitSpectrum {
  RealVector lam;
  Matrix v;
};

UnitSpectrum unit_spectrum(const HermitianMatrix& f, const TolerancePolicy& tol) {
  EighResult e = eigh(f);
  if (e.values.min() < -tol.atol || e.values.max() > 1.0 + tol.atol) {
    throw Error("spectrum outside [0,1]");
  }
  RealVector lam = e.values.values().cwiseMax(0.0).cwiseMin(1.0);
  return {std::move(lam), std::move(e.vectors)};
}

// V diag(d) V^H for a real scalar function d of the spectrum.
Matrix spectral_apply(const UnitSpectrum& s, const RealVector& d) {
  return s.v * d.cast<Complex>().asDiagonal() * s.v.adjoint();
}

DecreasingVector abs_eig_diff(const HermitianMatrix& f, const HermitianMatrix& g) {
  const RealVector df = eigh(f).values.values();
  const RealVector dg = eigh(g).values.values();
  return DecreasingVector((df - dg).cwiseAbs());
}

}  // namespace

NormalizedPair normalize_pair(const HermitianMatrix& f_raw, const HermitianMatrix& g_raw) {
  if (f_raw.n() != g_raw.n()) throw Error("dimension mismatch");
  const Index n = f_raw.n();
  const DecreasingVector ef = eigh(f_raw).values;
  const DecreasingVector eg = eigh(g_raw).values;
  const double lo = std::min(ef.min(), eg.min());
  const double hi = std::max(ef.max(), eg.max());
  double scale = hi - lo;
  if (scale <= 0.0) scale = 1.0;
  const Matrix id = Matrix::Identity(n, n);
  return NormalizedPair{HermitianMatrix::symmetrized((f_raw.mat() - lo * id) / scale),
                        HermitianMatrix::symmetrized((g_raw.mat() - lo * id) / scale), lo, scale};
}

HermitianMatrix dilation_projector(const HermitianMatrix& f, const TolerancePolicy& tol) {
  const UnitSpectrum s = unit_spectrum(f, tol);
  const Index n = f.n();
  const RealVector one_minus = RealVector::Ones(n) - s.lam;
  const Matrix top_left = spectral_apply(s, s.lam);
  const Matrix bottom_right = spectral_apply(s, one_minus);
  const Matrix off = spectral_apply(s, (s.lam.array() * one_minus.array()).sqrt().matrix());
  Matrix p(2 * n, 2 * n);
  p.topLeftCorner(n, n) = top_left;
  p.topRightCorner(n, n) = off;
  p.bottomLeftCorner(n, n) = off;
  p.bottomRightCorner(n, n) = bottom_right;
  return HermitianMatrix::symmetrized(p);
}

Matrix dilation_basis(const HermitianMatrix& f, const TolerancePolicy& tol) {
  const UnitSpectrum s = unit_spectrum(f, tol);
  const Index n = f.n();
  const RealVector one_minus = RealVector::Ones(n) - s.lam;
  Matrix b(2 * n, n);
  b.topRows(n) = spectral_apply(s, s.lam.cwiseSqrt());
  b.bottomRows(n) = spectral_apply(s, one_minus.cwiseSqrt());
  return b;
}

DecreasingVector dilation_residual_singvals(const HermitianMatrix& f, const TolerancePolicy& tol) {
  const UnitSpectrum s = unit_spectrum(f, tol);
  const RealVector vals = (s.lam.array() * (1.0 - s.lam.array())).sqrt().matrix();
  return DecreasingVector(vals);
}

AngleVector dilation_angles(const HermitianMatrix& f, const HermitianMatrix& g,
                            const TolerancePolicy& tol) {
  if (f.n() != g.n()) throw Error("dimension mismatch");
  const UnitSpectrum sf = unit_spectrum(f, tol);
  const UnitSpectrum sg = unit_spectrum(g, tol);
  const Index n = f.n();
  const RealVector f_rest = RealVector::Ones(n) - sf.lam;
  const RealVector g_rest = RealVector::Ones(n) - sg.lam;
  const Matrix m = spectral_apply(sf, sf.lam.cwiseSqrt()) * spectral_apply(sg, sg.lam.cwiseSqrt()) +
                   spectral_apply(sf, f_rest.cwiseSqrt()) * spectral_apply(sg, g_rest.cwiseSqrt());
  const RealVector cosines = svd_decreasing(m).values();
  RealVector angles(n);
  for (Index i = 0; i < n; ++i) angles(i) = std::acos(std::min(1.0, cosines(i)));
  return AngleVector(angles);
}

BoundReport eval_additive_bound(const HermitianMatrix& f_raw, const HermitianMatrix& g_raw,
                                const TolerancePolicy& tol) {
  const NormalizedPair np = normalize_pair(f_raw, g_raw);
  const Index n = np.f.n();
  const RealVector lhs = abs_eig_diff(np.f, np.g).values() * np.scale;
  const RealVector s_f = dilation_residual_singvals(np.f, tol).values();
  const RealVector s_g = dilation_residual_singvals(np.g, tol).values();
  const AngleVector theta = dilation_angles(np.f, np.g, tol);
  const RealVector rhs = ((s_f + s_g).array() * theta.tangents(tol).array()).matrix() * np.scale;
  BoundContext ctx;
  ctx.theta = theta.radians();
  ctx.scalars.emplace_back("shift", np.shift);
  ctx.scalars.emplace_back("scale", np.scale);
  BoundReport r;
  r.id = BoundId::additive_mixed;
  r.n = n;
  r.p = n;
  r.lhs = DecreasingVector(lhs);
  r.rhs = DecreasingVector(rhs);
  r.verdict =
      weak_majorize(r.lhs.values(), r.rhs.values(), default_check_tol(r.lhs.values(), r.rhs.values(), tol));
  r.conjectural = true;
  r.context = std::move(ctx);
  return r;
}

BoundReport eval_weyl_additive(const HermitianMatrix& f_raw, const HermitianMatrix& g_raw,
                               const TolerancePolicy& tol) {
  if (f_raw.n() != g_raw.n()) throw Error("dimension mismatch");
  BoundReport r;
  r.id = BoundId::additive_weyl;
  r.n = f_raw.n();
  r.p = f_raw.n();
  r.lhs = abs_eig_diff(f_raw, g_raw);
  r.rhs = svd_decreasing(f_raw.mat() - g_raw.mat());
  r.verdict =
      weak_majorize(r.lhs.values(), r.rhs.values(), default_check_tol(r.lhs.values(), r.rhs.values(), tol));
  r.conjectural = false;
  return r;
}

}  // namespace ritz
