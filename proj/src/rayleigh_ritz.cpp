#include "ritz/rayleigh_ritz.hpp"

namespace ritz {

RitzData ritz(const HermitianMatrix& a, const Subspace& x) {
  if (a.n() != x.ambient()) throw Error("ritz: dimension mismatch");
  const Matrix ax = a.mat() * x.basis();
  HermitianMatrix rq = HermitianMatrix::symmetrized(x.basis().adjoint() * ax);
  Matrix residual = ax - x.basis() * rq.mat();
  DecreasingVector values = eigh(rq).values;
  return RitzData{std::move(rq), std::move(values), std::move(residual)};
}

DecreasingVector residual_singvals(const RitzData& r) {
  return DecreasingVector(pad_zeros(svd_decreasing(r.residual).values(), r.residual.cols()));
}

DecreasingVector projected_singvals(const Subspace& onto, const Matrix& m) {
  if (onto.ambient() != m.rows()) throw Error("projected_singvals: dimension mismatch");
  const RealVector s = svd_decreasing(onto.basis().adjoint() * m).values();
  return DecreasingVector(pad_zeros(s, m.cols()));
}

SpectrumExtremes ritz_extremes_on_join(const HermitianMatrix& a, const Subspace& x, const Subspace& y,
                                       const TolerancePolicy& tol) {
  const Subspace j = join(x, y, tol);
  const HermitianMatrix rq = HermitianMatrix::symmetrized(j.basis().adjoint() * a.mat() * j.basis());
  const DecreasingVector vals = eigh(rq).values;
  return SpectrumExtremes{vals.max(), vals.min()};
}

bool is_invariant(const HermitianMatrix& a, const Subspace& x, const RitzData& r) {
  const double a_norm = a.n() == 0 ? 0.0 : spectral_norm(a.mat());
  return spectral_norm(r.residual) <= static_cast<double>(x.ambient()) * a_norm * 1e-10;
}

}  // namespace ritz
