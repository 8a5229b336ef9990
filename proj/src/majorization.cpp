#include "ritz/majorization.hpp"

#include <algorithm>
#include <cmath>

namespace ritz {

namespace {

double inf_norm(const RealVector& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

bool nonnegative(const RealVector& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) < 0.0) return false;
  return true;
}

// Decreasing rearrangements on a common length.  Zero-padding the shorter
// vector preserves weak majorization only for nonnegative entries, so mixed
// signs with unequal lengths are rejected.
std::pair<RealVector, RealVector> aligned_desc(const RealVector& x, const RealVector& y) {
  if (!all_finite(x) || !all_finite(y)) throw Error("majorization: non-finite entry");
  RealVector xs = sorted_desc(x);
  RealVector ys = sorted_desc(y);
  if (xs.size() != ys.size()) {
    if (!nonnegative(xs) || !nonnegative(ys)) throw Error("majorization: length mismatch with signed entries");
    const Index m = std::max(xs.size(), ys.size());
    xs = pad_zeros(xs, m);
    ys = pad_zeros(ys, m);
  }
  return {std::move(xs), std::move(ys)};
}

}  // namespace

double default_check_tol(const RealVector& x, const RealVector& y, const TolerancePolicy& tol) {
  const Index n = std::max(x.size(), y.size());
  return check_tol(tol, n, inf_norm(x), inf_norm(y));
}

RealVector prefix_margins(const RealVector& x, const RealVector& y) {
  auto [xs, ys] = aligned_desc(x, y);
  RealVector margins(xs.size());
  double px = 0.0, py = 0.0;
  for (Index k = 0; k < xs.size(); ++k) {
    px += xs(k);
    py += ys(k);
    margins(k) = py - px;
  }
  return margins;
}

MajorizationResult weak_majorize(const RealVector& x, const RealVector& y, double tol) {
  MajorizationResult r;
  r.tol = tol < 0.0 ? default_check_tol(x, y) : tol;
  r.margins = prefix_margins(x, y);
  if (r.margins.size() == 0) {
    r.holds = true;
    return r;
  }
  r.worst_index = 0;
  r.margins.minCoeff(&r.worst_index);
  r.holds = r.margins(r.worst_index) >= -r.tol;
  return r;
}

MajorizationResult strong_majorize(const RealVector& x, const RealVector& y, double tol) {
  MajorizationResult r = weak_majorize(x, y, tol);
  const double sum_gap = std::abs(x.sum() - y.sum());
  r.sum_equal = sum_gap <= r.tol;
  r.holds = r.holds && r.sum_equal;
  return r;
}

}  // namespace ritz
