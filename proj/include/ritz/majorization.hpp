#pragma once

#include "ritz/types.hpp"

namespace ritz {

// Verdict for x ≺_w y (weak) or x ≺ y (strong) in the decreasing
// rearrangements.  margins[k] = sum of the k+1 largest of y minus the same
// prefix of x; the relation holds when every margin is >= -tol.
struct MajorizationResult {
  bool holds = false;
  RealVector margins;
  Index worst_index = -1;
  bool sum_equal = false;  // set by strong_majorize only
  double tol = 0.0;
};

// atol + rtol * (n * max(|x|_inf, |y|_inf, 1))
double default_check_tol(const RealVector& x, const RealVector& y,
                         const TolerancePolicy& tol = {});

// Prefix margins of the decreasing rearrangements.  Unequal lengths are
// zero-padded, which is valid only when both vectors are entrywise
// nonnegative; otherwise a length mismatch is an error.
RealVector prefix_margins(const RealVector& x, const RealVector& y);

// tol < 0 selects default_check_tol(x, y).
MajorizationResult weak_majorize(const RealVector& x, const RealVector& y, double tol = -1.0);

// weak_majorize plus the total-sum equality |sum x - sum y| <= tol, recorded
// in sum_equal; holds requires both.
MajorizationResult strong_majorize(const RealVector& x, const RealVector& y, double tol = -1.0);

}  // namespace ritz
