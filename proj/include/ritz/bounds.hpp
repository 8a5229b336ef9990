#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "ritz/majorization.hpp"
#include "ritz/rayleigh_ritz.hpp"
#include "ritz/subspace.hpp"
#include "ritz/types.hpp"

namespace ritz {

// Identifiers for every implemented bound on |Λ(X^H A X) - Λ(Y^H A Y)| or on
// the angle functions.  The additive_* ids cover the dilation-based bounds on
// |Λ(F) - Λ(G)| for a Hermitian pair, which share this report format.
enum class BoundId {
  conjecture_cos,
  conjecture_tan,
  thm_mixed_cos,
  thm_mixed_squared,
  thm_mixed_scaled,
  cor_tan_cosmax,
  cor_tan_squared,
  cor_tan_scaled,
  apriori_sin,
  apriori_sin_squared,
  sun91,
  weyl_matching,
  davis_kahan_sin,
  davis_kahan_tan,
  quad_apost_sin,
  quad_apost_tan,
  block_discard,
  additive_mixed,
  additive_weyl,
};

const char* bound_name(BoundId id);
BoundId bound_from_name(const std::string& name);
std::vector<BoundId> all_bound_ids();

// Conjectural bounds may fail on some input without being a bug; proven
// bounds must hold on every valid input up to the check tolerance.
bool is_conjectural(BoundId id);

// Auxiliary quantities a bound used, for reporting.  NaN scalars and empty
// vectors mean "not applicable".  indices are 1-based positions into the
// decreasing spectrum.  scalars/vectors carry bound-specific extras under
// stable names.
struct BoundContext {
  RealVector theta;
  double c = std::numeric_limits<double>::quiet_NaN();
  double delta = std::numeric_limits<double>::quiet_NaN();
  double lambda_max = std::numeric_limits<double>::quiet_NaN();
  double lambda_min = std::numeric_limits<double>::quiet_NaN();
  std::vector<Index> indices;
  std::vector<std::pair<std::string, double>> scalars;
  std::vector<std::pair<std::string, RealVector>> vectors;
};

// One evaluated bound: lhs ≺_w rhs checked in the decreasing rearrangements.
// For squared bounds lhs holds the squares.
struct BoundReport {
  BoundId id = BoundId::conjecture_cos;
  Index n = 0;
  Index p = 0;
  DecreasingVector lhs;
  DecreasingVector rhs;
  MajorizationResult verdict;
  bool conjectural = false;
  BoundContext context;
};

// JSON object {bound_id, n, p, lhs, rhs, margins, holds, context:{...}} with
// arrays decreasing and numbers printed in shortest round-trip decimal.
std::string to_json(const BoundReport& report);

// Everything the evaluators share for one (A, X, Y) triple with
// dim X = dim Y = p, computed once: Ritz data, principal angles, residual
// singular values plain and projected (onto the other span and onto the
// join), spectrum data, and invariance flags.
struct PairData {
  Matrix a;
  Subspace x;
  Subspace y;
  Subspace joined;
  RitzData rx;
  RitzData ry;
  AngleVector theta;
  RealVector s_rx;
  RealVector s_ry;
  RealVector s_py_rx;
  RealVector s_px_ry;
  RealVector s_pj_rx;
  RealVector s_pj_ry;
  RealVector eigs_a;
  SpectrumExtremes extremes{};
  bool x_invariant = false;
  bool y_invariant = false;
  TolerancePolicy tol;

  Index n() const { return a.rows(); }
  Index p() const { return x.dim(); }
};

PairData make_pair_data(const HermitianMatrix& a, const Subspace& x, const Subspace& y,
                        const TolerancePolicy& tol = {});

// |Λ(X^H A X) - Λ(Y^H A Y)|: Ritz vectors sorted decreasing, differenced
// index-wise, absolute values re-sorted decreasing.
DecreasingVector lhs_ritz_change(const PairData& pd);
DecreasingVector lhs_ritz_change(const HermitianMatrix& a, const Subspace& x, const Subspace& y);

enum class ConjectureVariant { cos, tan };
enum class MixedVariant { cos, squared, scaled };
enum class TangentVariant { cosmax, squared, scaled };
enum class DkVariant { sin, tan };
enum class QuadVariant { sin, tan };

// Conjectured mixed bounds, element-wise in the decreasing vectors:
//   cos: lhs ≺_w {S(P_Y R_X) + S(P_X R_Y)} / cos Θ
//   tan: lhs ≺_w {S(P_J R_X) + S(P_J R_Y)} tan Θ      (J = span X + span Y)
// Requires θ_max < π/2.  When X is A-invariant the R_X terms vanish on
// their own; nothing is special-cased.
BoundReport eval_conjecture(const PairData& pd, ConjectureVariant variant);

// Proven mixed bounds with u = S(P_Y R_X) + S(P_X R_Y):
//   cos:     lhs    ≺_w u / cos θ_max
//   squared: lhs^2  ≺_w u^2 / cos^2 Θ
//   scaled:  lhs    ≺_w sqrt(c) u / cos Θ,  c = cos θ_min / cos θ_max
BoundReport eval_thm_mixed(const PairData& pd, MixedVariant variant);

// Proven tangent bounds with v = S(P_J R_X) + S(P_J R_Y):
//   cosmax:  lhs    ≺_w v sin Θ / cos θ_max
//   squared: lhs^2  ≺_w v^2 tan^2 Θ
//   scaled:  lhs    ≺_w sqrt(c) v tan Θ
BoundReport eval_cor_tangent(const PairData& pd, TangentVariant variant);

// A priori bound lhs ≺_w (λ_max - λ_min) sin Θ with the spectrum extremes
// taken over span X + span Y; with invariant_x set (X must actually be
// A-invariant) the sharper sin^2 Θ form.
BoundReport eval_apriori(const PairData& pd, bool invariant_x);

// For A-invariant X: lhs ≺_w S(R_Y) tan θ_max.  The context records the
// cosmax tangent bound's rhs, which dominates this one element-wise.
BoundReport eval_sun91(const PairData& pd);

// Existence bound: some p eigenvalues Λ_I(A) of A satisfy
//   |Λ_I(A) - Λ(Y^H A Y)| ≺_w [s_1, s_1, s_2, s_2, ...] ≺_w 2 S(R_Y).
// Certified search over all index sets when n <= exhaustive_cap, picking the
// set with the best worst prefix margin; above the cap a greedy
// nearest-eigenvalue heuristic is used and flagged in the context.  The
// report's rhs is the interleaved middle bound; the doubled form is in the
// context.
BoundReport eval_weyl_matching(const HermitianMatrix& a, const Subspace& y,
                               Index exhaustive_cap = 12, const TolerancePolicy& tol = {});

// Angle bounds for A-invariant X with spectral gap δ computed from Λ(Y^H A Y)
// and the complementary spectrum L2 = Λ(A) minus the eigenvalues X carries:
//   sin: sin Θ ≺_w S(R_Y)/δ, δ = dist(L2, Ritz hull [a,b]), needs δ > 0
//   tan: tan Θ ≺_w S(R_Y)/δ, δ the best of (1) L2 on one side of the Ritz
//        hull at distance δ, (2) Ritz values at distance δ outside the L2
//        hull
// delta_override > 0 bypasses the gap computation.  record_projected adds
// the unproven S(P_J R_Y)/δ variant to the context (recorded, not asserted).
BoundReport eval_davis_kahan(const PairData& pd, DkVariant variant, double delta_override = 0.0,
                             bool record_projected = false);

// Second-order a posteriori bounds under the matching gap condition:
//   sin: lhs   ≺_w S(P_J R_Y) S(R_Y) / (cos θ_max δ) <= S^2(R_Y)/(cos θ_max δ)
//   tan: lhs^2 ≺_w S^2(P_J R_Y) S^2(R_Y) / δ^2       <= S^4(R_Y)/δ^2
// The rhs is the tighter middle form; the looser pure-power form is recorded
// in the context.
BoundReport eval_quadratic_aposteriori(const PairData& pd, QuadVariant variant,
                                       double delta_override = 0.0);

// Block-diagonal truncation: for the invariant span X of the k chosen
// eigenvalues (1-based positions into the decreasing spectrum) and
// Y = span(e_1..e_k),
//   |Λ(X^H A X) - Λ(A_11)| ≺_w S(A_12) S(X_2 X_1^{-1})
// using tan Θ(X,Y) = S(X_2 X_1^{-1}); conjecture-grade.  The proven variant
// with the extra sqrt(c) multiplier is recorded in the context.  X_1 must be
// invertible.
BoundReport eval_block_discard(const HermitianMatrix& a, Index k, const std::vector<Index>& eig_indices,
                               const TolerancePolicy& tol = {});

}  // namespace ritz
