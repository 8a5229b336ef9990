#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <initializer_list>
#include <numbers>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "ritz/bounds.hpp"

using namespace ritz;

namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

HermitianMatrix diag(std::initializer_list<double> d) {
  Matrix a = Matrix::Zero(static_cast<Index>(d.size()), static_cast<Index>(d.size()));
  Index i = 0;
  for (double x : d) a(i, i) = x, ++i;
  return HermitianMatrix(a);
}

Subspace axis(Index n, Index i) {
  return Subspace::from_orthonormal(Matrix::Identity(n, n).col(i));
}

Subspace axes(Index n, std::initializer_list<Index> which) {
  Matrix b = Matrix::Zero(n, static_cast<Index>(which.size()));
  Index j = 0;
  for (Index i : which) b(i, j++) = 1.0;
  return Subspace::from_orthonormal(b);
}

// The exactly solvable test triple: A = diag(1,2,3), X = span(e1) invariant,
// Y = span((e1+e2)/sqrt2).  Ritz change 0.5, theta = pi/4, S(R_Y) = 0.5,
// S(P_X R_Y) = 0.5/sqrt2, S(P_J R_Y) = 0.5, join = span(e1, e2).
PairData tight_pair() {
  Matrix yb = Matrix::Zero(3, 1);
  yb(0, 0) = kInvSqrt2;
  yb(1, 0) = kInvSqrt2;
  return make_pair_data(diag({1, 2, 3}), axis(3, 0), Subspace::from_orthonormal(yb));
}

double worst(const BoundReport& r) { return r.verdict.margins.minCoeff(); }

double scalar_of(const BoundReport& r, const std::string& name) {
  for (const auto& [k, v] : r.context.scalars)
    if (k == name) return v;
  FAIL("missing context scalar " << name);
  return 0.0;
}

bool has_scalar(const BoundReport& r, const std::string& name) {
  for (const auto& [k, v] : r.context.scalars)
    if (k == name) return true;
  return false;
}

}  // namespace

TEST_CASE("bound names round trip") {
  const std::vector<BoundId> ids = all_bound_ids();
  CHECK(ids.size() == 19);
  for (BoundId id : ids) CHECK(bound_from_name(bound_name(id)) == id);
  CHECK(bound_from_name("thm_mixed_cos") == BoundId::thm_mixed_cos);
  CHECK_THROWS_AS(bound_from_name("nope"), Error);
}

TEST_CASE("only the unproven bounds are flagged conjectural") {
  CHECK(is_conjectural(BoundId::conjecture_cos));
  CHECK(is_conjectural(BoundId::conjecture_tan));
  CHECK(is_conjectural(BoundId::block_discard));
  CHECK(is_conjectural(BoundId::additive_mixed));
  CHECK_FALSE(is_conjectural(BoundId::thm_mixed_cos));
  CHECK_FALSE(is_conjectural(BoundId::cor_tan_scaled));
  CHECK_FALSE(is_conjectural(BoundId::davis_kahan_tan));
  CHECK_FALSE(is_conjectural(BoundId::weyl_matching));
  CHECK_FALSE(is_conjectural(BoundId::additive_weyl));
}

TEST_CASE("make_pair_data computes the shared quantities") {
  const PairData pd = tight_pair();
  CHECK(pd.n() == 3);
  CHECK(pd.p() == 1);
  CHECK(pd.x_invariant);
  CHECK_FALSE(pd.y_invariant);
  CHECK(pd.theta.max() == doctest::Approx(std::numbers::pi / 4.0).epsilon(1e-13));
  CHECK(pd.s_rx.maxCoeff() <= 1e-13);
  CHECK(pd.s_ry(0) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(pd.s_px_ry(0) == doctest::Approx(0.5 * kInvSqrt2).epsilon(1e-13));
  CHECK(pd.s_py_rx.maxCoeff() <= 1e-13);
  CHECK(pd.s_pj_ry(0) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(pd.joined.dim() == 2);
  CHECK(pd.eigs_a(0) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(pd.extremes.lambda_max == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(pd.extremes.lambda_min == doctest::Approx(1.0).epsilon(1e-13));

  const DecreasingVector lhs = lhs_ritz_change(pd);
  REQUIRE(lhs.size() == 1);
  CHECK(lhs[0] == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("make_pair_data rejects mismatched shapes") {
  CHECK_THROWS_AS(make_pair_data(diag({1, 2, 3}), axis(2, 0), axis(2, 1)), Error);
  CHECK_THROWS_AS(make_pair_data(diag({1, 2, 3}), axis(3, 0),
                                 Subspace::from_orthonormal(Matrix::Identity(3, 2))),
                  Error);
}

TEST_CASE("mixed bound is exactly tight on the test triple") {
  const PairData pd = tight_pair();
  const BoundReport r = eval_thm_mixed(pd, MixedVariant::cos);
  REQUIRE(r.lhs.size() == 1);
  CHECK(std::abs(r.lhs[0] - 0.5) <= 1e-12);
  CHECK(std::abs(r.rhs[0] - 0.5) <= 1e-12);
  CHECK(r.verdict.holds);
  CHECK(std::abs(worst(r)) <= 1e-12);
  CHECK_FALSE(r.conjectural);
}

TEST_CASE("the three mixed variants coincide at p = 1") {
  const PairData pd = tight_pair();
  const BoundReport cos = eval_thm_mixed(pd, MixedVariant::cos);
  const BoundReport sq = eval_thm_mixed(pd, MixedVariant::squared);
  const BoundReport sc = eval_thm_mixed(pd, MixedVariant::scaled);
  CHECK(std::abs(sc.rhs[0] - cos.rhs[0]) <= 1e-12);
  CHECK(std::abs(std::sqrt(sq.rhs[0]) - cos.rhs[0]) <= 1e-12);
  // the squared variant reports squares on both sides
  CHECK(std::abs(sq.lhs[0] - 0.25) <= 1e-12);
  // a single angle makes the cosine ratio exactly one
  CHECK(sc.context.c == 1.0);
}

TEST_CASE("tangent corollary variants on the test triple") {
  const PairData pd = tight_pair();
  const BoundReport cm = eval_cor_tangent(pd, TangentVariant::cosmax);
  const BoundReport sq = eval_cor_tangent(pd, TangentVariant::squared);
  const BoundReport sc = eval_cor_tangent(pd, TangentVariant::scaled);
  // v = 0.5, sin/cos = tan(pi/4) = 1 makes all three 0.5
  CHECK(std::abs(cm.rhs[0] - 0.5) <= 1e-12);
  CHECK(std::abs(std::sqrt(sq.rhs[0]) - 0.5) <= 1e-12);
  CHECK(std::abs(sc.rhs[0] - 0.5) <= 1e-12);
  CHECK(cm.verdict.holds);
  CHECK(sq.verdict.holds);
  CHECK(sc.verdict.holds);
  CHECK(sc.context.c == 1.0);
}

TEST_CASE("conjectured elementwise forms agree with the scalar forms at p = 1") {
  const PairData pd = tight_pair();
  const BoundReport cos = eval_conjecture(pd, ConjectureVariant::cos);
  const BoundReport tan = eval_conjecture(pd, ConjectureVariant::tan);
  CHECK(cos.conjectural);
  CHECK(tan.conjectural);
  CHECK(std::abs(cos.rhs[0] - 0.5) <= 1e-12);
  CHECK(std::abs(tan.rhs[0] - 0.5) <= 1e-12);
  CHECK(cos.verdict.holds);
  CHECK(tan.verdict.holds);
}

TEST_CASE("a priori bounds use the extremes on the join") {
  const PairData pd = tight_pair();
  const BoundReport plain = eval_apriori(pd, false);
  // (2 - 1) sin(pi/4)
  CHECK(plain.rhs[0] == doctest::Approx(kInvSqrt2).epsilon(1e-12));
  CHECK(plain.verdict.holds);
  CHECK(plain.context.lambda_max == doctest::Approx(2.0).epsilon(1e-12));

  const BoundReport sharp = eval_apriori(pd, true);
  // invariant X sharpens to sin^2: equality 0.5 = 0.5
  CHECK(std::abs(sharp.rhs[0] - 0.5) <= 1e-12);
  CHECK(sharp.verdict.holds);
  CHECK(std::abs(worst(sharp)) <= 1e-12);
}

TEST_CASE("sun91 is tight on the test triple and dominated by the tangent corollary") {
  const PairData pd = tight_pair();
  const BoundReport r = eval_sun91(pd);
  CHECK(std::abs(r.rhs[0] - 0.5) <= 1e-12);
  CHECK(r.verdict.holds);
  bool found = false;
  for (const auto& [name, v] : r.context.vectors) {
    if (name == "cor_tan_cosmax_rhs") {
      found = true;
      REQUIRE(v.size() == 1);
      CHECK(r.rhs[0] <= v(0) + 1e-12);
    }
  }
  CHECK(found);
}

TEST_CASE("sun91 requires an invariant first span") {
  // swap the roles: the first span is now the non-invariant one
  Matrix yb = Matrix::Zero(3, 1);
  yb(0, 0) = kInvSqrt2;
  yb(1, 0) = kInvSqrt2;
  const PairData swapped =
      make_pair_data(diag({1, 2, 3}), Subspace::from_orthonormal(yb), axis(3, 0));
  CHECK_THROWS_WITH_AS(eval_sun91(swapped), "x not invariant", Error);
  CHECK_THROWS_AS(eval_davis_kahan(swapped, DkVariant::sin), Error);
}

TEST_CASE("perpendicular spans are rejected by the acute-angle bounds") {
  const PairData pd = make_pair_data(diag({1, 2}), axis(2, 0), axis(2, 1));
  CHECK_THROWS_WITH_AS(eval_thm_mixed(pd, MixedVariant::cos), "subspaces not acute", Error);
  CHECK_THROWS_AS(eval_conjecture(pd, ConjectureVariant::cos), Error);
  // the sine-based a priori bound still applies
  const BoundReport r = eval_apriori(pd, false);
  CHECK(r.verdict.holds);
}

TEST_CASE("eigenvalue matching on diag(1,2) hits the interleaved bound exactly") {
  Matrix yb(2, 1);
  yb << kInvSqrt2, kInvSqrt2;
  const BoundReport r = eval_weyl_matching(diag({1, 2}), Subspace::from_orthonormal(yb));
  REQUIRE(r.lhs.size() == 1);
  // Ritz value 1.5 sits exactly between the eigenvalues; S(R_Y) = 0.5
  CHECK(std::abs(r.lhs[0] - 0.5) <= 1e-12);
  CHECK(std::abs(r.rhs[0] - 0.5) <= 1e-12);
  CHECK(r.verdict.holds);
  REQUIRE(r.context.indices.size() == 1);
  CHECK(r.context.indices[0] == 1);
  CHECK(scalar_of(r, "doubled_holds") == 1.0);
  CHECK(scalar_of(r, "doubled_worst_margin") == doctest::Approx(0.5).epsilon(1e-12));
  CHECK_FALSE(has_scalar(r, "heuristic"));
}

TEST_CASE("matching falls back to the greedy heuristic above the cap") {
  Matrix yb(2, 1);
  yb << kInvSqrt2, kInvSqrt2;
  const BoundReport r =
      eval_weyl_matching(diag({1, 2}), Subspace::from_orthonormal(yb), /*exhaustive_cap=*/1);
  CHECK(r.verdict.holds);
  CHECK(has_scalar(r, "heuristic"));
}

TEST_CASE("matching pairs each Ritz value within twice the residual") {
  // p = 2 on diag(1,2,3,4): Y mixing two eigenvector pairs
  Matrix yb = Matrix::Zero(4, 2);
  yb(0, 0) = kInvSqrt2;
  yb(1, 0) = kInvSqrt2;
  yb(2, 1) = kInvSqrt2;
  yb(3, 1) = kInvSqrt2;
  const BoundReport r = eval_weyl_matching(diag({1, 2, 3, 4}), Subspace::from_orthonormal(yb));
  REQUIRE(r.lhs.size() == 2);
  // Ritz values 1.5 and 3.5, each 0.5 from a matched eigenvalue; the
  // interleaved rhs repeats the largest residual value: [0.5, 0.5]
  CHECK(std::abs(r.lhs[0] - 0.5) <= 1e-12);
  CHECK(std::abs(r.rhs[0] - 0.5) <= 1e-12);
  CHECK(std::abs(r.rhs[1] - 0.5) <= 1e-12);
  CHECK(r.verdict.holds);
}

TEST_CASE("davis-kahan sine bound with the hand-computed gap") {
  const PairData pd = tight_pair();
  const BoundReport r = eval_davis_kahan(pd, DkVariant::sin);
  // L2 = {2, 3}, Ritz hull {1.5}: delta = 0.5, rhs = 0.5/0.5 = 1
  CHECK(r.context.delta == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(r.rhs[0] - 1.0) <= 1e-12);
  CHECK(r.lhs[0] == doctest::Approx(kInvSqrt2).epsilon(1e-12));
  CHECK(r.verdict.holds);
}

TEST_CASE("davis-kahan tangent bound is exactly tight on the test triple") {
  const PairData pd = tight_pair();
  const BoundReport r = eval_davis_kahan(pd, DkVariant::tan);
  CHECK(std::abs(r.lhs[0] - 1.0) <= 1e-10);
  CHECK(std::abs(r.rhs[0] - 1.0) <= 1e-12);
  CHECK(r.verdict.holds);
  CHECK(std::abs(worst(r)) <= 1e-9);
  CHECK(scalar_of(r, "gap_condition") == 1.0);
}

TEST_CASE("tangent gap condition covers complementary values inside the Ritz hull") {
  // A = diag(0,5,10), X = span(e1,e3) invariant, Y rotates e1 by pi/6 in the
  // (e1,e2) plane.  L2 = {5} sits inside the Ritz hull [1.25, 10], so the
  // sine gap fails, but every Ritz value stays 3.75 away from 5.
  const HermitianMatrix a = diag({0, 5, 10});
  const Subspace x = axes(3, {0, 2});
  Matrix yb = Matrix::Zero(3, 2);
  yb(0, 0) = std::cos(std::numbers::pi / 6.0);
  yb(1, 0) = std::sin(std::numbers::pi / 6.0);
  yb(2, 1) = 1.0;
  const PairData pd = make_pair_data(a, x, Subspace::from_orthonormal(yb));
  REQUIRE(pd.x_invariant);

  CHECK_THROWS_WITH_AS(eval_davis_kahan(pd, DkVariant::sin),
                       "gap condition not met: a complementary eigenvalue lies inside the Ritz interval",
                       Error);

  const BoundReport r = eval_davis_kahan(pd, DkVariant::tan);
  CHECK(scalar_of(r, "gap_condition") == 2.0);
  CHECK(r.context.delta == doctest::Approx(3.75).epsilon(1e-12));
  // S(R_Y) = {sqrt(4.6875), 0} makes this another exact equality:
  // rhs = tan(pi/6) elementwise against lhs = {tan(pi/6), 0}
  CHECK(r.lhs[0] == doctest::Approx(std::tan(std::numbers::pi / 6.0)).epsilon(1e-12));
  CHECK(r.rhs[0] == doctest::Approx(std::tan(std::numbers::pi / 6.0)).epsilon(1e-12));
  CHECK(r.rhs[1] <= 1e-13);
  CHECK(r.verdict.holds);
  CHECK(std::abs(worst(r)) <= 1e-10);
}

TEST_CASE("a delta override bypasses the gap computation") {
  const PairData pd = tight_pair();
  const BoundReport r = eval_davis_kahan(pd, DkVariant::sin, /*delta_override=*/10.0);
  CHECK(r.context.delta == 10.0);
  CHECK(std::abs(r.rhs[0] - 0.05) <= 1e-12);
  CHECK(has_scalar(r, "delta_override"));
  CHECK_FALSE(r.verdict.holds);  // sin(pi/4) > 0.05: an inflated gap breaks the bound
}

TEST_CASE("quadratic a posteriori bounds on the test triple") {
  const PairData pd = tight_pair();
  const BoundReport s = eval_quadratic_aposteriori(pd, QuadVariant::sin);
  // S(P_J R_Y) S(R_Y) / (cos(theta_max) delta) = 0.25 / (0.5/sqrt2) = sqrt2/2
  CHECK(s.context.delta == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(s.rhs[0] == doctest::Approx(std::numbers::sqrt2 / 2.0).epsilon(1e-12));
  CHECK(std::abs(s.lhs[0] - 0.5) <= 1e-12);
  CHECK(s.verdict.holds);

  const BoundReport t = eval_quadratic_aposteriori(pd, QuadVariant::tan);
  // squared form: lhs^2 = 0.25 equals S^2(P_J R_Y) S^2(R_Y) / delta^2 = 0.25
  CHECK(std::abs(t.lhs[0] - 0.25) <= 1e-12);
  CHECK(std::abs(t.rhs[0] - 0.25) <= 1e-12);
  CHECK(t.verdict.holds);
  CHECK(std::abs(worst(t)) <= 1e-10);
  bool loose = false;
  for (const auto& [name, v] : t.context.vectors) {
    if (name == "loose_rhs") {
      loose = true;
      // S^4(R_Y)/delta^2 = 0.0625/0.25 = 0.25 coincides here
      CHECK(v(0) == doctest::Approx(0.25).epsilon(1e-12));
    }
  }
  CHECK(loose);
}

TEST_CASE("block truncation equality on the 2x2 flip matrix") {
  Matrix a(2, 2);
  a << 0.0, 1.0, 1.0, 0.0;
  const BoundReport r = eval_block_discard(HermitianMatrix(a), 1, {1});
  REQUIRE(r.lhs.size() == 1);
  // eigenvector (1,1)/sqrt2 of eigenvalue 1: lhs = |1 - 0| = 1,
  // rhs = S(A12) S(X2 X1^{-1}) = 1 * 1 = 1
  CHECK(std::abs(r.lhs[0] - 1.0) <= 1e-12);
  CHECK(std::abs(r.rhs[0] - 1.0) <= 1e-12);
  CHECK(r.verdict.holds);
  CHECK(std::abs(worst(r)) <= 1e-12);
  CHECK(r.conjectural);
  // the proven sqrt(c)-scaled variant rides along in the context
  CHECK(scalar_of(r, "scaled_holds") == 1.0);
  CHECK(std::abs(scalar_of(r, "scaled_worst_margin")) <= 1e-9);
}

TEST_CASE("block truncation argument validation") {
  const HermitianMatrix a = diag({1, 2});
  CHECK_THROWS_WITH_AS(eval_block_discard(a, 0, {}), "k out of range", Error);
  CHECK_THROWS_WITH_AS(eval_block_discard(a, 3, {1, 2, 3}), "k out of range", Error);
  CHECK_THROWS_WITH_AS(eval_block_discard(a, 2, {1}), "index count differs from k", Error);
  CHECK_THROWS_WITH_AS(eval_block_discard(a, 1, {0}), "eigenvalue index out of range", Error);
  CHECK_THROWS_WITH_AS(eval_block_discard(a, 1, {3}), "eigenvalue index out of range", Error);
  CHECK_THROWS_WITH_AS(eval_block_discard(a, 2, {1, 1}), "duplicate eigenvalue index", Error);
}

TEST_CASE("block truncation refuses a singular top block") {
  // the top eigenvector of diag(1,2) is e2, whose first coordinate vanishes
  CHECK_THROWS_WITH_AS(
      eval_block_discard(diag({1, 2}), 1, {1}),
      "top block of the eigenvector matrix is singular; the general tangent case is not covered",
      Error);
}

TEST_CASE("report serialization carries the full evaluation") {
  const PairData pd = tight_pair();
  const BoundReport r = eval_thm_mixed(pd, MixedVariant::scaled);
  const nlohmann::json j = nlohmann::json::parse(to_json(r));
  CHECK(j["bound_id"] == "thm_mixed_scaled");
  CHECK(j["n"] == 3);
  CHECK(j["p"] == 1);
  CHECK(j["holds"] == true);
  REQUIRE(j["lhs"].size() == 1);
  CHECK(j["lhs"][0].get<double>() == r.lhs[0]);
  CHECK(j["rhs"][0].get<double>() == r.rhs[0]);
  CHECK(j["margins"].size() == 1);
  CHECK(j["context"]["c"].get<double>() == 1.0);
  REQUIRE(j["context"]["theta"].size() == 1);
  CHECK(j["context"]["theta"][0].get<double>() == pd.theta.radians()(0));
}

TEST_CASE("proven bounds hold on a small complex pair") {
  Matrix a(2, 2);
  a << Complex(2, 0), Complex(0, 1), Complex(0, -1), Complex(2, 0);
  Matrix yb(2, 1);
  yb << Complex(kInvSqrt2, 0), Complex(0, kInvSqrt2);
  const PairData pd =
      make_pair_data(HermitianMatrix(a), axis(2, 0), Subspace::from_orthonormal(yb));
  CHECK(eval_thm_mixed(pd, MixedVariant::cos).verdict.holds);
  CHECK(eval_cor_tangent(pd, TangentVariant::scaled).verdict.holds);
  CHECK(eval_apriori(pd, false).verdict.holds);
}

TEST_CASE("lhs_ritz_change convenience overload matches the pair data") {
  Matrix yb = Matrix::Zero(3, 1);
  yb(0, 0) = kInvSqrt2;
  yb(1, 0) = kInvSqrt2;
  const Subspace y = Subspace::from_orthonormal(yb);
  const DecreasingVector direct = lhs_ritz_change(diag({1, 2, 3}), axis(3, 0), y);
  CHECK(direct[0] == doctest::Approx(0.5).epsilon(1e-13));
}
