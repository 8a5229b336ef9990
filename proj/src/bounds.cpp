#include "ritz/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

#include "json.hpp"

namespace ritz {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

struct NameEntry {
  BoundId id;
  const char* name;
  bool conjectural;
};

constexpr NameEntry kNames[] = {
    {BoundId::conjecture_cos, "conjecture_cos", true},
    {BoundId::conjecture_tan, "conjecture_tan", true},
    {BoundId::thm_mixed_cos, "thm_mixed_cos", false},
    {BoundId::thm_mixed_squared, "thm_mixed_squared", false},
    {BoundId::thm_mixed_scaled, "thm_mixed_scaled", false},
    {BoundId::cor_tan_cosmax, "cor_tan_cosmax", false},
    {BoundId::cor_tan_squared, "cor_tan_squared", false},
    {BoundId::cor_tan_scaled, "cor_tan_scaled", false},
    {BoundId::apriori_sin, "apriori_sin", false},
    {BoundId::apriori_sin_squared, "apriori_sin_squared", false},
    {BoundId::sun91, "sun91", false},
    {BoundId::weyl_matching, "weyl_matching", false},
    {BoundId::davis_kahan_sin, "davis_kahan_sin", false},
    {BoundId::davis_kahan_tan, "davis_kahan_tan", false},
    {BoundId::quad_apost_sin, "quad_apost_sin", false},
    {BoundId::quad_apost_tan, "quad_apost_tan", false},
    {BoundId::block_discard, "block_discard", true},
    {BoundId::additive_mixed, "additive_mixed", true},
    {BoundId::additive_weyl, "additive_weyl", false},
};

const NameEntry& entry(BoundId id) {
  for (const NameEntry& e : kNames) {
    if (e.id == id) return e;
  }
  throw Error("unknown bound id");
}

// A bound scaled by 1/δ or 1/cos θ inherits that scalar's floating-point
// conditioning: δ is a difference of independently computed eigenvalues, each
// accurate to ~eps·‖A‖, so the two sides of an exactly tight bound drift
// apart by eps·amplification·scale with no mathematical violation.  The check
// tolerance must carry the same amplification, which stays many orders of
// magnitude below the compared values themselves.
double fp_slack(Index p, double amp, double lhs_max, double rhs_max) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  return 64.0 * eps * static_cast<double>(p) * ((rhs_max + 1.0) * amp + 1.0 + lhs_max * lhs_max);
}

// 1/cos^2(θ_max) = 1 + tan^2(θ_max): first-order error amplification of the
// tangent (and of 1/cos) at the largest principal angle.
double angle_amp(const AngleVector& theta) {
  const double c = std::cos(theta.max());
  return 1.0 / (c * c);
}

// ‖A‖_2 from the precomputed spectrum; the absolute accuracy scale of every
// eigenvalue and Ritz value, and hence of a spectral gap δ.
double spectral_scale(const PairData& pd) {
  return std::max(std::abs(pd.eigs_a(0)), std::abs(pd.eigs_a(pd.eigs_a.size() - 1)));
}

BoundReport make_report(BoundId id, Index n, Index p, const RealVector& lhs, const RealVector& rhs,
                        BoundContext ctx, const TolerancePolicy& tol, double extra_tol = 0.0) {
  BoundReport r;
  r.id = id;
  r.n = n;
  r.p = p;
  r.lhs = DecreasingVector(lhs);
  r.rhs = DecreasingVector(rhs);
  r.verdict = weak_majorize(r.lhs.values(), r.rhs.values(),
                            default_check_tol(r.lhs.values(), r.rhs.values(), tol) + extra_tol);
  r.conjectural = is_conjectural(id);
  r.context = std::move(ctx);
  return r;
}

void require_acute(const PairData& pd) {
  if (pd.theta.size() > 0 && pd.theta.max() >= kHalfPi - pd.tol.atol) {
    throw Error("subspaces not acute");
  }
}

void require_invariant_x(const PairData& pd) {
  if (!pd.x_invariant) throw Error("x not invariant");
}

// cos theta_min / cos theta_max >= 1.
double cos_ratio(const AngleVector& theta) {
  const double cmax = std::cos(theta.max());
  if (cmax <= 0.0) throw Error("subspaces not acute");
  return std::cos(theta.min()) / cmax;
}

// Remaining eigenvalues of A after removing, one by one, the nearest match
// of each Ritz value of the invariant span X.  Decreasing order survives the
// erasures.
std::vector<double> complementary_spectrum(const PairData& pd) {
  std::vector<double> eigs(pd.eigs_a.data(), pd.eigs_a.data() + pd.eigs_a.size());
  for (Index j = 0; j < pd.rx.values.size(); ++j) {
    const double target = pd.rx.values[j];
    std::size_t best = 0;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < eigs.size(); ++i) {
      const double d = std::abs(eigs[i] - target);
      if (d < best_dist) {
        best_dist = d;
        best = i;
      }
    }
    eigs.erase(eigs.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return eigs;
}

// Distance from the complementary spectrum to the Ritz hull [a, b].
double sin_gap(const PairData& pd) {
  const std::vector<double> l2 = complementary_spectrum(pd);
  if (l2.empty()) throw Error("complementary spectrum empty");
  const double a = pd.ry.values.min();
  const double b = pd.ry.values.max();
  double delta = std::numeric_limits<double>::infinity();
  for (double mu : l2) {
    const double d = mu > b ? mu - b : (mu < a ? a - mu : 0.0);
    delta = std::min(delta, d);
  }
  if (delta <= 0.0) {
    throw Error("gap condition not met: a complementary eigenvalue lies inside the Ritz interval");
  }
  return delta;
}

// Relaxed gap: (1) the whole complementary spectrum on one side of the Ritz
// hull at a positive distance, or (2) every Ritz value at a positive
// distance outside the complementary hull.  The larger admissible delta
// wins.
double tan_gap(const PairData& pd, int* condition) {
  const std::vector<double> l2 = complementary_spectrum(pd);
  if (l2.empty()) throw Error("complementary spectrum empty");
  const double a = pd.ry.values.min();
  const double b = pd.ry.values.max();
  const auto [lo_it, hi_it] = std::minmax_element(l2.begin(), l2.end());
  const double lo = *lo_it;
  const double hi = *hi_it;

  double d1 = -1.0;
  if (lo > b) {
    d1 = lo - b;
  } else if (hi < a) {
    d1 = a - hi;
  }

  double d2 = std::numeric_limits<double>::infinity();
  for (Index j = 0; j < pd.ry.values.size(); ++j) {
    const double beta = pd.ry.values[j];
    const double d = beta > hi ? beta - hi : (beta < lo ? lo - beta : 0.0);
    d2 = std::min(d2, d);
  }
  if (d2 <= 0.0) d2 = -1.0;

  if (d1 <= 0.0 && d2 <= 0.0) {
    throw Error(
        "gap condition not met: complementary spectrum straddles the Ritz interval and a Ritz value "
        "meets the complementary interval");
  }
  if (d1 >= d2) {
    *condition = 1;
    return d1;
  }
  *condition = 2;
  return d2;
}

nlohmann::ordered_json vec_json(const RealVector& v) {
  auto arr = nlohmann::ordered_json::array();
  for (Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

}  // namespace

const char* bound_name(BoundId id) { return entry(id).name; }

bool is_conjectural(BoundId id) { return entry(id).conjectural; }

BoundId bound_from_name(const std::string& name) {
  for (const NameEntry& e : kNames) {
    if (name == e.name) return e.id;
  }
  throw Error("unknown bound id: " + name);
}

std::vector<BoundId> all_bound_ids() {
  std::vector<BoundId> ids;
  for (const NameEntry& e : kNames) ids.push_back(e.id);
  return ids;
}

std::string to_json(const BoundReport& r) {
  nlohmann::ordered_json j;
  j["bound_id"] = bound_name(r.id);
  j["n"] = r.n;
  j["p"] = r.p;
  j["lhs"] = vec_json(r.lhs.values());
  j["rhs"] = vec_json(r.rhs.values());
  j["margins"] = vec_json(r.verdict.margins);
  j["holds"] = r.verdict.holds;
  auto ctx = nlohmann::ordered_json::object();
  if (r.context.theta.size() > 0) ctx["theta"] = vec_json(r.context.theta);
  if (std::isfinite(r.context.c)) ctx["c"] = r.context.c;
  if (std::isfinite(r.context.delta)) ctx["delta"] = r.context.delta;
  if (std::isfinite(r.context.lambda_max)) ctx["lambda_max"] = r.context.lambda_max;
  if (std::isfinite(r.context.lambda_min)) ctx["lambda_min"] = r.context.lambda_min;
  if (!r.context.indices.empty()) {
    auto arr = nlohmann::ordered_json::array();
    for (Index i : r.context.indices) arr.push_back(i);
    ctx["indices"] = arr;
  }
  for (const auto& [name, value] : r.context.scalars) ctx[name] = value;
  for (const auto& [name, value] : r.context.vectors) ctx[name] = vec_json(value);
  j["context"] = ctx;
  return j.dump();
}

PairData make_pair_data(const HermitianMatrix& a, const Subspace& x, const Subspace& y,
                        const TolerancePolicy& tol) {
  if (x.ambient() != a.n() || y.ambient() != a.n()) throw Error("ambient dimension mismatch");
  if (x.dim() != y.dim()) throw Error("subspace dimensions differ");
  RitzData rx = ritz(a, x);
  RitzData ry = ritz(a, y);
  Subspace joined = join(x, y, tol);
  const RitzData rj = ritz(a, joined);
  RealVector s_rx = residual_singvals(rx).values();
  RealVector s_ry = residual_singvals(ry).values();
  RealVector s_py_rx = projected_singvals(y, rx.residual).values();
  RealVector s_px_ry = projected_singvals(x, ry.residual).values();
  RealVector s_pj_rx = projected_singvals(joined, rx.residual).values();
  RealVector s_pj_ry = projected_singvals(joined, ry.residual).values();
  const bool x_invariant = is_invariant(a, x, rx);
  const bool y_invariant = is_invariant(a, y, ry);
  return PairData{a.mat(),
                  x,
                  y,
                  std::move(joined),
                  std::move(rx),
                  std::move(ry),
                  principal_angles(x, y),
                  std::move(s_rx),
                  std::move(s_ry),
                  std::move(s_py_rx),
                  std::move(s_px_ry),
                  std::move(s_pj_rx),
                  std::move(s_pj_ry),
                  eigh(a).values.values(),
                  SpectrumExtremes{rj.values.max(), rj.values.min()},
                  x_invariant,
                  y_invariant,
                  tol};
}

DecreasingVector lhs_ritz_change(const PairData& pd) {
  const RealVector d = (pd.rx.values.values() - pd.ry.values.values()).cwiseAbs();
  return DecreasingVector(d);
}

DecreasingVector lhs_ritz_change(const HermitianMatrix& a, const Subspace& x, const Subspace& y) {
  if (x.dim() != y.dim()) throw Error("subspace dimensions differ");
  const RitzData rx = ritz(a, x);
  const RitzData ry = ritz(a, y);
  const RealVector d = (rx.values.values() - ry.values.values()).cwiseAbs();
  return DecreasingVector(d);
}

BoundReport eval_conjecture(const PairData& pd, ConjectureVariant variant) {
  require_acute(pd);
  const RealVector lhs = lhs_ritz_change(pd).values();
  BoundContext ctx;
  ctx.theta = pd.theta.radians();
  if (variant == ConjectureVariant::cos) {
    const RealVector u = pd.s_py_rx + pd.s_px_ry;
    const RealVector rhs = u.array() / pd.theta.cosines().array();
    return make_report(BoundId::conjecture_cos, pd.n(), pd.p(), lhs, rhs, std::move(ctx), pd.tol,
                       fp_slack(pd.p(), angle_amp(pd.theta), lhs.maxCoeff(), rhs.maxCoeff()));
  }
  const RealVector v = pd.s_pj_rx + pd.s_pj_ry;
  const RealVector rhs = v.array() * pd.theta.tangents(pd.tol).array();
  return make_report(BoundId::conjecture_tan, pd.n(), pd.p(), lhs, rhs, std::move(ctx), pd.tol,
                     fp_slack(pd.p(), angle_amp(pd.theta), lhs.maxCoeff(), rhs.maxCoeff()));
}

BoundReport eval_thm_mixed(const PairData& pd, MixedVariant variant) {
  require_acute(pd);
  const RealVector lhs = lhs_ritz_change(pd).values();
  const RealVector u = pd.s_py_rx + pd.s_px_ry;
  BoundContext ctx;
  ctx.theta = pd.theta.radians();
  const double amp = angle_amp(pd.theta);
  switch (variant) {
    case MixedVariant::cos: {
      const RealVector rhs = u / std::cos(pd.theta.max());
      return make_report(BoundId::thm_mixed_cos, pd.n(), pd.p(), lhs, rhs, std::move(ctx), pd.tol,
                         fp_slack(pd.p(), amp, lhs.maxCoeff(), rhs.maxCoeff()));
    }
    case MixedVariant::squared: {
      const RealVector lhs2 = lhs.array().square();
      const RealVector rhs = u.array().square() / pd.theta.cosines().array().square();
      return make_report(BoundId::thm_mixed_squared, pd.n(), pd.p(), lhs2, rhs, std::move(ctx), pd.tol,
                         fp_slack(pd.p(), amp * amp, lhs2.maxCoeff(), rhs.maxCoeff()));
    }
    case MixedVariant::scaled: {
      const double c = cos_ratio(pd.theta);
      ctx.c = c;
      const RealVector rhs = std::sqrt(c) * (u.array() / pd.theta.cosines().array());
      return make_report(BoundId::thm_mixed_scaled, pd.n(), pd.p(), lhs, rhs, std::move(ctx), pd.tol,
                         fp_slack(pd.p(), amp * amp, lhs.maxCoeff(), rhs.maxCoeff()));
    }
  }
  throw Error("unknown variant");
}

BoundReport eval_cor_tangent(const PairData& pd, TangentVariant variant) {
  require_acute(pd);
  const RealVector lhs = lhs_ritz_change(pd).values();
  const RealVector v = pd.s_pj_rx + pd.s_pj_ry;
  BoundContext ctx;
  ctx.theta = pd.theta.radians();
  const double amp = angle_amp(pd.theta);
  switch (variant) {
    case TangentVariant::cosmax: {
      const RealVector rhs = v.array() * pd.theta.sines().array() / std::cos(pd.theta.max());
      return make_report(BoundId::cor_tan_cosmax, pd.n(), pd.p(), lhs, rhs, std::move(ctx), pd.tol,
                         fp_slack(pd.p(), amp, lhs.maxCoeff(), rhs.maxCoeff()));
    }
    case TangentVariant::squared: {
      const RealVector lhs2 = lhs.array().square();
      const RealVector rhs = v.array().square() * pd.theta.tangents(pd.tol).array().square();
      return make_report(BoundId::cor_tan_squared, pd.n(), pd.p(), lhs2, rhs, std::move(ctx), pd.tol,
                         fp_slack(pd.p(), amp * amp, lhs2.maxCoeff(), rhs.maxCoeff()));
    }
    case TangentVariant::scaled: {
      const double c = cos_ratio(pd.theta);
      ctx.c = c;
      const RealVector rhs = std::sqrt(c) * (v.array() * pd.theta.tangents(pd.tol).array());
      return make_report(BoundId::cor_tan_scaled, pd.n(), pd.p(), lhs, rhs, std::move(ctx), pd.tol,
                         fp_slack(pd.p(), amp * amp, lhs.maxCoeff(), rhs.maxCoeff()));
    }
  }
  throw Error("unknown variant");
}

BoundReport eval_apriori(const PairData& pd, bool invariant_x) {
  const RealVector lhs = lhs_ritz_change(pd).values();
  const double spread = pd.extremes.lambda_max - pd.extremes.lambda_min;
  BoundContext ctx;
  ctx.theta = pd.theta.radians();
  ctx.lambda_max = pd.extremes.lambda_max;
  ctx.lambda_min = pd.extremes.lambda_min;
  if (!invariant_x) {
    const RealVector rhs = spread * pd.theta.sines();
    return make_report(BoundId::apriori_sin, pd.n(), pd.p(), lhs, rhs, std::move(ctx), pd.tol);
  }
  require_invariant_x(pd);
  const RealVector rhs = spread * pd.theta.sines().array().square().matrix();
  return make_report(BoundId::apriori_sin_squared, pd.n(), pd.p(), lhs, rhs, std::move(ctx), pd.tol);
}

BoundReport eval_sun91(const PairData& pd) {
  require_invariant_x(pd);
  require_acute(pd);
  const RealVector lhs = lhs_ritz_change(pd).values();
  const double tan_max = std::tan(pd.theta.max());
  const RealVector rhs = pd.s_ry * tan_max;
  BoundContext ctx;
  ctx.theta = pd.theta.radians();
  ctx.vectors.emplace_back("cor_tan_cosmax_rhs", eval_cor_tangent(pd, TangentVariant::cosmax).rhs.values());
  return make_report(BoundId::sun91, pd.n(), pd.p(), lhs, rhs, std::move(ctx), pd.tol,
                     fp_slack(pd.p(), angle_amp(pd.theta), lhs.maxCoeff(), rhs.maxCoeff()));
}

BoundReport eval_weyl_matching(const HermitianMatrix& a, const Subspace& y, Index exhaustive_cap,
                               const TolerancePolicy& tol) {
  if (y.ambient() != a.n()) throw Error("ambient dimension mismatch");
  const Index n = a.n();
  const Index p = y.dim();
  const RitzData ry = ritz(a, y);
  const RealVector s = residual_singvals(ry).values();
  RealVector middle(p);
  RealVector doubled(p);
  for (Index i = 0; i < p; ++i) {
    middle(i) = s(i / 2);
    doubled(i) = 2.0 * s(i);
  }
  const RealVector eigs = eigh(a).values.values();

  std::vector<Index> best;
  RealVector best_lhs;
  double best_worst = -std::numeric_limits<double>::infinity();
  const auto consider = [&](const std::vector<Index>& idx) {
    RealVector l(p);
    for (Index j = 0; j < p; ++j) l(j) = std::abs(eigs(idx[static_cast<std::size_t>(j)]) - ry.values[j]);
    l = sorted_desc(l);
    const double worst = prefix_margins(l, middle).minCoeff();
    if (worst > best_worst) {
      best_worst = worst;
      best = idx;
      best_lhs = l;
    }
  };

  bool heuristic = false;
  if (n <= exhaustive_cap) {
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
      if (std::popcount(mask) != static_cast<int>(p)) continue;
      std::vector<Index> idx;
      for (Index b = 0; b < n; ++b) {
        if (mask & (std::uint32_t{1} << b)) idx.push_back(b);
      }
      consider(idx);
    }
  } else {
    heuristic = true;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::vector<Index> idx;
    for (Index j = 0; j < p; ++j) {
      Index pick = -1;
      double best_dist = std::numeric_limits<double>::infinity();
      for (Index i = 0; i < n; ++i) {
        if (used[static_cast<std::size_t>(i)]) continue;
        const double d = std::abs(eigs(i) - ry.values[j]);
        if (d < best_dist) {
          best_dist = d;
          pick = i;
        }
      }
      used[static_cast<std::size_t>(pick)] = 1;
      idx.push_back(pick);
    }
    std::sort(idx.begin(), idx.end());
    consider(idx);
  }

  BoundContext ctx;
  for (Index i : best) ctx.indices.push_back(i + 1);
  const MajorizationResult dbl =
      weak_majorize(best_lhs, doubled, default_check_tol(best_lhs, doubled, tol));
  ctx.scalars.emplace_back("doubled_holds", dbl.holds ? 1.0 : 0.0);
  ctx.scalars.emplace_back("doubled_worst_margin", dbl.margins.minCoeff());
  if (heuristic) ctx.scalars.emplace_back("heuristic", 1.0);
  ctx.vectors.emplace_back("doubled_rhs", doubled);
  return make_report(BoundId::weyl_matching, n, p, best_lhs, middle, std::move(ctx), tol);
}

BoundReport eval_davis_kahan(const PairData& pd, DkVariant variant, double delta_override,
                             bool record_projected) {
  require_invariant_x(pd);
  BoundContext ctx;
  ctx.theta = pd.theta.radians();
  int condition = 0;
  double delta = delta_override;
  if (delta > 0.0) {
    ctx.scalars.emplace_back("delta_override", 1.0);
  } else {
    delta = variant == DkVariant::sin ? sin_gap(pd) : tan_gap(pd, &condition);
  }
  ctx.delta = delta;
  if (condition > 0) ctx.scalars.emplace_back("gap_condition", static_cast<double>(condition));
  const RealVector rhs = pd.s_ry / delta;
  const double gap_amp = spectral_scale(pd) / delta;
  if (variant == DkVariant::sin) {
    const RealVector lhs = pd.theta.sines();
    return make_report(BoundId::davis_kahan_sin, pd.n(), pd.p(), lhs, rhs, std::move(ctx), pd.tol,
                       fp_slack(pd.p(), gap_amp, lhs.maxCoeff(), rhs.maxCoeff()));
  }
  if (record_projected) ctx.vectors.emplace_back("projected_rhs", pd.s_pj_ry / delta);
  const RealVector lhs = pd.theta.tangents(pd.tol);
  return make_report(BoundId::davis_kahan_tan, pd.n(), pd.p(), lhs, rhs, std::move(ctx), pd.tol,
                     fp_slack(pd.p(), gap_amp + angle_amp(pd.theta), lhs.maxCoeff(), rhs.maxCoeff()));
}

BoundReport eval_quadratic_aposteriori(const PairData& pd, QuadVariant variant, double delta_override) {
  require_invariant_x(pd);
  require_acute(pd);
  const RealVector lhs = lhs_ritz_change(pd).values();
  BoundContext ctx;
  ctx.theta = pd.theta.radians();
  int condition = 0;
  double delta = delta_override;
  if (delta > 0.0) {
    ctx.scalars.emplace_back("delta_override", 1.0);
  } else {
    delta = variant == QuadVariant::sin ? sin_gap(pd) : tan_gap(pd, &condition);
  }
  ctx.delta = delta;
  if (condition > 0) ctx.scalars.emplace_back("gap_condition", static_cast<double>(condition));
  const double gap_amp = spectral_scale(pd) / delta;
  if (variant == QuadVariant::sin) {
    const double denom = std::cos(pd.theta.max()) * delta;
    const RealVector rhs = (pd.s_pj_ry.array() * pd.s_ry.array() / denom).matrix();
    ctx.vectors.emplace_back("loose_rhs", (pd.s_ry.array().square() / denom).matrix());
    return make_report(BoundId::quad_apost_sin, pd.n(), pd.p(), lhs, rhs, std::move(ctx), pd.tol,
                       fp_slack(pd.p(), gap_amp + angle_amp(pd.theta), lhs.maxCoeff(), rhs.maxCoeff()));
  }
  const RealVector lhs2 = lhs.array().square();
  const double d2 = delta * delta;
  const RealVector rhs =
      (pd.s_pj_ry.array().square() * pd.s_ry.array().square() / d2).matrix();
  ctx.vectors.emplace_back("loose_rhs", (pd.s_ry.array().pow(4) / d2).matrix());
  return make_report(BoundId::quad_apost_tan, pd.n(), pd.p(), lhs2, rhs, std::move(ctx), pd.tol,
                     fp_slack(pd.p(), 2.0 * gap_amp, lhs2.maxCoeff(), rhs.maxCoeff()));
}

BoundReport eval_block_discard(const HermitianMatrix& a, Index k, const std::vector<Index>& eig_indices,
                               const TolerancePolicy& tol) {
  const Index n = a.n();
  if (k < 1 || k > n) throw Error("k out of range");
  if (static_cast<Index>(eig_indices.size()) != k) throw Error("index count differs from k");
  std::vector<Index> idx = eig_indices;
  std::sort(idx.begin(), idx.end());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 1 || idx[i] > n) throw Error("eigenvalue index out of range");
    if (i > 0 && idx[i] == idx[i - 1]) throw Error("duplicate eigenvalue index");
  }

  const EighResult ea = eigh(a);
  Matrix xb(n, k);
  for (Index j = 0; j < k; ++j) xb.col(j) = ea.vectors.col(idx[static_cast<std::size_t>(j)] - 1);
  const Subspace x = Subspace::from_orthonormal(xb, tol);
  const Subspace y = Subspace::from_orthonormal(Matrix::Identity(n, n).leftCols(k), tol);

  const RitzData rx = ritz(a, x);
  const DecreasingVector a11_eigs = eigh(HermitianMatrix(a.mat().topLeftCorner(k, k), tol)).values;
  const RealVector lhs = (rx.values.values() - a11_eigs.values()).cwiseAbs();

  const Matrix x1 = xb.topRows(k);
  const Matrix x2 = xb.bottomRows(n - k);
  const DecreasingVector sx1 = svd_decreasing(x1);
  if (sx1.min() <= rank_cutoff(tol, k, k) * sx1.max()) {
    throw Error("top block of the eigenvector matrix is singular; the general tangent case is not covered");
  }
  const Matrix t = x2 * x1.inverse();
  const RealVector s_t = pad_zeros(svd_decreasing(t).values(), k);
  const RealVector s_a12 = pad_zeros(svd_decreasing(a.mat().topRightCorner(k, n - k)).values(), k);
  const RealVector rhs = (s_a12.array() * s_t.array()).matrix();

  const AngleVector theta = principal_angles(x, y);
  BoundContext ctx;
  ctx.theta = theta.radians();
  ctx.indices = idx;
  const double c = cos_ratio(theta);
  ctx.c = c;
  const RealVector scaled = std::sqrt(c) * rhs;
  const DecreasingVector lhs_desc(lhs);
  const DecreasingVector scaled_desc(scaled);
  const double kappa1 = sx1.max() / sx1.min();  // conditioning of the X_1 inversion
  const double slack = fp_slack(k, kappa1 * kappa1, lhs_desc.max(), scaled_desc.max());
  const MajorizationResult sv =
      weak_majorize(lhs_desc.values(), scaled_desc.values(),
                    default_check_tol(lhs_desc.values(), scaled_desc.values(), tol) + slack);
  ctx.scalars.emplace_back("scaled_holds", sv.holds ? 1.0 : 0.0);
  ctx.scalars.emplace_back("scaled_worst_margin", sv.margins.minCoeff());
  ctx.vectors.emplace_back("scaled_rhs", scaled_desc.values());
  return make_report(BoundId::block_discard, n, k, lhs, rhs, std::move(ctx), tol,
                     fp_slack(k, kappa1 * kappa1, lhs_desc.max(), rhs.maxCoeff()));
}

}  // namespace ritz
