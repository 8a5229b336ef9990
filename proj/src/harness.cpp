#include "ritz/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"

#include "ritz/majorization.hpp"
#include "ritz/matrix_io.hpp"
#include "ritz/numeric.hpp"

namespace ritz {
namespace {

using nlohmann::ordered_json;

constexpr double kPi = 3.14159265358979323846;
constexpr double kPerpSkip = kPi / 2.0 - 1e-8;

const char* kind_label(MatrixKind kind) { return kind == MatrixKind::real ? "real" : "complex"; }

double worst_of(const MajorizationResult& v) {
  return v.margins.size() == 0 ? 0.0 : v.margins.minCoeff();
}

// Gaussian rows x cols block, entries N(0,1) (complex: parts N(0,1/2)).
Matrix gen_gaussian(Rng& rng, Index rows, Index cols, MatrixKind kind) {
  Matrix m(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) {
      m(i, j) = kind == MatrixKind::real ? Complex(rng.normal(), 0.0) : rng.normal_complex();
    }
  }
  return m;
}

Matrix gen_invertible(Rng& rng, Index n, MatrixKind kind, double cond_cap = 1e6) {
  for (int attempt = 0; attempt < 32; ++attempt) {
    Matrix t = gen_gaussian(rng, n, n, kind);
    RealVector s = svd_decreasing(t).values();
    if (s(n - 1) > 0.0 && s(0) / s(n - 1) <= cond_cap) return t;
  }
  throw Error("random matrix stayed ill conditioned");
}

HermitianMatrix gen_pd(Rng& rng, Index n, MatrixKind kind) {
  Matrix c = gen_gaussian(rng, n, n, kind);
  Matrix t = c.adjoint() * c + 0.1 * Matrix::Identity(n, n);
  return HermitianMatrix::symmetrized(t);
}

RealVector abs_desc(const RealVector& a, const RealVector& b) {
  RealVector d = (a - b).cwiseAbs();
  return sorted_desc(d);
}

RealVector pow_vec(const RealVector& v, double t) {
  RealVector out(v.size());
  for (Index i = 0; i < v.size(); ++i) out(i) = std::pow(v(i), t);
  return out;
}

// Index-wise product of decreasing nonnegative vectors, zero-padded to the
// longer length.
RealVector prod_padded(const RealVector& a, const RealVector& b) {
  Index m = std::max(a.size(), b.size());
  RealVector pa = pad_zeros(a, m);
  RealVector pb = pad_zeros(b, m);
  return pa.cwiseProduct(pb);
}

}  // namespace

void validate_config(const ExperimentConfig& cfg) {
  if (cfg.trials < 1) throw Error("trials ≥ 1");
  if (cfg.trials_per_eps < 1) throw Error("trials_per_eps ≥ 1");
  if (!(cfg.eps.min < cfg.eps.max) || cfg.eps.points < 2 || cfg.eps.min <= 0.0)
    throw Error("grid degenerate");
  if (cfg.n_min < 2 || cfg.n_max > 64 || cfg.n_min > cfg.n_max)
    throw Error("n range outside [2, 64]");
  if (!(cfg.p_fraction > 0.0) || cfg.p_fraction > 1.0) throw Error("p fraction outside (0, 1]");
}

std::string to_jsonl(const TrialRecord& rec) {
  ordered_json j;
  j["trial"] = rec.trial_id;
  j["n"] = rec.n;
  j["p"] = rec.p;
  j["kind"] = kind_label(rec.kind);
  j["x_invariant"] = rec.x_invariant;
  j["skipped"] = rec.skipped;
  j["worst_margin"] = rec.worst_margin;
  ordered_json bounds = ordered_json::array();
  for (const BoundReport& r : rec.reports) {
    ordered_json b;
    b["bound"] = bound_name(r.id);
    b["holds"] = r.verdict.holds;
    b["margin"] = worst_of(r.verdict);
    bounds.push_back(std::move(b));
  }
  for (const auto& [name, verdict] : rec.extra_checks) {
    ordered_json b;
    b["bound"] = name;
    b["holds"] = verdict.holds;
    b["margin"] = worst_of(verdict);
    bounds.push_back(std::move(b));
  }
  j["bounds"] = std::move(bounds);
  return j.dump();
}

namespace {

struct FuzzState {
  const ExperimentConfig& cfg;
  const std::string& artifact_dir;
  FuzzSummary summary;

  void note_margin(const std::string& name, const MajorizationResult& v) {
    double m = worst_of(v);
    for (auto& [key, value] : summary.worst_margin_by_bound) {
      if (key == name) {
        value = std::min(value, m);
        return;
      }
    }
    summary.worst_margin_by_bound.emplace_back(name, m);
  }

  // Returns false when a proven bound failed and the run must stop.
  bool take_proven(TrialRecord& rec, BoundReport report) {
    note_margin(bound_name(report.id), report.verdict);
    ++summary.bounds_evaluated;
    if (!report.verdict.holds) {
      summary.proven_violation = true;
      summary.violation_trial = rec.trial_id;
      summary.violation_bound = bound_name(report.id);
      summary.violation_margin = worst_of(report.verdict);
    }
    rec.worst_margin = std::min(rec.worst_margin, worst_of(report.verdict));
    rec.reports.push_back(std::move(report));
    return !summary.proven_violation;
  }

  bool take_check(TrialRecord& rec, const std::string& name, MajorizationResult verdict) {
    note_margin(name, verdict);
    ++summary.bounds_evaluated;
    if (!verdict.holds) {
      summary.proven_violation = true;
      summary.violation_trial = rec.trial_id;
      summary.violation_bound = name;
      summary.violation_margin = worst_of(verdict);
    }
    rec.worst_margin = std::min(rec.worst_margin, worst_of(verdict));
    rec.extra_checks.emplace_back(name, std::move(verdict));
    return !summary.proven_violation;
  }

  void take_conjecture(TrialRecord& rec, const PairData& pd, BoundReport report) {
    note_margin(bound_name(report.id), report.verdict);
    ++summary.bounds_evaluated;
    rec.worst_margin = std::min(rec.worst_margin, worst_of(report.verdict));
    if (!report.verdict.holds) {
      std::string dir =
          artifact_dir + "/trial_" + std::to_string(rec.trial_id) + "_" + bound_name(report.id);
      std::filesystem::create_directories(dir);
      write_matrix(dir + "/A.mat", pd.a, MatrixKind::cplx);
      write_matrix(dir + "/X.mat", pd.x.basis(), MatrixKind::cplx);
      write_matrix(dir + "/Y.mat", pd.y.basis(), MatrixKind::cplx);
      ordered_json meta;
      meta["trial"] = rec.trial_id;
      meta["seed"] = cfg.seed;
      meta["kind"] = kind_label(rec.kind);
      meta["x_invariant"] = rec.x_invariant;
      meta["report"] = ordered_json::parse(to_json(report));
      std::ofstream out(dir + "/report.json");
      out << meta.dump(2) << '\n';
      if (!out) throw Error("cannot write " + dir + "/report.json");
      ++summary.counterexamples;
      summary.counterexample_paths.push_back(dir);
    }
    rec.reports.push_back(std::move(report));
  }

  // Gap-conditioned bounds; evaluated only where the precondition holds.
  bool gap_bounds(TrialRecord& rec, const PairData& pd) {
    const std::vector<std::function<BoundReport()>> attempts = {
        [&] { return eval_davis_kahan(pd, DkVariant::sin); },
        [&] { return eval_davis_kahan(pd, DkVariant::tan); },
        [&] { return eval_quadratic_aposteriori(pd, QuadVariant::sin); },
        [&] { return eval_quadratic_aposteriori(pd, QuadVariant::tan); },
    };
    for (const auto& attempt : attempts) {
      ++summary.gap_attempts;
      try {
        BoundReport report = attempt();
        ++summary.gap_evaluated;
        if (!take_proven(rec, std::move(report))) return false;
      } catch (const Error& e) {
        if (std::string(e.what()).find("gap condition not met") == std::string::npos) throw;
      }
    }
    return true;
  }
};

}  // namespace

FuzzSummary run_fuzz(const ExperimentConfig& cfg, FuzzCheck which, std::ostream* records,
                     const std::string& artifact_dir) {
  validate_config(cfg);
  FuzzState st{cfg, artifact_dir, {}};
  st.summary.trials_requested = cfg.trials;
  const bool proven = which != FuzzCheck::conjecture;
  const bool conjecture = which != FuzzCheck::theorems;

  for (Index t = 0; t < cfg.trials; ++t) {
    auto started = std::chrono::steady_clock::now();
    Rng rng = Rng::for_trial(cfg.seed, static_cast<std::uint64_t>(t));
    MatrixKind kind = (t & 1) ? MatrixKind::cplx : MatrixKind::real;
    bool want_invariant = (t & 2) != 0;
    Index n = cfg.n_min + static_cast<Index>(rng.below(cfg.n_max - cfg.n_min + 1));
    Index p_max = std::max<Index>(1, static_cast<Index>(n * cfg.p_fraction));
    Index p = 1 + static_cast<Index>(rng.below(p_max));

    HermitianMatrix a = gen_hermitian(rng, n, kind);
    Subspace x = want_invariant ? gen_invariant_subspace(rng, a, p) : gen_subspace(rng, n, p, kind);
    Subspace y = gen_subspace(rng, n, p, kind);
    PairData pd = make_pair_data(a, x, y);

    TrialRecord rec;
    rec.trial_id = static_cast<std::uint64_t>(t);
    rec.n = n;
    rec.p = p;
    rec.kind = kind;
    rec.x_invariant = pd.x_invariant;

    bool keep_going = true;
    if (pd.theta.max() >= kPerpSkip) {
      rec.skipped = true;
      ++st.summary.trials_skipped;
    } else {
      ++st.summary.trials_run;
      if (proven) {
        keep_going = keep_going && st.take_proven(rec, eval_thm_mixed(pd, MixedVariant::cos));
        keep_going = keep_going && st.take_proven(rec, eval_thm_mixed(pd, MixedVariant::squared));
        keep_going = keep_going && st.take_proven(rec, eval_thm_mixed(pd, MixedVariant::scaled));
        keep_going = keep_going && st.take_proven(rec, eval_cor_tangent(pd, TangentVariant::cosmax));
        keep_going =
            keep_going && st.take_proven(rec, eval_cor_tangent(pd, TangentVariant::squared));
        keep_going = keep_going && st.take_proven(rec, eval_cor_tangent(pd, TangentVariant::scaled));
        keep_going = keep_going && st.take_proven(rec, eval_apriori(pd, false));
        if (keep_going) {
          RealVector sines = pd.theta.sines();
          keep_going = st.take_check(
              rec, "residual_projection_y",
              weak_majorize(pd.s_px_ry, RealVector(pd.s_pj_ry.cwiseProduct(sines))));
          keep_going = keep_going &&
                       st.take_check(rec, "residual_projection_x",
                                     weak_majorize(pd.s_py_rx,
                                                   RealVector(pd.s_pj_rx.cwiseProduct(sines))));
        }
        if (keep_going && pd.x_invariant) {
          keep_going = st.take_proven(rec, eval_apriori(pd, true));
          keep_going = keep_going && st.take_proven(rec, eval_sun91(pd));
          keep_going = keep_going && st.gap_bounds(rec, pd);
        }
        if (keep_going && n <= 12) {
          keep_going = st.take_proven(rec, eval_weyl_matching(a, y, 12, pd.tol));
        }
        // Near-invariant probe: Y close to an invariant span of a contiguous
        // eigenvalue block, so the gap preconditions frequently hold.
        if (keep_going) {
          Index start = static_cast<Index>(rng.below(n - p + 1));
          EighResult ed = eigh(a);
          Subspace x_dk = Subspace::from_orthonormal(ed.vectors.middleCols(start, p));
          double mix = 0.02 + 0.08 * rng.uniform();
          Matrix near_basis = x_dk.basis() + mix * gen_gaussian(rng, n, p, kind);
          Subspace y_near = orthonormalize(near_basis);
          if (y_near.dim() == p) {
            PairData pd_near = make_pair_data(a, x_dk, y_near);
            if (pd_near.theta.max() < kPerpSkip && pd_near.x_invariant) {
              keep_going = st.gap_bounds(rec, pd_near);
            }
          }
        }
      }
      if (keep_going && conjecture) {
        st.take_conjecture(rec, pd, eval_conjecture(pd, ConjectureVariant::cos));
        st.take_conjecture(rec, pd, eval_conjecture(pd, ConjectureVariant::tan));
      }
    }

    rec.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    if (records) *records << to_jsonl(rec) << '\n';
    if (!keep_going) break;
  }
  return st.summary;
}

Figure1Result run_figure1(const ExperimentConfig& cfg) {
  validate_config(cfg);

  struct Repetition {
    HermitianMatrix f_bar;
    HermitianMatrix g_bar;
    HermitianMatrix e_f;
    HermitianMatrix e_g;
  };

  auto unit_direction = [&](Rng& rng) {
    for (int attempt = 0; attempt < 32; ++attempt) {
      HermitianMatrix e = gen_hermitian(rng, 2, cfg.scalar_kind);
      double norm = spectral_norm(e.mat());
      if (norm > 1e-12) return HermitianMatrix::symmetrized(e.mat() / norm);
    }
    throw Error("degenerate perturbation direction");
  };

  // One set of draws per repetition, reused at every eps: each repetition is
  // the path F = F_bar + eps E_F, G = G_bar + eps E_G along the grid.
  std::vector<Repetition> reps;
  reps.reserve(static_cast<std::size_t>(cfg.trials_per_eps));
  for (Index r = 0; r < cfg.trials_per_eps; ++r) {
    Rng rng = Rng::for_trial(cfg.seed, static_cast<std::uint64_t>(r));
    double phi = rng.uniform(0.1, kPi / 2.0 - 0.1);
    Eigen::Vector2d u(1.0, 0.0);
    Eigen::Vector2d v(std::cos(phi), std::sin(phi));
    Matrix f_bar = (u * u.transpose()).cast<Complex>();
    Matrix g_bar = (v * v.transpose()).cast<Complex>();
    reps.push_back({HermitianMatrix::symmetrized(f_bar), HermitianMatrix::symmetrized(g_bar),
                    unit_direction(rng), unit_direction(rng)});
  }

  Figure1Result result;
  result.rows.reserve(static_cast<std::size_t>(cfg.eps.points));
  for (Index k = 0; k < cfg.eps.points; ++k) {
    double frac = static_cast<double>(k) / static_cast<double>(cfg.eps.points - 1);
    double eps = cfg.eps.min * std::pow(cfg.eps.max / cfg.eps.min, frac);
    SweepRow row;
    row.eps = eps;
    for (const Repetition& rep : reps) {
      HermitianMatrix f = HermitianMatrix::symmetrized(rep.f_bar.mat() + eps * rep.e_f.mat());
      HermitianMatrix g = HermitianMatrix::symmetrized(rep.g_bar.mat() + eps * rep.e_g.mat());
      BoundReport mixed = eval_additive_bound(f, g);
      BoundReport weyl = eval_weyl_additive(f, g);
      row.max_lhs = std::max(row.max_lhs, mixed.lhs.max());
      row.max_mixed_rhs = std::max(row.max_mixed_rhs, mixed.rhs.max());
      row.max_weyl_rhs = std::max(row.max_weyl_rhs, weyl.rhs.max());
    }
    result.rows.push_back(row);
  }

  std::vector<double> eps_col, lhs_col, mixed_col, weyl_col;
  for (const SweepRow& row : result.rows) {
    eps_col.push_back(row.eps);
    lhs_col.push_back(row.max_lhs);
    mixed_col.push_back(row.max_mixed_rhs);
    weyl_col.push_back(row.max_weyl_rhs);
  }
  result.slope_lhs = fit_loglog_slope(eps_col, lhs_col, result.window_min, result.window_max);
  result.slope_mixed = fit_loglog_slope(eps_col, mixed_col, result.window_min, result.window_max);
  result.slope_weyl = fit_loglog_slope(eps_col, weyl_col, result.window_min, result.window_max);
  return result;
}

void write_figure1_csv(const Figure1Result& result, std::ostream& out) {
  out << "eps,max_lhs,max_mixed_rhs,max_weyl_rhs\n";
  for (const SweepRow& row : result.rows) {
    out << format_double(row.eps) << ',' << format_double(row.max_lhs) << ','
        << format_double(row.max_mixed_rhs) << ',' << format_double(row.max_weyl_rhs) << '\n';
  }
}

double fit_loglog_slope(const std::vector<double>& eps, const std::vector<double>& values,
                        double window_min, double window_max) {
  if (eps.size() != values.size()) throw Error("eps and value lengths differ");
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (eps[i] < window_min * (1.0 - 1e-9) || eps[i] > window_max * (1.0 + 1e-9)) continue;
    if (!(values[i] > 0.0)) throw Error("nonpositive values in window");
    lx.push_back(std::log(eps[i]));
    ly.push_back(std::log(values[i]));
  }
  if (lx.size() < 3) throw Error("fewer than 3 usable points");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= static_cast<double>(lx.size());
  my /= static_cast<double>(lx.size());
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  return sxy / sxx;
}

namespace {

struct SuiteState {
  const ExperimentConfig& cfg;
  std::vector<AppendixRow> rows;

  // Runs one property on `trials` substreamed instances.  check returns the
  // worst margin; negative beyond the shared tolerance counts as a failure.
  void property(const std::string& name, Index trials,
                const std::function<MajorizationResult(Rng&, Index, MatrixKind)>& check) {
    AppendixRow row;
    row.name = name;
    row.trials = trials;
    row.worst_margin = std::numeric_limits<double>::infinity();
    std::uint64_t row_id = static_cast<std::uint64_t>(rows.size()) << 32;
    for (Index i = 0; i < trials; ++i) {
      Rng rng = Rng::for_trial(cfg.seed, row_id | static_cast<std::uint64_t>(i));
      Index n = cfg.n_min + static_cast<Index>(rng.below(cfg.n_max - cfg.n_min + 1));
      MatrixKind kind = (i & 1) ? MatrixKind::cplx : MatrixKind::real;
      MajorizationResult verdict = check(rng, n, kind);
      if (!verdict.holds) ++row.failures;
      row.worst_margin = std::min(row.worst_margin, worst_of(verdict));
    }
    rows.push_back(std::move(row));
  }
};

MajorizationResult equality_check(const RealVector& a, const RealVector& b, double tol) {
  Index m = std::max(a.size(), b.size());
  RealVector diff = pad_zeros(a, m) - pad_zeros(b, m);
  MajorizationResult r;
  r.tol = tol;
  r.margins = RealVector::Constant(m, tol);
  r.margins -= diff.cwiseAbs();
  r.holds = r.margins.minCoeff() >= 0.0;
  if (!r.holds) r.margins.minCoeff(&r.worst_index);
  return r;
}

}  // namespace

std::vector<AppendixRow> run_appendix_suite(const ExperimentConfig& cfg) {
  validate_config(cfg);
  SuiteState st{cfg, {}};
  const Index trials = cfg.trials;

  st.property("sum_fan", trials, [](Rng& rng, Index n, MatrixKind kind) {
    Matrix a = gen_gaussian(rng, n, n, kind);
    Matrix b = gen_gaussian(rng, n, n, kind);
    RealVector rhs = svd_decreasing(a).values() + svd_decreasing(b).values();
    return weak_majorize(svd_decreasing(a + b).values(), rhs);
  });

  st.property("product", trials, [](Rng& rng, Index n, MatrixKind kind) {
    Index m = n, k = n, q = n;
    if (rng.below(2) == 1) {  // rectangular shapes, zero-padded comparisons
      m = 1 + static_cast<Index>(rng.below(n));
      k = 1 + static_cast<Index>(rng.below(n));
      q = 1 + static_cast<Index>(rng.below(n));
    }
    Matrix a = gen_gaussian(rng, m, k, kind);
    Matrix b = gen_gaussian(rng, k, q, kind);
    RealVector s_ab = svd_decreasing(a * b).values();
    RealVector s_a = svd_decreasing(a).values();
    RealVector s_b = svd_decreasing(b).values();
    MajorizationResult worst = weak_majorize(s_ab, RealVector(s_a(0) * s_b));
    for (const MajorizationResult& v :
         {weak_majorize(s_ab, RealVector(s_b(0) * s_a)), weak_majorize(s_ab, prod_padded(s_a, s_b))}) {
      if (worst_of(v) < worst_of(worst)) worst = v;
    }
    return worst;
  });

  st.property("weyl_difference", trials, [](Rng& rng, Index n, MatrixKind kind) {
    HermitianMatrix f = gen_hermitian(rng, n, kind);
    HermitianMatrix g = gen_hermitian(rng, n, kind);
    RealVector lhs = abs_desc(eigh(f).values.values(), eigh(g).values.values());
    return weak_majorize(lhs, svd_decreasing(f.mat() - g.mat()).values());
  });

  st.property("condition_number", trials, [](Rng& rng, Index n, MatrixKind kind) {
    Matrix j = gen_invertible(rng, n, kind);
    Matrix t = gen_invertible(rng, n, kind);
    RealVector d1(n), d2(n);
    for (Index i = 0; i < n; ++i) d1(i) = rng.normal();
    for (Index i = 0; i < n; ++i) d2(i) = rng.normal();
    Matrix a = j * d1.cast<Complex>().asDiagonal() * j.inverse();
    Matrix b = t * d2.cast<Complex>().asDiagonal() * t.inverse();
    RealVector sj = svd_decreasing(j).values();
    RealVector stv = svd_decreasing(t).values();
    double kappa = std::sqrt((sj(0) / sj(n - 1)) * (stv(0) / stv(n - 1)));
    RealVector lhs = abs_desc(sorted_desc(d1), sorted_desc(d2));
    return weak_majorize(lhs, RealVector(kappa * svd_decreasing(a - b).values()));
  });

  st.property("normal_product", trials, [](Rng& rng, Index n, MatrixKind kind) {
    Subspace v = gen_subspace(rng, n, n, kind);  // random unitary
    RealVector d1(n), d2(n);
    for (Index i = 0; i < n; ++i) d1(i) = std::abs(rng.normal());
    for (Index i = 0; i < n; ++i) d2(i) = std::abs(rng.normal());
    Matrix a = v.basis() * d1.cast<Complex>().asDiagonal() * v.basis().adjoint();
    Matrix b = v.basis() * d2.cast<Complex>().asDiagonal() * v.basis().adjoint();
    RealVector lhs = pow_vec(svd_decreasing(a * b).values(), 0.5);
    return weak_majorize(lhs, pow_vec(svd_decreasing(b * a).values(), 0.5));
  });

  auto power_check = [](double t) {
    return [t](Rng& rng, Index n, MatrixKind kind) {
      Matrix a = gen_gaussian(rng, n, n, kind);
      Matrix b = gen_gaussian(rng, n, n, kind);
      RealVector lhs = pow_vec(svd_decreasing(a * b).values(), t);
      RealVector rhs =
          pow_vec(svd_decreasing(a).values(), t).cwiseProduct(pow_vec(svd_decreasing(b).values(), t));
      return weak_majorize(lhs, rhs);
    };
  };
  st.property("power_half", trials, power_check(0.5));
  st.property("power_two", trials, power_check(2.0));

  st.property("sqrt_lemma", trials, [](Rng& rng, Index n, MatrixKind kind) {
    Matrix a = gen_gaussian(rng, n, n, kind);
    Matrix b = gen_gaussian(rng, n, n, kind);
    Matrix t = a * b;
    // |T| = (T^H T)^(1/2) built explicitly, then its root; S(|T|^(1/2)) must
    // also agree with S(T)^(1/2).
    HermitianMatrix abs_t = psd_sqrt(HermitianMatrix::symmetrized(t.adjoint() * t));
    RealVector lhs = svd_decreasing(psd_sqrt(abs_t).mat()).values();
    RealVector direct = pow_vec(svd_decreasing(t).values(), 0.5);
    double scale = std::max(1.0, direct(0));
    MajorizationResult identity = equality_check(lhs, direct, 1e-8 * scale);
    RealVector rhs = pow_vec(svd_decreasing(a).values(), 0.5)
                         .cwiseProduct(pow_vec(svd_decreasing(b).values(), 0.5));
    MajorizationResult bound = weak_majorize(lhs, rhs);
    return worst_of(identity) < worst_of(bound) ? identity : bound;
  });

  st.property("real_product", trials, [](Rng& rng, Index n, MatrixKind kind) {
    HermitianMatrix h1 = gen_hermitian(rng, n, kind);
    HermitianMatrix h2 = gen_hermitian(rng, n, kind);
    Matrix ab = h1.mat() * h2.mat() * h1.mat();  // A = H1, B = H2 H1
    Matrix ba = h2.mat() * h1.mat() * h1.mat();
    Matrix re_ba = 0.5 * (ba + ba.adjoint());
    return weak_majorize(svd_decreasing(ab).values(), svd_decreasing(re_ba).values());
  });

  st.property("real_lemma", trials, [](Rng& rng, Index n, MatrixKind kind) {
    Matrix a = gen_gaussian(rng, n, n, kind);
    Matrix re_a = 0.5 * (a + a.adjoint());
    return weak_majorize(svd_decreasing(re_a).values(), svd_decreasing(a).values());
  });

  st.property("pd_commutator", trials, [](Rng& rng, Index n, MatrixKind kind) {
    HermitianMatrix a = gen_hermitian(rng, n, kind);
    HermitianMatrix b = gen_hermitian(rng, n, kind);
    HermitianMatrix t = gen_pd(rng, n, kind);
    double smin = svd_decreasing(t.mat()).min();
    RealVector lhs = smin * svd_decreasing(a.mat() - b.mat()).values();
    return weak_majorize(lhs, svd_decreasing(a.mat() * t.mat() - t.mat() * b.mat()).values());
  });

  auto commutator_parts = [](Rng& rng, Index n, MatrixKind kind, bool pd_t) {
    HermitianMatrix a = gen_hermitian(rng, n, kind);
    HermitianMatrix b = gen_hermitian(rng, n, kind);
    Matrix t = pd_t ? gen_pd(rng, n, kind).mat() : gen_invertible(rng, n, kind);
    Matrix ti = t.inverse();
    struct Parts {
      HermitianMatrix a, b;
      RealVector s_diff, s_right, s_left, s_ti;
    } parts{a,
            b,
            svd_decreasing(a.mat() - b.mat()).values(),
            svd_decreasing(a.mat() * t - t * b.mat()).values(),
            svd_decreasing(ti * a.mat() - b.mat() * ti).values(),
            svd_decreasing(ti).values()};
    return parts;
  };

  st.property("commutator", trials, [&](Rng& rng, Index n, MatrixKind kind) {
    auto parts = commutator_parts(rng, n, kind, true);
    RealVector lhs = parts.s_diff.cwiseProduct(parts.s_diff);
    return weak_majorize(lhs, parts.s_right.cwiseProduct(parts.s_left));
  });

  st.property("commutator_remark", std::min<Index>(trials, 100),
              [&](Rng& rng, Index n, MatrixKind kind) {
                auto parts = commutator_parts(rng, n, kind, true);
                // Index-wise reading: prefix sums of s_i^2(A-B) against prefix
                // sums of s_i(AT-TB) s_i(T^-1 A - B T^-1) ...
                MajorizationResult indexwise =
                    weak_majorize(RealVector(parts.s_diff.cwiseProduct(parts.s_diff)),
                                  RealVector(parts.s_right.cwiseProduct(parts.s_left)));
                // ... versus the product-of-prefix-sums reading; genuinely
                // different expressions, both must hold.
                double pl = 0.0, pr = 0.0, pq = 0.0;
                double worst = std::numeric_limits<double>::infinity();
                bool distinct = false;
                for (Index k = 0; k < parts.s_diff.size(); ++k) {
                  pl += parts.s_diff(k);
                  pr += parts.s_right(k);
                  pq += parts.s_left(k);
                  double margin = pr * pq - pl * pl;
                  worst = std::min(worst, margin + 1e-9 * std::max(1.0, pl * pl));
                  double indexwise_rhs = 0.0;
                  for (Index i = 0; i <= k; ++i) indexwise_rhs += parts.s_right(i) * parts.s_left(i);
                  if (std::abs(indexwise_rhs - pr * pq) > 1e-6 * std::max(1.0, pr * pq))
                    distinct = true;
                }
                MajorizationResult combined = indexwise;
                combined.holds = indexwise.holds && worst >= 0.0 && distinct;
                if (worst < worst_of(indexwise)) {
                  combined.margins = RealVector::Constant(1, worst);
                }
                return combined;
              });

  st.property("commutators_lemma", trials, [&](Rng& rng, Index n, MatrixKind kind) {
    auto parts = commutator_parts(rng, n, kind, true);
    RealVector lhs = parts.s_diff.cwiseProduct(parts.s_diff);
    RealVector rhs = parts.s_ti.cwiseProduct(parts.s_ti)
                         .cwiseProduct(parts.s_right.cwiseProduct(parts.s_right));
    return weak_majorize(lhs, rhs);
  });

  auto eig_diff = [](const HermitianMatrix& a, const HermitianMatrix& b) {
    return abs_desc(eigh(a).values.values(), eigh(b).values.values());
  };

  st.property("commutator2_smin", trials, [&](Rng& rng, Index n, MatrixKind kind) {
    auto parts = commutator_parts(rng, n, kind, false);
    double smin = 1.0 / parts.s_ti(0);
    RealVector lhs = smin * eig_diff(parts.a, parts.b);
    return weak_majorize(lhs, parts.s_right);
  });

  st.property("commutator2_product", trials, [&](Rng& rng, Index n, MatrixKind kind) {
    auto parts = commutator_parts(rng, n, kind, false);
    RealVector d = eig_diff(parts.a, parts.b);
    return weak_majorize(RealVector(d.cwiseProduct(d)),
                         RealVector(parts.s_right.cwiseProduct(parts.s_left)));
  });

  st.property("commutator2_inverse", trials, [&](Rng& rng, Index n, MatrixKind kind) {
    auto parts = commutator_parts(rng, n, kind, false);
    RealVector d = eig_diff(parts.a, parts.b);
    RealVector rhs = parts.s_ti.cwiseProduct(parts.s_ti)
                         .cwiseProduct(parts.s_right.cwiseProduct(parts.s_right));
    return weak_majorize(RealVector(d.cwiseProduct(d)), rhs);
  });

  st.property("projector_product", trials, [](Rng& rng, Index n, MatrixKind kind) {
    Index p = 1 + static_cast<Index>(rng.below(n));
    Index q = 1 + static_cast<Index>(rng.below(n));
    Subspace ps = gen_subspace(rng, n, p, kind);
    Subspace qs = gen_subspace(rng, n, q, kind);
    RealVector lhs = projector_product_singvals(ps, qs).values();
    AngleVector theta = principal_angles(ps, qs);
    RealVector rhs = theta.sines().cwiseProduct(theta.cosines());
    return equality_check(lhs, sorted_desc(rhs), 1e-10 * static_cast<double>(n));
  });

  return st.rows;
}

}  // namespace ritz
