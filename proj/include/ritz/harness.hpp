#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ritz/bounds.hpp"
#include "ritz/dilation.hpp"
#include "ritz/random_gen.hpp"
#include "ritz/types.hpp"

namespace ritz {

// Geometric grid {min, max, points} for the perturbation sweep.
struct EpsGrid {
  double min = 1e-8;
  double max = 1e-1;
  Index points = 29;
};

struct ExperimentConfig {
  std::uint64_t seed = 42;
  Index trials = 10000;
  Index n_min = 2;
  Index n_max = 20;
  double p_fraction = 0.5;  // p drawn uniformly in [1, max(1, floor(n * p_fraction))]
  EpsGrid eps;
  Index trials_per_eps = 10;
  MatrixKind scalar_kind = MatrixKind::real;  // sweeps only; fuzz alternates kinds itself
  std::string output_path;
};

// Rejects trials < 1, a degenerate eps grid, and n ranges outside [2, 64].
void validate_config(const ExperimentConfig& cfg);

// One fuzz trial: the drawn problem sizes and the evaluated bounds, kept
// reproducible.  elapsed_seconds is diagnostic only and never serialized, so
// record streams are byte-identical across runs.
struct TrialRecord {
  std::uint64_t trial_id = 0;
  Index n = 0;
  Index p = 0;
  MatrixKind kind = MatrixKind::real;
  bool x_invariant = false;
  bool skipped = false;
  std::vector<BoundReport> reports;
  // Named majorization checks that are not full bound reports (the
  // projected-residual relations S(P_X R_Y) ≺_w S(P_J R_Y) sin Θ).
  std::vector<std::pair<std::string, MajorizationResult>> extra_checks;
  double worst_margin = 0.0;
  double elapsed_seconds = 0.0;
};

// One JSONL line: trial metadata plus {bound_id, holds, worst_margin} per
// evaluated bound.
std::string to_jsonl(const TrialRecord& rec);

enum class FuzzCheck { conjecture, theorems, all };

struct FuzzSummary {
  Index trials_requested = 0;
  Index trials_run = 0;
  Index trials_skipped = 0;
  Index bounds_evaluated = 0;
  Index gap_attempts = 0;   // Davis-Kahan style evaluations attempted
  Index gap_evaluated = 0;  // ... whose gap precondition held
  bool proven_violation = false;
  std::uint64_t violation_trial = 0;
  std::string violation_bound;
  double violation_margin = 0.0;
  Index counterexamples = 0;
  std::vector<std::string> counterexample_paths;
  // Worst (smallest) prefix margin seen per bound, in evaluation order.
  std::vector<std::pair<std::string, double>> worst_margin_by_bound;
};

// Randomized sweep over Hermitian problems: per trial draw A (real/complex
// alternating), Y random, X random or invariant (alternating), skip
// near-perpendicular pairs (theta_max >= pi/2 - 1e-8), evaluate the selected
// bounds, and additionally probe the gap-conditioned bounds on a constructed
// near-invariant pair.  A proven-bound violation stops the run immediately;
// conjecture failures are written as replayable artifacts under artifact_dir
// and counted.  records, when given, receives one JSONL line per trial.
FuzzSummary run_fuzz(const ExperimentConfig& cfg, FuzzCheck which, std::ostream* records = nullptr,
                     const std::string& artifact_dir = "counterexamples");

// One grid row of the additive-perturbation sweep: maxima over the
// repetitions at one eps.
struct SweepRow {
  double eps = 0.0;
  double max_lhs = 0.0;
  double max_mixed_rhs = 0.0;
  double max_weyl_rhs = 0.0;
};

struct Figure1Result {
  std::vector<SweepRow> rows;
  double slope_lhs = 0.0;
  double slope_mixed = 0.0;
  double slope_weyl = 0.0;
  double window_min = 1e-6;
  double window_max = 1e-2;
};

// Additive-perturbation experiment: per repetition draw an acute angle phi
// in [0.1, pi/2 - 0.1], rank-1 projectors at that angle in R^2, and unit
// spectral-norm Hermitian directions E_F, E_G; the same draws are reused at
// every eps so each repetition traces the path F = F_bar + eps E_F.  Rows
// hold maxima over repetitions of the additive bound's sides and the Weyl
// baseline; slopes are least-squares fits in log-log over the window.
Figure1Result run_figure1(const ExperimentConfig& cfg);

// Header eps,max_lhs,max_mixed_rhs,max_weyl_rhs; shortest round-trip decimal
// doubles; one row per grid point.
void write_figure1_csv(const Figure1Result& result, std::ostream& out);

// Least-squares slope of log(value) against log(eps) over the points with
// window_min <= eps <= window_max.  Needs at least 3 usable points, all
// positive.
double fit_loglog_slope(const std::vector<double>& eps, const std::vector<double>& values,
                        double window_min, double window_max);

// One property-test row of the appendix suite.
struct AppendixRow {
  std::string name;
  Index trials = 0;
  Index failures = 0;
  double worst_margin = 0.0;
};

// Property tests, one per appendix result: majorization inequalities for
// sums and products of singular values, eigenvalue difference bounds,
// commutator bounds, and the projector-product identity, each on
// cfg.trials random instances with matched generators.  The two-sided
// commutator theorem is additionally checked in both prefix-sum readings,
// which are verified to be genuinely different expressions.
std::vector<AppendixRow> run_appendix_suite(const ExperimentConfig& cfg);

}  // namespace ritz
