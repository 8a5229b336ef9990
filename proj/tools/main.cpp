#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ritz/bounds.hpp"
#include "ritz/dilation.hpp"
#include "ritz/harness.hpp"
#include "ritz/matrix_io.hpp"
#include "ritz/rayleigh_ritz.hpp"
#include "ritz/subspace.hpp"
#include "ritz/types.hpp"

namespace {

using namespace ritz;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitProvenViolation = 2;
constexpr int kExitCounterexample = 3;

double worst_of(const MajorizationResult& v) {
  return v.margins.size() == 0 ? 0.0 : v.margins.minCoeff();
}

std::string vec_str(const DecreasingVector& v) {
  std::string out = "[";
  for (Index i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_double(v[i]);
  }
  return out + "]";
}

void print_report_line(std::ostream& out, const BoundReport& r, const std::string& note = "") {
  out << std::left << std::setw(22) << bound_name(r.id) << ' ' << std::setw(6)
      << (r.verdict.holds ? "holds" : "FAILS") << " worst_margin="
      << format_double(worst_of(r.verdict));
  if (!note.empty()) out << "  " << note;
  out << '\n';
}

// Bound evaluation on a loaded (A, X, Y) triple; ids outside this family
// (block_discard, additive_*) have their own subcommands.
BoundReport eval_on_triple(const PairData& pd, const HermitianMatrix& a, const Subspace& y,
                           BoundId id) {
  switch (id) {
    case BoundId::conjecture_cos:
      return eval_conjecture(pd, ConjectureVariant::cos);
    case BoundId::conjecture_tan:
      return eval_conjecture(pd, ConjectureVariant::tan);
    case BoundId::thm_mixed_cos:
      return eval_thm_mixed(pd, MixedVariant::cos);
    case BoundId::thm_mixed_squared:
      return eval_thm_mixed(pd, MixedVariant::squared);
    case BoundId::thm_mixed_scaled:
      return eval_thm_mixed(pd, MixedVariant::scaled);
    case BoundId::cor_tan_cosmax:
      return eval_cor_tangent(pd, TangentVariant::cosmax);
    case BoundId::cor_tan_squared:
      return eval_cor_tangent(pd, TangentVariant::squared);
    case BoundId::cor_tan_scaled:
      return eval_cor_tangent(pd, TangentVariant::scaled);
    case BoundId::apriori_sin:
      return eval_apriori(pd, false);
    case BoundId::apriori_sin_squared:
      return eval_apriori(pd, true);
    case BoundId::sun91:
      return eval_sun91(pd);
    case BoundId::weyl_matching:
      return eval_weyl_matching(a, y, 12, pd.tol);
    case BoundId::davis_kahan_sin:
      return eval_davis_kahan(pd, DkVariant::sin);
    case BoundId::davis_kahan_tan:
      return eval_davis_kahan(pd, DkVariant::tan);
    case BoundId::quad_apost_sin:
      return eval_quadratic_aposteriori(pd, QuadVariant::sin);
    case BoundId::quad_apost_tan:
      return eval_quadratic_aposteriori(pd, QuadVariant::tan);
    case BoundId::block_discard:
      throw Error("block_discard takes a k x k split, not a subspace pair; use the block-discard subcommand");
    case BoundId::additive_mixed:
    case BoundId::additive_weyl:
      throw Error("additive bounds compare two Hermitian matrices, not a subspace pair");
  }
  throw Error("unknown bound id");
}

int run_bounds(const std::string& a_path, const std::string& x_path, const std::string& y_path,
               const std::string& bound_arg, const std::string& json_path) {
  LoadedMatrix loaded = read_matrix(a_path);
  HermitianMatrix a(loaded.mat);
  Subspace x = read_subspace(x_path);
  Subspace y = read_subspace(y_path);
  if (x.ambient() != a.n() || y.ambient() != a.n()) throw Error("dimension mismatch");
  if (x.dim() != y.dim()) throw Error("subspace dimensions differ");

  PairData pd = make_pair_data(a, x, y);
  std::cout << "bounds: n=" << pd.n() << " p=" << pd.p() << " kind=" << (loaded.kind == MatrixKind::real ? "real" : "complex")
            << " x_invariant=" << (pd.x_invariant ? "yes" : "no")
            << " theta_max=" << format_double(pd.theta.max()) << '\n';

  std::vector<BoundReport> reports;
  std::vector<std::string> skipped;
  if (bound_arg == "all") {
    std::vector<BoundId> ids = {BoundId::conjecture_cos,   BoundId::conjecture_tan,
                                BoundId::thm_mixed_cos,    BoundId::thm_mixed_squared,
                                BoundId::thm_mixed_scaled, BoundId::cor_tan_cosmax,
                                BoundId::cor_tan_squared,  BoundId::cor_tan_scaled,
                                BoundId::apriori_sin,      BoundId::weyl_matching};
    if (pd.x_invariant) {
      for (BoundId id : {BoundId::apriori_sin_squared, BoundId::sun91, BoundId::davis_kahan_sin,
                         BoundId::davis_kahan_tan, BoundId::quad_apost_sin, BoundId::quad_apost_tan})
        ids.push_back(id);
    }
    for (BoundId id : ids) {
      try {
        reports.push_back(eval_on_triple(pd, a, y, id));
      } catch (const Error& e) {
        if (std::string(e.what()).find("gap condition not met") == std::string::npos) throw;
        skipped.emplace_back(bound_name(id));
      }
    }
  } else {
    reports.push_back(eval_on_triple(pd, a, y, bound_from_name(bound_arg)));
  }

  for (const BoundReport& r : reports) {
    print_report_line(std::cout, r, r.conjectural ? "(conjectural)" : "");
  }
  for (const std::string& name : skipped) {
    std::cout << std::left << std::setw(22) << name << " skipped (gap condition not met)\n";
  }

  if (!json_path.empty()) {
    nlohmann::ordered_json j;
    j["n"] = pd.n();
    j["p"] = pd.p();
    j["x_invariant"] = pd.x_invariant;
    j["y_invariant"] = pd.y_invariant;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const BoundReport& r : reports) arr.push_back(nlohmann::ordered_json::parse(to_json(r)));
    j["reports"] = std::move(arr);
    j["skipped"] = skipped;
    std::ofstream out(json_path);
    out << j.dump(2) << '\n';
    if (!out) throw Error("cannot write " + json_path);
    std::cout << "wrote " << json_path << '\n';
  }

  bool proven_fail = false;
  bool conjecture_fail = false;
  for (const BoundReport& r : reports) {
    if (r.verdict.holds) continue;
    (r.conjectural ? conjecture_fail : proven_fail) = true;
  }
  if (proven_fail) return kExitProvenViolation;
  if (conjecture_fail) return kExitCounterexample;
  return kExitOk;
}

int run_fuzz_cmd(const ExperimentConfig& cfg, const std::string& check_arg,
                 const std::string& records_path, const std::string& artifact_dir) {
  FuzzCheck which = FuzzCheck::all;
  if (check_arg == "conjecture") {
    which = FuzzCheck::conjecture;
  } else if (check_arg == "theorems") {
    which = FuzzCheck::theorems;
  } else if (check_arg != "all") {
    throw Error("unknown check '" + check_arg + "'; expected conjecture|theorems|all");
  }

  std::cout << "fuzz: seed=" << cfg.seed << " trials=" << cfg.trials << " n=[" << cfg.n_min << ','
            << cfg.n_max << "] p_max_fraction=" << format_double(cfg.p_fraction)
            << " ensemble=gaussian check=" << check_arg << '\n';

  std::ofstream records;
  std::ostream* records_ptr = nullptr;
  if (!records_path.empty()) {
    records.open(records_path);
    if (!records) throw Error("cannot write " + records_path);
    records_ptr = &records;
  }

  FuzzSummary summary = run_fuzz(cfg, which, records_ptr, artifact_dir);
  std::cout << "trials: run=" << summary.trials_run << " skipped=" << summary.trials_skipped
            << " bounds_evaluated=" << summary.bounds_evaluated << '\n';
  std::cout << "gap-conditioned: attempted=" << summary.gap_attempts
            << " evaluated=" << summary.gap_evaluated << '\n';
  std::cout << "worst margins:\n";
  for (const auto& [name, margin] : summary.worst_margin_by_bound) {
    std::cout << "  " << std::left << std::setw(24) << name << ' ' << format_double(margin) << '\n';
  }
  if (!records_path.empty()) std::cout << "wrote " << records_path << '\n';

  if (summary.proven_violation) {
    std::cout << "PROVEN BOUND VIOLATION: trial=" << summary.violation_trial << " bound="
              << summary.violation_bound << " margin=" << format_double(summary.violation_margin)
              << '\n';
    return kExitProvenViolation;
  }
  if (summary.counterexamples > 0) {
    std::cout << "conjecture counterexamples: " << summary.counterexamples << '\n';
    for (const std::string& path : summary.counterexample_paths) {
      std::cout << "  " << path << '\n';
    }
    return kExitCounterexample;
  }
  std::cout << "no violations\n";
  return kExitOk;
}

int run_figure1_cmd(const ExperimentConfig& cfg, const std::string& out_path) {
  std::cout << "figure1: seed=" << cfg.seed << " points=" << cfg.eps.points << " eps=["
            << format_double(cfg.eps.min) << ',' << format_double(cfg.eps.max)
            << "] reps=" << cfg.trials_per_eps << " ensemble=gaussian\n";
  Figure1Result result = run_figure1(cfg);
  std::ofstream out(out_path);
  if (!out) throw Error("cannot write " + out_path);
  write_figure1_csv(result, out);
  if (!out) throw Error("cannot write " + out_path);
  std::cout << "slopes over [" << format_double(result.window_min) << ','
            << format_double(result.window_max) << "]: lhs=" << format_double(result.slope_lhs)
            << " mixed=" << format_double(result.slope_mixed)
            << " weyl=" << format_double(result.slope_weyl) << '\n';
  std::cout << "wrote " << out_path << '\n';
  return kExitOk;
}

int run_appendix_cmd(const ExperimentConfig& cfg) {
  std::cout << "appendix: seed=" << cfg.seed << " trials=" << cfg.trials << " n=[" << cfg.n_min
            << ',' << cfg.n_max << "] ensemble=gaussian\n";
  std::vector<AppendixRow> rows = run_appendix_suite(cfg);
  bool any_failure = false;
  for (const AppendixRow& row : rows) {
    std::cout << std::left << std::setw(22) << row.name << ' ' << std::setw(6)
              << (row.failures == 0 ? "pass" : "FAIL") << " trials=" << row.trials
              << " failures=" << row.failures << " worst_margin=" << format_double(row.worst_margin)
              << '\n';
    any_failure = any_failure || row.failures > 0;
  }
  return any_failure ? kExitProvenViolation : kExitOk;
}

int run_block_discard_cmd(const std::string& a_path, Index k, const std::vector<Index>& eigs) {
  LoadedMatrix loaded = read_matrix(a_path);
  HermitianMatrix a(loaded.mat);
  BoundReport report = eval_block_discard(a, k, eigs);
  std::cout << "block-discard: n=" << report.n << " k=" << report.p << " eigs=";
  for (std::size_t i = 0; i < eigs.size(); ++i) {
    std::cout << (i > 0 ? "," : "") << eigs[i];
  }
  std::cout << '\n';
  std::cout << "lhs = " << vec_str(report.lhs) << '\n';
  std::cout << "rhs = " << vec_str(report.rhs) << '\n';
  print_report_line(std::cout, report, "(conjectural)");
  double scaled_holds = 0.0, scaled_margin = 0.0;
  for (const auto& [name, value] : report.context.scalars) {
    if (name == "scaled_holds") scaled_holds = value;
    if (name == "scaled_worst_margin") scaled_margin = value;
  }
  std::cout << "scaled variant (proven): " << (scaled_holds > 0.5 ? "holds" : "FAILS")
            << " worst_margin=" << format_double(scaled_margin) << '\n';
  if (scaled_holds <= 0.5) return kExitProvenViolation;
  if (!report.verdict.holds) return kExitCounterexample;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rayleigh-Ritz majorization bounds: evaluation, fuzzing, and experiments"};
  app.require_subcommand(1);

  // bounds
  std::string a_path, x_path, y_path, bound_arg = "all", json_path;
  CLI::App* bounds = app.add_subcommand("bounds", "evaluate bounds on a matrix and two subspaces");
  bounds->add_option("--matrix", a_path, "Hermitian matrix file")->required();
  bounds->add_option("--x", x_path, "first subspace basis file")->required();
  bounds->add_option("--y", y_path, "second subspace basis file")->required();
  bounds->add_option("--bound", bound_arg, "bound id or 'all'");
  bounds->add_option("--json", json_path, "write full reports to this JSON file");

  // fuzz
  ExperimentConfig fuzz_cfg;
  std::string check_arg = "all", records_path, artifact_dir = "counterexamples";
  CLI::App* fuzz = app.add_subcommand("fuzz", "randomized bound verification");
  fuzz->add_option("--trials", fuzz_cfg.trials, "number of trials");
  fuzz->add_option("--seed", fuzz_cfg.seed, "RNG seed");
  fuzz->add_option("--n-max", fuzz_cfg.n_max, "largest matrix size");
  fuzz->add_option("--n-min", fuzz_cfg.n_min, "smallest matrix size");
  fuzz->add_option("--check", check_arg, "conjecture|theorems|all");
  fuzz->add_option("--records", records_path, "write one JSONL record per trial");
  fuzz->add_option("--artifact-dir", artifact_dir, "directory for counterexample artifacts");

  // figure1
  ExperimentConfig fig_cfg;
  std::string fig_out = "fig1.csv";
  CLI::App* figure1 = app.add_subcommand("figure1", "additive perturbation sweep");
  figure1->add_option("--eps-min", fig_cfg.eps.min, "smallest perturbation");
  figure1->add_option("--eps-max", fig_cfg.eps.max, "largest perturbation");
  figure1->add_option("--points", fig_cfg.eps.points, "grid points");
  figure1->add_option("--trials-per-eps", fig_cfg.trials_per_eps, "repetitions per grid point");
  figure1->add_option("--seed", fig_cfg.seed, "RNG seed");
  figure1->add_option("--out", fig_out, "CSV output path");

  // appendix
  ExperimentConfig app_cfg;
  app_cfg.trials = 1000;
  CLI::App* appendix = app.add_subcommand("appendix", "property suite for the auxiliary results");
  appendix->add_option("--trials", app_cfg.trials, "instances per property");
  appendix->add_option("--seed", app_cfg.seed, "RNG seed");

  // block-discard
  std::string bd_path;
  Index bd_k = 1;
  std::vector<Index> bd_eigs;
  CLI::App* bd = app.add_subcommand("block-discard", "off-diagonal block truncation bound");
  bd->add_option("--matrix", bd_path, "Hermitian matrix file")->required();
  bd->add_option("--k", bd_k, "leading block size")->required();
  bd->add_option("--eigs", bd_eigs, "1-based eigenvalue positions, comma separated")
      ->required()
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (bounds->parsed()) return run_bounds(a_path, x_path, y_path, bound_arg, json_path);
    if (fuzz->parsed()) return run_fuzz_cmd(fuzz_cfg, check_arg, records_path, artifact_dir);
    if (figure1->parsed()) return run_figure1_cmd(fig_cfg, fig_out);
    if (appendix->parsed()) return run_appendix_cmd(app_cfg);
    if (bd->parsed()) return run_block_discard_cmd(bd_path, bd_k, bd_eigs);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
