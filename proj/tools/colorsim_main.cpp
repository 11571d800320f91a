// Command-line front end: code inspection, Monte Carlo sweeps, threshold
// and scaling fits, hashing-bound tables, code export.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "colorsim/analysis.hpp"
#include "colorsim/exact_decoder.hpp"
#include "colorsim/experiment.hpp"
#include "colorsim/families.hpp"
#include "colorsim/io.hpp"

using namespace colorsim;

namespace {

std::vector<double> parse_grid(const std::string& text) {
  // Either "a:b:step" or a comma list.
  std::vector<double> out;
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string p;
    while (std::getline(ss, p, ':')) parts.push_back(p);
    if (parts.size() != 3) throw std::invalid_argument("grid must be lo:hi:step");
    double lo = std::stod(parts[0]), hi = std::stod(parts[1]), step = std::stod(parts[2]);
    if (step <= 0) throw std::invalid_argument("grid step must be positive");
    for (double v = lo; v <= hi + step * 1e-9; v += step) out.push_back(v);
    return out;
  }
  std::stringstream ss(text);
  std::string p;
  while (std::getline(ss, p, ',')) out.push_back(std::stod(p));
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string p;
  while (std::getline(ss, p, ',')) out.push_back(std::stoi(p));
  return out;
}

int default_workers() {
  if (const char* env = std::getenv("COLORSIM_WORKERS")) return std::atoi(env);
  return 0;  // hardware concurrency
}

// Values from a config file seed the option defaults; explicit flags win.
void apply_config(CLI::App* cmd, const std::string& path) {
  auto cfg = parse_config_file(path);
  for (const auto& [key, value] : cfg) {
    std::string name = "--" + key.substr(key.find('.') + 1);
    if (CLI::Option* opt = cmd->get_option_no_throw(name)) {
      if (opt->count() == 0) opt->add_result(value);
    }
  }
}

struct SweepArgs {
  std::string family = "x3z3";
  std::string sizes = "9,11,13";
  std::string p_text = "0.11:0.14:0.005";
  std::string eta_text = "0.5";
  std::string decoder = "restriction";
  std::string kappa = "1";
  std::string phi = "1/6";
  std::uint64_t trials = 1000000;
  std::uint64_t target_failures = 5000;
  std::uint64_t seed = 1;
  int workers = default_workers();
  int stripe_phase = 0;
  std::string out_prefix = "sweep";
  bool timing = false;
};

// Named size schedules for threshold studies at increasing bias.
std::string expand_sizes(const std::string& text) {
  if (text == "schedule-low") return "9,11,13,15";
  if (text == "schedule-mid") return "25,27,29,31,33,35";
  if (text == "schedule-high") return "39,43,47,51";
  if (text == "schedule-desk") return "9,11,13,17";
  return text;
}

TrialStatistics run_sweep_args(const SweepArgs& args) {
  SweepConfig cfg;
  for (int size : parse_int_list(expand_sizes(args.sizes))) {
    FamilySpec fs;
    fs.family = args.family;
    fs.size = size;
    fs.kappa = Rational::parse(args.kappa);
    fs.phi = Rational::parse(args.phi);
    fs.stripe_phase = args.stripe_phase;
    cfg.codes.push_back(build_family_code(fs));
    cfg.code_labels.push_back(family_label(fs));
    cfg.code_sizes.push_back(size);
  }
  cfg.p_grid = parse_grid(args.p_text);
  cfg.eta = Bias::parse(args.eta_text);
  cfg.decoder = decoder_kind_from_string(args.decoder);
  cfg.max_trials = args.trials;
  cfg.target_failures = args.target_failures;
  cfg.seed = args.seed;
  cfg.workers = args.workers;
  TrialStatistics stats = run_sweep(cfg);
  for (auto& ps : stats.points) {
    ps.family = args.family;
    if (!args.timing) ps.seconds = 0.0;
  }
  return stats;
}

void print_stats(const TrialStatistics& stats) {
  std::printf("%-24s %8s %10s %10s %12s %22s\n", "code", "p", "trials", "failures", "p_L",
              "95% interval");
  for (const auto& ps : stats.points) {
    std::printf("%-24s %8.4f %10llu %10llu %12.6g [%.6g, %.6g]\n", ps.code_label.c_str(), ps.p,
                static_cast<unsigned long long>(ps.trials),
                static_cast<unsigned long long>(ps.failures), ps.p_l, ps.ci_lo, ps.ci_hi);
  }
}

int cmd_code_info(const FamilySpec& fs) {
  StabilizerCode code = build_family_code(fs);
  std::printf("code:     %s\n", family_label(fs).c_str());
  std::printf("n:        %d\n", code.n);
  std::printf("k:        %d\n", code.k);

  Rational measured = measured_kappa(code.lattice, code.deformation.pattern);
  std::printf("kappa:    %s (measured %s)\n", code.deformation.kappa.to_string().c_str(),
              measured.to_string().c_str());

  std::map<std::size_t, int> hist;
  for (const auto& g : code.generators) hist[g.weight()] += 1;
  std::printf("weights: ");
  for (auto [w, cnt] : hist) std::printf(" %zux%d", w, cnt);
  std::printf("\n");

  if (code.d_target > 0) {
    try {
      DistanceReport rep = verify_distance(code, code.d_target);
      std::printf("distance: %s %d\n", rep.pass ? "verified" : "BELOW TARGET", code.d_target);
    } catch (const BudgetExceeded&) {
      std::printf("distance: target %d (verification over budget at n=%d)\n", code.d_target,
                  code.n);
    }
  }
  for (unsigned type : {1u, 2u}) {
    try {
      long long count = count_short_pure_logicals(code, type, code.d_target);
      std::printf("pure-%c logicals (weight <= %d): %lld\n", type == 1 ? 'X' : 'Z',
                  code.d_target, count);
    } catch (const BudgetExceeded&) {
      std::printf("pure-%c logicals: search over budget at n=%d\n", type == 1 ? 'X' : 'Z',
                  code.n);
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"domain-wall color code simulator"};
  app.require_subcommand(1);

  // code-info ---------------------------------------------------------
  FamilySpec info_spec;
  std::string info_kappa = "0", info_phi = "0";
  auto* info = app.add_subcommand("code-info", "print code parameters and checks");
  std::string info_config;
  info->add_option("--config", info_config, "config file");
  info->add_option("--family", info_spec.family, "code family");
  info->add_option("--size,--d,--L,--k", info_spec.size, "distance or lattice size");
  info->add_option("--kappa", info_kappa, "wall density for family dw");
  info->add_option("--phi", info_phi, "wall orientation (fraction of pi)");
  info->add_option("--stripe-phase", info_spec.stripe_phase, "stripe phase offset");

  // sweep --------------------------------------------------------------
  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Monte Carlo logical failure rates");
  std::string sweep_config;
  sweep->add_option("--config", sweep_config, "config file");
  sweep->add_option("--family", sweep_args.family, "code family");
  sweep->add_option("--sizes,--d,--L,--k", sweep_args.sizes, "comma list of sizes");
  sweep->add_option("--p", sweep_args.p_text, "error rates, lo:hi:step or comma list");
  sweep->add_option("--eta", sweep_args.eta_text, "noise bias (number or inf)");
  sweep->add_option("--decoder", sweep_args.decoder,
                    "exact-ml | restriction | infinite-bias | surface-matching");
  sweep->add_option("--trials", sweep_args.trials, "max trials per point");
  sweep->add_option("--target-failures", sweep_args.target_failures,
                    "stop a point early after this many failures (0 = never)");
  sweep->add_option("--seed", sweep_args.seed, "master seed");
  sweep->add_option("--workers", sweep_args.workers, "worker threads (0 = hardware)");
  sweep->add_option("--kappa", sweep_args.kappa, "wall density for family dw");
  sweep->add_option("--phi", sweep_args.phi, "wall orientation for family dw");
  sweep->add_option("--stripe-phase", sweep_args.stripe_phase, "stripe phase offset");
  sweep->add_option("--out", sweep_args.out_prefix, "output prefix (.jsonl and .csv)");
  sweep->add_flag("--timing", sweep_args.timing, "record wall time in outputs");
  std::string sweep_preset;
  sweep->add_option("--preset", sweep_preset,
                    "depolarizing-threshold | dephasing-periodic (fills defaults)");

  // fit ----------------------------------------------------------------
  std::string fit_input, fit_report = "threshold.json", fit_collapse;
  std::uint64_t fit_min_failures = 100;
  auto* fit = app.add_subcommand("fit", "critical-exponent threshold fit");
  fit->add_option("--input", fit_input, "results file (.jsonl or .csv)")->required();
  fit->add_option("--report", fit_report, "output JSON report");
  fit->add_option("--collapse", fit_collapse, "rescaled-collapse CSV output");
  fit->add_option("--min-failures", fit_min_failures, "drop points with fewer failures");

  // subfit ---------------------------------------------------------------
  std::string subfit_input, subfit_abscissa = "d";
  auto* subfit = app.add_subcommand("subfit", "sub-threshold scaling fit");
  subfit->add_option("--input", subfit_input, "results file (.jsonl or .csv)")->required();
  subfit->add_option("--abscissa", subfit_abscissa, "d or nq");

  // hashing --------------------------------------------------------------
  std::string hashing_etas = "0.5,1,3,10,30,100,300,1000,inf";
  std::string hashing_out;
  auto* hashing = app.add_subcommand("hashing", "hashing-bound table");
  hashing->add_option("--eta", hashing_etas, "comma list of biases");
  hashing->add_option("--out", hashing_out, "CSV output path (default stdout)");

  // export-code ------------------------------------------------------------
  FamilySpec export_spec;
  std::string export_out = "code.json", export_kappa = "0", export_phi = "0";
  bool export_lattice_only = false;
  auto* exportc = app.add_subcommand("export-code", "write code or lattice as JSON");
  exportc->add_option("--family", export_spec.family, "code family");
  exportc->add_option("--size,--d,--L,--k", export_spec.size, "distance or lattice size");
  exportc->add_option("--kappa", export_kappa, "wall density for family dw");
  exportc->add_option("--phi", export_phi, "wall orientation");
  exportc->add_option("--out", export_out, "output path");
  exportc->add_flag("--lattice-only", export_lattice_only, "export only the lattice");

  CLI11_PARSE(app, argc, argv);

  try {
    if (info->parsed()) {
      if (!info_config.empty()) apply_config(info, info_config);
      info_spec.kappa = Rational::parse(info_kappa);
      info_spec.phi = Rational::parse(info_phi);
      return cmd_code_info(info_spec);
    }
    if (sweep->parsed()) {
      if (!sweep_config.empty()) apply_config(sweep, sweep_config);
      if (sweep_preset == "depolarizing-threshold") {
        if (sweep->get_option("--family")->count() == 0) sweep_args.family = "x3z3";
        if (sweep->get_option("--sizes")->count() == 0) sweep_args.sizes = "9,11,13,17";
        if (sweep->get_option("--p")->count() == 0) sweep_args.p_text = "0.110:0.140:0.005";
        if (sweep->get_option("--eta")->count() == 0) sweep_args.eta_text = "0.5";
        if (sweep->get_option("--trials")->count() == 0) sweep_args.trials = 200000;
        if (sweep->get_option("--target-failures")->count() == 0) sweep_args.target_failures = 0;
      } else if (sweep_preset == "dephasing-periodic") {
        if (sweep->get_option("--family")->count() == 0) sweep_args.family = "x3z3-periodic";
        if (sweep->get_option("--sizes")->count() == 0) sweep_args.sizes = "6,12,18";
        if (sweep->get_option("--p")->count() == 0) sweep_args.p_text = "0.40:0.56:0.02";
        if (sweep->get_option("--eta")->count() == 0) sweep_args.eta_text = "inf";
        if (sweep->get_option("--decoder")->count() == 0) sweep_args.decoder = "infinite-bias";
        if (sweep->get_option("--trials")->count() == 0) sweep_args.trials = 100000;
      } else if (!sweep_preset.empty()) {
        throw std::invalid_argument("unknown preset: " + sweep_preset);
      }
      TrialStatistics stats = run_sweep_args(sweep_args);
      append_results_jsonl(sweep_args.out_prefix + ".jsonl", stats);
      write_results_csv(sweep_args.out_prefix + ".csv", stats);
      print_stats(stats);
      return 0;
    }
    if (fit->parsed()) {
      TrialStatistics stats = fit_input.size() > 6 &&
                                      fit_input.substr(fit_input.size() - 6) == ".jsonl"
                                  ? read_results_jsonl(fit_input)
                                  : read_results_csv(fit_input);
      std::vector<FitPoint> points;
      for (const auto& ps : stats.points)
        points.push_back({ps.size, ps.p, ps.p_l, ps.trials, ps.failures});
      FitOptions opt;
      opt.min_failures = fit_min_failures;
      ThresholdEstimate est = fit_threshold(points, opt);
      std::printf("p_th  = %.5f +- %.5f\n", est.p_th, est.p_th_err);
      std::printf("beta  = %.3f +- %.3f\n", est.beta, est.beta_err);
      std::printf("B     = (%.4g, %.4g, %.4g)\n", est.b0, est.b1, est.b2);
      std::printf("chi2/dof = %.3g%s\n", est.residual,
                  est.extrapolated ? "  (threshold outside data range)" : "");
      std::ofstream rep(fit_report);
      rep << threshold_report_json(est, points).dump(2) << "\n";
      if (!fit_collapse.empty()) {
        std::ofstream out(fit_collapse);
        out << "d,p,x,p_L,ci_lo,ci_hi\n";
        for (const auto& ps : stats.points) {
          double x = (ps.p - est.p_th) * std::pow(ps.size, est.beta);
          out << ps.size << ',' << ps.p << ',' << x << ',' << ps.p_l << ',' << ps.ci_lo << ','
              << ps.ci_hi << "\n";
        }
      }
      return 0;
    }
    if (subfit->parsed()) {
      TrialStatistics stats = subfit_input.size() > 6 &&
                                      subfit_input.substr(subfit_input.size() - 6) == ".jsonl"
                                  ? read_results_jsonl(subfit_input)
                                  : read_results_csv(subfit_input);
      ScalingAbscissa kind =
          subfit_abscissa == "nq" ? ScalingAbscissa::kQubitCount : ScalingAbscissa::kDistance;
      std::vector<ScalingPoint> pts;
      for (const auto& ps : stats.points) {
        double x = kind == ScalingAbscissa::kQubitCount
                       ? static_cast<double>(ps.size) * ps.size  // d^2 proxy when nq unknown
                       : static_cast<double>(ps.size);
        pts.push_back({x, ps.p_l});
      }
      ScalingFit f = fit_subthreshold(pts, kind);
      std::printf("slope = %.6g per %s, intercept = %.6g, residual = %.3g\n", f.slope,
                  subfit_abscissa.c_str(), f.intercept, f.residual);
      return 0;
    }
    if (hashing->parsed()) {
      std::ostringstream table;
      table << "eta,p_hash\n";
      std::stringstream ss(hashing_etas);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        Bias eta = Bias::parse(tok);
        table << tok << ',' << std::setprecision(10) << hashing_bound(eta) << "\n";
      }
      if (hashing_out.empty()) {
        std::cout << table.str();
      } else {
        std::ofstream out(hashing_out);
        out << table.str();
      }
      return 0;
    }
    if (exportc->parsed()) {
      export_spec.kappa = Rational::parse(export_kappa);
      export_spec.phi = Rational::parse(export_phi);
      std::ofstream out(export_out);
      if (export_lattice_only) {
        StabilizerCode code = build_family_code(export_spec);
        out << lattice_to_json(code.lattice).dump(2) << "\n";
      } else {
        out << code_to_json(build_family_code(export_spec)).dump(2) << "\n";
      }
      std::printf("wrote %s\n", export_out.c_str());
      return 0;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
