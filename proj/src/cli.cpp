#include "coopscat/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "coopscat/errors.hpp"
#include "coopscat/io.hpp"
#include "coopscat/optimizer.hpp"
#include "coopscat/refdata.hpp"
#include "coopscat/resonance.hpp"
#include "coopscat/scatter_core.hpp"
#include "coopscat/stability.hpp"

namespace coopscat::cli {

namespace {

namespace fs = std::filesystem;

struct Options {
  std::string config;
  double delta = 0.0;
  std::vector<double> direction{0.0, 0.0, 1.0};
  int grid = 1001;
  std::string out;
  std::string scan_out;
  double delta_min = -10.0;
  double delta_max = 10.0;
  int steps = 401;
  std::string job;
  double delta_r = 0.05;
  std::size_t samples = 100000;
  std::string objective = "sigma";
  std::uint64_t seed = 0;
  bool quantiles = false;
  std::size_t n = 0;
  double spacing = 0.5;
  unsigned threads = 0;
};

void emit_error(std::ostream& err, const std::string& kind, const std::string& message) {
  err << io::Json{{"error", kind}, {"message", message}}.dump() << '\n';
}

IncidentWave wave_from(const Options& o) {
  if (o.direction.size() != 3) throw InvalidArgument("--direction needs three components");
  Vec3 d(o.direction[0], o.direction[1], o.direction[2]);
  if (!(d.norm() > 0.0)) throw InvalidArgument("--direction must be non-zero");
  return IncidentWave(d.normalized());
}

std::vector<double> detuning_grid(const Options& o) {
  if (o.steps < 2) throw InvalidArgument("--steps must be >= 2");
  if (!(o.delta_max > o.delta_min)) throw InvalidArgument("--delta-max must exceed --delta-min");
  std::vector<double> grid(static_cast<std::size_t>(o.steps));
  for (int i = 0; i < o.steps; ++i) {
    grid[static_cast<std::size_t>(i)] =
        o.delta_min + (o.delta_max - o.delta_min) * i / (o.steps - 1);
  }
  grid.back() = o.delta_max;
  return grid;
}

void write_or_print(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    io::write_text(path, text);
  }
}

int cmd_eval(const Options& o, std::ostream& out) {
  const Configuration config = io::read_config(o.config);
  const IncidentWave wave = wave_from(o);
  const ScattererModel model(o.delta);
  out << io::format_number(total_cross_section(config, wave, model)) << '\n';
  return 0;
}

int cmd_profile(const Options& o, std::ostream& out) {
  if (o.grid < 2) throw InvalidArgument("--grid must be >= 2");
  const Configuration config = io::read_config(o.config);
  const AngularProfile p = angular_profile(config, wave_from(o), ScattererModel(o.delta), o.grid);
  write_or_print(o.out, io::profile_csv(p), out);
  return 0;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  const std::vector<double> grid = detuning_grid(o);
  const Configuration config = io::read_config(o.config);
  const IncidentWave wave = wave_from(o);
  std::vector<double> sigma;
  sigma.reserve(grid.size());
  for (double d : grid) sigma.push_back(total_cross_section(config, wave, ScattererModel(d)));
  write_or_print(o.out, io::detuning_scan_csv(grid, sigma), out);
  return 0;
}

int cmd_resonances(const Options& o, std::ostream& out) {
  const std::vector<double> grid = detuning_grid(o);
  const Configuration config = io::read_config(o.config);
  const IncidentWave wave = wave_from(o);
  const ResonanceSet set = analyze(config, wave);
  write_or_print(o.out, io::resonance_table_csv(set), out);

  std::string scan_path = o.scan_out;
  if (scan_path.empty() && !o.out.empty() && o.out != "-") {
    const fs::path p(o.out);
    scan_path = (p.parent_path() / (p.stem().string() + "_scan.csv")).string();
  }
  if (scan_path.empty()) return 0;
  if (!set.diagonalizable) {
    throw NotDiagonalizable("per-resonance scan unavailable: Green matrix is not diagonalisable");
  }
  std::vector<std::vector<double>> per(grid.size());
  std::vector<double> total;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const ScattererModel model(grid[i]);
    for (std::size_t n = 0; n < set.resonances.size(); ++n) {
      per[i].push_back(resonance_cross_section(set, n, model));
    }
    total.push_back(total_cross_section(config, wave, model));
  }
  write_or_print(scan_path, io::resonance_scan_csv(grid, per, total), out);
  return 0;
}

int cmd_optimize(const Options& o, std::ostream& out) {
  const io::Job job = io::read_job(o.job);
  OptimizerSettings settings = io::job_settings(job);
  settings.threads = o.threads;
  const OptimizationReport report =
      random_restart_search(job.n, job.objective, io::job_mode(job), settings);
  write_or_print(o.out, io::report_to_json(report).dump(2) + "\n", out);
  return 0;
}

int cmd_stability(const Options& o, std::ostream& out) {
  StabilityRequest req{io::read_config(o.config), o.delta_r, o.samples,
                       parse_objective_kind(o.objective), o.seed, o.threads};
  req.validate();
  const StabilityResult result = stability_scan(req);
  write_or_print(o.out,
                 io::stability_csv_header(o.quantiles) +
                     io::stability_csv_row(req, result, o.quantiles),
                 out);
  return 0;
}

int cmd_baseline(const Options& o, std::ostream& out) {
  if (o.n < 1) throw InvalidArgument("--n must be >= 1");
  const double v = regular_chain_baseline(o.n, o.spacing, parse_objective_kind(o.objective));
  out << io::format_number(v) << '\n';
  return 0;
}

int cmd_refdata_export(const Options& o, std::ostream& out) {
  if (o.out.empty()) throw InvalidArgument("--out directory is required");
  const fs::path dir(o.out);
  fs::create_directories(dir);
  for (const auto& e : all_references()) {
    const fs::path file = dir / (e.label() + ".json");
    io::write_config(file, e.configuration());
    out << file.string() << '\n';
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cooperative scattering of scalar waves by point scatterers"};
  app.require_subcommand(1);
  Options o;

  auto add_config = [&](CLI::App* c) {
    c->add_option("--config", o.config, "configuration JSON")->required()->check(CLI::ExistingFile);
  };
  auto add_wave = [&](CLI::App* c) {
    c->add_option("--direction", o.direction, "incident direction x y z")->expected(3);
  };
  auto add_scan = [&](CLI::App* c) {
    c->add_option("--delta-min", o.delta_min, "first detuning (units of gamma)");
    c->add_option("--delta-max", o.delta_max, "last detuning (units of gamma)");
    c->add_option("--steps", o.steps, "number of detunings");
  };
  auto add_threads = [&](CLI::App* c) {
    c->add_option("--threads", o.threads, "worker threads (default: $COOPSCAT_THREADS or all cores)");
  };

  auto* eval = app.add_subcommand("eval", "total cross section sigma/sigma_max");
  add_config(eval);
  add_wave(eval);
  eval->add_option("--delta", o.delta, "detuning delta/gamma");

  auto* profile = app.add_subcommand("profile", "angular profile sigma(cos theta)");
  add_config(profile);
  add_wave(profile);
  profile->add_option("--delta", o.delta, "detuning delta/gamma");
  profile->add_option("--grid", o.grid, "number of cos(theta) samples");
  profile->add_option("--out", o.out, "output CSV");

  auto* spectrum = app.add_subcommand("spectrum", "sigma as a function of detuning");
  add_config(spectrum);
  add_wave(spectrum);
  add_scan(spectrum);
  spectrum->add_option("--out", o.out, "output CSV");

  auto* resonances = app.add_subcommand("resonances", "resonance table and per-resonance scan");
  add_config(resonances);
  add_wave(resonances);
  add_scan(resonances);
  resonances->add_option("--out", o.out, "resonance table CSV");
  resonances->add_option("--scan-out", o.scan_out, "per-resonance scan CSV (default <out>_scan.csv)");

  auto* optimize = app.add_subcommand("optimize", "run an optimisation job");
  optimize->add_option("--job", o.job, "job JSON")->required()->check(CLI::ExistingFile);
  optimize->add_option("--out", o.out, "report JSON");
  add_threads(optimize);

  auto* stability = app.add_subcommand("stability", "Monte-Carlo robustness under displacement");
  add_config(stability);
  stability->add_option("--delta-r", o.delta_r, "displacement ball radius k*dr")->required();
  stability->add_option("--samples", o.samples, "number of perturbed samples");
  stability->add_option("--objective", o.objective, "sigma | gamma_min")
      ->check(CLI::IsMember({"sigma", "gamma_min"}));
  stability->add_option("--seed", o.seed, "random seed");
  stability->add_option("--out", o.out, "output CSV");
  stability->add_flag("--quantiles", o.quantiles, "append median,q05,q95 columns");
  add_threads(stability);

  auto* baseline = app.add_subcommand("baseline", "equally spaced chain along z");
  baseline->add_option("--n", o.n, "number of scatterers")->required();
  baseline->add_option("--spacing", o.spacing, "k * lattice spacing");
  baseline->add_option("--objective", o.objective, "sigma | gamma_min")
      ->check(CLI::IsMember({"sigma", "gamma_min"}));

  auto* refdata = app.add_subcommand("refdata", "published reference configurations");
  refdata->require_subcommand(1);
  auto* exporter = refdata->add_subcommand("export", "write every entry as configuration JSON");
  exporter->add_option("--out", o.out, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    emit_error(err, "UsageError", e.what());
    return 2;
  }

  try {
    if (eval->parsed()) return cmd_eval(o, out);
    if (profile->parsed()) return cmd_profile(o, out);
    if (spectrum->parsed()) return cmd_spectrum(o, out);
    if (resonances->parsed()) return cmd_resonances(o, out);
    if (optimize->parsed()) return cmd_optimize(o, out);
    if (stability->parsed()) return cmd_stability(o, out);
    if (baseline->parsed()) return cmd_baseline(o, out);
    if (exporter->parsed()) return cmd_refdata_export(o, out);
  } catch (const InvalidArgument& e) {
    emit_error(err, e.kind(), e.what());
    return 2;
  } catch (const Error& e) {
    emit_error(err, e.kind(), e.what());
    return 1;
  } catch (const std::exception& e) {
    emit_error(err, "InternalError", e.what());
    return 1;
  }
  emit_error(err, "UsageError", "no command given");
  return 2;
}

}  // namespace coopscat::cli
