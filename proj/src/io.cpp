#include "coopscat/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "coopscat/errors.hpp"
#include "coopscat/scatter_core.hpp"

namespace coopscat::io {

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

Json config_to_json(const Configuration& config) {
  Json positions = Json::array();
  for (const auto& p : config.positions()) positions.push_back({p.x(), p.y(), p.z()});
  return Json{{"k_positions", positions}, {"label", config.label()}};
}

Configuration config_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("k_positions") || !doc["k_positions"].is_array()) {
    throw InvalidArgument("configuration JSON needs a \"k_positions\" array");
  }
  std::vector<Vec3> positions;
  for (const auto& row : doc["k_positions"]) {
    if (!row.is_array() || row.size() != 3) {
      throw InvalidArgument("each k_positions entry must be [x, y, z]");
    }
    for (const auto& v : row) {
      if (!v.is_number()) throw InvalidArgument("k_positions entries must be numbers");
    }
    positions.emplace_back(row[0].get<double>(), row[1].get<double>(), row[2].get<double>());
  }
  std::string label;
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw InvalidArgument("label must be a string");
    label = doc["label"].get<std::string>();
  }
  return Configuration(std::move(positions), std::move(label));
}

namespace {
Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument("malformed JSON in " + path.string() + ": " + e.what());
  }
}
}  // namespace

Configuration read_config(const std::filesystem::path& path) {
  return config_from_json(read_json(path));
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  out << text;
}

void write_config(const std::filesystem::path& path, const Configuration& config) {
  write_text(path, config_to_json(config).dump(2) + "\n");
}

Job job_from_json(const Json& doc, const std::filesystem::path& base_dir) {
  if (!doc.is_object()) throw InvalidArgument("job file must be a JSON object");
  Job job;
  try {
    const long long n = doc.at("n").get<long long>();
    if (n < 1) throw InvalidArgument("job \"n\" must be >= 1");
    job.n = static_cast<std::size_t>(n);
    job.objective.kind = parse_objective_kind(doc.at("objective").get<std::string>());
    if (doc.contains("k_r_excl") && !doc["k_r_excl"].is_null()) {
      job.objective.exclusion_radius = doc["k_r_excl"].get<double>();
    }
    job.mode = doc.value("mode", std::string("line"));
    job.seed = doc.value("seed", std::uint64_t{0});
    job.budget = doc.value("budget", std::string("desk"));
    if (doc.contains("seed_config") && !doc["seed_config"].is_null()) {
      std::filesystem::path p = doc["seed_config"].get<std::string>();
      job.seed_config = p.is_relative() && !base_dir.empty() ? base_dir / p : p;
    }
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("invalid job file: ") + e.what());
  }
  job.objective.validate();
  if (job.mode != "free" && job.mode != "line" && job.mode != "symline" && job.mode != "extend") {
    throw InvalidArgument("unknown mode '" + job.mode + "'");
  }
  if (job.budget != "desk" && job.budget != "paper") {
    throw InvalidArgument("unknown budget '" + job.budget + "'");
  }
  if (job.mode == "extend" && !job.seed_config) {
    throw InvalidArgument("extend mode needs \"seed_config\"");
  }
  return job;
}

Job read_job(const std::filesystem::path& path) {
  return job_from_json(read_json(path), path.parent_path());
}

SearchMode job_mode(const Job& job) {
  if (job.mode == "free") return Free3D{};
  if (job.mode == "line") return Line{};
  if (job.mode == "symline") return SymmetricLine{};
  return ExtendFromSeed{read_config(*job.seed_config)};
}

OptimizerSettings job_settings(const Job& job) {
  OptimizerSettings s = job.budget == "paper" ? OptimizerSettings::paper() : OptimizerSettings::desk();
  s.seed = job.seed;
  return s;
}

Json report_to_json(const OptimizationReport& report) {
  Json best = Json::array();
  for (const auto& c : report.best) {
    best.push_back({{"objective", c.objective},
                    {"defect_score", c.defect_score},
                    {"configuration", config_to_json(c.configuration)}});
  }
  Json trace = Json::array();
  for (const auto& t : report.trace) {
    trace.push_back({{"radius", t.radius},
                     {"restart", t.restart_index},
                     {"best_sample", t.best_sample},
                     {"polished", t.polished},
                     {"running_best", t.running_best},
                     {"iterations", t.iterations},
                     {"evaluations", t.evaluations},
                     {"defect_score", t.defect_score}});
  }
  Json objective{{"kind", to_string(report.objective.kind)}};
  if (report.objective.kind == ObjectiveKind::MinDecayRate) {
    objective["k_r_excl"] = report.objective.exclusion_radius;
  }
  return Json{{"n", report.n},
              {"objective", objective},
              {"mode", report.mode},
              {"seed", report.seed},
              {"evaluations", report.evaluations},
              {"wall_seconds", report.wall_seconds},
              {"skipped_radii", report.skipped_radii},
              {"best", best},
              {"trace", trace}};
}

std::string detuning_scan_csv(const std::vector<double>& detunings,
                              const std::vector<double>& sigma) {
  if (sigma.size() != detunings.size()) throw InvalidArgument("detuning scan: column lengths differ");
  std::ostringstream out;
  out << "delta_over_gamma,sigma_total\n";
  for (std::size_t i = 0; i < detunings.size(); ++i) {
    out << format_number(detunings[i]) << ',' << format_number(sigma[i]) << '\n';
  }
  return out.str();
}

std::string resonance_table_csv(const ResonanceSet& set) {
  std::ostringstream out;
  out << "n,re_lambda,im_lambda,delta_n,gamma_n,re_overlap,im_overlap,sigma_n_at_delta0\n";
  for (std::size_t n = 0; n < set.resonances.size(); ++n) {
    const Resonance& r = set.resonances[n];
    const cplx denom(-r.position(), -r.width());
    const double sigma0 = (r.overlap / denom).imag();
    out << n + 1 << ',' << format_number(r.eigenvalue.real()) << ','
        << format_number(r.eigenvalue.imag()) << ',' << format_number(r.position()) << ','
        << format_number(r.width()) << ',' << format_number(r.overlap.real()) << ','
        << format_number(r.overlap.imag()) << ',' << format_number(sigma0) << '\n';
  }
  return out.str();
}

std::string resonance_scan_csv(const std::vector<double>& detunings,
                               const std::vector<std::vector<double>>& per_resonance,
                               const std::vector<double>& total) {
  if (per_resonance.size() != detunings.size() || total.size() != detunings.size()) {
    throw InvalidArgument("resonance scan: one row per detuning expected");
  }
  const std::size_t count = per_resonance.empty() ? 0 : per_resonance.front().size();
  for (const auto& row : per_resonance) {
    if (row.size() != count) throw InvalidArgument("resonance scan: ragged rows");
  }
  std::ostringstream out;
  out << "delta_over_gamma";
  for (std::size_t n = 0; n < count; ++n) out << ",sigma_" << n + 1;
  out << ",sigma_total\n";
  for (std::size_t i = 0; i < detunings.size(); ++i) {
    out << format_number(detunings[i]);
    for (double v : per_resonance[i]) out << ',' << format_number(v);
    out << ',' << format_number(total[i]) << '\n';
  }
  return out.str();
}

std::string profile_csv(const AngularProfile& profile) {
  std::ostringstream out;
  out << "cos_theta,sigma\n";
  for (std::size_t i = 0; i < profile.cos_theta.size(); ++i) {
    out << format_number(profile.cos_theta[i]) << ',' << format_number(profile.sigma[i]) << '\n';
  }
  return out.str();
}

std::string stability_csv_header(bool with_quantiles) {
  std::string h = "n,delta_r,objective,mean,stderr,min,max,samples,resampled";
  if (with_quantiles) h += ",median,q05,q95";
  return h + "\n";
}

std::string stability_csv_row(const StabilityRequest& request, const StabilityResult& result,
                              bool with_quantiles) {
  std::ostringstream out;
  out << request.base.size() << ',' << format_number(request.delta_r) << ','
      << to_string(request.objective) << ',' << format_number(result.mean) << ','
      << format_number(result.standard_error) << ',' << format_number(result.min) << ','
      << format_number(result.max) << ',' << result.samples << ',' << result.resampled;
  if (with_quantiles) {
    out << ',' << format_number(result.median) << ',' << format_number(result.q05) << ','
        << format_number(result.q95);
  }
  out << '\n';
  return out.str();
}

}  // namespace coopscat::io
