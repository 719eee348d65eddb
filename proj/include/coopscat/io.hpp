#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "coopscat/scatter_core.hpp"

#include "coopscat/geometry.hpp"
#include "coopscat/optimizer.hpp"
#include "coopscat/resonance.hpp"
#include "coopscat/stability.hpp"

namespace coopscat::io {

using Json = nlohmann::json;

/// 12 significant digits, the precision used for every emitted number.
std::string format_number(double value);

// Configuration documents: {"k_positions": [[x, y, z], ...], "label": "..."}
Json config_to_json(const Configuration& config);
Configuration config_from_json(const Json& doc);
Configuration read_config(const std::filesystem::path& path);
void write_config(const std::filesystem::path& path, const Configuration& config);

/// Optimisation job file:
/// {"n": int, "objective": "sigma"|"gamma_min", "k_r_excl": float?,
///  "mode": "free"|"line"|"symline"|"extend", "seed": int,
///  "budget": "desk"|"paper", "seed_config": path?}
struct Job {
  std::size_t n = 0;
  ObjectiveSpec objective;
  std::string mode;
  std::uint64_t seed = 0;
  std::string budget = "desk";
  std::optional<std::filesystem::path> seed_config;
};

Job job_from_json(const Json& doc, const std::filesystem::path& base_dir = {});
Job read_job(const std::filesystem::path& path);
SearchMode job_mode(const Job& job);
OptimizerSettings job_settings(const Job& job);

Json report_to_json(const OptimizationReport& report);

void write_text(const std::filesystem::path& path, const std::string& text);

// CSV builders. Every table starts with its header row.
std::string detuning_scan_csv(const std::vector<double>& detunings,
                              const std::vector<double>& sigma);
std::string resonance_table_csv(const ResonanceSet& set);
/// One column per resonance ("sigma_1".."sigma_N") plus "sigma_total".
std::string resonance_scan_csv(const std::vector<double>& detunings,
                               const std::vector<std::vector<double>>& per_resonance,
                               const std::vector<double>& total);
std::string profile_csv(const AngularProfile& profile);
std::string stability_csv_header(bool with_quantiles);
std::string stability_csv_row(const StabilityRequest& request, const StabilityResult& result,
                              bool with_quantiles);

}  // namespace coopscat::io
