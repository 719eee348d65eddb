#pragma once

#include <cstdint>

#include "coopscat/geometry.hpp"
#include "coopscat/optimizer.hpp"
#include "coopscat/random.hpp"

namespace coopscat {

struct StabilityRequest {
  Configuration base;
  double delta_r = 0.0;  // k * delta r
  std::size_t samples = 100000;
  ObjectiveKind objective = ObjectiveKind::MaxCrossSection;
  std::uint64_t seed = 0;
  unsigned threads = 0;

  void validate() const;
};

struct StabilityResult {
  double mean = 0.0;
  double standard_error = 0.0;  // sample std / sqrt(samples)
  std::size_t samples = 0;
  double min = 0.0;
  double max = 0.0;
  std::size_t resampled = 0;  // perturbations redrawn because scatterers coincided
  std::size_t failures = 0;   // samples whose objective could not be evaluated
  // Diagnostics only.
  double median = 0.0;
  double q05 = 0.0;
  double q95 = 0.0;
};

/// Pairs closer than this after a perturbation trigger a redraw.
inline constexpr double kPerturbationCoincidence = 1e-9;

/// Each position displaced independently and uniformly inside a ball of radius delta_r.
Configuration perturb(const Configuration& base, double delta_r, Rng& rng);

/// Monte-Carlo mean of the objective over perturbed copies of the base
/// configuration. Sample i draws from its own stream derived from (seed, i),
/// and the values are summed pairwise in index order, so the result does not
/// depend on the thread count. Throws ObjectiveFailure if more than 1% of the
/// samples cannot be evaluated.
StabilityResult stability_scan(const StabilityRequest& request);

/// Pairwise (cascade) summation.
double pairwise_sum(const double* values, std::size_t count);

}  // namespace coopscat
