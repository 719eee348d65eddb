#include "coopscat/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "coopscat/errors.hpp"
#include "coopscat/parallel.hpp"

namespace coopscat {

namespace {
constexpr int kMaxRedraws = 1000;
}

void StabilityRequest::validate() const {
  if (!(delta_r >= 0.0) || !std::isfinite(delta_r)) throw InvalidArgument("delta_r must be >= 0");
  if (samples < 1) throw InvalidArgument("stability scan needs at least one sample");
}

Configuration perturb(const Configuration& base, double delta_r, Rng& rng) {
  if (!(delta_r >= 0.0)) throw InvalidArgument("delta_r must be >= 0");
  std::vector<Vec3> pos = base.positions();
  if (delta_r == 0.0) return Configuration(std::move(pos), base.label());
  for (auto& p : pos) p += uniform_in_ball(rng, delta_r);
  return Configuration(std::move(pos), base.label());
}

double pairwise_sum(const double* values, std::size_t count) {
  if (count <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < count; ++i) s += values[i];
    return s;
  }
  const std::size_t half = count / 2;
  return pairwise_sum(values, half) + pairwise_sum(values + half, count - half);
}

StabilityResult stability_scan(const StabilityRequest& request) {
  request.validate();
  const ObjectiveSpec objective{request.objective, 0.0};
  const std::size_t n = request.samples;
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> values(n, nan);
  std::vector<unsigned> redraws(n, 0);

  parallel_for(n, resolve_threads(request.threads), [&](std::size_t i) {
    Rng rng(derive_seed({request.seed, i}));
    for (int attempt = 0; attempt <= kMaxRedraws; ++attempt) {
      const Configuration c = perturb(request.base, request.delta_r, rng);
      if (c.size() > 1 && c.min_distance() < kPerturbationCoincidence) {
        ++redraws[i];
        continue;
      }
      try {
        values[i] = objective.evaluate(c);
      } catch (const Error&) {
        values[i] = nan;
      }
      break;
    }
  });

  StabilityResult result;
  std::vector<double> ok;
  ok.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    result.resampled += redraws[i];
    if (std::isfinite(values[i])) {
      ok.push_back(values[i]);
    } else {
      ++result.failures;
    }
  }
  if (static_cast<double>(result.failures) > 0.01 * static_cast<double>(n)) {
    throw ObjectiveFailure(std::to_string(result.failures) + " of " + std::to_string(n) +
                           " perturbed samples could not be evaluated");
  }

  const std::size_t m = ok.size();
  result.samples = m;
  const double raw_mean = pairwise_sum(ok.data(), m) / static_cast<double>(m);
  std::vector<double> sorted = ok;
  std::sort(sorted.begin(), sorted.end());
  result.min = sorted.front();
  result.max = sorted.back();
  // a pairwise mean can miss a constant sample by an ulp
  result.mean = std::clamp(raw_mean, result.min, result.max);

  std::vector<double> sq(m);
  for (std::size_t i = 0; i < m; ++i) sq[i] = (ok[i] - result.mean) * (ok[i] - result.mean);
  const double var = m > 1 ? pairwise_sum(sq.data(), m) / static_cast<double>(m - 1) : 0.0;
  result.standard_error = std::sqrt(var / static_cast<double>(m));

  auto quantile = [&](double q) {
    const double pos = q * static_cast<double>(m - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, m - 1);
    return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
  };
  result.median = quantile(0.5);
  result.q05 = quantile(0.05);
  result.q95 = quantile(0.95);
  return result;
}

}  // namespace coopscat
