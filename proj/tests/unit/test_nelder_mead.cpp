#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "coopscat/errors.hpp"
#include "coopscat/nelder_mead.hpp"
#include "coopscat/optimizer.hpp"
#include "coopscat/refdata.hpp"
#include "coopscat/scatter_core.hpp"
#include "oracles.hpp"

using namespace coopscat;

TEST_CASE("quadratic bowl") {
  Eigen::VectorXd target(4);
  target << 1.0, -2.0, 0.5, 3.0;
  const Objective bowl = [&](const Eigen::VectorXd& x) { return (x - target).squaredNorm(); };
  for (const Eigen::VectorXd& start :
       {Eigen::VectorXd(Eigen::VectorXd::Zero(4)), Eigen::VectorXd(Eigen::VectorXd::Constant(4, 10.0))}) {
    SimplexSettings s;
    s.initial_step = 1.0;
    const SimplexResult r = nelder_mead(bowl, start, s);
    CHECK(r.converged);
    CHECK((r.point - target).norm() < 1e-6);
    CHECK(r.value <= bowl(start));
  }
}

TEST_CASE("Rosenbrock valley") {
  const Objective rosen = [](const Eigen::VectorXd& x) {
    return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
  };
  Eigen::VectorXd start(2);
  start << -1.2, 1.0;
  const SimplexResult r = nelder_mead(rosen, start);
  CHECK(std::abs(r.point[0] - 1.0) < 1e-5);
  CHECK(std::abs(r.point[1] - 1.0) < 1e-5);
}

TEST_CASE("non-finite values are never accepted") {
  // minimum at x = -1 lies behind a wall of NaN for x < 0
  const Objective f = [](const Eigen::VectorXd& x) {
    if (x[0] < 0.0) return std::numeric_limits<double>::quiet_NaN();
    return (x[0] + 1.0) * (x[0] + 1.0);
  };
  Eigen::VectorXd start(1);
  start << 2.0;
  const SimplexResult r = nelder_mead(f, start);
  CHECK(std::isfinite(r.value));
  CHECK(r.point[0] >= 0.0);
  CHECK(r.point[0] < 1e-6);

  Eigen::VectorXd bad(1);
  bad << -1.0;
  CHECK_THROWS_AS(nelder_mead(f, bad), NonFiniteObjective);
}

TEST_CASE("iteration cap") {
  const Objective f = [](const Eigen::VectorXd& x) { return x.squaredNorm(); };
  SimplexSettings s;
  s.max_iterations = 5;
  const SimplexResult r = nelder_mead(f, Eigen::VectorXd::Constant(3, 1.0), s);
  CHECK(r.iterations <= 5);
  CHECK_FALSE(r.converged);
}

TEST_CASE("two scatterers: simplex matches a dense gap scan") {
  // oracle: closed-form sigma(d) on a 1e-4 grid over (0, 12]
  double best = 0.0;
  double best_d = 0.0;
  for (int k = 1; k <= 120000; ++k) {
    const double d = 1e-4 * k;
    const double s = oracle::two_scatterer_sigma(d, 0.0);
    if (s > best) {
      best = s;
      best_d = d;
    }
  }
  OptimizerSettings settings = OptimizerSettings::desk();
  settings.random_samples_per_radius = 50;
  settings.restarts_per_radius = 4;
  settings.seed = 7;
  const OptimizationReport r = optimize_line(2, ObjectiveSpec::max_cross_section(), false, settings);
  CHECK(std::abs(r.top().objective - best) < 1e-4);
  CHECK(std::abs(r.top().configuration.distance(0, 1) - best_d) < 1e-3);
}

TEST_CASE("published narrow N = 8 is a local optimum") {
  const ReferenceEntry& e = get_reference(8, Family::Narrow);
  const double start = total_cross_section(e.configuration(), IncidentWave(), ScattererModel(0.0));
  OptimizerSettings settings = OptimizerSettings::desk();
  const OptimizationReport r =
      polish_line(e.configuration(), ObjectiveSpec::max_cross_section(), settings);
  CHECK(r.top().objective >= start - 1e-9);
  CHECK(r.top().objective <= 1.005 * start);
}
