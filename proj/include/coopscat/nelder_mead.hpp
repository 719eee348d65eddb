#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <functional>

namespace coopscat {

struct SimplexSettings {
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
  double initial_step = 0.1;
  /// Stop when |f_worst - f_best| <= function_tolerance * max(|f_best|, |f_worst|).
  double function_tolerance = 1e-12;
  /// Stop when every vertex is within this distance of the best vertex.
  double domain_tolerance = 1e-10;
  std::size_t max_iterations = 20000;
};

struct SimplexResult {
  Eigen::VectorXd point;
  double value = 0.0;
  std::size_t iterations = 0;
  std::size_t evaluations = 0;
  bool converged = false;
};

using Objective = std::function<double(const Eigen::VectorXd&)>;

/// Downhill simplex minimisation. Non-finite evaluations are treated as +inf,
/// so the offending vertex is never accepted. Throws NonFiniteObjective if the
/// objective is non-finite at `start`, or if no finite initial simplex can be
/// built around it.
SimplexResult nelder_mead(const Objective& objective, const Eigen::VectorXd& start,
                          const SimplexSettings& settings = {});

}  // namespace coopscat
