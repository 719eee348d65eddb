#include "coopscat/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "coopscat/errors.hpp"

namespace coopscat {

QuadratureRule gauss_legendre(int order) {
  if (order < 1) throw InvalidArgument("Gauss-Legendre order must be >= 1");
  const auto n = static_cast<std::size_t>(order);
  QuadratureRule rule{std::vector<double>(n), std::vector<double>(n)};
  const std::size_t half = (n + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    // Tricomi initial guess for the i-th root, then Newton.
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double kk = static_cast<double>(k);
        const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged root for the weight.
    double p0 = 1.0;
    double p1 = x;
    for (std::size_t k = 2; k <= n; ++k) {
      const double kk = static_cast<double>(k);
      const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
      p0 = p1;
      p1 = p2;
    }
    if (n == 1) {
      x = 0.0;
      dp = 1.0;
    } else {
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

SphereRule product_sphere_rule(int polar_order, int azimuth_count) {
  if (azimuth_count < 1) throw InvalidArgument("azimuth count must be >= 1");
  const QuadratureRule polar = gauss_legendre(polar_order);
  const double dphi = 2.0 * std::numbers::pi / azimuth_count;
  SphereRule rule;
  rule.directions.reserve(polar.nodes.size() * static_cast<std::size_t>(azimuth_count));
  rule.weights.reserve(rule.directions.capacity());
  for (std::size_t i = 0; i < polar.nodes.size(); ++i) {
    const double u = polar.nodes[i];
    const double s = std::sqrt(std::max(0.0, 1.0 - u * u));
    for (int j = 0; j < azimuth_count; ++j) {
      const double phi = dphi * j;
      rule.directions.emplace_back(s * std::cos(phi), s * std::sin(phi), u);
      rule.weights.push_back(polar.weights[i] * dphi);
    }
  }
  return rule;
}

int angular_order(double max_distance) {
  return 8 + 2 * static_cast<int>(std::ceil(max_distance));
}

SphereRule sphere_rule_for(double max_distance) {
  const int order = angular_order(max_distance);
  return product_sphere_rule(order, 2 * order);
}

}  // namespace coopscat
