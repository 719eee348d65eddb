#pragma once

#include <vector>

#include "coopscat/geometry.hpp"

namespace coopscat {

/// Nodes and weights on [-1, 1].
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre rule of the given order (Newton iteration on the
/// three-term recurrence). Exact for polynomials of degree 2*order-1.
QuadratureRule gauss_legendre(int order);

/// Product rule over the unit sphere: Gauss-Legendre in cos(theta) times the
/// trapezoid rule in phi. Weights sum to 4*pi.
struct SphereRule {
  std::vector<Vec3> directions;
  std::vector<double> weights;
};

SphereRule product_sphere_rule(int polar_order, int azimuth_count);

/// Gauss-Legendre order that resolves e^{i d cos(theta)} for phase
/// differences up to `max_distance`: 8 + 2*ceil(max_distance).
int angular_order(double max_distance);

/// Sphere rule sized for a configuration of the given diameter.
SphereRule sphere_rule_for(double max_distance);

}  // namespace coopscat
