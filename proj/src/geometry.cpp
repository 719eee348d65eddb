#include "coopscat/geometry.hpp"

#include <cmath>
#include <limits>

#include "coopscat/errors.hpp"

namespace coopscat {

Configuration::Configuration(std::vector<Vec3> positions, std::string label)
    : positions_(std::move(positions)), label_(std::move(label)) {
  if (positions_.empty()) {
    throw InvalidArgument("configuration needs at least one scatterer");
  }
  for (const auto& p : positions_) {
    if (!p.allFinite()) throw InvalidArgument("non-finite scatterer position");
  }
}

Configuration Configuration::on_axis(std::span<const double> z, std::string label) {
  std::vector<Vec3> positions;
  positions.reserve(z.size());
  for (double zi : z) positions.emplace_back(0.0, 0.0, zi);
  return Configuration(std::move(positions), std::move(label));
}

double Configuration::distance(std::size_t i, std::size_t j) const {
  return (positions_[i] - positions_[j]).norm();
}

double Configuration::min_distance() const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) best = std::min(best, distance(i, j));
  }
  return best;
}

double Configuration::max_distance() const {
  double best = 0.0;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) best = std::max(best, distance(i, j));
  }
  return best;
}

Configuration Configuration::translated(const Vec3& offset) const {
  std::vector<Vec3> moved = positions_;
  for (auto& p : moved) p += offset;
  return Configuration(std::move(moved), label_);
}

Configuration Configuration::rotated(const Eigen::Matrix3d& rotation) const {
  std::vector<Vec3> moved = positions_;
  for (auto& p : moved) p = rotation * p;
  return Configuration(std::move(moved), label_);
}

bool Configuration::is_collinear_with(const Vec3& axis, double tol) const {
  const Vec3& origin = positions_.front();
  for (const auto& p : positions_) {
    const Vec3 d = p - origin;
    if ((d - d.dot(axis) * axis).norm() > tol) return false;
  }
  return true;
}

std::vector<double> Configuration::coordinates_along(const Vec3& axis) const {
  std::vector<double> out;
  out.reserve(size());
  for (const auto& p : positions_) out.push_back(p.dot(axis));
  return out;
}

std::vector<double> Configuration::z_values() const {
  std::vector<double> z;
  z.reserve(size());
  for (const auto& p : positions_) {
    if (std::abs(p.x()) > 1e-12 || std::abs(p.y()) > 1e-12) {
      throw NotCollinear("configuration is not on the z-axis");
    }
    z.push_back(p.z());
  }
  return z;
}

}  // namespace coopscat
