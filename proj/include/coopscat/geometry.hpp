#pragma once

#include <Eigen/Dense>
#include <span>
#include <string>
#include <vector>

namespace coopscat {

using Vec3 = Eigen::Vector3d;

/// Positions of N point scatterers in units of 1/k (k = 1 everywhere in the
/// library, so every length is the dimensionless product k*x).
///
/// Construction only checks N >= 1 and finiteness; coincident scatterers are
/// rejected when the Green matrix is built.
class Configuration {
 public:
  explicit Configuration(std::vector<Vec3> positions, std::string label = {});

  /// Scatterers on the z-axis at the given k*z values.
  static Configuration on_axis(std::span<const double> z, std::string label = {});

  std::size_t size() const noexcept { return positions_.size(); }
  const std::vector<Vec3>& positions() const noexcept { return positions_; }
  const Vec3& operator[](std::size_t i) const { return positions_[i]; }
  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  double distance(std::size_t i, std::size_t j) const;
  double min_distance() const;  // +inf for N == 1
  double max_distance() const;  // 0 for N == 1

  Configuration translated(const Vec3& offset) const;
  Configuration rotated(const Eigen::Matrix3d& rotation) const;

  /// True if every position lies on one line parallel to `axis` (unit vector),
  /// i.e. the transverse offset from the first scatterer's line is below `tol`.
  bool is_collinear_with(const Vec3& axis, double tol = 1e-9) const;

  /// Signed coordinates along `axis` (unit vector).
  std::vector<double> coordinates_along(const Vec3& axis) const;

  /// z-values if the configuration lies on the z-axis; throws otherwise.
  std::vector<double> z_values() const;

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.positions_ == b.positions_ && a.label_ == b.label_;
  }

 private:
  std::vector<Vec3> positions_;
  std::string label_;
};

}  // namespace coopscat
