#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "coopscat/geometry.hpp"

namespace coopscat {

using cplx = std::complex<double>;
using FieldVector = Eigen::VectorXcd;

/// Identical resonant point scatterers characterised by the detuning delta/gamma.
/// The amplitude k*f = 1/(delta/gamma - i) satisfies k|f|^2 = Im f exactly.
class ScattererModel {
 public:
  ScattererModel() = default;
  explicit ScattererModel(double detuning);

  double detuning() const noexcept { return detuning_; }
  /// k*f
  cplx amplitude() const noexcept { return 1.0 / cplx(detuning_, -1.0); }

 private:
  double detuning_ = 0.0;
};

/// Plane wave Psi0 * exp(i k_in . r) with |k_in| = 1.
class IncidentWave {
 public:
  IncidentWave() = default;
  explicit IncidentWave(const Vec3& direction, cplx amplitude = 1.0);

  const Vec3& direction() const noexcept { return direction_; }
  cplx amplitude() const noexcept { return amplitude_; }
  IncidentWave reversed() const { return IncidentWave(-direction_, amplitude_); }

 private:
  Vec3 direction_{0.0, 0.0, 1.0};
  cplx amplitude_{1.0, 0.0};
};

/// Complex symmetric inter-scatterer propagator, G_ij = e^{i d_ij}/d_ij, G_ii = 0.
struct GreenMatrix {
  Eigen::MatrixXcd entries;
  std::uint64_t source_tag = 0;  // fingerprint of the source positions

  std::size_t size() const noexcept { return static_cast<std::size_t>(entries.rows()); }
};

/// Pairs closer than this are rejected as coincident.
inline constexpr double kCoincidenceThreshold = 1e-12;
/// Reciprocal-condition floor below which a Foldy-Lax solve is refused.
inline constexpr double kSingularRcond = 1e-14;

std::uint64_t fingerprint(const Configuration& config);

GreenMatrix build_green_matrix(const Configuration& config);

FieldVector incident_field(const Configuration& config, const IncidentWave& wave);

/// Solves Psi = Psi0 + k f G Psi by LU with partial pivoting.
/// Throws SingularSystem if the estimated condition number exceeds 1e14.
FieldVector solve_fields(const GreenMatrix& green, const FieldVector& psi0,
                         const ScattererModel& model);

/// Fields at the scatterers together with everything needed to evaluate
/// far-field quantities without re-solving.
class Scattering {
 public:
  Scattering(const Configuration& config, const IncidentWave& wave,
             const ScattererModel& model);

  const Configuration& configuration() const noexcept { return config_; }
  const IncidentWave& wave() const noexcept { return wave_; }
  const FieldVector& fields() const noexcept { return fields_; }
  const FieldVector& incident() const noexcept { return incident_; }

  /// sigma / sigma_max^(1) from the optical theorem.
  double total_cross_section() const;
  /// Far-field amplitude sum_i e^{-i k_out.r_i} f Psi_i / Psi0.
  cplx far_field_amplitude(const Vec3& out_direction) const;
  /// d sigma / d Omega in units of 1/k^2.
  double differential_cross_section(const Vec3& out_direction) const;
  /// Angular quadrature of the differential cross section, in units of sigma_max^(1).
  double integrated_cross_section() const;

 private:
  Configuration config_;
  IncidentWave wave_;
  ScattererModel model_;
  FieldVector incident_;
  FieldVector fields_;
};

double total_cross_section(const Configuration& config, const IncidentWave& wave,
                           const ScattererModel& model);

double differential_cross_section(const Configuration& config, const IncidentWave& wave,
                                  const ScattererModel& model, const Vec3& out_direction);

/// sigma(cos theta) in units of sigma_max^(1) on a uniform cos(theta) grid,
/// for a configuration on a line parallel to the incident direction.
struct AngularProfile {
  std::vector<double> cos_theta;
  std::vector<double> sigma;
};

/// Throws NotCollinear unless all scatterers share a line parallel to the wave.
AngularProfile angular_profile(const Configuration& config, const IncidentWave& wave,
                               const ScattererModel& model, int n_grid);

/// Gauss-Legendre integral over cos(theta) of the angular profile; equals the
/// total cross section for collinear configurations.
double integrate_angular_profile(const Configuration& config, const IncidentWave& wave,
                                 const ScattererModel& model);

/// max over (i, j) of |quadrature of the solid-angle integral of
/// e^{-i k.(r_i - r_j)} - 4 pi sinc(d_ij)|.
double angular_identity_check(const Configuration& config);

/// sin(x)/x with the removable singularity filled in.
double sinc(double x);

}  // namespace coopscat
