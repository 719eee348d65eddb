#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "coopscat/scatter_core.hpp"

namespace coopscat {

/// One eigenmode of the Green matrix viewed as a scattering resonance.
///
/// `coefficients` is the right eigenvector with sum |c_i|^2 = 1. Because G is
/// complex symmetric the left eigenvector is the unconjugated transpose of the
/// right one, so the biorthogonal normalisation is sum c_i^2 (stored in
/// `biorthogonal_norm`).
struct Resonance {
  cplx eigenvalue;
  Eigen::VectorXcd coefficients;
  cplx biorthogonal_norm;
  /// g(k_in) g(-k_in) / sum c_i^2; zero until attached to an incident wave.
  cplx overlap{0.0, 0.0};

  /// delta_n / gamma
  double position() const noexcept { return eigenvalue.real(); }
  /// gamma_n / gamma
  double width() const noexcept { return 1.0 + eigenvalue.imag(); }
};

struct ResonanceSet {
  std::vector<Resonance> resonances;
  bool diagonalizable = true;
  /// min_n |sum_i (c_i^(n))^2|
  double defect_score = 1.0;
  /// 2-norm condition number of the right-eigenvector matrix.
  double eigenvector_condition = 1.0;
  /// Some pair of eigenvalues closer than kDegenerateSeparation.
  bool degenerate = false;

  double min_width() const;
  std::size_t narrowest() const;
};

/// Near-defective when sum c^2 is below this ...
inline constexpr double kDefectThreshold = 1e-6;
/// ... or when the eigenvector matrix is this badly conditioned.
inline constexpr double kEigenvectorConditionThreshold = 1e6;
inline constexpr double kDegenerateSeparation = 1e-10;

/// Eigen-decomposition of G with a general complex eigensolver.
/// Throws EigenFailure if the solver does not converge.
ResonanceSet decompose(const GreenMatrix& green);

/// Decomposition plus per-resonance overlaps with the given wave.
ResonanceSet analyze(const Configuration& config, const IncidentWave& wave = IncidentWave());

/// g_n(k) = sum_i c_i e^{-i r_i . k}
cplx emission_amplitude(const Eigen::VectorXcd& coefficients, const Configuration& config,
                        const Vec3& direction);

/// g(k_in) g(-k_in) / sum c_i^2
cplx resonance_overlap(const Resonance& res, const Configuration& config,
                       const IncidentWave& wave);

/// sigma_n(delta) / sigma_max^(1). Throws NotDiagonalizable if the parent set is
/// flagged; may be negative (Fano-like profile).
double resonance_cross_section(const ResonanceSet& set, std::size_t n,
                               const ScattererModel& model);

/// Decay rate of a normalised state computed two ways: the interference sum
/// 1 + sum_{i != j} c_i c_j^* sinc(d_ij) and the angular flux integral of |g|^2.
struct FluxDecay {
  double interference_sum;
  double angular_flux;
};

FluxDecay decay_rate_flux(const Eigen::VectorXcd& coefficients, const Configuration& config);

/// Bound on sigma_n / sigma_max^(1): |overlap| * sum|c|^2 / (flux integral of |g|^2).
double resonance_upper_bound(const ResonanceSet& set, std::size_t n, const Configuration& config);

/// gamma_min / gamma over all resonances.
double min_decay_rate(const Configuration& config);

struct DefectReport {
  double defect_score;
  double eigenvector_condition;
  bool diagonalizable;
  double total_cross_section;  // via the direct linear solve at delta = 0
  bool cross_section_finite;
};

DefectReport defective_case_probe(const Configuration& config,
                                  const IncidentWave& wave = IncidentWave());

/// Planar isosceles triangle with k r_12 = k r_13 = 3 pi (4 + sqrt 2)/7 and
/// k r_23 = 3 pi (1 + 2 sqrt 2)/14, at which G is not diagonalisable.
Configuration defective_triangle();

}  // namespace coopscat
