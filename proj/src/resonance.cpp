#include "coopscat/resonance.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <limits>
#include <numbers>

#include "coopscat/errors.hpp"
#include "coopscat/quadrature.hpp"

namespace coopscat {

namespace {
constexpr cplx kI{0.0, 1.0};
}

double ResonanceSet::min_width() const { return resonances[narrowest()].width(); }

std::size_t ResonanceSet::narrowest() const {
  std::size_t best = 0;
  for (std::size_t n = 1; n < resonances.size(); ++n) {
    if (resonances[n].width() < resonances[best].width()) best = n;
  }
  return best;
}

ResonanceSet decompose(const GreenMatrix& green) {
  const Eigen::Index n = green.entries.rows();
  ResonanceSet set;
  set.resonances.reserve(static_cast<std::size_t>(n));
  if (n == 1) {
    set.resonances.push_back({cplx(0.0), Eigen::VectorXcd::Ones(1), cplx(1.0)});
    return set;
  }

  const Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(green.entries, true);
  if (solver.info() != Eigen::Success) throw EigenFailure("complex eigensolver did not converge");
  const Eigen::VectorXcd& values = solver.eigenvalues();
  Eigen::MatrixXcd vectors = solver.eigenvectors();
  if (!values.allFinite() || !vectors.allFinite()) {
    throw EigenFailure("eigensolver produced non-finite output");
  }

  set.defect_score = std::numeric_limits<double>::infinity();
  for (Eigen::Index k = 0; k < n; ++k) {
    vectors.col(k).normalize();
    Resonance r;
    r.eigenvalue = values[k];
    r.coefficients = vectors.col(k);
    // Unconjugated inner product: left eigenvector is the transpose.
    r.biorthogonal_norm = (r.coefficients.array() * r.coefficients.array()).sum();
    set.defect_score = std::min(set.defect_score, std::abs(r.biorthogonal_norm));
    set.resonances.push_back(std::move(r));
  }

  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(vectors);
  const auto& s = svd.singularValues();
  set.eigenvector_condition =
      s[n - 1] > 0.0 ? s[0] / s[n - 1] : std::numeric_limits<double>::infinity();

  for (Eigen::Index a = 0; a < n && !set.degenerate; ++a) {
    for (Eigen::Index b = a + 1; b < n; ++b) {
      if (std::abs(values[a] - values[b]) < kDegenerateSeparation) {
        set.degenerate = true;
        break;
      }
    }
  }

  set.diagonalizable = set.defect_score >= kDefectThreshold &&
                       set.eigenvector_condition <= kEigenvectorConditionThreshold;
  return set;
}

ResonanceSet analyze(const Configuration& config, const IncidentWave& wave) {
  ResonanceSet set = decompose(build_green_matrix(config));
  for (auto& r : set.resonances) r.overlap = resonance_overlap(r, config, wave);
  return set;
}

cplx emission_amplitude(const Eigen::VectorXcd& coefficients, const Configuration& config,
                        const Vec3& direction) {
  if (static_cast<std::size_t>(coefficients.size()) != config.size()) {
    throw InvalidArgument("coefficient count does not match configuration");
  }
  cplx g = 0.0;
  for (std::size_t i = 0; i < config.size(); ++i) {
    g += coefficients[static_cast<Eigen::Index>(i)] * std::exp(-kI * config[i].dot(direction));
  }
  return g;
}

cplx resonance_overlap(const Resonance& res, const Configuration& config,
                       const IncidentWave& wave) {
  const Vec3& k = wave.direction();
  return emission_amplitude(res.coefficients, config, k) *
         emission_amplitude(res.coefficients, config, -k) / res.biorthogonal_norm;
}

double resonance_cross_section(const ResonanceSet& set, std::size_t n,
                               const ScattererModel& model) {
  if (!set.diagonalizable) {
    throw NotDiagonalizable("Green matrix is (numerically) not diagonalisable");
  }
  const Resonance& r = set.resonances.at(n);
  const cplx denom(model.detuning() - r.position(), -r.width());
  return (r.overlap / denom).imag();
}

FluxDecay decay_rate_flux(const Eigen::VectorXcd& coefficients, const Configuration& config) {
  if (static_cast<std::size_t>(coefficients.size()) != config.size()) {
    throw InvalidArgument("coefficient count does not match configuration");
  }
  FluxDecay out{};
  double sum = coefficients.squaredNorm();
  for (std::size_t i = 0; i < config.size(); ++i) {
    for (std::size_t j = i + 1; j < config.size(); ++j) {
      const cplx cross = coefficients[static_cast<Eigen::Index>(i)] *
                         std::conj(coefficients[static_cast<Eigen::Index>(j)]);
      // (i, j) and (j, i) terms are complex conjugates of each other.
      sum += 2.0 * cross.real() * sinc(config.distance(i, j));
    }
  }
  out.interference_sum = sum;

  const SphereRule rule = sphere_rule_for(config.max_distance());
  double flux = 0.0;
  for (std::size_t q = 0; q < rule.directions.size(); ++q) {
    flux += rule.weights[q] * std::norm(emission_amplitude(coefficients, config, rule.directions[q]));
  }
  out.angular_flux = flux / (4.0 * std::numbers::pi);
  return out;
}

double resonance_upper_bound(const ResonanceSet& set, std::size_t n, const Configuration& config) {
  if (!set.diagonalizable) {
    throw NotDiagonalizable("Green matrix is (numerically) not diagonalisable");
  }
  const Resonance& r = set.resonances.at(n);
  const FluxDecay flux = decay_rate_flux(r.coefficients, config);
  return std::abs(r.overlap) * r.coefficients.squaredNorm() / flux.angular_flux;
}

double min_decay_rate(const Configuration& config) {
  const GreenMatrix g = build_green_matrix(config);
  if (g.size() == 1) return 1.0;
  const Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(g.entries, false);
  if (solver.info() != Eigen::Success) throw EigenFailure("complex eigensolver did not converge");
  return 1.0 + solver.eigenvalues().imag().minCoeff();
}

DefectReport defective_case_probe(const Configuration& config, const IncidentWave& wave) {
  const ResonanceSet set = decompose(build_green_matrix(config));
  DefectReport report{};
  report.defect_score = set.defect_score;
  report.eigenvector_condition = set.eigenvector_condition;
  report.diagonalizable = set.diagonalizable;
  report.total_cross_section = total_cross_section(config, wave, ScattererModel(0.0));
  report.cross_section_finite = std::isfinite(report.total_cross_section);
  return report;
}

Configuration defective_triangle() {
  const double pi = std::numbers::pi;
  const double sqrt2 = std::numbers::sqrt2;
  const double legs = 3.0 * pi * (4.0 + sqrt2) / 7.0;
  const double base = 3.0 * pi * (1.0 + 2.0 * sqrt2) / 14.0;
  const double height = std::sqrt(legs * legs - 0.25 * base * base);
  return Configuration({Vec3(0.0, 0.0, 0.0), Vec3(0.5 * base, height, 0.0),
                        Vec3(-0.5 * base, height, 0.0)},
                       "defective-triangle");
}

}  // namespace coopscat
