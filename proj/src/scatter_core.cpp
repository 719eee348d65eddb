#include "coopscat/scatter_core.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "coopscat/errors.hpp"
#include "coopscat/quadrature.hpp"

namespace coopscat {

namespace {

constexpr cplx kI{0.0, 1.0};

}  // namespace

ScattererModel::ScattererModel(double detuning) : detuning_(detuning) {
  if (!std::isfinite(detuning)) throw InvalidArgument("detuning must be finite");
}

IncidentWave::IncidentWave(const Vec3& direction, cplx amplitude)
    : direction_(direction), amplitude_(amplitude) {
  if (!direction.allFinite() || std::abs(direction.norm() - 1.0) > 1e-12) {
    throw InvalidArgument("incident direction must be a unit vector");
  }
  if (!std::isfinite(amplitude.real()) || !std::isfinite(amplitude.imag()) ||
      amplitude == cplx(0.0)) {
    throw InvalidArgument("incident amplitude must be finite and non-zero");
  }
}

double sinc(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

std::uint64_t fingerprint(const Configuration& config) {
  // FNV-1a over the raw coordinate bits.
  std::uint64_t h = 1469598103934665603ULL;
  for (const auto& p : config.positions()) {
    for (int c = 0; c < 3; ++c) {
      h ^= std::bit_cast<std::uint64_t>(p[c]);
      h *= 1099511628211ULL;
    }
  }
  return h;
}

GreenMatrix build_green_matrix(const Configuration& config) {
  const auto n = static_cast<Eigen::Index>(config.size());
  GreenMatrix g{Eigen::MatrixXcd::Zero(n, n), fingerprint(config)};
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double d = config.distance(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (!(d >= kCoincidenceThreshold)) {
        throw CoincidentScatterers("scatterers " + std::to_string(i) + " and " +
                                   std::to_string(j) + " coincide");
      }
      const cplx v = std::exp(kI * d) / d;
      g.entries(i, j) = v;
      g.entries(j, i) = v;
    }
  }
  return g;
}

FieldVector incident_field(const Configuration& config, const IncidentWave& wave) {
  FieldVector psi0(static_cast<Eigen::Index>(config.size()));
  for (std::size_t i = 0; i < config.size(); ++i) {
    psi0[static_cast<Eigen::Index>(i)] =
        wave.amplitude() * std::exp(kI * wave.direction().dot(config[i]));
  }
  return psi0;
}

FieldVector solve_fields(const GreenMatrix& green, const FieldVector& psi0,
                         const ScattererModel& model) {
  const auto n = green.entries.rows();
  if (psi0.size() != n) throw InvalidArgument("incident field length mismatch");
  // (delta - i - G) x = Psi0  and  Psi = (delta - i) x.
  const cplx shift(model.detuning(), -1.0);
  Eigen::MatrixXcd system = -green.entries;
  system.diagonal().array() += shift;
  const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(system);
  const double rcond = lu.rcond();
  if (!(rcond > kSingularRcond)) {
    throw SingularSystem("Foldy-Lax system is singular (rcond " + std::to_string(rcond) + ")");
  }
  FieldVector x = lu.solve(psi0);
  if (!x.allFinite()) throw SingularSystem("Foldy-Lax solve produced non-finite fields");
  return shift * x;
}

Scattering::Scattering(const Configuration& config, const IncidentWave& wave,
                       const ScattererModel& model)
    : config_(config), wave_(wave), model_(model),
      incident_(incident_field(config, wave)),
      fields_(solve_fields(build_green_matrix(config), incident_, model)) {}

double Scattering::total_cross_section() const {
  // Im <Psi0|(delta - i - G)^{-1}|Psi0> / |Psi0|^2 with (delta - i - G)^{-1} Psi0 = f Psi.
  const cplx kf = model_.amplitude();
  const cplx overlap = incident_.dot(kf * fields_);  // conjugates the left operand
  return overlap.imag() / std::norm(wave_.amplitude());
}

cplx Scattering::far_field_amplitude(const Vec3& out_direction) const {
  const cplx kf = model_.amplitude();
  cplx sum = 0.0;
  for (std::size_t i = 0; i < config_.size(); ++i) {
    sum += std::exp(-kI * out_direction.dot(config_[i])) * fields_[static_cast<Eigen::Index>(i)];
  }
  return kf * sum / wave_.amplitude();
}

double Scattering::differential_cross_section(const Vec3& out_direction) const {
  return std::norm(far_field_amplitude(out_direction));
}

double Scattering::integrated_cross_section() const {
  const SphereRule rule = sphere_rule_for(config_.max_distance());
  double sum = 0.0;
  for (std::size_t q = 0; q < rule.directions.size(); ++q) {
    sum += rule.weights[q] * differential_cross_section(rule.directions[q]);
  }
  return sum / (4.0 * std::numbers::pi);
}

double total_cross_section(const Configuration& config, const IncidentWave& wave,
                           const ScattererModel& model) {
  return Scattering(config, wave, model).total_cross_section();
}

double differential_cross_section(const Configuration& config, const IncidentWave& wave,
                                  const ScattererModel& model, const Vec3& out_direction) {
  return Scattering(config, wave, model).differential_cross_section(out_direction);
}

namespace {

// |far-field amplitude|^2 / 2 at k_out = u * axis, i.e. 2 pi dsigma/dOmega in
// units of sigma_max^(1).
class AxialProfile {
 public:
  AxialProfile(const Configuration& config, const IncidentWave& wave,
               const ScattererModel& model)
      : solution_(config, wave, model) {
    if (!config.is_collinear_with(wave.direction(), 1e-9)) {
      throw NotCollinear("angular profile needs scatterers on a line parallel to the wave");
    }
  }

  double operator()(double u) const {
    return 0.5 * solution_.differential_cross_section(u * solution_.wave().direction());
  }

  const Scattering& solution() const { return solution_; }

 private:
  Scattering solution_;
};

}  // namespace

AngularProfile angular_profile(const Configuration& config, const IncidentWave& wave,
                               const ScattererModel& model, int n_grid) {
  if (n_grid < 2) throw InvalidArgument("profile grid needs at least two points");
  const AxialProfile profile(config, wave, model);
  AngularProfile out;
  out.cos_theta.resize(static_cast<std::size_t>(n_grid));
  out.sigma.resize(out.cos_theta.size());
  for (int k = 0; k < n_grid; ++k) {
    const double u = -1.0 + 2.0 * k / (n_grid - 1);
    out.cos_theta[static_cast<std::size_t>(k)] = u;
    out.sigma[static_cast<std::size_t>(k)] = profile(u);
  }
  out.cos_theta.back() = 1.0;
  return out;
}

double integrate_angular_profile(const Configuration& config, const IncidentWave& wave,
                                 const ScattererModel& model) {
  const AxialProfile profile(config, wave, model);
  const QuadratureRule rule = gauss_legendre(angular_order(config.max_distance()));
  double sum = 0.0;
  for (std::size_t q = 0; q < rule.nodes.size(); ++q) sum += rule.weights[q] * profile(rule.nodes[q]);
  return sum;
}

double angular_identity_check(const Configuration& config) {
  const SphereRule rule = sphere_rule_for(config.max_distance());
  double worst = 0.0;
  for (std::size_t i = 0; i < config.size(); ++i) {
    for (std::size_t j = i; j < config.size(); ++j) {
      const Vec3 diff = config[i] - config[j];
      cplx sum = 0.0;
      for (std::size_t q = 0; q < rule.directions.size(); ++q) {
        sum += rule.weights[q] * std::exp(-kI * rule.directions[q].dot(diff));
      }
      const double exact = 4.0 * std::numbers::pi * sinc(diff.norm());
      worst = std::max(worst, std::abs(sum - exact));
    }
  }
  return worst;
}

}  // namespace coopscat
