#include "coopscat/optimizer.hpp"

#include <type_traits>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>

#include "coopscat/errors.hpp"
#include "coopscat/parallel.hpp"
#include "coopscat/random.hpp"
#include "coopscat/resonance.hpp"
#include "coopscat/scatter_core.hpp"

namespace coopscat {

std::string to_string(ObjectiveKind kind) {
  return kind == ObjectiveKind::MaxCrossSection ? "sigma" : "gamma_min";
}

ObjectiveKind parse_objective_kind(const std::string& name) {
  if (name == "sigma") return ObjectiveKind::MaxCrossSection;
  if (name == "gamma_min") return ObjectiveKind::MinDecayRate;
  throw InvalidArgument("unknown objective '" + name + "' (expected sigma or gamma_min)");
}

ObjectiveSpec ObjectiveSpec::min_decay_rate(double exclusion_radius) {
  ObjectiveSpec spec{ObjectiveKind::MinDecayRate, exclusion_radius};
  spec.validate();
  return spec;
}

void ObjectiveSpec::validate() const {
  if (kind == ObjectiveKind::MinDecayRate &&
      !(std::isfinite(exclusion_radius) && exclusion_radius > 0.0)) {
    throw InvalidArgument("decay-rate minimisation needs an exclusion radius > 0");
  }
}

double ObjectiveSpec::evaluate(const Configuration& config) const {
  if (kind == ObjectiveKind::MaxCrossSection) {
    return total_cross_section(config, IncidentWave(), ScattererModel(0.0));
  }
  return coopscat::min_decay_rate(config);
}

double ObjectiveSpec::to_minimization(double value) const {
  if (kind == ObjectiveKind::MaxCrossSection) return -value;
  return std::log(std::max(value, kDecayFloor));
}

double ObjectiveSpec::min_gap() const {
  // margin so that re-centring a line cannot round a gap below the threshold
  return kind == ObjectiveKind::MinDecayRate ? exclusion_radius : 10.0 * kCoincidenceThreshold;
}

bool ObjectiveSpec::feasible(const Configuration& config) const {
  if (kind != ObjectiveKind::MinDecayRate) return true;
  return config.min_distance() >= exclusion_radius - 1e-12;
}

std::string mode_name(const SearchMode& mode) {
  switch (mode.index()) {
    case 0: return "free";
    case 1: return "line";
    case 2: return "symline";
    default: return "extend";
  }
}

OptimizerSettings OptimizerSettings::desk() { return {}; }

OptimizerSettings OptimizerSettings::paper() {
  OptimizerSettings s;
  s.random_samples_per_radius = 10000;
  s.restarts_per_radius = 1000;
  return s;
}

void OptimizerSettings::validate() const {
  if (random_samples_per_radius < 1 || restarts_per_radius < 1 || keep_best < 1 ||
      polish_passes < 1 || simplex.max_iterations < 1) {
    throw InvalidArgument("optimizer counts must be >= 1");
  }
  if (radii.empty()) throw InvalidArgument("optimizer needs at least one radius");
  for (double r : radii) {
    if (!(r > 0.0) || !std::isfinite(r)) throw InvalidArgument("radii must be positive");
  }
  if (!(simplex.function_tolerance > 0.0) || !(simplex.domain_tolerance > 0.0) ||
      !(simplex.initial_step > 0.0)) {
    throw InvalidArgument("simplex tolerances must be > 0");
  }
}

namespace {

constexpr std::size_t kMaxConsecutiveRejections = 1'000'000;
constexpr double kPenaltyWeight = 1e6;
constexpr double kDefaultSeedGap = 2.0;

enum class Encoding { Free, Gaps, SymmetricGaps };

// Maps simplex parameter vectors to configurations. Gap encodings keep every
// neighbour gap >= min_gap exactly: gap = min_gap + p^2.
double sq(double x) { return x * x; }

struct Parametrization {
  Encoding encoding;
  std::size_t n;
  double min_gap;

  Configuration decode(const Eigen::VectorXd& p) const {
    switch (encoding) {
      case Encoding::Free: {
        std::vector<Vec3> pos(n);
        for (std::size_t i = 0; i < n; ++i) {
          pos[i] = p.segment<3>(static_cast<Eigen::Index>(3 * i));
        }
        return Configuration(std::move(pos));
      }
      case Encoding::Gaps: {
        std::vector<double> z(n, 0.0);
        for (std::size_t k = 1; k < n; ++k) {
          z[k] = z[k - 1] + min_gap + sq(p[static_cast<Eigen::Index>(k - 1)]);
        }
        return Configuration::on_axis(z);
      }
      case Encoding::SymmetricGaps: {
        const std::size_t half = n / 2;
        std::vector<double> h(half);
        h[0] = 0.5 * (min_gap + sq(p[0]));
        for (std::size_t k = 1; k < half; ++k) {
          h[k] = h[k - 1] + min_gap + sq(p[static_cast<Eigen::Index>(k)]);
        }
        std::vector<double> z;
        z.reserve(n);
        for (std::size_t k = half; k-- > 0;) z.push_back(-h[k]);
        for (std::size_t k = 0; k < half; ++k) z.push_back(h[k]);
        return Configuration::on_axis(z);
      }
    }
    return Configuration({Vec3::Zero()});
  }

  Eigen::VectorXd encode(const Configuration& config) const {
    switch (encoding) {
      case Encoding::Free: {
        Eigen::VectorXd p(static_cast<Eigen::Index>(3 * n));
        for (std::size_t i = 0; i < n; ++i) p.segment<3>(static_cast<Eigen::Index>(3 * i)) = config[i];
        return p;
      }
      case Encoding::Gaps: {
        std::vector<double> z = config.coordinates_along(Vec3::UnitZ());
        std::sort(z.begin(), z.end());
        Eigen::VectorXd p(static_cast<Eigen::Index>(n - 1));
        for (std::size_t k = 1; k < n; ++k) {
          p[static_cast<Eigen::Index>(k - 1)] = std::sqrt(std::max(0.0, z[k] - z[k - 1] - min_gap));
        }
        return p;
      }
      case Encoding::SymmetricGaps: {
        std::vector<double> z = config.coordinates_along(Vec3::UnitZ());
        std::sort(z.begin(), z.end());
        const std::size_t half = n / 2;
        Eigen::VectorXd p(static_cast<Eigen::Index>(half));
        p[0] = std::sqrt(std::max(0.0, z[half] - z[half - 1] - min_gap));
        for (std::size_t k = 1; k < half; ++k) {
          p[static_cast<Eigen::Index>(k)] = std::sqrt(std::max(0.0, z[half + k] - z[half + k - 1] - min_gap));
        }
        return p;
      }
    }
    return {};
  }
};

// Value the simplex minimises. Infeasible free-space configurations under an
// exclusion radius are never evaluated: they score a quadratic penalty that
// exceeds every feasible log(gamma_min) <= 0.
double simplex_value(const ObjectiveSpec& objective, const Configuration& config) {
  if (objective.kind == ObjectiveKind::MinDecayRate) {
    double violation = 0.0;
    for (std::size_t i = 0; i < config.size(); ++i) {
      for (std::size_t j = i + 1; j < config.size(); ++j) {
        const double short_by = objective.exclusion_radius - config.distance(i, j);
        if (short_by > 0.0) violation += short_by * short_by;
      }
    }
    if (violation > 0.0) return 1.0 + kPenaltyWeight * violation;
  }
  try {
    return objective.to_minimization(objective.evaluate(config));
  } catch (const Error&) {
    return std::numeric_limits<double>::infinity();
  }
}

struct PolishResult {
  Eigen::VectorXd point;
  double value = 0.0;
  std::size_t iterations = 0;
  std::size_t evaluations = 0;
};

PolishResult polish(const Parametrization& param, const ObjectiveSpec& objective,
                    const Eigen::VectorXd& start, const OptimizerSettings& settings) {
  const Objective f = [&](const Eigen::VectorXd& p) {
    return simplex_value(objective, param.decode(p));
  };
  PolishResult out;
  out.point = start;
  out.value = std::numeric_limits<double>::infinity();
  for (std::size_t pass = 0; pass < settings.polish_passes; ++pass) {
    const SimplexResult r = nelder_mead(f, out.point, settings.simplex);
    out.iterations += r.iterations;
    out.evaluations += r.evaluations;
    const double previous = out.value;
    if (r.value <= out.value) {
      out.point = r.point;
      out.value = r.value;
    }
    if (pass > 0 && !(previous - r.value > 1e-12 * std::abs(previous))) break;
  }
  if (param.encoding == Encoding::Free) return out;
  // Optima often sit on the exclusion boundary (p = 0), which the simplex
  // only approaches; try the boundary for each gap directly.
  bool snapped = false;
  for (Eigen::Index k = 0; k < out.point.size(); ++k) {
    if (out.point[k] == 0.0) continue;
    Eigen::VectorXd trial = out.point;
    trial[k] = 0.0;
    const double v = f(trial);
    ++out.evaluations;
    if (v < out.value) {
      out.point = trial;
      out.value = v;
      snapped = true;
    }
  }
  if (snapped) {
    const SimplexResult r = nelder_mead(f, out.point, settings.simplex);
    out.iterations += r.iterations;
    out.evaluations += r.evaluations;
    if (r.value < out.value) {
      out.point = r.point;
      out.value = r.value;
    }
  }
  return out;
}

bool mirror_symmetric(std::vector<double> z, double tol) {
  std::sort(z.begin(), z.end());
  const double centre = 0.5 * (z.front() + z.back());
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (std::abs((z[i] - centre) + (z[z.size() - 1 - i] - centre)) > tol) return false;
  }
  return true;
}

Configuration canonical_configuration(const Configuration& config) {
  if (config.size() == 1) return Configuration({Vec3::Zero()}, config.label());
  if (config.is_collinear_with(Vec3::UnitZ(), 1e-6)) {
    return Configuration::on_axis(canonical_line(config.coordinates_along(Vec3::UnitZ())),
                                  config.label());
  }
  Vec3 centroid = Vec3::Zero();
  for (const auto& p : config.positions()) centroid += p;
  centroid /= static_cast<double>(config.size());
  return config.translated(-centroid);
}

Candidate make_candidate(Configuration config, const ObjectiveSpec& objective) {
  config = canonical_configuration(config);
  if (!objective.feasible(config)) config = project_feasible(config, objective.exclusion_radius);
  Candidate c{config, objective.evaluate(config), 1.0};
  if (config.size() > 1) c.defect_score = decompose(build_green_matrix(config)).defect_score;
  return c;
}

std::vector<double> distance_signature(const Configuration& c) {
  std::vector<double> d;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) d.push_back(c.distance(i, j));
  }
  std::sort(d.begin(), d.end());
  return d;
}

bool lexicographic_less(const Configuration& a, const Configuration& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    for (int k = 0; k < 3; ++k) {
      if (a[i][k] != b[i][k]) return a[i][k] < b[i][k];
    }
  }
  return a.size() < b.size();
}

// Deterministic best-list merge: order by objective (ties by coordinates),
// drop near-duplicates (pair distances within 1e-3), keep the first `keep`.
std::vector<Candidate> select_best(std::vector<Candidate> all, const ObjectiveSpec& objective,
                                   std::size_t keep) {
  std::sort(all.begin(), all.end(), [&](const Candidate& a, const Candidate& b) {
    const double fa = objective.to_minimization(a.objective);
    const double fb = objective.to_minimization(b.objective);
    if (fa != fb) return fa < fb;
    return lexicographic_less(a.configuration, b.configuration);
  });
  std::vector<Candidate> kept;
  std::vector<std::vector<double>> signatures;
  for (auto& c : all) {
    if (kept.size() >= keep) break;
    std::vector<double> sig = distance_signature(c.configuration);
    const bool duplicate = std::any_of(signatures.begin(), signatures.end(), [&](const auto& s) {
      if (s.size() != sig.size()) return false;
      for (std::size_t k = 0; k < s.size(); ++k) {
        if (std::abs(s[k] - sig[k]) > 1e-3) return false;
      }
      return true;
    });
    if (duplicate) continue;
    signatures.push_back(std::move(sig));
    kept.push_back(std::move(c));
  }
  return kept;
}

// Draws one start configuration. Free mode places points by rejection and
// throws InfeasibleExclusion after too many consecutive rejections of one point.
class Sampler {
 public:
  Sampler(Encoding encoding, std::size_t n, double min_gap, double radius)
      : encoding_(encoding), n_(n), min_gap_(min_gap), radius_(radius) {}

  Configuration draw(Rng& rng) const {
    switch (encoding_) {
      case Encoding::Free: {
        std::vector<Vec3> pos;
        pos.reserve(n_);
        while (pos.size() < n_) {
          pos.push_back(place([&] { return uniform_in_ball(rng, radius_); },
                              [&](const Vec3& v) {
                                return std::all_of(pos.begin(), pos.end(), [&](const Vec3& q) {
                                  return (q - v).norm() >= min_gap_;
                                });
                              }));
        }
        return Configuration(std::move(pos));
      }
      case Encoding::Gaps: {
        // uniform over sorted points with neighbours >= min_gap apart: sort
        // uniform draws on a segment shortened by the gaps, then re-insert them
        const double slack = 2.0 * radius_ - static_cast<double>(n_ - 1) * min_gap_;
        std::vector<double> z(n_);
        for (double& v : z) v = slack * uniform01(rng);
        std::sort(z.begin(), z.end());
        for (std::size_t k = 0; k < n_; ++k) z[k] += -radius_ + static_cast<double>(k) * min_gap_;
        return Configuration::on_axis(z);
      }
      case Encoding::SymmetricGaps: {
        const std::size_t half = n_ / 2;
        const double lo = 0.5 * min_gap_;
        const double slack = radius_ - lo - static_cast<double>(half - 1) * min_gap_;
        std::vector<double> h(half);
        for (double& v : h) v = slack * uniform01(rng);
        std::sort(h.begin(), h.end());
        for (std::size_t k = 0; k < half; ++k) h[k] += lo + static_cast<double>(k) * min_gap_;
        std::vector<double> z;
        for (std::size_t k = half; k-- > 0;) z.push_back(-h[k]);
        for (double v : h) z.push_back(v);
        return Configuration::on_axis(z);
      }
    }
    return Configuration({Vec3::Zero()});
  }

  /// Whether the segment can hold N scatterers at the minimum gap at all.
  bool geometrically_feasible() const {
    switch (encoding_) {
      case Encoding::Gaps:
        return static_cast<double>(n_ - 1) * min_gap_ <= 2.0 * radius_;
      case Encoding::SymmetricGaps:
        return 0.5 * min_gap_ + static_cast<double>(n_ / 2 - 1) * min_gap_ <= radius_;
      case Encoding::Free:
        break;
    }
    return true;
  }

 private:
  template <class Draw, class Accept>
  std::invoke_result_t<Draw> place(Draw draw, Accept accept) const {
    for (std::size_t attempt = 0; attempt < kMaxConsecutiveRejections; ++attempt) {
      auto v = draw();
      if (accept(v)) return v;
    }
    throw InfeasibleExclusion("could not place " + std::to_string(n_) +
                              " scatterers with minimum distance " + std::to_string(min_gap_) +
                              " inside radius " + std::to_string(radius_));
  }

  Encoding encoding_;
  std::size_t n_;
  double min_gap_;
  double radius_;
};

OptimizationReport trivial_report(const ObjectiveSpec& objective, const SearchMode& mode,
                                  const OptimizerSettings& settings) {
  OptimizationReport report;
  report.n = 1;
  report.objective = objective;
  report.mode = mode_name(mode);
  report.seed = settings.seed;
  Configuration single({Vec3::Zero()});
  report.best.push_back({single, objective.evaluate(single), 1.0});
  report.evaluations = 1;
  return report;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void fill_running_best(OptimizationReport& report) {
  double best = std::numeric_limits<double>::quiet_NaN();
  for (auto& t : report.trace) {
    if (std::isnan(best) || report.objective.better(t.polished, best)) best = t.polished;
    t.running_best = best;
  }
}

}  // namespace

std::vector<double> canonical_line(std::vector<double> z) {
  std::sort(z.begin(), z.end());
  const std::size_t n = z.size();
  if (n == 0) return z;
  auto centred = [n](std::vector<double> v) {
    double mid = v[0];
    if (n > 1) {
      const std::size_t right = n / 2;  // even: N/2+1, odd: (N+1)/2 (1-based)
      mid = 0.5 * (v[right - 1] + v[right]);
    }
    for (double& x : v) x -= mid;
    return v;
  };
  std::vector<double> a = centred(z);
  std::vector<double> mirrored(n);
  for (std::size_t i = 0; i < n; ++i) mirrored[i] = -z[n - 1 - i];
  std::vector<double> b = centred(mirrored);
  const double lean_a = a.front() + a.back();
  const double lean_b = b.front() + b.back();
  return lean_b > lean_a + 1e-12 ? b : a;
}

Configuration project_feasible(const Configuration& config, double exclusion_radius) {
  std::vector<Vec3> pos = config.positions();
  const double target = exclusion_radius * (1.0 + 1e-12);
  for (int sweep = 0; sweep < 10000; ++sweep) {
    bool moved = false;
    for (std::size_t i = 0; i < pos.size(); ++i) {
      for (std::size_t j = i + 1; j < pos.size(); ++j) {
        Vec3 d = pos[j] - pos[i];
        const double dist = d.norm();
        if (dist >= exclusion_radius) continue;
        const Vec3 dir = dist > 0.0 ? Vec3(d / dist) : Vec3::UnitX();
        const double push = 0.5 * (target - dist);
        pos[i] -= push * dir;
        pos[j] += push * dir;
        moved = true;
      }
    }
    if (!moved) break;
  }
  return Configuration(std::move(pos), config.label());
}

bool same_results(const OptimizationReport& a, const OptimizationReport& b) {
  if (a.n != b.n || a.mode != b.mode || a.seed != b.seed || a.evaluations != b.evaluations ||
      a.objective.kind != b.objective.kind ||
      a.objective.exclusion_radius != b.objective.exclusion_radius ||
      a.best.size() != b.best.size() || a.trace.size() != b.trace.size() ||
      a.skipped_radii != b.skipped_radii) {
    return false;
  }
  for (std::size_t i = 0; i < a.best.size(); ++i) {
    if (!(a.best[i].configuration == b.best[i].configuration) ||
        a.best[i].objective != b.best[i].objective ||
        a.best[i].defect_score != b.best[i].defect_score) {
      return false;
    }
  }
  for (std::size_t i = 0; i < a.trace.size(); ++i) {
    const auto& x = a.trace[i];
    const auto& y = b.trace[i];
    if (x.radius_index != y.radius_index || x.restart_index != y.restart_index ||
        x.best_sample != y.best_sample || x.polished != y.polished ||
        x.running_best != y.running_best || x.iterations != y.iterations ||
        x.evaluations != y.evaluations || x.defect_score != y.defect_score) {
      return false;
    }
  }
  return true;
}

OptimizationReport random_restart_search(std::size_t n, const ObjectiveSpec& objective,
                                         const SearchMode& mode,
                                         const OptimizerSettings& settings) {
  objective.validate();
  settings.validate();
  if (n < 1) throw InvalidArgument("need at least one scatterer");
  if (const auto* extend = std::get_if<ExtendFromSeed>(&mode)) {
    if (extend->seed.size() + 2 != n) {
      throw InvalidArgument("extend mode needs a seed with N-2 scatterers");
    }
    return extend_and_polish(extend->seed, objective, settings);
  }
  if (std::holds_alternative<SymmetricLine>(mode) && n % 2 != 0) {
    throw InvalidArgument("symmetric line mode requires even N");
  }
  if (n == 1) return trivial_report(objective, mode, settings);

  const auto start_time = std::chrono::steady_clock::now();
  const Encoding encoding = std::holds_alternative<Free3D>(mode)        ? Encoding::Free
                            : std::holds_alternative<SymmetricLine>(mode) ? Encoding::SymmetricGaps
                                                                          : Encoding::Gaps;
  const Parametrization param{encoding, n, objective.min_gap()};

  OptimizationReport report;
  report.n = n;
  report.objective = objective;
  report.mode = mode_name(mode);
  report.seed = settings.seed;

  std::vector<std::size_t> radius_indices;
  for (std::size_t r = 0; r < settings.radii.size(); ++r) {
    if (Sampler(encoding, n, objective.min_gap(), settings.radii[r]).geometrically_feasible()) {
      radius_indices.push_back(r);
    } else {
      report.skipped_radii.push_back(settings.radii[r]);
    }
  }
  if (radius_indices.empty()) {
    throw InfeasibleExclusion("no radius can hold " + std::to_string(n) +
                              " scatterers at the exclusion radius");
  }

  const std::size_t restarts = settings.restarts_per_radius;
  const std::size_t items = radius_indices.size() * restarts;
  std::vector<Candidate> candidates(items, Candidate{Configuration({Vec3::Zero()})});
  std::vector<RestartTrace> trace(items);

  parallel_for(items, resolve_threads(settings.threads), [&](std::size_t item) {
    const std::size_t r = radius_indices[item / restarts];
    const std::size_t k = item % restarts;
    Rng rng(derive_seed({settings.seed, r, k}));
    const Sampler sampler(encoding, n, objective.min_gap(), settings.radii[r]);

    Configuration best_sample = sampler.draw(rng);
    double best_value = simplex_value(objective, best_sample);
    for (std::size_t s = 1; s < settings.random_samples_per_radius; ++s) {
      Configuration c = sampler.draw(rng);
      const double v = simplex_value(objective, c);
      if (v < best_value) {
        best_value = v;
        best_sample = std::move(c);
      }
    }

    RestartTrace& t = trace[item];
    t.radius_index = r;
    t.restart_index = k;
    t.radius = settings.radii[r];
    t.best_sample = objective.evaluate(best_sample);
    t.evaluations = settings.random_samples_per_radius;

    const PolishResult polished = polish(param, objective, param.encode(best_sample), settings);
    candidates[item] = make_candidate(param.decode(polished.point), objective);
    t.polished = candidates[item].objective;
    t.iterations = polished.iterations;
    t.evaluations += polished.evaluations;
    t.defect_score = candidates[item].defect_score;
  });

  report.trace = std::move(trace);
  fill_running_best(report);
  for (const auto& t : report.trace) report.evaluations += t.evaluations;
  report.best = select_best(std::move(candidates), objective, settings.keep_best);
  report.wall_seconds = seconds_since(start_time);
  return report;
}

OptimizationReport optimize_line(std::size_t n, const ObjectiveSpec& objective, bool symmetric,
                                 const OptimizerSettings& settings) {
  if (symmetric) return random_restart_search(n, objective, SymmetricLine{}, settings);
  return random_restart_search(n, objective, Line{}, settings);
}

OptimizationReport polish_line(const Configuration& start, const ObjectiveSpec& objective,
                               const OptimizerSettings& settings) {
  objective.validate();
  settings.validate();
  if (!start.is_collinear_with(Vec3::UnitZ(), 1e-9)) {
    throw NotCollinear("line polish needs scatterers on a line parallel to z");
  }
  const auto start_time = std::chrono::steady_clock::now();
  const std::size_t n = start.size();
  OptimizationReport report;
  report.n = n;
  report.objective = objective;
  report.mode = "line";
  report.seed = settings.seed;
  const Configuration on_axis = Configuration::on_axis(start.coordinates_along(Vec3::UnitZ()));
  RestartTrace t;
  t.radius = on_axis.max_distance();
  t.best_sample = objective.evaluate(on_axis);
  if (n == 1) {
    report.best.push_back({on_axis, t.best_sample, 1.0});
    t.polished = t.best_sample;
    report.trace.push_back(t);
    fill_running_best(report);
    return report;
  }

  Configuration current = on_axis;
  if (n % 2 == 0 && mirror_symmetric(on_axis.coordinates_along(Vec3::UnitZ()), 1e-9)) {
    const Parametrization sym{Encoding::SymmetricGaps, n, objective.min_gap()};
    const PolishResult r = polish(sym, objective, sym.encode(current), settings);
    current = sym.decode(r.point);
    t.iterations += r.iterations;
    t.evaluations += r.evaluations;
  }
  const Parametrization gaps{Encoding::Gaps, n, objective.min_gap()};
  const PolishResult r = polish(gaps, objective, gaps.encode(current), settings);
  t.iterations += r.iterations;
  t.evaluations += r.evaluations;

  Candidate result = make_candidate(gaps.decode(r.point), objective);
  const Candidate before = make_candidate(current, objective);
  if (objective.better(before.objective, result.objective)) result = before;
  t.polished = result.objective;
  t.defect_score = result.defect_score;
  report.best.push_back(std::move(result));
  report.trace.push_back(t);
  fill_running_best(report);
  report.evaluations = t.evaluations;
  report.wall_seconds = seconds_since(start_time);
  return report;
}

OptimizationReport extend_and_polish(const Configuration& seed, const ObjectiveSpec& objective,
                                     const OptimizerSettings& settings) {
  if (!seed.is_collinear_with(Vec3::UnitZ(), 1e-9)) {
    throw NotCollinear("extension seed must lie on a line parallel to z");
  }
  std::vector<double> z = seed.coordinates_along(Vec3::UnitZ());
  std::sort(z.begin(), z.end());
  const double fallback = std::max(kDefaultSeedGap, objective.min_gap());
  const double left_gap = z.size() > 1 ? z[1] - z[0] : fallback;
  const double right_gap = z.size() > 1 ? z[z.size() - 1] - z[z.size() - 2] : fallback;
  z.insert(z.begin(), z.front() - left_gap);
  z.push_back(z.back() + right_gap);
  OptimizationReport report = polish_line(Configuration::on_axis(z), objective, settings);
  report.mode = "extend";
  return report;
}

Configuration regular_chain(std::size_t n, double spacing) {
  if (n < 1) throw InvalidArgument("need at least one scatterer");
  if (!(spacing > 0.0) || !std::isfinite(spacing)) throw InvalidArgument("spacing must be > 0");
  std::vector<double> z(n);
  for (std::size_t i = 0; i < n; ++i) {
    z[i] = (static_cast<double>(i) - 0.5 * static_cast<double>(n - 1)) * spacing;
  }
  return Configuration::on_axis(z, "regular-chain");
}

double regular_chain_baseline(std::size_t n, double spacing, ObjectiveKind kind) {
  const Configuration chain = regular_chain(n, spacing);
  if (kind == ObjectiveKind::MaxCrossSection) {
    return total_cross_section(chain, IncidentWave(), ScattererModel(0.0));
  }
  return min_decay_rate(chain);
}

}  // namespace coopscat
