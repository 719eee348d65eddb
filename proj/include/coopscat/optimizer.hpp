#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "coopscat/geometry.hpp"
#include "coopscat/nelder_mead.hpp"

namespace coopscat {

enum class ObjectiveKind { MaxCrossSection, MinDecayRate };

std::string to_string(ObjectiveKind kind);           // "sigma" | "gamma_min"
ObjectiveKind parse_objective_kind(const std::string& name);

/// What is optimised. Cross sections are evaluated at delta = 0 for a wave
/// along +z; decay-rate minimisation keeps all pairs at least
/// `exclusion_radius` apart.
struct ObjectiveSpec {
  ObjectiveKind kind = ObjectiveKind::MaxCrossSection;
  double exclusion_radius = 0.0;

  static ObjectiveSpec max_cross_section() { return {ObjectiveKind::MaxCrossSection, 0.0}; }
  static ObjectiveSpec min_decay_rate(double exclusion_radius);

  void validate() const;

  /// sigma/sigma_max^(1) or gamma_min/gamma.
  double evaluate(const Configuration& config) const;
  /// Monotone map to a quantity to be minimised: -sigma, or log(gamma_min)
  /// clamped at kDecayFloor.
  double to_minimization(double value) const;
  /// True if `a` is strictly better than `b`.
  bool better(double a, double b) const { return to_minimization(a) < to_minimization(b); }
  /// Smallest admissible gap between neighbours on a line.
  double min_gap() const;
  /// Whether every pair respects the exclusion radius (always true for sigma).
  bool feasible(const Configuration& config) const;
};

/// Decay rates below this are indistinguishable from roundoff.
inline constexpr double kDecayFloor = 1e-18;

struct Free3D {};
struct Line {};
struct SymmetricLine {};
struct ExtendFromSeed {
  Configuration seed;
};
using SearchMode = std::variant<Free3D, Line, SymmetricLine, ExtendFromSeed>;

std::string mode_name(const SearchMode& mode);  // "free" | "line" | "symline" | "extend"

struct OptimizerSettings {
  std::size_t random_samples_per_radius = 500;
  std::size_t restarts_per_radius = 50;
  std::vector<double> radii{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  SimplexSettings simplex;
  /// Simplex re-runs from its own result; stops early once a pass no longer improves.
  std::size_t polish_passes = 3;
  std::uint64_t seed = 0;
  std::size_t keep_best = 10;
  unsigned threads = 0;  // 0: resolve_threads()

  /// Reduced budget for interactive runs (the defaults above).
  static OptimizerSettings desk();
  /// 10^4 samples x 10^3 restarts per radius, kR = 1..12.
  static OptimizerSettings paper();

  void validate() const;
};

struct Candidate {
  Configuration configuration;
  double objective = 0.0;
  double defect_score = 0.0;
};

struct RestartTrace {
  std::size_t radius_index = 0;
  std::size_t restart_index = 0;
  double radius = 0.0;
  double best_sample = 0.0;
  double polished = 0.0;
  double running_best = 0.0;
  std::size_t iterations = 0;
  std::size_t evaluations = 0;
  double defect_score = 0.0;
};

struct OptimizationReport {
  std::size_t n = 0;
  ObjectiveSpec objective;
  std::string mode;
  std::uint64_t seed = 0;
  std::vector<Candidate> best;  // best first
  std::vector<RestartTrace> trace;
  std::vector<double> skipped_radii;  // too small to hold N scatterers on a line
  std::size_t evaluations = 0;
  double wall_seconds = 0.0;

  const Candidate& top() const { return best.front(); }
};

/// Report equality ignoring wall time.
bool same_results(const OptimizationReport& a, const OptimizationReport& b);

/// Random-restart downhill simplex search. For every radius and restart:
/// draw `random_samples_per_radius` configurations in a ball (segment for the
/// line modes) of that radius, start the simplex from the best one, polish.
/// N == 1 returns the single-scatterer answer.
OptimizationReport random_restart_search(std::size_t n, const ObjectiveSpec& objective,
                                         const SearchMode& mode,
                                         const OptimizerSettings& settings);

/// Line / symmetric-line search parametrised by gaps between neighbours.
OptimizationReport optimize_line(std::size_t n, const ObjectiveSpec& objective, bool symmetric,
                                 const OptimizerSettings& settings);

/// Adds one scatterer beyond each end of a collinear (+z) seed at the seed's
/// outermost gaps, then polishes all gaps.
OptimizationReport extend_and_polish(const Configuration& seed, const ObjectiveSpec& objective,
                                     const OptimizerSettings& settings);

/// Local simplex polish of a collinear (+z) configuration; symmetric gaps are
/// used first when the start is mirror-symmetric with even N.
OptimizationReport polish_line(const Configuration& start, const ObjectiveSpec& objective,
                               const OptimizerSettings& settings);

/// N equally spaced scatterers along z.
Configuration regular_chain(std::size_t n, double spacing);
double regular_chain_baseline(std::size_t n, double spacing, ObjectiveKind kind);

/// Canonical gauge for points on the z-axis: sorted, the middle pair centred
/// on z = 0, and the mirror image chosen when it puts more extent on +z.
std::vector<double> canonical_line(std::vector<double> z);

/// Pushes apart pairs closer than the exclusion radius until feasible.
Configuration project_feasible(const Configuration& config, double exclusion_radius);

}  // namespace coopscat
