// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "coopscat/errors.hpp"
#include "coopscat/optimizer.hpp"
#include "coopscat/refdata.hpp"
#include "coopscat/resonance.hpp"
#include "coopscat/scatter_core.hpp"
#include "coopscat/stability.hpp"

using namespace coopscat;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += "failed: " + what;
    }
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Configuration random_cloud(std::mt19937_64& rng, std::size_t n, double diameter) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    std::vector<Vec3> pos;
    while (pos.size() < n) {
      const Vec3 v(u(rng), u(rng), u(rng));
      if (v.norm() <= 1.0) pos.push_back(0.5 * diameter * v);
    }
    Configuration c(pos);
    if (n == 1 || c.min_distance() > 0.05) return c;
  }
}

bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

// Published table values (sigma / sigma_max, gamma_min / gamma).
struct TableRow {
  int n;
  Family family;
  double sigma;
  double gamma;
};
const TableRow kTable[] = {
    {8, Family::Narrow, 23.6, 6.8e-3}, {8, Family::Wide, 23.9, 1.7e-2},
    {8, Family::Decay, 1.3, 6.2e-10},  {9, Family::Narrow, 26.1, 4.4e-3},
    {9, Family::Wide, 26.2, 1.2e-2},   {9, Family::Decay, 1.7, 4.6e-10},
};

// 1
Outcome table_sigma() {
  Outcome o;
  for (const auto& row : kTable) {
    const double s = total_cross_section(get_reference(row.n, row.family).configuration(), IncidentWave(),
                                         ScattererModel(0.0));
    o.require(std::abs(s - row.sigma) <= 0.1, "N" + std::to_string(row.n) + " " + to_string(row.family) +
                                                  " sigma " + fmt("%.4f", s));
    o.note(fmt("%.3f", s));
  }
  return o;
}

// 2
Outcome table_gamma() {
  Outcome o;
  OptimizerSettings s = OptimizerSettings::desk();
  const ObjectiveSpec obj = ObjectiveSpec::min_decay_rate(0.5);
  for (const auto& row : kTable) {
    const Configuration c = get_reference(row.n, row.family).configuration();
    const double g = min_decay_rate(c);
    const std::string tag = "N" + std::to_string(row.n) + " " + to_string(row.family);
    if (row.family == Family::Decay) {
      o.require(g <= 3.0 * row.gamma && g >= row.gamma / 3.0, tag + " gamma " + fmt("%.3g", g));
      const double polished = polish_line(c, obj, s).top().objective;
      o.require(polished <= 1.5 * row.gamma, tag + " polished " + fmt("%.3g", polished));
      o.note(tag + " " + fmt("%.3g", g) + " -> " + fmt("%.3g", polished));
    } else {
      o.require(std::abs(g - row.gamma) <= 0.15 * row.gamma, tag + " gamma " + fmt("%.3g", g));
      o.note(tag + " " + fmt("%.3g", g));
    }
  }
  return o;
}

// 3
Outcome optical_closure() {
  Outcome o;
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> pick_n(2, 10);
  std::uniform_real_distribution<double> pick_d(1.0, 20.0);
  const double detunings[] = {-3.0, -0.5, 0.0, 0.7, 4.0};
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    const Configuration c = random_cloud(rng, static_cast<std::size_t>(pick_n(rng)), pick_d(rng));
    for (double d : detunings) {
      const Scattering sc(c, IncidentWave(), ScattererModel(d));
      const double total = sc.total_cross_section();
      const double integrated = sc.integrated_cross_section();
      worst = std::max(worst, std::abs(integrated - total) / std::abs(total));
    }
  }
  o.require(worst <= 1e-8, "worst relative gap " + fmt("%.3g", worst));
  o.note("worst relative gap " + fmt("%.2g", worst) + " (tol 1e-8)");
  return o;
}

// 4
Outcome resonance_sum() {
  Outcome o;
  double worst = 0.0;
  for (const auto& e : all_references()) {
    if (e.family == Family::Decay) continue;
    const Configuration c = e.configuration();
    const ResonanceSet set = analyze(c);
    o.require(set.diagonalizable, e.label() + " diagonalisable");
    for (int k = 0; k < 20; ++k) {
      const ScattererModel m(-10.0 + 20.0 * k / 19.0);
      double sum = 0.0;
      for (std::size_t n = 0; n < set.resonances.size(); ++n) sum += resonance_cross_section(set, n, m);
      const double total = total_cross_section(c, IncidentWave(), m);
      worst = std::max(worst, std::abs(sum - total) / std::abs(total));
    }
  }
  o.require(worst <= 1e-8, "worst relative gap " + fmt("%.3g", worst));
  o.note("worst relative gap " + fmt("%.2g", worst));

  const Configuration w8 = get_reference(8, Family::Wide).configuration();
  const ResonanceSet set = analyze(w8);
  std::vector<double> parts;
  for (std::size_t n = 0; n < set.resonances.size(); ++n) {
    parts.push_back(std::abs(resonance_cross_section(set, n, ScattererModel(0.0))));
  }
  const double top = *std::max_element(parts.begin(), parts.end());
  double rest = -top;
  for (double p : parts) rest += p;
  o.require(top > rest, "dominant resonance");
  o.note("N8 wide dominant " + fmt("%.3f", top) + " vs others " + fmt("%.3f", rest));
  return o;
}

// 5
Outcome flux_equivalence() {
  Outcome o;
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> pick_n(2, 10);
  std::uniform_real_distribution<double> pick_d(1.0, 20.0);
  double worst = 0.0;
  std::size_t states = 0;
  for (int t = 0; t < 50; ++t) {
    const Configuration c = random_cloud(rng, static_cast<std::size_t>(pick_n(rng)), pick_d(rng));
    const ResonanceSet set = analyze(c);
    for (const auto& r : set.resonances) {
      const FluxDecay f = decay_rate_flux(r.coefficients, c);
      worst = std::max(worst, std::abs(f.interference_sum - r.width()) / r.width());
      worst = std::max(worst, std::abs(f.angular_flux - r.width()) / r.width());
      ++states;
    }
  }
  o.require(worst <= 1e-8, "worst relative gap " + fmt("%.3g", worst));
  o.note(std::to_string(states) + " eigenvectors, worst relative gap " + fmt("%.2g", worst));
  return o;
}

// 6
Outcome quadratic_growth() {
  Outcome o;
  OptimizerSettings s = OptimizerSettings::desk();
  s.seed = 6;
  std::vector<std::pair<double, double>> points;
  std::string list;
  for (std::size_t n = 2; n <= 10; ++n) {
    const bool symmetric = n % 2 == 0;
    double best = optimize_line(n, ObjectiveSpec::max_cross_section(), symmetric, s).top().objective;
    if (n == 8 || n == 9) {
      for (const auto& row : kTable) {
        if (row.n == static_cast<int>(n) && row.family != Family::Decay) best = std::max(best, row.sigma);
      }
    }
    o.require(best > static_cast<double>(n), "superlinear at N=" + std::to_string(n));
    points.emplace_back(static_cast<double>(n), best);
    list += (list.empty() ? "" : " ") + fmt("%.2f", best);
  }
  const QuadraticFit fit = quadratic_fit(points);
  o.require(fit.a >= 0.14 && fit.a <= 0.21, "a = " + fmt("%.4f", fit.a));
  o.note("sigma(2..10) = " + list);
  o.note("a = " + fmt("%.4f", fit.a) + ", b = " + fmt("%.3f", fit.b) + " (a in [0.14, 0.21])");
  return o;
}

// 7
Outcome chain_scaling() {
  Outcome o;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int m = 0;
  for (std::size_t n = 4; n <= 40; ++n) {
    const double x = std::log(static_cast<double>(n));
    const double y = std::log(regular_chain_baseline(n, 0.5, ObjectiveKind::MinDecayRate));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  o.require(std::abs(slope + 3.0) <= 0.3, "slope " + fmt("%.3f", slope));
  double lo = 1.0, hi = 0.0;
  for (std::size_t n = 2; n <= 20; ++n) {
    const double g = regular_chain_baseline(n, 4.0, ObjectiveKind::MinDecayRate);
    lo = std::min(lo, g);
    hi = std::max(hi, g);
  }
  o.require(lo >= 0.5 && hi <= 1.0, "spacing 4 range [" + fmt("%.3f", lo) + ", " + fmt("%.3f", hi) + "]");
  o.note("slope " + fmt("%.3f", slope) + " (target -3 +- 0.3)");
  o.note("spacing 4: gamma_min in [" + fmt("%.3f", lo) + ", " + fmt("%.3f", hi) + "]");
  return o;
}

// 8
Outcome subradiance_ladder() {
  Outcome o;
  const ObjectiveSpec obj = ObjectiveSpec::min_decay_rate(0.5);
  const OptimizerSettings s = OptimizerSettings::desk();
  const OptimizationReport p8 = polish_line(get_reference(8, Family::Decay).configuration(), obj, s);
  const OptimizationReport p10 = extend_and_polish(p8.top().configuration, obj, s);
  const Configuration& c = p10.top().configuration;
  const double g = min_decay_rate(c);
  o.require(c.size() == 10, "N = 10");
  o.require(c.min_distance() >= 0.5 - 1e-12, "exclusion radius");
  o.require(g <= 1e-12, "gamma_min(10) = " + fmt("%.3g", g));
  o.note("gamma_min: N=8 " + fmt("%.3g", p8.top().objective) + ", N=10 " + fmt("%.3g", g) + " (tol 1e-12)");
  return o;
}

// 9
Outcome stability_criterion() {
  Outcome o;
  const std::size_t samples = 100000;
  auto scan = [&](const Configuration& c, double dr, ObjectiveKind kind) {
    return stability_scan(StabilityRequest{c, dr, samples, kind, 9, 0});
  };
  const StabilityResult wide = scan(get_reference(8, Family::Wide).configuration(), 0.05,
                                    ObjectiveKind::MaxCrossSection);
  const StabilityResult narrow = scan(get_reference(8, Family::Narrow).configuration(), 0.05,
                                      ObjectiveKind::MaxCrossSection);
  o.require(wide.mean > narrow.mean, "wide more robust than narrow");
  o.note("<sigma> wide " + fmt("%.3f", wide.mean) + " +- " + fmt("%.3f", wide.standard_error) +
         ", narrow " + fmt("%.3f", narrow.mean) + " +- " + fmt("%.3f", narrow.standard_error));

  OptimizerSettings s = OptimizerSettings::desk();
  s.random_samples_per_radius = 100;
  s.restarts_per_radius = 5;
  s.radii = {1, 2, 3, 4, 5, 6};
  s.seed = 9;
  const ObjectiveSpec obj = ObjectiveSpec::min_decay_rate(0.5);
  const Configuration d4 = optimize_line(4, obj, true, s).top().configuration;
  const Configuration d6 = optimize_line(6, obj, true, s).top().configuration;
  const StabilityResult g4 = scan(d4, 0.05, ObjectiveKind::MinDecayRate);
  const StabilityResult g6 = scan(d6, 0.005, ObjectiveKind::MinDecayRate);
  o.require(g4.mean <= 1e-3, "N=4 <gamma_min> " + fmt("%.3g", g4.mean));
  o.require(g6.mean <= 1e-5, "N=6 <gamma_min> " + fmt("%.3g", g6.mean));
  o.note("<gamma_min> N=4 (dr 0.05) " + fmt("%.3g", g4.mean) + " [opt " + fmt("%.3g", min_decay_rate(d4)) +
         "], N=6 (dr 0.005) " + fmt("%.3g", g6.mean) + " [opt " + fmt("%.3g", min_decay_rate(d6)) + "]");
  return o;
}

// 10
Outcome defective_case() {
  Outcome o;
  const DefectReport r = defective_case_probe(defective_triangle());
  OptimizerSettings s = OptimizerSettings::desk();
  s.random_samples_per_radius = 100;
  s.restarts_per_radius = 5;
  s.seed = 10;
  const double best3 = optimize_line(3, ObjectiveSpec::max_cross_section(), false, s).top().objective;
  o.require(!r.diagonalizable, "non-diagonalisable flag");
  o.require(r.cross_section_finite && std::isfinite(r.total_cross_section), "finite sigma");
  o.require(r.total_cross_section < best3, "sigma below optimised N=3");
  o.note("defect score " + fmt("%.2g", r.defect_score) + ", cond " + fmt("%.2g", r.eigenvector_condition) +
         ", sigma " + fmt("%.4f", r.total_cross_section) + " < " + fmt("%.4f", best3));
  return o;
}

// 11
Outcome property_suite() {
  Outcome o;
  std::mt19937_64 rng(11);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_int_distribution<int> pick_n(2, 10);
  double inv = 0.0, recip = 0.0, trace = 0.0;
  bool bound_ok = true;
  std::size_t bounds = 0;
  for (int t = 0; t < 40; ++t) {
    const Configuration c = random_cloud(rng, static_cast<std::size_t>(pick_n(rng)), 12.0);
    const Vec3 dir = Vec3(gauss(rng), gauss(rng), gauss(rng)).normalized();
    const ScattererModel model(gauss(rng));
    const double s = total_cross_section(c, IncidentWave(dir), model);
    const Vec3 shift(5 * gauss(rng), 5 * gauss(rng), 5 * gauss(rng));
    inv = std::max(inv, std::abs(total_cross_section(c.translated(shift), IncidentWave(dir), model) - s) / s);
    const Eigen::Matrix3d rot =
        Eigen::Quaterniond(gauss(rng), gauss(rng), gauss(rng), gauss(rng)).normalized().toRotationMatrix();
    inv = std::max(inv, std::abs(total_cross_section(c.rotated(rot), IncidentWave((rot * dir).normalized()),
                                                     model) - s) / s);
    recip = std::max(recip, std::abs(total_cross_section(c, IncidentWave(-dir), model) - s) / s);

    const ResonanceSet set = analyze(c, IncidentWave(dir));
    cplx sum = 0.0;
    for (const auto& r : set.resonances) sum += r.eigenvalue;
    trace = std::max(trace, std::abs(sum));
    for (std::size_t n = 0; n < set.resonances.size(); ++n) {
      const double bound = resonance_upper_bound(set, n, c);
      const double peak = resonance_cross_section(set, n, ScattererModel(set.resonances[n].position()));
      bound_ok = bound_ok && peak <= bound + 1e-9;
      ++bounds;
    }
  }
  for (const auto& e : all_references()) {
    const Configuration c = e.configuration();
    const ResonanceSet set = analyze(c);
    for (std::size_t n = 0; n < set.resonances.size(); ++n) {
      const double bound = resonance_upper_bound(set, n, c);
      const double peak = resonance_cross_section(set, n, ScattererModel(set.resonances[n].position()));
      bound_ok = bound_ok && peak <= bound + 1e-9;
      ++bounds;
    }
  }
  double widths = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double d = 0.15 * k;
    const double z[] = {0.0, d};
    const ResonanceSet set = analyze(Configuration::on_axis(z));
    std::vector<double> w{set.resonances[0].width(), set.resonances[1].width()};
    std::sort(w.begin(), w.end());
    const double s = std::abs(std::sin(d) / d);
    widths = std::max({widths, std::abs(w[0] - (1.0 - s)), std::abs(w[1] - (1.0 + s))});
  }
  o.require(inv <= 1e-10, "translation/rotation " + fmt("%.3g", inv));
  o.require(recip <= 1e-10, "reciprocity " + fmt("%.3g", recip));
  o.require(trace <= 1e-10, "trace " + fmt("%.3g", trace));
  o.require(bound_ok, "upper bound");
  o.require(widths <= 1e-12, "N=2 widths " + fmt("%.3g", widths));
  o.note("invariance " + fmt("%.2g", inv) + ", reciprocity " + fmt("%.2g", recip) + ", trace " +
         fmt("%.2g", trace) + ", " + std::to_string(bounds) + " bounds hold, N=2 widths " + fmt("%.2g", widths));
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double time_limit;  // seconds; 0 for none
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "table sigma regression", 1.0, table_sigma},
      {2, "table gamma_min regression", 10.0, table_gamma},
      {3, "optical-theorem closure", 30.0, optical_closure},
      {4, "resonance-sum identity", 5.0, resonance_sum},
      {5, "spectral/flux decay equivalence", 30.0, flux_equivalence},
      {6, "quadratic growth", 0.0, quadratic_growth},
      {7, "regular-chain scaling", 60.0, chain_scaling},
      {8, "exponential subradiance", 0.0, subradiance_ladder},
      {9, "stability", 120.0, stability_criterion},
      {10, "defective case", 1.0, defective_case},
      {11, "property suite", 30.0, property_suite},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0.0 && secs > c.time_limit) {
      o.require(false, "runtime " + fmt("%.1f", secs) + " s over " + fmt("%.0f", c.time_limit) + " s");
    }
    if (!o.pass) ++failed;
    std::printf("%s %2d %s: %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
