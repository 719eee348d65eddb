#include "coopscat/refdata.hpp"

#include <cmath>
#include <set>

#include "coopscat/errors.hpp"

namespace coopscat {

std::string to_string(Family family) {
  switch (family) {
    case Family::Narrow: return "narrow";
    case Family::Wide: return "wide";
    case Family::Decay: return "decay";
  }
  return "unknown";
}

Family parse_family(const std::string& name) {
  if (name == "narrow") return Family::Narrow;
  if (name == "wide") return Family::Wide;
  if (name == "decay") return Family::Decay;
  throw InvalidArgument("unknown family '" + name + "'");
}

Configuration ReferenceEntry::configuration() const {
  return Configuration::on_axis(positions, label());
}

std::string ReferenceEntry::label() const { return "N" + std::to_string(n) + "-" + to_string(family); }

const std::vector<ReferenceEntry>& all_references() {
  static const std::vector<ReferenceEntry> table = {
      {8, Family::Narrow,
       {-8.341, -5.411, -2.908, -0.830, 0.830, 2.908, 5.411, 8.341},
       23.6, 6.8e-3, "maximal cross section, no central gap; 3 decimals"},
      {8, Family::Wide,
       {-8.452, -5.667, -3.453, -2.004, 2.004, 3.453, 5.667, 8.452},
       23.9, 1.7e-2, "maximal cross section, central gap; 3 decimals"},
      {8, Family::Decay,
       {-3.32587, -1.92458, -0.95543, -0.25, 0.25, 0.95543, 1.92458, 3.32587},
       1.3, 6.2e-10, "minimal decay rate, k r_excl = 0.5; 5 decimals"},
      {9, Family::Narrow,
       {-8.340, -5.458, -2.960, -0.843, 0.843, 2.851, 5.273, 8.100, 11.302},
       26.1, 4.4e-3, "maximal cross section, no central gap; 3 decimals"},
      {9, Family::Wide,
       {-8.423, -5.679, -3.444, -1.989, 1.989, 3.460, 5.599, 8.301, 11.479},
       26.2, 1.2e-2, "maximal cross section, central gap; 3 decimals"},
      {9, Family::Decay,
       {-3.31104, -1.91837, -0.95357, -0.25, 0.25, 0.95338, 1.91681, 3.30431, 7.26926},
       1.7, 4.6e-10, "minimal decay rate, k r_excl = 0.5; 5 decimals"},
  };
  return table;
}

const ReferenceEntry& get_reference(int n, Family family) {
  for (const auto& e : all_references()) {
    if (e.n == n && e.family == family) return e;
  }
  throw NotAvailable("no reference configuration for N=" + std::to_string(n) + " " +
                     to_string(family));
}

FitCoefficients published_fit() { return {0.172, 0.005, 1.43, 0.09}; }

QuadraticFit quadratic_fit(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 3) throw DegenerateFit("quadratic fit needs at least three points");
  std::set<double> distinct;
  for (const auto& [n, s] : points) {
    if (!std::isfinite(n) || !std::isfinite(s)) throw DegenerateFit("non-finite fit point");
    distinct.insert(n);
  }
  if (distinct.size() != points.size()) throw DegenerateFit("fit points need distinct N");

  // Normal equations for the basis (N^2, N).
  double s4 = 0.0, s3 = 0.0, s2 = 0.0, y2 = 0.0, y1 = 0.0;
  for (const auto& [n, s] : points) {
    const double n2 = n * n;
    s4 += n2 * n2;
    s3 += n2 * n;
    s2 += n2;
    y2 += n2 * s;
    y1 += n * s;
  }
  const double det = s4 * s2 - s3 * s3;
  if (!(std::abs(det) > 1e-12 * s4 * s2)) throw DegenerateFit("normal equations are singular");
  QuadraticFit fit;
  fit.a = (y2 * s2 - s3 * y1) / det;
  fit.b = (s4 * y1 - s3 * y2) / det;
  for (const auto& [n, s] : points) fit.residuals.push_back(s - (fit.a * n * n + fit.b * n));
  return fit;
}

}  // namespace coopscat
