#pragma once

#include <string>
#include <utility>
#include <vector>

#include "coopscat/geometry.hpp"

namespace coopscat {

enum class Family { Narrow, Wide, Decay };

std::string to_string(Family family);
Family parse_family(const std::string& name);

/// Published optimised collinear configuration (positions are k*z on the z-axis).
struct ReferenceEntry {
  int n = 0;
  Family family = Family::Narrow;
  std::vector<double> positions;
  double sigma = 0.0;      // sigma / sigma_max^(1), 3 significant figures
  double gamma_min = 0.0;  // gamma_min / gamma, 2 significant figures
  std::string note;

  Configuration configuration() const;
  std::string label() const;  // e.g. "N8-narrow"
};

/// (N, family) in {8, 9} x {narrow, wide, decay}; NotAvailable otherwise.
const ReferenceEntry& get_reference(int n, Family family);
const std::vector<ReferenceEntry>& all_references();

/// Quadratic growth law sigma(N) = a N^2 + b N fitted to the optimised cross sections.
struct FitCoefficients {
  double a = 0.0;
  double a_err = 0.0;
  double b = 0.0;
  double b_err = 0.0;
};

FitCoefficients published_fit();

struct QuadraticFit {
  double a = 0.0;
  double b = 0.0;
  std::vector<double> residuals;  // sigma_i - (a N_i^2 + b N_i)
};

/// Least squares for sigma = a N^2 + b N. Needs >= 3 points with distinct N;
/// throws DegenerateFit otherwise.
QuadraticFit quadratic_fit(const std::vector<std::pair<double, double>>& points);

}  // namespace coopscat
