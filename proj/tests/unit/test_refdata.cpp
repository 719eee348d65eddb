#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "coopscat/errors.hpp"
#include "coopscat/refdata.hpp"
#include "coopscat/resonance.hpp"
#include "coopscat/scatter_core.hpp"

using namespace coopscat;
using doctest::Approx;

TEST_CASE("table entries") {
  CHECK(all_references().size() == 6);
  const ReferenceEntry& n8 = get_reference(8, Family::Narrow);
  CHECK(n8.positions.front() == -8.341);
  CHECK(n8.positions.back() == 8.341);
  CHECK(n8.sigma == 23.6);
  CHECK(n8.gamma_min == 6.8e-3);
  CHECK(n8.label() == "N8-narrow");

  const ReferenceEntry& w9 = get_reference(9, Family::Wide);
  CHECK(w9.positions.back() == 11.479);
  CHECK(w9.sigma == 26.2);
  CHECK(w9.gamma_min == 1.2e-2);

  const ReferenceEntry& d8 = get_reference(8, Family::Decay);
  CHECK(d8.positions[3] == -0.25);
  CHECK(d8.positions[4] == 0.25);
  CHECK(d8.gamma_min == 6.2e-10);
  CHECK(d8.sigma == 1.3);

  CHECK_THROWS_AS(get_reference(10, Family::Narrow), NotAvailable);
  CHECK(parse_family("wide") == Family::Wide);
  CHECK_THROWS_AS(parse_family("broad"), InvalidArgument);
}

TEST_CASE("entries are collinear along z and sorted") {
  for (const auto& e : all_references()) {
    const Configuration c = e.configuration();
    CHECK(c.size() == static_cast<std::size_t>(e.n));
    CHECK(c.label() == e.label());
    CHECK(c.is_collinear_with(Vec3::UnitZ()));
    for (std::size_t k = 1; k < e.positions.size(); ++k) CHECK(e.positions[k] > e.positions[k - 1]);
  }
}

TEST_CASE("round trip through the scattering and resonance modules") {
  for (const auto& e : all_references()) {
    const Configuration c = e.configuration();
    CHECK(std::abs(total_cross_section(c, IncidentWave(), ScattererModel(0.0)) - e.sigma) <= 0.1);
    const double g = min_decay_rate(c);
    if (e.family == Family::Decay) {
      CHECK(g <= 3.0 * e.gamma_min);
      CHECK(g >= e.gamma_min / 3.0);
    } else {
      CHECK(std::abs(g - e.gamma_min) <= 0.15 * e.gamma_min);
    }
  }
}

TEST_CASE("quadratic fit") {
  SUBCASE("exact synthetic data") {
    std::vector<std::pair<double, double>> pts;
    for (int n = 2; n <= 10; ++n) pts.emplace_back(n, 0.2 * n * n + 1.0 * n);
    const QuadraticFit fit = quadratic_fit(pts);
    CHECK(std::abs(fit.a - 0.2) < 1e-12);
    CHECK(std::abs(fit.b - 1.0) < 1e-12);
    REQUIRE(fit.residuals.size() == pts.size());
    for (double r : fit.residuals) CHECK(std::abs(r) < 1e-11);
  }
  SUBCASE("residuals are orthogonal to the basis") {
    const std::vector<std::pair<double, double>> pts{{2, 3.4}, {3, 6.5}, {5, 12.0}, {8, 23.6}};
    const QuadraticFit fit = quadratic_fit(pts);
    double r1 = 0.0, r2 = 0.0;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      r1 += fit.residuals[k] * pts[k].first;
      r2 += fit.residuals[k] * pts[k].first * pts[k].first;
    }
    CHECK(std::abs(r1) < 1e-10);
    CHECK(std::abs(r2) < 1e-9);
  }
  SUBCASE("degenerate input") {
    CHECK_THROWS_AS(quadratic_fit({{8, 23.6}, {9, 26.1}}), DegenerateFit);
    CHECK_THROWS_AS(quadratic_fit({{8, 23.6}, {8, 23.9}, {9, 26.1}}), DegenerateFit);
    CHECK_THROWS_AS(quadratic_fit({{8, 23.6}, {9, NAN}, {10, 30.0}}), DegenerateFit);
  }
  const FitCoefficients pub = published_fit();
  CHECK(pub.a == 0.172);
  CHECK(pub.a_err == 0.005);
  CHECK(pub.b == 1.43);
  CHECK(pub.b_err == 0.09);
}
