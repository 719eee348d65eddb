#include "coopscat/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "coopscat/errors.hpp"

namespace coopscat {

SimplexResult nelder_mead(const Objective& objective, const Eigen::VectorXd& start,
                          const SimplexSettings& settings) {
  const Eigen::Index dim = start.size();
  const auto vertices = static_cast<std::size_t>(dim) + 1;
  constexpr double inf = std::numeric_limits<double>::infinity();

  SimplexResult result;
  auto eval = [&](const Eigen::VectorXd& x) {
    ++result.evaluations;
    const double v = objective(x);
    return std::isfinite(v) ? v : inf;
  };

  std::vector<Eigen::VectorXd> simplex(vertices, start);
  std::vector<double> values(vertices);
  values[0] = eval(start);
  if (!std::isfinite(values[0])) throw NonFiniteObjective("objective is not finite at the start point");

  for (Eigen::Index k = 0; k < dim; ++k) {
    double step = settings.initial_step;
    auto& vertex = simplex[static_cast<std::size_t>(k) + 1];
    auto& value = values[static_cast<std::size_t>(k) + 1];
    for (int attempt = 0; attempt < 40; ++attempt, step *= 0.5) {
      vertex = start;
      vertex[k] += step;
      value = eval(vertex);
      if (std::isfinite(value)) break;
    }
    if (!std::isfinite(value)) throw NonFiniteObjective("cannot build a finite initial simplex");
  }

  std::vector<std::size_t> order(vertices);
  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<Eigen::VectorXd> s(vertices);
    std::vector<double> v(vertices);
    for (std::size_t i = 0; i < vertices; ++i) {
      s[i] = std::move(simplex[order[i]]);
      v[i] = values[order[i]];
    }
    simplex = std::move(s);
    values = std::move(v);
  };

  sort_simplex();
  const std::size_t worst = vertices - 1;
  while (result.iterations < settings.max_iterations) {
    const double spread = values[worst] - values[0];
    const double scale = std::max(std::abs(values[0]), std::abs(values[worst]));
    if (spread <= settings.function_tolerance * scale) {
      result.converged = true;
      break;
    }
    double reach = 0.0;
    for (std::size_t i = 1; i < vertices; ++i) {
      reach = std::max(reach, (simplex[i] - simplex[0]).lpNorm<Eigen::Infinity>());
    }
    if (reach <= settings.domain_tolerance) {
      result.converged = true;
      break;
    }
    ++result.iterations;

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(dim);
    for (std::size_t i = 0; i < worst; ++i) centroid += simplex[i];
    centroid /= static_cast<double>(worst);

    const Eigen::VectorXd reflected =
        centroid + settings.reflection * (centroid - simplex[worst]);
    const double f_reflected = eval(reflected);

    if (f_reflected < values[0]) {
      const Eigen::VectorXd expanded =
          centroid + settings.expansion * (reflected - centroid);
      const double f_expanded = eval(expanded);
      if (f_expanded < f_reflected) {
        simplex[worst] = expanded;
        values[worst] = f_expanded;
      } else {
        simplex[worst] = reflected;
        values[worst] = f_reflected;
      }
    } else if (f_reflected < values[worst - 1]) {
      simplex[worst] = reflected;
      values[worst] = f_reflected;
    } else {
      bool accepted = false;
      if (f_reflected < values[worst]) {
        const Eigen::VectorXd outside =
            centroid + settings.contraction * (reflected - centroid);
        const double f_outside = eval(outside);
        if (f_outside <= f_reflected) {
          simplex[worst] = outside;
          values[worst] = f_outside;
          accepted = true;
        }
      } else {
        const Eigen::VectorXd inside =
            centroid + settings.contraction * (simplex[worst] - centroid);
        const double f_inside = eval(inside);
        if (f_inside < values[worst]) {
          simplex[worst] = inside;
          values[worst] = f_inside;
          accepted = true;
        }
      }
      if (!accepted) {
        for (std::size_t i = 1; i < vertices; ++i) {
          simplex[i] = simplex[0] + settings.shrink * (simplex[i] - simplex[0]);
          values[i] = eval(simplex[i]);
        }
      }
    }
    sort_simplex();
  }

  result.point = simplex[0];
  result.value = values[0];
  return result;
}

}  // namespace coopscat
