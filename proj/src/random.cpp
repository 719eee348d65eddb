#include "coopscat/random.hpp"

#include <cmath>
#include <numbers>

namespace coopscat {

namespace {
std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}
}  // namespace

std::uint64_t derive_seed(std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = 0x6a09e667f3bcc909ULL;
  for (std::uint64_t v : path) h = splitmix(h ^ splitmix(v));
  return h;
}

Vec3 uniform_in_ball(Rng& rng, double radius) {
  const double r = radius * std::cbrt(uniform01(rng));
  const double u = 2.0 * uniform01(rng) - 1.0;
  const double phi = 2.0 * std::numbers::pi * uniform01(rng);
  const double s = std::sqrt(std::max(0.0, 1.0 - u * u));
  return {r * s * std::cos(phi), r * s * std::sin(phi), r * u};
}

}  // namespace coopscat
