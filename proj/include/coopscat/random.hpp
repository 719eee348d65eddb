#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

#include "coopscat/geometry.hpp"

namespace coopscat {

using Rng = std::mt19937_64;

/// Deterministic seed for an independent stream identified by `path`
/// (e.g. {seed, radius index, restart index}); SplitMix64 finaliser chain.
std::uint64_t derive_seed(std::initializer_list<std::uint64_t> path);

/// Uniform double in [0, 1) built from the top 53 bits.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Uniform point inside a ball of the given radius centred at the origin
/// (cube-root radius transform, isotropic direction).
Vec3 uniform_in_ball(Rng& rng, double radius);

}  // namespace coopscat
