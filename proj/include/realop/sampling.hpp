#pragma once

#include <cstdint>

#include "realop/operator.hpp"

namespace realop {

inline constexpr std::uint64_t kDefaultSeed = 42;

/// Counter-addressed stream of uniform samples on the unit sphere of C^n.
///
/// Sample k depends only on (seed, k, dim). Uniforms come from a counter-based
/// generator (the SplitMix64 output function applied to a key derived from
/// (seed, k, block) plus a word counter); Gaussians from Box-Muller on 53-bit
/// uniforms, one pair per complex coordinate. Outputs are reproducible on one
/// build; cross-platform bit equality of std::log/std::cos is not promised.
struct SampleStream {
  std::uint64_t seed = kDefaultSeed;
  Eigen::Index dim = 1;
  /// Samples drawn so far through next().
  std::uint64_t index = 0;

  ComplexVector next();
};

/// Draws 2n standard normals, normalizes in R^{2n} and maps through
/// U(x_1, ..., x_2n) = (x_1 + i x_2, ..., x_{2n-1} + i x_2n).
ComplexVector unit_sphere_sample(const SampleStream& stream, std::uint64_t k);

}  // namespace realop
