#include "realop/sampling.hpp"

#include <cmath>
#include <numbers>

#include "realop/error.hpp"

namespace realop {
namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

// SplitMix64 output function. Word j of a substream is mix(key + (j + 1) * golden),
// i.e. SplitMix64 started at `key`, evaluated at an arbitrary counter.
std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

class Substream {
 public:
  Substream(std::uint64_t seed, std::uint64_t k, std::uint64_t block)
      : key_(mix(mix(mix(seed + kGolden) ^ k) + block)) {}

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(mix(key_ += kGolden) >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t key_;
};

}  // namespace

ComplexVector unit_sphere_sample(const SampleStream& stream, std::uint64_t k) {
  if (stream.dim < 1) throw Error(ErrorCode::invalid_dimension, "sphere dimension must be positive");

  const auto n = stream.dim;
  RealVector g(2 * n);
  for (std::uint64_t block = 0;; ++block) {
    Substream gen(stream.seed, k, block);
    // Box-Muller: one pair of Gaussians per complex coordinate.
    for (Eigen::Index c = 0; c < n; ++c) {
      // 1 - u lies in (0, 1], so the log is finite.
      const double radius = std::sqrt(-2.0 * std::log(1.0 - gen.uniform()));
      const double angle = 2.0 * std::numbers::pi * gen.uniform();
      g(2 * c) = radius * std::cos(angle);
      g(2 * c + 1) = radius * std::sin(angle);
    }
    const double norm = g.norm();
    if (norm > 0.0 && std::isfinite(norm)) return from_real(g / norm);
  }
}

ComplexVector SampleStream::next() { return unit_sphere_sample(*this, index++); }

}  // namespace realop
