#include "realop/numrange.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "realop/error.hpp"

namespace realop {
namespace {

void require_unit(const ComplexVector& x) {
  const double norm = x.norm();
  if (std::abs(norm - 1.0) > 1e-9) {
    throw Error(ErrorCode::normalization, "expected a unit vector, got norm " + std::to_string(norm));
  }
}

std::vector<Complex> unit_roots(std::size_t count) {
  std::vector<Complex> roots(count);
  for (std::size_t j = 0; j < count; ++j) {
    roots[j] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) /
                                   static_cast<double>(count));
  }
  return roots;
}

// Polygon through the extreme discretized points in 32 directions (an
// Akl-Toussaint style prefilter). A disk lying strictly inside it cannot
// contribute a hull vertex.
class InteriorFilter {
 public:
  InteriorFilter(std::span<const Disk> disks, std::span<const Complex> roots) {
    constexpr std::size_t kDirections = 32;
    std::array<double, kDirections> best;
    best.fill(-std::numeric_limits<double>::infinity());
    std::array<Complex, kDirections> extreme{};
    const auto m = roots.size();
    for (std::size_t d = 0; d < kDirections; ++d) {
      const double theta = 2.0 * std::numbers::pi * static_cast<double>(d) / kDirections;
      const Complex dir = std::polar(1.0, -theta);
      const auto nearest = static_cast<std::size_t>(
          std::lround(theta / (2.0 * std::numbers::pi) * static_cast<double>(m))) % m;
      for (const auto& disk : disks) {
        const Complex p = disk.radius > 0.0 ? disk.center + disk.radius * roots[nearest]
                                            : disk.center;
        const double score = (dir * p).real();
        if (score > best[d]) {
          best[d] = score;
          extreme[d] = p;
        }
      }
    }
    for (const auto& p : extreme) {
      if (vertices_.empty() || std::abs(p - vertices_.back()) > kHullEpsilon) vertices_.push_back(p);
    }
    while (vertices_.size() > 1 && std::abs(vertices_.front() - vertices_.back()) <= kHullEpsilon) {
      vertices_.pop_back();
    }
    if (vertices_.size() < 3) vertices_.clear();
  }

  bool strictly_inside(const Disk& disk) const {
    if (vertices_.empty()) return false;
    const auto n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Complex a = vertices_[i];
      const Complex edge = vertices_[(i + 1) % n] - a;
      const Complex rel = disk.center - a;
      const double signed_distance =
          (edge.real() * rel.imag() - edge.imag() * rel.real()) / std::abs(edge);
      if (signed_distance <= disk.radius + 1e-9) return false;
    }
    return true;
  }

 private:
  std::vector<Complex> vertices_;
};

}  // namespace

Complex quadratic_form(const RealLinearOperator& op, const ComplexVector& x) {
  require_unit(x);
  return inner(apply(op, x), x);
}

Disk disk_at(const RealLinearOperator& op, const ComplexVector& x) {
  require_unit(x);
  if (x.size() != op.dim()) throw Error(ErrorCode::dimension_mismatch, "disk_at vector length");
  const Complex center = inner(op.linear() * x, x);
  const double radius = std::abs(inner(op.antilinear() * x.conjugate(), x));
  return {center, radius};
}

std::vector<Disk> sample_disks(const RealLinearOperator& op, std::size_t n_samples,
                               std::uint64_t seed) {
  const SampleStream stream{seed, op.dim()};
  std::vector<Disk> disks;
  disks.reserve(n_samples);
  for (std::size_t k = 0; k < n_samples; ++k) disks.push_back(disk_at(op, unit_sphere_sample(stream, k)));
  return disks;
}

ConvexRegion hull_of_disks(std::span<const Disk> disks, std::size_t circle_points) {
  if (disks.empty() || circle_points == 0) {
    throw Error(ErrorCode::empty_input, "no disks to take the hull of");
  }
  if (circle_points < 3) {
    throw Error(ErrorCode::precondition, "need at least 3 points per circle");
  }
  const auto roots = unit_roots(circle_points);
  const InteriorFilter filter(disks, roots);

  std::vector<Complex> points;
  for (const auto& disk : disks) {
    if (disk.radius == 0.0) {
      points.push_back(disk.center);
      continue;
    }
    if (filter.strictly_inside(disk)) continue;
    for (const auto& w : roots) points.push_back(disk.center + disk.radius * w);
  }
  return convex_hull(points);
}

ConvexRegion sample_range(const RealLinearOperator& op, const SampleRangeOptions& options) {
  if (op.dim() < 2) {
    throw Error(ErrorCode::dim1_not_convex,
                "numerical range in dimension 1 is a circle; use circlet_range");
  }
  if (options.n_samples == 0 || options.circle_points == 0) {
    throw Error(ErrorCode::empty_input, "sample_range needs N >= 1 and M >= 3");
  }
  const auto disks = sample_disks(op, options.n_samples, options.seed);
  return hull_of_disks(disks, options.circle_points);
}

RadiusBounds radius_bounds(const RealLinearOperator& op) {
  const auto [t_plus_a1, residual] = self_adjoint_split(op);
  const RealLinearOperator doubled = scale_parts(t_plus_a1, 1.0, 2.0);
  return {0.5 * operator_norm(doubled), operator_norm(t_plus_a1)};
}

Circle circlet_range(Complex alpha, Complex beta) { return {alpha, std::abs(beta)}; }

ConvexRegion diag_circlet_range(Complex l1, Complex e1, Complex l2, Complex e2,
                                std::size_t boundary_points) {
  boundary_points = std::max<std::size_t>(boundary_points, 720);
  const std::array<Disk, 2> disks{Disk{l1, std::abs(e1)}, Disk{l2, std::abs(e2)}};
  return hull_of_disks(disks, boundary_points);
}

double diag_circlet_support(Complex l1, Complex e1, Complex l2, Complex e2, double theta) {
  const Complex rotation = std::polar(1.0, -theta);
  return std::max((rotation * l1).real() + std::abs(e1), (rotation * l2).real() + std::abs(e2));
}

}  // namespace realop
