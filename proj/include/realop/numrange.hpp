#pragma once

#include <cstdint>
#include <vector>

#include "realop/geometry.hpp"
#include "realop/operator.hpp"
#include "realop/sampling.hpp"

namespace realop {

/// {z : |z - center| <= radius}.
struct Disk {
  Complex center;
  double radius = 0.0;
};

/// {center + radius e^{i t}}; a point when radius == 0.
struct Circle {
  Complex center;
  double radius = 0.0;
};

struct SampleRangeOptions {
  std::size_t n_samples = 1000;
  std::size_t circle_points = 256;
  std::uint64_t seed = kDefaultSeed;
};

/// <Phi x, x> for a unit vector x (|‖x‖ - 1| <= 1e-9).
Complex quadratic_form(const RealLinearOperator& op, const ComplexVector& x);

/// Disk(<T x, x>, |<A x, x>|). <Phi x, x> lies on its boundary circle, and
/// for dim >= 2 the whole disk is contained in W(Phi).
Disk disk_at(const RealLinearOperator& op, const ComplexVector& x);

/// Disks at samples 0..n_samples-1 of the stream (seed, dim).
std::vector<Disk> sample_disks(const RealLinearOperator& op, std::size_t n_samples,
                               std::uint64_t seed);

/// Convex hull of the disk boundaries, each discretized at circle_points
/// equal angles starting at angle 0. Radius-0 disks contribute one point.
ConvexRegion hull_of_disks(std::span<const Disk> disks, std::size_t circle_points);

/// Inner approximation of W(Phi) for dim >= 2.
ConvexRegion sample_range(const RealLinearOperator& op, const SampleRangeOptions& options = {});

/// (1/2 ‖T + 2 A_1‖, ‖T + A_1‖); always lower <= w(Phi) <= upper.
struct RadiusBounds {
  double lower = 0.0;
  double upper = 0.0;
};
RadiusBounds radius_bounds(const RealLinearOperator& op);

/// Exact numerical range of z -> alpha z + beta conj(z) on C.
Circle circlet_range(Complex alpha, Complex beta);

/// Exact numerical range of (x1, x2) -> (l1 x1 + e1 conj x1, l2 x2 + e2 conj x2):
/// conv((l1 + |e1| D) u (l2 + |e2| D)), as a polygon from `boundary_points`
/// points per circle (at least 720).
ConvexRegion diag_circlet_range(Complex l1, Complex e1, Complex l2, Complex e2,
                                std::size_t boundary_points = 2048);

/// Support function of the exact region above.
double diag_circlet_support(Complex l1, Complex e1, Complex l2, Complex e2, double theta);

}  // namespace realop
