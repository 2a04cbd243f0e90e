#pragma once

#include <span>
#include <vector>

#include "realop/operator.hpp"

namespace realop {

inline constexpr double kHullEpsilon = 1e-12;

/// Convex polygon in the complex plane, vertices counterclockwise, closing
/// vertex not repeated. One vertex is a point, two are a segment.
class ConvexRegion {
 public:
  ConvexRegion() = default;
  /// Trusts the caller for ordering; use convex_hull() for arbitrary input.
  explicit ConvexRegion(std::vector<Complex> vertices) : vertices_(std::move(vertices)) {}

  const std::vector<Complex>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }

  /// Euclidean distance from z to the filled polygon; 0 inside.
  double distance_to(Complex z) const;
  bool contains(Complex z, double slack = kHullEpsilon) const { return distance_to(z) <= slack; }

  double perimeter() const;
  /// Points spaced along the boundary, always including every vertex.
  std::vector<Complex> boundary_samples(std::size_t count) const;

 private:
  std::vector<Complex> vertices_;
};

/// Andrew's monotone chain. Collinear points are dropped.
ConvexRegion convex_hull(std::span<const Complex> points);

/// h(theta) = max_v Re(e^{-i theta} v).
double support_function(const ConvexRegion& region, double theta);

/// Max |v| over the vertices.
double numerical_radius_estimate(const ConvexRegion& region);

/// Symmetric Hausdorff distance between the filled polygons, from at least
/// 1000 boundary samples per side (vertices included) and exact
/// point-to-polygon distances.
double hausdorff_distance(const ConvexRegion& a, const ConvexRegion& b,
                          std::size_t samples = 1000);

}  // namespace realop
