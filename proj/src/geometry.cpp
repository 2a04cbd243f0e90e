#include "realop/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "realop/error.hpp"

namespace realop {
namespace {

double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

double segment_distance(Complex z, Complex a, Complex b) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(z - a);
  const double t = std::clamp(((z - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(z - (a + t * ab));
}

void require_nonempty(const ConvexRegion& region) {
  if (region.empty()) throw Error(ErrorCode::empty_input, "region has no vertices");
}

}  // namespace

double ConvexRegion::distance_to(Complex z) const {
  require_nonempty(*this);
  const auto n = vertices_.size();
  if (n == 1) return std::abs(z - vertices_[0]);
  if (n == 2) return segment_distance(z, vertices_[0], vertices_[1]);

  bool inside = true;
  for (std::size_t i = 0; i < n && inside; ++i) {
    const Complex a = vertices_[i];
    const Complex b = vertices_[(i + 1) % n];
    if (cross(b - a, z - a) < 0.0) inside = false;
  }
  if (inside) return 0.0;

  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    best = std::min(best, segment_distance(z, vertices_[i], vertices_[(i + 1) % n]));
  }
  return best;
}

double ConvexRegion::perimeter() const {
  const auto n = vertices_.size();
  if (n < 2) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) total += std::abs(vertices_[(i + 1) % n] - vertices_[i]);
  return total;
}

std::vector<Complex> ConvexRegion::boundary_samples(std::size_t count) const {
  require_nonempty(*this);
  const auto n = vertices_.size();
  if (n == 1) return vertices_;

  const double spacing = perimeter() / static_cast<double>(std::max<std::size_t>(count, 1));
  std::vector<Complex> out;
  out.reserve(count + n);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex a = vertices_[i];
    const Complex b = vertices_[(i + 1) % n];
    out.push_back(a);
    if (spacing <= 0.0) continue;
    const double len = std::abs(b - a);
    const auto steps = static_cast<std::size_t>(std::floor(len / spacing));
    for (std::size_t s = 1; s <= steps; ++s) {
      out.push_back(a + (b - a) * (static_cast<double>(s) * spacing / len));
    }
  }
  return out;
}

ConvexRegion convex_hull(std::span<const Complex> points) {
  if (points.empty()) throw Error(ErrorCode::empty_input, "convex hull of no points");
  std::vector<Complex> pts(points.begin(), points.end());
  for (const auto& p : pts) {
    if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) {
      throw Error(ErrorCode::empty_input, "convex hull input contains a non-finite point");
    }
  }
  std::sort(pts.begin(), pts.end(), [](Complex a, Complex b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](Complex a, Complex b) { return std::abs(a - b) <= kHullEpsilon; }),
            pts.end());
  if (pts.size() < 3) return ConvexRegion(std::move(pts));

  std::vector<Complex> hull(2 * pts.size());
  std::size_t k = 0;
  auto keeps_left_turn = [&](Complex p) {
    return cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) > kHullEpsilon;
  };
  for (const auto& p : pts) {
    while (k >= 2 && !keeps_left_turn(p)) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
    while (k >= lower && !keeps_left_turn(*it)) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  return ConvexRegion(std::move(hull));
}

double support_function(const ConvexRegion& region, double theta) {
  require_nonempty(region);
  const Complex rotation = std::polar(1.0, -theta);
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& v : region.vertices()) best = std::max(best, (rotation * v).real());
  return best;
}

double numerical_radius_estimate(const ConvexRegion& region) {
  require_nonempty(region);
  double best = 0.0;
  for (const auto& v : region.vertices()) best = std::max(best, std::abs(v));
  return best;
}

double hausdorff_distance(const ConvexRegion& a, const ConvexRegion& b, std::size_t samples) {
  require_nonempty(a);
  require_nonempty(b);
  samples = std::max<std::size_t>(samples, 1000);
  double worst = 0.0;
  for (const auto& z : a.boundary_samples(samples)) worst = std::max(worst, b.distance_to(z));
  for (const auto& z : b.boundary_samples(samples)) worst = std::max(worst, a.distance_to(z));
  return worst;
}

}  // namespace realop
