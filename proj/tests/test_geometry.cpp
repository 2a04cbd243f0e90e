#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "helpers.hpp"
#include "realop/geometry.hpp"

using namespace realop;

namespace {

const Complex I(0.0, 1.0);

ConvexRegion regular_polygon(Complex center, double radius, std::size_t m) {
  std::vector<Complex> pts;
  for (std::size_t k = 0; k < m; ++k) pts.push_back(center + std::polar(radius, 2.0 * std::numbers::pi * k / m));
  return convex_hull(pts);
}

bool is_ccw_convex(const ConvexRegion& r) {
  const auto& v = r.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Complex a = v[i], b = v[(i + 1) % v.size()], c = v[(i + 2) % v.size()];
    const double cross = (b - a).real() * (c - b).imag() - (b - a).imag() * (c - b).real();
    if (cross < -1e-12) return false;
    if (std::abs(b - a) <= 1e-12) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("convex_hull basic shapes") {
  SUBCASE("triangle with an interior point") {
    const std::vector<Complex> pts{0.0, 1.0, I, Complex(0.1, 0.1)};
    const auto hull = convex_hull(pts);
    REQUIRE(hull.size() == 3);
    CHECK(hull.vertices()[0] == Complex(0.0, 0.0));
    CHECK(hull.vertices()[1] == Complex(1.0, 0.0));
    CHECK(hull.vertices()[2] == I);
  }
  SUBCASE("collinear points give a segment") {
    const std::vector<Complex> pts{0.0, 1.0, 2.0};
    const auto hull = convex_hull(pts);
    REQUIRE(hull.size() == 2);
    CHECK(hull.vertices()[0] == Complex(0.0));
    CHECK(hull.vertices()[1] == Complex(2.0));
  }
  SUBCASE("repeated point") {
    const std::vector<Complex> pts{Complex(1, 1), Complex(1, 1), Complex(1, 1 + 1e-14)};
    CHECK(convex_hull(pts).size() == 1);
  }
  SUBCASE("collinear boundary points are dropped") {
    const std::vector<Complex> pts{0.0, 0.5, 1.0, Complex(1, 0.5), Complex(1, 1), Complex(0, 1), Complex(0, 0.5)};
    CHECK(convex_hull(pts).size() == 4);
  }
  SUBCASE("errors") {
    REALOP_CHECK_CODE(convex_hull(std::vector<Complex>{}), ErrorCode::empty_input);
    REALOP_CHECK_CODE(convex_hull(std::vector<Complex>{0.0, Complex(INFINITY, 0.0)}), ErrorCode::empty_input);
  }
}

TEST_CASE("convex_hull contains random input") {
  std::mt19937_64 gen(41);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> pts;
  while (pts.size() < 1000) {
    const Complex z(u(gen), u(gen));
    if (std::abs(z) <= 1.0) pts.push_back(z);
  }
  const auto hull = convex_hull(pts);
  CHECK(is_ccw_convex(hull));
  for (const auto& z : pts) CHECK(hull.contains(z, 1e-12));
}

TEST_CASE("distance_to") {
  const std::vector<Complex> square{0.0, 1.0, Complex(1, 1), I};
  const auto sq = convex_hull(square);
  CHECK(sq.distance_to(Complex(0.5, 0.5)) == 0.0);
  CHECK(sq.distance_to(Complex(2.0, 0.5)) == doctest::Approx(1.0));
  CHECK(sq.distance_to(Complex(2.0, 2.0)) == doctest::Approx(std::sqrt(2.0)));
  const std::vector<Complex> seg{0.0, 2.0};
  CHECK(convex_hull(seg).distance_to(Complex(1.0, -3.0)) == doctest::Approx(3.0));
  CHECK(convex_hull(seg).distance_to(Complex(3.0, 0.0)) == doctest::Approx(1.0));
  const std::vector<Complex> pt{I};
  CHECK(convex_hull(pt).distance_to(0.0) == doctest::Approx(1.0));
}

TEST_CASE("support_function") {
  const std::vector<Complex> square{0.0, 1.0, Complex(1, 1), I};
  CHECK(support_function(convex_hull(square), 0.0) == doctest::Approx(1.0));
  const Complex p(0.3, -2.0);
  const std::vector<Complex> single{p};
  for (double theta : {0.0, 0.4, 2.0, -1.3}) {
    CHECK(support_function(convex_hull(single), theta) == doctest::Approx((std::polar(1.0, -theta) * p).real()));
  }
  const double r = 1.7;
  const std::size_t m = 360;
  const auto circle = regular_polygon(0.0, r, m);
  for (int k = 0; k < 100; ++k) {
    const double h = support_function(circle, 0.0731 * k);
    CHECK(h <= r + 1e-12);
    CHECK(h >= r * std::cos(std::numbers::pi / m) - 1e-12);
  }
  REALOP_CHECK_CODE(support_function(ConvexRegion{}, 0.0), ErrorCode::empty_input);
}

TEST_CASE("numerical_radius_estimate") {
  const std::vector<Complex> seg{0.0, 1.0};
  CHECK(numerical_radius_estimate(convex_hull(seg)) == 1.0);
  REALOP_CHECK_CODE(numerical_radius_estimate(ConvexRegion{}), ErrorCode::empty_input);
}

TEST_CASE("hausdorff_distance") {
  const std::vector<Complex> square{0.0, 1.0, Complex(1, 1), I};
  std::vector<Complex> shifted;
  for (const auto& z : square) shifted.push_back(z + 1.0);
  const auto a = convex_hull(square);
  CHECK(hausdorff_distance(a, a) == 0.0);
  CHECK(hausdorff_distance(a, convex_hull(shifted)) == doctest::Approx(1.0));
  const auto d1 = regular_polygon(0.0, 1.0, 720);
  const auto d2 = regular_polygon(0.0, 1.1, 720);
  CHECK(std::abs(hausdorff_distance(d1, d2) - 0.1) <= 1.1 * (1.0 - std::cos(std::numbers::pi / 720)) + 1e-12);
  // A point inside a region: distance is governed by the region's far boundary.
  const std::vector<Complex> centre{Complex(0.5, 0.5)};
  CHECK(hausdorff_distance(a, convex_hull(centre)) == doctest::Approx(std::sqrt(0.5)));
  REALOP_CHECK_CODE(hausdorff_distance(a, ConvexRegion{}), ErrorCode::empty_input);
}

TEST_CASE("boundary samples include every vertex") {
  const auto poly = regular_polygon(Complex(1, 2), 3.0, 7);
  const auto samples = poly.boundary_samples(1000);
  CHECK(samples.size() >= 1000);
  for (const auto& v : poly.vertices()) {
    CHECK(std::count(samples.begin(), samples.end(), v) >= 1);
  }
  for (const auto& z : samples) CHECK(poly.distance_to(z) <= 1e-12);
  CHECK(poly.perimeter() == doctest::Approx(7 * 2 * 3.0 * std::sin(std::numbers::pi / 7)));
}

}  // TEST_SUITE
