// Acceptance criteria, one PASS/FAIL line each. Exit status is nonzero if any
// criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "realop/io.hpp"
#include "realop/numrange.hpp"
#include "realop/sampling.hpp"
#include "realop/spectrum.hpp"
#include "realop/verify.hpp"

using namespace realop;

namespace {

constexpr std::uint64_t kSeed = 42;

// Regression floor for the empty-spectrum scan. The first run measured
// min sigma_min = 1 (at lambda = 0, where the pencil is the operator itself).
constexpr double kEmptySpectrumFloor = 1.0 - 1e-9;

int failures = 0;

void report(int id, const char* title, bool ok, const std::string& detail, double seconds) {
  std::printf("[%s] %d %s: %s (%.2f s)\n", ok ? "PASS" : "FAIL", id, title, detail.c_str(), seconds);
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Random operator whose 2n^2 complex entries are a uniform direction, drawn
// from the library's own seeded sampler.
ComplexMatrix random_matrix(const SampleStream& stream, std::uint64_t k, Eigen::Index n) {
  const SampleStream sized{stream.seed, n * n};
  return unit_sphere_sample(sized, k).reshaped(n, n);
}

RealLinearOperator random_self_adjoint(std::uint64_t seed, std::uint64_t k, Eigen::Index n) {
  const SampleStream stream{seed, 1};
  const ComplexMatrix t = random_matrix(stream, 2 * k, n);
  const ComplexMatrix a = random_matrix(stream, 2 * k + 1, n);
  return {t + t.adjoint(), a + a.transpose()};
}

RealLinearOperator random_operator(std::uint64_t seed, std::uint64_t k, Eigen::Index n) {
  const SampleStream stream{seed, 1};
  return {random_matrix(stream, 2 * k, n), random_matrix(stream, 2 * k + 1, n)};
}

// Imaginary extent of region ∩ {Re z <= cut}.
std::pair<double, double> imag_span_left_of(const ConvexRegion& region, double cut) {
  double lo = INFINITY;
  double hi = -INFINITY;
  const auto& v = region.vertices();
  const auto take = [&](Complex z) {
    lo = std::min(lo, z.imag());
    hi = std::max(hi, z.imag());
  };
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Complex a = v[i];
    const Complex b = v[(i + 1) % v.size()];
    if (a.real() <= cut) take(a);
    if ((a.real() - cut) * (b.real() - cut) < 0.0) {
      const double s = (cut - a.real()) / (b.real() - a.real());
      take(a + s * (b - a));
    }
  }
  return {lo, hi};
}

void example_612() {
  Timer timer;
  const auto op = builtin_example("ex612").op;
  const auto sampled = sample_range(op, {2000, 256, kSeed});
  const auto exact = diag_circlet_range(1.0, 0.0, 0.0, 0.5);
  const double d = hausdorff_distance(sampled, exact);
  report(1, "ex612 hull vs exact", d <= 0.02, fmt("Hausdorff %.5f <= 0.02", d), timer.seconds());
}

void example_613() {
  Timer timer;
  const auto op = builtin_example("ex613").op;
  const auto sampled = sample_range(op, {2000, 256, kSeed});
  const auto exact = diag_circlet_range(0.0, 1.0, 3.0, 1.0);
  const double d = hausdorff_distance(sampled, exact);
  report(2, "ex613 hull vs exact", d <= 0.02, fmt("Hausdorff %.5f <= 0.02", d), timer.seconds());
}

void phi2_claims() {
  Timer timer;
  const auto region = sample_range(builtin_example("phi2").op, {2000, 256, kSeed});
  double min_re = INFINITY;
  for (const auto& v : region.vertices()) min_re = std::min(min_re, v.real());
  const double h = support_function(region, std::numbers::pi);
  const auto [lo, hi] = imag_span_left_of(region, 0.01);
  const bool ok = std::abs(min_re) <= 0.01 && std::abs(h) <= 0.01 && lo <= -0.98 && hi >= 0.98;
  report(3, "phi2 left boundary", ok,
         fmt("min Re %.5f, h(pi) %.5f, Im span of Re<=0.01 [%.4f, %.4f]", min_re, h, lo, hi),
         timer.seconds());
}

void empty_spectrum() {
  Timer timer;
  const auto sc = scan(builtin_example("empty-spectrum").op, Rect{-1.1, 1.1, -1.1, 1.1}, 0.02,
                       resolve_scan_parameters(builtin_example("empty-spectrum").op, {}).tol);
  const double floor = sc.min_grid_value();
  const bool ok = sc.detected.empty() && floor >= kEmptySpectrumFloor;
  report(4, "empty spectrum", ok,
         fmt("%zu detected, min sigma_min %.6f >= %.6f", sc.detected.size(), floor, kEmptySpectrumFloor),
         timer.seconds());
}

void conjugation_circle() {
  Timer timer;
  const auto sc = scan(RealLinearOperator::conjugation(2), Rect{-1.1, 1.1, -1.1, 1.1}, 0.02, 0.02);
  double off_circle = 0.0;
  for (const auto& p : sc.detected) off_circle = std::max(off_circle, std::abs(std::abs(p.lambda) - 1.0));
  double worst_gap = 0.0;
  for (int k = 0; k < 16; ++k) {
    const Complex dir = std::polar(1.0, 2.0 * std::numbers::pi * k / 16.0);
    double gap = INFINITY;
    for (const auto& p : sc.detected) gap = std::min(gap, std::abs(p.lambda - dir));
    worst_gap = std::max(worst_gap, gap);
  }
  const bool ok = !sc.detected.empty() && off_circle <= 0.02 && worst_gap <= 0.05;
  report(5, "conjugation spectrum", ok,
         fmt("%zu detected, max ||lambda|-1| %.5f <= 0.02, worst direction gap %.5f <= 0.05",
             sc.detected.size(), off_circle, worst_gap),
         timer.seconds());
}

void self_adjoint_radius() {
  Timer timer;
  constexpr Eigen::Index kDims[] = {2, 3, 4};
  double worst = 0.0;
  for (std::uint64_t k = 0; k < 20; ++k) {
    const auto op = random_self_adjoint(kSeed, k, kDims[k % 3]);
    const double norm = operator_norm(op);
    const double w = numerical_radius_estimate(sample_range(op, {5000, 256, kSeed + k}));
    worst = std::max(worst, std::abs(w - norm) / norm);
  }
  report(6, "self-adjoint radius", worst <= 0.03,
         fmt("worst |w - ‖Phi‖| / ‖Phi‖ = %.5f <= 0.03 over 20 operators", worst), timer.seconds());
}

void bounds_sandwich() {
  Timer timer;
  constexpr Eigen::Index kDims[] = {2, 3, 4};
  double worst = -INFINITY;
  for (std::uint64_t k = 0; k < 50; ++k) {
    const auto op = random_operator(kSeed + 1, k, kDims[k % 3]);
    const auto bounds = radius_bounds(op);
    const double w = numerical_radius_estimate(sample_range(op, {10000, 256, kSeed + k}));
    worst = std::max(worst, std::max(bounds.lower - 1e-9 - w, w - 1.01 * bounds.upper));
  }
  report(7, "radius bounds sandwich", worst <= 0.0,
         fmt("worst violation %.3e <= 0 over 50 operators", worst), timer.seconds());
}

void property_suite() {
  Timer timer;
  VerifyOptions options;
  options.seed = kSeed;
  options.trials = 20;
  const auto rep = run_verify(options);
  static const char* const kNamed[] = {
      "decomposition_roundtrip", "realification_homomorphism", "composition_duality",
      "birkhoff_james",          "duality_pointwise",          "convexity",
      "monotonicity",            "spectrum_in_numerical_range", "radius_chain",
      "antilinear_centrosymmetry"};
  bool ok = true;
  std::string failed;
  for (const char* name : kNamed) {
    const auto* c = rep.find(name);
    if (c == nullptr || !c->passed) {
      ok = false;
      failed += failed.empty() ? name : std::string(", ") + name;
    }
  }
  std::size_t suite_failed = 0;
  for (const auto& c : rep.checks) suite_failed += c.passed ? 0 : 1;
  report(8, "property suite", ok,
         fmt("%zu named invariants, failing: %s; full suite %zu/%zu passed", std::size(kNamed),
             failed.empty() ? "none" : failed.c_str(), rep.checks.size() - suite_failed, rep.checks.size()),
         timer.seconds());
  for (const char* name : kNamed) {
    if (const auto* c = rep.find(name)) {
      std::printf("       %-28s %s worst=%.3e threshold=%.3e\n", name, c->passed ? "ok  " : "FAIL", c->worst,
                  c->threshold);
    }
  }
  for (const auto& c : rep.checks) {
    if (!c.passed && std::find(std::begin(kNamed), std::end(kNamed), c.name) == std::end(kNamed)) {
      std::printf("       (other) %-20s FAIL worst=%.3e threshold=%.3e\n", c.name.c_str(), c.worst, c.threshold);
    }
  }
}

std::string all_csv() {
  std::string out;
  for (const char* name : {"phi1", "phi2", "ex612", "ex613"}) {
    out += region_csv(sample_range(builtin_example(name).op, {2000, 256, kSeed}));
  }
  const auto op = builtin_example("phi1").op;
  const auto sc = scan(op, ScanOptions{});
  out += scan_grid_csv(sc) + detected_csv(sc);
  out += circle_csv(circlet_range(1.0, Complex(0.0, 2.0)));
  return out;
}

void determinism() {
  Timer timer;
  const auto a = all_csv();
  const auto b = all_csv();
  report(9, "determinism", a == b, fmt("%zu CSV bytes compared, %s", a.size(), a == b ? "identical" : "differ"),
         timer.seconds());
}

}  // namespace

int main() {
  example_612();
  example_613();
  phi2_claims();
  empty_spectrum();
  conjugation_circle();
  self_adjoint_radius();
  bounds_sandwich();
  property_suite();
  determinism();
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
