#pragma once

#include <optional>
#include <vector>

#include "realop/operator.hpp"

namespace realop {

struct Rect {
  double re_min = 0.0;
  double re_max = 0.0;
  double im_min = 0.0;
  double im_max = 0.0;

  bool contains(Complex z) const {
    return z.real() >= re_min && z.real() <= re_max && z.imag() >= im_min && z.imag() <= im_max;
  }
};

struct DetectedPoint {
  Complex lambda;
  double sigma_min = 0.0;
};

/// Grid of sigma_min(R(Phi) - R(lambda I)) over a rectangle, plus the
/// refined nodes whose value falls below tol.
///
/// Nodes are re_min + i*step (i < n_re) by im_min + j*step (j < n_im), stored
/// row-major with the imaginary index outer. In finite dimension the point,
/// approximate-point and surjectivity spectra coincide, so a single
/// statistic serves all of them.
struct SpectralScan {
  Rect rect;
  double step = 0.0;
  double tol = 0.0;
  std::size_t n_re = 0;
  std::size_t n_im = 0;
  std::vector<double> sigma_min_grid;
  std::vector<DetectedPoint> detected;

  Complex node(std::size_t i_re, std::size_t j_im) const {
    return {rect.re_min + static_cast<double>(i_re) * step,
            rect.im_min + static_cast<double>(j_im) * step};
  }
  double value(std::size_t i_re, std::size_t j_im) const { return sigma_min_grid[j_im * n_re + i_re]; }
  double min_grid_value() const;
  bool empty_spectrum() const noexcept { return detected.empty(); }
};

struct ScanOptions {
  std::optional<Rect> rect;   // default: centered square, half-width 1.05 ‖Phi‖
  std::optional<double> step;  // default: ‖Phi‖ / 100
  std::optional<double> tol;   // default: ‖Phi‖ / 100
};

double sigma_min_at(const RealLinearOperator& op, Complex lambda);

SpectralScan scan(const RealLinearOperator& op, const Rect& rect, double step, double tol);
SpectralScan scan(const RealLinearOperator& op, const ScanOptions& options = {});

/// Rect, step and tol actually used by scan(op, options).
struct ResolvedScanParameters {
  Rect rect;
  double step = 0.0;
  double tol = 0.0;
};
ResolvedScanParameters resolve_scan_parameters(const RealLinearOperator& op,
                                               const ScanOptions& options);

/// Unit x with ‖Phi x - lambda x‖ <= tol, if sigma_min permits one.
std::optional<ComplexVector> eigen_check(const RealLinearOperator& op, Complex lambda, double tol);

struct SymmetryViolation {
  Complex lambda;
  Complex rotated;
  double sigma_min = 0.0;
};

struct SymmetryReport {
  std::size_t checked = 0;
  std::vector<SymmetryViolation> violations;

  bool passed() const noexcept { return violations.empty(); }
};

/// For antilinear operators (zero linear part): every detected lambda must
/// stay below 2 tol under the 16 rotations e^{2 pi i k / 16}.
SymmetryReport circular_symmetry_check(const RealLinearOperator& op, const SpectralScan& scan);

struct SpectralRadiusEstimate {
  double radius = 0.0;
  bool empty_spectrum = false;
};

/// Max |lambda| over detected points; 0 with the empty flag set when nothing
/// was detected.
SpectralRadiusEstimate spectral_radius_estimate(const SpectralScan& scan);

}  // namespace realop
