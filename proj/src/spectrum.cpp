#include "realop/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "realop/error.hpp"

namespace realop {
namespace {

constexpr int kRefineIterations = 20;
constexpr int kSymmetryRotations = 16;

// Evaluates sigma_min(R - R(lambda I)) exactly, reusing one realification.
class PencilEvaluator {
 public:
  explicit PencilEvaluator(const RealLinearOperator& op)
      : base_(realify(op).matrix), work_(base_.rows(), base_.cols()) {}

  double operator()(Complex lambda) {
    shift(lambda);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(work_);
    return svd.singularValues()(svd.singularValues().size() - 1);
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> full_svd(Complex lambda) {
    shift(lambda);
    return Eigen::JacobiSVD<Eigen::MatrixXd>(work_, Eigen::ComputeFullV);
  }

 private:
  void shift(Complex lambda) {
    work_ = base_;
    const double a = lambda.real();
    const double b = lambda.imag();
    for (Eigen::Index k = 0; k < work_.rows(); k += 2) {
      work_(k, k) -= a;
      work_(k, k + 1) += b;
      work_(k + 1, k) -= b;
      work_(k + 1, k + 1) -= a;
    }
  }

  Eigen::MatrixXd base_;
  Eigen::MatrixXd work_;
};

// Screening evaluator for grid scans. With M = R - a I - b J (J the
// realification of multiplication by i, so J^T J = I and J^T = -J),
//   M^T M = R^T R - a (R + R^T) - b (R^T J + J^T R) + |lambda|^2 I,
// and sigma_min^2 is its smallest eigenvalue. About three times faster than an
// SVD per point; absolute accuracy near zero is ~sqrt(eps) * ‖M‖.
class GramEvaluator {
 public:
  explicit GramEvaluator(const RealLinearOperator& op) {
    const Eigen::MatrixXd r = realify(op).matrix;
    const Eigen::Index m = r.rows();
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(m, m);
    for (Eigen::Index k = 0; k < m; k += 2) {
      j(k, k + 1) = -1.0;
      j(k + 1, k) = 1.0;
    }
    gram_ = r.transpose() * r;
    sym_ = r + r.transpose();
    rot_ = r.transpose() * j + j.transpose() * r;
    work_.resize(m, m);
    solver_ = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m);
  }

  double operator()(Complex lambda) {
    const double a = lambda.real();
    const double b = lambda.imag();
    work_ = gram_ - a * sym_ - b * rot_;
    work_.diagonal().array() += a * a + b * b;
    solver_.compute(work_, Eigen::EigenvaluesOnly);
    return std::sqrt(std::max(0.0, solver_.eigenvalues()(0)));
  }

 private:
  Eigen::MatrixXd gram_;
  Eigen::MatrixXd sym_;
  Eigen::MatrixXd rot_;
  Eigen::MatrixXd work_;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver_;
};

void validate_rect(const Rect& rect) {
  const bool finite = std::isfinite(rect.re_min) && std::isfinite(rect.re_max) &&
                      std::isfinite(rect.im_min) && std::isfinite(rect.im_max);
  if (!finite || !(rect.re_max > rect.re_min) || !(rect.im_max > rect.im_min)) {
    throw Error(ErrorCode::invalid_rect, "scan rectangle must have positive width and height");
  }
}

std::size_t node_count(double lo, double hi, double step) {
  return static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

// Coordinate descent confined to the grid cell around `start` and the rect.
template <typename Evaluator>
DetectedPoint refine(Evaluator& eval, Complex start, double value, double step,
                     const Rect& rect) {
  const double lo_re = std::max(rect.re_min, start.real() - 0.5 * step);
  const double hi_re = std::min(rect.re_max, start.real() + 0.5 * step);
  const double lo_im = std::max(rect.im_min, start.imag() - 0.5 * step);
  const double hi_im = std::min(rect.im_max, start.imag() + 0.5 * step);
  auto clamp = [&](Complex z) {
    return Complex(std::clamp(z.real(), lo_re, hi_re), std::clamp(z.imag(), lo_im, hi_im));
  };

  Complex pos = clamp(start);
  if (pos != start) value = eval(pos);
  double h = 0.25 * step;
  const Complex moves[] = {{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}};
  for (int iter = 0; iter < kRefineIterations; ++iter) {
    bool improved = false;
    for (const auto& move : moves) {
      const Complex candidate = clamp(pos + h * move);
      if (candidate == pos) continue;
      const double v = eval(candidate);
      if (v < value) {
        value = v;
        pos = candidate;
        improved = true;
      }
    }
    if (!improved) h *= 0.5;
  }
  return {pos, value};
}

}  // namespace

double SpectralScan::min_grid_value() const {
  if (sigma_min_grid.empty()) return std::numeric_limits<double>::infinity();
  return *std::min_element(sigma_min_grid.begin(), sigma_min_grid.end());
}

double sigma_min_at(const RealLinearOperator& op, Complex lambda) {
  PencilEvaluator eval(op);
  return eval(lambda);
}

SpectralScan scan(const RealLinearOperator& op, const Rect& rect, double step, double tol) {
  validate_rect(rect);
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw Error(ErrorCode::precondition, "scan step must be positive");
  }
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw Error(ErrorCode::precondition, "scan tolerance must be positive");
  }

  SpectralScan out;
  out.rect = rect;
  out.step = step;
  out.tol = tol;
  out.n_re = node_count(rect.re_min, rect.re_max, step);
  out.n_im = node_count(rect.im_min, rect.im_max, step);
  out.sigma_min_grid.resize(out.n_re * out.n_im);

  GramEvaluator eval(op);
  for (std::size_t j = 0; j < out.n_im; ++j) {
    for (std::size_t i = 0; i < out.n_re; ++i) {
      out.sigma_min_grid[j * out.n_re + i] = eval(out.node(i, j));
    }
  }

  // sigma_min is 1-Lipschitz in lambda, so refinement inside a cell can lower
  // a node's value by at most step / sqrt(2).
  const double candidate_cutoff = tol + step * std::numbers::sqrt2 / 2.0;
  for (std::size_t j = 0; j < out.n_im; ++j) {
    for (std::size_t i = 0; i < out.n_re; ++i) {
      const double v = out.value(i, j);
      if (v > candidate_cutoff) continue;
      const auto refined = refine(eval, out.node(i, j), v, step, rect);
      if (refined.sigma_min <= tol) out.detected.push_back(refined);
    }
  }
  return out;
}

ResolvedScanParameters resolve_scan_parameters(const RealLinearOperator& op,
                                               const ScanOptions& options) {
  double scale = 1.0;
  if (!options.rect || !options.step || !options.tol) {
    const double norm = operator_norm(op);
    if (norm > 0.0) scale = norm;
  }
  const double half = 1.05 * scale;
  return {options.rect.value_or(Rect{-half, half, -half, half}),
          options.step.value_or(scale / 100.0), options.tol.value_or(scale / 100.0)};
}

SpectralScan scan(const RealLinearOperator& op, const ScanOptions& options) {
  const auto p = resolve_scan_parameters(op, options);
  return scan(op, p.rect, p.step, p.tol);
}

std::optional<ComplexVector> eigen_check(const RealLinearOperator& op, Complex lambda,
                                         double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::precondition, "eigen_check tolerance must be positive");
  PencilEvaluator eval(op);
  const auto svd = eval.full_svd(lambda);
  const auto last = svd.singularValues().size() - 1;
  if (svd.singularValues()(last) > tol) return std::nullopt;
  ComplexVector x = from_real(svd.matrixV().col(last));
  x.normalize();
  return x;
}

SymmetryReport circular_symmetry_check(const RealLinearOperator& op, const SpectralScan& scan) {
  if (op.linear().cwiseAbs().maxCoeff() != 0.0) {
    throw Error(ErrorCode::precondition, "circular symmetry check needs a purely antilinear operator");
  }
  GramEvaluator eval(op);
  SymmetryReport report;
  for (const auto& point : scan.detected) {
    for (int k = 0; k < kSymmetryRotations; ++k) {
      const Complex rotated =
          point.lambda * std::polar(1.0, 2.0 * std::numbers::pi * k / kSymmetryRotations);
      const double v = eval(rotated);
      ++report.checked;
      if (v > 2.0 * scan.tol) report.violations.push_back({point.lambda, rotated, v});
    }
  }
  return report;
}

SpectralRadiusEstimate spectral_radius_estimate(const SpectralScan& scan) {
  SpectralRadiusEstimate est;
  est.empty_spectrum = scan.detected.empty();
  for (const auto& p : scan.detected) est.radius = std::max(est.radius, std::abs(p.lambda));
  return est;
}

}  // namespace realop
