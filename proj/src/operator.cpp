#include "realop/operator.hpp"

#include <cmath>
#include <random>
#include <string>

#include "realop/error.hpp"

namespace realop {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_dimension: return "invalid-dimension";
    case ErrorCode::not_real_linear: return "not-real-linear";
    case ErrorCode::dimension_mismatch: return "dimension-error";
    case ErrorCode::normalization: return "normalization-error";
    case ErrorCode::dim1_not_convex: return "dim-1-not-convex";
    case ErrorCode::empty_input: return "empty-input";
    case ErrorCode::invalid_rect: return "invalid-rect";
    case ErrorCode::precondition: return "precondition-error";
    case ErrorCode::parse: return "parse-error";
    case ErrorCode::io: return "io-error";
  }
  return "unknown-error";
}

Complex inner(const ComplexVector& u, const ComplexVector& v) {
  // Eigen's dot() conjugates the first argument.
  return v.dot(u);
}

RealLinearOperator::RealLinearOperator(ComplexMatrix linear, ComplexMatrix antilinear)
    : linear_(std::move(linear)), antilinear_(std::move(antilinear)) {
  if (linear_.rows() == 0 || linear_.rows() != linear_.cols()) {
    throw Error(ErrorCode::invalid_dimension, "linear part must be a non-empty square matrix");
  }
  if (antilinear_.rows() != linear_.rows() || antilinear_.cols() != linear_.cols()) {
    throw Error(ErrorCode::dimension_mismatch,
                "antilinear part is " + std::to_string(antilinear_.rows()) + "x" +
                    std::to_string(antilinear_.cols()) + ", expected " +
                    std::to_string(linear_.rows()) + "x" + std::to_string(linear_.rows()));
  }
  if (!linear_.allFinite() || !antilinear_.allFinite()) {
    throw Error(ErrorCode::invalid_dimension, "operator entries must be finite");
  }
}

RealLinearOperator RealLinearOperator::identity(Eigen::Index dim) {
  if (dim < 1) throw Error(ErrorCode::invalid_dimension, "dimension must be positive");
  return {ComplexMatrix::Identity(dim, dim), ComplexMatrix::Zero(dim, dim)};
}

RealLinearOperator RealLinearOperator::zero(Eigen::Index dim) {
  if (dim < 1) throw Error(ErrorCode::invalid_dimension, "dimension must be positive");
  return {ComplexMatrix::Zero(dim, dim), ComplexMatrix::Zero(dim, dim)};
}

RealLinearOperator RealLinearOperator::conjugation(Eigen::Index dim) {
  if (dim < 1) throw Error(ErrorCode::invalid_dimension, "dimension must be positive");
  return {ComplexMatrix::Zero(dim, dim), ComplexMatrix::Identity(dim, dim)};
}

RealLinearOperator RealLinearOperator::linear_only(ComplexMatrix linear) {
  auto n = linear.rows();
  return {std::move(linear), ComplexMatrix::Zero(n, n)};
}

RealLinearOperator RealLinearOperator::antilinear_only(ComplexMatrix antilinear) {
  auto n = antilinear.rows();
  return {ComplexMatrix::Zero(n, n), std::move(antilinear)};
}

RealLinearOperator RealLinearOperator::linear_part() const { return linear_only(linear_); }

RealLinearOperator RealLinearOperator::antilinear_part() const {
  return antilinear_only(antilinear_);
}

RealLinearOperator RealLinearOperator::operator+(const RealLinearOperator& other) const {
  if (other.dim() != dim()) throw Error(ErrorCode::dimension_mismatch, "operator sum");
  return {linear_ + other.linear_, antilinear_ + other.antilinear_};
}

RealLinearOperator RealLinearOperator::operator-(const RealLinearOperator& other) const {
  if (other.dim() != dim()) throw Error(ErrorCode::dimension_mismatch, "operator difference");
  return {linear_ - other.linear_, antilinear_ - other.antilinear_};
}

RealLinearOperator RealLinearOperator::operator*(double t) const {
  return {linear_ * t, antilinear_ * t};
}

RealLinearOperator decompose(const RealLinearAction& action, Eigen::Index dim) {
  if (dim < 1) throw Error(ErrorCode::invalid_dimension, "dimension must be positive");

  const Complex i(0.0, 1.0);
  ComplexMatrix linear(dim, dim);
  ComplexMatrix antilinear(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    ComplexVector e = ComplexVector::Zero(dim);
    e(k) = 1.0;
    ComplexVector fe = action(e);
    ComplexVector fie = action(i * e);
    if (fe.size() != dim || fie.size() != dim) {
      throw Error(ErrorCode::dimension_mismatch, "action returned a vector of wrong length");
    }
    linear.col(k) = 0.5 * (fe - i * fie);
    antilinear.col(k) = 0.5 * (fe + i * fie);
  }

  // Fixed probe seed: the check is a smoke test, the result is deterministic.
  std::mt19937_64 gen(0x5eed5eedULL);
  std::normal_distribution<double> normal;
  auto random_vector = [&] {
    ComplexVector v(dim);
    for (auto& z : v) z = {normal(gen), normal(gen)};
    return v;
  };
  for (int trial = 0; trial < 8; ++trial) {
    ComplexVector x = random_vector();
    ComplexVector y = random_vector();
    double t = normal(gen);
    ComplexVector fx = action(x);
    ComplexVector fy = action(y);
    double scale = 1.0 + fx.norm() + fy.norm();
    double additivity = (action(x + y) - fx - fy).norm();
    double homogeneity = (action(t * x) - t * fx).norm();
    if (additivity > 1e-8 * scale || homogeneity > 1e-8 * scale * (1.0 + std::abs(t))) {
      throw Error(ErrorCode::not_real_linear,
                  "additivity/homogeneity residual " +
                      std::to_string(std::max(additivity, homogeneity)));
    }
  }
  return {std::move(linear), std::move(antilinear)};
}

ComplexVector apply(const RealLinearOperator& op, const ComplexVector& x) {
  if (x.size() != op.dim()) {
    throw Error(ErrorCode::dimension_mismatch, "vector length " + std::to_string(x.size()) +
                                                   " does not match operator dimension " +
                                                   std::to_string(op.dim()));
  }
  return op.linear() * x + op.antilinear() * x.conjugate();
}

RealLinearOperator compose(const RealLinearOperator& outer, const RealLinearOperator& inner) {
  if (outer.dim() != inner.dim()) {
    throw Error(ErrorCode::dimension_mismatch, "composition of operators of different dimension");
  }
  ComplexMatrix linear =
      outer.linear() * inner.linear() + outer.antilinear() * inner.antilinear().conjugate();
  ComplexMatrix antilinear =
      outer.linear() * inner.antilinear() + outer.antilinear() * inner.linear().conjugate();
  return {std::move(linear), std::move(antilinear)};
}

RealLinearOperator adjoint(const RealLinearOperator& op) {
  return {op.linear().adjoint(), op.antilinear().transpose()};
}

RealLinearOperator scale_parts(const RealLinearOperator& op, Complex alpha, Complex beta) {
  return {alpha * op.linear(), beta * op.antilinear()};
}

bool is_self_adjoint(const RealLinearOperator& op, double tol) {
  return (op.linear() - op.linear().adjoint()).cwiseAbs().maxCoeff() <= tol &&
         (op.antilinear() - op.antilinear().transpose()).cwiseAbs().maxCoeff() <= tol;
}

RealifiedMatrix realify(const RealLinearOperator& op) {
  const auto n = op.dim();
  Eigen::MatrixXd r(2 * n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double p = op.linear()(i, j).real();
      const double q = op.linear()(i, j).imag();
      const double s = op.antilinear()(i, j).real();
      const double u = op.antilinear()(i, j).imag();
      // (p + iq) z  and  (s + iu) conj(z), in (Re, Im) coordinates.
      r(2 * i, 2 * j) = p + s;
      r(2 * i, 2 * j + 1) = -q + u;
      r(2 * i + 1, 2 * j) = q + u;
      r(2 * i + 1, 2 * j + 1) = p - s;
    }
  }
  return {std::move(r)};
}

RealifiedMatrix scalar_pencil(Complex lambda, Eigen::Index dim) {
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(2 * dim, 2 * dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    r(2 * k, 2 * k) = lambda.real();
    r(2 * k, 2 * k + 1) = -lambda.imag();
    r(2 * k + 1, 2 * k) = lambda.imag();
    r(2 * k + 1, 2 * k + 1) = lambda.real();
  }
  return {std::move(r)};
}

RealVector to_real(const ComplexVector& x) {
  RealVector v(2 * x.size());
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    v(2 * k) = x(k).real();
    v(2 * k + 1) = x(k).imag();
  }
  return v;
}

ComplexVector from_real(const RealVector& v) {
  if (v.size() % 2 != 0) {
    throw Error(ErrorCode::dimension_mismatch, "real coordinate vector must have even length");
  }
  ComplexVector x(v.size() / 2);
  for (Eigen::Index k = 0; k < x.size(); ++k) x(k) = {v(2 * k), v(2 * k + 1)};
  return x;
}

double operator_norm(const RealLinearOperator& op) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(realify(op).matrix);
  return svd.singularValues()(0);
}

std::pair<RealLinearOperator, RealLinearOperator> self_adjoint_split(
    const RealLinearOperator& op) {
  const ComplexMatrix& a = op.antilinear();
  ComplexMatrix sym = 0.5 * (a + a.transpose());
  ComplexMatrix skew = 0.5 * (a - a.transpose());
  const auto n = op.dim();
  return {RealLinearOperator(op.linear(), std::move(sym)),
          RealLinearOperator(ComplexMatrix::Zero(n, n), std::move(skew))};
}

}  // namespace realop
