#pragma once

#include <complex>
#include <functional>
#include <utility>

#include <Eigen/Dense>

namespace realop {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Conjugate-linear in the second slot: <u, v> = sum_i u_i * conj(v_i).
Complex inner(const ComplexVector& u, const ComplexVector& v);

/// A real linear map on C^n, stored as x -> linear * x + antilinear * conj(x).
///
/// Both parts are n x n, finite, and n >= 1. The split into a complex linear
/// and a conjugate-linear part is unique, so two operators compare equal iff
/// both matrices do.
class RealLinearOperator {
 public:
  RealLinearOperator(ComplexMatrix linear, ComplexMatrix antilinear);

  static RealLinearOperator identity(Eigen::Index dim);
  static RealLinearOperator zero(Eigen::Index dim);
  static RealLinearOperator conjugation(Eigen::Index dim);
  static RealLinearOperator linear_only(ComplexMatrix linear);
  static RealLinearOperator antilinear_only(ComplexMatrix antilinear);

  Eigen::Index dim() const noexcept { return linear_.rows(); }
  const ComplexMatrix& linear() const noexcept { return linear_; }
  const ComplexMatrix& antilinear() const noexcept { return antilinear_; }

  /// Parts of this operator as standalone operators.
  RealLinearOperator linear_part() const;
  RealLinearOperator antilinear_part() const;

  RealLinearOperator operator+(const RealLinearOperator& other) const;
  RealLinearOperator operator-(const RealLinearOperator& other) const;
  /// Real scalars only.
  RealLinearOperator operator*(double t) const;

 private:
  ComplexMatrix linear_;
  ComplexMatrix antilinear_;
};

using RealLinearAction = std::function<ComplexVector(const ComplexVector&)>;

/// 2n x 2n real matrix acting on interleaved (Re x_1, Im x_1, ..., Re x_n, Im x_n).
struct RealifiedMatrix {
  Eigen::MatrixXd matrix;

  Eigen::Index dim() const noexcept { return matrix.rows(); }
};

/// Recovers (T, A) from a black-box real-linear map via
/// T e_k = (f(e_k) - i f(i e_k)) / 2 and A e_k = (f(e_k) + i f(i e_k)) / 2.
/// Additivity and real homogeneity are spot-checked on 8 random pairs.
RealLinearOperator decompose(const RealLinearAction& action, Eigen::Index dim);

ComplexVector apply(const RealLinearOperator& op, const ComplexVector& x);

/// outer o inner.
RealLinearOperator compose(const RealLinearOperator& outer, const RealLinearOperator& inner);

/// Hilbert-space adjoint: (T, M_A) -> (T^H, M_A^T).
RealLinearOperator adjoint(const RealLinearOperator& op);

/// (T, A) -> (alpha T, beta A).
RealLinearOperator scale_parts(const RealLinearOperator& op, Complex alpha, Complex beta);

bool is_self_adjoint(const RealLinearOperator& op, double tol = 1e-12);

RealifiedMatrix realify(const RealLinearOperator& op);

/// Realification of lambda * I on C^n.
RealifiedMatrix scalar_pencil(Complex lambda, Eigen::Index dim);

/// Coordinate map rho: C^n -> R^{2n}, and its inverse U.
RealVector to_real(const ComplexVector& x);
ComplexVector from_real(const RealVector& v);

/// Largest singular value of the realification.
double operator_norm(const RealLinearOperator& op);

/// Returns (T + A_1, A_2) with A_1 = (A + A*)/2 and A_2 = (A - A*)/2.
std::pair<RealLinearOperator, RealLinearOperator> self_adjoint_split(
    const RealLinearOperator& op);

}  // namespace realop
