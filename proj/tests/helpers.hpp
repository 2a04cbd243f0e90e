#pragma once

#include <random>

#include "realop/operator.hpp"

namespace realop::testing {

// Seeded Gaussian operators and vectors for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : gen_(seed) {}

  Complex z() { return {normal_(gen_), normal_(gen_)}; }
  double real() { return normal_(gen_); }

  ComplexMatrix matrix(Eigen::Index n) {
    ComplexMatrix m(n, n);
    for (auto& v : m.reshaped()) v = z();
    return m;
  }

  ComplexVector vector(Eigen::Index n) {
    ComplexVector v(n);
    for (auto& c : v) c = z();
    return v;
  }

  ComplexVector unit(Eigen::Index n) { return vector(n).normalized(); }

  RealLinearOperator op(Eigen::Index n) { return {matrix(n), matrix(n)}; }

 private:
  std::mt19937_64 gen_;
  std::normal_distribution<double> normal_;
};

inline double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

inline ComplexMatrix cm(std::initializer_list<std::initializer_list<Complex>> rows) {
  ComplexMatrix m(static_cast<Eigen::Index>(rows.size()),
                  static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (const auto& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

inline ComplexVector cv(std::initializer_list<Complex> values) {
  ComplexVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (const auto& x : values) v(i++) = x;
  return v;
}

}  // namespace realop::testing

#include "realop/error.hpp"

// Asserts that `expr` throws realop::Error carrying `expected_code`.
#define REALOP_CHECK_CODE(expr, expected_code)               \
  do {                                                       \
    bool thrown_ = false;                                    \
    try {                                                    \
      (void)(expr);                                          \
    } catch (const ::realop::Error& e_) {                    \
      thrown_ = true;                                        \
      CHECK(e_.code() == (expected_code));                   \
    }                                                        \
    CHECK_MESSAGE(thrown_, "expected realop::Error: " #expr); \
  } while (false)
