#include "realop/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "realop/geometry.hpp"
#include "realop/numrange.hpp"
#include "realop/spectrum.hpp"

namespace realop {
namespace {

// Asymptotic Kolmogorov-Smirnov critical value at the 1% level.
constexpr double kKsCritical = 1.6276;

constexpr Eigen::Index kAllDims[] = {1, 2, 3, 4};
constexpr Eigen::Index kRangeDims[] = {2, 3, 4};

class Rng {
 public:
  Rng(std::uint64_t seed, std::uint32_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      stream};
    gen_.seed(seq);
  }

  double gauss() { return normal_(gen_); }
  double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(gen_); }
  Complex cgauss() { return Complex(gauss(), gauss()) / std::numbers::sqrt2; }
  std::uint64_t bits() { return gen_(); }

  ComplexMatrix matrix(Eigen::Index n) {
    ComplexMatrix m(n, n);
    for (auto& z : m.reshaped()) z = cgauss();
    return m;
  }

  ComplexVector vector(Eigen::Index n) {
    ComplexVector v(n);
    for (auto& z : v) z = cgauss();
    return v;
  }

  ComplexVector unit(Eigen::Index n) { return vector(n).normalized(); }

  RealLinearOperator op(Eigen::Index n) { return {matrix(n), matrix(n)}; }

 private:
  std::mt19937_64 gen_;
  std::normal_distribution<double> normal_;
};

RealLinearOperator normalized(const RealLinearOperator& op) {
  const double norm = operator_norm(op);
  return norm > 0.0 ? op * (1.0 / norm) : op;
}

ComplexMatrix hermitian(Rng& rng, Eigen::Index n) {
  ComplexMatrix g = rng.matrix(n);
  return 0.5 * (g + g.adjoint());
}

ComplexMatrix symmetric(Rng& rng, Eigen::Index n) {
  ComplexMatrix g = rng.matrix(n);
  return 0.5 * (g + g.transpose());
}

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double operator_distance(const RealLinearOperator& a, const RealLinearOperator& b) {
  return std::max(max_abs(a.linear() - b.linear()), max_abs(a.antilinear() - b.antilinear()));
}

class Check {
 public:
  Check(std::string name, std::string property, double threshold) {
    result_.name = std::move(name);
    result_.property = std::move(property);
    result_.threshold = threshold;
  }

  void observe(double statistic) {
    if (std::isnan(statistic)) statistic = std::numeric_limits<double>::infinity();
    result_.worst = std::max(result_.worst, statistic);
    ++result_.instances;
  }

  void note(std::string detail) { result_.detail = std::move(detail); }

  CheckResult finish() {
    result_.passed = result_.instances > 0 && result_.worst <= result_.threshold;
    return std::move(result_);
  }

 private:
  CheckResult result_;
};

double ks_uniform(std::vector<double> values, double lo, double hi) {
  std::sort(values.begin(), values.end());
  const double n = static_cast<double>(values.size());
  double d = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double f = (values[i] - lo) / (hi - lo);
    d = std::max({d, (static_cast<double>(i) + 1.0) / n - f, f - static_cast<double>(i) / n});
  }
  return d * std::sqrt(n);
}

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d * std::sqrt(na * nb / (na + nb));
}

struct Context {
  const VerifyOptions& options;
  std::uint32_t stream = 0;

  Rng rng() { return Rng(options.seed, ++stream); }
  std::uint64_t sample_seed() { return rng().bits(); }
  RealLinearOperator adjoint(const RealLinearOperator& op) const { return options.adjoint_impl(op); }
  int trials() const { return std::max(options.trials, 1); }
};

// ---------------------------------------------------------------------------
// Operator algebra

CheckResult decomposition_roundtrip(Context& ctx) {
  Check check("decomposition_roundtrip",
              "canonical linear/antilinear decomposition is recovered from the action", 1e-12);
  Rng rng = ctx.rng();
  for (int t = 0; t < ctx.trials(); ++t) {
    const Eigen::Index n = kAllDims[t % std::size(kAllDims)];
    const auto op = rng.op(n);
    const auto recovered = decompose([&](const ComplexVector& x) { return realop::apply(op, x); }, n);
    check.observe(operator_distance(op, recovered));
    for (int k = 0; k < 5; ++k) {
      const auto x = rng.unit(n);
      check.observe((realop::apply(recovered, x) - realop::apply(op, x)).norm());
    }
  }
  return check.finish();
}

CheckResult real_linearity(Context& ctx) {
  Check check("real_linearity", "apply is additive and real-homogeneous", 1e-12);
  Rng rng = ctx.rng();
  for (int t = 0; t < ctx.trials(); ++t) {
    const Eigen::Index n = kAllDims[t % std::size(kAllDims)];
    const auto op = rng.op(n);
    const auto x = rng.vector(n);
    const auto y = rng.vector(n);
    const double s = rng.gauss();
    const auto fx = realop::apply(op, x);
    const auto fy = realop::apply(op, y);
    check.observe((realop::apply(op, x + y) - fx - fy).norm() / (1.0 + fx.norm() + fy.norm()));
    check.observe((realop::apply(op, s * x) - s * fx).norm() / (1.0 + std::abs(s) * fx.norm()));
  }
  return check.finish();
}

CheckResult composition_action(Context& ctx) {
  Check check("composition_action", "compose(Phi, Psi) acts as Phi after Psi", 1e-12);
  Rng rng = ctx.rng();
  for (int t = 0; t < ctx.trials(); ++t) {
    const Eigen::Index n = kAllDims[t % std::size(kAllDims)];
    const auto phi = rng.op(n);
    const auto psi = rng.op(n);
    const auto both = compose(phi, psi);
    for (int k = 0; k < 20; ++k) {
      const auto x = rng.unit(n);
      const auto expected = realop::apply(phi, realop::apply(psi, x));
      check.observe((realop::apply(both, x) - expected).norm() / (1.0 + expected.norm()));
    }
  }
  return check.finish();
}

CheckResult realification_commutes(Context& ctx) {
  Check check("realification_commutes", "rho(Phi x) = R(Phi) rho(x)", 1e-12);
  Rng rng = ctx.rng();
  for (int t = 0; t < ctx.trials(); ++t) {
    const Eigen::Index n = kAllDims[t % std::size(kAllDims)];
    const auto op = rng.op(n);
    const auto r = realify(op);
    for (int k = 0; k < 10; ++k) {
      const auto x = rng.unit(n);
      check.observe((to_real(realop::apply(op, x)) - r.matrix * to_real(x)).norm());
    }
  }
  return check.finish();
}

CheckResult realification_homomorphism(Context& ctx) {
  Check check("realification_homomorphism",
              "R(Phi + Psi) = R(Phi) + R(Psi) and R(Phi Psi) = R(Phi) R(Psi)", 1e-12);
  Rng rng = ctx.rng();
  for (int t = 0; t < ctx.trials(); ++t) {
    const Eigen::Index n = kAllDims[t % std::size(kAllDims)];
    const auto phi = rng.op(n);
    const auto psi = rng.op(n);
    const auto rp = realify(phi).matrix;
    const auto rq = realify(psi).matrix;
    check.observe(max_abs(realify(phi + psi).matrix - rp - rq));
    check.observe(max_abs(realify(compose(phi, psi)).matrix - rp * rq));
  }
  return check.finish();
}

CheckResult realification_isometry(Context& ctx) {
  Check check("realification_isometry", "the coordinate map rho preserves the Euclidean norm",
              1e-15);
  Rng rng = ctx.rng();
  for (auto n : kAllDims) {
    for (int k = 0; k < 100; ++k) {
      const auto x = rng.vector(n);
      check.observe(std::abs(to_real(x).norm() - x.norm()) / x.norm());
    }
  }
  return check.finish();
}

CheckResult adjoint_identities(Context& ctx) {
  Check check("adjoint_identities",
              "<Tx, y> = <x, T*y> and <Ax, y> = conj <x, A*y> (Hilbert adjoint)", 1e-12);
  Rng rng = ctx.rng();
  for (int t = 0; t < ctx.trials(); ++t) {
    const Eigen::Index n = kAllDims[t % std::size(kAllDims)];
    const auto op = rng.op(n);
    const auto adj = ctx.adjoint(op);
    for (int k = 0; k < 10; ++k) {
      const auto x = rng.unit(n);
      const auto y = rng.unit(n);
      const Complex lin_lhs = inner(op.linear() * x, y);
      const Complex lin_rhs = inner(x, adj.linear() * y);
      const Complex anti_lhs = inner(op.antilinear() * x.conjugate(), y);
      const Complex anti_rhs = std::conj(inner(x, adj.antilinear() * y.conjugate()));
      check.observe(std::abs(lin_lhs - lin_rhs));
      check.observe(std::abs(anti_lhs - anti_rhs));
    }
  }
  return check.finish();
}

CheckResult adjoint_involution(Context& ctx) {
  Check check("adjoint_involution", "(Phi*)* = Phi", 1e-12);
  Rng rng = ctx.rng();
  for (int t = 0; t < ctx.trials(); ++t) {
    const Eigen::Index n = kAllDims[t % std::size(kAllDims)];
    const auto op = rng.op(n);
    check.observe(operator_distance(ctx.adjoint(ctx.adjoint(op)), op));
  }
  return check.finish();
}

CheckResult composition_duality(Context& ctx) {
  Check check("composition_duality", "(Psi Phi)* = Phi* Psi*", 1e-12);
  Rng rng = ctx.rng();
  for (int t = 0; t < ctx.trials(); ++t) {
    const Eigen::Index n = kAllDims[t % std::size(kAllDims)];
    const auto phi = rng.op(n);
    const auto psi = rng.op(n);
    check.observe(operator_distance(ctx.adjoint(compose(psi, phi)),
                                    compose(ctx.adjoint(phi), ctx.adjoint(psi))));
  }
  return check.finish();
}

CheckResult norm_dominates(Context& ctx) {
  Check check("norm_dominates", "‖Phi x‖ <= ‖Phi‖ for unit x", 1e-12);
  Rng rng = ctx.rng();
  for (int t = 0; t < ctx.trials(); ++t) {
    const Eigen::Index n = kAllDims[t % std::size(kAllDims)];
    const auto op = rng.op(n);
    const double norm = operator_norm(op);
    for (int k = 0; k < 1000; ++k) {
      check.observe(std::max(0.0, realop::apply(op, rng.unit(n)).norm() - norm) / norm);
    }
  }
  return check.finish();
}

CheckResult norm_attained(Context& ctx) {
  Check check("norm_attained",
              "Monte-Carlo supremum of ‖Phi x‖ over the unit sphere reaches ‖Phi‖ within 2%", 0.02);
  Rng rng = ctx.rng();
  for (int t = 0; t < ctx.trials(); ++t) {
    const Eigen::Index n = kAllDims[t % std::size(kAllDims)];
    const auto op = rng.op(n);
    const Eigen::MatrixXd r = realify(op).matrix;
    const double norm = operator_norm(op);
    double best = 0.0;
    constexpr std::size_t kBatch = 4096;
    Eigen::MatrixXd v(2 * n, kBatch);
    for (std::size_t done = 0; done < VerifySettings::kNormMonteCarloSamples; done += kBatch) {
      for (auto& c : v.reshaped()) c = rng.gauss();
      const Eigen::ArrayXd ratio = (r * v).colwise().squaredNorm().array() / v.colwise().squaredNorm().array();
      best = std::max(best, ratio.maxCoeff());
    }
    check.observe(1.0 - std::sqrt(best) / norm);
  }
  return check.finish();
}

CheckResult birkhoff_james(Context& ctx) {
  Check check("birkhoff_james",
              "‖a T + b A‖ <= ‖a' T + b' A‖ when |a| <= |a'| and |b| <= |b'| "
              "(Birkhoff-James orthogonality of linear and antilinear parts)",
              1e-10);
  Rng rng = ctx.rng();
  for (int k = 0; k < 200; ++k) {
    const Eigen::Index n = kAllDims[k % 4];
    const auto op = rng.op(n);
    const Complex a = rng.cgauss();
    const Complex b = rng.cgauss();
    const Complex a2 = a * (1.0 + rng.uniform()) * std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
    const Complex b2 = b * (1.0 + rng.uniform()) * std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
    check.observe(operator_norm(scale_parts(op, a, b)) - operator_norm(scale_parts(op, a2, b2)));
  }
  return check.finish();
}

CheckResult self_adjoint_split_check(Context& ctx) {
  Check check("self_adjoint_split",
              "A_1* = A_1, A_2* = -A_2 and <A_2 x, x> = 0, so W(A_2) = {0}", 1e-12);
  Rng rng = ctx.rng();
  for (int t = 0; t < ctx.trials(); ++t) {
    const Eigen::Index n = kAllDims[t % std::size(kAllDims)];
    const auto op = rng.op(n);
    const auto [sym, skew] = self_adjoint_split(op);
    const auto a1 = sym.antilinear_part();
    check.observe(operator_distance(ctx.adjoint(a1), a1));
    check.observe(operator_distance(ctx.adjoint(skew), skew * -1.0));
    check.observe(operator_distance(sym + skew, op));
    for (int k = 0; k < 10; ++k) check.observe(std::abs(quadratic_form(skew, rng.unit(n))));
  }
  return check.finish();
}

// ---------------------------------------------------------------------------
// Sampler

CheckResult sampler_determinism(Context& ctx) {
  Check check("sampler_determinism", "equal seeds give bit-identical sample sequences", 0.0);
  const std::uint64_t seed = ctx.sample_seed();
  for (auto n : kAllDims) {
    const SampleStream a{seed, n};
    const SampleStream b{seed, n};
    for (std::uint64_t k = 0; k < 1000; ++k) {
      // Reverse order on the second stream: sample k must not depend on draw order.
      const auto x = unit_sphere_sample(a, k);
      const auto y = unit_sphere_sample(b, 999 - k);
      const auto x_again = unit_sphere_sample(b, k);
      check.observe((x.array() != x_again.array()).any() ? 1.0 : 0.0);
      (void)y;
    }
  }
  return check.finish();
}

CheckResult sampler_normalization(Context& ctx) {
  Check check("sampler_normalization", "samples lie on the unit sphere", 1e-14);
  const std::uint64_t seed = ctx.sample_seed();
  for (auto n : kAllDims) {
    const SampleStream stream{seed, n};
    for (std::uint64_t k = 0; k < 1000; ++k) check.observe(std::abs(unit_sphere_sample(stream, k).norm() - 1.0));
  }
  return check.finish();
}

CheckResult unitarity_of_u(Context& ctx) {
  Check check("unitarity_of_U", "U(x_1, ..., x_2n) = (x_1 + i x_2, ...) preserves norms", 1e-15);
  Rng rng = ctx.rng();
  for (auto n : kAllDims) {
    for (int k = 0; k < 100; ++k) {
      RealVector v(2 * n);
      for (auto& c : v) c = rng.gauss();
      check.observe(std::abs(from_real(v).norm() - v.norm()) / v.norm());
    }
  }
  return check.finish();
}

CheckResult phase_uniformity(Context& ctx) {
  Check check("phase_uniformity",
              "phases of samples on the unit circle of C are uniform (KS, 1% level)", kKsCritical);
  const SampleStream stream{ctx.sample_seed(), 1};
  std::vector<double> phases;
  for (std::uint64_t k = 0; k < 10000; ++k) {
    double p = std::arg(unit_sphere_sample(stream, k)(0));
    if (p < 0.0) p += 2.0 * std::numbers::pi;
    phases.push_back(p);
  }
  check.observe(ks_uniform(std::move(phases), 0.0, 2.0 * std::numbers::pi));
  return check.finish();
}

CheckResult sample_mean(Context& ctx) {
  Check check("sample_mean", "empirical mean of 10^4 sphere samples is near 0", 0.05);
  const std::uint64_t seed = ctx.sample_seed();
  for (auto n : kAllDims) {
    const SampleStream stream{seed, n};
    ComplexVector mean = ComplexVector::Zero(n);
    for (std::uint64_t k = 0; k < 10000; ++k) mean += unit_sphere_sample(stream, k);
    check.observe((mean / 10000.0).norm());
  }
  return check.finish();
}

CheckResult phase_invariance(Context& ctx) {
  Check check("phase_invariance",
              "distribution of <A x, x> for antilinear A is unchanged by a global phase on x "
              "(two-sample KS, 1% level)",
              kKsCritical);
  Rng rng = ctx.rng();
  const std::uint64_t seed = ctx.sample_seed();
  for (auto n : kAllDims) {
    const auto a = RealLinearOperator::antilinear_only(rng.matrix(n));
    const Complex phase = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
    const SampleStream stream{seed, n};
    std::vector<double> plain, rotated;
    for (std::uint64_t k = 0; k < 5000; ++k) {
      plain.push_back(quadratic_form(a, unit_sphere_sample(stream, k)).real());
      rotated.push_back(quadratic_form(a, phase * unit_sphere_sample(stream, 5000 + k)).real());
    }
    check.observe(ks_two_sample(std::move(plain), std::move(rotated)));
  }
  return check.finish();
}

// ---------------------------------------------------------------------------
// Numerical range

SampleRangeOptions hull_options(std::uint64_t seed, std::size_t samples = VerifySettings::kHullSamples) {
  return {samples, VerifySettings::kCirclePoints, seed};
}

CheckResult disk_boundary(Context& ctx) {
  Check check("disk_boundary", "<Phi x, x> lies on the circle |z - <Tx, x>| = |<Ax, x>|", 1e-10);
  Rng rng = ctx.rng();
  for (int t = 0; t < ctx.trials(); ++t) {
    const Eigen::Index n = kRangeDims[t % std::size(kRangeDims)];
    const auto op = normalized(rng.op(n));
    const SampleStream stream{rng.bits(), n};
    for (std::uint64_t k = 0; k < 500; ++k) {
      const auto x = unit_sphere_sample(stream, k);
      const auto disk = disk_at(op, x);
      check.observe(std::abs(std::abs(quadratic_form(op, x) - disk.center) - disk.radius));
    }
  }
  return check.finish();
}

CheckResult rotation_orbit(Context& ctx) {
  Check check("rotation_orbit",
              "<Phi e^{it} x, e^{it} x> = <Tx, x> + e^{-2it} <Ax, x> (the orbit traces the circle)",
              1e-10);
  Rng rng = ctx.rng();
  for (int t = 0; t < ctx.trials(); ++t) {
    const Eigen::Index n = kRangeDims[t % std::size(kRangeDims)];
    const auto op = normalized(rng.op(n));
    for (int k = 0; k < 100; ++k) {
      const auto x = rng.unit(n);
      const double theta = 2.0 * std::numbers::pi * rng.uniform();
      const Complex center = inner(op.linear() * x, x);
      const Complex anti = inner(op.antilinear() * x.conjugate(), x);
      const Complex expected = center + std::polar(1.0, -2.0 * theta) * anti;
      check.observe(std::abs(quadratic_form(op, std::polar(1.0, theta) * x) - expected));
    }
  }
  return check.finish();
}

CheckResult inner_approximation(Context& ctx) {
  Check check("inner_approximation",
              "fresh samples of <Phi x, x> fall inside the sampled disk-union hull (+0.01)", 0.01);
  Rng rng = ctx.rng();
  for (int t = 0; t < ctx.trials(); ++t) {
    const Eigen::Index n = kRangeDims[t % std::size(kRangeDims)];
    const auto op = normalized(rng.op(n));
    const auto hull = sample_range(op, hull_options(rng.bits()));
    const SampleStream fresh{rng.bits(), n};
    for (std::uint64_t k = 0; k < 500; ++k) {
      check.observe(hull.distance_to(quadratic_form(op, unit_sphere_sample(fresh, k))));
    }
  }
  return check.finish();
}

CheckResult convexity(Context& ctx) {
  Check check("convexity",
              "numerical range is convex for dim >= 2: midpoints of sampled values stay in the hull "
              "(+0.01)",
              0.01);
  Rng rng = ctx.rng();
  for (int t = 0; t < ctx.trials(); ++t) {
    const Eigen::Index n = kRangeDims[t % std::size(kRangeDims)];
    const auto op = normalized(rng.op(n));
    const auto hull = sample_range(op, hull_options(rng.bits()));
    const SampleStream fresh{rng.bits(), n};
    for (std::uint64_t k = 0; k < 500; ++k) {
      const Complex a = quadratic_form(op, unit_sphere_sample(fresh, 2 * k));
      const Complex b = quadratic_form(op, unit_sphere_sample(fresh, 2 * k + 1));
      check.observe(hull.distance_to(0.5 * (a + b)));
    }
  }
  return check.finish();
}

CheckResult monotonicity(Context& ctx) {
  Check check("monotonicity", "W(T + a A) is contained in W(T + b A) for |a| <= |b| (+0.01)", 0.01);
  Rng rng = ctx.rng();
  for (int t = 0; t < ctx.trials(); ++t) {
    const Eigen::Index n = kRangeDims[t % std::size(kRangeDims)];
    const auto op = normalized(rng.op(n));
    const Complex a = rng.uniform() * std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
    const Complex b = std::abs(a) * (1.0 + rng.uniform()) *
                      std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
    const std::uint64_t seed = rng.bits();
    const auto small = sample_range(scale_parts(op, 1.0, a), hull_options(seed));
    const auto large = sample_range(scale_parts(op, 1.0, b), hull_options(seed));
    for (const auto& v : small.vertices()) check.observe(large.distance_to(v));
  }
  return check.finish();
}

CheckResult antilinear_centrosymmetry(Context& ctx) {
  Check check("antilinear_centrosymmetry",
              "numerical range of an antilinear operator is symmetric under z -> -z "
              "(|h(t) - h(t + pi)| <= 0.01)",
              0.01);
  Rng rng = ctx.rng();
  for (int t = 0; t < ctx.trials(); ++t) {
    const Eigen::Index n = kRangeDims[t % std::size(kRangeDims)];
    const auto a = normalized(RealLinearOperator::antilinear_only(rng.matrix(n)));
    const auto hull = sample_range(a, hull_options(rng.bits()));
    for (int k = 0; k < 360; ++k) {
      const double theta = 2.0 * std::numbers::pi * k / 360.0;
      check.observe(std::abs(support_function(hull, theta) - support_function(hull, theta + std::numbers::pi)));
    }
  }
  return check.finish();
}

CheckResult antilinear_radius(Context& ctx) {
  Check check("antilinear_radius",
              "w(A) = ‖(A + A*)/2‖ for antilinear A (sampled estimate within 3%)", 0.03);
  Rng rng = ctx.rng();
  for (int t = 0; t < ctx.trials(); ++t) {
    const Eigen::Index n = kRangeDims[t % std::size(kRangeDims)];
    const auto a = normalized(RealLinearOperator::antilinear_only(rng.matrix(n)));
    const auto hull = sample_range(a, hull_options(rng.bits()));
    const double a1_norm = operator_norm(self_adjoint_split(a).first);
    check.observe(std::abs(numerical_radius_estimate(hull) - a1_norm) / a1_norm);
  }
  return check.finish();
}

std::vector<CheckResult> duality_checks(Context& ctx) {
  Check pointwise("duality_pointwise",
                  "conj <Phi* x, x> = <Phi e^{it} x, e^{it} x> with t = arg <Ax, x>", 1e-10);
  Check hulls("duality_hulls", "W(Phi*) = conj W(Phi) (sampled hulls, Hausdorff <= 0.02)", 0.02);
  Rng rng = ctx.rng();
  for (int t = 0; t < ctx.trials(); ++t) {
    const Eigen::Index n = kRangeDims[t % std::size(kRangeDims)];
    const auto op = normalized(rng.op(n));
    const auto adj = ctx.adjoint(op);
    int used = 0;
    while (used < 200) {
      const auto x = rng.unit(n);
      const Complex anti = inner(op.antilinear() * x.conjugate(), x);
      if (std::abs(anti) < 1e-8) continue;
      ++used;
      const ComplexVector rotated = std::polar(1.0, std::arg(anti)) * x;
      pointwise.observe(std::abs(std::conj(quadratic_form(adj, x)) - quadratic_form(op, rotated)));
    }
    const std::uint64_t seed = rng.bits();
    std::vector<Complex> mirrored;
    const auto direct = sample_range(op, hull_options(seed));
    for (const auto& v : direct.vertices()) mirrored.push_back(std::conj(v));
    hulls.observe(hausdorff_distance(sample_range(adj, hull_options(seed)), convex_hull(mirrored)));
  }
  return {pointwise.finish(), hulls.finish()};
}

CheckResult self_adjoint_part_range(Context& ctx) {
  Check check("self_adjoint_part_range", "W(T + A) = W(T + A_1) (hull Hausdorff <= 0.02)", 0.02);
  Rng rng = ctx.rng();
  for (int t = 0; t < ctx.trials(); ++t) {
    const Eigen::Index n = kRangeDims[t % std::size(kRangeDims)];
    const auto op = normalized(rng.op(n));
    const std::uint64_t seed = rng.bits();
    const auto full = sample_range(op, hull_options(seed));
    const auto sym = sample_range(self_adjoint_split(op).first, hull_options(seed));
    check.observe(hausdorff_distance(full, sym));
  }
  return check.finish();
}

CheckResult radius_sandwich(Context& ctx) {
  Check check("radius_sandwich",
              "1/2 ‖T + 2 A_1‖ <= w(Phi) <= ‖T + A_1‖ for the sampled radius "
              "(lower - 1e-9, upper + 1%)",
              0.0);
  Rng rng = ctx.rng();
  for (int t = 0; t < ctx.trials(); ++t) {
    const Eigen::Index n = kRangeDims[t % std::size(kRangeDims)];
    const auto op = normalized(rng.op(n));
    const auto bounds = radius_bounds(op);
    const double w = numerical_radius_estimate(
        sample_range(op, hull_options(rng.bits(), VerifySettings::kSandwichSamples)));
    check.observe(std::max(bounds.lower - 1e-9 - w, w - 1.01 * bounds.upper));
  }
  return check.finish();
}

// ---------------------------------------------------------------------------
// Spectrum

SpectralScan verify_scan(const RealLinearOperator& unit_norm_op) {
  return scan(unit_norm_op, Rect{-1.05, 1.05, -1.05, 1.05}, VerifySettings::kScanStep,
              VerifySettings::kScanTol);
}

std::vector<CheckResult> spectral_checks(Context& ctx) {
  const double tol = VerifySettings::kScanTol;
  Check residual("eigenvector_residual",
                 "finite dimension: every spectral point has an eigenvector (residual <= 2 tol)",
                 2.0 * tol);
  Check inclusion("spectrum_in_numerical_range",
                  "spectrum lies in the closure of the numerical range (hull + 0.02)", 0.02);
  Check bound("spectrum_norm_bound", "|lambda| <= ‖Phi‖ on the spectrum (+0.01)", 0.01);
  Check chain("radius_chain", "r(Phi) <= w(Phi) <= ‖Phi‖ (each step + 0.02)", 0.02);

  Rng rng = ctx.rng();
  for (int t = 0; t < ctx.trials(); ++t) {
    const Eigen::Index n = kRangeDims[t % std::size(kRangeDims)];
    const auto op = normalized(rng.op(n));
    const auto sc = verify_scan(op);
    const auto hull = sample_range(
        op, hull_options(rng.bits(), VerifySettings::kSpectralHullSamples));
    const double norm = operator_norm(op);
    for (const auto& p : sc.detected) {
      const auto x = eigen_check(op, p.lambda, 2.0 * tol);
      residual.observe(x ? (realop::apply(op, *x) - p.lambda * *x).norm()
                         : std::numeric_limits<double>::infinity());
      inclusion.observe(hull.distance_to(p.lambda));
      bound.observe(std::abs(p.lambda) - norm);
    }
    if (sc.detected.empty()) {
      residual.observe(0.0);
      inclusion.observe(0.0);
      bound.observe(0.0);
    }
    const double r = spectral_radius_estimate(sc).radius;
    const double w = numerical_radius_estimate(hull);
    chain.observe(std::max(r - w, w - norm));
  }
  return {residual.finish(), inclusion.finish(), bound.finish(), chain.finish()};
}

CheckResult self_adjoint_spectral_radius(Context& ctx) {
  Check check("self_adjoint_spectral_radius", "Phi* = Phi implies r(Phi) = w(Phi) = ‖Phi‖",
              2.0 * VerifySettings::kScanStep);
  Rng rng = ctx.rng();
  for (int t = 0; t < ctx.trials(); ++t) {
    const Eigen::Index n = kRangeDims[t % std::size(kRangeDims)];
    const auto op = normalized(RealLinearOperator(hermitian(rng, n), symmetric(rng, n)));
    const auto sc = verify_scan(op);
    check.observe(std::abs(spectral_radius_estimate(sc).radius - operator_norm(op)));
  }
  return check.finish();
}

CheckResult antilinear_norm_circle(Context& ctx) {
  Check check("antilinear_norm_circle",
              "‖A‖ = ‖A_1‖ implies the circle |z| = ‖A‖ lies in the spectrum (16 directions)",
              2.0 * VerifySettings::kScanStep);
  Rng rng = ctx.rng();
  for (int t = 0; t < ctx.trials(); ++t) {
    const Eigen::Index n = kRangeDims[t % std::size(kRangeDims)];
    const auto a = normalized(RealLinearOperator::antilinear_only(symmetric(rng, n)));
    const double norm = operator_norm(a);
    const auto sc = verify_scan(a);
    for (int k = 0; k < 16; ++k) {
      const Complex target = std::polar(norm, 2.0 * std::numbers::pi * k / 16.0);
      double nearest = std::numeric_limits<double>::infinity();
      for (const auto& p : sc.detected) nearest = std::min(nearest, std::abs(p.lambda - target));
      check.observe(nearest);
    }
  }
  return check.finish();
}

CheckResult circular_symmetry(Context& ctx) {
  Check check("circular_symmetry", "spectra of antilinear operators are circularly symmetric", 0.0);
  Rng rng = ctx.rng();
  std::size_t checked = 0;
  for (int t = 0; t < ctx.trials(); ++t) {
    const Eigen::Index n = kRangeDims[t % std::size(kRangeDims)];
    const auto a = normalized(RealLinearOperator::antilinear_only(rng.matrix(n)));
    const auto report = circular_symmetry_check(a, verify_scan(a));
    checked += report.checked;
    check.observe(static_cast<double>(report.violations.size()));
  }
  check.note(std::to_string(checked) + " rotated points evaluated");
  return check.finish();
}

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerifyReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json doc;
  doc["command"] = "verify";
  doc["seed"] = seed;
  doc["trials"] = trials;
  doc["passed"] = all_passed();
  auto& list = doc["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json entry{{"name", c.name},         {"property", c.property},
                         {"passed", c.passed},     {"threshold", c.threshold},
                         {"instances", c.instances}};
    entry["worst"] = std::isfinite(c.worst) ? nlohmann::json(c.worst) : nlohmann::json("inf");
    if (!c.detail.empty()) entry["detail"] = c.detail;
    list.push_back(std::move(entry));
  }
  return doc;
}

VerifyReport run_verify(const VerifyOptions& options) {
  VerifyReport report;
  report.seed = options.seed;
  report.trials = options.trials;
  Context ctx{options};

  auto add = [&](CheckResult result) {
    if (options.on_check) options.on_check(result);
    report.checks.push_back(std::move(result));
  };

  using CheckFn = CheckResult (*)(Context&);
  constexpr CheckFn single_checks[] = {
      decomposition_roundtrip, real_linearity, composition_action, realification_commutes,
      realification_homomorphism, realification_isometry, adjoint_identities, adjoint_involution,
      composition_duality, norm_dominates, norm_attained, birkhoff_james, self_adjoint_split_check,
      sampler_determinism, sampler_normalization, unitarity_of_u, phase_uniformity, sample_mean,
      phase_invariance, disk_boundary, rotation_orbit, inner_approximation, convexity,
      monotonicity, antilinear_centrosymmetry, antilinear_radius,
  };
  for (auto fn : single_checks) add(fn(ctx));
  for (auto& result : duality_checks(ctx)) add(std::move(result));
  add(self_adjoint_part_range(ctx));
  add(radius_sandwich(ctx));
  for (auto& result : spectral_checks(ctx)) add(std::move(result));
  add(self_adjoint_spectral_radius(ctx));
  add(antilinear_norm_circle(ctx));
  add(circular_symmetry(ctx));
  return report;
}

}  // namespace realop
