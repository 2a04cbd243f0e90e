#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "realop/operator.hpp"
#include "realop/sampling.hpp"

namespace realop {

struct VerifyOptions {
  std::uint64_t seed = kDefaultSeed;
  /// Random operators per property; dimensions are cycled across trials.
  int trials = 20;
  /// Adjoint under test; replaceable so mutation tests can inject a fault.
  std::function<RealLinearOperator(const RealLinearOperator&)> adjoint_impl =
      [](const RealLinearOperator& op) { return adjoint(op); };
  /// Called after each check completes.
  std::function<void(const struct CheckResult&)> on_check;
};

struct CheckResult {
  std::string name;
  /// The mathematical statement being exercised.
  std::string property;
  bool passed = false;
  /// Worst observed statistic, compared against `threshold`.
  double worst = 0.0;
  double threshold = 0.0;
  std::size_t instances = 0;
  std::string detail;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  const CheckResult* find(const std::string& name) const;
  nlohmann::json to_json() const;
};

/// Runs the invariant suite (operator algebra, sampler, numerical range,
/// spectrum) on seeded random operators of dimension 1 to 4.
VerifyReport run_verify(const VerifyOptions& options = {});

/// Scan and hull settings used by the suite on operators scaled to norm 1.
struct VerifySettings {
  static constexpr double kScanStep = 0.02;
  static constexpr double kScanTol = 0.005;
  static constexpr std::size_t kHullSamples = 5000;
  static constexpr std::size_t kSpectralHullSamples = 5000;
  static constexpr std::size_t kCirclePoints = 256;
  static constexpr std::size_t kSandwichSamples = 10000;
  static constexpr std::size_t kNormMonteCarloSamples = 1000000;
};

}  // namespace realop
