#include <doctest.h>

#include "helpers.hpp"
#include "realop/verify.hpp"

using namespace realop;

TEST_SUITE("verify") {

TEST_CASE("a faulty adjoint is caught") {
  VerifyOptions options;
  options.seed = 7;
  options.trials = 2;
  // Drop the transpose on the antilinear part.
  options.adjoint_impl = [](const RealLinearOperator& op) {
    return RealLinearOperator(op.linear().adjoint(), op.antilinear());
  };
  const auto report = run_verify(options);
  const auto* identities = report.find("adjoint_identities");
  REQUIRE(identities != nullptr);
  CHECK_FALSE(identities->passed);
  CHECK_FALSE(report.all_passed());
  // Properties that never touch the adjoint are unaffected.
  CHECK(report.find("decomposition_roundtrip")->passed);
}

TEST_CASE("reports are reproducible and complete") {
  VerifyOptions options;
  options.seed = 11;
  options.trials = 1;
  std::size_t callbacks = 0;
  options.on_check = [&](const CheckResult&) { ++callbacks; };
  const auto a = run_verify(options);
  options.on_check = nullptr;
  const auto b = run_verify(options);
  CHECK(a.to_json() == b.to_json());
  CHECK(callbacks == a.checks.size());
  CHECK(a.checks.size() >= 30);
  for (const auto& c : a.checks) {
    CHECK_FALSE(c.name.empty());
    CHECK_FALSE(c.property.empty());
    CHECK(c.instances > 0);
  }
  CHECK(a.find("no_such_check") == nullptr);

  const auto doc = a.to_json();
  CHECK(doc.at("seed") == 11);
  CHECK(doc.at("trials") == 1);
  CHECK(doc.at("checks").size() == a.checks.size());
  CHECK(doc.at("passed").get<bool>() == a.all_passed());
}

TEST_CASE("different seeds draw different operators") {
  VerifyOptions options;
  options.trials = 1;
  options.seed = 1;
  const auto a = run_verify(options);
  options.seed = 2;
  const auto b = run_verify(options);
  CHECK(a.to_json() != b.to_json());
}

}  // TEST_SUITE
