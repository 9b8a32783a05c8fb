#pragma once

#include <optional>
#include <string>
#include <vector>

namespace boost_entropy::verification {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  /// Quadrature tolerance for the integral-backed checks.
  double tol = 1e-10;
  /// Test hook: scales the G - 1 kernel by (1 + perturbation).
  std::optional<double> kernel_perturbation;
};

/// Runs the oracle and limit checks for every module, in a fixed order.
std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

}  // namespace boost_entropy::verification
