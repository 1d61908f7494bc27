#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nestlogit/nested_logit.hpp"
#include "nestlogit/parallel.hpp"
#include "nestlogit/random.hpp"

namespace nestlogit {

struct CheckResult {
  std::string name;
  bool passed = false;
  double observed = 0.0;   ///< worst-case statistic of the check
  double threshold = 0.0;  ///< pass iff observed <= threshold
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t draws = 1'000'000;
  SeededStream stream{};
  SimulationOptions sim{};
  /// Optional fixture of expected choice probabilities (leaf order).
  std::optional<std::vector<double>> expected_probabilities;
  /// Correlations are checked for the first this-many alternatives.
  std::size_t max_correlation_leaves = 16;
};

/// Central finite-difference gradient of emax(root) with respect to U.
std::vector<double> finite_difference_gradient(const ModelSpec& model, double step);

/// The joint-CDF spot-check grid: five leaf vectors around the bulk of the
/// distribution.
std::vector<std::vector<double>> cdf_spot_grid(const ModelSpec& model);

/// Cross-checks the analytic engine against itself and against the factor
/// representation: simplex, hierarchy, log-odds, gradient, Monte Carlo choice
/// probabilities, Emax, lowest-common-ancestor correlations and joint CDF.
/// Monte Carlo comparisons use 3 sigma, Bonferroni-adjusted within a check.
std::vector<CheckResult> verify_model(const ModelSpec& model, const VerifyOptions& opts);

}  // namespace nestlogit
