#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace nestlogit {

/// Monte Carlo point estimate. std_error is the sample standard deviation
/// over sqrt(n_draws) for means, the binomial formula for frequencies.
struct EstimateWithError {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t n_draws = 0;

  /// |value - target| in units of std_error (infinite when std_error is 0 and
  /// the values differ).
  double z_score(double target) const;
  bool within_sigmas(double target, double sigmas) const;
};

/// Streaming mean/variance (Welford) with an exact merge, so chunked
/// reductions done in a fixed order are reproducible.
class MeanAccumulator {
 public:
  void add(double x) noexcept;
  void merge(const MeanAccumulator& other) noexcept;

  std::uint64_t count() const noexcept { return n_; }
  double mean() const noexcept { return mean_; }
  /// Unbiased sample variance; 0 for fewer than two points.
  double variance() const noexcept;
  EstimateWithError estimate() const noexcept;

 private:
  std::uint64_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

/// Streaming co-moments of a pair, mergeable like MeanAccumulator.
class CovarianceAccumulator {
 public:
  void add(double x, double y) noexcept;
  void merge(const CovarianceAccumulator& other) noexcept;

  std::uint64_t count() const noexcept { return n_; }
  double covariance() const noexcept;
  double correlation() const noexcept;
  /// Pearson correlation with the normal-theory standard error (1 - r^2)/sqrt(n - 1).
  EstimateWithError correlation_estimate() const noexcept;

 private:
  std::uint64_t n_ = 0;
  double mean_x_ = 0.0, mean_y_ = 0.0;
  double m2x_ = 0.0, m2y_ = 0.0, cxy_ = 0.0;
};

/// Frequency estimate with binomial standard error sqrt(p(1-p)/n).
EstimateWithError binomial_estimate(std::uint64_t hits, std::uint64_t n) noexcept;

/// One-sample Kolmogorov-Smirnov statistic sup |F_n - F|. Sorts a copy.
double ks_statistic(std::span<const double> sample, const std::function<double(double)>& cdf);

/// Two-sample Kolmogorov-Smirnov statistic.
double ks_two_sample(std::span<const double> a, std::span<const double> b);

/// Asymptotic 1% critical values.
double ks_critical_1pct(std::size_t n) noexcept;
double ks_two_sample_critical_1pct(std::size_t n, std::size_t m) noexcept;

}  // namespace nestlogit
