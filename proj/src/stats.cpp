#include "nestlogit/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace nestlogit {

namespace {
// Kolmogorov distribution: P(sqrt(n) D > 1.628) ~= 0.01.
constexpr double kKs1pct = 1.63;
}  // namespace

double EstimateWithError::z_score(double target) const {
  const double gap = std::abs(value - target);
  if (std_error > 0.0) return gap / std_error;
  return gap == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
}

bool EstimateWithError::within_sigmas(double target, double sigmas) const {
  return z_score(target) <= sigmas;
}

void MeanAccumulator::add(double x) noexcept {
  ++n_;
  const double delta = x - mean_;
  mean_ += delta / static_cast<double>(n_);
  m2_ += delta * (x - mean_);
}

void MeanAccumulator::merge(const MeanAccumulator& o) noexcept {
  if (o.n_ == 0) return;
  if (n_ == 0) {
    *this = o;
    return;
  }
  const double na = static_cast<double>(n_), nb = static_cast<double>(o.n_);
  const double n = na + nb;
  const double delta = o.mean_ - mean_;
  mean_ += delta * nb / n;
  m2_ += o.m2_ + delta * delta * na * nb / n;
  n_ += o.n_;
}

double MeanAccumulator::variance() const noexcept {
  return n_ < 2 ? 0.0 : m2_ / static_cast<double>(n_ - 1);
}

EstimateWithError MeanAccumulator::estimate() const noexcept {
  const double se = n_ == 0 ? 0.0 : std::sqrt(variance() / static_cast<double>(n_));
  return {mean_, se, n_};
}

void CovarianceAccumulator::add(double x, double y) noexcept {
  ++n_;
  const double n = static_cast<double>(n_);
  const double dx = x - mean_x_;
  const double dy = y - mean_y_;
  mean_x_ += dx / n;
  mean_y_ += dy / n;
  m2x_ += dx * (x - mean_x_);
  m2y_ += dy * (y - mean_y_);
  cxy_ += dx * (y - mean_y_);
}

void CovarianceAccumulator::merge(const CovarianceAccumulator& o) noexcept {
  if (o.n_ == 0) return;
  if (n_ == 0) {
    *this = o;
    return;
  }
  const double na = static_cast<double>(n_), nb = static_cast<double>(o.n_);
  const double n = na + nb;
  const double dx = o.mean_x_ - mean_x_;
  const double dy = o.mean_y_ - mean_y_;
  const double w = na * nb / n;
  mean_x_ += dx * nb / n;
  mean_y_ += dy * nb / n;
  m2x_ += o.m2x_ + dx * dx * w;
  m2y_ += o.m2y_ + dy * dy * w;
  cxy_ += o.cxy_ + dx * dy * w;
  n_ += o.n_;
}

double CovarianceAccumulator::covariance() const noexcept {
  return n_ < 2 ? 0.0 : cxy_ / static_cast<double>(n_ - 1);
}

double CovarianceAccumulator::correlation() const noexcept {
  const double denom = std::sqrt(m2x_ * m2y_);
  return denom > 0.0 ? cxy_ / denom : 0.0;
}

EstimateWithError CovarianceAccumulator::correlation_estimate() const noexcept {
  const double r = correlation();
  const double se = n_ < 2 ? 0.0 : (1.0 - r * r) / std::sqrt(static_cast<double>(n_ - 1));
  return {r, se, n_};
}

EstimateWithError binomial_estimate(std::uint64_t hits, std::uint64_t n) noexcept {
  if (n == 0) return {};
  const double p = static_cast<double>(hits) / static_cast<double>(n);
  return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(n)), n};
}

double ks_statistic(std::span<const double> sample, const std::function<double(double)>& cdf) {
  std::vector<double> xs(sample.begin(), sample.end());
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = cdf(xs[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

double ks_two_sample(std::span<const double> a, std::span<const double> b) {
  std::vector<double> xa(a.begin(), a.end()), xb(b.begin(), b.end());
  std::sort(xa.begin(), xa.end());
  std::sort(xb.begin(), xb.end());
  const double na = static_cast<double>(xa.size()), nb = static_cast<double>(xb.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < xa.size() && j < xb.size()) {
    const double x = std::min(xa[i], xb[j]);
    while (i < xa.size() && xa[i] <= x) ++i;
    while (j < xb.size() && xb[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

double ks_critical_1pct(std::size_t n) noexcept {
  return kKs1pct / std::sqrt(static_cast<double>(n));
}

double ks_two_sample_critical_1pct(std::size_t n, std::size_t m) noexcept {
  const double dn = static_cast<double>(n), dm = static_cast<double>(m);
  return kKs1pct * std::sqrt((dn + dm) / (dn * dm));
}

}  // namespace nestlogit
