#pragma once

#include <cstdint>
#include <numbers>

#include "nestlogit/parallel.hpp"
#include "nestlogit/random.hpp"
#include "nestlogit/stats.hpp"

namespace nestlogit {

inline constexpr double kEulerGamma = std::numbers::egamma;

namespace special {
/// Gamma function, double precision (Boost.Math Lanczos).
double gamma(double x);
double log_gamma(double x);
}  // namespace special

/// Gumbel G(mu, beta), CDF exp(-exp(-(x - mu) / beta)).
struct GumbelParams {
  double mu = 0.0;
  double beta = 1.0;
};

/// Parameter of the positive stable law P(lambda), whose Laplace transform is
/// exp(-t^lambda). lambda = 1 is the unit point mass.
class StableParam {
 public:
  /// Throws DomainError unless 0 < lambda <= 1.
  explicit StableParam(double lambda);
  double lambda() const noexcept { return lambda_; }
  bool degenerate() const noexcept { return lambda_ == 1.0; }

 private:
  double lambda_;
};

double gumbel_quantile(double u, const GumbelParams& p) noexcept;
double gumbel_cdf(double x, const GumbelParams& p) noexcept;
double gumbel_sample(RandomStream& rng, const GumbelParams& p = {}) noexcept;

/// Moment generating function of G(0,1): Gamma(1 - t). DomainError if t >= 1.
double gumbel_mgf(double t);

/// Draw of Z ~ P(lambda) by Kanter's representation; exactly 1 when lambda = 1.
double stable_sample(RandomStream& rng, const StableParam& p) noexcept;
/// log Z for Z ~ P(lambda), computed without forming Z (Z over/underflows for
/// small lambda). Consumes the same uniforms as stable_sample.
double stable_log_sample(RandomStream& rng, const StableParam& p) noexcept;

/// E[Z^kappa] = Gamma(1 - kappa/lambda) / Gamma(1 - kappa) for 0 < kappa < lambda.
double stable_moment(const StableParam& p, double kappa);

struct EtaMoments {
  double mean;
  double variance;
};

/// Mean and variance of eta = lambda log Z: ((1 - lambda) gamma_E, (1 - lambda^2) pi^2 / 6).
EtaMoments eta_moments(double lambda);

/// E[exp(t eta)] = Gamma(1 - t) / Gamma(1 - lambda t), t < 1.
double eta_mgf(double lambda, double t);

struct SeriesDensity {
  double value = 0.0;
  int terms = 0;             ///< terms summed, k = 0 included
  double max_term = 0.0;     ///< largest |term| seen
  bool loss_of_precision = false;
};

/// Density of P(lambda) from Humbert's alternating series. Stops once two
/// consecutive terms fall below tol * (|sum| + DBL_MIN); throws NoConvergence
/// after 400 terms. loss_of_precision is set when the largest term exceeds
/// 1e12 times the result. DomainError for lambda = 1 or x <= 0.
SeriesDensity stable_density_series(const StableParam& p, double x, double tol);

/// Closed form for lambda = 1/2: x^{-3/2} exp(-1/(4x)) / (2 sqrt(pi)).
double stable_density_half(double x);

/// Monte Carlo estimate of E[exp(-t Z)], Z ~ P(lambda).
EstimateWithError stable_laplace_estimate(SeededStream stream, const StableParam& p, double t,
                                          std::uint64_t n_draws,
                                          const SimulationOptions& opts = {});

/// Empirical E[exp(-W)] for W = Z1 Z2^{1/lambda1}; W ~ P(lambda1 lambda2)
/// predicts exp(-1).
EstimateWithError stable_product_check(SeededStream stream, const StableParam& l1,
                                       const StableParam& l2, std::uint64_t n_draws,
                                       const SimulationOptions& opts = {});

}  // namespace nestlogit
