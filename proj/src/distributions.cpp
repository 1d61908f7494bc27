#include "nestlogit/distributions.hpp"

#include <algorithm>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/sin_pi.hpp>
#include <cmath>
#include <limits>
#include <string>

#include "nestlogit/errors.hpp"

namespace nestlogit {

namespace {

constexpr int kSeriesTermBudget = 400;
constexpr double kCancellationRatio = 1e12;

std::string num(double x) { return std::to_string(x); }

}  // namespace

double special::gamma(double x) { return boost::math::tgamma(x); }
double special::log_gamma(double x) { return boost::math::lgamma(x); }

StableParam::StableParam(double lambda) : lambda_(lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0))
    throw Error(ErrorKind::DomainError, "stable parameter must lie in (0, 1], got " + num(lambda));
}

double gumbel_quantile(double u, const GumbelParams& p) noexcept {
  return p.mu - p.beta * std::log(-std::log(u));
}

double gumbel_cdf(double x, const GumbelParams& p) noexcept {
  return std::exp(-std::exp(-(x - p.mu) / p.beta));
}

double gumbel_sample(RandomStream& rng, const GumbelParams& p) noexcept {
  return gumbel_quantile(rng.uniform(), p);
}

double gumbel_mgf(double t) {
  if (!(t < 1.0)) throw Error(ErrorKind::DomainError, "Gumbel mgf requires t < 1, got " + num(t));
  return special::gamma(1.0 - t);
}

double stable_log_sample(RandomStream& rng, const StableParam& p) noexcept {
  const double lam = p.lambda();
  if (p.degenerate()) return 0.0;
  // Kanter: Z = (a(U) / E)^{(1-lam)/lam}, U ~ U(0, pi), E ~ Exp(1), with
  // a(u) = sin((1-lam)u) sin(lam u)^{lam/(1-lam)} / sin(u)^{1/(1-lam)}.
  const double u = std::numbers::pi * rng.uniform();
  const double e = rng.exponential();
  const double one_minus = 1.0 - lam;
  const double log_a = std::log(std::sin(one_minus * u)) +
                       lam / one_minus * std::log(std::sin(lam * u)) -
                       std::log(std::sin(u)) / one_minus;
  return one_minus / lam * (log_a - std::log(e));
}

double stable_sample(RandomStream& rng, const StableParam& p) noexcept {
  return std::exp(stable_log_sample(rng, p));
}

double stable_moment(const StableParam& p, double kappa) {
  if (!(kappa > 0.0 && kappa < p.lambda()))
    throw Error(ErrorKind::DomainError,
                "moment order kappa must lie in (0, lambda), got kappa=" + num(kappa) +
                    " lambda=" + num(p.lambda()));
  return special::gamma(1.0 - kappa / p.lambda()) / special::gamma(1.0 - kappa);
}

EtaMoments eta_moments(double lambda) {
  const StableParam p(lambda);
  const double lam = p.lambda();
  return {(1.0 - lam) * kEulerGamma, (1.0 - lam * lam) * std::numbers::pi * std::numbers::pi / 6.0};
}

double eta_mgf(double lambda, double t) {
  const StableParam p(lambda);
  if (!(t < 1.0)) throw Error(ErrorKind::DomainError, "eta mgf requires t < 1, got " + num(t));
  return special::gamma(1.0 - t) / special::gamma(1.0 - p.lambda() * t);
}

SeriesDensity stable_density_series(const StableParam& p, double x, double tol) {
  if (p.degenerate())
    throw Error(ErrorKind::DomainError, "P(1) is a point mass and has no density");
  if (!(x > 0.0)) throw Error(ErrorKind::DomainError, "density argument must be positive");
  if (!(tol > 0.0)) throw Error(ErrorKind::DomainError, "tolerance must be positive");

  const double lam = p.lambda();
  const double log_x = std::log(x);
  SeriesDensity out;
  double sum = 0.0;
  int small_run = 0;
  // term_k = (-1/pi) (-1)^k / k! sin(k pi lam) Gamma(lam k + 1) x^{-lam k - 1}; term_0 = 0.
  for (int k = 0; k < kSeriesTermBudget; ++k) {
    double term = 0.0;
    if (k > 0) {
      const double s = boost::math::sin_pi(k * lam);
      const double log_mag = special::log_gamma(lam * k + 1.0) - special::log_gamma(k + 1.0) -
                             (lam * k + 1.0) * log_x;
      const double sign = (k % 2 == 0) ? -1.0 : 1.0;
      term = sign * s * std::exp(log_mag) / std::numbers::pi;
    }
    sum += term;
    out.terms = k + 1;
    out.max_term = std::max(out.max_term, std::abs(term));
    if (k > 0 && std::abs(term) < tol * (std::abs(sum) + std::numeric_limits<double>::min())) {
      if (++small_run == 2) {
        out.value = sum;
        out.loss_of_precision = out.max_term > kCancellationRatio * std::abs(sum);
        return out;
      }
    } else {
      small_run = 0;
    }
  }
  throw Error(ErrorKind::NoConvergence, "Humbert series did not converge within " +
                                            std::to_string(kSeriesTermBudget) + " terms at x=" +
                                            num(x) + " lambda=" + num(lam));
}

double stable_density_half(double x) {
  if (!(x > 0.0)) throw Error(ErrorKind::DomainError, "density argument must be positive");
  return std::exp(-0.25 / x) / (2.0 * std::sqrt(std::numbers::pi) * x * std::sqrt(x));
}

namespace {

template <class Draw>
EstimateWithError mean_over_draws(SeededStream stream, std::uint64_t n_draws,
                                  const SimulationOptions& opts, Draw&& draw) {
  const auto partials = map_chunks<MeanAccumulator>(n_draws, opts, [&](std::uint64_t begin, std::uint64_t end) {
    MeanAccumulator acc;
    for (std::uint64_t i = begin; i < end; ++i) {
      RandomStream rng(stream.substream(i));
      acc.add(draw(rng));
    }
    return acc;
  });
  MeanAccumulator total;
  for (const auto& p : partials) total.merge(p);
  return total.estimate();
}

}  // namespace

EstimateWithError stable_laplace_estimate(SeededStream stream, const StableParam& p, double t,
                                          std::uint64_t n_draws, const SimulationOptions& opts) {
  if (!(t >= 0.0)) throw Error(ErrorKind::DomainError, "Laplace argument must be nonnegative");
  return mean_over_draws(stream, n_draws, opts, [&](RandomStream& rng) {
    return std::exp(-t * stable_sample(rng, p));
  });
}

EstimateWithError stable_product_check(SeededStream stream, const StableParam& l1,
                                       const StableParam& l2, std::uint64_t n_draws,
                                       const SimulationOptions& opts) {
  return mean_over_draws(stream, n_draws, opts, [&](RandomStream& rng) {
    const double log_w = stable_log_sample(rng, l1) + stable_log_sample(rng, l2) / l1.lambda();
    return std::exp(-std::exp(log_w));
  });
}

}  // namespace nestlogit
