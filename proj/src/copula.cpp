#include "nestlogit/copula.hpp"

#include <cmath>
#include <string>
#include <tuple>

#include "nestlogit/distributions.hpp"
#include "nestlogit/errors.hpp"

namespace nestlogit {

namespace {

void check_sampling_domain(const FrechetGumbelParams& p) {
  if (!(p.alpha > 0.0)) throw Error(ErrorKind::DomainError, "Frechet shape must be positive");
  if (!(p.lambda > 0.0 && p.lambda <= 1.0))
    throw Error(ErrorKind::DomainError, "copula lambda must lie in (0, 1]");
}

void check_correlation_domain(const FrechetGumbelParams& p) {
  check_sampling_domain(p);
  if (!(p.alpha > 2.0))
    throw Error(ErrorKind::DomainError,
                "correlation needs alpha > 2 (finite variance), got " + std::to_string(p.alpha));
}

std::pair<double, double> draw_pair(SeededStream stream, std::uint64_t d, double alpha,
                                    const StableParam& lam) {
  RandomStream rng(stream.substream(d));
  const double log_z = stable_log_sample(rng, lam);
  const double e1 = gumbel_sample(rng);
  const double e2 = gumbel_sample(rng);
  const double k = lam.lambda() / alpha;
  return {std::exp(k * (e1 + log_z)), std::exp(k * (e2 + log_z))};
}

}  // namespace

double frechet_corr(const FrechetGumbelParams& p) {
  check_correlation_domain(p);
  if (p.lambda == 1.0) return 0.0;
  const double a = p.alpha, l = p.lambda;
  const double g1 = special::gamma(1.0 - 1.0 / a);
  const double g2 = special::gamma(1.0 - 2.0 / a);
  const double gl = special::gamma(1.0 - l / a);
  const double cross = g2 * gl * gl / special::gamma(1.0 - 2.0 * l / a);
  return (cross - g1 * g1) / (g2 - g1 * g1);
}

double gumbel_copula(double u, double v, double lambda) {
  const double s = std::pow(-std::log(u), 1.0 / lambda) + std::pow(-std::log(v), 1.0 / lambda);
  return std::exp(-std::pow(s, lambda));
}

double frechet_cdf(double x, double alpha) { return x > 0.0 ? std::exp(-std::pow(x, -alpha)) : 0.0; }

FrechetPairs frechet_pair_sample(SeededStream stream, const FrechetGumbelParams& p,
                                 std::uint64_t n_draws, const SimulationOptions& opts) {
  check_sampling_domain(p);
  const StableParam lam(p.lambda);
  FrechetPairs out{std::vector<double>(n_draws), std::vector<double>(n_draws)};
  map_chunks<char>(n_draws, opts, [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t d = begin; d < end; ++d)
      std::tie(out.first[d], out.second[d]) = draw_pair(stream, d, p.alpha, lam);
    return char{0};
  });
  return out;
}

EstimateWithError mc_frechet_corr(SeededStream stream, const FrechetGumbelParams& p,
                                  std::uint64_t n_draws, const SimulationOptions& opts) {
  check_correlation_domain(p);
  const StableParam lam(p.lambda);
  auto partials = map_chunks<CovarianceAccumulator>(
      n_draws, opts, [&](std::uint64_t begin, std::uint64_t end) {
        CovarianceAccumulator acc;
        for (std::uint64_t d = begin; d < end; ++d) {
          const auto [x, y] = draw_pair(stream, d, p.alpha, lam);
          acc.add(x, y);
        }
        return acc;
      });
  CovarianceAccumulator total;
  for (const auto& part : partials) total.merge(part);
  return total.correlation_estimate();
}

}  // namespace nestlogit
