#pragma once

#include <cstdint>
#include <vector>

#include "nestlogit/parallel.hpp"
#include "nestlogit/random.hpp"
#include "nestlogit/stats.hpp"

namespace nestlogit {

/// Two Frechet(alpha) marginals, CDF exp(-x^-alpha), joined by a Gumbel copula
/// of parameter 1/lambda.
struct FrechetGumbelParams {
  double alpha;
  double lambda;
};

/// Closed-form Pearson correlation of the pair:
///   [G(1-2/a) G(1-l/a)^2 / G(1-2l/a) - G(1-1/a)^2] / [G(1-2/a) - G(1-1/a)^2]
/// DomainError unless alpha > 2 and 0 < lambda <= 1; lambda = 1 gives exactly 0.
double frechet_corr(const FrechetGumbelParams& p);

/// C(u, v) = exp(-((-log u)^{1/lambda} + (-log v)^{1/lambda})^lambda).
double gumbel_copula(double u, double v, double lambda);

double frechet_cdf(double x, double alpha);

struct FrechetPairs {
  std::vector<double> first;
  std::vector<double> second;
};

/// delta_i = exp(lambda/alpha (eps_i + log Z)) with shared Z ~ P(lambda) and
/// independent standard Gumbels eps_1, eps_2. Draw d uses stream.substream(d).
FrechetPairs frechet_pair_sample(SeededStream stream, const FrechetGumbelParams& p,
                                 std::uint64_t n_draws, const SimulationOptions& opts = {});

/// Pearson correlation of simulated pairs. Same domain as frechet_corr.
EstimateWithError mc_frechet_corr(SeededStream stream, const FrechetGumbelParams& p,
                                  std::uint64_t n_draws, const SimulationOptions& opts = {});

}  // namespace nestlogit
