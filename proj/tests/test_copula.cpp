#include <doctest.h>

#include <cmath>

#include "nestlogit/copula.hpp"
#include "nestlogit/distributions.hpp"
#include "nestlogit/errors.hpp"

using namespace nestlogit;

namespace {

// Correlation written out with std::tgamma, independent of the library's gamma.
double corr_oracle(double a, double l) {
  const double g1 = std::tgamma(1 - 1 / a), g2 = std::tgamma(1 - 2 / a);
  return (g2 * std::pow(std::tgamma(1 - l / a), 2) / std::tgamma(1 - 2 * l / a) - g1 * g1) / (g2 - g1 * g1);
}

}  // namespace

TEST_CASE("closed-form correlation") {
  CHECK(frechet_corr({3.0, 0.5}) == doctest::Approx(0.8128652223619106).epsilon(1e-12));
  CHECK(std::abs(frechet_corr({3.0, 0.5}) - corr_oracle(3.0, 0.5)) < 1e-10);
  CHECK(frechet_corr({5.0, 1.0}) == 0.0);
  CHECK(frechet_corr({2.5, 1.0}) == 0.0);
  CHECK(frechet_corr({5.0, 1e-6}) == doctest::Approx(1.0).epsilon(1e-4));
  for (double a : {2.2, 3.0, 4.0, 7.5, 20.0})
    for (double l : {0.05, 0.3, 0.6, 0.95}) CHECK(frechet_corr({a, l}) == doctest::Approx(corr_oracle(a, l)).epsilon(1e-10));
}

TEST_CASE("correlation domain") {
  const auto kind = [](double a, double l) {
    try {
      frechet_corr({a, l});
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::IoError;
  };
  CHECK(kind(2.0, 0.5) == ErrorKind::DomainError);
  CHECK(kind(1.0, 0.5) == ErrorKind::DomainError);
  CHECK(kind(3.0, 0.0) == ErrorKind::DomainError);
  CHECK(kind(3.0, 1.5) == ErrorKind::DomainError);
  CHECK_THROWS_AS(mc_frechet_corr({1, 1}, {2.0, 0.5}, 100), Error);
}

TEST_CASE("correlation decreases in lambda") {
  double prev = 2.0;
  for (int i = 1; i <= 50; ++i) {
    const double l = i / 50.0;
    const double r = frechet_corr({5.0, l});
    CHECK(r <= prev);
    CHECK(r >= 0.0);
    CHECK(r <= 1.0);
    prev = r;
  }
  CHECK(frechet_corr({5.0, 0.02}) - frechet_corr({5.0, 1.0}) > 0.9);
}

TEST_CASE("simulated correlation") {
  const auto e = mc_frechet_corr({2, 0}, {5.0, 0.5}, 1'000'000);
  CHECK(std::abs(e.value - frechet_corr({5.0, 0.5})) < 0.01);
  const auto indep = mc_frechet_corr({2, 1}, {5.0, 1.0}, 200'000);
  CHECK(std::abs(indep.value) < 3.0 * indep.std_error + 1e-3);
  const auto strong = mc_frechet_corr({2, 2}, {5.0, 0.1}, 200'000);
  CHECK(strong.value > 0.9);
}

TEST_CASE("Frechet marginals, moments and copula") {
  const double alpha = 5.0, lambda = 0.5;
  const auto pairs = frechet_pair_sample({3, 0}, {alpha, lambda}, 1'000'000);
  REQUIRE(pairs.first.size() == 1'000'000);

  const std::vector<double> head(pairs.first.begin(), pairs.first.begin() + 100'000);
  CHECK(ks_statistic(head, [&](double x) { return frechet_cdf(x, alpha); }) < ks_critical_1pct(head.size()));
  const std::vector<double> head2(pairs.second.begin(), pairs.second.begin() + 100'000);
  CHECK(ks_statistic(head2, [&](double x) { return frechet_cdf(x, alpha); }) < ks_critical_1pct(head2.size()));

  MeanAccumulator m1, m2;
  for (double d : pairs.first) {
    m1.add(d);
    m2.add(d * d);
  }
  CHECK(m1.estimate().within_sigmas(std::tgamma(1 - 1 / alpha), 3.0));
  CHECK(m2.estimate().within_sigmas(std::tgamma(1 - 2 / alpha), 3.0));

  for (double x : {0.8, 1.0, 1.3})
    for (double y : {0.9, 1.2}) {
      std::uint64_t hits = 0;
      for (std::size_t i = 0; i < pairs.first.size(); ++i) hits += pairs.first[i] <= x && pairs.second[i] <= y;
      const double exact = gumbel_copula(frechet_cdf(x, alpha), frechet_cdf(y, alpha), lambda);
      CAPTURE(x);
      CAPTURE(y);
      CHECK(binomial_estimate(hits, pairs.first.size()).within_sigmas(exact, 3.0));
    }
}

TEST_CASE("copula boundary cases") {
  CHECK(gumbel_copula(0.3, 0.6, 1.0) == doctest::Approx(0.18).epsilon(1e-14));
  CHECK(gumbel_copula(0.3, 1.0, 0.4) == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(frechet_cdf(1.0, 3.0) == doctest::Approx(std::exp(-1.0)));
  const auto p = frechet_pair_sample({3, 1}, {5.0, 1.0}, 10);
  CHECK(p.first.size() == 10);
}
