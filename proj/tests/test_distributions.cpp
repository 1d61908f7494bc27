#include <doctest.h>
#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nestlogit/distributions.hpp"
#include "nestlogit/errors.hpp"

using namespace nestlogit;

namespace {

// Error of a double approximation of Gamma(x) in units of the last place of
// the correctly rounded value, measured against a 256-bit MPFR evaluation.
double gamma_ulp_error(double x, double approx) {
  mpfr_t ref, diff;
  mpfr_inits2(256, ref, diff, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_d(ref, x, MPFR_RNDN);
  mpfr_gamma(ref, ref, MPFR_RNDN);
  const double rounded = mpfr_get_d(ref, MPFR_RNDN);
  mpfr_sub_d(diff, ref, approx, MPFR_RNDN);
  const double err = std::abs(mpfr_get_d(diff, MPFR_RNDN));
  mpfr_clears(ref, diff, static_cast<mpfr_ptr>(nullptr));
  const double ulp = std::nextafter(rounded, INFINITY) - rounded;
  return err / ulp;
}

ErrorKind error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::IoError;  // sentinel: nothing thrown
}

EstimateWithError mean_of(std::uint64_t n, SeededStream s, auto&& draw) {
  MeanAccumulator acc;
  for (std::uint64_t i = 0; i < n; ++i) {
    RandomStream rng(s.substream(i));
    acc.add(draw(rng));
  }
  return acc.estimate();
}

}  // namespace

TEST_CASE("gamma within 4 ulp on (0, 10)") {
  double worst = 0.0;
  for (int i = 1; i < 20000; ++i) {
    const double x = i * 5e-4;
    worst = std::max(worst, gamma_ulp_error(x, special::gamma(x)));
  }
  for (double x : {1e-300, 1e-10, 0.5, 1.0 / 3.0, 2.0 / 3.0, 9.999999})
    worst = std::max(worst, gamma_ulp_error(x, special::gamma(x)));
  MESSAGE("worst gamma error (ulp): " << worst);
  CHECK(worst <= 4.0);
  CHECK(special::gamma(0.5) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-15));
  CHECK(special::log_gamma(10.0) == doctest::Approx(std::log(362880.0)).epsilon(1e-15));
}

TEST_CASE("gumbel quantile, cdf and mgf") {
  const GumbelParams p{2.0, 3.0};
  CHECK(gumbel_quantile(std::exp(-1.0), p) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(gumbel_cdf(gumbel_quantile(0.3, p), p) == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(gumbel_cdf(0.0, {}) == doctest::Approx(std::exp(-1.0)));
  CHECK(gumbel_mgf(0.0) == 1.0);
  CHECK(gumbel_mgf(0.5) == doctest::Approx(1.7724538509055159).epsilon(1e-14));
  CHECK(gumbel_mgf(-1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(error_of([] { gumbel_mgf(1.0); }) == ErrorKind::DomainError);
}

TEST_CASE("standard gumbel sample moments") {
  const auto mean = mean_of(1'000'000, {5, 1}, [](RandomStream& r) { return gumbel_sample(r); });
  CHECK(std::abs(mean.value - kEulerGamma) < 3.0 * (std::numbers::pi / std::sqrt(6.0)) / 1000.0);
  MeanAccumulator acc;
  for (std::uint64_t i = 0; i < 1'000'000; ++i) {
    RandomStream rng(SeededStream{5, 1}.substream(i));
    acc.add(gumbel_sample(rng));
  }
  CHECK(acc.variance() == doctest::Approx(std::numbers::pi * std::numbers::pi / 6.0).epsilon(0.01));
}

TEST_CASE("stable parameter domain") {
  CHECK(error_of([] { StableParam(0.0); }) == ErrorKind::DomainError);
  CHECK(error_of([] { StableParam(1.2); }) == ErrorKind::DomainError);
  CHECK(error_of([] { StableParam(std::nan("")); }) == ErrorKind::DomainError);
  CHECK(StableParam(1.0).degenerate());
}

TEST_CASE("degenerate stable law is the unit point mass") {
  RandomStream rng({1, 1});
  for (int i = 0; i < 10; ++i) {
    CHECK(stable_sample(rng, StableParam(1.0)) == 1.0);
    CHECK(stable_log_sample(rng, StableParam(1.0)) == 0.0);
  }
}

TEST_CASE("stable samples: Laplace transform and fractional moment") {
  const StableParam half(0.5);
  const auto laplace = stable_laplace_estimate({9, 2}, half, 1.0, 1'000'000);
  CHECK(std::abs(laplace.value - std::exp(-1.0)) < 0.002);
  CHECK(laplace.within_sigmas(std::exp(-1.0), 3.0));

  const auto m = mean_of(1'000'000, {9, 3}, [&](RandomStream& r) { return std::pow(stable_sample(r, half), 0.25); });
  CHECK(m.value == doctest::Approx(1.4464090846320772).epsilon(0.01));
}

TEST_CASE("log sampler matches the direct sampler") {
  for (double lam : {0.2, 0.5, 0.9}) {
    for (std::uint64_t i = 0; i < 100; ++i) {
      RandomStream a({3, i}), b({3, i});
      const double z = stable_sample(a, StableParam(lam));
      const double lz = stable_log_sample(b, StableParam(lam));
      if (std::isfinite(z) && z > 0.0) CHECK(std::log(z) == doctest::Approx(lz).epsilon(1e-12));
    }
  }
}

TEST_CASE("stable moment formula") {
  CHECK(stable_moment(StableParam(0.5), 0.25) == doctest::Approx(1.4464090846320772).epsilon(1e-14));
  CHECK(stable_moment(StableParam(0.5), 0.125) == doctest::Approx(1.1245941828303594).epsilon(1e-14));
  CHECK(stable_moment(StableParam(0.7), 1e-12) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(error_of([] { stable_moment(StableParam(0.5), 0.5); }) == ErrorKind::DomainError);
  CHECK(error_of([] { stable_moment(StableParam(0.5), 0.0); }) == ErrorKind::DomainError);
}

TEST_CASE("eta moments and mgf") {
  CHECK(eta_moments(1.0).mean == 0.0);
  CHECK(eta_moments(1.0).variance == 0.0);
  CHECK(eta_moments(0.5).mean == doctest::Approx(0.288608).epsilon(1e-6));
  CHECK(eta_moments(0.5).variance == doctest::Approx(1.233700).epsilon(1e-6));
  CHECK(eta_moments(0.9).mean == doctest::Approx(0.0577216).epsilon(1e-6));
  CHECK(eta_moments(0.9).variance == doctest::Approx(0.312537).epsilon(1e-5));
  CHECK(eta_mgf(0.5, 0.0) == 1.0);
  CHECK(eta_mgf(1.0, 0.3) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(eta_mgf(1.0, -2.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(eta_mgf(0.5, 0.5) == doctest::Approx(stable_moment(StableParam(0.5), 0.25)).epsilon(1e-15));
  CHECK(error_of([] { eta_mgf(0.5, 1.0); }) == ErrorKind::DomainError);
}

TEST_CASE("empirical eta moments") {
  for (double lam : {0.3, 0.5}) {
    CAPTURE(lam);
    MeanAccumulator acc;
    for (std::uint64_t i = 0; i < 1'000'000; ++i) {
      RandomStream rng(SeededStream{21, static_cast<std::uint64_t>(lam * 10)}.substream(i));
      acc.add(lam * stable_log_sample(rng, StableParam(lam)));
    }
    const auto ref = eta_moments(lam);
    CHECK(acc.mean() == doctest::Approx(ref.mean).epsilon(0.01));
    CHECK(acc.variance() == doctest::Approx(ref.variance).epsilon(0.01));
  }
}

TEST_CASE("Humbert series against the closed form at lambda = 1/2") {
  CHECK(stable_density_half(1.0) == doctest::Approx(0.21969564473386122).epsilon(1e-14));
  CHECK(stable_density_half(4.0) == doctest::Approx(0.03312544154300357).epsilon(1e-14));
  CHECK(stable_density_half(0.25) == doctest::Approx(0.8302149948411895).epsilon(1e-14));
  CHECK(stable_density_half(1e-3) < 1e-100);
  for (double x : {0.5, 1.0, 2.0, 4.0, 8.0}) {
    const auto s = stable_density_series(StableParam(0.5), x, 1e-12);
    CAPTURE(x);
    CHECK(std::abs(s.value - stable_density_half(x)) / stable_density_half(x) < 1e-8);
    CHECK_FALSE(s.loss_of_precision);
    CHECK(s.terms > 1);
  }
}

TEST_CASE("Humbert series domain and cancellation reporting") {
  CHECK(error_of([] { stable_density_series(StableParam(1.0), 1.0, 1e-12); }) == ErrorKind::DomainError);
  CHECK(error_of([] { stable_density_series(StableParam(0.5), 0.0, 1e-12); }) == ErrorKind::DomainError);
  CHECK(error_of([] { stable_density_series(StableParam(0.5), 1.0, 0.0); }) == ErrorKind::DomainError);
  // Near zero the alternating terms are huge compared with the tiny density.
  bool flagged = false;
  try {
    flagged = stable_density_series(StableParam(0.5), 0.01, 1e-12).loss_of_precision;
  } catch (const Error& e) {
    flagged = e.kind() == ErrorKind::NoConvergence;
  }
  CHECK(flagged);
}

TEST_CASE("product of stable variables") {
  const auto e = stable_product_check({4, 1}, StableParam(0.5), StableParam(0.5), 400'000);
  CHECK(e.within_sigmas(std::exp(-1.0), 3.0));
  const auto d1 = stable_product_check({4, 2}, StableParam(0.6), StableParam(1.0), 400'000);
  CHECK(d1.within_sigmas(std::exp(-1.0), 3.0));
  const auto d2 = stable_product_check({4, 3}, StableParam(1.0), StableParam(0.4), 400'000);
  CHECK(d2.within_sigmas(std::exp(-1.0), 3.0));
}

TEST_CASE("plus-stability of positive stable laws") {
  const double a[3] = {1.0, 2.0, 3.0};
  for (double lam : {0.3, 0.5, 0.7}) {
    double norm = 0.0;
    for (double ai : a) norm += std::pow(ai, lam);
    norm = std::pow(norm, 1.0 / lam);
    for (double t : {0.5, 1.0, 2.0}) {
      CAPTURE(lam);
      CAPTURE(t);
      const auto e = mean_of(200'000, {31, static_cast<std::uint64_t>(lam * 10)}, [&](RandomStream& r) {
        double w = 0.0;
        for (double ai : a) w += ai * stable_sample(r, StableParam(lam));
        return std::exp(-t * w / norm);
      });
      CHECK(e.within_sigmas(std::exp(-std::pow(t, lam)), 3.5));
    }
  }
}

TEST_CASE("gumbel plus log-stable is gumbel with scale 1/lambda") {
  for (double lam : {0.3, 0.5, 0.7}) {
    std::vector<double> xs;
    for (std::uint64_t i = 0; i < 100'000; ++i) {
      RandomStream rng(SeededStream{77, static_cast<std::uint64_t>(lam * 10)}.substream(i));
      const double lz = stable_log_sample(rng, StableParam(lam));
      xs.push_back(gumbel_sample(rng) + lz);
    }
    const double d = ks_statistic(xs, [lam](double x) { return std::exp(-std::exp(-lam * x)); });
    CAPTURE(lam);
    CHECK(d < ks_critical_1pct(xs.size()));
  }
}

TEST_CASE("max-stability of the Gumbel law") {
  const double u[2] = {0.0, 1.0};
  const double lse = std::log(std::exp(u[0]) + std::exp(u[1]));
  for (double lam : {0.5, 0.1}) {
    std::vector<double> lhs, rhs;
    for (std::uint64_t i = 0; i < 100'000; ++i) {
      RandomStream a(SeededStream{55, static_cast<std::uint64_t>(lam * 10)}.substream(i));
      double v[2];
      for (int j = 0; j < 2; ++j) v[j] = (u[j] + lam * stable_log_sample(a, StableParam(lam))) / lam;
      const double m = std::max(v[0], v[1]);
      lhs.push_back(lam * (m + std::log(std::exp(v[0] - m) + std::exp(v[1] - m))));
      RandomStream b(SeededStream{56, static_cast<std::uint64_t>(lam * 10)}.substream(i));
      rhs.push_back(lse + lam * stable_log_sample(b, StableParam(lam)));
    }
    CAPTURE(lam);
    CHECK(ks_two_sample(lhs, rhs) < ks_two_sample_critical_1pct(lhs.size(), rhs.size()));
  }
}
