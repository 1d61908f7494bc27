#include "nestlogit/verify.hpp"

#include <algorithm>
#include <boost/math/distributions/normal.hpp>
#include <cmath>
#include <limits>
#include <fmt/format.h>
#include <numeric>

#include "nestlogit/distributions.hpp"
#include "nestlogit/representation.hpp"

namespace nestlogit {

namespace {

constexpr double kExactTol = 1e-12;
constexpr double kGradientStep = 1e-5;
constexpr double kGradientTol = 1e-6;
constexpr double kFixtureTol = 1e-6;
constexpr double kCorrelationTolAtMillion = 0.01;

/// Two-sided 3-sigma level (0.27%) shared across `comparisons` tests.
double sigma_threshold(std::size_t comparisons) {
  const double alpha = 2.0 * boost::math::cdf(boost::math::complement(boost::math::normal(), 3.0));
  const double per_test = alpha / static_cast<double>(std::max<std::size_t>(1, comparisons));
  return boost::math::quantile(boost::math::complement(boost::math::normal(), per_test / 2.0));
}

CheckResult make(std::string name, double observed, double threshold, std::string detail) {
  return {std::move(name), observed <= threshold, observed, threshold, std::move(detail)};
}

}  // namespace

std::vector<double> finite_difference_gradient(const ModelSpec& model, double step) {
  std::vector<double> u(model.utilities().begin(), model.utilities().end());
  std::vector<double> grad(u.size());
  for (std::size_t k = 0; k < u.size(); ++k) {
    const double saved = u[k];
    u[k] = saved + step;
    const double up = emax(model.with_utilities(u), Arborescence::root());
    u[k] = saved - step;
    const double down = emax(model.with_utilities(u), Arborescence::root());
    u[k] = saved;
    grad[k] = (up - down) / (2.0 * step);
  }
  return grad;
}

std::vector<std::vector<double>> cdf_spot_grid(const ModelSpec& model) {
  const std::size_t J = model.tree().leaf_count();
  std::vector<std::vector<double>> grid;
  for (double level : {0.0, 1.0, 2.0, 3.5}) grid.emplace_back(J, level);
  std::vector<double> mixed(J);
  for (std::size_t k = 0; k < J; ++k) mixed[k] = k % 2 == 0 ? 1.0 : 3.0;
  grid.push_back(std::move(mixed));
  return grid;
}

std::vector<CheckResult> verify_model(const ModelSpec& model, const VerifyOptions& opts) {
  const Arborescence& tree = model.tree();
  const std::size_t J = tree.leaf_count();
  std::vector<CheckResult> out;

  const NodeValues u = backward_utils(model);
  const NodeValues log_pi = log_forward_probs(model, u);
  NodeValues pi = log_pi;
  for (double& v : pi.values) v = std::exp(v);
  const std::vector<double> probs = leaf_values(model, pi);

  {
    const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
    // Positivity is judged on log pi: a finite log probability is positive
    // even when exp underflows.
    double smallest_log = std::numeric_limits<double>::infinity();
    for (NodeIndex j : tree.leaves()) smallest_log = std::min(smallest_log, log_pi[j]);
    const double gap =
        std::isfinite(smallest_log) ? std::abs(total - 1.0) : std::numeric_limits<double>::infinity();
    out.push_back(make("probability-simplex", gap, kExactTol,
                       fmt::format("sum={:.17g} min log pi={:.17g}", total, smallest_log)));
  }
  {
    double worst = 0.0;
    std::string where = "-";
    for (NodeIndex n : tree.nests()) {
      double s = 0.0;
      for (NodeIndex z : tree.children(n)) s += pi[z];
      if (std::abs(s - pi[n]) >= worst) {
        worst = std::abs(s - pi[n]);
        where = tree.id(n);
      }
    }
    out.push_back(make("hierarchy-consistency", worst, kExactTol, "worst nest " + where));
  }
  {
    double worst = 0.0;
    for (NodeIndex z = 1; z < tree.size(); ++z)
      worst = std::max(worst, log_odds_from_log(model, u, log_pi, z).relative_gap());
    out.push_back(make("log-odds", worst, kExactTol,
                       "max |log(pi_z/pi_n) - (u_z-u_n)/Lambda_n| / max(1, (|u_z|+|u_n|)/Lambda_n)"));
  }
  {
    const auto fd = finite_difference_gradient(model, kGradientStep);
    double worst = 0.0;
    for (std::size_t k = 0; k < J; ++k) worst = std::max(worst, std::abs(fd[k] - probs[k]));
    out.push_back(make("dzw-gradient", worst, kGradientTol,
                       "central differences, step 1e-5, vs analytic probabilities"));
  }
  if (opts.expected_probabilities) {
    const auto& expected = *opts.expected_probabilities;
    double worst = expected.size() == J ? 0.0 : std::numeric_limits<double>::infinity();
    std::string where = "size mismatch";
    for (std::size_t k = 0; k < std::min(J, expected.size()); ++k) {
      const double gap = std::abs(probs[k] - expected[k]);
      if (gap >= worst) {
        worst = gap;
        where = fmt::format("{}: analytic {:.17g} expected {:.17g}", tree.id(tree.leaves()[k]),
                            probs[k], expected[k]);
      }
    }
    out.push_back(make("expected-fixture", worst, kFixtureTol, where));
  }

  // Monte Carlo checks, each on its own stream.
  const auto stream_for = [&](std::uint64_t k) {
    return SeededStream{opts.stream.seed, opts.stream.stream_index * 16 + k};
  };
  {
    const auto mc = mc_choice_probs(model, stream_for(0), opts.draws, opts.sim);
    double worst = 0.0;
    std::string where;
    for (std::size_t k = 0; k < J; ++k) {
      // Standard error at the analytic value: rarely chosen alternatives may
      // have no hits, which would make the empirical standard error zero.
      const double se = std::sqrt(probs[k] * (1.0 - probs[k]) / static_cast<double>(opts.draws));
      const double z = se > 0.0 ? std::abs(mc[k].value - probs[k]) / se
                                : (mc[k].value == probs[k] ? 0.0 : std::numeric_limits<double>::infinity());
      if (z >= worst) {
        worst = z;
        where = fmt::format("{}: mc {:.17g} +- {:.3g} analytic {:.17g}", tree.id(tree.leaves()[k]),
                            mc[k].value, mc[k].std_error, probs[k]);
      }
    }
    out.push_back(make("mc-choice-probabilities", worst, sigma_threshold(J), where));
  }
  {
    const auto mc = mc_emax(model, stream_for(1), opts.draws, opts.sim);
    const double analytic = u[Arborescence::root()];
    const double z = EstimateWithError{mc.value - kEulerGamma, mc.std_error, mc.n_draws}.z_score(analytic);
    out.push_back(make("mc-emax", z, sigma_threshold(1),
                       fmt::format("mc - gamma = {:.17g} +- {:.3g}, analytic {:.17g}",
                                   mc.value - kEulerGamma, mc.std_error, analytic)));
  }
  {
    const std::size_t cols = std::min(J, opts.max_correlation_leaves);
    const auto corr = mc_correlation_matrix(model, stream_for(2), cols, opts.draws, opts.sim);
    const double tol =
        kCorrelationTolAtMillion * std::max(1.0, std::sqrt(1e6 / static_cast<double>(opts.draws)));
    double worst = 0.0;
    std::string where = "single alternative";
    const auto leaves = tree.leaves();
    for (std::size_t a = 0; a < cols; ++a)
      for (std::size_t b = a + 1; b < cols; ++b) {
        const double expected = predicted_correlation(model, leaves[a], leaves[b]);
        const double gap = std::abs(corr[a * cols + b].value - expected);
        if (gap >= worst) {
          worst = gap;
          where = fmt::format("({}, {}): mc {:.6f} expected 1 - Lambda_lca^2 = {:.6f}",
                              tree.id(leaves[a]), tree.id(leaves[b]), corr[a * cols + b].value,
                              expected);
        }
      }
    out.push_back(make("lca-correlations", worst, tol, where));
  }
  {
    const auto grid = cdf_spot_grid(model);
    double worst = 0.0;
    std::string where;
    for (std::size_t g = 0; g < grid.size(); ++g) {
      const double analytic = cdf(model, grid[g]);
      const auto mc = mc_joint_cdf(model, stream_for(3 + g), grid[g], opts.draws, opts.sim);
      // Binomial error at the analytic value keeps the check meaningful when
      // the empirical frequency is 0 or 1.
      const double se = std::sqrt(analytic * (1.0 - analytic) / static_cast<double>(opts.draws));
      const double z = se > 0.0 ? std::abs(mc.value - analytic) / se : 0.0;
      if (z >= worst) {
        worst = z;
        where = fmt::format("grid point {}: mc {:.17g} analytic {:.17g}", g, mc.value, analytic);
      }
    }
    out.push_back(make("joint-cdf", worst, sigma_threshold(grid.size()), where));
  }
  return out;
}

}  // namespace nestlogit
