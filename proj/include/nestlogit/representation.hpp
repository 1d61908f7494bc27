#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nestlogit/nested_logit.hpp"
#include "nestlogit/parallel.hpp"
#include "nestlogit/random.hpp"
#include "nestlogit/stats.hpp"

namespace nestlogit {

/// Row-major matrix of simulated utility shocks, one row per draw and one
/// column per alternative (leaf order).
class SampleBatch {
 public:
  SampleBatch(std::vector<std::string> leaf_order, std::uint64_t seed, std::uint64_t n_draws);

  std::uint64_t n_draws() const noexcept { return n_draws_; }
  std::size_t n_leaves() const noexcept { return leaf_order_.size(); }
  std::uint64_t seed() const noexcept { return seed_; }
  const std::vector<std::string>& leaf_order() const noexcept { return leaf_order_; }

  std::span<const double> row(std::uint64_t r) const {
    return {draws_.data() + r * n_leaves(), n_leaves()};
  }
  std::span<double> row(std::uint64_t r) { return {draws_.data() + r * n_leaves(), n_leaves()}; }
  double at(std::uint64_t r, std::size_t c) const { return draws_[r * n_leaves() + c]; }
  std::vector<double> column(std::size_t c) const;

 private:
  std::vector<std::string> leaf_order_;
  std::uint64_t seed_;
  std::uint64_t n_draws_;
  std::vector<double> draws_;
};

/// Draws one shock vector from the nested logit distribution:
/// eps_j = sum over nests n on the root path of Lambda_n log Z_n, plus
/// Lambda_{parent(j)} times a standard Gumbel. One Z_n ~ P(lambda_n) per nest,
/// shared by all alternatives below it; nests with lambda = 1 contribute 0.
/// Draw d uses the substream stream.substream(d).
class ShockSampler {
 public:
  explicit ShockSampler(const ModelSpec& model);

  /// Writes eps for draw d into out (leaf order, size leaf_count).
  void draw(SeededStream stream, std::uint64_t d, std::span<double> out) const;

 private:
  const ModelSpec* model_;
  std::vector<NodeIndex> factor_nests_;  // lambda < 1, in preorder
  std::vector<double> factor_lambda_;
  std::vector<double> factor_big_lambda_;
  mutable std::vector<double> scratch_;  // not thread-safe: copy the sampler per thread
};

/// Simulates draws [0, n) chunk by chunk, calling visit(partial, eps) for
/// each shock vector, then folds the per-chunk partials in chunk order.
template <class Partial, class Visit, class Fold>
Partial reduce_draws(const ModelSpec& model, SeededStream stream, std::uint64_t n,
                     const SimulationOptions& opts, Partial init, Visit&& visit, Fold&& fold) {
  const ShockSampler prototype(model);
  auto partials = map_chunks<Partial>(n, opts, [&](std::uint64_t begin, std::uint64_t end) {
    ShockSampler sampler = prototype;
    std::vector<double> eps(model.tree().leaf_count());
    Partial part = init;
    for (std::uint64_t d = begin; d < end; ++d) {
      sampler.draw(stream, d, eps);
      visit(part, std::span<const double>(eps));
    }
    return part;
  });
  Partial total = std::move(init);
  for (const auto& p : partials) fold(total, p);
  return total;
}

SampleBatch sample_epsilon(const ModelSpec& model, SeededStream stream, std::uint64_t n_draws,
                           const SimulationOptions& opts = {});

/// Argmax frequencies of U_j + eps_j (leaf order), binomial standard errors.
/// Ties go to the first alternative in leaf order.
std::vector<EstimateWithError> mc_choice_probs(const ModelSpec& model, SeededStream stream,
                                               std::uint64_t n_draws,
                                               const SimulationOptions& opts = {});

/// Sample mean of max_j (U_j + eps_j). This includes the Euler constant:
/// it estimates emax(root) + gamma_E.
EstimateWithError mc_emax(const ModelSpec& model, SeededStream stream, std::uint64_t n_draws,
                          const SimulationOptions& opts = {});

/// Pearson correlation of eps_{j1} and eps_{j2}. Throws UnknownNode /
/// NotALeaf, DomainError when j1 == j2.
EstimateWithError mc_correlation(const ModelSpec& model, SeededStream stream, NodeIndex j1,
                                 NodeIndex j2, std::uint64_t n_draws,
                                 const SimulationOptions& opts = {});

/// All pairwise correlations of a batch, |J| x |J| row-major.
std::vector<double> correlation_matrix(const SampleBatch& batch);

/// Pairwise correlations of the first `columns` alternatives accumulated over
/// simulated draws without storing them, row-major columns x columns.
std::vector<EstimateWithError> mc_correlation_matrix(const ModelSpec& model, SeededStream stream,
                                                     std::size_t columns, std::uint64_t n_draws,
                                                     const SimulationOptions& opts = {});

/// Correlation predicted by the factor structure: 1 - Lambda_{lca}^2.
double predicted_correlation(const ModelSpec& model, NodeIndex j1, NodeIndex j2);

/// Empirical Pr(eps_j <= A_j for all j), binomial standard error.
EstimateWithError mc_joint_cdf(const ModelSpec& model, SeededStream stream,
                               std::span<const double> A, std::uint64_t n_draws,
                               const SimulationOptions& opts = {});

/// Simulated choice probabilities of a single-layer model seen as a mixed
/// logit. Each of the K draws yields a logit probability vector on the common
/// scale s = min_n lambda_n, with weights Z_n^{lambda_n/s} W_j exp(U_j/s),
/// Z_n ~ P(lambda_n) per nest and W_j ~ P(s/lambda_n) per alternative; the
/// estimate is the mean over draws. When all lambdas are equal W_j = 1 and the
/// weights reduce to Z_n exp(U_j/lambda). Throws ShapeError for deeper trees.
std::vector<EstimateWithError> mixed_logit_probs(const ModelSpec& model, SeededStream stream,
                                                 std::uint64_t K,
                                                 const SimulationOptions& opts = {});

}  // namespace nestlogit
