#include "nestlogit/representation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nestlogit/distributions.hpp"
#include "nestlogit/errors.hpp"

namespace nestlogit {

SampleBatch::SampleBatch(std::vector<std::string> leaf_order, std::uint64_t seed,
                         std::uint64_t n_draws)
    : leaf_order_(std::move(leaf_order)),
      seed_(seed),
      n_draws_(n_draws),
      draws_(n_draws * leaf_order_.size()) {}

std::vector<double> SampleBatch::column(std::size_t c) const {
  std::vector<double> out(n_draws_);
  for (std::uint64_t r = 0; r < n_draws_; ++r) out[r] = at(r, c);
  return out;
}

ShockSampler::ShockSampler(const ModelSpec& model) : model_(&model) {
  const Arborescence& tree = model.tree();
  for (NodeIndex n : tree.nests()) {
    if (n == Arborescence::root() || tree.lambda(n) == 1.0) continue;
    factor_nests_.push_back(n);
    factor_lambda_.push_back(tree.lambda(n));
    factor_big_lambda_.push_back(model.metrics().big_lambda[n]);
  }
  scratch_.assign(tree.size(), 0.0);
}

void ShockSampler::draw(SeededStream stream, std::uint64_t d, std::span<double> out) const {
  const Arborescence& tree = model_->tree();
  const auto& big = model_->metrics().big_lambda;
  RandomStream rng(stream.substream(d));

  // Shared factors: log Z_n for every nest with lambda < 1, in preorder.
  std::fill(scratch_.begin(), scratch_.end(), 0.0);
  for (std::size_t k = 0; k < factor_nests_.size(); ++k)
    scratch_[factor_nests_[k]] =
        factor_big_lambda_[k] * stable_log_sample(rng, StableParam(factor_lambda_[k]));
  // Accumulate along root paths; parents precede children in preorder.
  for (NodeIndex n : tree.nests())
    if (n != Arborescence::root()) scratch_[n] += scratch_[*tree.parent(n)];

  const auto leaves = tree.leaves();
  for (std::size_t k = 0; k < leaves.size(); ++k) {
    const NodeIndex p = *tree.parent(leaves[k]);
    out[k] = scratch_[p] + big[p] * gumbel_sample(rng);
  }
}

namespace {

std::vector<std::string> leaf_ids(const ModelSpec& model) {
  std::vector<std::string> ids;
  for (NodeIndex leaf : model.tree().leaves()) ids.push_back(model.tree().id(leaf));
  return ids;
}

NodeIndex require_leaf(const Arborescence& tree, NodeIndex j) {
  if (j >= tree.size()) throw Error(ErrorKind::UnknownNode, "node index out of range");
  if (!tree.is_leaf(j)) throw Error(ErrorKind::NotALeaf, "'" + tree.id(j) + "' is a nest");
  return j;
}

}  // namespace

SampleBatch sample_epsilon(const ModelSpec& model, SeededStream stream, std::uint64_t n_draws,
                           const SimulationOptions& opts) {
  SampleBatch batch(leaf_ids(model), stream.seed, n_draws);
  const ShockSampler prototype(model);
  map_chunks<char>(n_draws, opts, [&](std::uint64_t begin, std::uint64_t end) {
    ShockSampler sampler = prototype;
    for (std::uint64_t d = begin; d < end; ++d) sampler.draw(stream, d, batch.row(d));
    return char{0};
  });
  return batch;
}

std::vector<EstimateWithError> mc_choice_probs(const ModelSpec& model, SeededStream stream,
                                               std::uint64_t n_draws,
                                               const SimulationOptions& opts) {
  const auto U = model.utilities();
  using Counts = std::vector<std::uint64_t>;
  const Counts counts = reduce_draws(
      model, stream, n_draws, opts, Counts(U.size(), 0),
      [&](Counts& c, std::span<const double> eps) {
        std::size_t best = 0;
        double best_value = U[0] + eps[0];
        for (std::size_t k = 1; k < U.size(); ++k) {
          const double v = U[k] + eps[k];
          if (v > best_value) {
            best_value = v;
            best = k;
          }
        }
        ++c[best];
      },
      [](Counts& total, const Counts& part) {
        for (std::size_t k = 0; k < total.size(); ++k) total[k] += part[k];
      });
  std::vector<EstimateWithError> out;
  for (std::uint64_t c : counts) out.push_back(binomial_estimate(c, n_draws));
  return out;
}

EstimateWithError mc_emax(const ModelSpec& model, SeededStream stream, std::uint64_t n_draws,
                          const SimulationOptions& opts) {
  const auto U = model.utilities();
  return reduce_draws(
             model, stream, n_draws, opts, MeanAccumulator{},
             [&](MeanAccumulator& acc, std::span<const double> eps) {
               double best = -std::numeric_limits<double>::infinity();
               for (std::size_t k = 0; k < U.size(); ++k) best = std::max(best, U[k] + eps[k]);
               acc.add(best);
             },
             [](MeanAccumulator& total, const MeanAccumulator& part) { total.merge(part); })
      .estimate();
}

EstimateWithError mc_correlation(const ModelSpec& model, SeededStream stream, NodeIndex j1,
                                 NodeIndex j2, std::uint64_t n_draws,
                                 const SimulationOptions& opts) {
  const Arborescence& tree = model.tree();
  const std::size_t c1 = tree.leaf_position(require_leaf(tree, j1));
  const std::size_t c2 = tree.leaf_position(require_leaf(tree, j2));
  if (c1 == c2) throw Error(ErrorKind::DomainError, "correlation needs two distinct alternatives");
  return reduce_draws(
             model, stream, n_draws, opts, CovarianceAccumulator{},
             [&](CovarianceAccumulator& acc, std::span<const double> eps) { acc.add(eps[c1], eps[c2]); },
             [](CovarianceAccumulator& total, const CovarianceAccumulator& part) { total.merge(part); })
      .correlation_estimate();
}

std::vector<double> correlation_matrix(const SampleBatch& batch) {
  const std::size_t J = batch.n_leaves();
  const std::uint64_t n = batch.n_draws();
  std::vector<double> mean(J, 0.0);
  for (std::uint64_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < J; ++c) mean[c] += batch.at(r, c);
  for (double& m : mean) m /= static_cast<double>(n);

  std::vector<double> cov(J * J, 0.0);
  for (std::uint64_t r = 0; r < n; ++r) {
    const auto row = batch.row(r);
    for (std::size_t a = 0; a < J; ++a)
      for (std::size_t b = a; b < J; ++b) cov[a * J + b] += (row[a] - mean[a]) * (row[b] - mean[b]);
  }
  std::vector<double> corr(J * J, 0.0);
  for (std::size_t a = 0; a < J; ++a)
    for (std::size_t b = a; b < J; ++b) {
      const double r = cov[a * J + b] / std::sqrt(cov[a * J + a] * cov[b * J + b]);
      corr[a * J + b] = corr[b * J + a] = r;
    }
  return corr;
}

std::vector<EstimateWithError> mc_correlation_matrix(const ModelSpec& model, SeededStream stream,
                                                     std::size_t columns, std::uint64_t n_draws,
                                                     const SimulationOptions& opts) {
  const std::size_t J = std::min(columns, model.tree().leaf_count());
  using Pairs = std::vector<CovarianceAccumulator>;
  const Pairs acc = reduce_draws(
      model, stream, n_draws, opts, Pairs(J * J),
      [&](Pairs& p, std::span<const double> eps) {
        for (std::size_t a = 0; a < J; ++a)
          for (std::size_t b = a + 1; b < J; ++b) p[a * J + b].add(eps[a], eps[b]);
      },
      [](Pairs& total, const Pairs& part) {
        for (std::size_t k = 0; k < total.size(); ++k) total[k].merge(part[k]);
      });
  std::vector<EstimateWithError> out(J * J, EstimateWithError{1.0, 0.0, n_draws});
  for (std::size_t a = 0; a < J; ++a)
    for (std::size_t b = a + 1; b < J; ++b)
      out[a * J + b] = out[b * J + a] = acc[a * J + b].correlation_estimate();
  return out;
}

double predicted_correlation(const ModelSpec& model, NodeIndex j1, NodeIndex j2) {
  const Arborescence& tree = model.tree();
  require_leaf(tree, j1);
  require_leaf(tree, j2);
  if (j1 == j2) return 1.0;
  const double big = model.metrics().big_lambda[lca(tree, j1, j2)];
  return 1.0 - big * big;
}

EstimateWithError mc_joint_cdf(const ModelSpec& model, SeededStream stream,
                               std::span<const double> A, std::uint64_t n_draws,
                               const SimulationOptions& opts) {
  if (A.size() != model.tree().leaf_count())
    throw Error(ErrorKind::DomainError, "cdf argument must have one entry per alternative");
  const std::uint64_t hits = reduce_draws(
      model, stream, n_draws, opts, std::uint64_t{0},
      [&](std::uint64_t& h, std::span<const double> eps) {
        for (std::size_t k = 0; k < A.size(); ++k)
          if (eps[k] > A[k]) return;
        ++h;
      },
      [](std::uint64_t& total, std::uint64_t part) { total += part; });
  return binomial_estimate(hits, n_draws);
}

std::vector<EstimateWithError> mixed_logit_probs(const ModelSpec& model, SeededStream stream,
                                                 std::uint64_t K, const SimulationOptions& opts) {
  const Arborescence& tree = model.tree();
  if (!is_single_layer(tree))
    throw Error(ErrorKind::ShapeError, "mixed logit simulator needs a single layer of nests");
  if (K == 0) throw Error(ErrorKind::DomainError, "mixed logit simulator needs K >= 1 draws");

  const auto nests = tree.children(Arborescence::root());
  double scale = 1.0;
  for (NodeIndex n : nests) scale = std::min(scale, tree.lambda(n));

  const std::size_t J = tree.leaf_count();
  using Partial = std::vector<MeanAccumulator>;
  auto partials = map_chunks<Partial>(K, opts, [&](std::uint64_t begin, std::uint64_t end) {
    Partial acc(J);
    std::vector<double> log_w(J);
    std::vector<double> prob(J);
    for (std::uint64_t k = begin; k < end; ++k) {
      RandomStream rng(stream.substream(k));
      std::vector<double> log_z;
      for (NodeIndex n : nests) log_z.push_back(stable_log_sample(rng, StableParam(tree.lambda(n))));
      for (std::size_t i = 0; i < nests.size(); ++i) {
        const double lam = tree.lambda(nests[i]);
        const StableParam extra(scale / lam);
        for (NodeIndex j : tree.children(nests[i])) {
          const double log_extra = lam > scale ? stable_log_sample(rng, extra) : 0.0;
          log_w[tree.leaf_position(j)] =
              lam / scale * log_z[i] + log_extra + model.utility(j) / scale;
        }
      }
      const double m = *std::max_element(log_w.begin(), log_w.end());
      double s = 0.0;
      for (std::size_t c = 0; c < J; ++c) s += prob[c] = std::exp(log_w[c] - m);
      for (std::size_t c = 0; c < J; ++c) acc[c].add(prob[c] / s);
    }
    return acc;
  });

  Partial total(J);
  for (const auto& part : partials)
    for (std::size_t c = 0; c < J; ++c) total[c].merge(part[c]);
  std::vector<EstimateWithError> out;
  for (const auto& a : total) out.push_back(a.estimate());
  return out;
}

}  // namespace nestlogit
