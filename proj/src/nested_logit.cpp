#include "nestlogit/nested_logit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nestlogit/errors.hpp"

namespace nestlogit {

namespace {

/// log sum exp(scale * values[z]) over the children of n, max-shifted.
template <class Value>
double log_sum_exp_children(const Arborescence& tree, NodeIndex n, double scale, Value&& value) {
  double m = -std::numeric_limits<double>::infinity();
  for (NodeIndex z : tree.children(n)) m = std::max(m, scale * value(z));
  double s = 0.0;
  for (NodeIndex z : tree.children(n)) s += std::exp(scale * value(z) - m);
  return m + std::log(s);
}

void check_utilities(const Arborescence& tree, const std::vector<double>& utilities) {
  if (utilities.size() != tree.leaf_count())
    throw Error(ErrorKind::DomainError, "expected " + std::to_string(tree.leaf_count()) +
                                            " utilities, got " + std::to_string(utilities.size()));
  for (std::size_t k = 0; k < utilities.size(); ++k)
    if (!std::isfinite(utilities[k]))
      throw Error(ErrorKind::DomainError,
                  "utility of '" + tree.id(tree.leaves()[k]) + "' is not finite");
}

}  // namespace

ModelSpec::ModelSpec(Arborescence tree, std::vector<double> utilities)
    : tree_(std::make_shared<const Arborescence>(std::move(tree))),
      metrics_(std::make_shared<const TreeMetrics>(nestlogit::metrics(*tree_))),
      utilities_(std::move(utilities)) {
  check_utilities(*tree_, utilities_);
}

ModelSpec::ModelSpec(std::shared_ptr<const Arborescence> tree, std::shared_ptr<const TreeMetrics> m,
                     std::vector<double> utilities)
    : tree_(std::move(tree)), metrics_(std::move(m)), utilities_(std::move(utilities)) {}

ModelSpec ModelSpec::with_utilities(std::vector<double> utilities) const {
  check_utilities(*tree_, utilities);
  return ModelSpec(tree_, metrics_, std::move(utilities));
}

ModelSpec ModelSpec::from_map(Arborescence tree, const std::map<std::string, double>& utilities) {
  std::vector<double> u(tree.leaf_count(), std::numeric_limits<double>::quiet_NaN());
  for (const auto& [id, value] : utilities) u[tree.leaf_position(tree.index_of(id))] = value;
  for (std::size_t k = 0; k < u.size(); ++k)
    if (std::isnan(u[k]))
      throw Error(ErrorKind::DomainError,
                  "alternative '" + tree.id(tree.leaves()[k]) + "' has no utility");
  return ModelSpec(std::move(tree), std::move(u));
}

double cdf(const ModelSpec& model, std::span<const double> A) {
  const Arborescence& tree = model.tree();
  if (A.size() != tree.leaf_count())
    throw Error(ErrorKind::DomainError, "cdf argument must have one entry per alternative");
  const auto& big = model.metrics().big_lambda;
  std::vector<double> a(tree.size(), 0.0);
  for (std::size_t k = 0; k < A.size(); ++k) {
    if (!std::isfinite(A[k])) throw Error(ErrorKind::DomainError, "cdf argument is not finite");
    a[tree.leaves()[k]] = A[k];
  }
  for (NodeIndex n = static_cast<NodeIndex>(tree.size()); n-- > 0;) {
    if (!tree.is_nest(n)) continue;
    a[n] = -big[n] * log_sum_exp_children(tree, n, -1.0 / big[n], [&](NodeIndex z) { return a[z]; });
  }
  return std::exp(-std::exp(-a[Arborescence::root()]));
}

NodeValues backward_utils(const ModelSpec& model) {
  const Arborescence& tree = model.tree();
  const auto& big = model.metrics().big_lambda;
  NodeValues u{std::vector<double>(tree.size(), 0.0)};
  for (NodeIndex leaf : tree.leaves()) u[leaf] = model.utility(leaf);
  // Descending preorder index visits every child before its parent.
  for (NodeIndex n = static_cast<NodeIndex>(tree.size()); n-- > 0;) {
    if (!tree.is_nest(n)) continue;
    u[n] = big[n] * log_sum_exp_children(tree, n, 1.0 / big[n], [&](NodeIndex z) { return u[z]; });
  }
  return u;
}

NodeValues log_forward_probs(const ModelSpec& model, const NodeValues& u) {
  const Arborescence& tree = model.tree();
  const auto& big = model.metrics().big_lambda;
  if (u.size() != tree.size()) throw Error(ErrorKind::DomainError, "utility vector size mismatch");
  NodeValues log_pi{std::vector<double>(tree.size(), 0.0)};
  for (NodeIndex n = 0; n < tree.size(); ++n) {
    if (!tree.is_nest(n)) continue;
    // Shares relative to the largest child: exponents u_z / Lambda_n can be
    // large, and forming the full log-sum-exp first would round at that scale.
    const double scale = 1.0 / big[n];
    double m = -std::numeric_limits<double>::infinity();
    for (NodeIndex z : tree.children(n)) m = std::max(m, scale * u[z]);
    double s = 0.0;
    for (NodeIndex z : tree.children(n)) s += std::exp(scale * u[z] - m);
    const double log_s = std::log(s);
    for (NodeIndex z : tree.children(n)) log_pi[z] = log_pi[n] + ((scale * u[z] - m) - log_s);
  }
  return log_pi;
}

NodeValues forward_probs(const ModelSpec& model, const NodeValues& u) {
  NodeValues pi = log_forward_probs(model, u);
  for (double& v : pi.values) v = std::exp(v);
  return pi;
}

std::vector<double> leaf_values(const ModelSpec& model, const NodeValues& values) {
  std::vector<double> out;
  out.reserve(model.tree().leaf_count());
  for (NodeIndex leaf : model.tree().leaves()) out.push_back(values[leaf]);
  return out;
}

bool is_single_layer(const Arborescence& tree) {
  for (NodeIndex n : tree.children(Arborescence::root())) {
    if (!tree.is_nest(n)) return false;
    for (NodeIndex j : tree.children(n))
      if (!tree.is_leaf(j)) return false;
  }
  return true;
}

std::vector<double> choice_probs_single_layer(const ModelSpec& model) {
  const Arborescence& tree = model.tree();
  if (!is_single_layer(tree))
    throw Error(ErrorKind::ShapeError, "model is not a single layer of nests under the root");

  const auto nests = tree.children(Arborescence::root());
  std::vector<double> log_inner(tree.size());  // log sum_j exp(U_j / lambda_n)
  std::vector<double> log_weight;              // lambda_n * log_inner
  for (NodeIndex n : nests) {
    const double lam = tree.lambda(n);
    log_inner[n] = log_sum_exp_children(tree, n, 1.0 / lam, [&](NodeIndex j) { return model.utility(j); });
    log_weight.push_back(lam * log_inner[n]);
  }
  const double m = *std::max_element(log_weight.begin(), log_weight.end());
  double s = 0.0;
  for (double w : log_weight) s += std::exp(w - m);
  const double log_denominator = m + std::log(s);

  std::vector<double> pi(tree.leaf_count());
  for (std::size_t k = 0; k < nests.size(); ++k) {
    const NodeIndex n = nests[k];
    const double nest_share = log_weight[k] - log_denominator;
    for (NodeIndex j : tree.children(n))
      pi[tree.leaf_position(j)] =
          std::exp(nest_share + model.utility(j) / tree.lambda(n) - log_inner[n]);
  }
  return pi;
}

double emax(const ModelSpec& model, NodeIndex at) {
  const Arborescence& tree = model.tree();
  if (at >= tree.size()) throw Error(ErrorKind::UnknownNode, "node index out of range");
  if (!tree.is_nest(at)) throw Error(ErrorKind::NotANest, "'" + tree.id(at) + "' is an alternative");
  return backward_utils(model)[at];
}

double emax(const ModelSpec& model, std::string_view at) {
  return emax(model, model.tree().index_of(at));
}

std::vector<double> emax_gradient(const ModelSpec& model) {
  return leaf_values(model, forward_probs(model, backward_utils(model)));
}

LogOdds log_odds_from_log(const ModelSpec& model, const NodeValues& u, const NodeValues& log_pi,
                          NodeIndex z) {
  const Arborescence& tree = model.tree();
  const auto parent = tree.parent(z);
  if (!parent) throw Error(ErrorKind::RootHasNoParent, "the root has no parent nest");
  const NodeIndex n = *parent;
  const double big = model.metrics().big_lambda[n];
  return {log_pi[z] - log_pi[n], (u[z] - u[n]) / big,
          std::max(1.0, (std::abs(u[z]) + std::abs(u[n])) / big)};
}

LogOdds log_odds(const ModelSpec& model, const NodeValues& u, const NodeValues& pi, NodeIndex z) {
  NodeValues log_pi = pi;
  for (double& v : log_pi.values) v = std::log(v);
  return log_odds_from_log(model, u, log_pi, z);
}

}  // namespace nestlogit
