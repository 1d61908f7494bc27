#pragma once

#include <cmath>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nestlogit/arborescence.hpp"

namespace nestlogit {

/// A real value per node, indexed by NodeIndex.
struct NodeValues {
  std::vector<double> values;

  double operator[](NodeIndex n) const { return values[n]; }
  double& operator[](NodeIndex n) { return values[n]; }
  std::size_t size() const noexcept { return values.size(); }
};

/// Tree, its metrics and the systematic utilities U_j of the alternatives.
/// Copies share the tree; only the utility vector is owned per copy.
class ModelSpec {
 public:
  /// utilities are given in tree.leaves() order. Throws DomainError on a size
  /// mismatch or a non-finite value.
  ModelSpec(Arborescence tree, std::vector<double> utilities);

  /// Throws UnknownNode for ids that are not in the tree, NotALeaf for nests,
  /// DomainError when an alternative has no utility.
  static ModelSpec from_map(Arborescence tree, const std::map<std::string, double>& utilities);

  const Arborescence& tree() const noexcept { return *tree_; }
  const TreeMetrics& metrics() const noexcept { return *metrics_; }
  std::span<const double> utilities() const noexcept { return utilities_; }
  double utility(NodeIndex leaf) const { return utilities_.at(tree_->leaf_position(leaf)); }

  ModelSpec with_utilities(std::vector<double> utilities) const;

 private:
  ModelSpec(std::shared_ptr<const Arborescence> tree, std::shared_ptr<const TreeMetrics> m,
            std::vector<double> utilities);

  std::shared_ptr<const Arborescence> tree_;
  std::shared_ptr<const TreeMetrics> metrics_;
  std::vector<double> utilities_;
};

/// Pr(eps_j <= A_j for all j) under the nested logit distribution. A is in
/// leaf order.
double cdf(const ModelSpec& model, std::span<const double> A);

/// Inclusive values: u_j = U_j on leaves and
/// u_n = Lambda_n log sum_{children z} exp(u_z / Lambda_n) on nests.
NodeValues backward_utils(const ModelSpec& model);

/// Choice probabilities by forward induction from the inclusive values u;
/// pi_root = 1 and the leaf entries are the choice probabilities.
NodeValues forward_probs(const ModelSpec& model, const NodeValues& u);
/// log pi, computed without exponentiating. Probabilities of deep alternatives
/// under small Lambda can underflow to 0 in forward_probs but stay finite here.
NodeValues log_forward_probs(const ModelSpec& model, const NodeValues& u);

/// Leaf entries of a node vector, in leaf order.
std::vector<double> leaf_values(const ModelSpec& model, const NodeValues& values);

/// True when every child of the root is a nest whose children are all
/// alternatives.
bool is_single_layer(const Arborescence& tree);

/// Direct two-level formula (nest share times within-nest share). Throws
/// ShapeError unless is_single_layer.
std::vector<double> choice_probs_single_layer(const ModelSpec& model);

/// Restricted Emax at a nest: u_at from the backward pass. Throws
/// UnknownNode / NotANest.
double emax(const ModelSpec& model, NodeIndex at);
double emax(const ModelSpec& model, std::string_view at);

/// Analytic gradient of emax at the root with respect to U, which equals the
/// choice probabilities (leaf order).
std::vector<double> emax_gradient(const ModelSpec& model);

/// Both sides of the log-odds identity log(pi_z / pi_n) = (u_z - u_n) / Lambda_n
/// for z with parent n.
struct LogOdds {
  double from_probabilities;
  double from_utilities;
  /// max(1, (|u_z| + |u_n|) / Lambda_n): rounding in u is amplified by
  /// 1/Lambda_n, so gaps are judged relative to this.
  double scale;
  double gap() const noexcept { return from_probabilities - from_utilities; }
  double relative_gap() const noexcept { return std::abs(gap()) / scale; }
};

/// Throws RootHasNoParent for the root.
LogOdds log_odds(const ModelSpec& model, const NodeValues& u, const NodeValues& pi, NodeIndex z);
/// Same identity with log pi from log_forward_probs.
LogOdds log_odds_from_log(const ModelSpec& model, const NodeValues& u, const NodeValues& log_pi,
                          NodeIndex z);

}  // namespace nestlogit
