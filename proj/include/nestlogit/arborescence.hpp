#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace nestlogit {

/// Dense node handle. Nodes are stored in depth-first preorder, so the root is
/// index 0, every parent has a smaller index than its children, and a
/// descending sweep over indices visits children before parents.
using NodeIndex = std::uint32_t;

enum class NodeKind { Nest, Alternative };

/// Unvalidated tree description, as handed over by a parser.
struct RawNode {
  std::string id;
  NodeKind kind = NodeKind::Alternative;
  double lambda = 1.0;                ///< read for nests only
  std::vector<std::string> children;  ///< nests only; order is preserved
};

struct RawTree {
  std::string root;
  std::vector<RawNode> nodes;
};

/// Validated directed rooted tree of nests (inner nodes) and alternatives
/// (leaves). Immutable once built.
class Arborescence {
 public:
  /// Throws Error with kind DuplicateId, CycleDetected, EmptyNest,
  /// LambdaOutOfRange, RootLambdaNotOne, OrphanNode, UnknownNode or ParseError.
  static Arborescence build(const RawTree& raw);

  std::size_t size() const noexcept { return ids_.size(); }
  static constexpr NodeIndex root() noexcept { return 0; }

  const std::string& id(NodeIndex n) const { return ids_.at(n); }
  NodeKind kind(NodeIndex n) const { return kinds_.at(n); }
  bool is_leaf(NodeIndex n) const { return kind(n) == NodeKind::Alternative; }
  bool is_nest(NodeIndex n) const { return kind(n) == NodeKind::Nest; }

  /// Dissimilarity parameter of a nest. Throws NotANest for alternatives.
  double lambda(NodeIndex n) const;

  std::optional<NodeIndex> parent(NodeIndex n) const;
  std::span<const NodeIndex> children(NodeIndex n) const { return children_.at(n); }

  /// Alternatives in preorder; this is the canonical column order of every
  /// per-leaf vector in the library.
  std::span<const NodeIndex> leaves() const noexcept { return leaves_; }
  std::span<const NodeIndex> nests() const noexcept { return nests_; }
  std::size_t leaf_count() const noexcept { return leaves_.size(); }

  /// Position of a leaf inside leaves(). Throws NotALeaf.
  std::size_t leaf_position(NodeIndex leaf) const;

  std::optional<NodeIndex> find(std::string_view id) const;
  /// Throws UnknownNode.
  NodeIndex index_of(std::string_view id) const;

 private:
  std::vector<std::string> ids_;
  std::vector<NodeKind> kinds_;
  std::vector<double> lambdas_;
  std::vector<NodeIndex> parents_;  // parents_[root] == root
  std::vector<std::vector<NodeIndex>> children_;
  std::vector<NodeIndex> leaves_;
  std::vector<NodeIndex> nests_;
  std::vector<std::uint32_t> leaf_pos_;
  std::unordered_map<std::string, NodeIndex> index_;
};

/// Derived per-node quantities of a tree.
struct TreeMetrics {
  std::vector<std::uint32_t> depth;   ///< edges to the root
  std::vector<std::uint32_t> height;  ///< longest downward path to a leaf
  /// Product of lambda along the root path, root excluded (lambda_root = 1).
  /// For a leaf this is the value of its parent nest.
  std::vector<double> big_lambda;
  /// Nests strictly below the root on the path to the node, ordered from the
  /// root downwards; includes the node itself when it is a nest.
  std::vector<std::vector<NodeIndex>> path_from_root;
};

TreeMetrics metrics(const Arborescence& tree);

/// Lowest common ancestor. lca(z, z) == z.
NodeIndex lca(const Arborescence& tree, NodeIndex a, NodeIndex b);
NodeIndex lca(const Arborescence& tree, std::string_view a, std::string_view b);

/// Alternatives below z (z itself when z is a leaf), in preorder.
std::vector<NodeIndex> descendant_leaves(const Arborescence& tree, NodeIndex z);

}  // namespace nestlogit
