#include "nestlogit/arborescence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nestlogit/errors.hpp"

namespace nestlogit {

namespace {

constexpr std::size_t kNoParent = std::numeric_limits<std::size_t>::max();

void check_node(const RawNode& node, bool is_root) {
  if (node.kind == NodeKind::Alternative) {
    if (!node.children.empty())
      throw Error(ErrorKind::ParseError, "alternative '" + node.id + "' has children");
    return;
  }
  if (node.children.empty())
    throw Error(ErrorKind::EmptyNest, "nest '" + node.id + "' has no children");
  if (!std::isfinite(node.lambda) || node.lambda <= 0.0 || node.lambda > 1.0)
    throw Error(ErrorKind::LambdaOutOfRange,
                "nest '" + node.id + "' has lambda " + std::to_string(node.lambda) +
                    " outside (0, 1]");
  if (is_root && node.lambda != 1.0)
    throw Error(ErrorKind::RootLambdaNotOne,
                "root '" + node.id + "' has lambda " + std::to_string(node.lambda));
}

}  // namespace

Arborescence Arborescence::build(const RawTree& raw) {
  std::unordered_map<std::string, std::size_t> by_id;
  by_id.reserve(raw.nodes.size());
  for (std::size_t i = 0; i < raw.nodes.size(); ++i) {
    const auto& id = raw.nodes[i].id;
    if (id.empty()) throw Error(ErrorKind::ParseError, "node with empty id");
    if (!by_id.emplace(id, i).second)
      throw Error(ErrorKind::DuplicateId, "id '" + id + "' is defined more than once");
  }

  const auto root_it = by_id.find(raw.root);
  if (root_it == by_id.end())
    throw Error(ErrorKind::UnknownNode, "root '" + raw.root + "' is not defined");
  const std::size_t raw_root = root_it->second;
  if (raw.nodes[raw_root].kind != NodeKind::Nest)
    throw Error(ErrorKind::NotANest, "root '" + raw.root + "' must be a nest");

  for (std::size_t i = 0; i < raw.nodes.size(); ++i) check_node(raw.nodes[i], i == raw_root);

  // Resolve parent links; each node may be referenced by at most one nest.
  std::vector<std::size_t> raw_parent(raw.nodes.size(), kNoParent);
  std::vector<std::vector<std::size_t>> raw_children(raw.nodes.size());
  for (std::size_t i = 0; i < raw.nodes.size(); ++i) {
    for (const auto& child_id : raw.nodes[i].children) {
      const auto it = by_id.find(child_id);
      if (it == by_id.end())
        throw Error(ErrorKind::UnknownNode,
                    "nest '" + raw.nodes[i].id + "' references undefined child '" + child_id + "'");
      const std::size_t c = it->second;
      if (c == raw_root)
        throw Error(ErrorKind::CycleDetected, "root '" + raw.root + "' appears as a child of '" +
                                                  raw.nodes[i].id + "'");
      if (raw_parent[c] != kNoParent)
        throw Error(ErrorKind::DuplicateId, "id '" + child_id + "' appears more than once in the tree");
      raw_parent[c] = i;
      raw_children[i].push_back(c);
    }
  }

  // Preorder walk with an explicit stack.
  std::vector<std::size_t> order;
  order.reserve(raw.nodes.size());
  std::vector<char> seen(raw.nodes.size(), 0);
  std::vector<std::size_t> stack{raw_root};
  while (!stack.empty()) {
    const std::size_t cur = stack.back();
    stack.pop_back();
    seen[cur] = 1;
    order.push_back(cur);
    const auto& kids = raw_children[cur];
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }

  if (order.size() != raw.nodes.size()) {
    for (std::size_t i = 0; i < raw.nodes.size(); ++i) {
      if (seen[i]) continue;
      // Unreachable: either the parent chain ends at a parentless node or loops.
      std::size_t cur = i;
      for (std::size_t steps = 0; steps <= raw.nodes.size(); ++steps) {
        if (raw_parent[cur] == kNoParent)
          throw Error(ErrorKind::OrphanNode,
                      "node '" + raw.nodes[i].id + "' is not reachable from the root");
        cur = raw_parent[cur];
      }
      throw Error(ErrorKind::CycleDetected,
                  "node '" + raw.nodes[i].id + "' lies on or below a cycle");
    }
  }

  Arborescence tree;
  const std::size_t n = order.size();
  std::vector<NodeIndex> new_index(n);
  for (std::size_t k = 0; k < n; ++k) new_index[order[k]] = static_cast<NodeIndex>(k);

  tree.ids_.resize(n);
  tree.kinds_.resize(n);
  tree.lambdas_.resize(n);
  tree.parents_.resize(n);
  tree.children_.resize(n);
  tree.leaf_pos_.assign(n, std::numeric_limits<std::uint32_t>::max());
  for (std::size_t k = 0; k < n; ++k) {
    const RawNode& node = raw.nodes[order[k]];
    tree.ids_[k] = node.id;
    tree.kinds_[k] = node.kind;
    tree.lambdas_[k] = node.kind == NodeKind::Nest ? node.lambda
                                                   : std::numeric_limits<double>::quiet_NaN();
    tree.parents_[k] = k == 0 ? NodeIndex{0} : new_index[raw_parent[order[k]]];
    for (std::size_t c : raw_children[order[k]]) tree.children_[k].push_back(new_index[c]);
    if (node.kind == NodeKind::Alternative) {
      tree.leaf_pos_[k] = static_cast<std::uint32_t>(tree.leaves_.size());
      tree.leaves_.push_back(static_cast<NodeIndex>(k));
    } else {
      tree.nests_.push_back(static_cast<NodeIndex>(k));
    }
    tree.index_.emplace(node.id, static_cast<NodeIndex>(k));
  }
  return tree;
}

double Arborescence::lambda(NodeIndex n) const {
  if (!is_nest(n)) throw Error(ErrorKind::NotANest, "'" + id(n) + "' is an alternative");
  return lambdas_[n];
}

std::optional<NodeIndex> Arborescence::parent(NodeIndex n) const {
  if (n >= size()) throw Error(ErrorKind::UnknownNode, "index " + std::to_string(n));
  if (n == root()) return std::nullopt;
  return parents_[n];
}

std::size_t Arborescence::leaf_position(NodeIndex leaf) const {
  if (!is_leaf(leaf)) throw Error(ErrorKind::NotALeaf, "'" + id(leaf) + "' is a nest");
  return leaf_pos_[leaf];
}

std::optional<NodeIndex> Arborescence::find(std::string_view id) const {
  const auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeIndex Arborescence::index_of(std::string_view id) const {
  if (auto found = find(id)) return *found;
  throw Error(ErrorKind::UnknownNode, "no node with id '" + std::string(id) + "'");
}

TreeMetrics metrics(const Arborescence& tree) {
  const std::size_t n = tree.size();
  TreeMetrics m;
  m.depth.assign(n, 0);
  m.height.assign(n, 0);
  m.big_lambda.assign(n, 1.0);
  m.path_from_root.assign(n, {});

  for (NodeIndex z = 1; z < n; ++z) {
    const NodeIndex p = *tree.parent(z);
    m.depth[z] = m.depth[p] + 1;
    m.path_from_root[z] = m.path_from_root[p];
    if (tree.is_nest(z)) {
      m.big_lambda[z] = m.big_lambda[p] * tree.lambda(z);
      m.path_from_root[z].push_back(z);
    } else {
      m.big_lambda[z] = m.big_lambda[p];
    }
  }
  for (NodeIndex z = static_cast<NodeIndex>(n); z-- > 1;) {
    const NodeIndex p = *tree.parent(z);
    m.height[p] = std::max(m.height[p], m.height[z] + 1);
  }
  return m;
}

NodeIndex lca(const Arborescence& tree, NodeIndex a, NodeIndex b) {
  if (a >= tree.size() || b >= tree.size())
    throw Error(ErrorKind::UnknownNode, "node index out of range");
  auto depth_of = [&](NodeIndex z) {
    std::size_t d = 0;
    for (auto p = tree.parent(z); p; p = tree.parent(*p)) ++d;
    return d;
  };
  std::size_t da = depth_of(a);
  std::size_t db = depth_of(b);
  for (; da > db; --da) a = *tree.parent(a);
  for (; db > da; --db) b = *tree.parent(b);
  while (a != b) {
    a = *tree.parent(a);
    b = *tree.parent(b);
  }
  return a;
}

NodeIndex lca(const Arborescence& tree, std::string_view a, std::string_view b) {
  return lca(tree, tree.index_of(a), tree.index_of(b));
}

std::vector<NodeIndex> descendant_leaves(const Arborescence& tree, NodeIndex z) {
  if (z >= tree.size()) throw Error(ErrorKind::UnknownNode, "node index out of range");
  std::vector<NodeIndex> out;
  std::vector<NodeIndex> stack{z};
  while (!stack.empty()) {
    const NodeIndex cur = stack.back();
    stack.pop_back();
    if (tree.is_leaf(cur)) {
      out.push_back(cur);
      continue;
    }
    const auto kids = tree.children(cur);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

}  // namespace nestlogit
