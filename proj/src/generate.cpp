#include "nestlogit/generate.hpp"

#include <string>
#include <vector>

#include "nestlogit/errors.hpp"

namespace nestlogit {

namespace {

std::size_t uniform_index(RandomStream& rng, std::size_t n) {
  return static_cast<std::size_t>(rng.uniform() * static_cast<double>(n));
}

double uniform_between(RandomStream& rng, double lo, double hi) {
  return lo + (hi - lo) * rng.uniform();
}

}  // namespace

ModelSpec random_model(SeededStream stream, const GeneratorOptions& opts) {
  if (opts.max_nodes < 2) throw Error(ErrorKind::DomainError, "a model needs at least two nodes");
  RandomStream rng(stream);
  const std::size_t n = 2 + uniform_index(rng, opts.max_nodes - 1);

  std::vector<std::size_t> parent(n, 0);
  std::vector<std::vector<std::size_t>> kids(n);
  for (std::size_t i = 1; i < n; ++i) {
    parent[i] = uniform_index(rng, i);
    kids[parent[i]].push_back(i);
  }

  RawTree raw;
  raw.root = "n0";
  std::vector<double> utilities;
  for (std::size_t i = 0; i < n; ++i) {
    RawNode node;
    const bool nest = !kids[i].empty();
    node.id = (nest ? "n" : "j") + std::to_string(i);
    node.kind = nest ? NodeKind::Nest : NodeKind::Alternative;
    node.lambda = i == 0 ? 1.0 : uniform_between(rng, opts.lambda_min, 1.0);
    for (std::size_t c : kids[i]) node.children.push_back((kids[c].empty() ? "j" : "n") + std::to_string(c));
    raw.nodes.push_back(std::move(node));
  }
  Arborescence tree = Arborescence::build(raw);
  for (std::size_t k = 0; k < tree.leaf_count(); ++k)
    utilities.push_back(uniform_between(rng, -opts.utility_range, opts.utility_range));
  return ModelSpec(std::move(tree), std::move(utilities));
}

ModelSpec random_single_layer_model(SeededStream stream, std::size_t max_nests,
                                    std::size_t max_leaves, const GeneratorOptions& opts) {
  RandomStream rng(stream);
  const std::size_t nests = 1 + uniform_index(rng, max_nests);
  RawTree raw;
  raw.root = "root";
  RawNode root{"root", NodeKind::Nest, 1.0, {}};
  std::vector<RawNode> nodes;
  std::size_t next_leaf = 0;
  for (std::size_t n = 0; n < nests; ++n) {
    RawNode nest{"nest" + std::to_string(n), NodeKind::Nest,
                 uniform_between(rng, opts.lambda_min, 1.0), {}};
    const std::size_t leaves = 1 + uniform_index(rng, max_leaves);
    for (std::size_t j = 0; j < leaves; ++j) {
      RawNode leaf{"alt" + std::to_string(next_leaf++), NodeKind::Alternative, 1.0, {}};
      nest.children.push_back(leaf.id);
      nodes.push_back(std::move(leaf));
    }
    root.children.push_back(nest.id);
    nodes.push_back(std::move(nest));
  }
  raw.nodes.push_back(std::move(root));
  for (auto& node : nodes) raw.nodes.push_back(std::move(node));
  Arborescence tree = Arborescence::build(raw);
  std::vector<double> utilities;
  for (std::size_t k = 0; k < tree.leaf_count(); ++k)
    utilities.push_back(uniform_between(rng, -opts.utility_range, opts.utility_range));
  return ModelSpec(std::move(tree), std::move(utilities));
}

}  // namespace nestlogit
