#pragma once

#include <cstddef>

#include "nestlogit/nested_logit.hpp"
#include "nestlogit/random.hpp"

namespace nestlogit {

struct GeneratorOptions {
  std::size_t max_nodes = 50;   ///< total node count is uniform on [2, max_nodes]
  double lambda_min = 0.05;     ///< non-root lambdas uniform on [lambda_min, 1]
  double utility_range = 5.0;   ///< utilities uniform on [-range, range]
};

/// Random recursive tree: node i > 0 attaches to a uniformly chosen earlier
/// node; nodes that receive children become nests, the rest alternatives.
ModelSpec random_model(SeededStream stream, const GeneratorOptions& opts = {});

/// Root with 1..max_nests nests of 1..max_leaves alternatives each.
ModelSpec random_single_layer_model(SeededStream stream, std::size_t max_nests = 6,
                                    std::size_t max_leaves = 5,
                                    const GeneratorOptions& opts = {});

}  // namespace nestlogit
