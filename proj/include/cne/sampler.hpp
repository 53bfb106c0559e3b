// Copyright 2026 The CNE Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CNE_SAMPLER_HPP_
#define CNE_SAMPLER_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cne/common.hpp"
#include "cne/graph.hpp"

namespace cne {

using Walk = std::vector<NodeId>;

/// One positive pair plus its negatives for the hinge objective.
struct TrainingExample {
  NodeId center = 0;
  NodeId positive = 0;
  std::vector<NodeId> negatives;
  EdgeTypeId edge_type = 0;

  friend bool operator==(const TrainingExample&,
                         const TrainingExample&) = default;
};

/// Truncated walk of at most `length` nodes following uniformly chosen
/// out-neighbors under `edge_type`. Stops early at a node without
/// out-neighbors.
Walk random_walk(const Graph& g, NodeId start, std::size_t length,
                 EdgeTypeId edge_type, Rng& rng);

/// Ordered (center, context) pairs within `window` positions; pairs whose
/// two entries are the same node are skipped.
std::vector<std::pair<NodeId, NodeId>> window_pairs(std::span<const NodeId> walk,
                                                    std::size_t window);

/// `k` uniform draws with replacement from ids [0, node_count).
std::vector<NodeId> sample_negatives(std::size_t node_count, std::size_t k,
                                     Rng& rng);

struct StreamParams {
  std::size_t walks_per_node = 10;
  std::size_t walk_length = 20;
  std::size_t window = 2;
  std::size_t negatives = 4;
  EdgeTypeId edge_type = 0;
  std::uint64_t seed = 1;
  std::size_t workers = 1;
};

/// All training examples for one pass: `walks_per_node` walks from every
/// node, every window pair with fresh negatives, shuffled by the seed. The
/// result does not depend on `workers`.
std::vector<TrainingExample> epoch_stream(const Graph& g,
                                          const StreamParams& params);

/// Walks used by epoch_stream for the same parameters, in node order.
std::vector<Walk> generate_walks(const Graph& g, const StreamParams& params);

}  // namespace cne

#endif  // CNE_SAMPLER_HPP_
