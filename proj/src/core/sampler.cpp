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

#include "cne/sampler.hpp"

#include <algorithm>

#include "parallel.hpp"

namespace cne {

namespace {

constexpr std::uint64_t kShuffleStream = 0x5348'5546;

Rng walk_rng(const StreamParams& p, NodeId node, std::size_t walk) {
  return Rng(derive_seed(p.seed, (std::uint64_t{p.edge_type} << 32) | node,
                         walk));
}

}  // namespace

Walk random_walk(const Graph& g, NodeId start, std::size_t length,
                 EdgeTypeId edge_type, Rng& rng) {
  require(start < g.node_count(), "walk start is not a node");
  require(length >= 1, "walk length must be at least 1");
  Walk walk{start};
  walk.reserve(length);
  while (walk.size() < length) {
    auto nbrs = g.neighbors(edge_type, walk.back());
    if (nbrs.empty()) break;
    walk.push_back(nbrs[rng.uniform(nbrs.size())]);
  }
  return walk;
}

std::vector<std::pair<NodeId, NodeId>> window_pairs(std::span<const NodeId> walk,
                                                    std::size_t window) {
  require(window >= 1, "window must be at least 1");
  std::vector<std::pair<NodeId, NodeId>> pairs;
  const std::size_t n = walk.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = i >= window ? i - window : 0;
    const std::size_t hi = std::min(n - 1, i + window);
    for (std::size_t j = lo; j <= hi; ++j) {
      if (j == i || walk[i] == walk[j]) continue;
      pairs.emplace_back(walk[i], walk[j]);
    }
  }
  return pairs;
}

std::vector<NodeId> sample_negatives(std::size_t node_count, std::size_t k,
                                     Rng& rng) {
  require(node_count >= 1, "negative sampling needs a non-empty node set");
  std::vector<NodeId> out(k);
  for (auto& v : out) v = static_cast<NodeId>(rng.uniform(node_count));
  return out;
}

std::vector<Walk> generate_walks(const Graph& g, const StreamParams& p) {
  const std::size_t n = g.node_count();
  std::vector<Walk> walks(n * p.walks_per_node);
  detail::parallel_for(n, p.workers, [&](std::size_t v) {
    for (std::size_t r = 0; r < p.walks_per_node; ++r) {
      Rng rng = walk_rng(p, static_cast<NodeId>(v), r);
      walks[v * p.walks_per_node + r] = random_walk(
          g, static_cast<NodeId>(v), p.walk_length, p.edge_type, rng);
    }
  });
  return walks;
}

std::vector<TrainingExample> epoch_stream(const Graph& g,
                                          const StreamParams& p) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<TrainingExample>> per_node(n);
  detail::parallel_for(n, p.workers, [&](std::size_t v) {
    auto& out = per_node[v];
    for (std::size_t r = 0; r < p.walks_per_node; ++r) {
      Rng rng = walk_rng(p, static_cast<NodeId>(v), r);
      Walk walk = random_walk(g, static_cast<NodeId>(v), p.walk_length,
                              p.edge_type, rng);
      for (auto [c, u] : window_pairs(walk, p.window)) {
        out.push_back({c, u, sample_negatives(n, p.negatives, rng),
                       p.edge_type});
      }
    }
  });

  std::vector<TrainingExample> stream;
  for (auto& block : per_node)
    std::move(block.begin(), block.end(), std::back_inserter(stream));
  Rng shuffler(derive_seed(p.seed, kShuffleStream, p.edge_type));
  shuffler.shuffle(stream);
  return stream;
}

}  // namespace cne
