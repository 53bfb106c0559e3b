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

// Synthetic graphs and small models shared by the unit and acceptance tests.

#ifndef CNE_TESTS_SUPPORT_FIXTURES_HPP_
#define CNE_TESTS_SUPPORT_FIXTURES_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "cne/encoders.hpp"
#include "cne/graph.hpp"
#include "cne/text.hpp"
#include "cne/trainer.hpp"

namespace cne::testing {

struct PlantedGraph {
  Graph graph;
  std::map<std::string, std::string> attributes;
  std::vector<int> block;  // per node id
};

struct PlantedOptions {
  std::size_t nodes = 200;
  double p_in = 0.1;
  double p_out = 0.005;
  std::size_t pool = 50;    // block-specific tokens per block
  std::size_t shared = 20;  // noise tokens available to every node
  std::size_t tokens_per_node = 8;
  // Edge types drawn independently over the same blocks; {name, p_in, p_out}.
  struct Relation {
    std::string name;
    double p_in;
    double p_out;
  };
  std::vector<Relation> relations;  // empty: one "default" relation
};

/// Two equal blocks; block membership decides both edge probabilities and
/// the token pool of each node's attribute text. Node labels are "n<i>" and
/// ids follow i.
PlantedGraph planted_two_block(const PlantedOptions& options,
                               std::uint64_t seed);

/// Random undirected or directed graph with `n` nodes and edge
/// probability `p`. Labels are "v<i>".
Graph random_graph(std::size_t n, double p, bool directed, std::uint64_t seed);

/// Vocabulary "<UNK>", "t1", ..., "t<size-1>".
Vocabulary numbered_vocabulary(std::size_t size);

/// Store with one input per node: `fields` random sequences of 1..max_len
/// tokens drawn from the vocabulary.
FeatureStore random_features(const Graph& g, std::size_t vocab_size,
                             std::size_t fields, std::size_t max_len,
                             std::uint64_t seed);

/// Store built by encoding `attributes` (UNK for nodes without text).
FeatureStore features_from(const Graph& g,
                           const std::map<std::string, std::string>& attributes,
                           const Vocabulary& vocab, std::size_t fields = 1);

/// Model with the given encoder on every edge type of `edge_types`.
template <typename T>
ModelState<T> small_model(const EncoderSpec& spec, std::size_t vocab_size,
                          std::uint64_t seed, bool share_phi = false,
                          std::vector<std::string> edge_types = {"default"});

/// Nodes "v0".."v<n-1>" joined by `edges` of type "default".
Graph graph_from_edges(std::size_t n,
                       const std::vector<std::pair<NodeId, NodeId>>& edges,
                       bool directed);

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::string file(const std::string& name) const {
    return (path_ / name).string();
  }
  /// Writes `text` to `name` and returns the full path.
  std::string write(const std::string& name, const std::string& text) const;

 private:
  std::filesystem::path path_;
};

std::string read_text(const std::string& path);

}  // namespace cne::testing

#endif  // CNE_TESTS_SUPPORT_FIXTURES_HPP_
