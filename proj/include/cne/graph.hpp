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

#ifndef CNE_GRAPH_HPP_
#define CNE_GRAPH_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cne/common.hpp"

namespace cne {

struct Edge {
  NodeId src = 0;
  NodeId dst = 0;
  EdgeTypeId type = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphBuilder;

/// Attributed graph with dense node ids, optional node types and typed
/// edges. Immutable once built; adjacency is kept per edge type.
class Graph {
 public:
  Graph() = default;

  std::size_t node_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t edge_type_count() const { return edge_types_.size(); }
  bool directed() const { return directed_; }

  const std::string& label(NodeId v) const { return labels_.at(v); }
  std::span<const std::string> labels() const { return labels_; }
  std::optional<NodeId> find(const std::string& label) const;

  const std::string& node_type(NodeId v) const { return node_types_.at(v); }
  std::span<const std::string> node_types() const { return node_types_; }

  const std::string& edge_type_name(EdgeTypeId t) const {
    return edge_types_.at(t);
  }
  std::span<const std::string> edge_types() const { return edge_types_; }
  std::optional<EdgeTypeId> find_edge_type(const std::string& name) const;

  std::span<const Edge> edges() const { return edges_; }

  /// Out-neighbors of `v` under edge type `t` (both directions when the
  /// graph is undirected), in insertion order.
  std::span<const NodeId> neighbors(EdgeTypeId t, NodeId v) const;

  /// Number of incident edges of `v` over all edge types (in + out).
  std::size_t degree(NodeId v) const;

 private:
  friend class GraphBuilder;

  bool directed_ = false;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<std::string> node_types_;
  std::vector<std::string> edge_types_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::vector<NodeId>>> adjacency_;  // [type][node]
  std::vector<std::size_t> degree_;
};

/// Incremental construction: interns labels in first-appearance order,
/// drops self-loops and duplicate edges.
class GraphBuilder {
 public:
  explicit GraphBuilder(bool directed);

  NodeId add_node(const std::string& label);
  EdgeTypeId add_edge_type(const std::string& name);

  /// Returns false when the edge was a duplicate or a self-loop.
  bool add_edge(NodeId src, NodeId dst, EdgeTypeId type);
  bool add_edge(const std::string& src, const std::string& dst,
                const std::string& type);

  void set_node_type(NodeId v, const std::string& type);
  bool contains_edge(NodeId src, NodeId dst, EdgeTypeId type) const;

  std::size_t self_loops_skipped() const { return self_loops_; }
  std::size_t duplicates_collapsed() const { return duplicates_; }

  Graph build() &&;

 private:
  Graph g_;
  std::set<std::tuple<NodeId, NodeId, EdgeTypeId>> seen_;
  std::size_t self_loops_ = 0;
  std::size_t duplicates_ = 0;
};

/// Held-out edges produced by a split.
struct EdgeSet {
  enum class Role { kTrain, kTest };

  std::vector<Edge> edges;
  Role role = Role::kTest;
};

struct EdgeListStats {
  std::size_t lines = 0;
  std::size_t self_loops_skipped = 0;
  std::size_t duplicates_collapsed = 0;
};

/// Reads `src<TAB>dst[<TAB>edge_type]` lines. '#' lines and blank lines are
/// skipped. Malformed lines raise ErrorKind::kParse naming the line.
Graph load_edge_list(const std::string& path, bool directed,
                     const std::string& default_edge_type,
                     EdgeListStats* stats = nullptr);

/// Same as load_edge_list but reading from an in-memory buffer.
Graph parse_edge_list(const std::string& text, bool directed,
                      const std::string& default_edge_type,
                      EdgeListStats* stats = nullptr);

/// Writes the edge list back as TSV; the edge type column is written only
/// when the graph carries more than one edge type.
void write_edge_list(const Graph& g, std::span<const Edge> edges,
                     const std::string& path);

struct AttributeStats {
  std::size_t lines = 0;
  std::size_t duplicate_labels = 0;
};

/// Reads `node_label<TAB>text` lines. Everything after the first tab is the
/// text (further tabs separate sub-sequences for multi-sequence nodes).
/// Later duplicates overwrite earlier ones and are counted.
std::map<std::string, std::string> load_node_attributes(
    const std::string& path, AttributeStats* stats = nullptr);
std::map<std::string, std::string> parse_node_attributes(
    const std::string& text, AttributeStats* stats = nullptr);

/// Reads `node_label<TAB>type` lines.
std::map<std::string, std::string> load_node_types(const std::string& path);

/// Rebuilds `g` with node types taken from `types` (unlisted nodes keep
/// their current type).
Graph with_node_types(const Graph& g,
                      const std::map<std::string, std::string>& types);

/// Uniformly removes round(fraction * |E|) edges into a test set. The
/// training graph keeps every original node, including ones left isolated.
std::pair<Graph, EdgeSet> split_edges(const Graph& g, double holdout_fraction,
                                      std::uint64_t seed);

/// Moves every edge incident to one of `held_out` into the test set.
std::pair<Graph, EdgeSet> hold_out_nodes(const Graph& g,
                                         std::span<const NodeId> held_out);

/// Nodes incident to a test edge whose degree in `train` is zero.
std::set<NodeId> unseen_test_nodes(const Graph& train, const EdgeSet& test);

/// Loads a training edge file and a separate test edge file. Nodes that
/// appear only in the test file join the training graph as isolated nodes;
/// test edges already present in training are dropped.
std::pair<Graph, EdgeSet> load_train_test(const std::string& train_path,
                                          const std::string& test_path,
                                          bool directed,
                                          const std::string& default_edge_type,
                                          EdgeListStats* stats = nullptr);

}  // namespace cne

#endif  // CNE_GRAPH_HPP_
