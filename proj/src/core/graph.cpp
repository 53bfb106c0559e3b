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

#include "cne/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "io_util.hpp"

namespace cne {

std::optional<NodeId> Graph::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeTypeId> Graph::find_edge_type(const std::string& name) const {
  for (EdgeTypeId t = 0; t < edge_types_.size(); ++t)
    if (edge_types_[t] == name) return t;
  return std::nullopt;
}

std::span<const NodeId> Graph::neighbors(EdgeTypeId t, NodeId v) const {
  if (t >= adjacency_.size()) return {};
  return adjacency_[t].at(v);
}

std::size_t Graph::degree(NodeId v) const { return degree_.at(v); }

GraphBuilder::GraphBuilder(bool directed) { g_.directed_ = directed; }

NodeId GraphBuilder::add_node(const std::string& label) {
  auto [it, inserted] =
      g_.index_.try_emplace(label, static_cast<NodeId>(g_.labels_.size()));
  if (inserted) {
    g_.labels_.push_back(label);
    g_.node_types_.emplace_back();
    g_.degree_.push_back(0);
    for (auto& adj : g_.adjacency_) adj.emplace_back();
  }
  return it->second;
}

EdgeTypeId GraphBuilder::add_edge_type(const std::string& name) {
  if (auto t = g_.find_edge_type(name)) return *t;
  g_.edge_types_.push_back(name);
  g_.adjacency_.emplace_back(g_.labels_.size());
  return static_cast<EdgeTypeId>(g_.edge_types_.size() - 1);
}

bool GraphBuilder::contains_edge(NodeId src, NodeId dst,
                                 EdgeTypeId type) const {
  if (!g_.directed_ && dst < src) std::swap(src, dst);
  return seen_.contains({src, dst, type});
}

bool GraphBuilder::add_edge(NodeId src, NodeId dst, EdgeTypeId type) {
  require(src < g_.labels_.size() && dst < g_.labels_.size(),
          "edge endpoint is not a node");
  require(type < g_.edge_types_.size(), "unknown edge type");
  if (src == dst) {
    ++self_loops_;
    return false;
  }
  NodeId a = src, b = dst;
  if (!g_.directed_ && b < a) std::swap(a, b);
  if (!seen_.emplace(a, b, type).second) {
    ++duplicates_;
    return false;
  }
  g_.edges_.push_back({src, dst, type});
  g_.adjacency_[type][src].push_back(dst);
  if (!g_.directed_) g_.adjacency_[type][dst].push_back(src);
  ++g_.degree_[src];
  ++g_.degree_[dst];
  return true;
}

bool GraphBuilder::add_edge(const std::string& src, const std::string& dst,
                            const std::string& type) {
  NodeId s = add_node(src);
  NodeId d = add_node(dst);
  return add_edge(s, d, add_edge_type(type));
}

void GraphBuilder::set_node_type(NodeId v, const std::string& type) {
  g_.node_types_.at(v) = type;
}

Graph GraphBuilder::build() && { return std::move(g_); }

namespace {

struct EdgeLine {
  std::string src, dst, type;
};

template <typename Fn>
void for_each_edge_line(const std::string& text, const std::string& source,
                        const std::string& default_edge_type, Fn&& fn) {
  auto lines = detail::split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (detail::skippable(lines[i])) continue;
    auto fields = detail::split(lines[i], '\t');
    if (fields.size() < 2 || fields.size() > 3)
      throw Error(ErrorKind::kParse,
                  detail::parse_error(source, i + 1,
                                      "expected 2 or 3 tab-separated fields, "
                                      "got " + std::to_string(fields.size())));
    for (auto f : fields)
      if (f.empty())
        throw Error(ErrorKind::kParse,
                    detail::parse_error(source, i + 1, "empty field"));
    fn(EdgeLine{std::string(fields[0]), std::string(fields[1]),
                fields.size() == 3 ? std::string(fields[2])
                                   : default_edge_type});
  }
}

Graph parse_edges_impl(const std::string& text, const std::string& source,
                       bool directed, const std::string& default_edge_type,
                       EdgeListStats* stats) {
  GraphBuilder b(directed);
  std::size_t count = 0;
  for_each_edge_line(text, source, default_edge_type, [&](const EdgeLine& e) {
    ++count;
    b.add_edge(e.src, e.dst, e.type);
  });
  if (stats) {
    stats->lines = count;
    stats->self_loops_skipped = b.self_loops_skipped();
    stats->duplicates_collapsed = b.duplicates_collapsed();
  }
  return std::move(b).build();
}

// Copies nodes (with types and edge-type names) but no edges.
GraphBuilder skeleton(const Graph& g) {
  GraphBuilder b(g.directed());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    b.add_node(g.label(v));
    b.set_node_type(v, g.node_type(v));
  }
  for (const auto& t : g.edge_types()) b.add_edge_type(t);
  return b;
}

}  // namespace

Graph parse_edge_list(const std::string& text, bool directed,
                      const std::string& default_edge_type,
                      EdgeListStats* stats) {
  return parse_edges_impl(text, "<memory>", directed, default_edge_type, stats);
}

Graph load_edge_list(const std::string& path, bool directed,
                     const std::string& default_edge_type,
                     EdgeListStats* stats) {
  return parse_edges_impl(detail::read_file(path), path, directed,
                          default_edge_type, stats);
}

void write_edge_list(const Graph& g, std::span<const Edge> edges,
                     const std::string& path) {
  const bool typed = g.edge_type_count() > 1;
  std::string out;
  for (const Edge& e : edges) {
    out += g.label(e.src);
    out += '\t';
    out += g.label(e.dst);
    if (typed) {
      out += '\t';
      out += g.edge_type_name(e.type);
    }
    out += '\n';
  }
  detail::write_file_atomic(path, out);
}

namespace {

std::map<std::string, std::string> parse_attributes_impl(
    const std::string& text, const std::string& source,
    AttributeStats* stats) {
  std::map<std::string, std::string> attrs;
  AttributeStats local;
  auto lines = detail::split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    std::size_t tab = lines[i].find('\t');
    if (tab == std::string_view::npos || tab == 0)
      throw Error(ErrorKind::kParse,
                  detail::parse_error(source, i + 1,
                                      "expected node_label<TAB>text"));
    ++local.lines;
    std::string label(lines[i].substr(0, tab));
    auto [it, inserted] =
        attrs.insert_or_assign(label, std::string(lines[i].substr(tab + 1)));
    if (!inserted) ++local.duplicate_labels;
  }
  if (stats) *stats = local;
  return attrs;
}

}  // namespace

std::map<std::string, std::string> parse_node_attributes(
    const std::string& text, AttributeStats* stats) {
  return parse_attributes_impl(text, "<memory>", stats);
}

std::map<std::string, std::string> load_node_attributes(
    const std::string& path, AttributeStats* stats) {
  return parse_attributes_impl(detail::read_file(path), path, stats);
}

std::map<std::string, std::string> load_node_types(const std::string& path) {
  std::map<std::string, std::string> types;
  auto text = detail::read_file(path);
  auto lines = detail::split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (detail::skippable(lines[i])) continue;
    auto fields = detail::split(lines[i], '\t');
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty())
      throw Error(ErrorKind::kParse,
                  detail::parse_error(path, i + 1,
                                      "expected node_label<TAB>type"));
    types[std::string(fields[0])] = std::string(fields[1]);
  }
  return types;
}

Graph with_node_types(const Graph& g,
                      const std::map<std::string, std::string>& types) {
  GraphBuilder b = skeleton(g);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    auto it = types.find(g.label(v));
    if (it != types.end()) b.set_node_type(v, it->second);
  }
  for (const Edge& e : g.edges()) b.add_edge(e.src, e.dst, e.type);
  return std::move(b).build();
}

std::pair<Graph, EdgeSet> split_edges(const Graph& g, double holdout_fraction,
                                      std::uint64_t seed) {
  require(holdout_fraction >= 0.0 && holdout_fraction <= 1.0,
          "holdout fraction must lie in [0, 1]");
  const std::size_t total = g.edge_count();
  const auto n_test = static_cast<std::size_t>(
      std::llround(holdout_fraction * static_cast<double>(total)));

  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(derive_seed(seed, 0x5917));
  rng.shuffle(order);
  std::vector<bool> held(total, false);
  for (std::size_t i = 0; i < n_test; ++i) held[order[i]] = true;

  GraphBuilder b = skeleton(g);
  EdgeSet test;
  auto edges = g.edges();
  for (std::size_t i = 0; i < total; ++i) {
    if (held[i])
      test.edges.push_back(edges[i]);
    else
      b.add_edge(edges[i].src, edges[i].dst, edges[i].type);
  }
  return {std::move(b).build(), std::move(test)};
}

std::pair<Graph, EdgeSet> hold_out_nodes(const Graph& g,
                                         std::span<const NodeId> held_out) {
  std::vector<bool> out(g.node_count(), false);
  for (NodeId v : held_out) out.at(v) = true;
  GraphBuilder b = skeleton(g);
  EdgeSet test;
  for (const Edge& e : g.edges()) {
    if (out[e.src] || out[e.dst])
      test.edges.push_back(e);
    else
      b.add_edge(e.src, e.dst, e.type);
  }
  return {std::move(b).build(), std::move(test)};
}

std::set<NodeId> unseen_test_nodes(const Graph& train, const EdgeSet& test) {
  std::set<NodeId> unseen;
  for (const Edge& e : test.edges) {
    for (NodeId v : {e.src, e.dst})
      if (v < train.node_count() && train.degree(v) == 0) unseen.insert(v);
  }
  return unseen;
}

std::pair<Graph, EdgeSet> load_train_test(const std::string& train_path,
                                          const std::string& test_path,
                                          bool directed,
                                          const std::string& default_edge_type,
                                          EdgeListStats* stats) {
  GraphBuilder b(directed);
  std::size_t count = 0;
  for_each_edge_line(detail::read_file(train_path), train_path,
                     default_edge_type, [&](const EdgeLine& e) {
                       ++count;
                       b.add_edge(e.src, e.dst, e.type);
                     });
  if (stats) {
    stats->lines = count;
    stats->self_loops_skipped = b.self_loops_skipped();
    stats->duplicates_collapsed = b.duplicates_collapsed();
  }

  std::vector<Edge> pending;
  std::set<std::tuple<NodeId, NodeId, EdgeTypeId>> seen;
  for_each_edge_line(
      detail::read_file(test_path), test_path, default_edge_type,
      [&](const EdgeLine& e) {
        NodeId s = b.add_node(e.src);
        NodeId d = b.add_node(e.dst);
        EdgeTypeId t = b.add_edge_type(e.type);
        if (s == d || b.contains_edge(s, d, t)) return;
        NodeId lo = s, hi = d;
        if (!directed && hi < lo) std::swap(lo, hi);
        if (seen.emplace(lo, hi, t).second) pending.push_back({s, d, t});
      });
  EdgeSet test;
  test.edges = std::move(pending);
  return {std::move(b).build(), std::move(test)};
}

}  // namespace cne
