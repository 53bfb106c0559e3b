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

#include "fixtures.hpp"

#include <stdlib.h>

#include <fstream>
#include <iterator>
#include <stdexcept>

namespace cne::testing {

PlantedGraph planted_two_block(const PlantedOptions& options,
                               std::uint64_t seed) {
  Rng rng(seed);
  auto relations = options.relations;
  if (relations.empty())
    relations.push_back({"default", options.p_in, options.p_out});

  PlantedGraph out;
  GraphBuilder b(false);
  for (const auto& r : relations) b.add_edge_type(r.name);
  const std::size_t half = options.nodes / 2;
  for (std::size_t i = 0; i < options.nodes; ++i) {
    b.add_node("n" + std::to_string(i));
    out.block.push_back(i < half ? 0 : 1);
  }
  for (EdgeTypeId t = 0; t < relations.size(); ++t)
    for (NodeId i = 0; i < options.nodes; ++i)
      for (NodeId j = i + 1; j < options.nodes; ++j) {
        const double p = out.block[i] == out.block[j] ? relations[t].p_in
                                                      : relations[t].p_out;
        if (rng.uniform_real() < p) b.add_edge(i, j, t);
      }
  out.graph = std::move(b).build();

  const std::size_t choices = options.pool + options.shared;
  for (std::size_t i = 0; i < options.nodes; ++i) {
    std::string text;
    for (std::size_t k = 0; k < options.tokens_per_node; ++k) {
      const std::size_t c = rng.uniform(choices);
      if (!text.empty()) text += ' ';
      text += c < options.pool ? "b" + std::to_string(out.block[i]) + "w" +
                                     std::to_string(c)
                               : "noise" + std::to_string(c - options.pool);
    }
    out.attributes["n" + std::to_string(i)] = text;
  }
  return out;
}

Graph random_graph(std::size_t n, double p, bool directed,
                   std::uint64_t seed) {
  Rng rng(seed);
  GraphBuilder b(directed);
  b.add_edge_type("default");
  for (std::size_t i = 0; i < n; ++i) b.add_node("v" + std::to_string(i));
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = directed ? 0 : i + 1; j < n; ++j)
      if (i != j && rng.uniform_real() < p) b.add_edge(i, j, 0);
  return std::move(b).build();
}

Vocabulary numbered_vocabulary(std::size_t size) {
  std::vector<std::string> tokens{kUnkToken};
  for (std::size_t i = 1; i < size; ++i) tokens.push_back("t" + std::to_string(i));
  return Vocabulary(tokens);
}

FeatureStore random_features(const Graph& g, std::size_t vocab_size,
                             std::size_t fields, std::size_t max_len,
                             std::uint64_t seed) {
  Rng rng(seed);
  FeatureStore store;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    NodeInput input;
    for (std::size_t f = 0; f < fields; ++f) {
      TokenSequence seq(1 + rng.uniform(max_len));
      for (auto& id : seq) id = static_cast<TokenId>(rng.uniform(vocab_size));
      input.push_back(seq);
    }
    store.add(g.label(v), g.node_type(v), input);
  }
  return store;
}

FeatureStore features_from(const Graph& g,
                           const std::map<std::string, std::string>& attributes,
                           const Vocabulary& vocab, std::size_t fields) {
  FeatureStore store;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    auto it = attributes.find(g.label(v));
    store.add(g.label(v), g.node_type(v),
              encode_node_input(vocab, it == attributes.end() ? "" : it->second,
                                fields));
  }
  return store;
}

template <typename T>
ModelState<T> small_model(const EncoderSpec& spec, std::size_t vocab_size,
                          std::uint64_t seed, bool share_phi,
                          std::vector<std::string> edge_types) {
  ModelLayout layout;
  layout.edge_types = std::move(edge_types);
  layout.default_spec = spec;
  layout.share_phi = share_phi;
  return init_model<T>(layout, numbered_vocabulary(vocab_size), seed);
}

template ModelState<float> small_model(const EncoderSpec&, std::size_t,
                                       std::uint64_t, bool,
                                       std::vector<std::string>);
template ModelState<double> small_model(const EncoderSpec&, std::size_t,
                                        std::uint64_t, bool,
                                        std::vector<std::string>);

Graph graph_from_edges(std::size_t n,
                       const std::vector<std::pair<NodeId, NodeId>>& edges,
                       bool directed) {
  GraphBuilder b(directed);
  b.add_edge_type("default");
  for (std::size_t i = 0; i < n; ++i) b.add_node("v" + std::to_string(i));
  for (auto [s, d] : edges) b.add_edge(s, d, 0);
  return std::move(b).build();
}

TempDir::TempDir() {
  std::string pattern =
      (std::filesystem::temp_directory_path() / "cne-test-XXXXXX").string();
  if (!::mkdtemp(pattern.data()))
    throw std::runtime_error("mkdtemp failed for " + pattern);
  path_ = pattern;
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

std::string TempDir::write(const std::string& name,
                           const std::string& text) const {
  const std::string p = file(name);
  std::ofstream out(p, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + p);
  return p;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace cne::testing
