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

// End-to-end steps shared by the C API and the command-line tool. Each run_*
// call validates its paths, does its work and overwrites its outputs.

#ifndef CNE_PIPELINE_HPP_
#define CNE_PIPELINE_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cne/config.hpp"
#include "cne/evaluator.hpp"
#include "cne/graph.hpp"
#include "cne/text.hpp"
#include "cne/trainer.hpp"

namespace cne {

/// Graph and raw attributes for a run. `graph` is the training graph; the
/// held-out edges are in `test`.
struct Dataset {
  Graph graph;
  EdgeSet test;
  std::map<std::string, std::string> attributes;
  std::map<std::string, std::string> node_types;
  EdgeListStats edge_stats;
  AttributeStats attribute_stats;
};

/// Loads what `config` names. The edge list is split with `holdout` unless
/// `test_edges` is set. Without `edges` the graph is empty.
Dataset load_dataset(const RunConfig& config);

/// Encoded inputs for every graph node followed by every attribute-only
/// node (in label order). `fields(node_type)` gives the sequence count of
/// the node's encoder. Graph nodes without attributes get [<UNK>] and are
/// counted in `missing`.
FeatureStore encode_features(const Dataset& data, const Vocabulary& vocab,
                             const std::function<std::size_t(
                                 const std::string&)>& fields,
                             std::size_t max_seq_len, bool include_extra,
                             std::size_t* missing = nullptr);

/// `fields` callback that reads encoder specs from a trained model.
std::function<std::size_t(const std::string&)> model_fields(
    const ModelState<float>& model, EdgeTypeId edge_type);

/// Resolves `config.edge_type` against the model; a single-type model
/// accepts any name.
EdgeTypeId model_edge_type(const ModelState<float>& model,
                           const std::string& name);

/// Raises kConfig for a missing required path and kIo for an unreadable
/// input or an output whose directory does not exist.
void validate_paths(const RunConfig& config, Command command);

struct RunSummary {
  std::vector<std::string> warnings;
  TrainReport train;
  RankingReport eval;
  std::size_t rows = 0;  // vocabulary size, walks or embeddings written
};

Vocabulary build_vocab_from(const Dataset& data, const RunConfig& config);

ModelState<float> train_on(const Dataset& data, const RunConfig& config,
                           TrainReport* report = nullptr);

RankingReport evaluate_on(const ModelState<float>& model, const Dataset& data,
                          const RunConfig& config);

/// Embedding rows as `label<TAB>v1,v2,...` with 9 significant digits.
std::string format_embeddings(const ModelState<float>& model,
                              const Dataset& data, const RunConfig& config,
                              std::size_t* rows = nullptr);

RunSummary run_command(Command command, const RunConfig& config);

}  // namespace cne

#endif  // CNE_PIPELINE_HPP_
