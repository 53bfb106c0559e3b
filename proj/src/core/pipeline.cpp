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

#include "cne/pipeline.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "cne/checkpoint.hpp"
#include "cne/sampler.hpp"
#include "io_util.hpp"
#include "json.hpp"

namespace cne {

namespace {

constexpr std::uint64_t kSplitStream = 0x53504c54;

std::string fmt9(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::size_t spec_fields(const RunConfig& config, const std::string& type) {
  const auto specs = config.node_type_specs();
  auto it = specs.find(type);
  return (it == specs.end() ? config.default_spec() : it->second)
      .input_count();
}

EdgeTypeId graph_edge_type(const Graph& g, const std::string& name) {
  if (auto t = g.find_edge_type(name)) return *t;
  if (g.edge_type_count() == 1) return 0;
  throw Error(ErrorKind::kInvalidArgument,
              "graph has no edge type '" + name + "'");
}

void check_input(const RunConfig& config, std::string_view key) {
  const std::string path = get_config_value(config, key);
  if (path.empty()) return;
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::kIo, "key '" + std::string(key) +
                                    "': cannot read '" + path + "'");
}

void check_output(const RunConfig& config, std::string_view key) {
  const std::string path = get_config_value(config, key);
  if (path.empty()) return;
  const auto dir = std::filesystem::path(path).parent_path();
  std::error_code ec;
  if (!dir.empty() && !std::filesystem::is_directory(dir, ec))
    throw Error(ErrorKind::kIo, "key '" + std::string(key) +
                                    "': directory '" + dir.string() +
                                    "' does not exist");
}

}  // namespace

Dataset load_dataset(const RunConfig& config) {
  Dataset d;
  if (!config.edges.empty()) {
    if (!config.test_edges.empty()) {
      std::tie(d.graph, d.test) =
          load_train_test(config.edges, config.test_edges, config.directed,
                          config.edge_type, &d.edge_stats);
    } else {
      Graph full = load_edge_list(config.edges, config.directed,
                                  config.edge_type, &d.edge_stats);
      std::tie(d.graph, d.test) = split_edges(
          full, config.holdout, derive_seed(config.train.seed, kSplitStream));
    }
  }
  if (!config.node_types.empty()) {
    d.node_types = load_node_types(config.node_types);
    d.graph = with_node_types(d.graph, d.node_types);
  }
  if (!config.attributes.empty())
    d.attributes =
        load_node_attributes(config.attributes, &d.attribute_stats);
  return d;
}

FeatureStore encode_features(
    const Dataset& data, const Vocabulary& vocab,
    const std::function<std::size_t(const std::string&)>& fields,
    std::size_t max_seq_len, bool include_extra, std::size_t* missing) {
  FeatureStore store;
  std::size_t absent = 0;
  auto encode = [&](const std::string& label, const std::string& text,
                    std::size_t n) {
    try {
      return encode_node_input(vocab, text, n, max_seq_len);
    } catch (const Error& e) {
      throw Error(e.kind(), "node '" + label + "': " + e.what());
    }
  };
  for (NodeId v = 0; v < data.graph.node_count(); ++v) {
    const std::string& label = data.graph.label(v);
    const std::string& type = data.graph.node_type(v);
    const std::size_t n = fields(type);
    auto it = data.attributes.find(label);
    if (it == data.attributes.end()) {
      ++absent;
      store.add(label, type, NodeInput(n, TokenSequence{kUnkId}));
    } else {
      store.add(label, type, encode(label, it->second, n));
    }
  }
  if (include_extra) {
    for (const auto& [label, text] : data.attributes) {
      if (data.graph.find(label)) continue;
      auto t = data.node_types.find(label);
      const std::string type = t == data.node_types.end() ? "" : t->second;
      store.add(label, type, encode(label, text, fields(type)));
    }
  }
  if (missing) *missing = absent;
  return store;
}

std::function<std::size_t(const std::string&)> model_fields(
    const ModelState<float>& model, EdgeTypeId edge_type) {
  return [&model, edge_type](const std::string& type) {
    return model.encoders[model.encoder_for(edge_type, type, Side::kCenter)]
        .spec.input_count();
  };
}

EdgeTypeId model_edge_type(const ModelState<float>& model,
                           const std::string& name) {
  if (auto t = model.find_edge_type(name)) return *t;
  if (model.edge_types.size() == 1) return 0;
  throw Error(ErrorKind::kInvalidArgument,
              "model has no encoders for edge type '" + name + "'");
}

void validate_paths(const RunConfig& config, Command command) {
  require_paths(config, command);
  for (auto key : {"edges", "test_edges", "attributes", "node_types"})
    check_input(config, key);
  switch (command) {
    case Command::kBuildVocab: check_output(config, "vocab"); break;
    case Command::kWalk: check_output(config, "output"); break;
    case Command::kTrain:
      check_input(config, "vocab");
      check_output(config, "checkpoint");
      check_output(config, "loss_log");
      break;
    case Command::kEmbed:
      check_input(config, "checkpoint");
      check_output(config, "output");
      break;
    case Command::kEval:
      check_input(config, "checkpoint");
      check_output(config, "report");
      check_output(config, "ranks_jsonl");
      break;
  }
}

Vocabulary build_vocab_from(const Dataset& data, const RunConfig& config) {
  return build_vocabulary(data.attributes, config.max_vocab);
}

ModelState<float> train_on(const Dataset& data, const RunConfig& config,
                           TrainReport* report) {
  const Vocabulary vocab = config.vocab.empty()
                               ? build_vocab_from(data, config)
                               : load_vocabulary(config.vocab);
  const FeatureStore features = encode_features(
      data, vocab,
      [&](const std::string& type) { return spec_fields(config, type); },
      config.max_seq_len, false);
  return train<float>(config.train, data.graph, features, vocab,
                      config.default_spec(), config.node_type_specs(), report);
}

RankingReport evaluate_on(const ModelState<float>& model, const Dataset& data,
                          const RunConfig& config) {
  const EdgeTypeId et = model_edge_type(model, config.edge_type);
  const FeatureStore features =
      encode_features(data, model.vocab, model_fields(model, et),
                      config.max_seq_len, false);
  EvalOptions options;
  options.ks = config.ks;
  options.sample_nodes = config.sample_nodes;
  options.seed = config.train.seed;
  options.edge_type = model.edge_types[et].name;
  options.mode = config.eval_side;
  options.workers = config.train.workers;
  if (config.eval_unseen)
    options.query_nodes = unseen_test_nodes(data.graph, data.test);
  if (!config.candidate_type.empty())
    options.candidate_type = config.candidate_type;
  return evaluate_lp(model, data.graph, data.test, features, options);
}

std::string format_embeddings(const ModelState<float>& model,
                              const Dataset& data, const RunConfig& config,
                              std::size_t* rows) {
  const EdgeTypeId et = model_edge_type(model, config.edge_type);
  const FeatureStore features =
      encode_features(data, model.vocab, model_fields(model, et),
                      config.max_seq_len, true);
  std::vector<NodeId> nodes(features.size());
  for (NodeId v = 0; v < nodes.size(); ++v) nodes[v] = v;
  const auto matrix = embed_all(model, std::span<const NodeId>(nodes),
                                features, et, config.embed_side,
                                config.train.workers);
  std::string out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out += features.label(nodes[i]);
    out += '\t';
    for (Eigen::Index j = 0; j < matrix.rows.cols(); ++j) {
      if (j) out += ',';
      out += fmt9(matrix.rows(static_cast<Eigen::Index>(i), j));
    }
    out += '\n';
  }
  if (rows) *rows = nodes.size();
  return out;
}

RunSummary run_command(Command command, const RunConfig& config) {
  validate_paths(config, command);
  RunSummary summary;
  const std::string header = provenance_header(config);
  const Dataset data = load_dataset(config);

  auto warn = [&](std::size_t count, const std::string& what) {
    if (count) summary.warnings.push_back(std::to_string(count) + " " + what);
  };
  warn(data.edge_stats.self_loops_skipped, "self-loop(s) skipped");
  warn(data.edge_stats.duplicates_collapsed, "duplicate edge(s) collapsed");
  warn(data.attribute_stats.duplicate_labels,
       "duplicate attribute label(s) overwritten");
  std::size_t unattributed = 0;
  for (NodeId v = 0; v < data.graph.node_count(); ++v)
    unattributed += data.attributes.count(data.graph.label(v)) ? 0 : 1;
  if (!config.attributes.empty())
    warn(unattributed, "graph node(s) without attributes use <UNK>");

  switch (command) {
    case Command::kBuildVocab: {
      const Vocabulary vocab = build_vocab_from(data, config);
      save_vocabulary(vocab, config.vocab);
      summary.rows = vocab.size();
      break;
    }
    case Command::kWalk: {
      StreamParams p;
      p.walks_per_node = config.train.walks_per_node;
      p.walk_length = config.train.walk_length;
      p.edge_type = graph_edge_type(data.graph, config.edge_type);
      // The walks of the first training epoch.
      p.seed = derive_seed(config.train.seed, 1);
      p.workers = config.train.workers;
      std::string out = header;
      for (const Walk& walk : generate_walks(data.graph, p)) {
        for (std::size_t i = 0; i < walk.size(); ++i) {
          if (i) out += ' ';
          out += data.graph.label(walk[i]);
        }
        out += '\n';
        ++summary.rows;
      }
      detail::write_file_atomic(config.output, out);
      break;
    }
    case Command::kTrain: {
      const ModelState<float> model = train_on(data, config, &summary.train);
      save_checkpoint(model, config.checkpoint);
      if (!config.loss_log.empty()) {
        std::string out = header + "epoch,edge_type,mean_loss\n";
        for (const auto& e : summary.train.losses)
          out += std::to_string(e.epoch) + "," + e.edge_type + "," +
                 fmt9(e.mean_loss) + "\n";
        detail::write_file_atomic(config.loss_log, out);
      }
      break;
    }
    case Command::kEmbed: {
      const auto model = load_checkpoint<float>(config.checkpoint);
      detail::write_file_atomic(
          config.output,
          header + format_embeddings(model, data, config, &summary.rows));
      break;
    }
    case Command::kEval: {
      const auto model = load_checkpoint<float>(config.checkpoint);
      summary.eval = evaluate_on(model, data, config);
      detail::write_file_atomic(config.report,
                                header + format_report_csv(summary.eval));
      if (!config.ranks_jsonl.empty()) {
        char hash[20];
        std::snprintf(hash, sizeof(hash), "%016llx",
                      static_cast<unsigned long long>(config_hash(config)));
        const nlohmann::json meta{{"cne_config", hash},
                                  {"seed", config.train.seed}};
        detail::write_file_atomic(
            config.ranks_jsonl,
            meta.dump() + "\n" + format_ranks_jsonl(summary.eval, data.graph));
      }
      summary.rows = summary.eval.nodes.size();
      break;
    }
  }
  return summary;
}

}  // namespace cne
