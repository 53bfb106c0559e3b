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

// Run configuration: a flat `key=value` file layered as
//
//   built-in defaults < CNE_SEED environment variable < file < flags
//
// Every key is listed in config_keys(); unknown keys are errors.

#ifndef CNE_CONFIG_HPP_
#define CNE_CONFIG_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cne/encoders.hpp"
#include "cne/evaluator.hpp"
#include "cne/trainer.hpp"

namespace cne {

enum class Command { kBuildVocab, kWalk, kTrain, kEmbed, kEval };

std::string_view to_string(Command command);
std::optional<Command> parse_command(std::string_view name);

struct RunConfig {
  // Inputs.
  std::string edges;
  std::string test_edges;  // when set, replaces the random holdout split
  std::string attributes;
  std::string node_types;
  std::string vocab;       // build-vocab output; train input when set
  std::string checkpoint;  // train output; embed/eval input

  // Outputs.
  std::string output;  // walk and embed
  std::string report;
  std::string loss_log;
  std::string ranks_jsonl;

  // Data.
  bool directed = false;
  std::string edge_type = "default";
  double holdout = 0.2;
  std::size_t max_vocab = 40000;
  std::size_t max_seq_len = kDefaultMaxSequenceLength;

  // Model and training.
  EncoderKind encoder = EncoderKind::kGru;
  std::size_t multi_n = 4;
  bool multi_shared = true;
  std::map<std::string, EncoderKind> type_encoders;
  TrainConfig train;

  // Evaluation and export.
  std::vector<std::size_t> ks{10, 100};
  std::size_t sample_nodes = 1000;
  ScoreMode eval_side = ScoreMode::kDirected;
  bool eval_unseen = false;
  std::string candidate_type;
  Side embed_side = Side::kCenter;

  EncoderSpec default_spec() const;
  std::map<std::string, EncoderSpec> node_type_specs() const;
};

struct ConfigKey {
  std::string_view name;
  std::string_view help;
  bool is_path;
};

std::span<const ConfigKey> config_keys();

/// Parses `value` into `key`. Raises kConfig naming the key and `source`
/// (e.g. "run.cfg:3" or "--window").
void set_config_value(RunConfig& config, std::string_view key,
                      std::string_view value, const std::string& source);

/// Canonical text of a key's current value.
std::string get_config_value(const RunConfig& config, std::string_view key);

/// Applies `key=value` lines; '#' comments and blank lines are skipped.
void apply_config_text(RunConfig& config, std::string_view text,
                       const std::string& source);
void apply_config_file(RunConfig& config, const std::string& path);

/// Applies CNE_SEED if it is set.
void apply_environment(RunConfig& config);

/// Raises kConfig for each required path `command` lacks, naming the key.
void require_paths(const RunConfig& config, Command command);

/// FNV-1a over the canonical values of every non-path key except
/// `workers`, which never changes results.
std::uint64_t config_hash(const RunConfig& config);

/// "# cne config=<16 hex digits> seed=<seed>\n"
std::string provenance_header(const RunConfig& config);

}  // namespace cne

#endif  // CNE_CONFIG_HPP_
