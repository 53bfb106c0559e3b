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

#include "cne/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "io_util.hpp"

namespace cne {

namespace {

[[noreturn]] void bad_value(std::string_view key, const std::string& source,
                            const std::string& what, std::string_view value) {
  throw Error(ErrorKind::kConfig, source + ": key '" + std::string(key) +
                                      "': " + what + ", got '" +
                                      std::string(value) + "'");
}

std::string trim(std::string_view s) {
  const auto ws = " \t";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return std::string(s.substr(b, e - b + 1));
}

struct Parser {
  std::string_view key;
  const std::string& source;

  std::uint64_t u64(std::string_view v, std::uint64_t min = 0) const {
    std::uint64_t out = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (v.empty() || ec != std::errc() || p != v.data() + v.size())
      bad_value(key, source, "expected a non-negative integer", v);
    if (out < min)
      bad_value(key, source, "must be at least " + std::to_string(min), v);
    return out;
  }

  std::size_t size(std::string_view v, std::size_t min = 0) const {
    return static_cast<std::size_t>(u64(v, min));
  }

  double real(std::string_view v) const {
    double out = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (v.empty() || ec != std::errc() || p != v.data() + v.size() ||
        !std::isfinite(out))
      bad_value(key, source, "expected a finite number", v);
    return out;
  }

  bool boolean(std::string_view v) const {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    bad_value(key, source, "expected true or false", v);
  }

  std::vector<std::string> list(std::string_view v) const {
    std::vector<std::string> out;
    if (v.empty()) return out;
    for (auto piece : detail::split(v, ',')) {
      std::string item = trim(piece);
      if (item.empty()) bad_value(key, source, "empty list item", v);
      out.push_back(std::move(item));
    }
    return out;
  }

  std::pair<std::string, std::string> pair(std::string_view item) const {
    const auto colon = item.rfind(':');
    if (colon == std::string_view::npos || colon == 0 ||
        colon + 1 == item.size())
      bad_value(key, source, "expected name:value", item);
    return {std::string(item.substr(0, colon)),
            std::string(item.substr(colon + 1))};
  }

  EncoderKind encoder(std::string_view v) const {
    auto kind = parse_encoder_kind(v);
    if (!kind)
      bad_value(key, source, "expected sum, mean, gru or multi_gru_sum", v);
    return *kind;
  }
};

std::string fmt_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_bool(bool v) { return v ? "true" : "false"; }

template <typename Range, typename Fn>
std::string join(const Range& items, Fn&& fmt) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += ',';
    out += fmt(item);
  }
  return out;
}

using Setter =
    std::function<void(RunConfig&, std::string_view, const Parser&)>;
using Getter = std::function<std::string(const RunConfig&)>;

struct KeyImpl {
  ConfigKey key;
  Setter set;
  Getter get;
};

KeyImpl path_key(std::string_view name, std::string_view help,
                 std::string RunConfig::*member) {
  return {{name, help, true},
          [member](RunConfig& c, std::string_view v, const Parser&) {
            c.*member = std::string(v);
          },
          [member](const RunConfig& c) { return c.*member; }};
}

template <typename Member>
KeyImpl size_key(std::string_view name, std::string_view help, Member get,
                 std::size_t min) {
  return {{name, help, false},
          [get, min](RunConfig& c, std::string_view v, const Parser& p) {
            get(c) = p.size(v, min);
          },
          [get](const RunConfig& c) {
            return std::to_string(get(c));
          }};
}

template <typename Member>
KeyImpl real_key(std::string_view name, std::string_view help, Member get) {
  return {{name, help, false},
          [get](RunConfig& c, std::string_view v, const Parser& p) {
            get(c) = p.real(v);
          },
          [get](const RunConfig& c) {
            return fmt_real(get(c));
          }};
}

template <typename Member>
KeyImpl bool_key(std::string_view name, std::string_view help, Member get) {
  return {{name, help, false},
          [get](RunConfig& c, std::string_view v, const Parser& p) {
            get(c) = p.boolean(v);
          },
          [get](const RunConfig& c) {
            return fmt_bool(get(c));
          }};
}

#define CNE_FIELD(expr) [](auto& c) -> auto& { return c.expr; }

const std::vector<KeyImpl>& key_table() {
  static const std::vector<KeyImpl> table = [] {
    std::vector<KeyImpl> t;
    t.push_back(path_key("edges", "edge list TSV (src, dst[, edge_type])",
                         &RunConfig::edges));
    t.push_back(path_key("test_edges",
                         "held-out edge list; replaces the holdout split",
                         &RunConfig::test_edges));
    t.push_back(path_key("attributes", "node attribute TSV (label, text)",
                         &RunConfig::attributes));
    t.push_back(path_key("node_types", "node type TSV (label, type)",
                         &RunConfig::node_types));
    t.push_back(path_key("vocab", "vocabulary file", &RunConfig::vocab));
    t.push_back(
        path_key("checkpoint", "model checkpoint", &RunConfig::checkpoint));
    t.push_back(path_key("output", "walk or embedding output",
                         &RunConfig::output));
    t.push_back(path_key("report", "evaluation report CSV",
                         &RunConfig::report));
    t.push_back(path_key("loss_log", "per-epoch loss CSV",
                         &RunConfig::loss_log));
    t.push_back(path_key("ranks_jsonl", "per-node truth ranks (JSON lines)",
                         &RunConfig::ranks_jsonl));

    t.push_back(bool_key("directed", "treat edges as directed",
                         CNE_FIELD(directed)));
    t.push_back({{"edge_type", "edge type for 2-column lines, walk and eval",
                  false},
                 [](RunConfig& c, std::string_view v, const Parser& p) {
                   if (v.empty()) bad_value(p.key, p.source, "empty name", v);
                   c.edge_type = std::string(v);
                 },
                 [](const RunConfig& c) { return c.edge_type; }});
    t.push_back({{"holdout", "fraction of edges held out for evaluation",
                  false},
                 [](RunConfig& c, std::string_view v, const Parser& p) {
                   const double f = p.real(v);
                   if (f < 0.0 || f > 1.0)
                     bad_value(p.key, p.source, "must lie in [0, 1]", v);
                   c.holdout = f;
                 },
                 [](const RunConfig& c) { return fmt_real(c.holdout); }});
    t.push_back(size_key("max_vocab", "vocabulary size (excluding <UNK>)",
                         CNE_FIELD(max_vocab), 0));
    t.push_back(size_key("max_seq_len", "tokens kept per sequence",
                         CNE_FIELD(max_seq_len), 1));

    t.push_back(size_key("walk_length", "random walk length",
                         CNE_FIELD(train.walk_length), 1));
    t.push_back(size_key("window", "context window", CNE_FIELD(train.window),
                         1));
    t.push_back(size_key("negatives", "negatives per positive pair",
                         CNE_FIELD(train.negatives), 1));
    t.push_back(size_key("walks_per_node", "walks started at each node",
                         CNE_FIELD(train.walks_per_node), 1));
    t.push_back({{"encoder", "sum, mean, gru or multi_gru_sum", false},
                 [](RunConfig& c, std::string_view v, const Parser& p) {
                   c.encoder = p.encoder(v);
                 },
                 [](const RunConfig& c) {
                   return std::string(to_string(c.encoder));
                 }});
    t.push_back(size_key("token_dim", "token embedding width",
                         CNE_FIELD(train.token_dim), 1));
    t.push_back(size_key("hidden_dim", "GRU hidden width",
                         CNE_FIELD(train.hidden_dim), 1));
    t.push_back(bool_key("share_phi", "use one encoder for both sides",
                         CNE_FIELD(train.share_phi)));
    t.push_back(size_key("multi_n", "sequences per node for multi_gru_sum",
                         CNE_FIELD(multi_n), 1));
    t.push_back(bool_key("multi_shared",
                         "multi_gru_sum sequences share one GRU",
                         CNE_FIELD(multi_shared)));
    t.push_back({{"type_encoders", "per node type encoders, type:kind,...",
                  false},
                 [](RunConfig& c, std::string_view v, const Parser& p) {
                   std::map<std::string, EncoderKind> out;
                   for (const auto& item : p.list(v)) {
                     auto [type, kind] = p.pair(item);
                     out[type] = p.encoder(kind);
                   }
                   c.type_encoders = std::move(out);
                 },
                 [](const RunConfig& c) {
                   return join(c.type_encoders, [](const auto& kv) {
                     return kv.first + ":" + std::string(to_string(kv.second));
                   });
                 }});
    t.push_back(real_key("margin", "hinge margin", CNE_FIELD(train.margin)));
    t.push_back({{"lr", "Adam learning rate", false},
                 [](RunConfig& c, std::string_view v, const Parser& p) {
                   const double lr = p.real(v);
                   if (lr <= 0.0) bad_value(p.key, p.source, "must be > 0", v);
                   c.train.lr = lr;
                 },
                 [](const RunConfig& c) { return fmt_real(c.train.lr); }});
    t.push_back(size_key("batch", "examples per Adam step",
                         CNE_FIELD(train.batch), 1));
    t.push_back(size_key("epochs", "passes over the walk stream",
                         CNE_FIELD(train.epochs), 0));
    t.push_back({{"seed", "random seed", false},
                 [](RunConfig& c, std::string_view v, const Parser& p) {
                   c.train.seed = p.u64(v);
                 },
                 [](const RunConfig& c) {
                   return std::to_string(c.train.seed);
                 }});
    t.push_back({{"edge_type_weights", "batch share per edge type, name:w,...",
                  false},
                 [](RunConfig& c, std::string_view v, const Parser& p) {
                   std::map<std::string, double> out;
                   for (const auto& item : p.list(v)) {
                     auto [name, w] = p.pair(item);
                     const double weight = p.real(w);
                     if (weight < 0.0)
                       bad_value(p.key, p.source, "weights must be >= 0", w);
                     out[name] = weight;
                   }
                   c.train.edge_type_weights = std::move(out);
                 },
                 [](const RunConfig& c) {
                   return join(c.train.edge_type_weights, [](const auto& kv) {
                     return kv.first + ":" + fmt_real(kv.second);
                   });
                 }});
    t.push_back({{"train_edge_types", "edge types to train (default: all)",
                  false},
                 [](RunConfig& c, std::string_view v, const Parser& p) {
                   auto items = p.list(v);
                   c.train.train_edge_types = {items.begin(), items.end()};
                 },
                 [](const RunConfig& c) {
                   return join(c.train.train_edge_types,
                               [](const std::string& s) { return s; });
                 }});
    t.push_back(size_key("workers", "worker threads (results do not change)",
                         CNE_FIELD(train.workers), 1));

    t.push_back({{"ks", "cutoffs for P@k and R@k", false},
                 [](RunConfig& c, std::string_view v, const Parser& p) {
                   std::vector<std::size_t> ks;
                   for (const auto& item : p.list(v)) ks.push_back(p.size(item, 1));
                   if (ks.empty()) bad_value(p.key, p.source, "empty list", v);
                   c.ks = std::move(ks);
                 },
                 [](const RunConfig& c) {
                   return join(c.ks,
                               [](std::size_t k) { return std::to_string(k); });
                 }});
    t.push_back(size_key("sample_nodes", "query nodes sampled for eval",
                         CNE_FIELD(sample_nodes), 1));
    t.push_back({{"eval_side", "directed (phi1 vs phi2) or symmetric", false},
                 [](RunConfig& c, std::string_view v, const Parser& p) {
                   if (v == "directed")
                     c.eval_side = ScoreMode::kDirected;
                   else if (v == "symmetric")
                     c.eval_side = ScoreMode::kSymmetric;
                   else
                     bad_value(p.key, p.source,
                               "expected directed or symmetric", v);
                 },
                 [](const RunConfig& c) {
                   return std::string(c.eval_side == ScoreMode::kDirected
                                          ? "directed"
                                          : "symmetric");
                 }});
    t.push_back(bool_key("eval_unseen",
                         "query only nodes with no training edges",
                         CNE_FIELD(eval_unseen)));
    t.push_back({{"candidate_type", "restrict candidates to a node type",
                  false},
                 [](RunConfig& c, std::string_view v, const Parser&) {
                   c.candidate_type = std::string(v);
                 },
                 [](const RunConfig& c) { return c.candidate_type; }});
    t.push_back({{"embed_side", "center or context encoder for embed", false},
                 [](RunConfig& c, std::string_view v, const Parser& p) {
                   if (v == "center")
                     c.embed_side = Side::kCenter;
                   else if (v == "context")
                     c.embed_side = Side::kContext;
                   else
                     bad_value(p.key, p.source, "expected center or context",
                               v);
                 },
                 [](const RunConfig& c) {
                   return std::string(c.embed_side == Side::kCenter
                                          ? "center"
                                          : "context");
                 }});
    return t;
  }();
  return table;
}

#undef CNE_FIELD

const KeyImpl* find_key(std::string_view name) {
  for (const auto& k : key_table())
    if (k.key.name == name) return &k;
  return nullptr;
}

}  // namespace

std::string_view to_string(Command command) {
  switch (command) {
    case Command::kBuildVocab: return "build-vocab";
    case Command::kWalk: return "walk";
    case Command::kTrain: return "train";
    case Command::kEmbed: return "embed";
    case Command::kEval: return "eval";
  }
  return "?";
}

std::optional<Command> parse_command(std::string_view name) {
  for (Command c : {Command::kBuildVocab, Command::kWalk, Command::kTrain,
                    Command::kEmbed, Command::kEval})
    if (to_string(c) == name) return c;
  return std::nullopt;
}

EncoderSpec RunConfig::default_spec() const {
  EncoderSpec spec;
  spec.kind = encoder;
  spec.token_dim = train.token_dim;
  spec.hidden_dim = train.hidden_dim;
  spec.sequences = multi_n;
  spec.shared_sequences = multi_shared;
  return spec;
}

std::map<std::string, EncoderSpec> RunConfig::node_type_specs() const {
  std::map<std::string, EncoderSpec> out;
  for (const auto& [type, kind] : type_encoders) {
    EncoderSpec spec = default_spec();
    spec.kind = kind;
    out.emplace(type, spec);
  }
  return out;
}

std::span<const ConfigKey> config_keys() {
  static const std::vector<ConfigKey> keys = [] {
    std::vector<ConfigKey> out;
    for (const auto& k : key_table()) out.push_back(k.key);
    return out;
  }();
  return keys;
}

void set_config_value(RunConfig& config, std::string_view key,
                      std::string_view value, const std::string& source) {
  const KeyImpl* impl = find_key(key);
  if (!impl)
    throw Error(ErrorKind::kConfig,
                source + ": unknown key '" + std::string(key) + "'");
  impl->set(config, value, Parser{key, source});
}

std::string get_config_value(const RunConfig& config, std::string_view key) {
  const KeyImpl* impl = find_key(key);
  if (!impl)
    throw Error(ErrorKind::kConfig, "unknown key '" + std::string(key) + "'");
  return impl->get(config);
}

void apply_config_text(RunConfig& config, std::string_view text,
                       const std::string& source) {
  const auto lines = detail::split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (detail::skippable(lines[i])) continue;
    const std::string where = source + ":" + std::to_string(i + 1);
    const auto eq = lines[i].find('=');
    if (eq == std::string_view::npos)
      throw Error(ErrorKind::kConfig,
                  where + ": expected key=value, got '" +
                      std::string(lines[i]) + "'");
    const std::string key = trim(lines[i].substr(0, eq));
    set_config_value(config, key, trim(lines[i].substr(eq + 1)), where);
  }
}

void apply_config_file(RunConfig& config, const std::string& path) {
  apply_config_text(config, detail::read_file(path), path);
}

void apply_environment(RunConfig& config) {
  if (const char* seed = std::getenv("CNE_SEED"))
    set_config_value(config, "seed", seed, "environment CNE_SEED");
}

void require_paths(const RunConfig& config, Command command) {
  std::vector<std::string_view> required;
  switch (command) {
    case Command::kBuildVocab: required = {"attributes", "vocab"}; break;
    case Command::kWalk: required = {"edges", "output"}; break;
    case Command::kTrain:
      required = {"edges", "attributes", "checkpoint"};
      break;
    case Command::kEmbed:
      required = {"attributes", "checkpoint", "output"};
      break;
    case Command::kEval:
      required = {"edges", "attributes", "checkpoint", "report"};
      break;
  }
  for (auto key : required)
    if (get_config_value(config, key).empty())
      throw Error(ErrorKind::kConfig,
                  "missing required path '" + std::string(key) + "' for " +
                      std::string(to_string(command)));
}

std::uint64_t config_hash(const RunConfig& config) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](std::string_view s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 0x100000001b3ULL;
    }
  };
  for (const auto& k : key_table()) {
    if (k.key.is_path || k.key.name == "workers") continue;
    feed(k.key.name);
    feed("=");
    feed(k.get(config));
    feed("\n");
  }
  return h;
}

std::string provenance_header(const RunConfig& config) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "# cne config=%016llx seed=%llu\n",
                static_cast<unsigned long long>(config_hash(config)),
                static_cast<unsigned long long>(config.train.seed));
  return buf;
}

}  // namespace cne
