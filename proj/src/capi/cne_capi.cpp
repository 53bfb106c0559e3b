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

#include "cne/cne.h"

#include <cstdio>
#include <cstring>
#include <exception>
#include <limits>
#include <new>
#include <string>

#include "cne/checkpoint.hpp"
#include "cne/config.hpp"
#include "cne/pipeline.hpp"

struct cne_config {
  cne::RunConfig value;
};

struct cne_dataset {
  cne::Dataset value;
};

struct cne_model {
  cne::ModelState<float> value;
};

struct cne_report {
  cne::RankingReport value;
};

namespace {

thread_local std::string last_error;

cne_status status_of(cne::ErrorKind kind) {
  using cne::ErrorKind;
  switch (kind) {
    case ErrorKind::kInvalidArgument: return CNE_ERR_INVALID_ARGUMENT;
    case ErrorKind::kIo: return CNE_ERR_IO;
    case ErrorKind::kParse: return CNE_ERR_PARSE;
    case ErrorKind::kConfig: return CNE_ERR_CONFIG;
    case ErrorKind::kMissingAttributes: return CNE_ERR_MISSING_ATTRIBUTES;
    case ErrorKind::kNumeric: return CNE_ERR_NUMERIC;
    case ErrorKind::kNoEvalNodes: return CNE_ERR_NO_EVAL_NODES;
    case ErrorKind::kCheckpointFormat: return CNE_ERR_CHECKPOINT_FORMAT;
    case ErrorKind::kCheckpointVersion: return CNE_ERR_CHECKPOINT_VERSION;
    case ErrorKind::kCheckpointTruncated: return CNE_ERR_CHECKPOINT_TRUNCATED;
    case ErrorKind::kCheckpointChecksum: return CNE_ERR_CHECKPOINT_CHECKSUM;
  }
  return CNE_ERR_INTERNAL;
}

cne_status fail(cne_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs `fn`, translating exceptions into status codes.
template <typename Fn>
cne_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return CNE_OK;
  } catch (const cne::Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const cne::ContractViolation& e) {
    return fail(CNE_ERR_CONTRACT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(CNE_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CNE_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(CNE_ERR_INTERNAL, "unknown error");
  }
}

#define CNE_REQUIRE_ARG(cond)                                         \
  do {                                                                \
    if (!(cond))                                                      \
      return fail(CNE_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

cne_status copy_out(const std::string& value, char* buf, size_t capacity,
                    size_t* needed) {
  if (needed) *needed = value.size() + 1;
  if (buf && capacity > value.size()) {
    std::memcpy(buf, value.c_str(), value.size() + 1);
    return CNE_OK;
  }
  if (!buf && needed) return CNE_OK;
  return fail(CNE_ERR_INVALID_ARGUMENT, "buffer too small");
}

}  // namespace

extern "C" {

const char* cne_version(void) { return "1.0.0"; }

const char* cne_status_name(cne_status status) {
  switch (status) {
    case CNE_OK: return "ok";
    case CNE_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CNE_ERR_IO: return "i/o error";
    case CNE_ERR_PARSE: return "parse error";
    case CNE_ERR_CONFIG: return "config error";
    case CNE_ERR_MISSING_ATTRIBUTES: return "missing attributes";
    case CNE_ERR_NUMERIC: return "numeric error";
    case CNE_ERR_NO_EVAL_NODES: return "no evaluation nodes";
    case CNE_ERR_CHECKPOINT_FORMAT: return "checkpoint format error";
    case CNE_ERR_CHECKPOINT_VERSION: return "checkpoint version error";
    case CNE_ERR_CHECKPOINT_TRUNCATED: return "checkpoint truncated";
    case CNE_ERR_CHECKPOINT_CHECKSUM: return "checkpoint checksum mismatch";
    case CNE_ERR_CONTRACT: return "contract violation";
    case CNE_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* cne_last_error(void) { return last_error.c_str(); }

cne_status cne_config_new(cne_config** out) {
  CNE_REQUIRE_ARG(out);
  return guarded([&] { *out = new cne_config{}; });
}

void cne_config_free(cne_config* config) { delete config; }

cne_status cne_config_set(cne_config* config, const char* key,
                          const char* value, const char* source) {
  CNE_REQUIRE_ARG(config && key && value);
  return guarded([&] {
    cne::set_config_value(config->value, key, value,
                          source ? source : std::string("--") + key);
  });
}

cne_status cne_config_get(const cne_config* config, const char* key,
                          char* buf, size_t capacity, size_t* needed) {
  CNE_REQUIRE_ARG(config && key);
  std::string value;
  const cne_status s =
      guarded([&] { value = cne::get_config_value(config->value, key); });
  return s == CNE_OK ? copy_out(value, buf, capacity, needed) : s;
}

cne_status cne_config_load_file(cne_config* config, const char* path) {
  CNE_REQUIRE_ARG(config && path);
  return guarded([&] { cne::apply_config_file(config->value, path); });
}

cne_status cne_config_apply_env(cne_config* config) {
  CNE_REQUIRE_ARG(config);
  return guarded([&] { cne::apply_environment(config->value); });
}

size_t cne_config_key_count(void) { return cne::config_keys().size(); }

const char* cne_config_key_name(size_t index) {
  const auto keys = cne::config_keys();
  return index < keys.size() ? keys[index].name.data() : nullptr;
}

const char* cne_config_key_help(size_t index) {
  const auto keys = cne::config_keys();
  return index < keys.size() ? keys[index].help.data() : nullptr;
}

int cne_config_key_is_path(size_t index) {
  const auto keys = cne::config_keys();
  return index < keys.size() && keys[index].is_path ? 1 : 0;
}

cne_status cne_config_header(const cne_config* config, char* buf,
                             size_t capacity, size_t* needed) {
  CNE_REQUIRE_ARG(config);
  std::string header = cne::provenance_header(config->value);
  header.pop_back();
  return copy_out(header, buf, capacity, needed);
}

int cne_command_valid(const char* command) {
  return command && cne::parse_command(command) ? 1 : 0;
}

cne_status cne_run(const cne_config* config, const char* command,
                   cne_message_fn on_message, void* user) {
  CNE_REQUIRE_ARG(config && command);
  const auto cmd = cne::parse_command(command);
  if (!cmd)
    return fail(CNE_ERR_INVALID_ARGUMENT,
                std::string("unknown command '") + command + "'");
  return guarded([&] {
    const auto summary = cne::run_command(*cmd, config->value);
    if (!on_message) return;
    for (const auto& w : summary.warnings)
      on_message(("warning: " + w).c_str(), user);
    for (const auto& e : summary.train.losses) {
      char line[160];
      std::snprintf(line, sizeof(line), "epoch %zu %s mean_loss=%.6g",
                    e.epoch, e.edge_type.c_str(), e.mean_loss);
      on_message(line, user);
    }
  });
}

cne_status cne_dataset_load(const cne_config* config, cne_dataset** out) {
  CNE_REQUIRE_ARG(config && out);
  return guarded([&] {
    *out = new cne_dataset{cne::load_dataset(config->value)};
  });
}

void cne_dataset_free(cne_dataset* dataset) { delete dataset; }

size_t cne_dataset_node_count(const cne_dataset* dataset) {
  return dataset ? dataset->value.graph.node_count() : 0;
}

size_t cne_dataset_train_edge_count(const cne_dataset* dataset) {
  return dataset ? dataset->value.graph.edge_count() : 0;
}

size_t cne_dataset_test_edge_count(const cne_dataset* dataset) {
  return dataset ? dataset->value.test.edges.size() : 0;
}

cne_status cne_model_train(const cne_config* config,
                           const cne_dataset* dataset, cne_model** out) {
  CNE_REQUIRE_ARG(config && dataset && out);
  return guarded([&] {
    *out = new cne_model{cne::train_on(dataset->value, config->value)};
  });
}

cne_status cne_model_load(const char* path, cne_model** out) {
  CNE_REQUIRE_ARG(path && out);
  return guarded(
      [&] { *out = new cne_model{cne::load_checkpoint<float>(path)}; });
}

cne_status cne_model_save(const cne_model* model, const char* path) {
  CNE_REQUIRE_ARG(model && path);
  return guarded([&] { cne::save_checkpoint(model->value, path); });
}

void cne_model_free(cne_model* model) { delete model; }

size_t cne_model_dim(const cne_model* model) {
  return model ? model->value.output_dim() : 0;
}

cne_status cne_model_embed_text(const cne_model* model, const char* text,
                                const char* node_type, const char* edge_type,
                                cne_side side, float* out, size_t capacity) {
  CNE_REQUIRE_ARG(model && text && out);
  const auto& m = model->value;
  if (capacity < m.output_dim())
    return fail(CNE_ERR_INVALID_ARGUMENT, "output buffer too small");
  return guarded([&] {
    const std::string name = edge_type && *edge_type
                                 ? edge_type
                                 : m.edge_types.front().name;
    const cne::EdgeTypeId et = cne::model_edge_type(m, name);
    const auto& enc = m.encoders[m.encoder_for(
        et, node_type ? node_type : "",
        side == CNE_SIDE_CONTEXT ? cne::Side::kContext : cne::Side::kCenter)];
    const auto input =
        cne::encode_node_input(m.vocab, text, enc.spec.input_count());
    const auto v = cne::compose(enc, m.table, input);
    for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = v[i];
  });
}

cne_status cne_evaluate(const cne_model* model, const cne_dataset* dataset,
                        const cne_config* config, cne_report** out) {
  CNE_REQUIRE_ARG(model && dataset && config && out);
  return guarded([&] {
    *out = new cne_report{
        cne::evaluate_on(model->value, dataset->value, config->value)};
  });
}

void cne_report_free(cne_report* report) { delete report; }

size_t cne_report_k_count(const cne_report* report) {
  return report ? report->value.ks.size() : 0;
}

cne_status cne_report_metric(const cne_report* report, size_t index,
                             size_t* k, double* precision, double* recall) {
  CNE_REQUIRE_ARG(report);
  const auto& r = report->value;
  if (index >= r.ks.size())
    return fail(CNE_ERR_INVALID_ARGUMENT, "metric index out of range");
  if (k) *k = r.ks[index];
  if (precision) *precision = r.precision[index];
  if (recall) *recall = r.recall[index];
  return CNE_OK;
}

size_t cne_report_node_count(const cne_report* report) {
  return report ? report->value.nodes.size() : 0;
}

size_t cne_report_bucket_count(const cne_report* report) {
  return report ? report->value.histogram.size() : 0;
}

cne_status cne_report_bucket(const cne_report* report, size_t index,
                             size_t* lo, size_t* hi, size_t* count) {
  CNE_REQUIRE_ARG(report);
  const auto& r = report->value;
  if (index >= r.histogram.size())
    return fail(CNE_ERR_INVALID_ARGUMENT, "bucket index out of range");
  if (lo) *lo = r.boundaries[index];
  if (hi)
    *hi = index + 1 < r.boundaries.size()
              ? r.boundaries[index + 1]
              : std::numeric_limits<size_t>::max();
  if (count) *count = r.histogram[index];
  return CNE_OK;
}

}  // extern "C"
