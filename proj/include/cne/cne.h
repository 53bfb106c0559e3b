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

/* C interface to the CNE library. Objects are opaque handles released with
 * their *_free function. Every fallible call returns a cne_status; on
 * failure cne_last_error() describes the problem for the calling thread. */

#ifndef CNE_CNE_H_
#define CNE_CNE_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define CNE_API __attribute__((visibility("default")))
#else
#define CNE_API
#endif

typedef enum cne_status {
  CNE_OK = 0,
  CNE_ERR_INVALID_ARGUMENT = 1,
  CNE_ERR_IO = 2,
  CNE_ERR_PARSE = 3,
  CNE_ERR_CONFIG = 4,
  CNE_ERR_MISSING_ATTRIBUTES = 5,
  CNE_ERR_NUMERIC = 6,
  CNE_ERR_NO_EVAL_NODES = 7,
  CNE_ERR_CHECKPOINT_FORMAT = 8,
  CNE_ERR_CHECKPOINT_VERSION = 9,
  CNE_ERR_CHECKPOINT_TRUNCATED = 10,
  CNE_ERR_CHECKPOINT_CHECKSUM = 11,
  CNE_ERR_CONTRACT = 12,
  CNE_ERR_INTERNAL = 13
} cne_status;

typedef enum cne_side { CNE_SIDE_CENTER = 0, CNE_SIDE_CONTEXT = 1 } cne_side;

typedef struct cne_config cne_config;
typedef struct cne_dataset cne_dataset;
typedef struct cne_model cne_model;
typedef struct cne_report cne_report;

/* Receives warnings and progress lines from cne_run. */
typedef void (*cne_message_fn)(const char* message, void* user);

CNE_API const char* cne_version(void);
CNE_API const char* cne_status_name(cne_status status);
/* Message of the last failed call on this thread ("" if none). */
CNE_API const char* cne_last_error(void);

/* Configuration. */
CNE_API cne_status cne_config_new(cne_config** out);
CNE_API void cne_config_free(cne_config* config);
/* `source` names the origin for error messages (e.g. "--window"). */
CNE_API cne_status cne_config_set(cne_config* config, const char* key,
                                  const char* value, const char* source);
/* Copies the canonical value, NUL-terminated, into `buf` when it fits;
 * `*needed` receives the size including the terminator. */
CNE_API cne_status cne_config_get(const cne_config* config, const char* key,
                                  char* buf, size_t capacity, size_t* needed);
CNE_API cne_status cne_config_load_file(cne_config* config, const char* path);
/* Applies CNE_SEED when set. */
CNE_API cne_status cne_config_apply_env(cne_config* config);
CNE_API size_t cne_config_key_count(void);
CNE_API const char* cne_config_key_name(size_t index);
CNE_API const char* cne_config_key_help(size_t index);
CNE_API int cne_config_key_is_path(size_t index);
/* "# cne config=<hash> seed=<seed>" without the newline. */
CNE_API cne_status cne_config_header(const cne_config* config, char* buf,
                                     size_t capacity, size_t* needed);

/* Subcommands: build-vocab, walk, train, embed, eval. */
CNE_API int cne_command_valid(const char* command);
CNE_API cne_status cne_run(const cne_config* config, const char* command,
                           cne_message_fn on_message, void* user);

/* Data: the training graph, held-out edges and attributes. */
CNE_API cne_status cne_dataset_load(const cne_config* config,
                                    cne_dataset** out);
CNE_API void cne_dataset_free(cne_dataset* dataset);
CNE_API size_t cne_dataset_node_count(const cne_dataset* dataset);
CNE_API size_t cne_dataset_train_edge_count(const cne_dataset* dataset);
CNE_API size_t cne_dataset_test_edge_count(const cne_dataset* dataset);

/* Models. */
CNE_API cne_status cne_model_train(const cne_config* config,
                                   const cne_dataset* dataset,
                                   cne_model** out);
CNE_API cne_status cne_model_load(const char* path, cne_model** out);
CNE_API cne_status cne_model_save(const cne_model* model, const char* path);
CNE_API void cne_model_free(cne_model* model);
CNE_API size_t cne_model_dim(const cne_model* model);
/* Embeds free text as a node of `node_type` ("" for the default) under the
 * edge type named by `edge_type` ("" for the first). `out` must hold
 * cne_model_dim() floats. */
CNE_API cne_status cne_model_embed_text(const cne_model* model,
                                        const char* text,
                                        const char* node_type,
                                        const char* edge_type, cne_side side,
                                        float* out, size_t capacity);

/* Evaluation. */
CNE_API cne_status cne_evaluate(const cne_model* model,
                                const cne_dataset* dataset,
                                const cne_config* config, cne_report** out);
CNE_API void cne_report_free(cne_report* report);
CNE_API size_t cne_report_k_count(const cne_report* report);
CNE_API cne_status cne_report_metric(const cne_report* report, size_t index,
                                     size_t* k, double* precision,
                                     double* recall);
CNE_API size_t cne_report_node_count(const cne_report* report);
CNE_API size_t cne_report_bucket_count(const cne_report* report);
/* The overflow bucket reports hi = SIZE_MAX. */
CNE_API cne_status cne_report_bucket(const cne_report* report, size_t index,
                                     size_t* lo, size_t* hi, size_t* count);

#ifdef __cplusplus
}
#endif

#endif /* CNE_CNE_H_ */
