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

// Siamese max-margin training. For an example (v, u, negatives) under edge
// type e the loss is
//
//   sum_k max(0, margin - cos(phi1(v), phi2(u)) + cos(phi1(v), phi2(n_k)))
//
// where phi1/phi2 are the center/context encoders registered for e. All
// encoders read one shared token table.

#ifndef CNE_TRAINER_HPP_
#define CNE_TRAINER_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cne/common.hpp"
#include "cne/encoders.hpp"
#include "cne/graph.hpp"
#include "cne/sampler.hpp"
#include "cne/text.hpp"

namespace cne {

inline constexpr double kCosineEpsilon = 1e-12;

/// Which tower of the siamese pair encodes a node.
enum class Side { kCenter = 0, kContext = 1 };

/// Encoder indices used for one (edge type, node type).
struct EncoderRoute {
  std::size_t center = 0;
  std::size_t context = 0;

  friend bool operator==(const EncoderRoute&, const EncoderRoute&) = default;
};

/// Encoders registered for one edge type; the "" node type is the default.
struct EdgeTypeEncoders {
  std::string name;
  std::map<std::string, EncoderRoute> routes;

  friend bool operator==(const EdgeTypeEncoders&,
                         const EdgeTypeEncoders&) = default;
};

/// How many encoders to create and how nodes reach them.
struct ModelLayout {
  std::vector<std::string> edge_types{"default"};
  EncoderSpec default_spec;
  std::map<std::string, EncoderSpec> node_type_specs;
  bool share_phi = false;
};

template <typename T>
struct ModelState {
  Vocabulary vocab;
  Matrix<T> table;
  std::vector<Encoder<T>> encoders;
  std::vector<EdgeTypeEncoders> edge_types;

  // Adam moments, shaped like `table` and `encoders`.
  Matrix<T> table_m, table_v;
  std::vector<std::vector<GruParams<T>>> encoder_m, encoder_v;
  std::uint64_t step = 0;

  std::size_t encoder_for(EdgeTypeId edge_type, const std::string& node_type,
                          Side side) const;
  std::size_t output_dim() const;
  std::optional<EdgeTypeId> find_edge_type(const std::string& name) const;

  friend bool operator==(const ModelState& a, const ModelState& b) {
    return a.vocab == b.vocab && same_tensor(a.table, b.table) &&
           a.encoders == b.encoders && a.edge_types == b.edge_types &&
           same_tensor(a.table_m, b.table_m) &&
           same_tensor(a.table_v, b.table_v) && a.encoder_m == b.encoder_m &&
           a.encoder_v == b.encoder_v && a.step == b.step;
  }
};

/// Builds encoders per the layout with fresh parameters and zeroed moments.
/// Throws kInvalidArgument when encoders would disagree on widths.
template <typename T>
ModelState<T> init_model(const ModelLayout& layout, Vocabulary vocab,
                         std::uint64_t seed);

/// Sparse gradient set: dense per touched encoder, per row for the table.
template <typename T>
struct Gradients {
  std::map<std::size_t, std::vector<GruParams<T>>> encoders;
  RowGrads<T> rows;

  void add(const Gradients& other);
  void scale(T factor);
  bool finite() const;
  bool empty() const { return encoders.empty() && rows.empty(); }
};

template <typename T>
T cosine(const Vector<T>& x, const Vector<T>& y);

/// Adds dcos/dx * upstream to dx and dcos/dy * upstream to dy.
template <typename T>
void cosine_backward(const Vector<T>& x, const Vector<T>& y, T upstream,
                     Vector<T>& dx, Vector<T>& dy);

/// sum_k max(0, margin - pos + negs[k]).
double hinge_loss(double pos, std::span<const double> negs, double margin);

/// Loss of one example; its gradient is accumulated into `grads`. Terms at
/// or below zero contribute nothing (subgradient 0 at the kink).
template <typename T>
T example_gradients(const ModelState<T>& state, const TrainingExample& ex,
                    const FeatureStore& features, T margin,
                    Gradients<T>& grads);

/// Loss only, without gradients.
template <typename T>
T example_loss(const ModelState<T>& state, const TrainingExample& ex,
               const FeatureStore& features, T margin);

/// Mean example loss over `examples`.
template <typename T>
double mean_loss(const ModelState<T>& state,
                 std::span<const TrainingExample> examples,
                 const FeatureStore& features, T margin);

struct AdamOptions {
  double lr = 8e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

/// One bias-corrected Adam update over the tensors present in `grads`.
/// Table rows absent from `grads` keep their moments untouched. A
/// non-finite gradient raises kNumeric and leaves `state` unchanged.
template <typename T>
void adam_step(ModelState<T>& state, const Gradients<T>& grads,
               const AdamOptions& options);

struct TrainConfig {
  std::size_t walk_length = 20;
  std::size_t window = 2;
  std::size_t negatives = 4;
  std::size_t walks_per_node = 10;
  double margin = 1.0;
  std::size_t token_dim = 256;
  std::size_t hidden_dim = 512;
  double lr = 8e-4;
  std::size_t batch = 256;
  std::size_t epochs = 5;
  std::uint64_t seed = 1;
  bool share_phi = false;
  // Relative batch share per edge type; unlisted types weigh their edge
  // count.
  std::map<std::string, double> edge_type_weights;
  std::size_t workers = 1;
  // Restricts training to these edge types (all when empty).
  std::set<std::string> train_edge_types;
  // Encoder indices that never receive updates.
  std::set<std::size_t> frozen_encoders;
};

struct EpochLoss {
  std::size_t epoch = 0;
  std::string edge_type;
  double mean_loss = 0.0;
  std::size_t examples = 0;
};

struct TrainReport {
  std::vector<EpochLoss> losses;
  std::size_t steps = 0;
  std::size_t examples = 0;
};

/// Runs `config.epochs` passes over random-walk examples for every trained
/// edge type, interleaving batches across edge types by weight. Batch
/// gradients are the mean over examples; results do not depend on
/// `config.workers`.
template <typename T>
TrainReport train_model(ModelState<T>& state, const TrainConfig& config,
                        const Graph& g, const FeatureStore& features,
                        const std::function<void(const EpochLoss&)>& on_epoch =
                            {});

/// Convenience: layout from `config` + `specs`, init, train.
template <typename T>
ModelState<T> train(const TrainConfig& config, const Graph& g,
                    const FeatureStore& features, const Vocabulary& vocab,
                    const EncoderSpec& default_spec,
                    const std::map<std::string, EncoderSpec>& node_type_specs =
                        {},
                    TrainReport* report = nullptr);

}  // namespace cne

#endif  // CNE_TRAINER_HPP_
