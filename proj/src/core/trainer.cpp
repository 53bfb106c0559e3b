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

#include "cne/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

namespace cne {

// ---------------------------------------------------------------------------
// Model state

template <typename T>
std::size_t ModelState<T>::encoder_for(EdgeTypeId edge_type,
                                       const std::string& node_type,
                                       Side side) const {
  require(edge_type < edge_types.size(), "edge type has no encoders");
  const auto& routes = edge_types[edge_type].routes;
  auto it = routes.find(node_type);
  if (it == routes.end()) it = routes.find("");
  require(it != routes.end(), "no encoder route for node type");
  return side == Side::kCenter ? it->second.center : it->second.context;
}

template <typename T>
std::size_t ModelState<T>::output_dim() const {
  return encoders.empty() ? 0 : encoders.front().spec.output_dim();
}

template <typename T>
std::optional<EdgeTypeId> ModelState<T>::find_edge_type(
    const std::string& name) const {
  for (EdgeTypeId t = 0; t < edge_types.size(); ++t)
    if (edge_types[t].name == name) return t;
  return std::nullopt;
}

template <typename T>
ModelState<T> init_model(const ModelLayout& layout, Vocabulary vocab,
                         std::uint64_t seed) {
  if (layout.edge_types.empty())
    throw Error(ErrorKind::kInvalidArgument, "model needs an edge type");
  std::map<std::string, EncoderSpec> specs = layout.node_type_specs;
  specs.emplace("", layout.default_spec);
  for (const auto& [type, spec] : specs) {
    if (spec.token_dim != layout.default_spec.token_dim)
      throw Error(ErrorKind::kInvalidArgument,
                  "encoder for node type '" + type +
                      "' disagrees on token width");
    if (spec.output_dim() != layout.default_spec.output_dim())
      throw Error(ErrorKind::kInvalidArgument,
                  "encoder for node type '" + type +
                      "' disagrees on output width");
  }

  ModelState<T> s;
  s.vocab = std::move(vocab);
  Rng table_rng(derive_seed(seed, 0x7ab1e));
  s.table = init_table<T>(s.vocab.size(), layout.default_spec.token_dim,
                          table_rng);
  s.table_m = Matrix<T>::Zero(s.table.rows(), s.table.cols());
  s.table_v = s.table_m;

  auto add_encoder = [&](const EncoderSpec& spec) {
    Rng rng(derive_seed(seed, 0xe7c0de, s.encoders.size()));
    s.encoders.push_back(init_encoder<T>(spec, rng));
    s.encoder_m.push_back(zero_grads_like(s.encoders.back()));
    s.encoder_v.push_back(zero_grads_like(s.encoders.back()));
    return s.encoders.size() - 1;
  };
  for (const auto& name : layout.edge_types) {
    EdgeTypeEncoders et{name, {}};
    for (const auto& [type, spec] : specs) {
      EncoderRoute route;
      route.center = add_encoder(spec);
      route.context = layout.share_phi ? route.center : add_encoder(spec);
      et.routes.emplace(type, route);
    }
    s.edge_types.push_back(std::move(et));
  }
  return s;
}

// ---------------------------------------------------------------------------
// Gradients

template <typename T>
void Gradients<T>::add(const Gradients& other) {
  for (const auto& [idx, grads] : other.encoders) {
    auto it = encoders.find(idx);
    if (it == encoders.end()) {
      encoders.emplace(idx, grads);
      continue;
    }
    for (std::size_t g = 0; g < grads.size(); ++g) {
      auto& dst = it->second[g];
      auto& src = grads[g];
      dst.input_reset += src.input_reset;
      dst.input_update += src.input_update;
      dst.input_candidate += src.input_candidate;
      dst.hidden_reset += src.hidden_reset;
      dst.hidden_update += src.hidden_update;
      dst.hidden_candidate += src.hidden_candidate;
    }
  }
  for (const auto& [id, row] : other.rows) {
    auto it = rows.find(id);
    if (it == rows.end())
      rows.emplace(id, row);
    else
      it->second += row;
  }
}

template <typename T>
void Gradients<T>::scale(T factor) {
  for (auto& [idx, grads] : encoders)
    for (auto& g : grads)
      g.for_each([&](const char*, Matrix<T>& m) { m *= factor; });
  for (auto& [id, row] : rows) row *= factor;
}

template <typename T>
bool Gradients<T>::finite() const {
  bool ok = true;
  for (const auto& [idx, grads] : encoders)
    for (const auto& g : grads)
      g.for_each([&](const char*, const Matrix<T>& m) {
        ok = ok && m.allFinite();
      });
  for (const auto& [id, row] : rows) ok = ok && row.allFinite();
  return ok;
}

// ---------------------------------------------------------------------------
// Score and loss

namespace {

// Sequential sums: the evaluation oracle and the symmetry property rely on
// this exact operation order.
template <typename T>
void dot_and_norms(const Vector<T>& x, const Vector<T>& y, T* dot, T* nx2,
                   T* ny2) {
  T d = 0, a = 0, b = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    d += x[i] * y[i];
    a += x[i] * x[i];
    b += y[i] * y[i];
  }
  *dot = d;
  *nx2 = a;
  *ny2 = b;
}

}  // namespace

template <typename T>
T cosine(const Vector<T>& x, const Vector<T>& y) {
  require(x.size() == y.size(), "cosine of vectors with different widths");
  T dot, nx2, ny2;
  dot_and_norms(x, y, &dot, &nx2, &ny2);
  const T eps = static_cast<T>(kCosineEpsilon);
  return dot / (std::max(std::sqrt(nx2), eps) * std::max(std::sqrt(ny2), eps));
}

template <typename T>
void cosine_backward(const Vector<T>& x, const Vector<T>& y, T upstream,
                     Vector<T>& dx, Vector<T>& dy) {
  T dot, nx2, ny2;
  dot_and_norms(x, y, &dot, &nx2, &ny2);
  const T eps = static_cast<T>(kCosineEpsilon);
  const T nx = std::sqrt(nx2), ny = std::sqrt(ny2);
  const T sx = std::max(nx, eps), sy = std::max(ny, eps);
  const T inv = T(1) / (sx * sy);
  // d/dx [dot / (sx sy)] = y / (sx sy) - dot / (sx^2 sy) * dsx/dx, where
  // dsx/dx = x / nx above the guard and 0 below it.
  dx += upstream * inv * y;
  dy += upstream * inv * x;
  if (nx > eps) dx -= upstream * dot * inv / (sx * nx) * x;
  if (ny > eps) dy -= upstream * dot * inv / (sy * ny) * y;
}

double hinge_loss(double pos, std::span<const double> negs, double margin) {
  double loss = 0.0;
  for (double neg : negs) loss += std::max(0.0, margin - pos + neg);
  return loss;
}

namespace {

template <typename T>
struct Encoded {
  std::size_t encoder = 0;
  Vector<T> value;
  EncodeTrace<T> trace;
};

template <typename T>
Encoded<T> encode(const ModelState<T>& s, EdgeTypeId edge_type, NodeId v,
                  Side side, const FeatureStore& features, bool keep_trace) {
  Encoded<T> e;
  e.encoder = s.encoder_for(edge_type, features.node_type(v), side);
  e.value = compose(s.encoders[e.encoder], s.table, features.at(v),
                    keep_trace ? &e.trace : nullptr);
  return e;
}

template <typename T>
void backprop(const ModelState<T>& s, const Encoded<T>& e,
              const Vector<T>& grad, Gradients<T>& out) {
  const auto& enc = s.encoders[e.encoder];
  std::vector<GruParams<T>> none;
  std::vector<GruParams<T>>* bufs = &none;
  if (!enc.grus.empty()) {
    auto it = out.encoders.find(e.encoder);
    if (it == out.encoders.end())
      it = out.encoders.emplace(e.encoder, zero_grads_like(enc)).first;
    bufs = &it->second;
  }
  compose_backward(enc, s.table, e.trace, grad, *bufs, out.rows);
}

template <typename T>
void check_example(const ModelState<T>& s, const TrainingExample& ex,
                   const FeatureStore& features) {
  require(ex.edge_type < s.edge_types.size(),
          "example edge type has no encoders");
  // Surface missing attributes before any work, naming the node.
  features.at(ex.center);
  features.at(ex.positive);
  for (NodeId n : ex.negatives) features.at(n);
}

}  // namespace

template <typename T>
T example_loss(const ModelState<T>& s, const TrainingExample& ex,
               const FeatureStore& features, T margin) {
  check_example(s, ex, features);
  const auto v = encode(s, ex.edge_type, ex.center, Side::kCenter, features,
                        false);
  const auto u = encode(s, ex.edge_type, ex.positive, Side::kContext,
                        features, false);
  const T pos = cosine(v.value, u.value);
  T loss = 0;
  for (NodeId n : ex.negatives) {
    const auto neg = encode(s, ex.edge_type, n, Side::kContext, features,
                            false);
    loss += std::max(T(0), margin - pos + cosine(v.value, neg.value));
  }
  return loss;
}

template <typename T>
T example_gradients(const ModelState<T>& s, const TrainingExample& ex,
                    const FeatureStore& features, T margin,
                    Gradients<T>& grads) {
  check_example(s, ex, features);
  const auto v = encode(s, ex.edge_type, ex.center, Side::kCenter, features,
                        true);
  const auto u = encode(s, ex.edge_type, ex.positive, Side::kContext,
                        features, true);
  const T pos = cosine(v.value, u.value);

  std::vector<Encoded<T>> negs;
  negs.reserve(ex.negatives.size());
  T loss = 0;
  std::size_t active = 0;
  std::vector<bool> is_active;
  for (NodeId n : ex.negatives) {
    negs.push_back(encode(s, ex.edge_type, n, Side::kContext, features, true));
    const T term = margin - pos + cosine(v.value, negs.back().value);
    is_active.push_back(term > T(0));
    if (term > T(0)) {
      loss += term;
      ++active;
    }
  }
  if (active == 0) return loss;

  Vector<T> dv = Vector<T>::Zero(v.value.size());
  Vector<T> du = Vector<T>::Zero(u.value.size());
  cosine_backward(v.value, u.value, -static_cast<T>(active), dv, du);
  backprop(s, u, du, grads);
  for (std::size_t k = 0; k < negs.size(); ++k) {
    if (!is_active[k]) continue;
    Vector<T> dn = Vector<T>::Zero(negs[k].value.size());
    cosine_backward(v.value, negs[k].value, T(1), dv, dn);
    backprop(s, negs[k], dn, grads);
  }
  backprop(s, v, dv, grads);
  return loss;
}

template <typename T>
double mean_loss(const ModelState<T>& s,
                 std::span<const TrainingExample> examples,
                 const FeatureStore& features, T margin) {
  if (examples.empty()) return 0.0;
  double total = 0.0;
  for (const auto& ex : examples)
    total += static_cast<double>(example_loss(s, ex, features, margin));
  return total / static_cast<double>(examples.size());
}

// ---------------------------------------------------------------------------
// Adam

namespace {

template <typename Dense, typename Grad>
void adam_update(Dense&& param, Dense&& m, Dense&& v, const Grad& g,
                 double lr, double b1, double b2, double eps, double bc1,
                 double bc2) {
  using T = typename std::decay_t<Dense>::Scalar;
  for (Eigen::Index i = 0; i < g.size(); ++i) {
    const T gi = g.data()[i];
    T& mi = m.data()[i];
    T& vi = v.data()[i];
    mi = static_cast<T>(b1) * mi + static_cast<T>(1 - b1) * gi;
    vi = static_cast<T>(b2) * vi + static_cast<T>(1 - b2) * gi * gi;
    const T m_hat = mi / static_cast<T>(bc1);
    const T v_hat = vi / static_cast<T>(bc2);
    param.data()[i] -=
        static_cast<T>(lr) * m_hat / (std::sqrt(v_hat) + static_cast<T>(eps));
  }
}

}  // namespace

template <typename T>
void adam_step(ModelState<T>& s, const Gradients<T>& grads,
               const AdamOptions& o) {
  if (!grads.finite())
    throw Error(ErrorKind::kNumeric, "non-finite gradient; update skipped");
  for (const auto& [idx, g] : grads.encoders)
    require(idx < s.encoders.size() && g.size() == s.encoders[idx].grus.size(),
            "gradient does not match the model's encoders");
  for (const auto& [id, row] : grads.rows)
    require(id >= 0 && id < s.table.rows() && row.size() == s.table.cols(),
            "gradient row does not match the token table");

  const std::uint64_t t = ++s.step;
  const double bc1 = 1.0 - std::pow(o.beta1, static_cast<double>(t));
  const double bc2 = 1.0 - std::pow(o.beta2, static_cast<double>(t));

  for (const auto& [idx, g] : grads.encoders) {
    auto& enc = s.encoders[idx];
    for (std::size_t k = 0; k < g.size(); ++k) {
      auto& p = enc.grus[k];
      auto& m = s.encoder_m[idx][k];
      auto& v = s.encoder_v[idx][k];
      auto step = [&](Matrix<T>& pp, Matrix<T>& mm, Matrix<T>& vv,
                      const Matrix<T>& gg) {
        adam_update(pp, mm, vv, gg, o.lr, o.beta1, o.beta2, o.epsilon, bc1,
                    bc2);
      };
      step(p.input_reset, m.input_reset, v.input_reset, g[k].input_reset);
      step(p.input_update, m.input_update, v.input_update, g[k].input_update);
      step(p.input_candidate, m.input_candidate, v.input_candidate,
           g[k].input_candidate);
      step(p.hidden_reset, m.hidden_reset, v.hidden_reset, g[k].hidden_reset);
      step(p.hidden_update, m.hidden_update, v.hidden_update,
           g[k].hidden_update);
      step(p.hidden_candidate, m.hidden_candidate, v.hidden_candidate,
           g[k].hidden_candidate);
    }
  }
  for (const auto& [id, row] : grads.rows) {
    adam_update(s.table.row(id), s.table_m.row(id), s.table_v.row(id), row,
                o.lr, o.beta1, o.beta2, o.epsilon, bc1, bc2);
  }
}

// ---------------------------------------------------------------------------
// Training loop

namespace {

// Examples per gradient chunk. Chunks are the unit of parallel work and are
// reduced in index order, so results do not depend on the worker count.
constexpr std::size_t kChunk = 16;

struct BatchRef {
  std::size_t stream = 0;
  std::size_t index = 0;
};

// Splits `total` batches across streams proportionally to `weights` by
// largest remainder.
std::vector<std::size_t> allocate(std::size_t total,
                                  const std::vector<double>& weights) {
  const double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
  std::vector<std::size_t> alloc(weights.size(), 0);
  if (sum <= 0.0) return alloc;
  std::vector<std::pair<double, std::size_t>> rem;
  std::size_t used = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const double exact = static_cast<double>(total) * weights[i] / sum;
    alloc[i] = static_cast<std::size_t>(std::floor(exact));
    used += alloc[i];
    rem.emplace_back(exact - std::floor(exact), i);
  }
  std::stable_sort(rem.begin(), rem.end(), [](const auto& a, const auto& b) {
    return a.first > b.first;
  });
  for (std::size_t i = 0; used < total && i < rem.size(); ++i, ++used)
    ++alloc[rem[i].second];
  return alloc;
}

// Smooth weighted round-robin over the allocated batch counts.
std::vector<BatchRef> interleave(const std::vector<std::size_t>& alloc) {
  std::vector<BatchRef> order;
  std::vector<long long> current(alloc.size(), 0);
  std::vector<std::size_t> taken(alloc.size(), 0);
  const std::size_t total = std::accumulate(alloc.begin(), alloc.end(),
                                            std::size_t{0});
  while (order.size() < total) {
    long long live = 0;
    for (std::size_t i = 0; i < alloc.size(); ++i) {
      if (taken[i] == alloc[i]) continue;
      current[i] += static_cast<long long>(alloc[i]);
      live += static_cast<long long>(alloc[i]);
    }
    std::size_t pick = alloc.size();
    for (std::size_t i = 0; i < alloc.size(); ++i) {
      if (taken[i] == alloc[i]) continue;
      if (pick == alloc.size() || current[i] > current[pick]) pick = i;
    }
    current[pick] -= live;
    order.push_back({pick, taken[pick]++});
  }
  return order;
}

template <typename T>
T batch_gradients(const ModelState<T>& s,
                  const std::vector<const TrainingExample*>& batch,
                  const FeatureStore& features, T margin, std::size_t workers,
                  Gradients<T>& out) {
  const std::size_t chunks = (batch.size() + kChunk - 1) / kChunk;
  std::vector<Gradients<T>> grads(chunks);
  std::vector<T> losses(chunks, T(0));
  std::vector<std::exception_ptr> errors(chunks);
  auto run = [&](std::size_t c) {
    try {
      const std::size_t lo = c * kChunk;
      const std::size_t hi = std::min(batch.size(), lo + kChunk);
      for (std::size_t i = lo; i < hi; ++i)
        losses[c] += example_gradients(s, *batch[i], features, margin,
                                       grads[c]);
    } catch (...) {
      errors[c] = std::current_exception();
    }
  };
  workers = std::max<std::size_t>(1, std::min(workers, chunks));
  if (workers == 1) {
    for (std::size_t c = 0; c < chunks; ++c) run(c);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t c = w; c < chunks; c += workers) run(c);
      });
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  T loss = 0;
  for (std::size_t c = 0; c < chunks; ++c) {
    out.add(grads[c]);
    loss += losses[c];
  }
  return loss;
}

}  // namespace

template <typename T>
TrainReport train_model(ModelState<T>& s, const TrainConfig& config,
                        const Graph& g, const FeatureStore& features,
                        const std::function<void(const EpochLoss&)>& on_epoch) {
  if (config.batch == 0 || config.walk_length == 0 || config.window == 0 ||
      config.negatives == 0)
    throw Error(ErrorKind::kInvalidArgument,
                "batch, walk length, window and negatives must be positive");
  if (!(config.margin > 0.0) || !(config.lr > 0.0))
    throw Error(ErrorKind::kInvalidArgument,
                "margin and learning rate must be positive");
  if (features.size() < g.node_count())
    throw Error(ErrorKind::kMissingAttributes,
                "feature store does not cover every graph node");

  // Graph edge type -> model edge type.
  struct Stream {
    EdgeTypeId graph_type;
    EdgeTypeId model_type;
    std::string name;
    double weight;
    std::vector<TrainingExample> examples;
  };
  std::vector<Stream> streams;
  for (EdgeTypeId t = 0; t < g.edge_type_count(); ++t) {
    const std::string& name = g.edge_type_name(t);
    if (!config.train_edge_types.empty() &&
        !config.train_edge_types.contains(name))
      continue;
    auto model_type = s.find_edge_type(name);
    if (!model_type)
      throw Error(ErrorKind::kInvalidArgument,
                  "model has no encoders for edge type '" + name + "'");
    double weight = 0.0;
    if (auto it = config.edge_type_weights.find(name);
        it != config.edge_type_weights.end()) {
      weight = it->second;
    } else {
      for (const Edge& e : g.edges()) weight += e.type == t ? 1.0 : 0.0;
    }
    streams.push_back({t, *model_type, name, weight, {}});
  }

  const AdamOptions adam{config.lr};
  const T margin = static_cast<T>(config.margin);
  TrainReport report;
  for (std::size_t epoch = 1; epoch <= config.epochs; ++epoch) {
    std::size_t natural = 0;
    std::vector<double> weights;
    for (auto& st : streams) {
      StreamParams p;
      p.walks_per_node = config.walks_per_node;
      p.walk_length = config.walk_length;
      p.window = config.window;
      p.negatives = config.negatives;
      p.edge_type = st.graph_type;
      p.seed = derive_seed(config.seed, epoch);
      p.workers = config.workers;
      st.examples = epoch_stream(g, p);
      for (auto& ex : st.examples) ex.edge_type = st.model_type;
      natural += (st.examples.size() + config.batch - 1) / config.batch;
      weights.push_back(st.examples.empty() ? 0.0 : st.weight);
    }
    const auto alloc = streams.size() == 1
                           ? std::vector<std::size_t>{natural}
                           : allocate(natural, weights);

    std::vector<double> loss_sum(streams.size(), 0.0);
    std::vector<std::size_t> seen(streams.size(), 0);
    for (const BatchRef& ref : interleave(alloc)) {
      const auto& ex = streams[ref.stream].examples;
      const std::size_t start = ref.index * config.batch;
      std::vector<const TrainingExample*> batch;
      if (start < ex.size()) {
        for (std::size_t i = start; i < std::min(ex.size(), start + config.batch);
             ++i)
          batch.push_back(&ex[i]);
      } else {
        for (std::size_t i = 0; i < config.batch; ++i)
          batch.push_back(&ex[(start + i) % ex.size()]);
      }

      Gradients<T> grads;
      const T loss = batch_gradients(s, batch, features, margin,
                                     config.workers, grads);
      for (std::size_t idx : config.frozen_encoders) grads.encoders.erase(idx);
      grads.scale(T(1) / static_cast<T>(batch.size()));
      adam_step(s, grads, adam);

      loss_sum[ref.stream] += static_cast<double>(loss);
      seen[ref.stream] += batch.size();
      report.examples += batch.size();
      ++report.steps;
    }
    for (std::size_t i = 0; i < streams.size(); ++i) {
      EpochLoss entry{epoch, streams[i].name,
                      seen[i] ? loss_sum[i] / static_cast<double>(seen[i])
                              : 0.0,
                      seen[i]};
      report.losses.push_back(entry);
      if (on_epoch) on_epoch(entry);
    }
  }
  return report;
}

template <typename T>
ModelState<T> train(const TrainConfig& config, const Graph& g,
                    const FeatureStore& features, const Vocabulary& vocab,
                    const EncoderSpec& default_spec,
                    const std::map<std::string, EncoderSpec>& node_type_specs,
                    TrainReport* report) {
  ModelLayout layout;
  layout.edge_types.assign(g.edge_types().begin(), g.edge_types().end());
  if (layout.edge_types.empty()) layout.edge_types.push_back("default");
  layout.default_spec = default_spec;
  layout.default_spec.token_dim = config.token_dim;
  layout.default_spec.hidden_dim = config.hidden_dim;
  for (auto [type, spec] : node_type_specs) {
    spec.token_dim = config.token_dim;
    spec.hidden_dim = config.hidden_dim;
    layout.node_type_specs.emplace(type, spec);
  }
  layout.share_phi = config.share_phi;
  auto state = init_model<T>(layout, vocab, config.seed);
  auto r = train_model(state, config, g, features);
  if (report) *report = std::move(r);
  return state;
}

#define CNE_INSTANTIATE_TRAINER(T)                                             \
  template struct ModelState<T>;                                               \
  template struct Gradients<T>;                                                \
  template ModelState<T> init_model<T>(const ModelLayout&, Vocabulary,         \
                                       std::uint64_t);                         \
  template T cosine(const Vector<T>&, const Vector<T>&);                       \
  template void cosine_backward(const Vector<T>&, const Vector<T>&, T,         \
                                Vector<T>&, Vector<T>&);                       \
  template T example_gradients(const ModelState<T>&, const TrainingExample&,   \
                               const FeatureStore&, T, Gradients<T>&);         \
  template T example_loss(const ModelState<T>&, const TrainingExample&,        \
                          const FeatureStore&, T);                             \
  template double mean_loss(const ModelState<T>&,                              \
                            std::span<const TrainingExample>,                  \
                            const FeatureStore&, T);                           \
  template void adam_step(ModelState<T>&, const Gradients<T>&,                 \
                          const AdamOptions&);                                 \
  template TrainReport train_model(ModelState<T>&, const TrainConfig&,         \
                                   const Graph&, const FeatureStore&,          \
                                   const std::function<void(const EpochLoss&)>&); \
  template ModelState<T> train<T>(const TrainConfig&, const Graph&,            \
                                  const FeatureStore&, const Vocabulary&,      \
                                  const EncoderSpec&,                          \
                                  const std::map<std::string, EncoderSpec>&,   \
                                  TrainReport*);

CNE_INSTANTIATE_TRAINER(float)
CNE_INSTANTIATE_TRAINER(double)

#undef CNE_INSTANTIATE_TRAINER

}  // namespace cne
