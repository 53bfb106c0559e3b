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

#include "cne/encoders.hpp"

#include <cmath>

namespace cne {

std::string_view to_string(EncoderKind kind) {
  switch (kind) {
    case EncoderKind::kSum: return "sum";
    case EncoderKind::kMean: return "mean";
    case EncoderKind::kGru: return "gru";
    case EncoderKind::kMultiGruSum: return "multi_gru_sum";
  }
  return "?";
}

std::optional<EncoderKind> parse_encoder_kind(std::string_view name) {
  for (auto k : {EncoderKind::kSum, EncoderKind::kMean, EncoderKind::kGru,
                 EncoderKind::kMultiGruSum})
    if (to_string(k) == name) return k;
  return std::nullopt;
}

std::size_t EncoderSpec::output_dim() const {
  return kind == EncoderKind::kSum || kind == EncoderKind::kMean ? token_dim
                                                                 : hidden_dim;
}

std::size_t EncoderSpec::input_count() const {
  return kind == EncoderKind::kMultiGruSum ? sequences : 1;
}

std::size_t EncoderSpec::gru_count() const {
  switch (kind) {
    case EncoderKind::kGru: return 1;
    case EncoderKind::kMultiGruSum: return shared_sequences ? 1 : sequences;
    default: return 0;
  }
}

template <typename T>
GruParams<T> GruParams<T>::zeros(std::size_t token_dim,
                                 std::size_t hidden_dim) {
  const auto d = static_cast<Eigen::Index>(token_dim);
  const auto h = static_cast<Eigen::Index>(hidden_dim);
  GruParams p;
  p.input_reset = Matrix<T>::Zero(h, d);
  p.input_update = Matrix<T>::Zero(h, d);
  p.input_candidate = Matrix<T>::Zero(h, d);
  p.hidden_reset = Matrix<T>::Zero(h, h);
  p.hidden_update = Matrix<T>::Zero(h, h);
  p.hidden_candidate = Matrix<T>::Zero(h, h);
  return p;
}

namespace {

template <typename T>
Vector<T> sigmoid(const Vector<T>& x) {
  return x.unaryExpr([](T v) { return T(1) / (T(1) + std::exp(-v)); });
}

template <typename T>
Vector<T> tanh_vec(const Vector<T>& x) {
  return x.unaryExpr([](T v) { return std::tanh(v); });
}

template <typename T>
void check_ids(const Matrix<T>& table, std::span<const TokenId> ids) {
  require(!ids.empty(), "encoder input sequence is empty");
  for (TokenId id : ids)
    require(id >= 0 && id < table.rows(), "token id outside the table");
}

template <typename T>
void add_row(RowGrads<T>& rows, TokenId id, const Vector<T>& g) {
  auto it = rows.find(id);
  if (it == rows.end())
    rows.emplace(id, g);
  else
    it->second += g;
}

}  // namespace

template <typename T>
Vector<T> gru_forward(const GruParams<T>& p, const Matrix<T>& table,
                      std::span<const TokenId> ids, GruTrace<T>* trace) {
  check_ids(table, ids);
  require(static_cast<Eigen::Index>(p.token_dim()) == table.cols(),
          "GRU input width does not match the token table");
  const auto h = static_cast<Eigen::Index>(p.hidden_dim());
  Vector<T> state = Vector<T>::Zero(h);
  if (trace) {
    trace->ids.assign(ids.begin(), ids.end());
    trace->reset.clear();
    trace->update.clear();
    trace->candidate.clear();
    trace->hidden.assign(1, state);
  }
  for (TokenId id : ids) {
    const Vector<T> x = table.row(id).transpose();
    Vector<T> r = sigmoid<T>(p.input_reset * x + p.hidden_reset * state);
    Vector<T> z = sigmoid<T>(p.input_update * x + p.hidden_update * state);
    Vector<T> c = tanh_vec<T>(p.input_candidate * x +
                              p.hidden_candidate * r.cwiseProduct(state));
    state = (Vector<T>::Ones(h) - z).cwiseProduct(state) + z.cwiseProduct(c);
    if (trace) {
      trace->reset.push_back(std::move(r));
      trace->update.push_back(std::move(z));
      trace->candidate.push_back(std::move(c));
      trace->hidden.push_back(state);
    }
  }
  return state;
}

template <typename T>
void gru_backward(const GruParams<T>& p, const Matrix<T>& table,
                  const GruTrace<T>& trace, const Vector<T>& grad_out,
                  GruParams<T>& grad, RowGrads<T>& rows) {
  const auto h = static_cast<Eigen::Index>(p.hidden_dim());
  const std::size_t n = trace.ids.size();
  require(n > 0 && trace.hidden.size() == n + 1 && trace.reset.size() == n,
          "GRU trace does not match a forward pass");
  require(grad_out.size() == h, "GRU output gradient has the wrong width");
  require(grad.hidden_dim() == p.hidden_dim() &&
              grad.token_dim() == p.token_dim(),
          "GRU gradient buffer has the wrong shape");

  const Vector<T> ones = Vector<T>::Ones(h);
  Vector<T> dh = grad_out;
  for (std::size_t t = n; t-- > 0;) {
    const TokenId id = trace.ids[t];
    const Vector<T> x = table.row(id).transpose();
    const Vector<T>& prev = trace.hidden[t];
    const Vector<T>& r = trace.reset[t];
    const Vector<T>& z = trace.update[t];
    const Vector<T>& c = trace.candidate[t];

    Vector<T> d_prev = dh.cwiseProduct(ones - z);
    const Vector<T> dz = dh.cwiseProduct(c - prev);
    const Vector<T> dc = dh.cwiseProduct(z);

    // candidate: c = tanh(W x + U (r * prev))
    const Vector<T> dc_pre = dc.cwiseProduct(ones - c.cwiseProduct(c));
    const Vector<T> gated = r.cwiseProduct(prev);
    grad.input_candidate.noalias() += dc_pre * x.transpose();
    grad.hidden_candidate.noalias() += dc_pre * gated.transpose();
    Vector<T> dx = p.input_candidate.transpose() * dc_pre;
    const Vector<T> d_gated = p.hidden_candidate.transpose() * dc_pre;
    const Vector<T> dr = d_gated.cwiseProduct(prev);
    d_prev += d_gated.cwiseProduct(r);

    // update gate
    const Vector<T> dz_pre = dz.cwiseProduct(z.cwiseProduct(ones - z));
    grad.input_update.noalias() += dz_pre * x.transpose();
    grad.hidden_update.noalias() += dz_pre * prev.transpose();
    dx.noalias() += p.input_update.transpose() * dz_pre;
    d_prev.noalias() += p.hidden_update.transpose() * dz_pre;

    // reset gate
    const Vector<T> dr_pre = dr.cwiseProduct(r.cwiseProduct(ones - r));
    grad.input_reset.noalias() += dr_pre * x.transpose();
    grad.hidden_reset.noalias() += dr_pre * prev.transpose();
    dx.noalias() += p.input_reset.transpose() * dr_pre;
    d_prev.noalias() += p.hidden_reset.transpose() * dr_pre;

    add_row(rows, id, dx);
    dh = std::move(d_prev);
  }
}

template <typename T>
Vector<T> pool_forward(EncoderKind kind, const Matrix<T>& table,
                       std::span<const TokenId> ids) {
  require(kind == EncoderKind::kSum || kind == EncoderKind::kMean,
          "pool_forward needs a pooling kind");
  check_ids(table, ids);
  Vector<T> out = Vector<T>::Zero(table.cols());
  for (TokenId id : ids) out += table.row(id).transpose();
  if (kind == EncoderKind::kMean) out /= static_cast<T>(ids.size());
  return out;
}

template <typename T>
void pool_backward(EncoderKind kind, std::span<const TokenId> ids,
                   const Vector<T>& grad_out, RowGrads<T>& rows) {
  require(!ids.empty(), "encoder input sequence is empty");
  const Vector<T> g = kind == EncoderKind::kMean
                          ? Vector<T>(grad_out / static_cast<T>(ids.size()))
                          : grad_out;
  for (TokenId id : ids) add_row(rows, id, g);
}

template <typename T>
Vector<T> compose(const Encoder<T>& enc, const Matrix<T>& table,
                  const NodeInput& input, EncodeTrace<T>* trace) {
  const EncoderSpec& spec = enc.spec;
  require(input.size() == spec.input_count(),
          "encoder received the wrong number of input sequences");
  require(enc.grus.size() == spec.gru_count(),
          "encoder parameters do not match its spec");
  if (trace) {
    trace->inputs = input;
    trace->grus.clear();
  }
  switch (spec.kind) {
    case EncoderKind::kSum:
    case EncoderKind::kMean:
      return pool_forward(spec.kind, table, std::span(input.front()));
    case EncoderKind::kGru: {
      GruTrace<T>* t = trace ? &trace->grus.emplace_back() : nullptr;
      return gru_forward(enc.grus.front(), table, std::span(input.front()), t);
    }
    case EncoderKind::kMultiGruSum: {
      Vector<T> sum = Vector<T>::Zero(spec.hidden_dim);
      for (std::size_t i = 0; i < input.size(); ++i) {
        const auto& params = enc.grus[spec.shared_sequences ? 0 : i];
        GruTrace<T>* t = trace ? &trace->grus.emplace_back() : nullptr;
        sum += gru_forward(params, table, std::span(input[i]), t);
      }
      return sum;
    }
  }
  throw ContractViolation("unknown encoder kind");
}

template <typename T>
void compose_backward(const Encoder<T>& enc, const Matrix<T>& table,
                      const EncodeTrace<T>& trace, const Vector<T>& grad_out,
                      std::vector<GruParams<T>>& grad_grus,
                      RowGrads<T>& rows) {
  const EncoderSpec& spec = enc.spec;
  require(grad_grus.size() == enc.grus.size(),
          "gradient buffers do not match the encoder");
  require(static_cast<std::size_t>(grad_out.size()) == spec.output_dim(),
          "encoder output gradient has the wrong width");
  switch (spec.kind) {
    case EncoderKind::kSum:
    case EncoderKind::kMean:
      pool_backward(spec.kind, std::span<const TokenId>(trace.inputs.front()),
                    grad_out, rows);
      return;
    case EncoderKind::kGru:
    case EncoderKind::kMultiGruSum:
      require(trace.grus.size() == spec.input_count(),
              "encoder trace does not match a forward pass");
      for (std::size_t i = 0; i < trace.grus.size(); ++i) {
        const std::size_t k = spec.shared_sequences ? 0 : i;
        gru_backward(enc.grus[k], table, trace.grus[i], grad_out,
                     grad_grus[k], rows);
      }
      return;
  }
}

template <typename T>
Matrix<T> init_table(std::size_t vocab_size, std::size_t token_dim, Rng& rng) {
  require(vocab_size >= 1 && token_dim >= 1, "table dims must be positive");
  const double bound = 0.5 / static_cast<double>(token_dim);
  Matrix<T> table(static_cast<Eigen::Index>(vocab_size),
                  static_cast<Eigen::Index>(token_dim));
  for (Eigen::Index i = 0; i < table.size(); ++i)
    table.data()[i] = static_cast<T>(rng.uniform_real(-bound, bound));
  return table;
}

template <typename T>
Encoder<T> init_encoder(const EncoderSpec& spec, Rng& rng) {
  require(spec.token_dim >= 1 && spec.hidden_dim >= 1,
          "encoder dims must be positive");
  require(spec.kind != EncoderKind::kMultiGruSum || spec.sequences >= 1,
          "multi_gru_sum needs at least one sequence");
  Encoder<T> enc{spec, {}};
  for (std::size_t g = 0; g < spec.gru_count(); ++g) {
    auto p = GruParams<T>::zeros(spec.token_dim, spec.hidden_dim);
    p.for_each([&](const char*, Matrix<T>& m) {
      const double bound =
          std::sqrt(6.0 / static_cast<double>(m.rows() + m.cols()));
      for (Eigen::Index i = 0; i < m.size(); ++i)
        m.data()[i] = static_cast<T>(rng.uniform_real(-bound, bound));
    });
    enc.grus.push_back(std::move(p));
  }
  return enc;
}

template <typename T>
std::pair<Matrix<T>, Encoder<T>> init_params(const EncoderSpec& spec,
                                             std::size_t vocab_size,
                                             std::uint64_t seed) {
  Rng rng(seed);
  Matrix<T> table = init_table<T>(vocab_size, spec.token_dim, rng);
  return {std::move(table), init_encoder<T>(spec, rng)};
}

template <typename T>
std::vector<GruParams<T>> zero_grads_like(const Encoder<T>& enc) {
  std::vector<GruParams<T>> out;
  for (const auto& g : enc.grus)
    out.push_back(GruParams<T>::zeros(g.token_dim(), g.hidden_dim()));
  return out;
}

#define CNE_INSTANTIATE_ENCODERS(T)                                          \
  template struct GruParams<T>;                                              \
  template Vector<T> gru_forward(const GruParams<T>&, const Matrix<T>&,      \
                                 std::span<const TokenId>, GruTrace<T>*);    \
  template void gru_backward(const GruParams<T>&, const Matrix<T>&,          \
                             const GruTrace<T>&, const Vector<T>&,           \
                             GruParams<T>&, RowGrads<T>&);                   \
  template Vector<T> pool_forward(EncoderKind, const Matrix<T>&,             \
                                  std::span<const TokenId>);                 \
  template void pool_backward(EncoderKind, std::span<const TokenId>,         \
                              const Vector<T>&, RowGrads<T>&);               \
  template Vector<T> compose(const Encoder<T>&, const Matrix<T>&,            \
                             const NodeInput&, EncodeTrace<T>*);             \
  template void compose_backward(const Encoder<T>&, const Matrix<T>&,        \
                                 const EncodeTrace<T>&, const Vector<T>&,    \
                                 std::vector<GruParams<T>>&, RowGrads<T>&);  \
  template Matrix<T> init_table<T>(std::size_t, std::size_t, Rng&);          \
  template Encoder<T> init_encoder<T>(const EncoderSpec&, Rng&);             \
  template std::pair<Matrix<T>, Encoder<T>> init_params<T>(                  \
      const EncoderSpec&, std::size_t, std::uint64_t);                       \
  template std::vector<GruParams<T>> zero_grads_like(const Encoder<T>&);

CNE_INSTANTIATE_ENCODERS(float)
CNE_INSTANTIATE_ENCODERS(double)

#undef CNE_INSTANTIATE_ENCODERS

}  // namespace cne
