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

// Composition encoders: map a node's token sequence(s) to one embedding by
// reading rows of a shared token-embedding table. Every forward pass has an
// exact reverse-mode counterpart.
//
// GRU cell, no biases, h(0) = 0:
//
//   r = sigmoid(W_r a + U_r h)
//   z = sigmoid(W_z a + U_z h)
//   c = tanh(W a + U (r * h))
//   h' = (1 - z) * h + z * c
//
// The final hidden state is the embedding.

#ifndef CNE_ENCODERS_HPP_
#define CNE_ENCODERS_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cne/common.hpp"
#include "cne/text.hpp"

namespace cne {

enum class EncoderKind { kSum, kMean, kGru, kMultiGruSum };

std::string_view to_string(EncoderKind kind);
std::optional<EncoderKind> parse_encoder_kind(std::string_view name);

struct EncoderSpec {
  EncoderKind kind = EncoderKind::kGru;
  std::size_t token_dim = 256;
  std::size_t hidden_dim = 512;
  // multi_gru_sum only: number of input sequences and whether the
  // positional encoders share one parameter set.
  std::size_t sequences = 4;
  bool shared_sequences = true;

  std::size_t output_dim() const;
  std::size_t input_count() const;
  std::size_t gru_count() const;

  friend bool operator==(const EncoderSpec&, const EncoderSpec&) = default;
};

/// Shape and bitwise value equality.
template <typename T>
bool same_tensor(const Matrix<T>& a, const Matrix<T>& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         (a.size() == 0 || a == b);
}

/// Gradient rows of the token table, keyed by token id.
template <typename T>
using RowGrads = std::map<TokenId, Vector<T>>;

template <typename T>
struct GruParams {
  Matrix<T> input_reset;       // W_r  hidden x token
  Matrix<T> input_update;      // W_z  hidden x token
  Matrix<T> input_candidate;   // W    hidden x token
  Matrix<T> hidden_reset;      // U_r  hidden x hidden
  Matrix<T> hidden_update;     // U_z  hidden x hidden
  Matrix<T> hidden_candidate;  // U    hidden x hidden

  static GruParams zeros(std::size_t token_dim, std::size_t hidden_dim);

  std::size_t token_dim() const {
    return static_cast<std::size_t>(input_reset.cols());
  }
  std::size_t hidden_dim() const {
    return static_cast<std::size_t>(input_reset.rows());
  }

  /// Visits the six tensors in a fixed order with stable names.
  template <typename Fn>
  void for_each(Fn&& fn) {
    fn("input_reset", input_reset);
    fn("input_update", input_update);
    fn("input_candidate", input_candidate);
    fn("hidden_reset", hidden_reset);
    fn("hidden_update", hidden_update);
    fn("hidden_candidate", hidden_candidate);
  }
  template <typename Fn>
  void for_each(Fn&& fn) const {
    const_cast<GruParams*>(this)->for_each(
        [&](const char* name, Matrix<T>& m) { fn(name, std::as_const(m)); });
  }

  friend bool operator==(const GruParams& a, const GruParams& b) {
    return same_tensor(a.input_reset, b.input_reset) &&
           same_tensor(a.input_update, b.input_update) &&
           same_tensor(a.input_candidate, b.input_candidate) &&
           same_tensor(a.hidden_reset, b.hidden_reset) &&
           same_tensor(a.hidden_update, b.hidden_update) &&
           same_tensor(a.hidden_candidate, b.hidden_candidate);
  }
};

/// Per-step values kept for the backward pass. hidden[0] is h(0).
template <typename T>
struct GruTrace {
  TokenSequence ids;
  std::vector<Vector<T>> reset;
  std::vector<Vector<T>> update;
  std::vector<Vector<T>> candidate;
  std::vector<Vector<T>> hidden;
};

template <typename T>
Vector<T> gru_forward(const GruParams<T>& p, const Matrix<T>& table,
                      std::span<const TokenId> ids,
                      GruTrace<T>* trace = nullptr);

/// Accumulates d<grad_out, h(n)> into `grad` and `rows`.
template <typename T>
void gru_backward(const GruParams<T>& p, const Matrix<T>& table,
                  const GruTrace<T>& trace, const Vector<T>& grad_out,
                  GruParams<T>& grad, RowGrads<T>& rows);

template <typename T>
Vector<T> pool_forward(EncoderKind kind, const Matrix<T>& table,
                       std::span<const TokenId> ids);

template <typename T>
void pool_backward(EncoderKind kind, std::span<const TokenId> ids,
                   const Vector<T>& grad_out, RowGrads<T>& rows);

/// An encoder's spec and trainable GRU parameters (none for pooling).
template <typename T>
struct Encoder {
  EncoderSpec spec;
  std::vector<GruParams<T>> grus;

  friend bool operator==(const Encoder&, const Encoder&) = default;
};

template <typename T>
struct EncodeTrace {
  NodeInput inputs;
  std::vector<GruTrace<T>> grus;  // one per input sequence
};

/// phi(A_v): dispatches on the encoder kind. multi_gru_sum sums the final
/// states of one GRU pass per input sequence.
template <typename T>
Vector<T> compose(const Encoder<T>& enc, const Matrix<T>& table,
                  const NodeInput& input, EncodeTrace<T>* trace = nullptr);

/// `grad_grus` must be shaped like `enc.grus`.
template <typename T>
void compose_backward(const Encoder<T>& enc, const Matrix<T>& table,
                      const EncodeTrace<T>& trace, const Vector<T>& grad_out,
                      std::vector<GruParams<T>>& grad_grus, RowGrads<T>& rows);

/// Token rows ~ U(-0.5/d, 0.5/d).
template <typename T>
Matrix<T> init_table(std::size_t vocab_size, std::size_t token_dim, Rng& rng);

/// GRU matrices ~ U(-b, b), b = sqrt(6 / (fan_in + fan_out)).
template <typename T>
Encoder<T> init_encoder(const EncoderSpec& spec, Rng& rng);

template <typename T>
std::pair<Matrix<T>, Encoder<T>> init_params(const EncoderSpec& spec,
                                             std::size_t vocab_size,
                                             std::uint64_t seed);

template <typename T>
std::vector<GruParams<T>> zero_grads_like(const Encoder<T>& enc);

}  // namespace cne

#endif  // CNE_ENCODERS_HPP_
