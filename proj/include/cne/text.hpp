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

#ifndef CNE_TEXT_HPP_
#define CNE_TEXT_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cne/common.hpp"

namespace cne {

inline constexpr TokenId kUnkId = 0;
inline constexpr const char* kUnkToken = "<UNK>";
inline constexpr std::size_t kDefaultMaxSequenceLength = 64;

/// Token ids for one attribute field of a node. Never empty once encoded.
using TokenSequence = std::vector<TokenId>;

/// Lowercases ASCII letters, splits on Unicode whitespace and strips ASCII
/// punctuation from both ends of each token. Tokens that are all
/// punctuation vanish.
std::vector<std::string> tokenize(std::string_view text);

class Vocabulary {
 public:
  /// A vocabulary holding only UNK.
  Vocabulary();

  /// `tokens[0]` must be the UNK marker.
  explicit Vocabulary(std::vector<std::string> tokens);

  std::size_t size() const { return tokens_.size(); }
  TokenId id(std::string_view token) const;  // kUnkId when absent
  bool contains(std::string_view token) const;
  const std::string& token(TokenId id) const { return tokens_.at(id); }
  std::span<const std::string> tokens() const { return tokens_; }

  friend bool operator==(const Vocabulary& a, const Vocabulary& b) {
    return a.tokens_ == b.tokens_;
  }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, TokenId> ids_;
};

/// Ranks tokens by descending frequency (ties: ascending token), keeps the
/// first `max_size` and prepends UNK.
Vocabulary build_vocabulary(const std::map<std::string, std::string>& corpus,
                            std::size_t max_size);

/// One token per line; the first line is `<UNK>`.
void save_vocabulary(const Vocabulary& vocab, const std::string& path);
Vocabulary load_vocabulary(const std::string& path);

/// Tokenizes, maps OOV tokens to UNK, truncates to `max_length` tokens
/// (dropping the tail) and turns an empty result into [UNK].
TokenSequence encode_sequence(const Vocabulary& vocab, std::string_view text,
                              std::size_t max_length = kDefaultMaxSequenceLength);

/// The composition input for one node: one sequence for ordinary encoders,
/// several for multi-sequence encoders.
using NodeInput = std::vector<TokenSequence>;

/// Encodes attribute text for an encoder taking `fields` sequences. With one
/// field the whole text is a single sequence (TAB is whitespace); otherwise
/// the text must hold exactly `fields` TAB-separated parts.
NodeInput encode_node_input(const Vocabulary& vocab, std::string_view text,
                            std::size_t fields = 1,
                            std::size_t max_length = kDefaultMaxSequenceLength);

/// Encoded attributes for every known node, indexed by node id. Ids line up
/// with a Graph's ids; extra ids past the graph cover attribute-only nodes.
class FeatureStore {
 public:
  FeatureStore() = default;

  NodeId add(std::string label, std::string node_type,
             std::optional<NodeInput> input);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(NodeId v) const { return labels_.at(v); }
  const std::string& node_type(NodeId v) const { return types_.at(v); }
  bool has(NodeId v) const { return v < inputs_.size() && inputs_[v].has_value(); }

  /// Throws ErrorKind::kMissingAttributes naming the node.
  const NodeInput& at(NodeId v) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::string> types_;
  std::vector<std::optional<NodeInput>> inputs_;
};

}  // namespace cne

#endif  // CNE_TEXT_HPP_
