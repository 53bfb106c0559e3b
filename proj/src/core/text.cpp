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

#include "cne/text.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "io_util.hpp"

namespace cne {

namespace {

// Decodes one UTF-8 code point starting at `i`; invalid bytes decode as
// themselves with length 1.
char32_t decode_utf8(std::string_view s, std::size_t i, std::size_t* len) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  auto cont = [&](std::size_t k) {
    return i + k < s.size() &&
           (static_cast<unsigned char>(s[i + k]) & 0xC0) == 0x80;
  };
  auto byte = [&](std::size_t k) {
    return static_cast<char32_t>(static_cast<unsigned char>(s[i + k]) & 0x3F);
  };
  if (b0 < 0x80) {
    *len = 1;
    return b0;
  }
  if ((b0 & 0xE0) == 0xC0 && cont(1)) {
    *len = 2;
    return (static_cast<char32_t>(b0 & 0x1F) << 6) | byte(1);
  }
  if ((b0 & 0xF0) == 0xE0 && cont(1) && cont(2)) {
    *len = 3;
    return (static_cast<char32_t>(b0 & 0x0F) << 12) | (byte(1) << 6) | byte(2);
  }
  if ((b0 & 0xF8) == 0xF0 && cont(1) && cont(2) && cont(3)) {
    *len = 4;
    return (static_cast<char32_t>(b0 & 0x07) << 18) | (byte(1) << 12) |
           (byte(2) << 6) | byte(3);
  }
  *len = 1;
  return b0;
}

bool is_unicode_space(char32_t c) {
  switch (c) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return c >= 0x2000 && c <= 0x200A;
  }
}

bool is_ascii_punct(char c) {
  return static_cast<unsigned char>(c) < 0x80 &&
         std::ispunct(static_cast<unsigned char>(c));
}

void emit(std::string_view raw, std::vector<std::string>& out) {
  std::size_t b = 0, e = raw.size();
  while (b < e && is_ascii_punct(raw[b])) ++b;
  while (e > b && is_ascii_punct(raw[e - 1])) --e;
  if (b == e) return;
  std::string token(raw.substr(b, e - b));
  for (char& c : token)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  out.push_back(std::move(token));
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0, i = 0;
  while (i < text.size()) {
    std::size_t len = 1;
    char32_t c = decode_utf8(text, i, &len);
    if (is_unicode_space(c)) {
      if (i > start) emit(text.substr(start, i - start), out);
      start = i + len;
    }
    i += len;
  }
  if (start < text.size()) emit(text.substr(start), out);
  return out;
}

Vocabulary::Vocabulary() : Vocabulary(std::vector<std::string>{kUnkToken}) {}

Vocabulary::Vocabulary(std::vector<std::string> tokens)
    : tokens_(std::move(tokens)) {
  if (tokens_.empty() || tokens_.front() != kUnkToken)
    throw Error(ErrorKind::kInvalidArgument,
                "vocabulary must start with the <UNK> token");
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (!ids_.emplace(tokens_[i], static_cast<TokenId>(i)).second)
      throw Error(ErrorKind::kInvalidArgument,
                  "duplicate vocabulary token '" + tokens_[i] + "'");
  }
}

TokenId Vocabulary::id(std::string_view token) const {
  auto it = ids_.find(std::string(token));
  return it == ids_.end() ? kUnkId : it->second;
}

bool Vocabulary::contains(std::string_view token) const {
  return ids_.contains(std::string(token));
}

Vocabulary build_vocabulary(const std::map<std::string, std::string>& corpus,
                            std::size_t max_size) {
  require(max_size >= 1, "vocabulary max_size must be at least 1");
  std::unordered_map<std::string, std::size_t> freq;
  for (const auto& [label, text] : corpus)
    for (auto& tok : tokenize(text)) ++freq[std::move(tok)];
  freq.erase(kUnkToken);

  std::vector<std::pair<std::string, std::size_t>> ranked(freq.begin(),
                                                          freq.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (ranked.size() > max_size) ranked.resize(max_size);

  std::vector<std::string> tokens{kUnkToken};
  tokens.reserve(ranked.size() + 1);
  for (auto& [tok, n] : ranked) tokens.push_back(std::move(tok));
  return Vocabulary(std::move(tokens));
}

void save_vocabulary(const Vocabulary& vocab, const std::string& path) {
  std::string out;
  for (const auto& tok : vocab.tokens()) {
    out += tok;
    out += '\n';
  }
  detail::write_file_atomic(path, out);
}

Vocabulary load_vocabulary(const std::string& path) {
  auto text = detail::read_file(path);
  std::vector<std::string> tokens;
  for (auto line : detail::split_lines(text)) {
    if (line.empty())
      throw Error(ErrorKind::kParse,
                  detail::parse_error(path, tokens.size() + 1, "empty token"));
    tokens.emplace_back(line);
  }
  if (tokens.empty() || tokens.front() != kUnkToken)
    throw Error(ErrorKind::kParse,
                detail::parse_error(path, 1, "first line must be <UNK>"));
  return Vocabulary(std::move(tokens));
}

TokenSequence encode_sequence(const Vocabulary& vocab, std::string_view text,
                              std::size_t max_length) {
  require(max_length >= 1, "max sequence length must be at least 1");
  TokenSequence ids;
  for (const auto& tok : tokenize(text)) {
    if (ids.size() == max_length) break;
    ids.push_back(vocab.id(tok));
  }
  if (ids.empty()) ids.push_back(kUnkId);
  return ids;
}

NodeInput encode_node_input(const Vocabulary& vocab, std::string_view text,
                            std::size_t fields, std::size_t max_length) {
  require(fields >= 1, "a node input needs at least one field");
  if (fields == 1) return {encode_sequence(vocab, text, max_length)};
  auto parts = detail::split(text, '\t');
  if (parts.size() != fields)
    throw Error(ErrorKind::kInvalidArgument,
                "expected " + std::to_string(fields) +
                    " tab-separated attribute fields, got " +
                    std::to_string(parts.size()));
  NodeInput input;
  for (auto part : parts)
    input.push_back(encode_sequence(vocab, part, max_length));
  return input;
}

NodeId FeatureStore::add(std::string label, std::string node_type,
                         std::optional<NodeInput> input) {
  labels_.push_back(std::move(label));
  types_.push_back(std::move(node_type));
  inputs_.push_back(std::move(input));
  return static_cast<NodeId>(labels_.size() - 1);
}

const NodeInput& FeatureStore::at(NodeId v) const {
  if (!has(v)) {
    std::string name =
        v < labels_.size() ? labels_[v] : "#" + std::to_string(v);
    throw Error(ErrorKind::kMissingAttributes,
                "node '" + name + "' has no attributes");
  }
  return *inputs_[v];
}

}  // namespace cne
