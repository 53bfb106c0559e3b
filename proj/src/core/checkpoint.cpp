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

#include "cne/checkpoint.hpp"

#include <zlib.h>

#include <bit>
#include <cstring>
#include <map>

#include "json.hpp"

#include "io_util.hpp"

namespace cne {

namespace {

static_assert(std::endian::native == std::endian::little,
              "checkpoint I/O assumes a little-endian host");

constexpr char kMagic[4] = {'C', 'N', 'E', '1'};
constexpr std::size_t kHeaderSize = 4 + 4 + 8;

class Writer {
 public:
  template <typename Int>
  void put(Int v) {
    char buf[sizeof(Int)];
    std::memcpy(buf, &v, sizeof(Int));
    out_.append(buf, sizeof(Int));
  }
  void put_bytes(const std::string& s) { out_ += s; }
  std::string& str() { return out_; }

 private:
  std::string out_;
};

class Reader {
 public:
  Reader(const std::string& data, std::size_t pos, std::size_t end)
      : data_(data), pos_(pos), end_(end) {}

  template <typename Int>
  Int get() {
    need(sizeof(Int));
    Int v;
    std::memcpy(&v, data_.data() + pos_, sizeof(Int));
    pos_ += sizeof(Int);
    return v;
  }
  std::string get_bytes(std::size_t n) {
    need(n);
    std::string s = data_.substr(pos_, n);
    pos_ += n;
    return s;
  }
  std::size_t pos() const { return pos_; }

 private:
  void need(std::size_t n) const {
    if (n > end_ - pos_)
      throw Error(ErrorKind::kCheckpointFormat,
                  "checkpoint manifest runs past the payload");
  }
  const std::string& data_;
  std::size_t pos_;
  std::size_t end_;
};

std::uint32_t crc_of(const char* data, std::size_t size) {
  uLong crc = crc32(0L, Z_NULL, 0);
  while (size > 0) {
    const auto chunk = static_cast<uInt>(std::min<std::size_t>(size, 1u << 30));
    crc = crc32(crc, reinterpret_cast<const Bytef*>(data), chunk);
    data += chunk;
    size -= chunk;
  }
  return static_cast<std::uint32_t>(crc);
}

// Visits every tensor of the state in file order.
template <typename State, typename Fn>
void for_each_tensor(State& s, Fn&& fn) {
  fn(std::string("table"), s.table);
  fn(std::string("table.adam_m"), s.table_m);
  fn(std::string("table.adam_v"), s.table_v);
  for (std::size_t e = 0; e < s.encoders.size(); ++e) {
    for (std::size_t g = 0; g < s.encoders[e].grus.size(); ++g) {
      const std::string base =
          "encoder" + std::to_string(e) + ".gru" + std::to_string(g) + ".";
      auto visit = [&](auto& params, const std::string& suffix) {
        params.for_each([&](const char* name, auto& m) {
          fn(base + name + suffix, m);
        });
      };
      visit(s.encoders[e].grus[g], "");
      visit(s.encoder_m[e][g], ".adam_m");
      visit(s.encoder_v[e][g], ".adam_v");
    }
  }
}

template <typename T>
nlohmann::json meta_of(const ModelState<T>& s) {
  nlohmann::json meta;
  meta["step"] = s.step;
  meta["vocabulary"] = std::vector<std::string>(s.vocab.tokens().begin(),
                                                s.vocab.tokens().end());
  auto& encoders = meta["encoders"] = nlohmann::json::array();
  for (const auto& enc : s.encoders) {
    encoders.push_back({{"kind", std::string(to_string(enc.spec.kind))},
                        {"token_dim", enc.spec.token_dim},
                        {"hidden_dim", enc.spec.hidden_dim},
                        {"sequences", enc.spec.sequences},
                        {"shared_sequences", enc.spec.shared_sequences}});
  }
  auto& types = meta["edge_types"] = nlohmann::json::array();
  for (const auto& et : s.edge_types) {
    nlohmann::json routes = nlohmann::json::array();
    for (const auto& [node_type, r] : et.routes)
      routes.push_back({{"node_type", node_type},
                        {"center", r.center},
                        {"context", r.context}});
    types.push_back({{"name", et.name}, {"routes", routes}});
  }
  return meta;
}

template <typename T>
ModelState<T> skeleton_from(const nlohmann::json& meta) {
  ModelState<T> s;
  s.step = meta.at("step").get<std::uint64_t>();
  s.vocab = Vocabulary(meta.at("vocabulary").get<std::vector<std::string>>());
  for (const auto& e : meta.at("encoders")) {
    EncoderSpec spec;
    auto kind = parse_encoder_kind(e.at("kind").get<std::string>());
    if (!kind)
      throw Error(ErrorKind::kCheckpointFormat, "unknown encoder kind");
    spec.kind = *kind;
    spec.token_dim = e.at("token_dim").get<std::size_t>();
    spec.hidden_dim = e.at("hidden_dim").get<std::size_t>();
    spec.sequences = e.at("sequences").get<std::size_t>();
    spec.shared_sequences = e.at("shared_sequences").get<bool>();
    Encoder<T> enc{spec, {}};
    for (std::size_t g = 0; g < spec.gru_count(); ++g)
      enc.grus.push_back(GruParams<T>::zeros(spec.token_dim, spec.hidden_dim));
    s.encoder_m.push_back(zero_grads_like(enc));
    s.encoder_v.push_back(zero_grads_like(enc));
    s.encoders.push_back(std::move(enc));
  }
  for (const auto& et : meta.at("edge_types")) {
    EdgeTypeEncoders entry{et.at("name").get<std::string>(), {}};
    for (const auto& r : et.at("routes")) {
      EncoderRoute route{r.at("center").get<std::size_t>(),
                         r.at("context").get<std::size_t>()};
      if (route.center >= s.encoders.size() ||
          route.context >= s.encoders.size())
        throw Error(ErrorKind::kCheckpointFormat,
                    "encoder route points past the encoder list");
      entry.routes.emplace(r.at("node_type").get<std::string>(), route);
    }
    s.edge_types.push_back(std::move(entry));
  }
  return s;
}

}  // namespace

template <typename T>
std::string encode_checkpoint(const ModelState<T>& state) {
  const std::string meta = meta_of(state).dump();

  struct Entry {
    std::string name;
    std::uint64_t rows, cols, offset;
  };
  std::vector<Entry> entries;
  std::string data;
  for_each_tensor(state, [&](const std::string& name, const Matrix<T>& m) {
    entries.push_back({name, static_cast<std::uint64_t>(m.rows()),
                       static_cast<std::uint64_t>(m.cols()),
                       static_cast<std::uint64_t>(data.size())});
    for (Eigen::Index i = 0; i < m.size(); ++i) {
      const float v = static_cast<float>(m.data()[i]);
      char buf[4];
      std::memcpy(buf, &v, 4);
      data.append(buf, 4);
    }
  });

  Writer payload;
  payload.put<std::uint32_t>(static_cast<std::uint32_t>(meta.size()));
  payload.put_bytes(meta);
  payload.put<std::uint32_t>(static_cast<std::uint32_t>(entries.size()));
  for (const auto& e : entries) {
    payload.put<std::uint16_t>(static_cast<std::uint16_t>(e.name.size()));
    payload.put_bytes(e.name);
    payload.put<std::uint32_t>(2);
    payload.put<std::uint64_t>(e.rows);
    payload.put<std::uint64_t>(e.cols);
    payload.put<std::uint64_t>(e.offset);
  }
  payload.put_bytes(data);

  Writer file;
  file.put_bytes(std::string(kMagic, 4));
  file.put<std::uint32_t>(kCheckpointVersion);
  file.put<std::uint64_t>(payload.str().size());
  file.put_bytes(payload.str());
  file.put<std::uint32_t>(crc_of(payload.str().data(), payload.str().size()));
  return std::move(file.str());
}

template <typename T>
ModelState<T> decode_checkpoint(const std::string& bytes) {
  if (bytes.size() < 4 || std::memcmp(bytes.data(), kMagic, 4) != 0)
    throw Error(bytes.size() < 4 ? ErrorKind::kCheckpointTruncated
                                 : ErrorKind::kCheckpointFormat,
                "not a checkpoint file (bad magic)");
  if (bytes.size() < kHeaderSize)
    throw Error(ErrorKind::kCheckpointTruncated, "checkpoint header truncated");
  Reader header(bytes, 4, kHeaderSize);
  const auto version = header.get<std::uint32_t>();
  if (version != kCheckpointVersion)
    throw Error(ErrorKind::kCheckpointVersion,
                "checkpoint format version " + std::to_string(version) +
                    " is not supported (expected " +
                    std::to_string(kCheckpointVersion) + ")");
  const auto payload_size = header.get<std::uint64_t>();
  if (payload_size > bytes.size() - kHeaderSize ||
      bytes.size() - kHeaderSize - payload_size < 4)
    throw Error(ErrorKind::kCheckpointTruncated, "checkpoint is truncated");
  if (bytes.size() - kHeaderSize - payload_size > 4)
    throw Error(ErrorKind::kCheckpointFormat,
                "trailing bytes after checkpoint");
  const std::size_t payload_end = kHeaderSize + payload_size;
  std::uint32_t stored_crc;
  std::memcpy(&stored_crc, bytes.data() + payload_end, 4);
  if (crc_of(bytes.data() + kHeaderSize, payload_size) != stored_crc)
    throw Error(ErrorKind::kCheckpointChecksum, "checkpoint checksum mismatch");

  Reader r(bytes, kHeaderSize, payload_end);
  const auto meta_size = r.get<std::uint32_t>();
  ModelState<T> s;
  try {
    s = skeleton_from<T>(nlohmann::json::parse(r.get_bytes(meta_size)));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kCheckpointFormat,
                std::string("bad checkpoint metadata: ") + e.what());
  }

  struct Entry {
    std::uint64_t rows, cols, offset;
  };
  std::map<std::string, Entry> manifest;
  const auto count = r.get<std::uint32_t>();
  for (std::uint32_t i = 0; i < count; ++i) {
    const auto name_size = r.get<std::uint16_t>();
    std::string name = r.get_bytes(name_size);
    if (r.get<std::uint32_t>() != 2)
      throw Error(ErrorKind::kCheckpointFormat,
                  "tensor '" + name + "' is not rank 2");
    Entry e;
    e.rows = r.get<std::uint64_t>();
    e.cols = r.get<std::uint64_t>();
    e.offset = r.get<std::uint64_t>();
    manifest.emplace(std::move(name), e);
  }
  const std::size_t data_begin = r.pos();
  const std::size_t data_size = payload_end - data_begin;

  std::size_t loaded = 0;
  for_each_tensor(s, [&](const std::string& name, Matrix<T>& m) {
    auto it = manifest.find(name);
    if (it == manifest.end())
      throw Error(ErrorKind::kCheckpointFormat,
                  "checkpoint lacks tensor '" + name + "'");
    const Entry& e = it->second;
    if (name.rfind("table", 0) == 0) {
      m.resize(static_cast<Eigen::Index>(e.rows),
               static_cast<Eigen::Index>(e.cols));
    } else if (e.rows != static_cast<std::uint64_t>(m.rows()) ||
               e.cols != static_cast<std::uint64_t>(m.cols())) {
      throw Error(ErrorKind::kCheckpointFormat,
                  "tensor '" + name + "' has an unexpected shape");
    }
    const std::uint64_t bytes_needed = e.rows * e.cols * 4;
    if (e.offset > data_size || bytes_needed > data_size - e.offset)
      throw Error(ErrorKind::kCheckpointFormat,
                  "tensor '" + name + "' runs past the data block");
    const char* src = bytes.data() + data_begin + e.offset;
    for (Eigen::Index i = 0; i < m.size(); ++i) {
      float v;
      std::memcpy(&v, src + 4 * i, 4);
      m.data()[i] = static_cast<T>(v);
    }
    ++loaded;
  });
  if (loaded != manifest.size())
    throw Error(ErrorKind::kCheckpointFormat,
                "checkpoint holds tensors the model does not use");
  if (static_cast<std::size_t>(s.table.rows()) != s.vocab.size())
    throw Error(ErrorKind::kCheckpointFormat,
                "token table rows do not match the vocabulary");
  for (const auto& enc : s.encoders)
    if (static_cast<Eigen::Index>(enc.spec.token_dim) != s.table.cols())
      throw Error(ErrorKind::kCheckpointFormat,
                  "encoder token width does not match the table");
  return s;
}

template <typename T>
void save_checkpoint(const ModelState<T>& state, const std::string& path) {
  detail::write_file_atomic(path, encode_checkpoint(state));
}

template <typename T>
ModelState<T> load_checkpoint(const std::string& path) {
  return decode_checkpoint<T>(detail::read_file(path));
}

template std::string encode_checkpoint(const ModelState<float>&);
template std::string encode_checkpoint(const ModelState<double>&);
template ModelState<float> decode_checkpoint<float>(const std::string&);
template ModelState<double> decode_checkpoint<double>(const std::string&);
template void save_checkpoint(const ModelState<float>&, const std::string&);
template void save_checkpoint(const ModelState<double>&, const std::string&);
template ModelState<float> load_checkpoint<float>(const std::string&);
template ModelState<double> load_checkpoint<double>(const std::string&);

}  // namespace cne
