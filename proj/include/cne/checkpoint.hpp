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

// Binary checkpoint, all integers little-endian:
//
//   "CNE1"                  magic
//   u32  version            kCheckpointVersion
//   u64  payload_size
//   payload:
//     u32 meta_size, meta   JSON: vocabulary, encoder specs, routes, step
//     u32 tensor_count
//     per tensor: u16 name_size, name, u32 rank, u64 dims[rank],
//                 u64 offset (bytes into the data block)
//     data block            row-major f32
//   u32  crc32(payload)
//
// The file is written to a temporary name and renamed into place.

#ifndef CNE_CHECKPOINT_HPP_
#define CNE_CHECKPOINT_HPP_

#include <cstdint>
#include <string>

#include "cne/trainer.hpp"

namespace cne {

inline constexpr std::uint32_t kCheckpointVersion = 1;

/// Serializes `state` to bytes. Values are stored as f32.
template <typename T>
std::string encode_checkpoint(const ModelState<T>& state);

/// Raises kCheckpointFormat, kCheckpointVersion, kCheckpointTruncated or
/// kCheckpointChecksum on bad input.
template <typename T>
ModelState<T> decode_checkpoint(const std::string& bytes);

template <typename T>
void save_checkpoint(const ModelState<T>& state, const std::string& path);

template <typename T>
ModelState<T> load_checkpoint(const std::string& path);

}  // namespace cne

#endif  // CNE_CHECKPOINT_HPP_
