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

// Small text/file helpers shared by the loaders and writers.

#ifndef CNE_SRC_CORE_IO_UTIL_HPP_
#define CNE_SRC_CORE_IO_UTIL_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace cne::detail {

std::string read_file(const std::string& path);

/// Writes `contents` to `path` through a temporary file and a rename.
void write_file_atomic(const std::string& path, const std::string& contents);

/// Splits on '\n', stripping a trailing '\r'. A final empty piece after the
/// last newline is not returned.
std::vector<std::string_view> split_lines(std::string_view text);

std::vector<std::string_view> split(std::string_view s, char sep);

/// True for blank lines and '#' comments.
bool skippable(std::string_view line);

std::string parse_error(const std::string& source, std::size_t line,
                        const std::string& what);

}  // namespace cne::detail

#endif  // CNE_SRC_CORE_IO_UTIL_HPP_
