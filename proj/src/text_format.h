// Copyright 2026 The lexrwa Authors
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

// Helpers shared by the line-oriented text formats.

#ifndef LEXRWA_SRC_TEXT_FORMAT_H_
#define LEXRWA_SRC_TEXT_FORMAT_H_

#include <string>
#include <string_view>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace lexrwa {

// The system abseil keeps its own string_view type instead of aliasing the
// standard one, so views are converted explicitly where the two meet.
inline absl::string_view ToAbsl(std::string_view s) {
  return absl::string_view(s.data(), s.size());
}
inline std::string_view ToStd(absl::string_view s) {
  return std::string_view(s.data(), s.size());
}

absl::Status ParseError(int line_no, std::string_view what);

// Parses "key=<int>" into `value`.
bool ParseKeyedInt(std::string_view token, std::string_view key, int* value);

absl::StatusOr<std::string> ReadWholeFile(const std::string& path);
absl::Status WriteWholeFile(const std::string& path, std::string_view data);

}  // namespace lexrwa

#endif  // LEXRWA_SRC_TEXT_FORMAT_H_
