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

#include "lexrwa/rational.h"

#include <string>
#include <string_view>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "text_format.h"

namespace lexrwa {

std::string RationalToString(const Rational& r) {
  return absl::StrCat(r.numerator(), "/", r.denominator());
}

absl::StatusOr<Rational> ParseRational(std::string_view text) {
  std::vector<absl::string_view> parts = absl::StrSplit(ToAbsl(text), '/');
  int64_t num = 0;
  int64_t den = 1;
  if (parts.size() > 2 || !absl::SimpleAtoi(parts[0], &num) ||
      (parts.size() == 2 && !absl::SimpleAtoi(parts[1], &den))) {
    return absl::InvalidArgumentError(
        absl::StrCat("malformed rational '", ToAbsl(text), "'"));
  }
  if (den == 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("zero denominator in '", ToAbsl(text), "'"));
  }
  return Rational(num, den);
}

}  // namespace lexrwa
