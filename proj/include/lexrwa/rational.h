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

#ifndef LEXRWA_RATIONAL_H_
#define LEXRWA_RATIONAL_H_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

#include "absl/status/statusor.h"

namespace lexrwa {

// Exact objective values and weights. Floating point never enters an
// objective comparison.
using Rational = boost::rational<int64_t>;

// Compare against this rather than a plain integer literal: with C++20's
// rewritten comparison candidates, boost::rational's mixed int overloads
// call each other forever.
inline const Rational kZero(0);

// "p/q" in lowest terms; integers are still written with "/1".
std::string RationalToString(const Rational& r);

// Accepts "p/q" or a bare integer "p".
absl::StatusOr<Rational> ParseRational(std::string_view text);

}  // namespace lexrwa

#endif  // LEXRWA_RATIONAL_H_
