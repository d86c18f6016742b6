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

#ifndef LEXRWA_STRONG_ID_H_
#define LEXRWA_STRONG_ID_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>

namespace lexrwa {

// Dense integer index tagged with the domain concept it refers to, so that a
// node index cannot be passed where a link index is expected.
template <typename Tag>
class StrongId {
 public:
  using ValueType = int32_t;

  constexpr StrongId() = default;
  constexpr explicit StrongId(ValueType value) : value_(value) {}

  constexpr ValueType value() const { return value_; }

  friend constexpr auto operator<=>(StrongId, StrongId) = default;

  friend std::ostream& operator<<(std::ostream& os, StrongId id) {
    return os << id.value_;
  }

  template <typename H>
  friend H AbslHashValue(H h, StrongId id) {
    return H::combine(std::move(h), id.value_);
  }

 private:
  ValueType value_ = -1;
};

using NodeId = StrongId<struct NodeIdTag>;
using LinkId = StrongId<struct LinkIdTag>;
using DemandId = StrongId<struct DemandIdTag>;
using ChannelId = StrongId<struct ChannelIdTag>;

}  // namespace lexrwa

template <typename Tag>
struct std::hash<lexrwa::StrongId<Tag>> {
  size_t operator()(lexrwa::StrongId<Tag> id) const noexcept {
    return std::hash<int32_t>()(id.value());
  }
};

#endif  // LEXRWA_STRONG_ID_H_
