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

// Static traffic demands. Every demand asks for one wavelength of capacity
// from `src` to `dst`; protected demands additionally need a link-disjoint
// backup lightpath.
//
// Text format:
//
//   traffic seed=<s> load=<low|medium|high|custom>
//   demand <src> <dst> <0|1>      # last field: dedicated protection flag

#ifndef LEXRWA_TRAFFIC_H_
#define LEXRWA_TRAFFIC_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "lexrwa/strong_id.h"
#include "lexrwa/topology.h"

namespace lexrwa {

enum class LoadLevel { kLow, kMedium, kHigh, kCustom };

std::string_view LoadLevelName(LoadLevel level);
std::optional<LoadLevel> LoadLevelFromName(std::string_view name);

struct Demand {
  DemandId id;
  NodeId src;
  NodeId dst;
  bool is_protected = false;

  friend bool operator==(const Demand&, const Demand&) = default;
};

struct TrafficMatrix {
  std::vector<Demand> demands;
  uint64_t seed = 0;
  LoadLevel load = LoadLevel::kCustom;

  int num_protected() const;

  // Copy with every protection flag set to `is_protected`.
  TrafficMatrix WithProtection(bool is_protected) const;

  friend bool operator==(const TrafficMatrix&, const TrafficMatrix&) = default;
};

// Percentage of ordered node pairs carrying a demand: 30, 70 or 100.
int LoadPercent(LoadLevel level);

// round(percent/100 * |V|(|V|-1)), halves rounded up.
int DemandCountFor(LoadLevel level, int num_nodes);

// Samples DemandCountFor(load) distinct ordered node pairs. The pair list
// (lexicographic by (src, dst)) is shuffled with a Fisher-Yates pass driven
// by std::mt19937_64(seed); position i swaps with j drawn uniformly from
// [0, i] by rejection sampling on the raw 64-bit output. The first n pairs
// are kept and re-sorted, and demand ids follow that order. Both steps are
// fully specified, so instances are identical on every standard library.
absl::StatusOr<TrafficMatrix> GenerateTraffic(const NetworkTopology& t,
                                              LoadLevel load,
                                              bool is_protected,
                                              uint64_t seed);

// Syntax only; see ValidateTraffic for checks against a topology.
absl::StatusOr<TrafficMatrix> ParseTraffic(std::string_view text);
std::string SerializeTraffic(const TrafficMatrix& m);

// Dense ids, endpoints inside `t`, src != dst.
absl::Status ValidateDemandEndpoints(const NetworkTopology& t,
                                     const TrafficMatrix& m);

// ValidateDemandEndpoints plus at most one demand per ordered pair.
absl::Status ValidateTraffic(const NetworkTopology& t, const TrafficMatrix& m);

// Parse + validate.
absl::StatusOr<TrafficMatrix> LoadTrafficFile(const std::string& path,
                                              const NetworkTopology& t);

}  // namespace lexrwa

#endif  // LEXRWA_TRAFFIC_H_
