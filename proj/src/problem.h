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

// Search-ready view of an instance shared by the heuristic and the
// branch-and-bound.

#ifndef LEXRWA_SRC_PROBLEM_H_
#define LEXRWA_SRC_PROBLEM_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "lexrwa/design.h"
#include "lexrwa/solution.h"
#include "lexrwa/topology.h"
#include "lexrwa/traffic.h"
#include "paths.h"

namespace lexrwa::internal {

inline constexpr int64_t kInfiniteCost = INT64_MAX / 4;

struct DemandSpec {
  int id;
  int src;
  int dst;
  bool is_protected;
  // Shortest path (or link-disjoint pair) length on the empty network, and
  // the links of one such route.
  int base_length;
  std::vector<uint64_t> base_links;
};

// Route decision for one demand.
struct Choice {
  int channel = -1;
  std::vector<int> working;
  std::vector<int> protection;

  int length() const {
    return static_cast<int>(working.size() + protection.size());
  }
};

struct Problem {
  Graph graph;
  int num_channels = 0;
  // Demands in branching order.
  std::vector<DemandSpec> demands;
  // Integer objective weights; objective = cost / scale.
  int64_t channel_weight = 0;
  int64_t usage_weight = 0;
  int64_t scale = 1;
  // Valid lower bound on the number of channels of any feasible solution.
  int min_channels = 0;
  // Some demand cannot be routed at all, or min_channels > num_channels.
  bool infeasible = false;
  // Per-node masks of outgoing / incoming links, and degrees.
  std::vector<uint64_t> out_links;
  std::vector<uint64_t> in_links;
  std::vector<int> out_degree;
  std::vector<int> in_degree;

  Mask OutMask(int v) const {
    return Mask(out_links).subspan(v * graph.words, graph.words);
  }
  Mask InMask(int v) const {
    return Mask(in_links).subspan(v * graph.words, graph.words);
  }
};

// Validates the inputs and precomputes routing data and bounds.
absl::StatusOr<Problem> BuildProblem(const NetworkTopology& t,
                                     const TrafficMatrix& m,
                                     const DesignConfig& cfg);

// Lightpaths and metrics for choices indexed by branching position.
RwaSolution MakeSolution(const Problem& p, const std::vector<Choice>& choices,
                         SolveStatus status);

int64_t CostOf(const Problem& p, const std::vector<Choice>& choices);

// First-fit assignment by branching position; empty if some demand fails.
std::vector<Choice> FirstFit(const Problem& p);

}  // namespace lexrwa::internal

#endif  // LEXRWA_SRC_PROBLEM_H_
