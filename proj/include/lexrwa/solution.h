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

#ifndef LEXRWA_SOLUTION_H_
#define LEXRWA_SOLUTION_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "lexrwa/design.h"
#include "lexrwa/rational.h"
#include "lexrwa/strong_id.h"

namespace lexrwa {

enum class PathRole { kWorking, kProtection };

// A route plus the single channel it occupies on every link.
struct Lightpath {
  DemandId demand;
  PathRole role = PathRole::kWorking;
  std::vector<LinkId> links;
  ChannelId channel;

  friend bool operator==(const Lightpath&, const Lightpath&) = default;
};

enum class SolveStatus { kOptimal, kFeasible, kInfeasible, kTimeout };

std::string_view SolveStatusName(SolveStatus status);
std::optional<SolveStatus> SolveStatusFromName(std::string_view name);

struct SearchStats {
  int64_t nodes = 0;
  double seconds = 0;
};

struct RwaSolution {
  // Sorted by demand id, working before protection.
  std::vector<Lightpath> lightpaths;
  int wavelength_count = 0;
  int wavelength_link_usage = 0;
  Rational objective_value;
  SolveStatus status = SolveStatus::kInfeasible;
  SearchStats stats;

  bool has_routing() const {
    return status == SolveStatus::kOptimal || status == SolveStatus::kFeasible;
  }
};

struct SolverOptions {
  std::chrono::duration<double> time_limit = std::chrono::seconds(60);
  int thread_count = 1;
  std::optional<int64_t> node_limit;
  // Seed the search with the first-fit heuristic's solution.
  bool warm_start = true;
};

// JSON document with design, status, metrics, the objective as a "p/q"
// string and the lightpaths. Search statistics are not written, so equal
// solutions serialize to equal bytes.
std::string SolutionToJson(const RwaSolution& s, std::string_view topology,
                           DesignVariant design);

struct SolutionDocument {
  std::string topology;
  DesignVariant design = DesignVariant::kRwaWc;
  RwaSolution solution;
};

absl::StatusOr<SolutionDocument> SolutionFromJson(std::string_view json);

}  // namespace lexrwa

#endif  // LEXRWA_SOLUTION_H_
