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

// Independent checking of routing solutions against their instance.

#ifndef LEXRWA_VALIDATE_H_
#define LEXRWA_VALIDATE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "lexrwa/design.h"
#include "lexrwa/model.h"
#include "lexrwa/rational.h"
#include "lexrwa/solution.h"
#include "lexrwa/strong_id.h"
#include "lexrwa/topology.h"
#include "lexrwa/traffic.h"

namespace lexrwa {

// The six constraint classes a solution is checked against.
enum class ViolationClass {
  // Exactly one working lightpath per demand and one protection lightpath
  // per protected demand.
  kProvisioning,
  // Every lightpath is a simple directed path from source to destination
  // over existing links.
  kSimplePath,
  // Working and protection lightpaths of a demand use the same channel.
  kSingleChannel,
  // A (link, channel) pair is used by lightpaths of two different demands.
  kChannelReuse,
  // Working and protection lightpaths of a demand share a link.
  kLinkDisjointness,
  // Channel index outside [0, capacity).
  kChannelRange,
};

std::string_view ViolationClassName(ViolationClass c);

struct Violation {
  ViolationClass kind;
  std::optional<DemandId> demand;
  std::optional<LinkId> link;
  std::optional<ChannelId> channel;
  std::string message;
};

struct SolutionMetrics {
  int wavelength_count = 0;
  int wavelength_link_usage = 0;

  friend bool operator==(const SolutionMetrics&,
                         const SolutionMetrics&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;
  // Recomputed from the lightpaths alone.
  SolutionMetrics metrics;
  Rational objective;
  // The solution's stored metrics and objective equal the recomputed ones.
  bool metrics_consistent = true;

  bool ok() const { return violations.empty(); }
};

// Distinct channels and total hop count over all lightpaths.
SolutionMetrics ComputeMetrics(const RwaSolution& s);

// Checks the six classes above. When they all hold, the solution is also
// translated into model variables and the model's constraints are evaluated
// on it, so a gap between the structural checks and the algebraic model
// would surface as a violation too. Violations are data, never errors.
ValidationReport CheckSolution(const NetworkTopology& t, const TrafficMatrix& m,
                               const DesignConfig& cfg, const RwaSolution& s);

// Binary variable values encoded by `s`. Fails when a lightpath refers to a
// demand, link or channel the model does not have.
absl::StatusOr<Assignment> AssignmentFromSolution(const IlpModel& model,
                                                  const RwaSolution& s);

std::string ReportToJson(const ValidationReport& report);

}  // namespace lexrwa

#endif  // LEXRWA_VALIDATE_H_
