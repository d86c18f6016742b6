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

#include <chrono>

#include "lexrwa/solver.h"
#include "problem.h"

namespace lexrwa {

absl::StatusOr<RwaSolution> SolveHeuristic(const NetworkTopology& t,
                                           const TrafficMatrix& m,
                                           const DesignConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  absl::StatusOr<internal::Problem> problem = internal::BuildProblem(t, m, cfg);
  if (!problem.ok()) return problem.status();
  std::vector<internal::Choice> choices;
  if (!problem->infeasible) choices = internal::FirstFit(*problem);
  RwaSolution s;
  if (choices.size() == problem->demands.size()) {
    s = internal::MakeSolution(*problem, choices, SolveStatus::kFeasible);
  }
  s.stats.seconds = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  return s;
}

}  // namespace lexrwa
