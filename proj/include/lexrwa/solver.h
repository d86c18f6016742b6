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

// Exact and heuristic routing and wavelength assignment.
//
// SolveExact runs a depth-first branch-and-bound over per-demand
// (route, channel) decisions. Demands are branched in order of decreasing
// minimal route length (shortest path, or shortest link-disjoint pair for
// protected demands), ties by id. The children of a demand are ordered by
// objective increment, then route length, then channel, then the link-id
// sequence, and are generated lazily so that no route enumeration is ever
// truncated. A new channel may only be opened right after the highest one in
// use, which removes channel relabelings from the search.
//
// Every node is bounded by the cheaper of two completions: one that fits all
// remaining demands into the channels already open, and one that opens more
// channels. Both count each remaining demand at its cheapest free route, and
// both use integer link prices found at the root by subgradient ascent: a
// route pays one unit per link plus the link's price, and the prices of the
// free (link, channel) slots are paid back, which stays a valid bound
// because a slot carries at most one lightpath. Free link and per-node port
// counts, and node-cut channel counts, tighten the two completions further.
//
// Before the search a deterministic multi-start greedy (several demand
// orders, unit and priced route costs, first and best fit) supplies the
// incumbent when warm starts are enabled.
//
// Costs are kept as integers: the weights are scaled by the lcm of their
// denominators, so comparisons are exact.

#ifndef LEXRWA_SOLVER_H_
#define LEXRWA_SOLVER_H_

#include "absl/status/statusor.h"
#include "lexrwa/design.h"
#include "lexrwa/solution.h"
#include "lexrwa/topology.h"
#include "lexrwa/traffic.h"

namespace lexrwa {

// Proven optimum, or the best incumbent (status feasible) when a time or
// node limit stops the search. With thread_count > 1 the subtrees below the
// first few branching levels are shared out to worker threads; the returned
// objective and status do not depend on the thread count.
absl::StatusOr<RwaSolution> SolveExact(const NetworkTopology& t,
                                       const TrafficMatrix& m,
                                       const DesignConfig& cfg,
                                       const SolverOptions& opts);

// Plain exhaustive enumeration for cross-checking SolveExact. Only accepts
// instances with at most 5 nodes, 4 demands and 3 channels.
absl::StatusOr<RwaSolution> SolveOracle(const NetworkTopology& t,
                                        const TrafficMatrix& m,
                                        const DesignConfig& cfg);

// First-fit: demands in branching order, each on the lowest channel where a
// route exists, using the shortest free route on that channel. Protected
// demands take the shortest free path and then the shortest path disjoint
// from it. Status is feasible, or infeasible when some demand found no room
// (which does not prove infeasibility).
absl::StatusOr<RwaSolution> SolveHeuristic(const NetworkTopology& t,
                                           const TrafficMatrix& m,
                                           const DesignConfig& cfg);

}  // namespace lexrwa

#endif  // LEXRWA_SOLVER_H_
