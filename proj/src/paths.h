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

// Path primitives over a topology with some links blocked. Blocked sets are
// bitmasks over link ids, `Graph::words` 64-bit words long.

#ifndef LEXRWA_SRC_PATHS_H_
#define LEXRWA_SRC_PATHS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lexrwa/topology.h"

namespace lexrwa::internal {

inline constexpr int kUnreachable = 1 << 28;
inline constexpr int64_t kInfiniteRouteCost = INT64_MAX / 8;

using Mask = std::span<const uint64_t>;
using MutableMask = std::span<uint64_t>;

inline bool TestBit(Mask m, int e) { return (m[e >> 6] >> (e & 63)) & 1; }
inline void SetBit(MutableMask m, int e) { m[e >> 6] |= uint64_t{1} << (e & 63); }
inline void ClearBit(MutableMask m, int e) {
  m[e >> 6] &= ~(uint64_t{1} << (e & 63));
}
bool Intersects(Mask a, Mask b);
int PopCount(Mask m);

struct Graph {
  explicit Graph(const NetworkTopology& t);

  int num_nodes;
  int num_links;
  int words;
  std::vector<int> src;
  std::vector<int> dst;
  std::vector<std::vector<int>> out;  // link ids in increasing order
  std::vector<std::vector<int>> in;
};

// Hop distance from every node to `target` over unblocked links.
void DistancesTo(const Graph& g, Mask blocked, int target,
                 std::vector<int>* dist);

// Among the shortest unblocked paths, the one with the lexicographically
// smallest link-id sequence.
std::optional<std::vector<int>> ShortestPath(const Graph& g, Mask blocked,
                                             int s, int t);

// Minimum total hop count of two link-disjoint unblocked s-t paths, or
// kUnreachable. When `used` is non-null it receives the links of one
// optimal pair (as a mask, `g.words` long).
int DisjointPairLength(const Graph& g, Mask blocked, int s, int t,
                       std::vector<uint64_t>* used);

// Minimum total cost of `num_paths` (1 or 2) link-disjoint unblocked s-t
// paths, with `weight` per link (unit weights if empty; weights must be
// positive), or kInfiniteRouteCost. `used`, if non-null, receives the links
// of one optimal route.
int64_t MinCostRoute(const Graph& g, Mask blocked, int s, int t,
                     int num_paths, std::span<const int64_t> weight,
                     std::vector<uint64_t>* used);

// Splits the links of a MinCostRoute result into its s-t paths, shorter
// (then lexicographically smaller) first.
std::vector<std::vector<int>> SplitRoute(const Graph& g, Mask used, int s,
                                         int t);

// Visits every simple s-t path with exactly `length` unblocked links in
// lexicographic link-id order. `dist` must be DistancesTo(g, blocked, t).
// `visit` returns false to stop; the function returns false if stopped.
template <typename Visit>
bool ForEachPathOfLength(const Graph& g, Mask blocked, int s, int t,
                         int length, const std::vector<int>& dist,
                         Visit&& visit);

// --- implementation ---------------------------------------------------------

namespace detail {

template <typename Visit>
bool ExtendPath(const Graph& g, Mask blocked, int u, int t, int remaining,
                const std::vector<int>& dist, std::vector<char>& on_path,
                std::vector<int>& path, Visit& visit) {
  if (remaining == 0) return u == t ? visit(path) : true;
  if (u == t) return true;
  for (int e : g.out[u]) {
    const int v = g.dst[e];
    if (TestBit(blocked, e) || on_path[v] || dist[v] > remaining - 1) continue;
    on_path[v] = 1;
    path.push_back(e);
    const bool go_on =
        ExtendPath(g, blocked, v, t, remaining - 1, dist, on_path, path, visit);
    path.pop_back();
    on_path[v] = 0;
    if (!go_on) return false;
  }
  return true;
}

}  // namespace detail

template <typename Visit>
bool ForEachPathOfLength(const Graph& g, Mask blocked, int s, int t,
                         int length, const std::vector<int>& dist,
                         Visit&& visit) {
  if (dist[s] > length) return true;
  std::vector<char> on_path(g.num_nodes, 0);
  std::vector<int> path;
  path.reserve(length);
  on_path[s] = 1;
  return detail::ExtendPath(g, blocked, s, t, length, dist, on_path, path,
                            visit);
}

}  // namespace lexrwa::internal

#endif  // LEXRWA_SRC_PATHS_H_
