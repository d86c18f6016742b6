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

#include "paths.h"

#include <algorithm>
#include <bit>
#include <deque>
#include <vector>

namespace lexrwa::internal {

bool Intersects(Mask a, Mask b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] & b[i]) return true;
  }
  return false;
}

int PopCount(Mask m) {
  int n = 0;
  for (uint64_t w : m) n += std::popcount(w);
  return n;
}

Graph::Graph(const NetworkTopology& t)
    : num_nodes(t.num_nodes()),
      num_links(t.num_links()),
      words((t.num_links() + 63) / 64),
      out(t.num_nodes()),
      in(t.num_nodes()) {
  for (const FiberLink& l : t.links()) {
    src.push_back(l.src.value());
    dst.push_back(l.dst.value());
    out[l.src.value()].push_back(l.id.value());
    in[l.dst.value()].push_back(l.id.value());
  }
}

void DistancesTo(const Graph& g, Mask blocked, int target,
                 std::vector<int>* dist) {
  dist->assign(g.num_nodes, kUnreachable);
  (*dist)[target] = 0;
  std::vector<int> queue = {target};
  for (size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    for (int e : g.in[v]) {
      const int u = g.src[e];
      if (TestBit(blocked, e) || (*dist)[u] != kUnreachable) continue;
      (*dist)[u] = (*dist)[v] + 1;
      queue.push_back(u);
    }
  }
}

std::optional<std::vector<int>> ShortestPath(const Graph& g, Mask blocked,
                                             int s, int t) {
  std::vector<int> dist;
  DistancesTo(g, blocked, t, &dist);
  if (dist[s] == kUnreachable) return std::nullopt;
  // Walking down the distance gradient with the smallest link id at every
  // step yields the lexicographically smallest shortest path.
  std::vector<int> path;
  for (int u = s; u != t;) {
    for (int e : g.out[u]) {
      if (!TestBit(blocked, e) && dist[g.dst[e]] == dist[u] - 1) {
        path.push_back(e);
        u = g.dst[e];
        break;
      }
    }
  }
  return path;
}

int64_t MinCostRoute(const Graph& g, Mask blocked, int s, int t,
                     int num_paths, std::span<const int64_t> weight,
                     std::vector<uint64_t>* used) {
  // Successive shortest paths on the unit-capacity residual network;
  // Bellman-Ford handles the negative reverse arcs.
  auto cost = [&](int e) -> int64_t { return weight.empty() ? 1 : weight[e]; };
  constexpr int64_t kFar = kInfiniteRouteCost;
  std::vector<char> flow(g.num_links, 0);
  std::vector<int64_t> dist(g.num_nodes);
  std::vector<int> via(g.num_nodes);  // arc into node: e, or ~e if reversed
  int64_t total = 0;
  for (int round = 0; round < num_paths; ++round) {
    std::fill(dist.begin(), dist.end(), kFar);
    dist[s] = 0;
    for (int pass = 0; pass < g.num_nodes; ++pass) {
      bool changed = false;
      for (int e = 0; e < g.num_links; ++e) {
        if (TestBit(blocked, e)) continue;
        const int a = g.src[e];
        const int b = g.dst[e];
        if (!flow[e] && dist[a] != kFar && dist[a] + cost(e) < dist[b]) {
          dist[b] = dist[a] + cost(e);
          via[b] = e;
          changed = true;
        }
        if (flow[e] && dist[b] != kFar && dist[b] - cost(e) < dist[a]) {
          dist[a] = dist[b] - cost(e);
          via[a] = ~e;
          changed = true;
        }
      }
      if (!changed) break;
    }
    if (dist[t] == kFar) return kFar;
    total += dist[t];
    for (int v = t; v != s;) {
      const int arc = via[v];
      if (arc >= 0) {
        flow[arc] = 1;
        v = g.src[arc];
      } else {
        flow[~arc] = 0;
        v = g.dst[~arc];
      }
    }
  }
  if (used != nullptr) {
    used->assign(g.words, 0);
    for (int e = 0; e < g.num_links; ++e) {
      if (flow[e]) SetBit(*used, e);
    }
  }
  return total;
}

std::vector<std::vector<int>> SplitRoute(const Graph& g, Mask used, int s,
                                         int t) {
  // An optimal flow with positive costs has no cycles, so following unused
  // flow links from s always ends at t along a simple path.
  std::vector<uint64_t> left(used.begin(), used.end());
  std::vector<std::vector<int>> paths;
  for (;;) {
    std::vector<int> path;
    for (int u = s; u != t;) {
      int next = -1;
      for (int e : g.out[u]) {
        if (TestBit(left, e)) {
          next = e;
          break;
        }
      }
      if (next < 0) break;
      ClearBit(left, next);
      path.push_back(next);
      u = g.dst[next];
    }
    if (path.empty()) break;
    paths.push_back(std::move(path));
  }
  std::sort(paths.begin(), paths.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return std::make_pair(a.size(), a) < std::make_pair(b.size(), b);
            });
  return paths;
}

int DisjointPairLength(const Graph& g, Mask blocked, int s, int t,
                       std::vector<uint64_t>* used) {
  const int64_t length = MinCostRoute(g, blocked, s, t, 2, {}, used);
  return length >= kInfiniteRouteCost ? kUnreachable
                                      : static_cast<int>(length);
}

}  // namespace lexrwa::internal
