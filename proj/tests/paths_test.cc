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
#include <cstdint>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "test_util.h"

namespace lexrwa::internal {
namespace {

using ::lexrwa::testing::RandomMicroInstance;
using ::lexrwa::testing::Unwrap;

// All simple s-t paths avoiding `blocked`, by plain recursion.
void AllPaths(const Graph& g, const std::vector<uint64_t>& blocked, int u,
              int t, std::vector<char>& seen, std::vector<int>& path,
              std::vector<std::vector<int>>& out) {
  if (u == t) {
    out.push_back(path);
    return;
  }
  for (int e = 0; e < g.num_links; ++e) {
    if (g.src[e] != u || TestBit(blocked, e) || seen[g.dst[e]]) continue;
    seen[g.dst[e]] = 1;
    path.push_back(e);
    AllPaths(g, blocked, g.dst[e], t, seen, path, out);
    path.pop_back();
    seen[g.dst[e]] = 0;
  }
}

std::vector<std::vector<int>> AllPaths(const Graph& g,
                                       const std::vector<uint64_t>& blocked,
                                       int s, int t) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(g.num_nodes, 0);
  std::vector<int> path;
  seen[s] = 1;
  AllPaths(g, blocked, s, t, seen, path, out);
  return out;
}

int64_t Cost(const std::vector<int>& path, const std::vector<int64_t>& w) {
  int64_t c = 0;
  for (int e : path) c += w.empty() ? 1 : w[e];
  return c;
}

bool Disjoint(const std::vector<int>& a, const std::vector<int>& b) {
  for (int e : a) {
    if (std::find(b.begin(), b.end(), e) != b.end()) return false;
  }
  return true;
}

// Cheapest single path or disjoint pair by exhaustive search.
int64_t BruteForce(const Graph& g, const std::vector<uint64_t>& blocked,
                   int s, int t, int num_paths,
                   const std::vector<int64_t>& w) {
  const std::vector<std::vector<int>> paths = AllPaths(g, blocked, s, t);
  int64_t best = kInfiniteRouteCost;
  for (size_t i = 0; i < paths.size(); ++i) {
    if (num_paths == 1) {
      best = std::min(best, Cost(paths[i], w));
      continue;
    }
    for (size_t j = i + 1; j < paths.size(); ++j) {
      if (Disjoint(paths[i], paths[j])) {
        best = std::min(best, Cost(paths[i], w) + Cost(paths[j], w));
      }
    }
  }
  return best;
}

// The classic trap: the shortest path 0-1-2-3 blocks both detours, yet the
// pair 0-1-3 / 0-2-3 exists.
Graph TrapGraph() {
  return Graph(Unwrap(ParseTopology(
      "topology trap nodes=4 capacity=1\n"
      "arc 0 1\narc 1 2\narc 2 3\narc 0 2\narc 1 3\n")));
}

TEST(PathsTest, MaskHelpers) {
  std::vector<uint64_t> a(2, 0);
  std::vector<uint64_t> b(2, 0);
  SetBit(a, 3);
  SetBit(a, 70);
  SetBit(b, 71);
  EXPECT_TRUE(TestBit(a, 70));
  EXPECT_FALSE(TestBit(a, 71));
  EXPECT_FALSE(Intersects(a, b));
  SetBit(b, 3);
  EXPECT_TRUE(Intersects(a, b));
  EXPECT_EQ(PopCount(a), 2);
  ClearBit(a, 3);
  EXPECT_EQ(PopCount(a), 1);
}

TEST(PathsTest, ShortestPathIsLexicographicallySmallest) {
  const Graph g(Unwrap(ParseTopology(
      "topology sq nodes=4 capacity=1\nlink 0 1\nlink 1 3\nlink 0 2\n"
      "link 2 3\n")));
  const std::vector<uint64_t> none(g.words, 0);
  // Links: 0:0->1 2:1->3 4:0->2 6:2->3.
  EXPECT_EQ(ShortestPath(g, none, 0, 3), (std::vector<int>{0, 2}));
  std::vector<uint64_t> blocked = none;
  SetBit(blocked, 2);
  EXPECT_EQ(ShortestPath(g, blocked, 0, 3), (std::vector<int>{4, 6}));
  SetBit(blocked, 6);
  EXPECT_FALSE(ShortestPath(g, blocked, 0, 3).has_value());
}

TEST(PathsTest, DisjointPairEscapesTheTrap) {
  const Graph g = TrapGraph();
  const std::vector<uint64_t> none(g.words, 0);
  std::vector<uint64_t> used;
  EXPECT_EQ(DisjointPairLength(g, none, 0, 3, &used), 4);
  const std::vector<std::vector<int>> split = SplitRoute(g, used, 0, 3);
  ASSERT_EQ(split.size(), 2u);
  EXPECT_EQ(split[0], (std::vector<int>{0, 4}));
  EXPECT_EQ(split[1], (std::vector<int>{3, 2}));
  EXPECT_EQ(DisjointPairLength(g, none, 3, 0, nullptr), kUnreachable);
}

TEST(PathsTest, MinCostRouteMatchesBruteForce) {
  std::mt19937_64 rng(5);
  int checked = 0;
  for (uint64_t seed = 1; seed <= 200; ++seed) {
    const testing::MicroInstance inst = RandomMicroInstance(seed);
    const Graph g(inst.topology);
    std::vector<uint64_t> blocked(g.words, 0);
    std::vector<int64_t> weight(g.num_links);
    for (int e = 0; e < g.num_links; ++e) {
      if (rng() % 5 == 0) SetBit(blocked, e);
      weight[e] = 1 + static_cast<int64_t>(rng() % 9);
    }
    for (const Demand& d : inst.traffic.demands) {
      const int s = d.src.value();
      const int t = d.dst.value();
      for (int k : {1, 2}) {
        for (bool unit : {true, false}) {
          const std::vector<int64_t> w = unit ? std::vector<int64_t>{} : weight;
          std::vector<uint64_t> used;
          const int64_t got = MinCostRoute(g, blocked, s, t, k, w, &used);
          EXPECT_EQ(got, BruteForce(g, blocked, s, t, k, w))
              << "seed " << seed << " k " << k;
          if (got >= kInfiniteRouteCost) continue;
          ++checked;
          const std::vector<std::vector<int>> split =
              SplitRoute(g, used, s, t);
          ASSERT_EQ(static_cast<int>(split.size()), k);
          int64_t total = 0;
          for (const std::vector<int>& p : split) {
            EXPECT_EQ(g.src[p.front()], s);
            EXPECT_EQ(g.dst[p.back()], t);
            for (size_t i = 1; i < p.size(); ++i) {
              EXPECT_EQ(g.dst[p[i - 1]], g.src[p[i]]);
            }
            total += Cost(p, w);
          }
          EXPECT_EQ(total, got);
          if (k == 2) EXPECT_TRUE(Disjoint(split[0], split[1]));
        }
      }
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(PathsTest, PathsOfLengthMatchBruteForce) {
  for (uint64_t seed = 1; seed <= 100; ++seed) {
    const testing::MicroInstance inst = RandomMicroInstance(seed);
    const Graph g(inst.topology);
    const std::vector<uint64_t> none(g.words, 0);
    for (const Demand& d : inst.traffic.demands) {
      const int s = d.src.value();
      const int t = d.dst.value();
      std::vector<int> dist;
      DistancesTo(g, none, t, &dist);
      std::vector<std::vector<int>> expected = AllPaths(g, none, s, t);
      std::sort(expected.begin(), expected.end());
      std::vector<std::vector<int>> got;
      for (int len = 1; len < g.num_nodes; ++len) {
        std::vector<std::vector<int>> of_len;
        ForEachPathOfLength(g, none, s, t, len, dist,
                            [&](const std::vector<int>& p) {
                              EXPECT_EQ(static_cast<int>(p.size()), len);
                              of_len.push_back(p);
                              return true;
                            });
        EXPECT_TRUE(std::is_sorted(of_len.begin(), of_len.end()));
        got.insert(got.end(), of_len.begin(), of_len.end());
      }
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, expected) << "seed " << seed;
    }
  }
}

TEST(PathsTest, PathEnumerationStopsOnRequest) {
  const Graph g = TrapGraph();
  const std::vector<uint64_t> none(g.words, 0);
  std::vector<int> dist;
  DistancesTo(g, none, 3, &dist);
  EXPECT_EQ(dist[0], 2);
  int visits = 0;
  EXPECT_FALSE(ForEachPathOfLength(g, none, 0, 3, 2, dist,
                                   [&](const std::vector<int>&) {
                                     ++visits;
                                     return false;
                                   }));
  EXPECT_EQ(visits, 1);
}

}  // namespace
}  // namespace lexrwa::internal
