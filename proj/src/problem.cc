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

#include "problem.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace lexrwa::internal {
namespace {

// Exhaustive cut enumeration is used up to this many nodes; beyond it only
// single-node cuts are tried.
constexpr int kMaxCutEnumerationNodes = 16;

int64_t CeilDiv(int64_t a, int64_t b) { return (a + b - 1) / b; }

// Every channel offers |delta+(S)| links leaving S, and every demand from S
// to V \ S needs one of them per lightpath, so
//   channels >= ceil(crossing lightpaths / |delta+(S)|).
// Also channels >= ceil(minimum total route length / |E|).
// A protected demand counts twice and, per channel, at most floor(cut / 2)
// of them cross.
int ChannelLowerBound(const Problem& p) {
  if (p.demands.empty()) return 0;
  const Graph& g = p.graph;
  int64_t total = 0;
  for (const DemandSpec& d : p.demands) total += d.base_length;
  int64_t bound = std::max<int64_t>(1, CeilDiv(total, g.num_links));

  auto cut_bound = [&](auto&& in_set) {
    int64_t cut = 0;
    for (int e = 0; e < g.num_links; ++e) {
      if (in_set(g.src[e]) && !in_set(g.dst[e])) ++cut;
    }
    int64_t units = 0;
    int64_t pairs = 0;
    for (const DemandSpec& d : p.demands) {
      if (in_set(d.src) && !in_set(d.dst)) {
        units += d.is_protected ? 2 : 1;
        if (d.is_protected) ++pairs;
      }
    }
    // Unroutable demands are caught through base_length already.
    if (units > 0 && cut > 0) bound = std::max(bound, CeilDiv(units, cut));
    // A protected demand takes two of the cut links of its channel, so an
    // odd cut wastes one link per channel.
    if (pairs > 0 && cut >= 2) bound = std::max(bound, CeilDiv(pairs, cut / 2));
  };
  if (g.num_nodes <= kMaxCutEnumerationNodes) {
    const uint32_t full = (uint32_t{1} << g.num_nodes) - 1;
    for (uint32_t s = 1; s < full; ++s) {
      cut_bound([s](int v) { return (s >> v) & 1; });
    }
  } else {
    for (int v = 0; v < g.num_nodes; ++v) {
      cut_bound([v](int u) { return u == v; });
      cut_bound([v](int u) { return u != v; });
    }
  }
  return static_cast<int>(std::min<int64_t>(bound, INT32_MAX));
}

}  // namespace

absl::StatusOr<Problem> BuildProblem(const NetworkTopology& t,
                                     const TrafficMatrix& m,
                                     const DesignConfig& cfg) {
  if (absl::Status s = ValidateDesignInputs(t, m, cfg); !s.ok()) return s;

  Problem p{Graph(t)};
  const Graph& g = p.graph;
  p.num_channels = cfg.capacity;
  p.scale = std::lcm(cfg.weights.alpha1.denominator(),
                     cfg.weights.alpha2.denominator());
  p.channel_weight = (cfg.weights.alpha1 * p.scale).numerator();
  p.usage_weight = (cfg.weights.alpha2 * p.scale).numerator();

  p.out_links.assign(static_cast<size_t>(g.num_nodes) * g.words, 0);
  p.in_links.assign(static_cast<size_t>(g.num_nodes) * g.words, 0);
  p.out_degree.assign(g.num_nodes, 0);
  p.in_degree.assign(g.num_nodes, 0);
  for (int e = 0; e < g.num_links; ++e) {
    SetBit(MutableMask(p.out_links).subspan(g.src[e] * g.words, g.words), e);
    SetBit(MutableMask(p.in_links).subspan(g.dst[e] * g.words, g.words), e);
    ++p.out_degree[g.src[e]];
    ++p.in_degree[g.dst[e]];
  }

  const std::vector<uint64_t> none(g.words, 0);
  for (const Demand& d : m.demands) {
    DemandSpec spec{d.id.value(), d.src.value(), d.dst.value(),
                    d.is_protected, kUnreachable, {}};
    if (d.is_protected) {
      spec.base_length =
          DisjointPairLength(g, none, spec.src, spec.dst, &spec.base_links);
    } else if (auto path = ShortestPath(g, none, spec.src, spec.dst)) {
      spec.base_length = static_cast<int>(path->size());
      spec.base_links.assign(g.words, 0);
      for (int e : *path) SetBit(spec.base_links, e);
    }
    if (spec.base_length >= kUnreachable) p.infeasible = true;
    p.demands.push_back(std::move(spec));
  }
  std::stable_sort(p.demands.begin(), p.demands.end(),
                   [](const DemandSpec& a, const DemandSpec& b) {
                     if (a.base_length != b.base_length) {
                       return a.base_length > b.base_length;
                     }
                     return a.id < b.id;
                   });
  if (!p.infeasible) {
    p.min_channels = ChannelLowerBound(p);
    if (p.min_channels > p.num_channels) p.infeasible = true;
  }
  return p;
}

int64_t CostOf(const Problem& p, const std::vector<Choice>& choices) {
  std::set<int> channels;
  int64_t usage = 0;
  for (const Choice& c : choices) {
    channels.insert(c.channel);
    usage += c.length();
  }
  return p.channel_weight * static_cast<int64_t>(channels.size()) +
         p.usage_weight * usage;
}

RwaSolution MakeSolution(const Problem& p, const std::vector<Choice>& choices,
                         SolveStatus status) {
  RwaSolution s;
  s.status = status;
  if (choices.size() != p.demands.size()) return s;
  std::set<int> channels;
  for (size_t i = 0; i < choices.size(); ++i) {
    const Choice& c = choices[i];
    const DemandId demand(p.demands[i].id);
    auto to_links = [](const std::vector<int>& path) {
      std::vector<LinkId> links;
      for (int e : path) links.push_back(LinkId(e));
      return links;
    };
    s.lightpaths.push_back(
        {demand, PathRole::kWorking, to_links(c.working), ChannelId(c.channel)});
    if (p.demands[i].is_protected) {
      s.lightpaths.push_back({demand, PathRole::kProtection,
                              to_links(c.protection), ChannelId(c.channel)});
    }
    channels.insert(c.channel);
    s.wavelength_link_usage += c.length();
  }
  std::stable_sort(s.lightpaths.begin(), s.lightpaths.end(),
                   [](const Lightpath& a, const Lightpath& b) {
                     return a.demand < b.demand;
                   });
  s.wavelength_count = static_cast<int>(channels.size());
  s.objective_value = Rational(CostOf(p, choices), p.scale);
  return s;
}

std::vector<Choice> FirstFit(const Problem& p) {
  const Graph& g = p.graph;
  std::vector<uint64_t> occupied(
      static_cast<size_t>(p.num_channels) * g.words, 0);
  std::vector<Choice> choices;
  for (const DemandSpec& d : p.demands) {
    bool placed = false;
    for (int c = 0; c < p.num_channels && !placed; ++c) {
      MutableMask occ = MutableMask(occupied).subspan(c * g.words, g.words);
      std::optional<std::vector<int>> working =
          ShortestPath(g, occ, d.src, d.dst);
      if (!working) continue;
      Choice choice{c, *working, {}};
      if (d.is_protected) {
        std::vector<uint64_t> blocked(occ.begin(), occ.end());
        for (int e : *working) SetBit(blocked, e);
        std::optional<std::vector<int>> backup =
            ShortestPath(g, blocked, d.src, d.dst);
        if (!backup) continue;
        choice.protection = *backup;
      }
      for (int e : choice.working) SetBit(occ, e);
      for (int e : choice.protection) SetBit(occ, e);
      choices.push_back(std::move(choice));
      placed = true;
    }
    if (!placed) return {};
  }
  return choices;
}

}  // namespace lexrwa::internal
