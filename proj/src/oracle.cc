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

// Deliberately naive: it shares no code with the branch-and-bound beyond the
// public types, enumerates every route of every demand on every channel, and
// evaluates the objective in exact rationals.

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "absl/strings/str_cat.h"
#include "lexrwa/solver.h"

namespace lexrwa {
namespace {

constexpr int kMaxOracleNodes = 5;
constexpr int kMaxOracleDemands = 4;
constexpr int kMaxOracleChannels = 3;

using Path = std::vector<LinkId>;

void CollectPaths(const NetworkTopology& t, NodeId at, NodeId target,
                  std::vector<bool>& visited, Path& path,
                  std::vector<Path>& out) {
  if (at == target) {
    out.push_back(path);
    return;
  }
  for (LinkId e : t.OutgoingIds(at)) {
    const NodeId next = t.link(e).dst;
    if (visited[next.value()]) continue;
    visited[next.value()] = true;
    path.push_back(e);
    CollectPaths(t, next, target, visited, path, out);
    path.pop_back();
    visited[next.value()] = false;
  }
}

std::vector<Path> AllSimplePaths(const NetworkTopology& t, NodeId s,
                                 NodeId r) {
  std::vector<bool> visited(t.num_nodes(), false);
  visited[s.value()] = true;
  Path path;
  std::vector<Path> out;
  CollectPaths(t, s, r, visited, path, out);
  return out;
}

bool SharesLink(const Path& a, const Path& b) {
  for (LinkId e : a) {
    if (std::find(b.begin(), b.end(), e) != b.end()) return true;
  }
  return false;
}

// Routes a demand may take, ignoring channels: one path, or an ordered pair
// of link-disjoint paths.
struct Route {
  Path working;
  std::optional<Path> protection;
};

class Enumerator {
 public:
  Enumerator(const NetworkTopology& t, const TrafficMatrix& m,
             const DesignConfig& cfg)
      : cfg_(cfg) {
    for (const Demand& d : m.demands) {
      std::vector<Path> paths = AllSimplePaths(t, d.src, d.dst);
      std::vector<Route> routes;
      for (const Path& w : paths) {
        if (!d.is_protected) {
          routes.push_back({w, std::nullopt});
          continue;
        }
        for (const Path& p : paths) {
          if (!SharesLink(w, p)) routes.push_back({w, p});
        }
      }
      routes_.push_back(std::move(routes));
    }
  }

  void Run() { Recurse(0); }

  bool found() const { return best_.has_value(); }
  Rational best_value() const { return *best_; }
  const std::vector<std::pair<int, int>>& best_choice() const {
    return best_choice_;
  }
  const std::vector<std::vector<Route>>& routes() const { return routes_; }

 private:
  Rational Value() const {
    return cfg_.weights.alpha1 * static_cast<int64_t>(channels_used_.size()) +
           cfg_.weights.alpha2 * static_cast<int64_t>(usage_);
  }

  bool Fits(const Route& r, int c) const {
    for (LinkId e : r.working) {
      if (taken_.count({e.value(), c})) return false;
    }
    if (r.protection) {
      for (LinkId e : *r.protection) {
        if (taken_.count({e.value(), c})) return false;
      }
    }
    return true;
  }

  void Place(const Route& r, int c, bool add) {
    auto touch = [&](const Path& p) {
      for (LinkId e : p) {
        if (add) {
          taken_.insert({e.value(), c});
        } else {
          taken_.erase({e.value(), c});
        }
      }
    };
    touch(r.working);
    if (r.protection) touch(*r.protection);
  }

  void Recurse(size_t i) {
    // The objective never decreases as demands are added, so a partial
    // assignment that is already no better than the best is abandoned.
    if (best_ && Value() >= *best_) return;
    if (i == routes_.size()) {
      best_ = Value();
      best_choice_ = choice_;
      return;
    }
    for (int c = 0; c < cfg_.capacity; ++c) {
      for (size_t k = 0; k < routes_[i].size(); ++k) {
        const Route& r = routes_[i][k];
        if (!Fits(r, c)) continue;
        const int length = static_cast<int>(
            r.working.size() + (r.protection ? r.protection->size() : 0));
        Place(r, c, true);
        ++channels_used_[c];
        usage_ += length;
        choice_.push_back({c, static_cast<int>(k)});
        Recurse(i + 1);
        choice_.pop_back();
        usage_ -= length;
        if (--channels_used_[c] == 0) channels_used_.erase(c);
        Place(r, c, false);
      }
    }
  }

  const DesignConfig& cfg_;
  std::vector<std::vector<Route>> routes_;

  std::set<std::pair<int, int>> taken_;
  std::map<int, int> channels_used_;
  int usage_ = 0;
  std::vector<std::pair<int, int>> choice_;

  std::optional<Rational> best_;
  std::vector<std::pair<int, int>> best_choice_;
};

}  // namespace

absl::StatusOr<RwaSolution> SolveOracle(const NetworkTopology& t,
                                        const TrafficMatrix& m,
                                        const DesignConfig& cfg) {
  if (absl::Status s = ValidateDesignInputs(t, m, cfg); !s.ok()) return s;
  if (t.num_nodes() > kMaxOracleNodes ||
      static_cast<int>(m.demands.size()) > kMaxOracleDemands ||
      cfg.capacity > kMaxOracleChannels) {
    return absl::InvalidArgumentError(absl::StrCat(
        "instance too large for exhaustive enumeration (limits: ",
        kMaxOracleNodes, " nodes, ", kMaxOracleDemands, " demands, ",
        kMaxOracleChannels, " channels)"));
  }
  const auto start = std::chrono::steady_clock::now();
  Enumerator enumerator(t, m, cfg);
  enumerator.Run();

  RwaSolution s;
  if (enumerator.found()) {
    s.status = SolveStatus::kOptimal;
    s.objective_value = enumerator.best_value();
    std::set<int> channels;
    for (size_t i = 0; i < m.demands.size(); ++i) {
      const auto [c, k] = enumerator.best_choice()[i];
      const Route& r = enumerator.routes()[i][k];
      const Demand& d = m.demands[i];
      s.lightpaths.push_back({d.id, PathRole::kWorking, r.working,
                              ChannelId(c)});
      s.wavelength_link_usage += static_cast<int>(r.working.size());
      if (r.protection) {
        s.lightpaths.push_back({d.id, PathRole::kProtection, *r.protection,
                                ChannelId(c)});
        s.wavelength_link_usage += static_cast<int>(r.protection->size());
      }
      channels.insert(c);
    }
    std::stable_sort(s.lightpaths.begin(), s.lightpaths.end(),
                     [](const Lightpath& a, const Lightpath& b) {
                       return a.demand < b.demand;
                     });
    s.wavelength_count = static_cast<int>(channels.size());
  }
  s.stats.seconds = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  return s;
}

}  // namespace lexrwa
