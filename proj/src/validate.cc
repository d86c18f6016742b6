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

#include "lexrwa/validate.h"

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "json.hpp"

namespace lexrwa {
namespace {

using nlohmann::json;

const char* RoleName(PathRole role) {
  return role == PathRole::kWorking ? "working" : "protection";
}

class Checker {
 public:
  Checker(const NetworkTopology& t, const TrafficMatrix& m,
          const DesignConfig& cfg, const RwaSolution& s)
      : t_(t), m_(m), cfg_(cfg), s_(s) {}

  std::vector<Violation> Run() {
    CheckProvisioning();
    for (const Lightpath& p : s_.lightpaths) {
      CheckPath(p);
      CheckChannelRange(p);
    }
    CheckDemandChannels();
    CheckReuse();
    CheckDisjointness();
    return std::move(violations_);
  }

 private:
  void Add(ViolationClass kind, std::optional<DemandId> demand,
           std::optional<LinkId> link, std::optional<ChannelId> channel,
           std::string message) {
    violations_.push_back(
        {kind, demand, link, channel, std::move(message)});
  }

  const Demand* FindDemand(DemandId id) const {
    const int i = id.value();
    if (i < 0 || i >= static_cast<int>(m_.demands.size())) return nullptr;
    const Demand& d = m_.demands[i];
    return d.id == id ? &d : nullptr;
  }

  bool LinkExists(LinkId e) const {
    return e.value() >= 0 && e.value() < t_.num_links();
  }

  void CheckProvisioning() {
    std::map<DemandId, std::pair<int, int>> counts;
    for (const Lightpath& p : s_.lightpaths) {
      if (FindDemand(p.demand) == nullptr) {
        Add(ViolationClass::kProvisioning, p.demand, std::nullopt, p.channel,
            absl::StrCat("lightpath for unknown demand ", p.demand.value()));
        continue;
      }
      auto& [working, protection] = counts[p.demand];
      ++(p.role == PathRole::kWorking ? working : protection);
    }
    for (const Demand& d : m_.demands) {
      const auto [working, protection] = counts[d.id];
      if (working != 1) {
        Add(ViolationClass::kProvisioning, d.id, std::nullopt, std::nullopt,
            absl::StrCat("demand ", d.id.value(), " has ", working,
                         " working lightpaths, expected 1"));
      }
      const int expected = d.is_protected ? 1 : 0;
      if (protection != expected) {
        Add(ViolationClass::kProvisioning, d.id, std::nullopt, std::nullopt,
            absl::StrCat("demand ", d.id.value(), " has ", protection,
                         " protection lightpaths, expected ", expected));
      }
    }
  }

  void CheckPath(const Lightpath& p) {
    const Demand* d = FindDemand(p.demand);
    if (d == nullptr) return;
    const std::string what =
        absl::StrCat(RoleName(p.role), " path of demand ", p.demand.value());
    if (p.links.empty()) {
      Add(ViolationClass::kSimplePath, p.demand, std::nullopt, p.channel,
          absl::StrCat(what, " has no links"));
      return;
    }
    std::set<NodeId> visited = {d->src};
    NodeId at = d->src;
    for (LinkId e : p.links) {
      if (!LinkExists(e)) {
        Add(ViolationClass::kSimplePath, p.demand, e, p.channel,
            absl::StrCat(what, " uses unknown link ", e.value()));
        return;
      }
      const FiberLink& link = t_.link(e);
      if (link.src != at) {
        Add(ViolationClass::kSimplePath, p.demand, e, p.channel,
            absl::StrCat(what, " is not contiguous at link ", e.value()));
        return;
      }
      at = link.dst;
      if (!visited.insert(at).second) {
        Add(ViolationClass::kSimplePath, p.demand, e, p.channel,
            absl::StrCat(what, " revisits node ", at.value(), " via link ",
                         e.value()));
        return;
      }
    }
    if (at != d->dst) {
      Add(ViolationClass::kSimplePath, p.demand, p.links.back(), p.channel,
          absl::StrCat(what, " ends at node ", at.value(), " instead of ",
                       d->dst.value()));
    }
  }

  void CheckChannelRange(const Lightpath& p) {
    if (p.channel.value() < 0 || p.channel.value() >= cfg_.capacity) {
      Add(ViolationClass::kChannelRange, p.demand, std::nullopt, p.channel,
          absl::StrCat(RoleName(p.role), " path of demand ", p.demand.value(),
                       " uses channel ", p.channel.value(), " outside [0, ",
                       cfg_.capacity, ")"));
    }
  }

  void CheckDemandChannels() {
    std::map<DemandId, std::set<ChannelId>> channels;
    for (const Lightpath& p : s_.lightpaths) channels[p.demand].insert(p.channel);
    for (const auto& [demand, used] : channels) {
      if (used.size() > 1) {
        Add(ViolationClass::kSingleChannel, demand, std::nullopt, std::nullopt,
            absl::StrCat("demand ", demand.value(), " uses ", used.size(),
                         " channels"));
      }
    }
  }

  void CheckReuse() {
    // First demand seen on each (link, channel); later ones clash with it.
    std::map<std::pair<LinkId, ChannelId>, DemandId> owner;
    std::set<std::pair<LinkId, ChannelId>> reported;
    for (const Lightpath& p : s_.lightpaths) {
      std::set<LinkId> seen_here;
      for (LinkId e : p.links) {
        if (!seen_here.insert(e).second) continue;
        const auto key = std::make_pair(e, p.channel);
        auto [it, fresh] = owner.emplace(key, p.demand);
        if (fresh || it->second == p.demand) continue;
        if (!reported.insert(key).second) continue;
        Add(ViolationClass::kChannelReuse, p.demand, e, p.channel,
            absl::StrCat("link ", e.value(), " channel ", p.channel.value(),
                         " is used by demands ", it->second.value(), " and ",
                         p.demand.value()));
      }
    }
  }

  void CheckDisjointness() {
    std::map<DemandId, std::set<LinkId>> working;
    for (const Lightpath& p : s_.lightpaths) {
      if (p.role == PathRole::kWorking) {
        working[p.demand].insert(p.links.begin(), p.links.end());
      }
    }
    for (const Lightpath& p : s_.lightpaths) {
      if (p.role != PathRole::kProtection) continue;
      const std::set<LinkId>& w = working[p.demand];
      for (LinkId e : std::set<LinkId>(p.links.begin(), p.links.end())) {
        if (w.count(e)) {
          Add(ViolationClass::kLinkDisjointness, p.demand, e, std::nullopt,
              absl::StrCat("working and protection paths of demand ",
                           p.demand.value(), " share link ", e.value()));
        }
      }
    }
  }

  const NetworkTopology& t_;
  const TrafficMatrix& m_;
  const DesignConfig& cfg_;
  const RwaSolution& s_;
  std::vector<Violation> violations_;
};

ViolationClass ClassOf(ConstraintFamily family) {
  switch (family) {
    case ConstraintFamily::kProvisioning:
      return ViolationClass::kProvisioning;
    case ConstraintFamily::kWorkingFlow:
    case ConstraintFamily::kProtectionFlow:
      return ViolationClass::kSimplePath;
    case ConstraintFamily::kChannelUniqueness:
      return ViolationClass::kChannelReuse;
    case ConstraintFamily::kChannelUsage:
      return ViolationClass::kSingleChannel;
  }
  return ViolationClass::kProvisioning;
}

}  // namespace

std::string_view ViolationClassName(ViolationClass c) {
  switch (c) {
    case ViolationClass::kProvisioning:
      return "provisioning";
    case ViolationClass::kSimplePath:
      return "simple_path";
    case ViolationClass::kSingleChannel:
      return "single_channel";
    case ViolationClass::kChannelReuse:
      return "channel_reuse";
    case ViolationClass::kLinkDisjointness:
      return "link_disjointness";
    case ViolationClass::kChannelRange:
      return "channel_range";
  }
  return "unknown";
}

SolutionMetrics ComputeMetrics(const RwaSolution& s) {
  std::set<ChannelId> channels;
  SolutionMetrics metrics;
  for (const Lightpath& p : s.lightpaths) {
    channels.insert(p.channel);
    metrics.wavelength_link_usage += static_cast<int>(p.links.size());
  }
  metrics.wavelength_count = static_cast<int>(channels.size());
  return metrics;
}

absl::StatusOr<Assignment> AssignmentFromSolution(const IlpModel& model,
                                                  const RwaSolution& s) {
  Assignment values(model.num_variables(), 0);
  auto set = [&](const VariableRef& var) -> absl::Status {
    std::optional<int> index = model.IndexOf(var);
    if (!index) {
      return absl::InvalidArgumentError(absl::StrCat(
          "solution refers to ", VariableName(var),
          " which the model does not declare"));
    }
    values[*index] = 1;
    return absl::OkStatus();
  };
  for (const Lightpath& p : s.lightpaths) {
    const VarKind kind =
        p.role == PathRole::kWorking ? VarKind::kX : VarKind::kY;
    for (LinkId e : p.links) {
      if (absl::Status st = set({kind, p.demand, e, p.channel}); !st.ok()) {
        return st;
      }
      if (absl::Status st = set({VarKind::kGamma, std::nullopt, e, p.channel});
          !st.ok()) {
        return st;
      }
    }
    if (absl::Status st =
            set({VarKind::kTheta, p.demand, std::nullopt, p.channel});
        !st.ok()) {
      return st;
    }
    if (absl::Status st =
            set({VarKind::kDelta, std::nullopt, std::nullopt, p.channel});
        !st.ok()) {
      return st;
    }
  }
  return values;
}

ValidationReport CheckSolution(const NetworkTopology& t, const TrafficMatrix& m,
                               const DesignConfig& cfg, const RwaSolution& s) {
  ValidationReport report;
  report.violations = Checker(t, m, cfg, s).Run();
  report.metrics = ComputeMetrics(s);
  report.objective =
      cfg.weights.alpha1 * int64_t{report.metrics.wavelength_count} +
      cfg.weights.alpha2 * int64_t{report.metrics.wavelength_link_usage};
  report.metrics_consistent =
      s.wavelength_count == report.metrics.wavelength_count &&
      s.wavelength_link_usage == report.metrics.wavelength_link_usage &&
      s.objective_value == report.objective;
  if (!report.ok()) return report;

  // Second opinion from the algebraic model.
  absl::StatusOr<IlpModel> model = BuildModel(t, m, cfg);
  if (!model.ok()) return report;
  absl::StatusOr<Assignment> assignment = AssignmentFromSolution(*model, s);
  if (!assignment.ok()) {
    report.violations.push_back({ViolationClass::kProvisioning, std::nullopt,
                                 std::nullopt, std::nullopt,
                                 std::string(assignment.status().message())});
    return report;
  }
  for (int i : ViolatedConstraints(*model, *assignment)) {
    const LinearConstraint& c = model->constraints()[i];
    report.violations.push_back({ClassOf(c.family), std::nullopt, std::nullopt,
                                 std::nullopt,
                                 absl::StrCat("model constraint ", c.name,
                                              " is violated")});
  }
  return report;
}

std::string ReportToJson(const ValidationReport& report) {
  json doc;
  doc["valid"] = report.ok();
  doc["wavelength_count"] = report.metrics.wavelength_count;
  doc["wavelength_link_usage"] = report.metrics.wavelength_link_usage;
  doc["objective_value"] = RationalToString(report.objective);
  doc["metrics_consistent"] = report.metrics_consistent;
  json list = json::array();
  for (const Violation& v : report.violations) {
    json item;
    item["class"] = std::string(ViolationClassName(v.kind));
    item["demand"] = v.demand ? json(v.demand->value()) : json(nullptr);
    item["link"] = v.link ? json(v.link->value()) : json(nullptr);
    item["channel"] = v.channel ? json(v.channel->value()) : json(nullptr);
    item["message"] = v.message;
    list.push_back(std::move(item));
  }
  doc["violations"] = std::move(list);
  return doc.dump(2) + "\n";
}

}  // namespace lexrwa
