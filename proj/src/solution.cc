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

#include "lexrwa/solution.h"

#include <string>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "json.hpp"

namespace lexrwa {

using nlohmann::json;

std::string_view SolveStatusName(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kFeasible:
      return "feasible";
    case SolveStatus::kInfeasible:
      return "infeasible";
    case SolveStatus::kTimeout:
      return "timeout";
  }
  return "infeasible";
}

std::optional<SolveStatus> SolveStatusFromName(std::string_view name) {
  for (SolveStatus s : {SolveStatus::kOptimal, SolveStatus::kFeasible,
                        SolveStatus::kInfeasible, SolveStatus::kTimeout}) {
    if (SolveStatusName(s) == name) return s;
  }
  return std::nullopt;
}

std::string SolutionToJson(const RwaSolution& s, std::string_view topology,
                           DesignVariant design) {
  json doc;
  doc["topology"] = topology;
  doc["design"] = DesignName(design);
  doc["status"] = SolveStatusName(s.status);
  doc["objective"] = RationalToString(s.objective_value);
  doc["wavelength_count"] = s.wavelength_count;
  doc["wavelength_link_usage"] = s.wavelength_link_usage;
  json paths = json::array();
  for (const Lightpath& lp : s.lightpaths) {
    json links = json::array();
    for (LinkId e : lp.links) links.push_back(e.value());
    paths.push_back({{"demand", lp.demand.value()},
                     {"role", lp.role == PathRole::kWorking ? "working"
                                                            : "protection"},
                     {"channel", lp.channel.value()},
                     {"links", std::move(links)}});
  }
  doc["lightpaths"] = std::move(paths);
  return doc.dump(2) + "\n";
}

absl::StatusOr<SolutionDocument> SolutionFromJson(std::string_view text) {
  SolutionDocument out;
  try {
    const json doc = json::parse(text);
    out.topology = doc.at("topology").get<std::string>();
    const std::string design = doc.at("design").get<std::string>();
    const std::optional<DesignVariant> variant = DesignFromName(design);
    if (!variant) {
      return absl::InvalidArgumentError(
          absl::StrCat("unknown design '", design, "'"));
    }
    out.design = *variant;
    const std::string status = doc.at("status").get<std::string>();
    const std::optional<SolveStatus> parsed_status =
        SolveStatusFromName(status);
    if (!parsed_status) {
      return absl::InvalidArgumentError(
          absl::StrCat("unknown status '", status, "'"));
    }
    RwaSolution& s = out.solution;
    s.status = *parsed_status;
    absl::StatusOr<Rational> objective =
        ParseRational(doc.at("objective").get<std::string>());
    if (!objective.ok()) return objective.status();
    s.objective_value = *objective;
    s.wavelength_count = doc.at("wavelength_count").get<int>();
    s.wavelength_link_usage = doc.at("wavelength_link_usage").get<int>();
    for (const json& p : doc.at("lightpaths")) {
      Lightpath lp;
      lp.demand = DemandId(p.at("demand").get<int32_t>());
      const std::string role = p.at("role").get<std::string>();
      if (role != "working" && role != "protection") {
        return absl::InvalidArgumentError(
            absl::StrCat("unknown lightpath role '", role, "'"));
      }
      lp.role = role == "working" ? PathRole::kWorking : PathRole::kProtection;
      lp.channel = ChannelId(p.at("channel").get<int32_t>());
      for (const json& e : p.at("links")) {
        lp.links.push_back(LinkId(e.get<int32_t>()));
      }
      s.lightpaths.push_back(std::move(lp));
    }
  } catch (const json::exception& e) {
    return absl::InvalidArgumentError(
        absl::StrCat("malformed solution JSON: ", e.what()));
  }
  return out;
}

}  // namespace lexrwa
