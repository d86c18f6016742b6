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

// Generated from data/*.topo; keep the two in sync (topology_test checks).

#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "text_format.h"
#include "lexrwa/topology.h"

namespace lexrwa {
namespace {

constexpr std::string_view kCost239Text = R"topo(# COST239 pan-European reference network: 11 nodes, 26 bidirectional fiber
# pairs, edge list as commonly published for the COST 239 study.
#  0 Copenhagen   1 London   2 Amsterdam   3 Berlin   4 Brussels
#  5 Luxembourg   6 Prague   7 Paris       8 Zurich   9 Vienna   10 Milan
# Wavelength budget defaults to 10 channels per link.
topology cost239 nodes=11 capacity=10
link 0 1
link 0 2
link 0 3
link 0 6
link 1 2
link 1 4
link 1 7
link 2 3
link 2 4
link 2 5
link 3 6
link 3 7
link 3 9
link 4 5
link 4 7
link 4 10
link 5 6
link 5 7
link 5 8
link 6 8
link 6 9
link 7 8
link 7 10
link 8 9
link 8 10
link 9 10
)topo";

constexpr std::string_view kNsfnetText = R"topo(# NSFNET T1 backbone: 14 nodes, 21 bidirectional fiber pairs, edge list as
# commonly published in the optical networking literature.
# Wavelength budget defaults to 30 channels per link.
topology nsfnet nodes=14 capacity=30
link 0 1
link 0 2
link 0 7
link 1 2
link 1 3
link 2 5
link 3 4
link 3 10
link 4 5
link 4 6
link 5 9
link 5 12
link 6 7
link 7 8
link 8 9
link 8 11
link 8 13
link 10 11
link 10 13
link 11 12
link 12 13
)topo";

}  // namespace

std::vector<std::string> BundledTopologyNames() { return {"cost239", "nsfnet"}; }

absl::StatusOr<std::string_view> BundledTopologyText(std::string_view name) {
  if (name == "cost239") return kCost239Text;
  if (name == "nsfnet") return kNsfnetText;
  return absl::NotFoundError(absl::StrCat("no bundled topology '", ToAbsl(name), "'"));
}

}  // namespace lexrwa
