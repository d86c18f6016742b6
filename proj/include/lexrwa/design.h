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

// The four network designs that are benchmarked against each other, and the
// weighting of their two objective terms:
//
//   minimize  alpha1 * (wavelength count) + alpha2 * (wavelength-link usage)
//
// rwa_wc / rwa_wc_p minimize the wavelength count alone (alpha2 = 0).
// rwa_intwc / rwa_intwc_p use weights for which any increase of the
// wavelength count outweighs every possible change of the usage term, which
// makes the single weighted objective a strict lexicographic order.

#ifndef LEXRWA_DESIGN_H_
#define LEXRWA_DESIGN_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "lexrwa/rational.h"
#include "lexrwa/topology.h"
#include "lexrwa/traffic.h"

namespace lexrwa {

enum class DesignVariant { kRwaWc, kRwaWcP, kRwaIntwc, kRwaIntwcP };

std::string_view DesignName(DesignVariant variant);
std::optional<DesignVariant> DesignFromName(std::string_view name);
const std::vector<DesignVariant>& AllDesigns();

inline bool HasProtection(DesignVariant v) {
  return v == DesignVariant::kRwaWcP || v == DesignVariant::kRwaIntwcP;
}
inline bool IsIntegrated(DesignVariant v) {
  return v == DesignVariant::kRwaIntwc || v == DesignVariant::kRwaIntwcP;
}

struct WeightPair {
  Rational alpha1;
  Rational alpha2;

  friend bool operator==(const WeightPair&, const WeightPair&) = default;
};

// alpha1 = 1, alpha2 = 1 / (1 + capacity * num_links).
WeightPair LexicographicWeights(int num_links, int capacity);
WeightPair LexicographicWeights(const NetworkTopology& t);

// alpha1 > num_links * capacity * alpha2, strictly.
bool IsLexicographic(const WeightPair& w, int num_links, int capacity);

struct DesignConfig {
  DesignVariant variant = DesignVariant::kRwaWc;
  WeightPair weights;
  int capacity = 0;

  // Canonical weights: (1, 0) for the wavelength-count designs, the
  // lexicographic pair for the integrated ones.
  static DesignConfig For(DesignVariant variant, const NetworkTopology& t);
};

// Capacity matches the topology; weights are non-negative and not both zero;
// wavelength-count designs have alpha2 = 0 and alpha1 > 0. Integrated designs
// accept any other weights so that single-term or non-lexicographic
// objectives can be studied on the same model.
absl::Status ValidateDesign(const DesignConfig& cfg, const NetworkTopology& t);

// Demand endpoints are valid for `t`, and protected demands only appear
// under a protection design. Repeated ordered pairs are allowed here and are
// modeled as independent demands.
absl::Status ValidateDesignInputs(const NetworkTopology& t,
                                  const TrafficMatrix& m,
                                  const DesignConfig& cfg);

}  // namespace lexrwa

#endif  // LEXRWA_DESIGN_H_
