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

#include "lexrwa/design.h"

#include <vector>

#include "absl/strings/str_cat.h"
#include "text_format.h"

namespace lexrwa {

std::string_view DesignName(DesignVariant variant) {
  switch (variant) {
    case DesignVariant::kRwaWc:
      return "rwa_wc";
    case DesignVariant::kRwaWcP:
      return "rwa_wc_p";
    case DesignVariant::kRwaIntwc:
      return "rwa_intwc";
    case DesignVariant::kRwaIntwcP:
      return "rwa_intwc_p";
  }
  return "rwa_wc";
}

const std::vector<DesignVariant>& AllDesigns() {
  static const std::vector<DesignVariant> kAll = {
      DesignVariant::kRwaWc, DesignVariant::kRwaWcP, DesignVariant::kRwaIntwc,
      DesignVariant::kRwaIntwcP};
  return kAll;
}

std::optional<DesignVariant> DesignFromName(std::string_view name) {
  for (DesignVariant v : AllDesigns()) {
    if (DesignName(v) == name) return v;
  }
  return std::nullopt;
}

WeightPair LexicographicWeights(int num_links, int capacity) {
  return {Rational(1),
          Rational(1, 1 + static_cast<int64_t>(capacity) * num_links)};
}

WeightPair LexicographicWeights(const NetworkTopology& t) {
  return LexicographicWeights(t.num_links(), t.capacity());
}

bool IsLexicographic(const WeightPair& w, int num_links, int capacity) {
  return w.alpha1 > static_cast<int64_t>(num_links) * capacity * w.alpha2;
}

DesignConfig DesignConfig::For(DesignVariant variant,
                               const NetworkTopology& t) {
  DesignConfig cfg;
  cfg.variant = variant;
  cfg.capacity = t.capacity();
  cfg.weights = IsIntegrated(variant) ? LexicographicWeights(t)
                                      : WeightPair{Rational(1), Rational(0)};
  return cfg;
}

absl::Status ValidateDesign(const DesignConfig& cfg,
                            const NetworkTopology& t) {
  if (cfg.capacity != t.capacity()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "capacity mismatch: design uses ", cfg.capacity,
        " wavelengths but topology '", t.name(), "' has ", t.capacity()));
  }
  const WeightPair& w = cfg.weights;
  if (w.alpha1 < kZero || w.alpha2 < kZero ||
      (w.alpha1 == kZero && w.alpha2 == kZero)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "weights must be non-negative and not both zero, got (",
        RationalToString(w.alpha1), ", ", RationalToString(w.alpha2), ")"));
  }
  if (!IsIntegrated(cfg.variant) && (w.alpha2 != kZero || w.alpha1 == kZero)) {
    return absl::InvalidArgumentError(
        absl::StrCat(ToAbsl(DesignName(cfg.variant)),
                     " minimizes the wavelength count only; it needs "
                     "alpha1 > 0 and alpha2 = 0"));
  }
  return absl::OkStatus();
}

absl::Status ValidateDesignInputs(const NetworkTopology& t,
                                  const TrafficMatrix& m,
                                  const DesignConfig& cfg) {
  if (absl::Status s = ValidateDesign(cfg, t); !s.ok()) return s;
  if (absl::Status s = ValidateDemandEndpoints(t, m); !s.ok()) return s;
  if (!HasProtection(cfg.variant)) {
    for (const Demand& d : m.demands) {
      if (d.is_protected) {
        return absl::InvalidArgumentError(absl::StrCat(
            "demand ", d.id.value(), " requests protection but ",
            ToAbsl(DesignName(cfg.variant)),
            " has none; use the _p variant of the design"));
      }
    }
  }
  return absl::OkStatus();
}

}  // namespace lexrwa
