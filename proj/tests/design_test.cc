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

#include "gtest/gtest.h"
#include "test_util.h"

namespace lexrwa {
namespace {

using ::lexrwa::testing::MakeTraffic;
using ::lexrwa::testing::Ring3;
using ::lexrwa::testing::Unwrap;

TEST(DesignTest, NamesRoundTrip) {
  EXPECT_EQ(AllDesigns().size(), 4u);
  for (DesignVariant v : AllDesigns()) {
    EXPECT_EQ(DesignFromName(DesignName(v)), v);
  }
  EXPECT_EQ(DesignName(DesignVariant::kRwaIntwcP), "rwa_intwc_p");
  EXPECT_FALSE(DesignFromName("rwa").has_value());
  EXPECT_TRUE(HasProtection(DesignVariant::kRwaWcP));
  EXPECT_FALSE(HasProtection(DesignVariant::kRwaIntwc));
  EXPECT_TRUE(IsIntegrated(DesignVariant::kRwaIntwcP));
  EXPECT_FALSE(IsIntegrated(DesignVariant::kRwaWcP));
}

TEST(DesignTest, LexicographicWeightExamples) {
  EXPECT_EQ(LexicographicWeights(52, 10),
            (WeightPair{Rational(1), Rational(1, 521)}));
  EXPECT_EQ(LexicographicWeights(1, 1),
            (WeightPair{Rational(1), Rational(1, 2)}));
  const NetworkTopology cost = Unwrap(ResolveTopology("cost239"));
  EXPECT_EQ(LexicographicWeights(cost).alpha2, Rational(1, 521));
}

TEST(DesignTest, LexicographicWeightsAlwaysDominate) {
  for (int links = 1; links <= 60; ++links) {
    for (int channels = 1; channels <= 40; ++channels) {
      const WeightPair w = LexicographicWeights(links, channels);
      EXPECT_TRUE(IsLexicographic(w, links, channels));
      // One more channel outweighs every wavelength-link of the network.
      EXPECT_GT(w.alpha1, w.alpha2 * Rational(links * channels));
    }
  }
  EXPECT_FALSE(IsLexicographic({Rational(1), Rational(1, 520)}, 52, 10));
}

TEST(DesignTest, CanonicalConfigs) {
  const NetworkTopology t = Ring3(2);
  const DesignConfig wc = DesignConfig::For(DesignVariant::kRwaWc, t);
  EXPECT_EQ(wc.weights, (WeightPair{Rational(1), Rational(0)}));
  EXPECT_EQ(wc.capacity, 2);
  const DesignConfig in = DesignConfig::For(DesignVariant::kRwaIntwcP, t);
  EXPECT_EQ(in.weights, LexicographicWeights(6, 2));
  for (DesignVariant v : AllDesigns()) {
    EXPECT_TRUE(ValidateDesign(DesignConfig::For(v, t), t).ok());
  }
}

TEST(DesignTest, ValidationRejectsBadConfigs) {
  const NetworkTopology t = Ring3(2);
  DesignConfig c = DesignConfig::For(DesignVariant::kRwaWc, t);
  c.capacity = 3;
  EXPECT_FALSE(ValidateDesign(c, t).ok());

  c = DesignConfig::For(DesignVariant::kRwaWc, t);
  c.weights.alpha2 = Rational(1, 7);
  EXPECT_FALSE(ValidateDesign(c, t).ok());

  c = DesignConfig::For(DesignVariant::kRwaIntwc, t);
  c.weights = {kZero, kZero};
  EXPECT_FALSE(ValidateDesign(c, t).ok());
  c.weights = {Rational(-1), Rational(1)};
  EXPECT_FALSE(ValidateDesign(c, t).ok());
  // Single-term and non-lexicographic weights are allowed for study.
  c.weights = {kZero, Rational(1)};
  EXPECT_TRUE(ValidateDesign(c, t).ok());
  c.weights = {Rational(1), Rational(1)};
  EXPECT_TRUE(ValidateDesign(c, t).ok());
}

TEST(DesignTest, ProtectedDemandsNeedAProtectionDesign) {
  const NetworkTopology t = Ring3(2);
  const TrafficMatrix m = MakeTraffic({{0, 1}, {1, 2}}, {false, true});
  EXPECT_FALSE(ValidateDesignInputs(
                   t, m, DesignConfig::For(DesignVariant::kRwaWc, t))
                   .ok());
  EXPECT_TRUE(ValidateDesignInputs(
                  t, m, DesignConfig::For(DesignVariant::kRwaWcP, t))
                  .ok());
  // Repeated ordered pairs are independent demands here.
  const TrafficMatrix dup = MakeTraffic({{0, 1}, {0, 1}});
  EXPECT_TRUE(ValidateDesignInputs(
                  t, dup, DesignConfig::For(DesignVariant::kRwaIntwc, t))
                  .ok());
  const TrafficMatrix bad = MakeTraffic({{0, 5}});
  EXPECT_FALSE(ValidateDesignInputs(
                   t, bad, DesignConfig::For(DesignVariant::kRwaIntwc, t))
                   .ok());
}

}  // namespace
}  // namespace lexrwa
