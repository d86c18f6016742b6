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

// Solver-neutral binary ILP for routing and wavelength assignment.
//
// Variables (all binary):
//   x_d<d>_e<e>_c<c>   link e on channel c carries the working path of d
//   y_d<d>_e<e>_c<c>   same for the protection path (protected demands only)
//   theta_d<d>_c<c>    demand d is carried on channel c
//   gamma_e<e>_c<c>    channel c is occupied on link e
//   delta_c<c>         channel c is occupied anywhere
//
// Constraint families:
//   provisioning        sum_c theta_d^c = 1                          per d
//   working flow        out(x) - in(x) = +theta at s(d), -theta at r(d),
//                       0 elsewhere                               per v, d, c
//   protection flow     same for y                     per v, protected d, c
//   channel uniqueness  sum_d x + sum_d y = gamma_{e,c}               per e, c
//   channel usage       sum_e gamma_{e,c} <= |E| delta_c                per c
//
// Objective: alpha1 * sum_c delta_c + alpha2 * sum_{e,c} gamma_{e,c}.
//
// Variables are laid out in blocks x | y | theta | gamma | delta, each block
// row-major in the order of the name's indices.

#ifndef LEXRWA_MODEL_H_
#define LEXRWA_MODEL_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "lexrwa/design.h"
#include "lexrwa/rational.h"
#include "lexrwa/strong_id.h"
#include "lexrwa/topology.h"
#include "lexrwa/traffic.h"

namespace lexrwa {

enum class VarKind { kX, kY, kTheta, kGamma, kDelta };

struct VariableRef {
  VarKind kind = VarKind::kX;
  std::optional<DemandId> demand;
  std::optional<LinkId> link;
  std::optional<ChannelId> channel;

  friend bool operator==(const VariableRef&, const VariableRef&) = default;
};

// Stable, reversible names, e.g. "x_d3_e17_c2", "delta_c0".
std::string VariableName(const VariableRef& var);
absl::StatusOr<VariableRef> ParseVariableName(std::string_view name);

enum class Sense { kEqual, kLessEqual, kGreaterEqual };

enum class ConstraintFamily {
  kProvisioning,
  kWorkingFlow,
  kProtectionFlow,
  kChannelUniqueness,
  kChannelUsage,
};

struct LinearTerm {
  int var;
  int64_t coeff;
};

struct LinearConstraint {
  ConstraintFamily family;
  std::string name;
  std::vector<LinearTerm> terms;
  Sense sense;
  int64_t rhs;
};

struct ModelMetadata {
  std::string topology;
  int num_nodes = 0;
  int num_links = 0;
  int capacity = 0;
  int num_demands = 0;
  int num_protected = 0;
  DesignVariant variant = DesignVariant::kRwaWc;
};

// One value per model variable, in variable index order.
using Assignment = std::vector<int64_t>;

class IlpModel {
 public:
  const std::vector<VariableRef>& variables() const { return variables_; }
  const std::vector<LinearConstraint>& constraints() const {
    return constraints_;
  }
  // Sparse objective; variables with a zero coefficient are omitted.
  const std::vector<std::pair<int, Rational>>& objective() const {
    return objective_;
  }
  const WeightPair& weights() const { return weights_; }
  const ModelMetadata& metadata() const { return metadata_; }

  int num_variables() const { return static_cast<int>(variables_.size()); }
  int CountVariables(VarKind kind) const;
  int CountConstraints(ConstraintFamily family) const;

  // Index of `var`, or nullopt if the model does not declare it.
  std::optional<int> IndexOf(const VariableRef& var) const;

 private:
  friend absl::StatusOr<IlpModel> BuildModel(const NetworkTopology&,
                                             const TrafficMatrix&,
                                             const DesignConfig&);

  std::vector<VariableRef> variables_;
  std::vector<LinearConstraint> constraints_;
  std::vector<std::pair<int, Rational>> objective_;
  WeightPair weights_;
  ModelMetadata metadata_;

  // Block offsets, and the y-block slot of each demand (-1: unprotected).
  int y_offset_ = 0;
  int theta_offset_ = 0;
  int gamma_offset_ = 0;
  int delta_offset_ = 0;
  std::vector<int> protected_slot_;
};

absl::StatusOr<IlpModel> BuildModel(const NetworkTopology& t,
                                    const TrafficMatrix& m,
                                    const DesignConfig& cfg);

// Exact value of the objective; fails on a missing or non-binary value.
absl::StatusOr<Rational> EvaluateObjective(const IlpModel& model,
                                           const Assignment& assignment);

// Indices of the constraints `assignment` violates. The assignment must have
// one entry per variable.
std::vector<int> ViolatedConstraints(const IlpModel& model,
                                     const Assignment& assignment);

enum class ExportFormat { kLp, kMps };

std::optional<ExportFormat> ExportFormatFromName(std::string_view name);

// CPLEX LP or free-format MPS text. Rational weights are scaled by the least
// common multiple of their denominators so every objective coefficient is an
// integer; the scale factor is recorded in a comment. Output is a pure
// function of the model.
std::string ExportModel(const IlpModel& model, ExportFormat format);

// Scale applied by ExportModel: lcm of the weight denominators.
int64_t ObjectiveScale(const WeightPair& weights);

}  // namespace lexrwa

#endif  // LEXRWA_MODEL_H_
