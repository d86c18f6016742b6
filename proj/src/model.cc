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

#include "lexrwa/model.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/match.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "text_format.h"

namespace lexrwa {
namespace {

std::string_view KindPrefix(VarKind kind) {
  switch (kind) {
    case VarKind::kX:
      return "x";
    case VarKind::kY:
      return "y";
    case VarKind::kTheta:
      return "theta";
    case VarKind::kGamma:
      return "gamma";
    case VarKind::kDelta:
      return "delta";
  }
  return "x";
}

bool ParseIndexToken(std::string_view token, char tag, int32_t* out) {
  if (token.size() < 2 || token[0] != tag) return false;
  token.remove_prefix(1);
  // Reject signs and leading zeros so that names stay canonical.
  if (!std::all_of(token.begin(), token.end(),
                   [](char c) { return c >= '0' && c <= '9'; }) ||
      (token.size() > 1 && token[0] == '0')) {
    return false;
  }
  return absl::SimpleAtoi(ToAbsl(token), out);
}

}  // namespace

std::string VariableName(const VariableRef& var) {
  std::string name(KindPrefix(var.kind));
  if (var.demand) absl::StrAppend(&name, "_d", var.demand->value());
  if (var.link) absl::StrAppend(&name, "_e", var.link->value());
  if (var.channel) absl::StrAppend(&name, "_c", var.channel->value());
  return name;
}

absl::StatusOr<VariableRef> ParseVariableName(std::string_view name) {
  const std::vector<absl::string_view> parts =
      absl::StrSplit(ToAbsl(name), '_');
  VariableRef var;
  std::string_view tags;
  if (parts[0] == "x" || parts[0] == "y") {
    var.kind = parts[0] == "x" ? VarKind::kX : VarKind::kY;
    tags = "dec";
  } else if (parts[0] == "theta") {
    var.kind = VarKind::kTheta;
    tags = "dc";
  } else if (parts[0] == "gamma") {
    var.kind = VarKind::kGamma;
    tags = "ec";
  } else if (parts[0] == "delta") {
    var.kind = VarKind::kDelta;
    tags = "c";
  } else {
    return absl::InvalidArgumentError(
        absl::StrCat("unknown variable kind in '", ToAbsl(name), "'"));
  }
  if (parts.size() != tags.size() + 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("wrong number of indices in '", ToAbsl(name), "'"));
  }
  for (size_t i = 0; i < tags.size(); ++i) {
    int32_t index = 0;
    if (!ParseIndexToken(ToStd(parts[i + 1]), tags[i], &index)) {
      return absl::InvalidArgumentError(
          absl::StrCat("malformed index '", parts[i + 1], "' in '", ToAbsl(name), "'"));
    }
    switch (tags[i]) {
      case 'd':
        var.demand = DemandId(index);
        break;
      case 'e':
        var.link = LinkId(index);
        break;
      case 'c':
        var.channel = ChannelId(index);
        break;
    }
  }
  return var;
}

int IlpModel::CountVariables(VarKind kind) const {
  return static_cast<int>(
      std::count_if(variables_.begin(), variables_.end(),
                    [kind](const VariableRef& v) { return v.kind == kind; }));
}

int IlpModel::CountConstraints(ConstraintFamily family) const {
  return static_cast<int>(std::count_if(
      constraints_.begin(), constraints_.end(),
      [family](const LinearConstraint& c) { return c.family == family; }));
}

std::optional<int> IlpModel::IndexOf(const VariableRef& var) const {
  const int num_e = metadata_.num_links;
  const int num_c = metadata_.capacity;
  const int num_d = metadata_.num_demands;
  auto in_range = [](const auto& id, int bound) {
    return id && id->value() >= 0 && id->value() < bound;
  };
  const bool has_d = in_range(var.demand, num_d);
  const bool has_e = in_range(var.link, num_e);
  const bool has_c = in_range(var.channel, num_c);
  if (!has_c) return std::nullopt;
  const int c = var.channel->value();
  switch (var.kind) {
    case VarKind::kX:
      if (!has_d || !has_e) return std::nullopt;
      return (var.demand->value() * num_e + var.link->value()) * num_c + c;
    case VarKind::kY: {
      if (!has_d || !has_e) return std::nullopt;
      const int slot = protected_slot_[var.demand->value()];
      if (slot < 0) return std::nullopt;
      return y_offset_ + (slot * num_e + var.link->value()) * num_c + c;
    }
    case VarKind::kTheta:
      if (!has_d || var.link) return std::nullopt;
      return theta_offset_ + var.demand->value() * num_c + c;
    case VarKind::kGamma:
      if (!has_e || var.demand) return std::nullopt;
      return gamma_offset_ + var.link->value() * num_c + c;
    case VarKind::kDelta:
      if (var.demand || var.link) return std::nullopt;
      return delta_offset_ + c;
  }
  return std::nullopt;
}

absl::StatusOr<IlpModel> BuildModel(const NetworkTopology& t,
                                    const TrafficMatrix& m,
                                    const DesignConfig& cfg) {
  if (absl::Status s = ValidateDesignInputs(t, m, cfg); !s.ok()) return s;

  const int num_v = t.num_nodes();
  const int num_e = t.num_links();
  const int num_c = cfg.capacity;
  const int num_d = static_cast<int>(m.demands.size());

  IlpModel model;
  model.weights_ = cfg.weights;
  model.metadata_ = {t.name(), num_v, num_e, num_c, num_d, m.num_protected(),
                     cfg.variant};

  auto& vars = model.variables_;
  for (const Demand& d : m.demands) {
    for (const FiberLink& l : t.links()) {
      for (int c = 0; c < num_c; ++c) {
        vars.push_back({VarKind::kX, d.id, l.id, ChannelId(c)});
      }
    }
  }
  model.y_offset_ = static_cast<int>(vars.size());
  model.protected_slot_.assign(num_d, -1);
  int slot = 0;
  for (const Demand& d : m.demands) {
    if (!d.is_protected) continue;
    model.protected_slot_[d.id.value()] = slot++;
    for (const FiberLink& l : t.links()) {
      for (int c = 0; c < num_c; ++c) {
        vars.push_back({VarKind::kY, d.id, l.id, ChannelId(c)});
      }
    }
  }
  model.theta_offset_ = static_cast<int>(vars.size());
  for (const Demand& d : m.demands) {
    for (int c = 0; c < num_c; ++c) {
      vars.push_back({VarKind::kTheta, d.id, std::nullopt, ChannelId(c)});
    }
  }
  model.gamma_offset_ = static_cast<int>(vars.size());
  for (const FiberLink& l : t.links()) {
    for (int c = 0; c < num_c; ++c) {
      vars.push_back({VarKind::kGamma, std::nullopt, l.id, ChannelId(c)});
    }
  }
  model.delta_offset_ = static_cast<int>(vars.size());
  for (int c = 0; c < num_c; ++c) {
    vars.push_back({VarKind::kDelta, std::nullopt, std::nullopt, ChannelId(c)});
  }

  auto x = [&](int d, int e, int c) { return (d * num_e + e) * num_c + c; };
  auto y = [&](int d, int e, int c) {
    return model.y_offset_ +
           (model.protected_slot_[d] * num_e + e) * num_c + c;
  };
  auto theta = [&](int d, int c) { return model.theta_offset_ + d * num_c + c; };
  auto gamma = [&](int e, int c) { return model.gamma_offset_ + e * num_c + c; };
  auto delta = [&](int c) { return model.delta_offset_ + c; };

  auto& cons = model.constraints_;
  for (const Demand& d : m.demands) {
    LinearConstraint row{ConstraintFamily::kProvisioning,
                         absl::StrCat("prov_d", d.id.value()),
                         {},
                         Sense::kEqual,
                         1};
    for (int c = 0; c < num_c; ++c) row.terms.push_back({theta(d.id.value(), c), 1});
    cons.push_back(std::move(row));
  }

  auto add_flow = [&](ConstraintFamily family, std::string_view prefix,
                      auto&& flow_var) {
    for (const Demand& d : m.demands) {
      if (family == ConstraintFamily::kProtectionFlow && !d.is_protected) {
        continue;
      }
      const int di = d.id.value();
      for (int v = 0; v < num_v; ++v) {
        for (int c = 0; c < num_c; ++c) {
          LinearConstraint row{family,
                               absl::StrCat(ToAbsl(prefix), "_d", di, "_v", v, "_c", c),
                               {},
                               Sense::kEqual,
                               0};
          for (LinkId e : t.OutgoingIds(NodeId(v))) {
            row.terms.push_back({flow_var(di, e.value(), c), 1});
          }
          for (LinkId e : t.IncomingIds(NodeId(v))) {
            row.terms.push_back({flow_var(di, e.value(), c), -1});
          }
          if (v == d.src.value()) row.terms.push_back({theta(di, c), -1});
          if (v == d.dst.value()) row.terms.push_back({theta(di, c), 1});
          cons.push_back(std::move(row));
        }
      }
    }
  };
  add_flow(ConstraintFamily::kWorkingFlow, "wflow", x);
  add_flow(ConstraintFamily::kProtectionFlow, "pflow", y);

  for (int e = 0; e < num_e; ++e) {
    for (int c = 0; c < num_c; ++c) {
      LinearConstraint row{ConstraintFamily::kChannelUniqueness,
                           absl::StrCat("uniq_e", e, "_c", c),
                           {},
                           Sense::kEqual,
                           0};
      for (const Demand& d : m.demands) {
        row.terms.push_back({x(d.id.value(), e, c), 1});
      }
      for (const Demand& d : m.demands) {
        if (d.is_protected) row.terms.push_back({y(d.id.value(), e, c), 1});
      }
      row.terms.push_back({gamma(e, c), -1});
      cons.push_back(std::move(row));
    }
  }

  for (int c = 0; c < num_c; ++c) {
    LinearConstraint row{ConstraintFamily::kChannelUsage,
                         absl::StrCat("usage_c", c),
                         {},
                         Sense::kLessEqual,
                         0};
    for (int e = 0; e < num_e; ++e) row.terms.push_back({gamma(e, c), 1});
    row.terms.push_back({delta(c), -static_cast<int64_t>(num_e)});
    cons.push_back(std::move(row));
  }

  if (cfg.weights.alpha1 != kZero) {
    for (int c = 0; c < num_c; ++c) {
      model.objective_.emplace_back(delta(c), cfg.weights.alpha1);
    }
  }
  if (cfg.weights.alpha2 != kZero) {
    for (int e = 0; e < num_e; ++e) {
      for (int c = 0; c < num_c; ++c) {
        model.objective_.emplace_back(gamma(e, c), cfg.weights.alpha2);
      }
    }
  }
  std::sort(model.objective_.begin(), model.objective_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return model;
}

absl::StatusOr<Rational> EvaluateObjective(const IlpModel& model,
                                           const Assignment& assignment) {
  if (assignment.size() != static_cast<size_t>(model.num_variables())) {
    return absl::InvalidArgumentError(absl::StrCat(
        "assignment has ", assignment.size(), " values but the model has ",
        model.num_variables(), " variables"));
  }
  for (size_t i = 0; i < assignment.size(); ++i) {
    if (assignment[i] != 0 && assignment[i] != 1) {
      return absl::InvalidArgumentError(
          absl::StrCat("non-binary value ", assignment[i], " for ",
                       VariableName(model.variables()[i])));
    }
  }
  Rational total(0);
  for (const auto& [var, coeff] : model.objective()) {
    if (assignment[var] != 0) total += coeff;
  }
  return total;
}

std::vector<int> ViolatedConstraints(const IlpModel& model,
                                     const Assignment& assignment) {
  std::vector<int> violated;
  const auto& cons = model.constraints();
  for (size_t i = 0; i < cons.size(); ++i) {
    int64_t lhs = 0;
    for (const LinearTerm& term : cons[i].terms) {
      lhs += term.coeff * assignment[term.var];
    }
    const bool ok = cons[i].sense == Sense::kEqual       ? lhs == cons[i].rhs
                    : cons[i].sense == Sense::kLessEqual ? lhs <= cons[i].rhs
                                                         : lhs >= cons[i].rhs;
    if (!ok) violated.push_back(static_cast<int>(i));
  }
  return violated;
}

int64_t ObjectiveScale(const WeightPair& weights) {
  return std::lcm(weights.alpha1.denominator(), weights.alpha2.denominator());
}

}  // namespace lexrwa
