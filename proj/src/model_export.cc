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

#include <cstdint>
#include <string>
#include <vector>

#include "absl/strings/str_cat.h"
#include "text_format.h"
#include "lexrwa/model.h"

namespace lexrwa {
namespace {

// CPLEX rejects LP lines longer than 255 characters.
constexpr int kTermsPerLine = 6;

int64_t ScaledCoefficient(const Rational& coeff, int64_t scale) {
  const Rational scaled = coeff * scale;
  return scaled.numerator();  // denominator is 1 by choice of scale
}

std::string Header(const IlpModel& model, std::string_view comment) {
  const ModelMetadata& md = model.metadata();
  const int64_t scale = ObjectiveScale(model.weights());
  return absl::StrCat(
      ToAbsl(comment), " lexrwa RWA model: topology=", md.topology,
      " design=", ToAbsl(DesignName(md.variant)), " nodes=", md.num_nodes,
      " links=", md.num_links, " channels=", md.capacity,
      " demands=", md.num_demands, " protected=", md.num_protected, "\n",
      ToAbsl(comment), " weights alpha1=", RationalToString(model.weights().alpha1),
      " alpha2=", RationalToString(model.weights().alpha2),
      "; objective coefficients are scaled by ", scale, "\n");
}

void AppendLpTerm(std::string* out, int index, int64_t coeff,
                  const std::string& name) {
  if (index > 0 && index % kTermsPerLine == 0) absl::StrAppend(out, "\n   ");
  if (index == 0) {
    if (coeff == 1) {
      absl::StrAppend(out, " ", name);
    } else if (coeff == -1) {
      absl::StrAppend(out, " - ", name);
    } else {
      absl::StrAppend(out, " ", coeff, " ", name);
    }
    return;
  }
  const int64_t mag = coeff < 0 ? -coeff : coeff;
  absl::StrAppend(out, coeff < 0 ? " - " : " + ");
  if (mag != 1) absl::StrAppend(out, mag, " ");
  absl::StrAppend(out, name);
}

std::string ExportLp(const IlpModel& model) {
  const int64_t scale = ObjectiveScale(model.weights());
  std::vector<std::string> names;
  names.reserve(model.num_variables());
  for (const VariableRef& v : model.variables()) names.push_back(VariableName(v));

  std::string out = Header(model, "\\");
  absl::StrAppend(&out, "Minimize\n obj:");
  if (model.objective().empty()) {
    absl::StrAppend(&out, " 0 ", names.back());
  }
  int i = 0;
  for (const auto& [var, coeff] : model.objective()) {
    AppendLpTerm(&out, i++, ScaledCoefficient(coeff, scale), names[var]);
  }
  absl::StrAppend(&out, "\nSubject To\n");
  for (const LinearConstraint& row : model.constraints()) {
    absl::StrAppend(&out, " ", row.name, ":");
    i = 0;
    for (const LinearTerm& term : row.terms) {
      AppendLpTerm(&out, i++, term.coeff, names[term.var]);
    }
    const char* sense = row.sense == Sense::kEqual       ? "="
                        : row.sense == Sense::kLessEqual ? "<="
                                                         : ">=";
    absl::StrAppend(&out, " ", sense, " ", row.rhs, "\n");
  }
  absl::StrAppend(&out, "Binary\n");
  for (const std::string& name : names) absl::StrAppend(&out, " ", name, "\n");
  absl::StrAppend(&out, "End\n");
  return out;
}

std::string ExportMps(const IlpModel& model) {
  const int64_t scale = ObjectiveScale(model.weights());
  const int num_vars = model.num_variables();
  const auto& cons = model.constraints();

  // Column-major view of the constraint matrix.
  std::vector<std::vector<std::pair<int, int64_t>>> columns(num_vars);
  for (size_t r = 0; r < cons.size(); ++r) {
    for (const LinearTerm& term : cons[r].terms) {
      columns[term.var].emplace_back(static_cast<int>(r), term.coeff);
    }
  }
  std::vector<int64_t> objective(num_vars, 0);
  for (const auto& [var, coeff] : model.objective()) {
    objective[var] = ScaledCoefficient(coeff, scale);
  }

  std::string out = Header(model, "*");
  absl::StrAppend(&out, "NAME lexrwa\nROWS\n N obj\n");
  for (const LinearConstraint& row : cons) {
    const char* type = row.sense == Sense::kEqual       ? "E"
                       : row.sense == Sense::kLessEqual ? "L"
                                                        : "G";
    absl::StrAppend(&out, " ", type, " ", row.name, "\n");
  }
  absl::StrAppend(&out, "COLUMNS\n    MARKER 'MARKER' 'INTORG'\n");
  for (int v = 0; v < num_vars; ++v) {
    const std::string name = VariableName(model.variables()[v]);
    if (objective[v] != 0) {
      absl::StrAppend(&out, "    ", name, " obj ", objective[v], "\n");
    }
    for (const auto& [r, coeff] : columns[v]) {
      absl::StrAppend(&out, "    ", name, " ", cons[r].name, " ", coeff, "\n");
    }
  }
  absl::StrAppend(&out, "    MARKER 'MARKER' 'INTEND'\nRHS\n");
  for (const LinearConstraint& row : cons) {
    if (row.rhs != 0) {
      absl::StrAppend(&out, "    rhs ", row.name, " ", row.rhs, "\n");
    }
  }
  absl::StrAppend(&out, "BOUNDS\n");
  for (const VariableRef& v : model.variables()) {
    absl::StrAppend(&out, " BV bnd ", VariableName(v), "\n");
  }
  absl::StrAppend(&out, "ENDATA\n");
  return out;
}

}  // namespace

std::optional<ExportFormat> ExportFormatFromName(std::string_view name) {
  if (name == "lp") return ExportFormat::kLp;
  if (name == "mps") return ExportFormat::kMps;
  return std::nullopt;
}

std::string ExportModel(const IlpModel& model, ExportFormat format) {
  return format == ExportFormat::kLp ? ExportLp(model) : ExportMps(model);
}

}  // namespace lexrwa
