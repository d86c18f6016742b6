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

// Seeded experiment grids over topologies, loads and designs.
//
// For every (topology, load, seed) one traffic matrix is generated and all
// variants of the grid solve that same demand set; the protected variants
// only flip the protection flags. Records are kept as JSON lines so an
// interrupted run can be resumed.

#ifndef LEXRWA_BENCH_H_
#define LEXRWA_BENCH_H_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "lexrwa/design.h"
#include "lexrwa/solution.h"
#include "lexrwa/traffic.h"

namespace lexrwa {

struct ExperimentPlan {
  // Bundled names or topology file paths.
  std::vector<std::string> topologies = {"cost239", "nsfnet"};
  std::vector<LoadLevel> loads = {LoadLevel::kLow, LoadLevel::kMedium,
                                  LoadLevel::kHigh};
  std::vector<DesignVariant> variants = AllDesigns();
  std::vector<uint64_t> seeds = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  // Wavelength budget per topology name, replacing the file's capacity.
  std::map<std::string, int> capacity_overrides;
  SolverOptions solver;
  // Cells solved concurrently.
  int jobs = 1;
};

// Non-empty lists, distinct seeds, positive jobs, loads other than custom.
absl::Status ValidatePlan(const ExperimentPlan& plan);

// JSON object with any of the keys topologies, loads, variants, seeds,
// capacity (object of name -> int), time_limit (seconds), threads,
// node_limit and jobs. Missing keys keep the defaults above.
absl::StatusOr<ExperimentPlan> ParsePlanJson(std::string_view json);

struct ExperimentRecord {
  std::string topology;
  LoadLevel load = LoadLevel::kLow;
  DesignVariant variant = DesignVariant::kRwaWc;
  uint64_t seed = 0;
  int wavelength_count = 0;
  int wavelength_link_usage = 0;
  // A solve status name, "invalid" when the validator rejected the
  // solution, or "error" when the cell failed to run.
  std::string status;
  double solve_time = 0;

  friend bool operator==(const ExperimentRecord&,
                         const ExperimentRecord&) = default;
};

// Averages over one (topology, load, variant) cell.
struct CellSummary {
  std::string topology;
  LoadLevel load = LoadLevel::kLow;
  DesignVariant variant = DesignVariant::kRwaWc;
  int records = 0;
  int optimal = 0;
  // Means over optimal records only; absent when there are none.
  std::optional<double> wavelength_count_avg;
  std::optional<double> wavelength_link_usage_avg;
  // 1 - WLU(integrated) / WLU(single-objective counterpart), for integrated
  // variants whose counterpart cell is in the result.
  std::optional<double> savings;

  bool fully_optimal() const { return records > 0 && optimal == records; }
};

struct ExperimentResult {
  // Sorted by (topology, load, variant, seed).
  std::vector<ExperimentRecord> records;
  // Sorted by (topology, load, variant).
  std::vector<CellSummary> cells;
};

std::string RecordToJsonLine(const ExperimentRecord& r);
absl::StatusOr<ExperimentRecord> RecordFromJsonLine(std::string_view line);

// Canonical order and per-cell summaries.
ExperimentResult Summarize(std::vector<ExperimentRecord> records);

struct RunOptions {
  // JSON-lines file; existing records for cells of the plan are reused and
  // the file is rewritten in canonical order at the end. Empty: no file.
  std::string records_path;
  // Called after each newly solved record, from the worker thread, under a
  // lock.
  std::function<void(const ExperimentRecord&)> on_record;
};

// Solves every (topology, load, variant, seed) of the plan. A failing cell
// becomes an "error" record instead of aborting the run; only plan and file
// problems are returned as errors.
absl::StatusOr<ExperimentResult> RunExperiment(const ExperimentPlan& plan,
                                               const RunOptions& options = {});

enum class TableFormat { kCsv, kMarkdown };

std::optional<TableFormat> TableFormatFromName(std::string_view name);

// One row per cell: topology, load, variant, WC avg, WLU avg, savings,
// optimal fraction. Cells that are not fully optimal carry a "*" after
// the fraction.
std::string RenderTable(const ExperimentResult& r, TableFormat format);

}  // namespace lexrwa

#endif  // LEXRWA_BENCH_H_
