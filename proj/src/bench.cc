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

#include "lexrwa/bench.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <thread>
#include <tuple>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "json.hpp"
#include "lexrwa/solver.h"
#include "lexrwa/topology.h"
#include "lexrwa/validate.h"
#include "text_format.h"

namespace lexrwa {
namespace {

using nlohmann::json;

using CellKey = std::tuple<std::string, LoadLevel, DesignVariant>;
using RecordKey = std::tuple<std::string, LoadLevel, DesignVariant, uint64_t>;

RecordKey KeyOf(const ExperimentRecord& r) {
  return {r.topology, r.load, r.variant, r.seed};
}

std::optional<DesignVariant> Counterpart(DesignVariant v) {
  switch (v) {
    case DesignVariant::kRwaIntwc:
      return DesignVariant::kRwaWc;
    case DesignVariant::kRwaIntwcP:
      return DesignVariant::kRwaWcP;
    default:
      return std::nullopt;
  }
}

// Instance shared by all variants of one (topology, load, seed).
struct Instance {
  NetworkTopology topology;
  TrafficMatrix traffic;
};

ExperimentRecord SolveCell(const Instance& instance, LoadLevel load,
                           DesignVariant variant, uint64_t seed,
                           const SolverOptions& solver) {
  ExperimentRecord r;
  r.topology = instance.topology.name();
  r.load = load;
  r.variant = variant;
  r.seed = seed;
  const TrafficMatrix m =
      instance.traffic.WithProtection(HasProtection(variant));
  const DesignConfig cfg = DesignConfig::For(variant, instance.topology);
  absl::StatusOr<RwaSolution> s =
      SolveExact(instance.topology, m, cfg, solver);
  if (!s.ok()) {
    r.status = "error";
    return r;
  }
  r.solve_time = s->stats.seconds;
  r.status = std::string(SolveStatusName(s->status));
  if (s->has_routing()) {
    const ValidationReport report =
        CheckSolution(instance.topology, m, cfg, *s);
    if (!report.ok() || !report.metrics_consistent) {
      r.status = "invalid";
      return r;
    }
    r.wavelength_count = s->wavelength_count;
    r.wavelength_link_usage = s->wavelength_link_usage;
  }
  return r;
}

std::string FormatAverage(const std::optional<double>& v) {
  return v ? absl::StrFormat("%.2f", *v) : std::string("-");
}

std::string FormatSavings(const std::optional<double>& v) {
  return v ? absl::StrFormat("%.1f%%", 100.0 * *v) : std::string("-");
}

}  // namespace

absl::Status ValidatePlan(const ExperimentPlan& plan) {
  if (plan.topologies.empty() || plan.loads.empty() || plan.variants.empty() ||
      plan.seeds.empty()) {
    return absl::InvalidArgumentError(
        "plan needs at least one topology, load, variant and seed");
  }
  if (std::set<uint64_t>(plan.seeds.begin(), plan.seeds.end()).size() !=
      plan.seeds.size()) {
    return absl::InvalidArgumentError("plan seeds must be distinct");
  }
  for (LoadLevel load : plan.loads) {
    if (load == LoadLevel::kCustom) {
      return absl::InvalidArgumentError("plan loads must be low, medium or high");
    }
  }
  if (plan.jobs <= 0) {
    return absl::InvalidArgumentError("jobs must be positive");
  }
  return absl::OkStatus();
}

absl::StatusOr<ExperimentPlan> ParsePlanJson(std::string_view text) {
  ExperimentPlan plan;
  try {
    const json doc = json::parse(text);
    if (!doc.is_object()) {
      return absl::InvalidArgumentError("plan must be a JSON object");
    }
    for (const auto& [key, value] : doc.items()) {
      if (key == "topologies") {
        plan.topologies = value.get<std::vector<std::string>>();
      } else if (key == "loads") {
        plan.loads.clear();
        for (const std::string& name : value.get<std::vector<std::string>>()) {
          std::optional<LoadLevel> load = LoadLevelFromName(name);
          if (!load) {
            return absl::InvalidArgumentError(
                absl::StrCat("unknown load '", name, "'"));
          }
          plan.loads.push_back(*load);
        }
      } else if (key == "variants") {
        plan.variants.clear();
        for (const std::string& name : value.get<std::vector<std::string>>()) {
          std::optional<DesignVariant> v = DesignFromName(name);
          if (!v) {
            return absl::InvalidArgumentError(
                absl::StrCat("unknown design '", name, "'"));
          }
          plan.variants.push_back(*v);
        }
      } else if (key == "seeds") {
        plan.seeds = value.get<std::vector<uint64_t>>();
      } else if (key == "capacity") {
        plan.capacity_overrides = value.get<std::map<std::string, int>>();
      } else if (key == "time_limit") {
        plan.solver.time_limit =
            std::chrono::duration<double>(value.get<double>());
      } else if (key == "threads") {
        plan.solver.thread_count = value.get<int>();
      } else if (key == "node_limit") {
        plan.solver.node_limit = value.get<int64_t>();
      } else if (key == "jobs") {
        plan.jobs = value.get<int>();
      } else {
        return absl::InvalidArgumentError(
            absl::StrCat("unknown plan key '", key, "'"));
      }
    }
  } catch (const json::exception& e) {
    return absl::InvalidArgumentError(absl::StrCat("bad plan: ", e.what()));
  }
  if (absl::Status s = ValidatePlan(plan); !s.ok()) return s;
  return plan;
}

std::string RecordToJsonLine(const ExperimentRecord& r) {
  // ordered_json keeps the schema's field order in the file.
  nlohmann::ordered_json doc;
  doc["topology"] = r.topology;
  doc["load"] = std::string(LoadLevelName(r.load));
  doc["variant"] = std::string(DesignName(r.variant));
  doc["seed"] = r.seed;
  doc["wavelength_count"] = r.wavelength_count;
  doc["wavelength_link_usage"] = r.wavelength_link_usage;
  doc["status"] = r.status;
  doc["solve_time"] = r.solve_time;
  return doc.dump();
}

absl::StatusOr<ExperimentRecord> RecordFromJsonLine(std::string_view line) {
  ExperimentRecord r;
  try {
    const json doc = json::parse(line);
    r.topology = doc.at("topology").get<std::string>();
    const std::string load = doc.at("load").get<std::string>();
    const std::string variant = doc.at("variant").get<std::string>();
    std::optional<LoadLevel> l = LoadLevelFromName(load);
    std::optional<DesignVariant> v = DesignFromName(variant);
    if (!l || !v) {
      return absl::InvalidArgumentError(
          absl::StrCat("unknown load or variant in record: ", ToAbsl(line)));
    }
    r.load = *l;
    r.variant = *v;
    r.seed = doc.at("seed").get<uint64_t>();
    r.wavelength_count = doc.at("wavelength_count").get<int>();
    r.wavelength_link_usage = doc.at("wavelength_link_usage").get<int>();
    r.status = doc.at("status").get<std::string>();
    r.solve_time = doc.at("solve_time").get<double>();
  } catch (const json::exception& e) {
    return absl::InvalidArgumentError(absl::StrCat("bad record: ", e.what()));
  }
  return r;
}

ExperimentResult Summarize(std::vector<ExperimentRecord> records) {
  ExperimentResult result;
  std::sort(records.begin(), records.end(),
            [](const ExperimentRecord& a, const ExperimentRecord& b) {
              return KeyOf(a) < KeyOf(b);
            });
  result.records = std::move(records);

  std::map<CellKey, CellSummary> cells;
  std::map<CellKey, std::pair<int64_t, int64_t>> sums;
  for (const ExperimentRecord& r : result.records) {
    const CellKey key{r.topology, r.load, r.variant};
    CellSummary& cell = cells[key];
    cell.topology = r.topology;
    cell.load = r.load;
    cell.variant = r.variant;
    ++cell.records;
    if (r.status == SolveStatusName(SolveStatus::kOptimal)) {
      ++cell.optimal;
      sums[key].first += r.wavelength_count;
      sums[key].second += r.wavelength_link_usage;
    }
  }
  for (auto& [key, cell] : cells) {
    if (cell.optimal == 0) continue;
    cell.wavelength_count_avg =
        static_cast<double>(sums[key].first) / cell.optimal;
    cell.wavelength_link_usage_avg =
        static_cast<double>(sums[key].second) / cell.optimal;
  }
  for (auto& [key, cell] : cells) {
    std::optional<DesignVariant> base = Counterpart(cell.variant);
    if (!base || !cell.wavelength_link_usage_avg) continue;
    auto it = cells.find({cell.topology, cell.load, *base});
    if (it == cells.end() || !it->second.wavelength_link_usage_avg ||
        *it->second.wavelength_link_usage_avg == 0) {
      continue;
    }
    cell.savings = 1.0 - *cell.wavelength_link_usage_avg /
                             *it->second.wavelength_link_usage_avg;
  }
  for (auto& [key, cell] : cells) result.cells.push_back(std::move(cell));
  return result;
}

absl::StatusOr<ExperimentResult> RunExperiment(const ExperimentPlan& plan,
                                               const RunOptions& options) {
  if (absl::Status s = ValidatePlan(plan); !s.ok()) return s;

  // Resolve topologies and build the shared traffic matrices up front so
  // that input problems surface before any solving starts.
  std::map<std::pair<std::string, LoadLevel>, std::map<uint64_t, Instance>>
      instances;
  std::vector<NetworkTopology> topologies;
  for (const std::string& spec : plan.topologies) {
    absl::StatusOr<NetworkTopology> t = ResolveTopology(spec);
    if (!t.ok()) return t.status();
    auto it = plan.capacity_overrides.find(t->name());
    if (it != plan.capacity_overrides.end()) {
      t = t->WithCapacity(it->second);
      if (!t.ok()) return t.status();
    }
    topologies.push_back(*std::move(t));
  }
  for (const NetworkTopology& t : topologies) {
    for (LoadLevel load : plan.loads) {
      for (uint64_t seed : plan.seeds) {
        absl::StatusOr<TrafficMatrix> m = GenerateTraffic(t, load, false, seed);
        if (!m.ok()) return m.status();
        instances[{t.name(), load}].emplace(seed, Instance{t, *std::move(m)});
      }
    }
  }

  std::map<RecordKey, ExperimentRecord> done;
  if (!options.records_path.empty() &&
      std::filesystem::exists(options.records_path)) {
    absl::StatusOr<std::string> text = ReadWholeFile(options.records_path);
    if (!text.ok()) return text.status();
    size_t start = 0;
    while (start < text->size()) {
      size_t end = text->find('\n', start);
      if (end == std::string::npos) end = text->size();
      const std::string_view line(text->data() + start, end - start);
      start = end + 1;
      if (line.empty()) continue;
      absl::StatusOr<ExperimentRecord> r = RecordFromJsonLine(line);
      if (!r.ok()) return r.status();
      done.emplace(KeyOf(*r), *std::move(r));
    }
  }

  struct Job {
    const Instance* instance;
    LoadLevel load;
    DesignVariant variant;
    uint64_t seed;
  };
  std::vector<ExperimentRecord> records;
  std::vector<Job> jobs;
  for (const NetworkTopology& t : topologies) {
    for (LoadLevel load : plan.loads) {
      for (DesignVariant variant : plan.variants) {
        for (uint64_t seed : plan.seeds) {
          auto it = done.find({t.name(), load, variant, seed});
          if (it != done.end()) {
            records.push_back(it->second);
            continue;
          }
          jobs.push_back(
              {&instances[{t.name(), load}].at(seed), load, variant, seed});
        }
      }
    }
  }

  std::mutex mu;
  std::ofstream append;
  if (!options.records_path.empty()) {
    append.open(options.records_path, std::ios::app);
    if (!append) {
      return absl::PermissionDeniedError(
          absl::StrCat("cannot write ", options.records_path));
    }
  }
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i = next++; i < jobs.size(); i = next++) {
      const Job& job = jobs[i];
      ExperimentRecord r =
          SolveCell(*job.instance, job.load, job.variant, job.seed, plan.solver);
      std::lock_guard<std::mutex> lock(mu);
      if (append.is_open()) append << RecordToJsonLine(r) << "\n" << std::flush;
      if (options.on_record) options.on_record(r);
      records.push_back(std::move(r));
    }
  };
  const int workers =
      static_cast<int>(std::min<size_t>(plan.jobs, std::max<size_t>(jobs.size(), 1)));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> threads;
    for (int i = 0; i < workers; ++i) threads.emplace_back(work);
    for (std::thread& th : threads) th.join();
  }

  ExperimentResult result = Summarize(std::move(records));
  if (!options.records_path.empty()) {
    append.close();
    // Keep unrelated records already in the file, then rewrite canonically.
    std::map<RecordKey, ExperimentRecord> all = std::move(done);
    for (const ExperimentRecord& r : result.records) all[KeyOf(r)] = r;
    std::string out;
    for (const auto& [key, r] : all) absl::StrAppend(&out, RecordToJsonLine(r), "\n");
    if (absl::Status s = WriteWholeFile(options.records_path, out); !s.ok()) {
      return s;
    }
  }
  return result;
}

std::optional<TableFormat> TableFormatFromName(std::string_view name) {
  if (name == "csv") return TableFormat::kCsv;
  if (name == "markdown" || name == "md") return TableFormat::kMarkdown;
  return std::nullopt;
}

std::string RenderTable(const ExperimentResult& r, TableFormat format) {
  const std::vector<std::string> header = {
      "topology", "load",   "variant",          "wc_avg",
      "wlu_avg",  "savings", "optimal_fraction"};
  std::vector<std::vector<std::string>> rows;
  for (const CellSummary& c : r.cells) {
    rows.push_back({c.topology, std::string(LoadLevelName(c.load)),
                    std::string(DesignName(c.variant)),
                    FormatAverage(c.wavelength_count_avg),
                    FormatAverage(c.wavelength_link_usage_avg),
                    FormatSavings(c.savings),
                    absl::StrCat(c.optimal, "/", c.records,
                                 c.fully_optimal() ? "" : "*")});
  }
  std::string out;
  if (format == TableFormat::kCsv) {
    auto line = [&](const std::vector<std::string>& cells) {
      for (size_t i = 0; i < cells.size(); ++i) {
        absl::StrAppend(&out, i ? "," : "", cells[i]);
      }
      out += "\n";
    };
    line(header);
    for (const auto& row : rows) line(row);
    return out;
  }
  auto line = [&](const std::vector<std::string>& cells) {
    out += "|";
    for (const std::string& c : cells) absl::StrAppend(&out, " ", c, " |");
    out += "\n";
  };
  line(header);
  out += "|";
  for (size_t i = 0; i < header.size(); ++i) out += i < 3 ? " --- |" : " ---: |";
  out += "\n";
  for (const auto& row : rows) line(row);
  return out;
}

}  // namespace lexrwa
