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

#include "cli.h"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "lexrwa/bench.h"
#include "lexrwa/design.h"
#include "lexrwa/model.h"
#include "lexrwa/solution.h"
#include "lexrwa/solver.h"
#include "lexrwa/topology.h"
#include "lexrwa/traffic.h"
#include "lexrwa/validate.h"
#include "text_format.h"

namespace lexrwa {
namespace {

// Failure carrying the exit code it maps to.
struct CliError {
  int code;
  std::string message;
};

CliError Usage(std::string message) { return {kExitUsage, std::move(message)}; }

CliError Usage(const absl::Status& s) {
  return {kExitUsage, std::string(s.message())};
}

std::string DesignNames() {
  std::vector<std::string> names;
  for (DesignVariant v : AllDesigns()) names.emplace_back(DesignName(v));
  return absl::StrJoin(names, ", ");
}

// Flags shared by the commands that work on one instance.
struct InstanceFlags {
  std::string topology;
  std::string traffic;
  std::string design;
  std::optional<int> wavelengths;
  std::optional<std::string> alpha1;
  std::optional<std::string> alpha2;
};

void AddTopologyFlags(CLI::App* cmd, InstanceFlags& f) {
  cmd->add_option("--topology", f.topology,
                  "topology file or bundled name (cost239, nsfnet)")
      ->required();
  cmd->add_option("--wavelengths", f.wavelengths,
                  "wavelength channels per link, replacing the file's "
                  "capacity");
}

void AddDesignFlags(CLI::App* cmd, InstanceFlags& f, bool design_required) {
  CLI::Option* design =
      cmd->add_option("--design", f.design,
                      "rwa_wc, rwa_wc_p, rwa_intwc or rwa_intwc_p");
  if (design_required) design->required();
  cmd->add_option("--alpha1", f.alpha1,
                  "wavelength-count weight as p/q (integrated designs)");
  cmd->add_option("--alpha2", f.alpha2,
                  "wavelength-link weight as p/q (integrated designs)");
}

absl::StatusOr<NetworkTopology> LoadTopology(const InstanceFlags& f) {
  absl::StatusOr<NetworkTopology> t = ResolveTopology(f.topology);
  if (!t.ok() || !f.wavelengths) return t;
  return t->WithCapacity(*f.wavelengths);
}

std::optional<CliError> ParseDesign(const std::string& name,
                                    DesignVariant* out) {
  std::optional<DesignVariant> v = DesignFromName(name);
  if (!v) {
    return Usage(absl::StrCat("unknown design '", name,
                              "'; valid designs: ", DesignNames()));
  }
  *out = *v;
  return std::nullopt;
}

std::optional<CliError> MakeConfig(const InstanceFlags& f,
                                   const NetworkTopology& t,
                                   DesignVariant variant, DesignConfig* cfg) {
  *cfg = DesignConfig::For(variant, t);
  if (f.alpha1) {
    absl::StatusOr<Rational> a = ParseRational(*f.alpha1);
    if (!a.ok()) return Usage(a.status());
    cfg->weights.alpha1 = *a;
  }
  if (f.alpha2) {
    absl::StatusOr<Rational> a = ParseRational(*f.alpha2);
    if (!a.ok()) return Usage(a.status());
    cfg->weights.alpha2 = *a;
  }
  if (absl::Status s = ValidateDesign(*cfg, t); !s.ok()) return Usage(s);
  return std::nullopt;
}

std::optional<CliError> Emit(const std::string& path, const std::string& data,
                             std::ostream& out) {
  if (path.empty() || path == "-") {
    out << data;
    return std::nullopt;
  }
  if (absl::Status s = WriteWholeFile(path, data); !s.ok()) return Usage(s);
  return std::nullopt;
}

// --- info -------------------------------------------------------------------

struct InfoFlags {
  InstanceFlags instance;
  std::string traffic;
};

std::optional<CliError> RunInfo(const InfoFlags& f, std::ostream& out) {
  absl::StatusOr<NetworkTopology> t = LoadTopology(f.instance);
  if (!t.ok()) return Usage(t.status());
  const DegreeStats deg = NodeDegreeStats(*t);
  out << "topology " << t->name() << "\n"
      << "nodes " << t->num_nodes() << "\n"
      << "links " << t->num_links() << "\n"
      << "capacity " << t->capacity() << "\n"
      << "degree min " << deg.min << " max " << deg.max << " mean "
      << RationalToString(deg.mean) << " ("
      << absl::StrFormat("%.2f", boost::rational_cast<double>(deg.mean))
      << ")\n";
  for (LoadLevel load : {LoadLevel::kLow, LoadLevel::kMedium,
                         LoadLevel::kHigh}) {
    out << "demands at " << LoadLevelName(load) << " load "
        << DemandCountFor(load, t->num_nodes()) << "\n";
  }
  if (!f.traffic.empty()) {
    absl::StatusOr<TrafficMatrix> m = LoadTrafficFile(f.traffic, *t);
    if (!m.ok()) return Usage(m.status());
    out << "traffic demands " << m->demands.size() << " protected "
        << m->num_protected() << "\n";
  }
  return std::nullopt;
}

// --- solve ------------------------------------------------------------------

struct SolveFlags {
  InstanceFlags instance;
  double time_limit = 60;
  int threads = 1;
  std::optional<int64_t> node_limit;
  bool heuristic = false;
  std::string output;
};

std::optional<CliError> RunSolve(const SolveFlags& f, std::ostream& out,
                                 std::ostream& err) {
  DesignVariant variant;
  if (auto e = ParseDesign(f.instance.design, &variant)) return e;
  absl::StatusOr<NetworkTopology> t = LoadTopology(f.instance);
  if (!t.ok()) return Usage(t.status());
  absl::StatusOr<TrafficMatrix> m = LoadTrafficFile(f.instance.traffic, *t);
  if (!m.ok()) return Usage(m.status());
  DesignConfig cfg;
  if (auto e = MakeConfig(f.instance, *t, variant, &cfg)) return e;

  SolverOptions opts;
  opts.time_limit = std::chrono::duration<double>(f.time_limit);
  opts.thread_count = f.threads;
  opts.node_limit = f.node_limit;
  absl::StatusOr<RwaSolution> s = f.heuristic
                                      ? SolveHeuristic(*t, *m, cfg)
                                      : SolveExact(*t, *m, cfg, opts);
  if (!s.ok()) return Usage(s.status());
  err << "status " << SolveStatusName(s->status) << " wavelength_count "
      << s->wavelength_count << " wavelength_link_usage "
      << s->wavelength_link_usage << " objective "
      << RationalToString(s->objective_value) << " nodes " << s->stats.nodes
      << absl::StrFormat(" seconds %.3f", s->stats.seconds) << "\n";
  if (auto e = Emit(f.output, SolutionToJson(*s, t->name(), variant), out)) {
    return e;
  }
  if (!s->has_routing()) {
    return CliError{kExitInfeasibleOrInvalid,
                    absl::StrCat("no routing found (",
                                 ToAbsl(SolveStatusName(s->status)), ")")};
  }
  return std::nullopt;
}

// --- gen-traffic ------------------------------------------------------------

struct GenFlags {
  InstanceFlags instance;
  std::string load;
  int protect = 0;
  uint64_t seed = 1;
  std::string output;
};

std::optional<CliError> RunGenTraffic(const GenFlags& f, std::ostream& out) {
  absl::StatusOr<NetworkTopology> t = LoadTopology(f.instance);
  if (!t.ok()) return Usage(t.status());
  std::optional<LoadLevel> load = LoadLevelFromName(f.load);
  if (!load || *load == LoadLevel::kCustom) {
    return Usage(absl::StrCat("unknown load '", f.load,
                              "'; valid loads: low, medium, high"));
  }
  absl::StatusOr<TrafficMatrix> m =
      GenerateTraffic(*t, *load, f.protect != 0, f.seed);
  if (!m.ok()) return Usage(m.status());
  return Emit(f.output, SerializeTraffic(*m), out);
}

// --- export -----------------------------------------------------------------

struct ExportFlags {
  InstanceFlags instance;
  std::string format = "lp";
  std::string output;
};

std::optional<CliError> RunExport(const ExportFlags& f, std::ostream& out) {
  DesignVariant variant;
  if (auto e = ParseDesign(f.instance.design, &variant)) return e;
  std::optional<ExportFormat> format = ExportFormatFromName(f.format);
  if (!format) {
    return Usage(absl::StrCat("unknown format '", f.format,
                              "'; valid formats: lp, mps"));
  }
  absl::StatusOr<NetworkTopology> t = LoadTopology(f.instance);
  if (!t.ok()) return Usage(t.status());
  absl::StatusOr<TrafficMatrix> m = LoadTrafficFile(f.instance.traffic, *t);
  if (!m.ok()) return Usage(m.status());
  DesignConfig cfg;
  if (auto e = MakeConfig(f.instance, *t, variant, &cfg)) return e;
  absl::StatusOr<IlpModel> model = BuildModel(*t, *m, cfg);
  if (!model.ok()) return Usage(model.status());
  return Emit(f.output, ExportModel(*model, *format), out);
}

// --- bench ------------------------------------------------------------------

struct BenchFlags {
  std::string plan;
  std::vector<std::string> topologies;
  std::vector<std::string> loads;
  std::vector<std::string> variants;
  std::vector<uint64_t> seeds;
  std::optional<int> wavelengths;
  std::optional<double> time_limit;
  std::optional<int> threads;
  std::optional<int> jobs;
  std::string output;
};

std::optional<CliError> RunBench(const BenchFlags& f, std::ostream& out,
                                 std::ostream& err) {
  ExperimentPlan plan;
  if (!f.plan.empty()) {
    absl::StatusOr<std::string> text = ReadWholeFile(f.plan);
    if (!text.ok()) return Usage(text.status());
    absl::StatusOr<ExperimentPlan> parsed = ParsePlanJson(*text);
    if (!parsed.ok()) return Usage(parsed.status());
    plan = *std::move(parsed);
  }
  if (!f.topologies.empty()) plan.topologies = f.topologies;
  if (!f.loads.empty()) {
    plan.loads.clear();
    for (const std::string& name : f.loads) {
      std::optional<LoadLevel> load = LoadLevelFromName(name);
      if (!load || *load == LoadLevel::kCustom) {
        return Usage(absl::StrCat("unknown load '", name, "'"));
      }
      plan.loads.push_back(*load);
    }
  }
  if (!f.variants.empty()) {
    plan.variants.clear();
    for (const std::string& name : f.variants) {
      DesignVariant v;
      if (auto e = ParseDesign(name, &v)) return e;
      plan.variants.push_back(v);
    }
  }
  if (!f.seeds.empty()) plan.seeds = f.seeds;
  if (f.wavelengths) {
    for (const std::string& spec : plan.topologies) {
      absl::StatusOr<NetworkTopology> t = ResolveTopology(spec);
      if (!t.ok()) return Usage(t.status());
      plan.capacity_overrides[t->name()] = *f.wavelengths;
    }
  }
  if (f.time_limit) {
    plan.solver.time_limit = std::chrono::duration<double>(*f.time_limit);
  }
  if (f.threads) plan.solver.thread_count = *f.threads;
  if (f.jobs) plan.jobs = *f.jobs;
  if (absl::Status s = ValidatePlan(plan); !s.ok()) return Usage(s);

  std::error_code ec;
  std::filesystem::create_directories(f.output, ec);
  if (ec) {
    return Usage(absl::StrCat("cannot create ", f.output, ": ", ec.message()));
  }
  const std::filesystem::path dir(f.output);
  RunOptions options;
  options.records_path = (dir / "records.jsonl").string();
  options.on_record = [&err](const ExperimentRecord& r) {
    err << r.topology << " " << LoadLevelName(r.load) << " "
        << DesignName(r.variant) << " seed " << r.seed << ": " << r.status
        << " wc " << r.wavelength_count << " wlu " << r.wavelength_link_usage
        << absl::StrFormat(" (%.2fs)", r.solve_time) << "\n";
  };
  absl::StatusOr<ExperimentResult> result = RunExperiment(plan, options);
  if (!result.ok()) return Usage(result.status());
  const std::string markdown = RenderTable(*result, TableFormat::kMarkdown);
  for (const auto& [name, format] :
       {std::pair{"table.csv", TableFormat::kCsv},
        std::pair{"table.md", TableFormat::kMarkdown}}) {
    if (absl::Status s =
            WriteWholeFile((dir / name).string(), RenderTable(*result, format));
        !s.ok()) {
      return Usage(s);
    }
  }
  out << markdown;
  return std::nullopt;
}

// --- validate ---------------------------------------------------------------

struct ValidateFlags {
  InstanceFlags instance;
  std::string solution;
};

std::optional<CliError> RunValidate(const ValidateFlags& f, std::ostream& out) {
  absl::StatusOr<std::string> text = ReadWholeFile(f.solution);
  if (!text.ok()) return Usage(text.status());
  absl::StatusOr<SolutionDocument> doc = SolutionFromJson(*text);
  if (!doc.ok()) return Usage(doc.status());
  DesignVariant variant = doc->design;
  if (!f.instance.design.empty()) {
    if (auto e = ParseDesign(f.instance.design, &variant)) return e;
  }
  absl::StatusOr<NetworkTopology> t = LoadTopology(f.instance);
  if (!t.ok()) return Usage(t.status());
  absl::StatusOr<TrafficMatrix> m = LoadTrafficFile(f.instance.traffic, *t);
  if (!m.ok()) return Usage(m.status());
  DesignConfig cfg;
  if (auto e = MakeConfig(f.instance, *t, variant, &cfg)) return e;
  if (absl::Status s = ValidateDesignInputs(*t, *m, cfg); !s.ok()) {
    return Usage(s);
  }
  const ValidationReport report = CheckSolution(*t, *m, cfg, doc->solution);
  out << ReportToJson(report);
  if (!report.ok() || !report.metrics_consistent) {
    return CliError{kExitInfeasibleOrInvalid,
                    absl::StrCat("solution is invalid: ",
                                 report.violations.size(), " violation(s)",
                                 report.metrics_consistent
                                     ? ""
                                     : ", stored metrics disagree")};
  }
  return std::nullopt;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Exact multi-objective routing and wavelength assignment"};
  app.name("lexrwa");
  app.require_subcommand(1);

  InfoFlags info;
  CLI::App* info_cmd = app.add_subcommand("info", "describe a topology");
  AddTopologyFlags(info_cmd, info.instance);
  info_cmd->add_option("--traffic", info.traffic, "traffic file to summarize");

  SolveFlags solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "solve one instance");
  AddTopologyFlags(solve_cmd, solve.instance);
  AddDesignFlags(solve_cmd, solve.instance, /*design_required=*/true);
  solve_cmd->add_option("--traffic", solve.instance.traffic, "traffic file")
      ->required();
  solve_cmd->add_option("--time-limit", solve.time_limit, "seconds")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--threads", solve.threads, "search threads")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--node-limit", solve.node_limit,
                        "stop after this many search nodes");
  solve_cmd->add_flag("--heuristic", solve.heuristic,
                      "first-fit only, no optimality proof");
  solve_cmd->add_option("--output", solve.output,
                        "solution JSON file (default: stdout)");

  GenFlags gen;
  CLI::App* gen_cmd =
      app.add_subcommand("gen-traffic", "generate a seeded traffic matrix");
  AddTopologyFlags(gen_cmd, gen.instance);
  gen_cmd->add_option("--load", gen.load, "low, medium or high")->required();
  gen_cmd->add_option("--protected", gen.protect, "0 or 1")
      ->check(CLI::IsMember({0, 1}));
  gen_cmd->add_option("--seed", gen.seed, "random seed");
  gen_cmd->add_option("--output", gen.output, "traffic file (default: stdout)");

  ExportFlags exp;
  CLI::App* export_cmd =
      app.add_subcommand("export", "write the ILP model as LP or MPS");
  AddTopologyFlags(export_cmd, exp.instance);
  AddDesignFlags(export_cmd, exp.instance, /*design_required=*/true);
  export_cmd->add_option("--traffic", exp.instance.traffic, "traffic file")
      ->required();
  export_cmd->add_option("--format", exp.format, "lp or mps");
  export_cmd->add_option("--output", exp.output, "model file (default: stdout)");

  BenchFlags bench;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "run a seeded experiment grid");
  bench_cmd->add_option("--plan", bench.plan, "JSON plan file");
  bench_cmd->add_option("--topologies", bench.topologies,
                        "topology files or bundled names");
  bench_cmd->add_option("--loads", bench.loads, "low, medium, high");
  bench_cmd->add_option("--variants", bench.variants, "design names");
  bench_cmd->add_option("--seeds", bench.seeds, "traffic seeds");
  bench_cmd->add_option("--wavelengths", bench.wavelengths,
                        "wavelength channels for every topology");
  bench_cmd->add_option("--time-limit", bench.time_limit,
                        "seconds per solve");
  bench_cmd->add_option("--threads", bench.threads, "search threads per solve");
  bench_cmd->add_option("--jobs", bench.jobs, "solves run concurrently");
  bench_cmd->add_option("--output", bench.output, "result directory")
      ->required();

  ValidateFlags val;
  CLI::App* validate_cmd =
      app.add_subcommand("validate", "check a solution file");
  AddTopologyFlags(validate_cmd, val.instance);
  AddDesignFlags(validate_cmd, val.instance, /*design_required=*/false);
  validate_cmd->add_option("--traffic", val.instance.traffic, "traffic file")
      ->required();
  validate_cmd->add_option("--solution", val.solution, "solution JSON file")
      ->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out;
    std::ostringstream help_err;
    const int code = app.exit(e, help_out, help_err);
    out << help_out.str();
    err << help_err.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::optional<CliError> error;
  if (info_cmd->parsed()) {
    error = RunInfo(info, out);
  } else if (solve_cmd->parsed()) {
    error = RunSolve(solve, out, err);
  } else if (gen_cmd->parsed()) {
    error = RunGenTraffic(gen, out);
  } else if (export_cmd->parsed()) {
    error = RunExport(exp, out);
  } else if (bench_cmd->parsed()) {
    error = RunBench(bench, out, err);
  } else if (validate_cmd->parsed()) {
    error = RunValidate(val, out);
  }
  if (error) {
    err << "lexrwa: " << error->message << "\n";
    return error->code;
  }
  return kExitOk;
}

}  // namespace lexrwa
