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

// Acceptance harness: prints one PASS or FAIL line per criterion and exits
// non-zero when any criterion fails. Progress goes to stderr.
//
// LEXRWA_ACCEPTANCE_SOLVE_SECONDS caps a single solve of the COST239 grid
// (default 45). The whole grid also shares a 28 minute budget.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "absl/strings/str_format.h"
#include "cli.h"
#include "lexrwa/design.h"
#include "lexrwa/model.h"
#include "lexrwa/solver.h"
#include "lexrwa/topology.h"
#include "lexrwa/traffic.h"
#include "lexrwa/validate.h"
#include "json.hpp"
#include "test_util.h"

namespace lexrwa {
namespace {

using Clock = std::chrono::steady_clock;
using ::lexrwa::testing::FigureTopology;
using ::lexrwa::testing::FigureTraffic;
using ::lexrwa::testing::MicroInstance;
using ::lexrwa::testing::RandomMicroInstance;
using ::lexrwa::testing::Unwrap;

double Since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
  bool pass = false;
  std::string detail;
};

// Working and protection lightpaths of every protected demand share no
// link and sit on one channel. Checked from the lightpaths directly, not
// through the validator.
bool ProtectionHolds(const TrafficMatrix& m, const RwaSolution& s) {
  for (const Demand& d : m.demands) {
    if (!d.is_protected) continue;
    const Lightpath* work = nullptr;
    const Lightpath* backup = nullptr;
    for (const Lightpath& p : s.lightpaths) {
      if (p.demand != d.id) continue;
      (p.role == PathRole::kWorking ? work : backup) = &p;
    }
    if (work == nullptr || backup == nullptr) return false;
    if (work->channel != backup->channel) return false;
    for (LinkId e : work->links) {
      if (std::find(backup->links.begin(), backup->links.end(), e) !=
          backup->links.end()) {
        return false;
      }
    }
  }
  return true;
}

// Protected micro solutions proven optimal along the way, for criterion 8.
struct ProtectedSolve {
  std::string label;
  TrafficMatrix traffic;
  RwaSolution solution;
};

Verdict OracleEquivalence(std::vector<ProtectedSolve>* protected_solves) {
  const Clock::time_point start = Clock::now();
  int instances = 0;
  int solves = 0;
  int mismatches = 0;
  int with_protection = 0;
  for (uint64_t seed = 1; seed <= 120; ++seed) {
    const MicroInstance inst = RandomMicroInstance(seed);
    ++instances;
    if (inst.any_protected) ++with_protection;
    const std::vector<DesignVariant> variants =
        inst.any_protected
            ? std::vector{DesignVariant::kRwaWcP, DesignVariant::kRwaIntwcP}
            : std::vector{DesignVariant::kRwaWc, DesignVariant::kRwaIntwc};
    for (DesignVariant v : variants) {
      const DesignConfig cfg = DesignConfig::For(v, inst.topology);
      const RwaSolution oracle =
          Unwrap(SolveOracle(inst.topology, inst.traffic, cfg));
      SolverOptions opts;
      opts.time_limit = std::chrono::seconds(10);
      const RwaSolution exact =
          Unwrap(SolveExact(inst.topology, inst.traffic, cfg, opts));
      ++solves;
      const bool same =
          oracle.status == exact.status &&
          (!exact.has_routing() ||
           (exact.objective_value == oracle.objective_value &&
            CheckSolution(inst.topology, inst.traffic, cfg, exact).ok()));
      if (!same) {
        ++mismatches;
        std::cerr << "  micro seed " << seed << " " << std::string(DesignName(v))
                  << ": exact " << std::string(SolveStatusName(exact.status)) << " "
                  << RationalToString(exact.objective_value) << ", oracle "
                  << std::string(SolveStatusName(oracle.status)) << " "
                  << RationalToString(oracle.objective_value) << "\n";
      }
      if (exact.status == SolveStatus::kOptimal && HasProtection(v)) {
        protected_solves->push_back(
            {absl::StrFormat("micro seed %d %s", seed, std::string(DesignName(v))),
             inst.traffic, exact});
      }
    }
  }
  const double seconds = Since(start);
  return {mismatches == 0 && instances >= 100 && seconds < 60,
          absl::StrFormat("%d instances (%d with protection), %d solves, "
                          "%d mismatches, %.1fs",
                          instances, with_protection, solves, mismatches,
                          seconds)};
}

// Design rows of the five-node figure: WLU-only, WC-only and integrated.
Verdict FigureFixture() {
  const Clock::time_point start = Clock::now();
  const NetworkTopology t = FigureTopology();
  const TrafficMatrix m = FigureTraffic();
  std::vector<std::string> failures;

  DesignConfig usage_only = DesignConfig::For(DesignVariant::kRwaIntwc, t);
  usage_only.weights = {kZero, Rational(1)};
  const DesignConfig wc = DesignConfig::For(DesignVariant::kRwaWc, t);
  const DesignConfig intwc = DesignConfig::For(DesignVariant::kRwaIntwc, t);

  auto solution = [](std::vector<Lightpath> paths, int wc_value, int wlu,
                     Rational objective) {
    RwaSolution s;
    s.status = SolveStatus::kOptimal;
    s.lightpaths = std::move(paths);
    s.wavelength_count = wc_value;
    s.wavelength_link_usage = wlu;
    s.objective_value = objective;
    return s;
  };
  // Design 1 of the figure: 0->4->3 on channel 0 and 4->3 on channel 1.
  const RwaSolution row1 = solution(
      {{DemandId(0), PathRole::kWorking, {LinkId(0), LinkId(4)}, ChannelId(0)},
       {DemandId(1), PathRole::kWorking, {LinkId(4)}, ChannelId(1)}},
      2, 3, Rational(3));
  // Design 2: 0->1->3 and 4->2->3, both on channel 0.
  const RwaSolution row2 = solution(
      {{DemandId(0), PathRole::kWorking, {LinkId(2), LinkId(6)}, ChannelId(0)},
       {DemandId(1), PathRole::kWorking, {LinkId(8), LinkId(10)},
        ChannelId(0)}},
      1, 4, Rational(1));

  const RwaSolution d1 = Unwrap(SolveExact(t, m, usage_only, {}));
  if (d1.status != SolveStatus::kOptimal || d1.wavelength_link_usage != 3) {
    failures.push_back("WLU-only optimum is not 3");
  }
  const ValidationReport r1 = CheckSolution(t, m, usage_only, row1);
  if (!r1.ok() || !r1.metrics_consistent ||
      row1.objective_value != d1.objective_value) {
    failures.push_back("row 1 routing (2,3) is not a WLU-only optimum");
  }

  const RwaSolution d2 = Unwrap(SolveExact(t, m, wc, {}));
  if (d2.status != SolveStatus::kOptimal || d2.wavelength_count != 1) {
    failures.push_back("WC-only optimum is not 1");
  }
  const ValidationReport r2 = CheckSolution(t, m, wc, row2);
  if (!r2.ok() || !r2.metrics_consistent ||
      row2.objective_value != d2.objective_value) {
    failures.push_back("row 2 routing (1,4) is not a WC-only optimum");
  }

  const RwaSolution d3 = Unwrap(SolveExact(t, m, intwc, {}));
  if (d3.status != SolveStatus::kOptimal || d3.wavelength_count != 1 ||
      d3.wavelength_link_usage != 3) {
    failures.push_back("integrated optimum is not (1,3)");
  }
  const double seconds = Since(start);
  if (seconds >= 1) failures.push_back("slower than 1s");
  std::string detail = absl::StrFormat(
      "WLU-only solver (%d,%d) with (2,3) optimal, WC-only solver (%d,%d) "
      "with (1,4) optimal, integrated (%d,%d), %.3fs",
      d1.wavelength_count, d1.wavelength_link_usage, d2.wavelength_count,
      d2.wavelength_link_usage, d3.wavelength_count, d3.wavelength_link_usage,
      seconds);
  for (const std::string& f : failures) detail += "; " + f;
  return {failures.empty(), detail};
}

// Single-fault mutants of an optimal protected solution.
Verdict MutationSuite() {
  const NetworkTopology t = Unwrap(
      ParseTopology("topology k4 nodes=4 capacity=3\n"
                    "link 0 1\nlink 1 2\nlink 2 3\nlink 3 0\nlink 0 2\n"));
  const TrafficMatrix m = testing::MakeTraffic({{0, 2}, {1, 3}}, {true, false});
  const DesignConfig cfg = DesignConfig::For(DesignVariant::kRwaIntwcP, t);
  const RwaSolution optimal = Unwrap(SolveExact(t, m, cfg, {}));
  if (optimal.status != SolveStatus::kOptimal ||
      !CheckSolution(t, m, cfg, optimal).ok()) {
    return {false, "base solution is not optimal and valid"};
  }
  auto find = [](RwaSolution& s, int demand, PathRole role) -> Lightpath& {
    for (Lightpath& p : s.lightpaths) {
      if (p.demand == DemandId(demand) && p.role == role) return p;
    }
    std::abort();
  };

  std::map<ViolationClass, RwaSolution> mutants;
  {
    RwaSolution s = optimal;
    std::erase_if(s.lightpaths, [](const Lightpath& p) {
      return p.role == PathRole::kProtection;
    });
    mutants[ViolationClass::kProvisioning] = s;
  }
  {
    RwaSolution s = optimal;
    std::vector<LinkId>& links = find(s, 1, PathRole::kWorking).links;
    std::reverse(links.begin(), links.end());
    mutants[ViolationClass::kSimplePath] = s;
  }
  {
    RwaSolution s = optimal;
    find(s, 0, PathRole::kProtection).channel = ChannelId(2);
    mutants[ViolationClass::kSingleChannel] = s;
  }
  {
    // Demand 1 joins the channel of demand 0 on a route sharing a link.
    RwaSolution s = optimal;
    const Lightpath work = find(s, 0, PathRole::kWorking);
    const Lightpath backup = find(s, 0, PathRole::kProtection);
    std::set<int> taken;
    for (const Lightpath* p : {&work, &backup}) {
      for (LinkId e : p->links) taken.insert(e.value());
    }
    Lightpath& moved = find(s, 1, PathRole::kWorking);
    moved.channel = work.channel;
    moved.links = taken.count(1) || taken.count(7)
                      ? std::vector{LinkId(1), LinkId(7)}
                      : std::vector{LinkId(2), LinkId(4)};
    mutants[ViolationClass::kChannelReuse] = s;
  }
  {
    RwaSolution s = optimal;
    find(s, 0, PathRole::kProtection).links =
        find(s, 0, PathRole::kWorking).links;
    mutants[ViolationClass::kLinkDisjointness] = s;
  }
  {
    RwaSolution s = optimal;
    find(s, 1, PathRole::kWorking).channel = ChannelId(3);
    mutants[ViolationClass::kChannelRange] = s;
  }

  std::string detail;
  bool pass = optimal.wavelength_count < 3;
  for (auto& [expected, s] : mutants) {
    const SolutionMetrics metrics = ComputeMetrics(s);
    s.wavelength_count = metrics.wavelength_count;
    s.wavelength_link_usage = metrics.wavelength_link_usage;
    s.objective_value =
        cfg.weights.alpha1 * Rational(metrics.wavelength_count) +
        cfg.weights.alpha2 * Rational(metrics.wavelength_link_usage);
    const ValidationReport r = CheckSolution(t, m, cfg, s);
    std::set<ViolationClass> cited;
    for (const Violation& v : r.violations) cited.insert(v.kind);
    const bool exact = cited == std::set<ViolationClass>{expected};
    pass = pass && exact;
    std::string names;
    for (ViolationClass c : cited) {
      names += (names.empty() ? "" : "+") + std::string(ViolationClassName(c));
    }
    detail += absl::StrFormat("%s%s->%s", detail.empty() ? "" : ", ",
                              std::string(ViolationClassName(expected)),
                              names.empty() ? "accepted" : names);
  }
  return {pass, detail};
}

Verdict Determinism() {
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() /
      ("lexrwa_accept_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const std::string traffic = (dir / "cost239_low_1.trf").string();
  std::ostringstream sink;
  if (RunCli({"gen-traffic", "--topology", "cost239", "--load", "low",
              "--seed", "1", "--output", traffic},
             sink, sink) != kExitOk) {
    return {false, "gen-traffic failed"};
  }
  auto solve = [&](const std::string& threads) {
    std::ostringstream out;
    std::ostringstream err;
    const int code =
        RunCli({"solve", "--topology", "cost239", "--wavelengths", "10",
                "--traffic", traffic, "--design", "rwa_intwc", "--threads",
                threads, "--time-limit", "120"},
               out, err);
    return std::pair{code, out.str()};
  };
  const auto first = solve("1");
  const auto second = solve("1");
  const bool identical = first.first == kExitOk && first == second;
  const nlohmann::json reference = nlohmann::json::parse(first.second);
  int agreeing = 0;
  for (int i = 0; i < 5; ++i) {
    const auto run = solve("4");
    const nlohmann::json j = nlohmann::json::parse(run.second);
    if (run.first == first.first && j["status"] == reference["status"] &&
        j["objective"] == reference["objective"]) {
      ++agreeing;
    }
  }
  std::filesystem::remove_all(dir);
  return {identical && agreeing == 5,
          absl::StrFormat("threads 1 byte-identical: %s; threads 4 agreeing "
                          "runs: %d/5 (status %s, objective %s)",
                          identical ? "yes" : "no", agreeing,
                          reference["status"].get<std::string>(),
                          reference["objective"].get<std::string>())};
}

Verdict ModelCounts() {
  int audited = 0;
  int wrong = 0;
  auto audit = [&](const NetworkTopology& t, const TrafficMatrix& m,
                   DesignVariant v) {
    const IlpModel model = Unwrap(BuildModel(t, m, DesignConfig::For(v, t)));
    const int64_t n = t.num_nodes();
    const int64_t e = t.num_links();
    const int64_t c = t.capacity();
    const int64_t d = static_cast<int64_t>(m.demands.size());
    const int64_t dp = m.num_protected();
    const bool ok =
        model.num_variables() == d * e * c + dp * e * c + d * c + e * c + c &&
        model.CountConstraints(ConstraintFamily::kProvisioning) == d &&
        model.CountConstraints(ConstraintFamily::kWorkingFlow) == n * d * c &&
        model.CountConstraints(ConstraintFamily::kProtectionFlow) ==
            n * dp * c &&
        model.CountConstraints(ConstraintFamily::kChannelUniqueness) ==
            e * c &&
        model.CountConstraints(ConstraintFamily::kChannelUsage) == c &&
        static_cast<int64_t>(model.constraints().size()) ==
            d + n * d * c + n * dp * c + e * c + c;
    ++audited;
    if (!ok) ++wrong;
  };
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    const MicroInstance inst = RandomMicroInstance(1000 + seed);
    audit(inst.topology, inst.traffic,
          inst.any_protected ? DesignVariant::kRwaIntwcP
                             : DesignVariant::kRwaIntwc);
  }
  const std::vector<LoadLevel> loads = {LoadLevel::kLow, LoadLevel::kMedium};
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    const std::string name = seed % 2 ? "cost239" : "nsfnet";
    const NetworkTopology t =
        Unwrap(Unwrap(ResolveTopology(name)).WithCapacity(2 + seed % 4));
    const bool protect = seed % 3 == 0;
    const TrafficMatrix m =
        Unwrap(GenerateTraffic(t, loads[seed % 2], protect, seed));
    audit(t, m, protect ? DesignVariant::kRwaWcP : DesignVariant::kRwaWc);
  }
  return {audited == 20 && wrong == 0,
          absl::StrFormat("%d instances audited, %d with a count mismatch",
                          audited, wrong)};
}

// The COST239 low-load grid, shared by criteria 2, 4 and 8.
struct GridCell {
  uint64_t seed;
  DesignVariant variant;
  TrafficMatrix traffic;
  RwaSolution solution;
  bool valid = false;
  double limit = 0;
};

std::vector<GridCell> SolveGrid(double cap, double budget,
                                double* total_seconds) {
  const NetworkTopology t =
      Unwrap(Unwrap(ResolveTopology("cost239")).WithCapacity(10));
  const std::vector<DesignVariant> order = {
      DesignVariant::kRwaWc, DesignVariant::kRwaIntwc, DesignVariant::kRwaWcP,
      DesignVariant::kRwaIntwcP};
  std::vector<GridCell> cells;
  for (DesignVariant v : order) {
    for (uint64_t seed = 1; seed <= 10; ++seed) {
      cells.push_back({seed, v,
                       Unwrap(GenerateTraffic(t, LoadLevel::kLow,
                                              HasProtection(v), seed)),
                       {}, false, 0});
    }
  }
  const Clock::time_point start = Clock::now();
  for (size_t i = 0; i < cells.size(); ++i) {
    GridCell& cell = cells[i];
    // Whatever budget is left is split over the remaining solves.
    const double left = budget - Since(start);
    cell.limit = std::max(1.0, std::min(cap, left / (cells.size() - i)));
    SolverOptions opts;
    opts.time_limit = std::chrono::duration<double>(cell.limit);
    const DesignConfig cfg = DesignConfig::For(cell.variant, t);
    cell.solution = Unwrap(SolveExact(t, cell.traffic, cfg, opts));
    const ValidationReport r = CheckSolution(t, cell.traffic, cfg,
                                             cell.solution);
    cell.valid = r.ok() && r.metrics_consistent;
    std::cerr << absl::StrFormat(
        "  cost239 low seed %2d %-11s %-8s wc %2d wlu %3d (%.1fs of %.0fs)\n",
        cell.seed, std::string(DesignName(cell.variant)),
        std::string(SolveStatusName(cell.solution.status)), cell.solution.wavelength_count,
        cell.solution.wavelength_link_usage, cell.solution.stats.seconds,
        cell.limit);
  }
  *total_seconds = Since(start);
  return cells;
}

const GridCell* FindCell(const std::vector<GridCell>& cells, DesignVariant v,
                         uint64_t seed) {
  for (const GridCell& c : cells) {
    if (c.variant == v && c.seed == seed) return &c;
  }
  return nullptr;
}

bool Proven(const GridCell* c) {
  return c != nullptr && c->valid && c->solution.status == SolveStatus::kOptimal;
}

Verdict LexicographicGuarantee(const std::vector<GridCell>& cells) {
  int checked = 0;
  int broken = 0;
  std::string detail;
  for (const auto& [base, integrated] :
       {std::pair{DesignVariant::kRwaWc, DesignVariant::kRwaIntwc},
        std::pair{DesignVariant::kRwaWcP, DesignVariant::kRwaIntwcP}}) {
    int pairs = 0;
    for (uint64_t seed = 1; seed <= 10; ++seed) {
      const GridCell* a = FindCell(cells, base, seed);
      const GridCell* b = FindCell(cells, integrated, seed);
      if (!Proven(a) || !Proven(b)) continue;
      ++pairs;
      ++checked;
      if (a->solution.wavelength_count != b->solution.wavelength_count ||
          b->solution.wavelength_link_usage >
              a->solution.wavelength_link_usage) {
        ++broken;
      }
    }
    detail += absl::StrFormat("%s%s/%s: %d optimal pairs", detail.empty() ? ""
                                                                          : ", ",
                              std::string(DesignName(base)), std::string(DesignName(integrated)), pairs);
  }
  return {checked > 0 && broken == 0,
          absl::StrFormat("%s, %d violations", detail, broken)};
}

Verdict Trend(const std::vector<GridCell>& cells, double seconds) {
  // Means over seeds where both designs of a comparison are proven optimal.
  auto paired = [&](DesignVariant a, DesignVariant b, bool count) {
    double sum_a = 0;
    double sum_b = 0;
    int n = 0;
    for (uint64_t seed = 1; seed <= 10; ++seed) {
      const GridCell* x = FindCell(cells, a, seed);
      const GridCell* y = FindCell(cells, b, seed);
      if (!Proven(x) || !Proven(y)) continue;
      sum_a += count ? x->solution.wavelength_count
                     : x->solution.wavelength_link_usage;
      sum_b += count ? y->solution.wavelength_count
                     : y->solution.wavelength_link_usage;
      ++n;
    }
    return std::tuple{sum_a, sum_b, n};
  };
  const auto [wlu_int, wlu_wc, n_wlu] =
      paired(DesignVariant::kRwaIntwc, DesignVariant::kRwaWc, false);
  const auto [wc_p, wc_plain, n_wc] =
      paired(DesignVariant::kRwaWcP, DesignVariant::kRwaWc, true);
  std::string unproven;
  for (const GridCell& c : cells) {
    if (Proven(&c)) continue;
    unproven += absl::StrFormat("%s%s/%d:%s", unproven.empty() ? "" : " ",
                                std::string(DesignName(c.variant)), c.seed,
                                c.valid ? std::string(SolveStatusName(c.solution.status))
                                        : "invalid");
  }
  const bool have = n_wlu > 0 && n_wc > 0;
  const double saving = have && wlu_wc > 0 ? 1.0 - wlu_int / wlu_wc : 0;
  const double ratio = have && wc_plain > 0 ? wc_p / wc_plain : 0;
  const bool pass = have && saving >= 0.05 && saving <= 0.25 && ratio > 1.3 &&
                    seconds < 1800;
  return {pass,
          absl::StrFormat("WLU saving intwc vs wc %.1f%% over %d seeds "
                          "(target 5%%..25%%), WC(wc_p)/WC(wc) %.3f over %d "
                          "seeds (target >1.3), %.0fs; not averaged: %s",
                          100 * saving, n_wlu, ratio, n_wc, seconds,
                          unproven.empty() ? "none" : unproven)};
}

Verdict ProtectionPaths(const std::vector<GridCell>& cells,
                        const std::vector<ProtectedSolve>& micro) {
  int checked = 0;
  std::vector<std::string> broken;
  for (const ProtectedSolve& p : micro) {
    ++checked;
    if (!ProtectionHolds(p.traffic, p.solution)) broken.push_back(p.label);
  }
  int grid = 0;
  for (const GridCell& c : cells) {
    if (!HasProtection(c.variant) || c.solution.status != SolveStatus::kOptimal) {
      continue;
    }
    ++checked;
    ++grid;
    if (!ProtectionHolds(c.traffic, c.solution)) {
      broken.push_back(
          absl::StrFormat("cost239 seed %d %s", c.seed, std::string(DesignName(c.variant))));
    }
  }
  std::string detail = absl::StrFormat(
      "%d optimal protected solutions (%d grid, %d micro), %d broken",
      checked, grid, checked - grid, broken.size());
  for (const std::string& b : broken) detail += "; " + b;
  return {checked > 0 && broken.empty(), detail};
}

int Main() {
  double cap = 45;
  if (const char* env = std::getenv("LEXRWA_ACCEPTANCE_SOLVE_SECONDS")) {
    cap = std::max(1.0, std::atof(env));
  }
  std::map<int, std::pair<std::string, Verdict>> verdicts;
  auto record = [&](int id, std::string name, Verdict v) {
    std::cerr << "criterion " << id << " done\n";
    verdicts[id] = {std::move(name), std::move(v)};
  };

  std::vector<ProtectedSolve> micro;
  record(1, "oracle equivalence", OracleEquivalence(&micro));
  record(3, "figure fixture", FigureFixture());
  record(5, "validator mutations", MutationSuite());
  record(6, "determinism", Determinism());
  record(7, "model counts", ModelCounts());
  double grid_seconds = 0;
  const std::vector<GridCell> cells = SolveGrid(cap, 28 * 60, &grid_seconds);
  record(2, "lexicographic guarantee", LexicographicGuarantee(cells));
  record(4, "desk-scale trend", Trend(cells, grid_seconds));
  record(8, "protection paths", ProtectionPaths(cells, micro));

  bool all = true;
  for (const auto& [id, entry] : verdicts) {
    const auto& [name, v] = entry;
    all = all && v.pass;
    std::printf("%s criterion %d (%s): %s\n", v.pass ? "PASS" : "FAIL", id,
                name.c_str(), v.detail.c_str());
  }
  std::fflush(stdout);
  return all ? 0 : 1;
}

}  // namespace
}  // namespace lexrwa

int main() { return lexrwa::Main(); }
