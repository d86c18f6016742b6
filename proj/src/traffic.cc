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

#include "lexrwa/traffic.h"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "text_format.h"

namespace lexrwa {
namespace {

// Uniform draw from [0, bound] without modulo bias.
uint64_t UniformUpTo(std::mt19937_64& rng, uint64_t bound) {
  const uint64_t range = bound + 1;
  if (range == 0) return rng();
  const uint64_t limit = UINT64_MAX - UINT64_MAX % range;
  uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % range;
}

}  // namespace

std::string_view LoadLevelName(LoadLevel level) {
  switch (level) {
    case LoadLevel::kLow:
      return "low";
    case LoadLevel::kMedium:
      return "medium";
    case LoadLevel::kHigh:
      return "high";
    case LoadLevel::kCustom:
      return "custom";
  }
  return "custom";
}

std::optional<LoadLevel> LoadLevelFromName(std::string_view name) {
  for (LoadLevel l : {LoadLevel::kLow, LoadLevel::kMedium, LoadLevel::kHigh,
                      LoadLevel::kCustom}) {
    if (LoadLevelName(l) == name) return l;
  }
  return std::nullopt;
}

int TrafficMatrix::num_protected() const {
  return static_cast<int>(std::count_if(
      demands.begin(), demands.end(),
      [](const Demand& d) { return d.is_protected; }));
}

TrafficMatrix TrafficMatrix::WithProtection(bool is_protected) const {
  TrafficMatrix copy = *this;
  for (Demand& d : copy.demands) d.is_protected = is_protected;
  return copy;
}

int LoadPercent(LoadLevel level) {
  switch (level) {
    case LoadLevel::kLow:
      return 30;
    case LoadLevel::kMedium:
      return 70;
    case LoadLevel::kHigh:
    case LoadLevel::kCustom:
      return 100;
  }
  return 100;
}

int DemandCountFor(LoadLevel level, int num_nodes) {
  const int64_t pairs = static_cast<int64_t>(num_nodes) * (num_nodes - 1);
  return static_cast<int>((LoadPercent(level) * pairs + 50) / 100);
}

absl::StatusOr<TrafficMatrix> GenerateTraffic(const NetworkTopology& t,
                                              LoadLevel load,
                                              bool is_protected,
                                              uint64_t seed) {
  if (load == LoadLevel::kCustom) {
    return absl::InvalidArgumentError(
        "traffic generation needs load low, medium or high");
  }
  std::vector<std::pair<int, int>> pairs;
  for (int s = 0; s < t.num_nodes(); ++s) {
    for (int d = 0; d < t.num_nodes(); ++d) {
      if (s != d) pairs.emplace_back(s, d);
    }
  }
  std::mt19937_64 rng(seed);
  for (size_t i = pairs.size(); i-- > 1;) {
    std::swap(pairs[i], pairs[UniformUpTo(rng, i)]);
  }
  pairs.resize(DemandCountFor(load, t.num_nodes()));
  std::sort(pairs.begin(), pairs.end());

  TrafficMatrix m;
  m.seed = seed;
  m.load = load;
  for (const auto& [s, d] : pairs) {
    m.demands.push_back({DemandId(static_cast<int32_t>(m.demands.size())),
                         NodeId(s), NodeId(d), is_protected});
  }
  return m;
}

absl::StatusOr<TrafficMatrix> ParseTraffic(std::string_view text) {
  TrafficMatrix m;
  bool have_header = false;
  int line_no = 0;
  for (absl::string_view raw : absl::StrSplit(ToAbsl(text), '\n')) {
    ++line_no;
    const absl::string_view line = absl::StripAsciiWhitespace(raw);
    if (line.empty() || line.front() == '#') continue;
    const std::vector<absl::string_view> tok =
        absl::StrSplit(line, absl::ByAnyChar(" \t"), absl::SkipEmpty());
    if (!have_header) {
      absl::string_view seed_tok = tok.size() == 3 ? tok[1] : "";
      absl::string_view load_tok = tok.size() == 3 ? tok[2] : "";
      if (tok.size() != 3 || tok[0] != "traffic" ||
          !absl::ConsumePrefix(&seed_tok, "seed=") ||
          !absl::SimpleAtoi(seed_tok, &m.seed) ||
          !absl::ConsumePrefix(&load_tok, "load=")) {
        return ParseError(line_no, "expected 'traffic seed=<s> load=<label>'");
      }
      const std::optional<LoadLevel> load = LoadLevelFromName(ToStd(load_tok));
      if (!load) {
        return ParseError(line_no, absl::StrCat("unknown load label '",
                                                load_tok, "'"));
      }
      m.load = *load;
      have_header = true;
      continue;
    }
    int src = 0;
    int dst = 0;
    if (tok.size() != 4 || tok[0] != "demand" ||
        !absl::SimpleAtoi(tok[1], &src) || !absl::SimpleAtoi(tok[2], &dst) ||
        (tok[3] != "0" && tok[3] != "1")) {
      return ParseError(line_no, "expected 'demand <src> <dst> <0|1>'");
    }
    m.demands.push_back({DemandId(static_cast<int32_t>(m.demands.size())),
                         NodeId(src), NodeId(dst), tok[3] == "1"});
  }
  if (!have_header) return ParseError(line_no, "missing traffic header");
  return m;
}

std::string SerializeTraffic(const TrafficMatrix& m) {
  std::string out =
      absl::StrCat("traffic seed=", m.seed, " load=", ToAbsl(LoadLevelName(m.load)),
                   "\n");
  for (const Demand& d : m.demands) {
    absl::StrAppend(&out, "demand ", d.src.value(), " ", d.dst.value(), " ",
                    d.is_protected ? 1 : 0, "\n");
  }
  return out;
}

absl::Status ValidateDemandEndpoints(const NetworkTopology& t,
                                     const TrafficMatrix& m) {
  for (size_t i = 0; i < m.demands.size(); ++i) {
    const Demand& d = m.demands[i];
    if (d.id.value() != static_cast<int32_t>(i)) {
      return absl::InvalidArgumentError(
          absl::StrCat("demand ids must be dense; position ", i, " has id ",
                       d.id.value()));
    }
    if (!t.Contains(d.src) || !t.Contains(d.dst)) {
      return absl::InvalidArgumentError(absl::StrCat(
          "demand ", i, " endpoint (", d.src.value(), " -> ", d.dst.value(),
          ") is not a node of topology '", t.name(), "' with ", t.num_nodes(),
          " nodes"));
    }
    if (d.src == d.dst) {
      return absl::InvalidArgumentError(
          absl::StrCat("demand ", i, " has src == dst == ", d.src.value()));
    }
  }
  return absl::OkStatus();
}

absl::Status ValidateTraffic(const NetworkTopology& t, const TrafficMatrix& m) {
  if (absl::Status s = ValidateDemandEndpoints(t, m); !s.ok()) return s;
  std::set<std::pair<int, int>> seen;
  for (const Demand& d : m.demands) {
    if (!seen.emplace(d.src.value(), d.dst.value()).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate demand for ordered pair (", d.src.value(),
                       ", ", d.dst.value(), ") at demand ", d.id.value()));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<TrafficMatrix> LoadTrafficFile(const std::string& path,
                                              const NetworkTopology& t) {
  absl::StatusOr<std::string> text = ReadWholeFile(path);
  if (!text.ok()) return text.status();
  absl::StatusOr<TrafficMatrix> m = ParseTraffic(*text);
  if (!m.ok()) {
    return absl::Status(m.status().code(),
                        absl::StrCat(path, ": ", m.status().message()));
  }
  if (absl::Status s = ValidateTraffic(t, *m); !s.ok()) {
    return absl::Status(s.code(), absl::StrCat(path, ": ", s.message()));
  }
  return m;
}

}  // namespace lexrwa
