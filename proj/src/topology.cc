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

#include "lexrwa/topology.h"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/match.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "absl/strings/str_join.h"
#include "absl/strings/strip.h"
#include "text_format.h"

namespace lexrwa {

absl::StatusOr<NetworkTopology> NetworkTopology::Create(
    std::string name, int num_nodes, int capacity,
    std::span<const std::pair<NodeId, NodeId>> arcs) {
  if (num_nodes <= 0) {
    return absl::InvalidArgumentError("topology must have at least one node");
  }
  if (capacity <= 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("capacity must be positive, got ", capacity));
  }
  NetworkTopology t;
  t.name_ = std::move(name);
  t.num_nodes_ = num_nodes;
  t.capacity_ = capacity;
  t.outgoing_.resize(num_nodes);
  t.incoming_.resize(num_nodes);
  for (const auto& [src, dst] : arcs) {
    const LinkId id(static_cast<int32_t>(t.links_.size()));
    if (!t.Contains(src) || !t.Contains(dst)) {
      return absl::InvalidArgumentError(absl::StrCat(
          "dangling endpoint: link ", id.value(), " (", src.value(), " -> ",
          dst.value(), ") references a node outside [0, ", num_nodes, ")"));
    }
    if (src == dst) {
      return absl::InvalidArgumentError(absl::StrCat(
          "self-loop: link ", id.value(), " starts and ends at node ",
          src.value()));
    }
    t.links_.push_back({id, src, dst});
    t.outgoing_[src.value()].push_back(id);
    t.incoming_[dst.value()].push_back(id);
  }

  // Weak connectivity via union-find.
  std::vector<int> parent(num_nodes);
  for (int i = 0; i < num_nodes; ++i) parent[i] = i;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int components = num_nodes;
  for (const FiberLink& l : t.links_) {
    const int a = find(l.src.value());
    const int b = find(l.dst.value());
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  if (components != 1) {
    return absl::InvalidArgumentError(absl::StrCat(
        "disconnected graph: ", components,
        " components when link direction is ignored"));
  }
  return t;
}

absl::StatusOr<Adjacency> NetworkTopology::Neighbors(NodeId v) const {
  if (!Contains(v)) {
    return absl::NotFoundError(absl::StrCat("unknown node ", v.value()));
  }
  Adjacency adj;
  for (LinkId e : outgoing_[v.value()]) adj.outgoing.push_back(link(e));
  for (LinkId e : incoming_[v.value()]) adj.incoming.push_back(link(e));
  return adj;
}

absl::StatusOr<NetworkTopology> NetworkTopology::WithCapacity(
    int capacity) const {
  if (capacity <= 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("capacity must be positive, got ", capacity));
  }
  NetworkTopology t = *this;
  t.capacity_ = capacity;
  return t;
}

absl::StatusOr<NetworkTopology> ParseTopology(std::string_view text) {
  bool have_header = false;
  std::string name;
  int num_nodes = 0;
  int capacity = 0;
  std::vector<std::pair<NodeId, NodeId>> arcs;

  int line_no = 0;
  for (absl::string_view raw : absl::StrSplit(ToAbsl(text), '\n')) {
    ++line_no;
    const absl::string_view line = absl::StripAsciiWhitespace(raw);
    if (line.empty() || line.front() == '#') continue;
    const std::vector<absl::string_view> tok =
        absl::StrSplit(line, absl::ByAnyChar(" \t"), absl::SkipEmpty());
    if (!have_header) {
      if (tok.size() != 4 || tok[0] != "topology") {
        return ParseError(line_no,
                          "expected 'topology <name> nodes=<n> capacity=<c>'");
      }
      name = std::string(tok[1]);
      if (!ParseKeyedInt(ToStd(tok[2]), "nodes", &num_nodes) ||
          !ParseKeyedInt(ToStd(tok[3]), "capacity", &capacity)) {
        return ParseError(line_no, "malformed nodes= or capacity= field");
      }
      have_header = true;
      continue;
    }
    if (tok.size() != 3 || (tok[0] != "link" && tok[0] != "arc")) {
      return ParseError(line_no, "expected 'link <src> <dst>' or "
                                 "'arc <src> <dst>'");
    }
    int src = 0;
    int dst = 0;
    if (!absl::SimpleAtoi(tok[1], &src) || !absl::SimpleAtoi(tok[2], &dst)) {
      return ParseError(line_no, "node ids must be integers");
    }
    arcs.emplace_back(NodeId(src), NodeId(dst));
    if (tok[0] == "link") arcs.emplace_back(NodeId(dst), NodeId(src));
  }
  if (!have_header) return ParseError(line_no, "missing topology header");
  return NetworkTopology::Create(std::move(name), num_nodes, capacity, arcs);
}

absl::StatusOr<NetworkTopology> LoadTopologyFile(const std::string& path) {
  absl::StatusOr<std::string> text = ReadWholeFile(path);
  if (!text.ok()) return text.status();
  absl::StatusOr<NetworkTopology> t = ParseTopology(*text);
  if (!t.ok()) {
    return absl::Status(t.status().code(),
                        absl::StrCat(path, ": ", t.status().message()));
  }
  return t;
}

std::string SerializeTopology(const NetworkTopology& t) {
  std::string out = absl::StrCat("topology ", t.name(), " nodes=",
                                 t.num_nodes(), " capacity=", t.capacity(),
                                 "\n");
  const auto& links = t.links();
  for (size_t i = 0; i < links.size(); ++i) {
    const FiberLink& l = links[i];
    // Pairs always start at an even id, matching how the parser expands them.
    if (i % 2 == 0 && i + 1 < links.size() && links[i + 1].src == l.dst &&
        links[i + 1].dst == l.src) {
      absl::StrAppend(&out, "link ", l.src.value(), " ", l.dst.value(), "\n");
      ++i;
    } else {
      absl::StrAppend(&out, "arc ", l.src.value(), " ", l.dst.value(), "\n");
    }
  }
  return out;
}

DegreeStats NodeDegreeStats(const NetworkTopology& t) {
  std::set<std::pair<int, int>> edges;
  for (const FiberLink& l : t.links()) {
    edges.emplace(std::min(l.src.value(), l.dst.value()),
                  std::max(l.src.value(), l.dst.value()));
  }
  std::vector<int> degree(t.num_nodes(), 0);
  for (const auto& [a, b] : edges) {
    ++degree[a];
    ++degree[b];
  }
  DegreeStats stats;
  stats.min = *std::min_element(degree.begin(), degree.end());
  stats.max = *std::max_element(degree.begin(), degree.end());
  stats.mean = Rational(2 * static_cast<int64_t>(edges.size()), t.num_nodes());
  return stats;
}

absl::StatusOr<NetworkTopology> ResolveTopology(const std::string& spec) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) {
    return LoadTopologyFile(spec);
  }
  absl::StatusOr<std::string_view> bundled = BundledTopologyText(spec);
  if (!bundled.ok()) {
    return absl::NotFoundError(absl::StrCat(
        "'", spec, "' is neither a readable file nor a bundled topology (",
        absl::StrJoin(BundledTopologyNames(), ", "), ")"));
  }
  if (const char* dir = std::getenv("LEXRWA_DATA_DIR"); dir != nullptr) {
    const std::filesystem::path path =
        std::filesystem::path(dir) / absl::StrCat(spec, ".topo");
    if (std::filesystem::is_regular_file(path, ec)) {
      return LoadTopologyFile(path.string());
    }
  }
  return ParseTopology(*bundled);
}

}  // namespace lexrwa
