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

// Physical fiber networks as directed multigraphs.
//
// Every fiber link is directed; a bidirectional fiber pair is two links with
// consecutive ids. All links of a topology carry the same number of
// wavelength channels.
//
// Text format (line oriented, '#' starts a comment line):
//
//   topology <name> nodes=<n> capacity=<c>
//   link <src> <dst>      # fiber pair: src->dst gets id 2k, dst->src 2k+1
//   arc <src> <dst>       # a single directed link
//
// Ids are assigned in file order.

#ifndef LEXRWA_TOPOLOGY_H_
#define LEXRWA_TOPOLOGY_H_

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "lexrwa/rational.h"
#include "lexrwa/strong_id.h"

namespace lexrwa {

struct FiberLink {
  LinkId id;
  NodeId src;
  NodeId dst;

  friend bool operator==(const FiberLink&, const FiberLink&) = default;
};

struct Adjacency {
  std::vector<FiberLink> outgoing;
  std::vector<FiberLink> incoming;
};

struct DegreeStats {
  int min = 0;
  int max = 0;
  Rational mean;
};

class NetworkTopology {
 public:
  // Validates endpoints, self-loops, capacity and weak connectivity. Link ids
  // are the positions in `arcs`.
  static absl::StatusOr<NetworkTopology> Create(
      std::string name, int num_nodes, int capacity,
      std::span<const std::pair<NodeId, NodeId>> arcs);

  const std::string& name() const { return name_; }
  int num_nodes() const { return num_nodes_; }
  int num_links() const { return static_cast<int>(links_.size()); }
  int capacity() const { return capacity_; }

  const std::vector<FiberLink>& links() const { return links_; }
  const FiberLink& link(LinkId id) const { return links_[id.value()]; }

  bool Contains(NodeId v) const {
    return v.value() >= 0 && v.value() < num_nodes_;
  }

  // Unchecked; `v` must be a node of this topology.
  const std::vector<LinkId>& OutgoingIds(NodeId v) const {
    return outgoing_[v.value()];
  }
  const std::vector<LinkId>& IncomingIds(NodeId v) const {
    return incoming_[v.value()];
  }

  // Links leaving and entering `v`, in id order.
  absl::StatusOr<Adjacency> Neighbors(NodeId v) const;

  // Same graph, different wavelength budget.
  absl::StatusOr<NetworkTopology> WithCapacity(int capacity) const;

  friend bool operator==(const NetworkTopology& a, const NetworkTopology& b) {
    return a.name_ == b.name_ && a.num_nodes_ == b.num_nodes_ &&
           a.capacity_ == b.capacity_ && a.links_ == b.links_;
  }

 private:
  NetworkTopology() = default;

  std::string name_;
  int num_nodes_ = 0;
  int capacity_ = 0;
  std::vector<FiberLink> links_;
  std::vector<std::vector<LinkId>> outgoing_;
  std::vector<std::vector<LinkId>> incoming_;
};

absl::StatusOr<NetworkTopology> ParseTopology(std::string_view text);
absl::StatusOr<NetworkTopology> LoadTopologyFile(const std::string& path);

// Consecutive opposite-direction links (2k, 2k+1) are written as one `link`
// line, anything else as `arc`, so parsing the output reproduces the same
// link list.
std::string SerializeTopology(const NetworkTopology& t);

// Degrees on the undirected support graph: parallel and opposite links
// between the same two nodes count once.
DegreeStats NodeDegreeStats(const NetworkTopology& t);

// Names of the topologies compiled into the library ("cost239", "nsfnet").
std::vector<std::string> BundledTopologyNames();

// Text of a bundled topology file, or NotFound.
absl::StatusOr<std::string_view> BundledTopologyText(std::string_view name);

// Resolves `spec` as a file path if one exists, otherwise as a bundled name.
// Bundled names are first looked up as `<name>.topo` under the directory in
// LEXRWA_DATA_DIR when that variable is set.
absl::StatusOr<NetworkTopology> ResolveTopology(const std::string& spec);

}  // namespace lexrwa

#endif  // LEXRWA_TOPOLOGY_H_
