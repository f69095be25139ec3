// Copyright 2026 The ftbfs Authors
//
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

#pragma once

// Ground truth for fault-tolerant BFS structures: the defining distance
// condition checked over every fault, edge-necessity probing, and exact
// minimum structures on tiny graphs.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "ftbfs/ft_builders.hpp"
#include "ftbfs/graph.hpp"

namespace ftbfs {

struct Violation {
  VertexId source = 0;
  FaultScenario fault = FaultScenario::none();
  VertexId target = 0;
  Distance dist_in_candidate = 0;
  Distance dist_in_graph = 0;

  /// "VIOLATION s=<s> fault=<kind:id> v=<v> cand=<d|inf> graph=<d|inf>"
  std::string to_string() const;
};

/// Checks dist(s, v, candidate - f) == dist(s, v, G - f) for every source,
/// every fault of the model (all edges, or all vertices other than s) plus
/// the no-fault case, and every target; unreachable on both sides counts as
/// equal. Returns the first violation in (source order, fault, target) order.
std::optional<Violation> verify_ft(const Graph& g, std::span<const VertexId> sources,
                                   const EdgeSet& candidate, FaultModel model);

/// Edges whose single removal from G already breaks the condition; every
/// valid structure contains all of them.
EdgeSet necessary_edges(const Graph& g, std::span<const VertexId> sources, FaultModel model);

class SearchSpaceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultFreeLimit = 25;

/// Minimum-cardinality valid structure containing `forced` and otherwise
/// drawn from `free` (edges in neither are excluded). Free subsets are
/// enumerated by size, then lexicographically, so the result is the
/// lexicographically smallest minimum. Throws SearchSpaceError when
/// |free| > free_limit, std::runtime_error when no valid structure exists.
FtStructure brute_min_ft(const Graph& g, std::span<const VertexId> sources, FaultModel model,
                         const EdgeSet& forced, const EdgeSet& free,
                         std::size_t free_limit = kDefaultFreeLimit);

/// Uses forced = necessary_edges(), free = the remaining edges.
FtStructure brute_min_ft(const Graph& g, std::span<const VertexId> sources, FaultModel model,
                         std::size_t free_limit = kDefaultFreeLimit);

}  // namespace ftbfs
