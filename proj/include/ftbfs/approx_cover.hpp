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

// Set-cover based approximation of the minimum fault-tolerant structure.
//
// For each vertex v the universe is the set of (source, fault) pairs under
// which v is reachable, the no-fault case included. Neighbor u of v covers a
// pair when the edge (u, v) survives the fault and
//
//   dist(s, u, G - f) == dist(s, v, G - f) - 1.
//
// Any subgraph whose edges into v cover v's universe, for every v, keeps all
// distances; picking the covers greedily keeps the total within O(log n) of
// the optimum.

#include <cstddef>
#include <span>
#include <vector>

#include "ftbfs/ft_builders.hpp"
#include "ftbfs/graph.hpp"
#include "ftbfs/set_cover.hpp"

namespace ftbfs {

/// Hop distances from every source under every fault of the model (index 0
/// is the no-fault case). Edge faults that lie on no shortest path from a
/// source share that source's no-fault table.
class DistanceTables {
 public:
  static DistanceTables compute(const Graph& g, std::span<const VertexId> sources,
                                FaultModel model);

  std::span<const VertexId> sources() const { return sources_; }
  std::span<const FaultScenario> faults() const { return faults_; }
  FaultModel model() const { return model_; }
  std::span<const Distance> dist(std::size_t source_index, std::size_t fault_index) const {
    return tables_[table_of_[source_index * faults_.size() + fault_index]];
  }
  bool shares_base(std::size_t source_index, std::size_t fault_index) const {
    return table_of_[source_index * faults_.size() + fault_index] ==
           table_of_[source_index * faults_.size()];
  }
  /// Number of distinct tables actually materialized.
  std::size_t distinct_tables() const { return tables_.size(); }

 private:
  std::vector<VertexId> sources_;
  std::vector<FaultScenario> faults_;
  FaultModel model_ = FaultModel::kEdge;
  std::vector<std::vector<Distance>> tables_;
  std::vector<std::size_t> table_of_;
};

struct UniversePair {
  std::size_t source_index;
  FaultScenario fault;
};

/// Per-vertex instance. Set j belongs to the j-th entry of g.neighbors(v).
struct VertexCoverage {
  SetCoverInstance instance;
  std::vector<UniversePair> elements;
};

VertexCoverage coverage_sets(const Graph& g, VertexId v, const DistanceTables& tables);

struct ApproxReport {
  FtStructure structure;
  /// Number of sets chosen by the greedy cover of each vertex.
  std::vector<std::size_t> cover_sizes;
  /// Largest per-vertex universe.
  std::size_t max_universe = 0;
};

ApproxReport build_approx_report(const Graph& g, std::span<const VertexId> sources,
                                 FaultModel model);

/// Throws std::invalid_argument on an empty or duplicated source list.
FtStructure build_approx(const Graph& g, std::span<const VertexId> sources, FaultModel model);

}  // namespace ftbfs
