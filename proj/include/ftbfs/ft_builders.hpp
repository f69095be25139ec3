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

// Deterministic fault-tolerant BFS constructions: the union of the canonical
// tree with the canonical replacement trees of every fault on it.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ftbfs/graph.hpp"

namespace ftbfs {

struct FtStructure {
  std::vector<VertexId> sources;
  FaultModel model = FaultModel::kEdge;
  std::size_t num_vertices = 0;
  std::size_t num_edges = 0;
  EdgeSet edges;
  /// new_edges[v]: ids of edges entering v as the last edge of some
  /// replacement path while lying outside the union of no-fault trees.
  std::vector<std::vector<EdgeId>> new_edges;
  /// Depth of the no-fault canonical tree, per source.
  std::vector<Distance> source_depths;

  std::size_t size() const { return edges.size(); }
};

/// Single-source structure: canonical tree of G from s united with the
/// canonical tree of G minus f, for every tree edge f (edge model) or every
/// non-root reachable vertex f (vertex model).
FtStructure build_ftbfs(const Graph& g, VertexId s, FaultModel model);

/// Union of the single-source structures. Throws std::invalid_argument on an
/// empty or duplicated source list.
FtStructure build_ftmbfs(const Graph& g, std::span<const VertexId> sources, FaultModel model);

/// Per-vertex count of new edges.
std::vector<std::size_t> new_edge_profile(const FtStructure& ft);

/// min(n * (depth + 1), (n - 1) + n * ceil(sqrt(2n))).
std::size_t single_source_size_bound(std::size_t n, Distance depth);
/// sigma * (n - 1) + n * ceil(sqrt(2 * sigma * n)) + sigma * n.
std::size_t multi_source_size_bound(std::size_t n, std::size_t sigma);
/// ceil(sqrt(x)) computed exactly on integers.
std::size_t ceil_sqrt(std::size_t x);

/// Structure file: '#' header (sources, fault model, n, m, edge count), one
/// "u v" line per edge in edge-id order, then "# new <v>: <k>" lines for
/// vertices with new edges.
std::string write_structure(const Graph& g, const FtStructure& ft);

/// Parses a structure file against g. Throws std::runtime_error for edges
/// that are not in g and for malformed lines.
FtStructure parse_structure(const Graph& g, std::string_view text);

}  // namespace ftbfs
