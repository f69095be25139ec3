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

// Shortest paths made unique by the weight assignment
//
//   W(e_k) = 2^(m+1) + 2^k
//
// represented exactly as the pair (hop count, set of edge ids on the path):
// the 2^(m+1) terms count hops and dominate every tie key, and the 2^k terms
// compare as binary numbers.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ftbfs/graph.hpp"

namespace ftbfs {

/// Exact W-cost of a path. tie_key holds the path's edge ids sorted in
/// descending order, so lexicographic comparison of tie_key is comparison
/// of sum(2^k).
struct CanonCost {
  std::int32_t hops = 0;
  std::vector<EdgeId> tie_key;

  /// Builds the cost of a path given its edge ids in any order.
  static CanonCost of_path(std::span<const EdgeId> edges);
  /// Cost after appending one more edge. The edge must not already be present.
  CanonCost extended(EdgeId e) const;
};

std::strong_ordering compare_costs(const CanonCost& a, const CanonCost& b);

inline bool operator==(const CanonCost& a, const CanonCost& b) {
  return compare_costs(a, b) == std::strong_ordering::equal;
}
inline std::strong_ordering operator<=>(const CanonCost& a, const CanonCost& b) {
  return compare_costs(a, b);
}

/// Exact unweighted distances from s in the view (kUnreachable when cut off).
std::vector<Distance> bfs_distances(const GraphView& view, VertexId s);

/// As above, writing into caller-owned buffers to avoid reallocation.
/// `queue` is scratch space of at least n entries.
void bfs_distances_into(const GraphView& view, VertexId s, std::span<Distance> dist,
                        std::span<VertexId> queue);

/// Canonical shortest-path tree: every root-to-v tree path is the unique
/// minimum-CanonCost path in the view.
class SpTree {
 public:
  SpTree() = default;
  SpTree(VertexId root, std::vector<EdgeId> parent_edge, std::vector<Distance> dist,
         std::vector<VertexId> order)
      : root_(root),
        parent_edge_(std::move(parent_edge)),
        dist_(std::move(dist)),
        order_(std::move(order)) {}

  VertexId root() const { return root_; }
  std::size_t num_vertices() const { return dist_.size(); }
  bool reachable(VertexId v) const { return dist_[v] != kUnreachable; }
  Distance dist(VertexId v) const { return dist_[v]; }
  std::span<const Distance> distances() const { return dist_; }
  /// kNoEdge for the root and unreachable vertices.
  EdgeId parent_edge(VertexId v) const { return parent_edge_[v]; }
  std::span<const EdgeId> parent_edges() const { return parent_edge_; }
  /// Reachable vertices in nondecreasing distance order, root first.
  std::span<const VertexId> order() const { return order_; }
  /// Largest finite distance.
  Distance depth() const;

  /// Edge ids on the root-to-v path, root side first. Empty if unreachable.
  std::vector<EdgeId> path_edges(const Graph& g, VertexId v) const;
  /// Vertices on the root-to-v path, root first. Empty if unreachable.
  std::vector<VertexId> path_vertices(const Graph& g, VertexId v) const;
  /// Absent for unreachable vertices.
  std::optional<CanonCost> cost(const Graph& g, VertexId v) const;
  /// Set of tree edges (parent edges of all reachable non-root vertices).
  EdgeSet edge_set(std::size_t num_edges) const;

 private:
  VertexId root_ = 0;
  std::vector<EdgeId> parent_edge_;
  std::vector<Distance> dist_;
  std::vector<VertexId> order_;
};

SpTree canonical_tree(const GraphView& view, VertexId s);

}  // namespace ftbfs
