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

// Simple undirected graphs with stable edge identities, fault views and the
// plain-text edge-list format.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ftbfs {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Hop distance. Unreachable vertices carry kUnreachable.
using Distance = std::int32_t;
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

/// Endpoints are normalized so that u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  VertexId other(VertexId x) const { return x == u ? v : u; }
  bool incident(VertexId x) const { return x == u || x == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Adjacent {
  VertexId vertex;
  EdgeId edge;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable simple undirected graph. EdgeId is the position of the edge in
/// construction order and never changes.
class Graph {
 public:
  Graph() = default;
  /// Throws GraphError on self-loops, parallel edges or out-of-range endpoints.
  Graph(std::size_t num_vertices,
        std::span<const std::pair<VertexId, VertexId>> edges);

  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const { return edges_.size(); }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const Adjacent> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.num_vertices_ == b.num_vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t num_vertices_ = 0;
  std::vector<Edge> edges_;
  // CSR adjacency; each list sorted by neighbor id.
  std::vector<std::size_t> offsets_{0};
  std::vector<Adjacent> adjacency_;
};

/// Membership set over the edge ids of one graph.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::size_t num_edges) : bits_(num_edges, 0) {}
  static EdgeSet all(std::size_t num_edges);
  static EdgeSet from_ids(std::size_t num_edges, std::span<const EdgeId> ids);

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return count_; }
  bool contains(EdgeId e) const { return e < bits_.size() && bits_[e] != 0; }
  void insert(EdgeId e);
  void erase(EdgeId e);
  void merge(const EdgeSet& other);
  bool is_subset_of(const EdgeSet& other) const;
  /// Sorted ascending.
  std::vector<EdgeId> ids() const;
  const std::uint8_t* data() const { return bits_.data(); }

  friend bool operator==(const EdgeSet& a, const EdgeSet& b) {
    return a.bits_ == b.bits_;
  }

 private:
  std::vector<std::uint8_t> bits_;
  std::size_t count_ = 0;
};

enum class FaultModel { kEdge, kVertex };

std::string_view to_string(FaultModel model);
FaultModel parse_fault_model(std::string_view text);

/// One failed edge, one failed vertex, or the no-fault case.
class FaultScenario {
 public:
  enum class Kind { kNone, kEdge, kVertex };

  static constexpr FaultScenario none() { return {}; }
  static constexpr FaultScenario edge(EdgeId e) { return {Kind::kEdge, e}; }
  static constexpr FaultScenario vertex(VertexId v) { return {Kind::kVertex, v}; }

  constexpr Kind kind() const { return kind_; }
  constexpr std::uint32_t id() const { return id_; }
  constexpr bool is_none() const { return kind_ == Kind::kNone; }

  /// "none", "edge:<id>" or "vertex:<id>".
  std::string to_string() const;
  friend constexpr bool operator==(const FaultScenario&, const FaultScenario&) = default;

 private:
  constexpr FaultScenario() = default;
  constexpr FaultScenario(Kind kind, std::uint32_t id) : kind_(kind), id_(id) {}

  Kind kind_ = Kind::kNone;
  std::uint32_t id_ = 0;
};

/// Read-only traversal view of a graph: an optional edge subset with one
/// fault applied. Cheap to copy; the referenced graph and subset must
/// outlive the view.
class GraphView {
 public:
  GraphView(const Graph& graph, FaultScenario fault, const EdgeSet* subset = nullptr)
      : graph_(&graph), subset_(subset), fault_(fault) {}

  const Graph& graph() const { return *graph_; }
  FaultScenario fault() const { return fault_; }

  bool vertex_alive(VertexId v) const {
    return fault_.kind() != FaultScenario::Kind::kVertex || fault_.id() != v;
  }
  bool edge_alive(EdgeId e) const {
    if (subset_ != nullptr && !subset_->contains(e)) return false;
    switch (fault_.kind()) {
      case FaultScenario::Kind::kNone:
        return true;
      case FaultScenario::Kind::kEdge:
        return e != fault_.id();
      case FaultScenario::Kind::kVertex:
        return !graph_->edge(e).incident(fault_.id());
    }
    return true;
  }
  std::size_t traversable_edge_count() const;
  std::vector<EdgeId> traversable_edges() const;

 private:
  const Graph* graph_;
  const EdgeSet* subset_;
  FaultScenario fault_;
};

/// Throws GraphError when the fault id is out of range.
GraphView apply_fault(const Graph& g, FaultScenario fault);
GraphView apply_fault(const Graph& g, const EdgeSet& subset, FaultScenario fault);

/// Every fault of the model, preceded by the no-fault scenario.
std::vector<FaultScenario> all_faults(const Graph& g, FaultModel model);

class ParseError : public std::runtime_error {
 public:
  enum class Kind {
    kMalformed,
    kSelfLoop,
    kDuplicateEdge,
    kVertexOutOfRange,
    kCountMismatch,
  };
  ParseError(Kind kind, std::size_t line, const std::string& what);
  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

/// Parses "n m" followed by m lines "u v". Lines starting with '#' are
/// comments. Line numbers in errors are 1-based physical lines.
Graph parse_graph(std::string_view text);
std::string write_graph(const Graph& g);

Graph read_graph_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view contents);
std::string read_text_file(const std::string& path);

}  // namespace ftbfs
