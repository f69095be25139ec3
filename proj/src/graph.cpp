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

#include "ftbfs/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace ftbfs {

namespace {

std::uint64_t pair_key(VertexId a, VertexId b) {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

Graph::Graph(std::size_t num_vertices,
             std::span<const std::pair<VertexId, VertexId>> edges)
    : num_vertices_(num_vertices) {
  edges_.reserve(edges.size());
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  std::vector<std::size_t> degree(num_vertices, 0);
  for (const auto& [a, b] : edges) {
    if (a >= num_vertices || b >= num_vertices) {
      throw GraphError("edge endpoint out of range: " + std::to_string(a) + " " +
                       std::to_string(b));
    }
    if (a == b) throw GraphError("self-loop at vertex " + std::to_string(a));
    Edge e{std::min(a, b), std::max(a, b)};
    if (!seen.insert(pair_key(e.u, e.v)).second) {
      throw GraphError("duplicate edge " + std::to_string(e.u) + " " +
                       std::to_string(e.v));
    }
    ++degree[e.u];
    ++degree[e.v];
    edges_.push_back(e);
  }
  offsets_.assign(num_vertices + 1, 0);
  for (std::size_t v = 0; v < num_vertices; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    adjacency_[fill[e.u]++] = {e.v, id};
    adjacency_[fill[e.v]++] = {e.u, id};
  }
  for (std::size_t v = 0; v < num_vertices; ++v) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]),
              [](const Adjacent& x, const Adjacent& y) { return x.vertex < y.vertex; });
  }
}

std::optional<EdgeId> Graph::find_edge(VertexId a, VertexId b) const {
  if (a >= num_vertices_ || b >= num_vertices_) return std::nullopt;
  if (degree(a) > degree(b)) std::swap(a, b);
  auto adj = neighbors(a);
  auto it = std::lower_bound(adj.begin(), adj.end(), b,
                             [](const Adjacent& x, VertexId key) { return x.vertex < key; });
  if (it != adj.end() && it->vertex == b) return it->edge;
  return std::nullopt;
}

EdgeSet EdgeSet::all(std::size_t num_edges) {
  EdgeSet s(num_edges);
  std::fill(s.bits_.begin(), s.bits_.end(), 1);
  s.count_ = num_edges;
  return s;
}

EdgeSet EdgeSet::from_ids(std::size_t num_edges, std::span<const EdgeId> ids) {
  EdgeSet s(num_edges);
  for (EdgeId e : ids) s.insert(e);
  return s;
}

void EdgeSet::insert(EdgeId e) {
  if (e >= bits_.size()) throw GraphError("edge id " + std::to_string(e) + " out of range");
  if (!bits_[e]) {
    bits_[e] = 1;
    ++count_;
  }
}

void EdgeSet::erase(EdgeId e) {
  if (e < bits_.size() && bits_[e]) {
    bits_[e] = 0;
    --count_;
  }
}

void EdgeSet::merge(const EdgeSet& other) {
  if (other.universe() != universe()) throw GraphError("edge set universe mismatch");
  for (std::size_t e = 0; e < bits_.size(); ++e) {
    if (other.bits_[e] && !bits_[e]) {
      bits_[e] = 1;
      ++count_;
    }
  }
}

bool EdgeSet::is_subset_of(const EdgeSet& other) const {
  for (std::size_t e = 0; e < bits_.size(); ++e) {
    if (bits_[e] && !other.contains(static_cast<EdgeId>(e))) return false;
  }
  return true;
}

std::vector<EdgeId> EdgeSet::ids() const {
  std::vector<EdgeId> out;
  out.reserve(count_);
  for (std::size_t e = 0; e < bits_.size(); ++e) {
    if (bits_[e]) out.push_back(static_cast<EdgeId>(e));
  }
  return out;
}

std::string_view to_string(FaultModel model) {
  return model == FaultModel::kEdge ? "edge" : "vertex";
}

FaultModel parse_fault_model(std::string_view text) {
  if (text == "edge") return FaultModel::kEdge;
  if (text == "vertex") return FaultModel::kVertex;
  throw std::invalid_argument("unknown fault model '" + std::string(text) + "'");
}

std::string FaultScenario::to_string() const {
  switch (kind_) {
    case Kind::kNone:
      return "none";
    case Kind::kEdge:
      return "edge:" + std::to_string(id_);
    case Kind::kVertex:
      return "vertex:" + std::to_string(id_);
  }
  return "none";
}

std::size_t GraphView::traversable_edge_count() const {
  std::size_t count = 0;
  for (EdgeId e = 0; e < graph_->num_edges(); ++e) count += edge_alive(e) ? 1 : 0;
  return count;
}

std::vector<EdgeId> GraphView::traversable_edges() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < graph_->num_edges(); ++e) {
    if (edge_alive(e)) out.push_back(e);
  }
  return out;
}

namespace {

void check_fault(const Graph& g, FaultScenario fault) {
  if (fault.kind() == FaultScenario::Kind::kEdge && fault.id() >= g.num_edges()) {
    throw GraphError("edge fault " + std::to_string(fault.id()) + " out of range");
  }
  if (fault.kind() == FaultScenario::Kind::kVertex && fault.id() >= g.num_vertices()) {
    throw GraphError("vertex fault " + std::to_string(fault.id()) + " out of range");
  }
}

}  // namespace

GraphView apply_fault(const Graph& g, FaultScenario fault) {
  check_fault(g, fault);
  return GraphView(g, fault);
}

GraphView apply_fault(const Graph& g, const EdgeSet& subset, FaultScenario fault) {
  check_fault(g, fault);
  if (subset.universe() != g.num_edges()) throw GraphError("edge set does not match graph");
  return GraphView(g, fault, &subset);
}

std::vector<FaultScenario> all_faults(const Graph& g, FaultModel model) {
  std::vector<FaultScenario> out;
  out.push_back(FaultScenario::none());
  if (model == FaultModel::kEdge) {
    for (EdgeId e = 0; e < g.num_edges(); ++e) out.push_back(FaultScenario::edge(e));
  } else {
    for (VertexId v = 0; v < g.num_vertices(); ++v) out.push_back(FaultScenario::vertex(v));
  }
  return out;
}

ParseError::ParseError(Kind kind, std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      kind_(kind),
      line_(line) {}

namespace {

// Parses exactly two non-negative decimal integers separated by one space.
bool parse_pair(std::string_view line, std::uint64_t& a, std::uint64_t& b) {
  const char* first = line.data();
  const char* last = line.data() + line.size();
  auto r1 = std::from_chars(first, last, a);
  if (r1.ec != std::errc{} || r1.ptr == last || *r1.ptr != ' ') return false;
  auto r2 = std::from_chars(r1.ptr + 1, last, b);
  return r2.ec == std::errc{} && r2.ptr == last;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::unordered_set<std::uint64_t> seen;

  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() == '#') continue;
    if (line.empty()) {
      // Blank lines are tolerated only at the very end of the file.
      if (text.find_first_not_of("\r\n", pos) == std::string_view::npos) break;
      throw ParseError(ParseError::Kind::kMalformed, line_no, "blank line");
    }
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    if (!parse_pair(line, a, b)) {
      throw ParseError(ParseError::Kind::kMalformed, line_no,
                       "expected two integers separated by a space");
    }
    if (!have_header) {
      if (a > std::numeric_limits<VertexId>::max() - 1) {
        throw ParseError(ParseError::Kind::kMalformed, line_no, "vertex count too large");
      }
      n = a;
      m = b;
      have_header = true;
      edges.reserve(m);
      continue;
    }
    if (edges.size() == m) {
      throw ParseError(ParseError::Kind::kCountMismatch, line_no,
                       "more than " + std::to_string(m) + " edge lines");
    }
    if (a >= n || b >= n) {
      throw ParseError(ParseError::Kind::kVertexOutOfRange, line_no,
                       "vertex index out of range (n=" + std::to_string(n) + ")");
    }
    if (a == b) {
      throw ParseError(ParseError::Kind::kSelfLoop, line_no,
                       "self-loop at vertex " + std::to_string(a));
    }
    auto lo = static_cast<VertexId>(std::min(a, b));
    auto hi = static_cast<VertexId>(std::max(a, b));
    if (!seen.insert(pair_key(lo, hi)).second) {
      throw ParseError(ParseError::Kind::kDuplicateEdge, line_no,
                       "duplicate edge " + std::to_string(lo) + " " + std::to_string(hi));
    }
    edges.emplace_back(lo, hi);
  }
  if (!have_header) throw ParseError(ParseError::Kind::kMalformed, line_no, "missing header");
  if (edges.size() != m) {
    throw ParseError(ParseError::Kind::kCountMismatch, line_no,
                     "expected " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

std::string write_graph(const Graph& g) {
  std::string out;
  out.reserve(16 + g.num_edges() * 12);
  out += std::to_string(g.num_vertices());
  out += ' ';
  out += std::to_string(g.num_edges());
  out += '\n';
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
  if (!out) throw std::runtime_error("write failed: " + path);
}

Graph read_graph_file(const std::string& path) { return parse_graph(read_text_file(path)); }

}  // namespace ftbfs
