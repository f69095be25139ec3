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

// Straightforward reference implementations used only by tests. They share
// nothing with the library beyond the Graph container: plain BFS over an
// edge list, literal fault loops, explicit path enumeration and integer
// canonical weights.

#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "ftbfs/graph.hpp"

namespace oracle {

using ftbfs::EdgeId;
using ftbfs::Graph;
using ftbfs::VertexId;

inline constexpr int kInf = -1;

// Which edges and vertices are usable.
struct Mask {
  std::vector<bool> edge;
  std::vector<bool> vertex;
};

inline Mask full_mask(const Graph& g) {
  return {std::vector<bool>(g.num_edges(), true), std::vector<bool>(g.num_vertices(), true)};
}

inline std::vector<int> bfs(const Graph& g, const Mask& mask, VertexId s) {
  std::vector<int> dist(g.num_vertices(), kInf);
  if (!mask.vertex[s]) return dist;
  std::vector<std::vector<VertexId>> adj(g.num_vertices());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto& ed = g.edge(e);
    if (!mask.edge[e] || !mask.vertex[ed.u] || !mask.vertex[ed.v]) continue;
    adj[ed.u].push_back(ed.v);
    adj[ed.v].push_back(ed.u);
  }
  std::deque<VertexId> q{s};
  dist[s] = 0;
  while (!q.empty()) {
    VertexId u = q.front();
    q.pop_front();
    for (VertexId w : adj[u]) {
      if (dist[w] == kInf) {
        dist[w] = dist[u] + 1;
        q.push_back(w);
      }
    }
  }
  return dist;
}

// Fault list: -1 is "no fault", otherwise an edge id or vertex id.
inline bool literal_ft(const Graph& g, const std::vector<VertexId>& sources,
                       const std::vector<bool>& subset, bool vertex_model) {
  const long faults = static_cast<long>(vertex_model ? g.num_vertices() : g.num_edges());
  for (VertexId s : sources) {
    for (long f = -1; f < faults; ++f) {
      if (vertex_model && f == static_cast<long>(s)) continue;
      Mask whole = full_mask(g);
      if (f >= 0) (vertex_model ? whole.vertex : whole.edge)[f] = false;
      Mask part = whole;
      for (EdgeId e = 0; e < g.num_edges(); ++e) part.edge[e] = part.edge[e] && subset[e];
      if (bfs(g, whole, s) != bfs(g, part, s)) return false;
    }
  }
  return true;
}

inline std::vector<bool> literal_necessary(const Graph& g, const std::vector<VertexId>& sources,
                                           bool vertex_model) {
  std::vector<bool> out(g.num_edges(), false);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    std::vector<bool> subset(g.num_edges(), true);
    subset[e] = false;
    out[e] = !literal_ft(g, sources, subset, vertex_model);
  }
  return out;
}

// Minimum valid subset size by exhaustive enumeration over all 2^m subsets
// (m small).
inline std::size_t literal_min_ft(const Graph& g, const std::vector<VertexId>& sources,
                                  bool vertex_model) {
  const std::size_t m = g.num_edges();
  std::size_t best = m;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(bits));
    if (size >= best) continue;
    std::vector<bool> subset(m);
    for (std::size_t e = 0; e < m; ++e) subset[e] = (bits >> e) & 1;
    if (literal_ft(g, sources, subset, vertex_model)) best = size;
  }
  return best;
}

// Canonical weight 2^(m+1) + 2^k as an exact integer (m <= 60).
inline std::uint64_t path_weight(const Graph& g, const std::vector<EdgeId>& path) {
  const std::uint64_t m = g.num_edges();
  std::uint64_t w = 0;
  for (EdgeId e : path) w += (std::uint64_t{1} << (m + 1)) + (std::uint64_t{1} << e);
  return w;
}

// Every simple s-t path as an edge list.
inline std::vector<std::vector<EdgeId>> simple_paths(const Graph& g, VertexId s, VertexId t) {
  std::vector<std::vector<EdgeId>> out;
  std::vector<bool> on_path(g.num_vertices(), false);
  std::vector<EdgeId> path;
  auto dfs = [&](auto&& self, VertexId u) -> void {
    if (u == t) {
      out.push_back(path);
      return;
    }
    on_path[u] = true;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const auto& ed = g.edge(e);
      if (ed.u != u && ed.v != u) continue;
      VertexId w = ed.u == u ? ed.v : ed.u;
      if (on_path[w]) continue;
      path.push_back(e);
      self(self, w);
      path.pop_back();
    }
    on_path[u] = false;
  };
  dfs(dfs, s);
  return out;
}

// Optimum cover size by exhaustive search over all 2^M choices.
inline std::size_t brute_cover_size(std::size_t universe,
                                    const std::vector<std::vector<std::uint32_t>>& sets) {
  const std::size_t m = sets.size();
  std::size_t best = m + 1;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(bits));
    if (size >= best) continue;
    std::vector<bool> seen(universe, false);
    for (std::size_t i = 0; i < m; ++i) {
      if ((bits >> i) & 1) {
        for (auto x : sets[i]) seen[x] = true;
      }
    }
    bool all = true;
    for (bool b : seen) all = all && b;
    if (all) best = size;
  }
  return best;
}

}  // namespace oracle
