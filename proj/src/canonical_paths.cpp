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

#include "ftbfs/canonical_paths.hpp"

#include <algorithm>
#include <functional>

namespace ftbfs {

CanonCost CanonCost::of_path(std::span<const EdgeId> edges) {
  CanonCost c;
  c.hops = static_cast<std::int32_t>(edges.size());
  c.tie_key.assign(edges.begin(), edges.end());
  std::sort(c.tie_key.begin(), c.tie_key.end(), std::greater<>());
  return c;
}

CanonCost CanonCost::extended(EdgeId e) const {
  CanonCost c;
  c.hops = hops + 1;
  c.tie_key.reserve(tie_key.size() + 1);
  auto pos = std::lower_bound(tie_key.begin(), tie_key.end(), e, std::greater<>());
  c.tie_key.insert(c.tie_key.end(), tie_key.begin(), pos);
  c.tie_key.push_back(e);
  c.tie_key.insert(c.tie_key.end(), pos, tie_key.end());
  return c;
}

std::strong_ordering compare_costs(const CanonCost& a, const CanonCost& b) {
  if (auto c = a.hops <=> b.hops; c != 0) return c;
  // Descending order: the first differing position holds the largest edge id
  // present in exactly one of the two sets; the set holding it is larger.
  return std::lexicographical_compare_three_way(a.tie_key.begin(), a.tie_key.end(),
                                                b.tie_key.begin(), b.tie_key.end());
}

void bfs_distances_into(const GraphView& view, VertexId s, std::span<Distance> dist,
                        std::span<VertexId> queue) {
  const Graph& g = view.graph();
  std::fill(dist.begin(), dist.end(), kUnreachable);
  if (!view.vertex_alive(s)) return;
  std::size_t head = 0;
  std::size_t tail = 0;
  dist[s] = 0;
  queue[tail++] = s;
  while (head < tail) {
    VertexId u = queue[head++];
    Distance next = dist[u] + 1;
    for (const Adjacent& a : g.neighbors(u)) {
      if (dist[a.vertex] != kUnreachable || !view.edge_alive(a.edge)) continue;
      dist[a.vertex] = next;
      queue[tail++] = a.vertex;
    }
  }
}

std::vector<Distance> bfs_distances(const GraphView& view, VertexId s) {
  const std::size_t n = view.graph().num_vertices();
  std::vector<Distance> dist(n);
  std::vector<VertexId> queue(n);
  if (s >= n) throw GraphError("source out of range");
  bfs_distances_into(view, s, dist, queue);
  return dist;
}

namespace {

// Three-way comparison of (a + {ea}) and (b + {eb}) where a and b are
// descending edge-id lists of equal length and the extra ids are absent from
// their own lists.
int compare_extended(std::span<const EdgeId> a, EdgeId ea, std::span<const EdgeId> b,
                     EdgeId eb) {
  std::size_t i = 0;
  std::size_t j = 0;
  bool a_extra = true;
  bool b_extra = true;
  for (std::size_t k = 0; k <= a.size(); ++k) {
    EdgeId x;
    if (a_extra && (i == a.size() || ea > a[i])) {
      x = ea;
      a_extra = false;
    } else {
      x = a[i++];
    }
    EdgeId y;
    if (b_extra && (j == b.size() || eb > b[j])) {
      y = eb;
      b_extra = false;
    } else {
      y = b[j++];
    }
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;
}

}  // namespace

SpTree canonical_tree(const GraphView& view, VertexId s) {
  const Graph& g = view.graph();
  const std::size_t n = g.num_vertices();
  if (s >= n) throw GraphError("source out of range");

  std::vector<Distance> dist(n, kUnreachable);
  std::vector<VertexId> order;
  order.reserve(n);
  if (view.vertex_alive(s)) {
    dist[s] = 0;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
      VertexId u = order[head];
      for (const Adjacent& a : g.neighbors(u)) {
        if (dist[a.vertex] != kUnreachable || !view.edge_alive(a.edge)) continue;
        dist[a.vertex] = dist[u] + 1;
        order.push_back(a.vertex);
      }
    }
  }

  // Tie keys of canonical paths, stored flat: vertex v at depth k owns k
  // consecutive slots starting at key_offset[v].
  std::vector<std::size_t> key_offset(n, 0);
  std::size_t total = 0;
  for (VertexId v : order) {
    key_offset[v] = total;
    total += static_cast<std::size_t>(dist[v]);
  }
  std::vector<EdgeId> keys(total);
  auto key_of = [&](VertexId v) {
    return std::span<const EdgeId>(keys.data() + key_offset[v], static_cast<std::size_t>(dist[v]));
  };

  std::vector<EdgeId> parent(n, kNoEdge);
  for (std::size_t idx = 1; idx < order.size(); ++idx) {
    VertexId v = order[idx];
    VertexId best_u = 0;
    EdgeId best_e = kNoEdge;
    for (const Adjacent& a : g.neighbors(v)) {
      if (dist[a.vertex] != dist[v] - 1 || !view.edge_alive(a.edge)) continue;
      if (best_e == kNoEdge ||
          compare_extended(key_of(a.vertex), a.edge, key_of(best_u), best_e) < 0) {
        best_u = a.vertex;
        best_e = a.edge;
      }
    }
    parent[v] = best_e;
    auto src = key_of(best_u);
    EdgeId* dst = keys.data() + key_offset[v];
    auto pos = std::lower_bound(src.begin(), src.end(), best_e, std::greater<>());
    dst = std::copy(src.begin(), pos, dst);
    *dst++ = best_e;
    std::copy(pos, src.end(), dst);
  }
  return SpTree(s, std::move(parent), std::move(dist), std::move(order));
}

Distance SpTree::depth() const {
  Distance d = 0;
  for (Distance x : dist_) {
    if (x != kUnreachable) d = std::max(d, x);
  }
  return d;
}

std::vector<EdgeId> SpTree::path_edges(const Graph& g, VertexId v) const {
  std::vector<EdgeId> out;
  if (!reachable(v)) return out;
  while (v != root_) {
    EdgeId e = parent_edge_[v];
    out.push_back(e);
    v = g.edge(e).other(v);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<VertexId> SpTree::path_vertices(const Graph& g, VertexId v) const {
  std::vector<VertexId> out;
  if (!reachable(v)) return out;
  out.push_back(v);
  while (v != root_) {
    v = g.edge(parent_edge_[v]).other(v);
    out.push_back(v);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::optional<CanonCost> SpTree::cost(const Graph& g, VertexId v) const {
  if (!reachable(v)) return std::nullopt;
  return CanonCost::of_path(path_edges(g, v));
}

EdgeSet SpTree::edge_set(std::size_t num_edges) const {
  EdgeSet out(num_edges);
  for (EdgeId e : parent_edge_) {
    if (e != kNoEdge) out.insert(e);
  }
  return out;
}

}  // namespace ftbfs
