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

#include "ftbfs/verifier.hpp"

#include <algorithm>
#include <limits>

#include "ftbfs/canonical_paths.hpp"
#include "ftbfs/kernels.hpp"
#include "ftbfs/parallel.hpp"

namespace ftbfs {

namespace {

std::string render_distance(Distance d) {
  return d == kUnreachable ? "inf" : std::to_string(d);
}

void check_sources(const Graph& g, std::span<const VertexId> sources) {
  if (sources.empty()) throw std::invalid_argument("source list is empty");
  for (VertexId s : sources) {
    if (s >= g.num_vertices()) throw std::invalid_argument("source out of range");
  }
}

// Faults that constrain source s: vertex faults on s itself are vacuous.
std::vector<FaultScenario> faults_for_source(const Graph& g, VertexId s, FaultModel model) {
  auto faults = all_faults(g, model);
  std::erase_if(faults, [&](FaultScenario f) {
    return f.kind() == FaultScenario::Kind::kVertex && f.id() == s;
  });
  return faults;
}

// An edge fault off every shortest path from s leaves all distances intact.
bool edge_is_tight(const Graph& g, std::span<const Distance> dist, EdgeId e) {
  const Edge& edge = g.edge(e);
  Distance a = dist[edge.u];
  Distance b = dist[edge.v];
  if (a == kUnreachable || b == kUnreachable) return false;
  return a - b == 1 || b - a == 1;
}

// Calls visit(v, tight_edges) for every vertex v != s reachable in the view,
// where tight_edges are the alive edges (u, v) with dist(u) = dist(v) - 1.
template <typename Visit>
void for_each_tight_in_edges(const GraphView& view, VertexId s, std::span<const Distance> dist,
                             std::vector<EdgeId>& scratch, Visit&& visit) {
  const Graph& g = view.graph();
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (v == s || dist[v] == kUnreachable) continue;
    scratch.clear();
    for (const Adjacent& a : g.neighbors(v)) {
      if (dist[a.vertex] == dist[v] - 1 && view.edge_alive(a.edge)) scratch.push_back(a.edge);
    }
    visit(v, std::span<const EdgeId>(scratch));
  }
}

}  // namespace

std::string Violation::to_string() const {
  return "VIOLATION s=" + std::to_string(source) + " fault=" + fault.to_string() +
         " v=" + std::to_string(target) + " cand=" + render_distance(dist_in_candidate) +
         " graph=" + render_distance(dist_in_graph);
}

std::optional<Violation> verify_ft(const Graph& g, std::span<const VertexId> sources,
                                   const EdgeSet& candidate, FaultModel model) {
  check_sources(g, sources);
  if (candidate.universe() != g.num_edges()) {
    throw std::invalid_argument("candidate edge set does not belong to the graph");
  }
  const std::size_t n = g.num_vertices();
  for (VertexId s : sources) {
    const auto graph_base = bfs_distances(GraphView(g, FaultScenario::none()), s);
    const auto cand_base = bfs_distances(GraphView(g, FaultScenario::none(), &candidate), s);
    const auto faults = faults_for_source(g, s, model);
    constexpr auto kNone = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> first_bad(faults.size(), kNone);
    std::vector<std::pair<Distance, Distance>> bad_values(faults.size());

    parallel_for(faults.size(), [&](std::size_t i) {
      const FaultScenario f = faults[i];
      std::vector<Distance> graph_dist;
      std::vector<Distance> cand_dist;
      std::vector<VertexId> queue(n);
      std::span<const Distance> gd = graph_base;
      std::span<const Distance> cd = cand_base;
      bool is_edge = f.kind() == FaultScenario::Kind::kEdge;
      if (!f.is_none() && (!is_edge || edge_is_tight(g, graph_base, f.id()))) {
        graph_dist.resize(n);
        bfs_distances_into(GraphView(g, f), s, graph_dist, queue);
        gd = graph_dist;
      }
      if (!f.is_none() && (!is_edge || (candidate.contains(f.id()) &&
                                        edge_is_tight(g, cand_base, f.id())))) {
        cand_dist.resize(n);
        bfs_distances_into(GraphView(g, f, &candidate), s, cand_dist, queue);
        cd = cand_dist;
      }
      std::size_t v = kernels::first_mismatch(cd, gd);
      if (v < n) {
        first_bad[i] = v;
        bad_values[i] = {cd[v], gd[v]};
      }
    });
    for (std::size_t i = 0; i < faults.size(); ++i) {
      if (first_bad[i] == kNone) continue;
      return Violation{s, faults[i], static_cast<VertexId>(first_bad[i]), bad_values[i].first,
                       bad_values[i].second};
    }
  }
  return std::nullopt;
}

EdgeSet necessary_edges(const Graph& g, std::span<const VertexId> sources, FaultModel model) {
  check_sources(g, sources);
  const std::size_t n = g.num_vertices();
  // Removing e from G breaks the condition iff, for some source and some
  // fault f != e, e is the only tight edge into its far endpoint in G - f.
  std::vector<std::uint8_t> marked(g.num_edges(), 0);
  for (VertexId s : sources) {
    const auto base = bfs_distances(GraphView(g, FaultScenario::none()), s);
    auto faults = faults_for_source(g, s, model);
    std::erase_if(faults, [&](FaultScenario f) {
      return f.kind() == FaultScenario::Kind::kEdge && !edge_is_tight(g, base, f.id());
    });
    std::vector<std::vector<EdgeId>> found(faults.size());
    parallel_for(faults.size(), [&](std::size_t i) {
      GraphView view(g, faults[i]);
      std::vector<Distance> dist(n);
      std::vector<VertexId> queue(n);
      bfs_distances_into(view, s, dist, queue);
      std::vector<EdgeId> scratch;
      for_each_tight_in_edges(view, s, dist, scratch,
                              [&](VertexId, std::span<const EdgeId> tight) {
                                if (tight.size() == 1) found[i].push_back(tight[0]);
                              });
    });
    for (const auto& list : found) {
      for (EdgeId e : list) marked[e] = 1;
    }
  }
  EdgeSet out(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (marked[e]) out.insert(e);
  }
  return out;
}

namespace {

// Lexicographic successor of a k-combination of {0..n-1}; false when done.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

FtStructure brute_min_ft(const Graph& g, std::span<const VertexId> sources, FaultModel model,
                         const EdgeSet& forced, const EdgeSet& free, std::size_t free_limit) {
  check_sources(g, sources);
  if (forced.universe() != g.num_edges() || free.universe() != g.num_edges()) {
    throw std::invalid_argument("forced/free sets do not belong to the graph");
  }
  const std::vector<EdgeId> free_ids = free.ids();
  for (EdgeId e : free_ids) {
    if (forced.contains(e)) throw std::invalid_argument("forced and free sets overlap");
  }
  if (free_ids.size() > free_limit || free_ids.size() > 63) {
    throw SearchSpaceError("search space too large: " + std::to_string(free_ids.size()) +
                           " free edges (limit " + std::to_string(std::min<std::size_t>(free_limit, 63)) + ")");
  }
  std::vector<int> free_bit(g.num_edges(), -1);
  for (std::size_t i = 0; i < free_ids.size(); ++i) free_bit[free_ids[i]] = static_cast<int>(i);

  // A subgraph keeps every distance of G - f iff each reachable v != s keeps
  // at least one tight in-edge; each such requirement becomes a mask over the
  // free edges unless a forced edge already meets it.
  const std::size_t n = g.num_vertices();
  std::vector<std::uint64_t> masks;
  bool infeasible = false;
  for (VertexId s : sources) {
    for (FaultScenario f : faults_for_source(g, s, model)) {
      GraphView view(g, f);
      std::vector<Distance> dist(n);
      std::vector<VertexId> queue(n);
      bfs_distances_into(view, s, dist, queue);
      std::vector<EdgeId> scratch;
      for_each_tight_in_edges(view, s, dist, scratch,
                              [&](VertexId, std::span<const EdgeId> tight) {
                                std::uint64_t mask = 0;
                                for (EdgeId e : tight) {
                                  if (forced.contains(e)) return;
                                  if (free_bit[e] >= 0) mask |= std::uint64_t{1} << free_bit[e];
                                }
                                if (mask == 0) infeasible = true;
                                masks.push_back(mask);
                              });
    }
  }
  if (infeasible) throw std::runtime_error("no valid structure within forced and free edges");
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());

  const std::size_t f = free_ids.size();
  std::optional<std::uint64_t> best;
  constexpr std::size_t kBatch = 1 << 14;
  for (std::size_t k = 0; k <= f && !best; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    bool more = true;
    while (more && !best) {
      std::vector<std::uint64_t> batch;
      batch.reserve(kBatch);
      while (more && batch.size() < kBatch) {
        std::uint64_t subset = 0;
        for (std::size_t i : idx) subset |= std::uint64_t{1} << i;
        batch.push_back(subset);
        more = k > 0 && next_combination(idx, f);
      }
      std::vector<std::uint8_t> pass(batch.size(), 0);
      const std::size_t chunks = (batch.size() + 1023) / 1024;
      parallel_for(chunks, [&](std::size_t c) {
        std::size_t lo = c * 1024;
        std::size_t hi = std::min(batch.size(), lo + 1024);
        for (std::size_t i = lo; i < hi; ++i) pass[i] = kernels::all_masks_hit(masks, batch[i]) ? 1 : 0;
      });
      for (std::size_t i = 0; i < batch.size(); ++i) {
        if (pass[i]) {
          best = batch[i];
          break;
        }
      }
    }
  }
  if (!best) throw std::runtime_error("no valid structure within forced and free edges");

  FtStructure ft;
  ft.sources.assign(sources.begin(), sources.end());
  ft.model = model;
  ft.num_vertices = n;
  ft.num_edges = g.num_edges();
  ft.edges = forced;
  for (std::size_t i = 0; i < f; ++i) {
    if (*best >> i & 1) ft.edges.insert(free_ids[i]);
  }
  ft.new_edges.assign(n, {});
  for (VertexId s : sources) {
    ft.source_depths.push_back(canonical_tree(GraphView(g, FaultScenario::none()), s).depth());
  }
  if (verify_ft(g, sources, ft.edges, model)) {
    throw std::logic_error("brute_min_ft produced a structure that fails verification");
  }
  return ft;
}

FtStructure brute_min_ft(const Graph& g, std::span<const VertexId> sources, FaultModel model,
                         std::size_t free_limit) {
  EdgeSet forced = necessary_edges(g, sources, model);
  EdgeSet free(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!forced.contains(e)) free.insert(e);
  }
  return brute_min_ft(g, sources, model, forced, free, free_limit);
}

}  // namespace ftbfs
