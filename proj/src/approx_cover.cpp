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

#include "ftbfs/approx_cover.hpp"

#include <algorithm>
#include <stdexcept>

#include "ftbfs/canonical_paths.hpp"
#include "ftbfs/parallel.hpp"

namespace ftbfs {

DistanceTables DistanceTables::compute(const Graph& g, std::span<const VertexId> sources,
                                       FaultModel model) {
  DistanceTables t;
  t.sources_.assign(sources.begin(), sources.end());
  t.faults_ = all_faults(g, model);
  t.model_ = model;
  const std::size_t nf = t.faults_.size();
  t.table_of_.assign(sources.size() * nf, 0);

  // Jobs: (source, fault) pairs that need their own BFS.
  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  for (std::size_t k = 0; k < sources.size(); ++k) {
    if (sources[k] >= g.num_vertices()) throw std::invalid_argument("source out of range");
    t.table_of_[k * nf] = t.tables_.size();
    t.tables_.push_back(bfs_distances(GraphView(g, FaultScenario::none()), sources[k]));
  }
  for (std::size_t k = 0; k < sources.size(); ++k) {
    const auto& base = t.tables_[t.table_of_[k * nf]];
    for (std::size_t j = 1; j < nf; ++j) {
      FaultScenario f = t.faults_[j];
      if (f.kind() == FaultScenario::Kind::kEdge) {
        const Edge& e = g.edge(f.id());
        Distance a = base[e.u];
        Distance b = base[e.v];
        bool tight = a != kUnreachable && b != kUnreachable && (a - b == 1 || b - a == 1);
        if (!tight) {
          t.table_of_[k * nf + j] = t.table_of_[k * nf];
          continue;
        }
      }
      t.table_of_[k * nf + j] = t.tables_.size() + jobs.size();
      jobs.emplace_back(k, j);
    }
  }
  const std::size_t first = t.tables_.size();
  t.tables_.resize(first + jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) {
    auto [k, j] = jobs[i];
    t.tables_[first + i] = bfs_distances(GraphView(g, t.faults_[j]), t.sources_[k]);
  });
  return t;
}

VertexCoverage coverage_sets(const Graph& g, VertexId v, const DistanceTables& tables) {
  auto neighbors = g.neighbors(v);
  const std::size_t deg = neighbors.size();
  const auto faults = tables.faults();
  std::vector<std::vector<std::uint32_t>> sets(deg);
  std::vector<std::uint64_t> keys(deg);
  for (std::size_t j = 0; j < deg; ++j) keys[j] = neighbors[j].vertex;
  std::vector<UniversePair> elements;
  std::vector<std::uint8_t> base_member(deg, 0);

  for (std::size_t k = 0; k < tables.sources().size(); ++k) {
    const VertexId s = tables.sources()[k];
    if (s == v) continue;
    {
      auto dist = tables.dist(k, 0);
      for (std::size_t j = 0; j < deg; ++j) {
        base_member[j] = dist[v] != kUnreachable && dist[neighbors[j].vertex] == dist[v] - 1;
      }
    }
    for (std::size_t fi = 0; fi < faults.size(); ++fi) {
      const FaultScenario f = faults[fi];
      if (f.kind() == FaultScenario::Kind::kVertex && (f.id() == s || f.id() == v)) continue;
      auto dist = tables.dist(k, fi);
      if (dist[v] == kUnreachable) continue;
      const auto element = static_cast<std::uint32_t>(elements.size());
      elements.push_back({k, f});
      // A shared table means f is an edge off every shortest path from s, so
      // it cannot be one of the tight edges into v.
      const bool reuse = f.kind() != FaultScenario::Kind::kVertex && tables.shares_base(k, fi);
      for (std::size_t j = 0; j < deg; ++j) {
        bool member;
        if (reuse) {
          member = base_member[j] != 0;
        } else {
          const Adjacent& a = neighbors[j];
          bool alive = true;
          if (f.kind() == FaultScenario::Kind::kEdge) alive = a.edge != f.id();
          if (f.kind() == FaultScenario::Kind::kVertex) alive = a.vertex != f.id();
          member = alive && dist[a.vertex] == dist[v] - 1;
        }
        if (member) sets[j].push_back(element);
      }
    }
  }
  const std::size_t universe = elements.size();
  return {SetCoverInstance(universe, std::move(sets), std::move(keys)), std::move(elements)};
}

ApproxReport build_approx_report(const Graph& g, std::span<const VertexId> sources,
                                 FaultModel model) {
  if (sources.empty()) throw std::invalid_argument("source list is empty");
  {
    std::vector<VertexId> sorted(sources.begin(), sources.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("duplicate source");
    }
  }
  const std::size_t n = g.num_vertices();
  const DistanceTables tables = DistanceTables::compute(g, sources, model);

  std::vector<std::vector<EdgeId>> chosen(n);
  std::vector<std::size_t> universe_sizes(n, 0);
  parallel_for(n, [&](std::size_t i) {
    const auto v = static_cast<VertexId>(i);
    VertexCoverage cov = coverage_sets(g, v, tables);
    universe_sizes[i] = cov.instance.universe_size();
    auto neighbors = g.neighbors(v);
    for (std::size_t j : greedy_set_cover(cov.instance)) chosen[i].push_back(neighbors[j].edge);
  });

  ApproxReport report;
  FtStructure& ft = report.structure;
  ft.sources.assign(sources.begin(), sources.end());
  ft.model = model;
  ft.num_vertices = n;
  ft.num_edges = g.num_edges();
  ft.edges = EdgeSet(g.num_edges());
  EdgeSet base_union(g.num_edges());
  for (VertexId s : sources) {
    SpTree tree = canonical_tree(GraphView(g, FaultScenario::none()), s);
    base_union.merge(tree.edge_set(g.num_edges()));
    ft.source_depths.push_back(tree.depth());
  }
  ft.new_edges.assign(n, {});
  report.cover_sizes.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    report.cover_sizes[i] = chosen[i].size();
    report.max_universe = std::max(report.max_universe, universe_sizes[i]);
    for (EdgeId e : chosen[i]) {
      ft.edges.insert(e);
      if (!base_union.contains(e)) ft.new_edges[i].push_back(e);
    }
    std::sort(ft.new_edges[i].begin(), ft.new_edges[i].end());
  }
  return report;
}

FtStructure build_approx(const Graph& g, std::span<const VertexId> sources, FaultModel model) {
  return build_approx_report(g, sources, model).structure;
}

}  // namespace ftbfs
