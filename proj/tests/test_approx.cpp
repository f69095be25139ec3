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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <utility>
#include <vector>

#include "ftbfs/approx_cover.hpp"
#include "ftbfs/canonical_paths.hpp"
#include "ftbfs/generators.hpp"
#include "ftbfs/verifier.hpp"
#include "oracles.hpp"

using namespace ftbfs;

namespace {

Graph make(std::size_t n, std::vector<std::pair<VertexId, VertexId>> e) { return Graph(n, e); }

const std::vector<VertexId> kSource0{0};

std::vector<std::vector<std::uint32_t>> raw_sets(const SetCoverInstance& inst) {
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t i = 0; i < inst.num_sets(); ++i) {
    out.emplace_back(inst.set(i).begin(), inst.set(i).end());
  }
  return out;
}

}  // namespace

TEST_CASE("triangle coverage sets") {
  Graph k3 = make(3, {{0, 1}, {1, 2}, {0, 2}});
  DistanceTables t = DistanceTables::compute(k3, kSource0, FaultModel::kEdge);
  VertexCoverage cov = coverage_sets(k3, 2, t);
  // Universe: no fault and each of the three edge faults.
  REQUIRE(cov.elements.size() == 4);
  auto nb = k3.neighbors(2);
  REQUIRE(nb.size() == 2);
  CHECK(nb[0].vertex == 0);
  CHECK(nb[1].vertex == 1);
  for (std::uint32_t i = 0; i < cov.elements.size(); ++i) {
    const FaultScenario f = cov.elements[i].fault;
    const bool in0 = std::binary_search(cov.instance.set(0).begin(), cov.instance.set(0).end(), i);
    const bool in1 = std::binary_search(cov.instance.set(1).begin(), cov.instance.set(1).end(), i);
    if (f == FaultScenario::edge(2)) {
      CHECK_FALSE(in0);
      CHECK(in1);
    } else {
      CHECK(in0);
      CHECK_FALSE(in1);
    }
  }
  CHECK(build_approx(k3, kSource0, FaultModel::kEdge).size() == 3);
}

TEST_CASE("depth-one vertex is covered by the source") {
  Graph g = make(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  DistanceTables t = DistanceTables::compute(g, kSource0, FaultModel::kEdge);
  VertexCoverage cov = coverage_sets(g, 1, t);
  REQUIRE(cov.elements[0].fault.is_none());
  auto nb = g.neighbors(1);
  for (std::size_t j = 0; j < nb.size(); ++j) {
    const bool has = std::binary_search(cov.instance.set(j).begin(), cov.instance.set(j).end(), 0u);
    CHECK(has == (nb[j].vertex == 0));
  }
}

TEST_CASE("unreachable pairs are left out") {
  Graph path = make(3, {{0, 1}, {1, 2}});
  DistanceTables t = DistanceTables::compute(path, kSource0, FaultModel::kEdge);
  // Vertex 2 is cut off by either fault; only the no-fault pair remains.
  CHECK(coverage_sets(path, 2, t).elements.size() == 1);
  CHECK(coverage_sets(path, 0, t).elements.empty());
}

TEST_CASE("trees come back unchanged") {
  Graph tree = make(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {5, 6}});
  for (FaultModel model : {FaultModel::kEdge, FaultModel::kVertex}) {
    CHECK(build_approx(tree, kSource0, model).edges == EdgeSet::all(6));
  }
}

TEST_CASE("approximation is valid, bounded and contains a tree per source") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = gen_random(8 + seed % 15, 0.3, seed);
    std::vector<VertexId> sources{0, 3};
    for (FaultModel model : {FaultModel::kEdge, FaultModel::kVertex}) {
      ApproxReport rep = build_approx_report(g, sources, model);
      CHECK_FALSE(verify_ft(g, sources, rep.structure.edges, model).has_value());
      std::size_t chosen = 0;
      for (auto c : rep.cover_sizes) chosen += c;
      CHECK(rep.structure.size() <= chosen);
      for (VertexId s : sources) {
        auto dist = bfs_distances(GraphView(g, FaultScenario::none()), s);
        CHECK(bfs_distances(GraphView(g, FaultScenario::none(), &rep.structure.edges), s) == dist);
      }
    }
  }
}

TEST_CASE("per-vertex covers stay within the harmonic factor") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = gen_random(10, 0.4, seed + 50);
    DistanceTables t = DistanceTables::compute(g, kSource0, FaultModel::kEdge);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      VertexCoverage cov = coverage_sets(g, v, t);
      if (cov.instance.num_sets() > 20) continue;
      const std::size_t greedy = greedy_set_cover(cov.instance).size();
      const std::size_t opt = oracle::brute_cover_size(cov.instance.universe_size(),
                                                       raw_sets(cov.instance));
      CHECK(static_cast<double>(greedy) <=
            harmonic_number(cov.instance.universe_size()) * static_cast<double>(opt) + 1e-12);
    }
  }
}

TEST_CASE("small graphs: within the logarithmic factor of the minimum") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    Graph g = gen_random_connected(5 + seed % 3, 0.5, seed * 31);
    ApproxReport rep = build_approx_report(g, kSource0, FaultModel::kEdge);
    const std::size_t opt = brute_min_ft(g, kSource0, FaultModel::kEdge).size();
    const double factor = 2.0 * (std::log(static_cast<double>(rep.max_universe)) + 1.0);
    CHECK(static_cast<double>(rep.structure.size()) <= factor * static_cast<double>(opt));
  }
}

TEST_CASE("bad example: hub shortcut replaces the block") {
  GeneratedInstance inst = gen_bad_example(4);
  const Graph& g = inst.graph;
  FtStructure approx = build_approx(g, inst.sources, FaultModel::kEdge);
  FtStructure exact = build_ftbfs(g, inst.sources[0], FaultModel::kEdge);
  CHECK(approx.size() < exact.size());
  for (EdgeId e : inst.edge_families.at("B")) CHECK(exact.edges.contains(e));
  std::size_t block_kept = 0;
  for (EdgeId e : inst.edge_families.at("B")) block_kept += approx.edges.contains(e) ? 1 : 0;
  CHECK(block_kept < inst.edge_families.at("B").size() / 2);
  CHECK_FALSE(verify_ft(g, inst.sources, approx.edges, FaultModel::kEdge).has_value());
}
