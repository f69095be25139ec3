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

#include <set>
#include <vector>

#include "ftbfs/generators.hpp"
#include "ftbfs/verifier.hpp"

using namespace ftbfs;

namespace {

void check_common(const GeneratedInstance& inst) {
  const Graph& g = inst.graph;
  CHECK(parse_graph(write_graph(g)) == g);
  CHECK(inst.targets.at("n") == static_cast<std::int64_t>(g.num_vertices()));
  CHECK(inst.targets.at("m") == static_cast<std::int64_t>(g.num_edges()));
  for (const auto& [name, ids] : inst.forced_families) {
    for (EdgeId e : ids) CHECK(e < g.num_edges());
  }
  for (const auto& [name, ids] : inst.groups) {
    for (VertexId v : ids) CHECK(v < g.num_vertices());
  }
  CHECK(is_connected(g));
}

}  // namespace

TEST_CASE("single-source lower bound") {
  for (std::size_t d = 2; d <= 6; ++d) {
    GeneratedInstance inst = gen_lb_single(d);
    check_common(inst);
    const auto x = inst.groups.at("X").size();
    CHECK(x == 3 * (d * d + 7 * d));
    CHECK(inst.targets.at("Q") == static_cast<std::int64_t>(d * d + 7 * d));
    CHECK(inst.forced_families.at("B").size() == d * x);
    CHECK(inst.targets.at("B_edges") == static_cast<std::int64_t>(d * x));
    CHECK(inst.groups.at("Z").size() == d);
    CHECK(inst.groups.at("pi").size() == d + 1);
    CHECK(2 * x >= inst.graph.num_vertices());
    for (std::size_t j = 1; j <= d; ++j) {
      CHECK(inst.targets.at("t" + std::to_string(j)) == static_cast<std::int64_t>(6 + 2 * (d - j)));
    }
  }
  GeneratedInstance d3 = gen_lb_single(3);
  CHECK(d3.targets.at("t1") == 10);
  CHECK(d3.targets.at("t2") == 8);
  CHECK(d3.targets.at("t3") == 6);
  CHECK(gen_lb_single(4).targets.at("Q") == 44);
  CHECK_THROWS(gen_lb_single(1));
}

TEST_CASE("single-source block edges are necessary") {
  for (std::size_t d = 2; d <= 3; ++d) {
    GeneratedInstance inst = gen_lb_single(d);
    EdgeSet need = necessary_edges(inst.graph, inst.sources, FaultModel::kEdge);
    for (EdgeId e : inst.forced_families.at("B")) CHECK(need.contains(e));
  }
}

TEST_CASE("multi-source lower bound") {
  for (std::size_t sigma = 1; sigma <= 3; ++sigma) {
    GeneratedInstance inst = gen_lb_multi(3, sigma);
    check_common(inst);
    CHECK(inst.sources.size() == sigma);
    CHECK(inst.targets.at("leaves_per_copy") == 3);
    CHECK(inst.targets.at("gadget_vertices") == 3 * 3 + 6 * 3);
    const auto x = inst.groups.at("X").size();
    CHECK(inst.forced_families.at("cross").size() == sigma * 3 * x);
    EdgeSet need = necessary_edges(inst.graph, inst.sources, FaultModel::kEdge);
    for (EdgeId e : inst.forced_families.at("cross")) CHECK(need.contains(e));
  }
  CHECK_THROWS(gen_lb_multi(1, 2));
  CHECK_THROWS(gen_lb_multi(2, 0));
}

TEST_CASE("set-cover reduction") {
  SetCoverInstance two(2, {{0}, {1}});
  GeneratedInstance inst = gen_setcover_reduction(two, 2);
  check_common(inst);
  CHECK(inst.graph.num_vertices() == 23);
  CHECK(inst.targets.at("t1") == 8);
  CHECK(inst.targets.at("t2") == 6);
  CHECK(inst.targets.at("kappa_star") == 2);
  CHECK(inst.targets.at("E_XY") == 4);
  CHECK(inst.targets.at("Etilde") ==
        static_cast<std::int64_t>(inst.graph.num_edges()) - inst.targets.at("E_XY"));
  EdgeSet need = necessary_edges(inst.graph, inst.sources, FaultModel::kEdge);
  for (EdgeId e : inst.forced_families.at("Etilde")) CHECK(need.contains(e));

  SetCoverInstance fig4(4, {{0, 2, 3}, {0, 2}, {1, 3}, {2}, {0, 3}});
  CHECK(gen_setcover_reduction(fig4, 1).targets.at("kappa_star") == 2);
  CHECK_THROWS(gen_setcover_reduction(two, 0));
}

TEST_CASE("bad example") {
  for (std::size_t d = 2; d <= 3; ++d) {
    GeneratedInstance inst = gen_bad_example(d);
    check_common(inst);
    CHECK(inst.forced_families.empty());
    const auto& hub = inst.edge_families.at("E_prime");
    // Hub edges carry the largest ids.
    CHECK(hub.front() == inst.graph.num_edges() - hub.size());
    EdgeSet need = necessary_edges(inst.graph, inst.sources, FaultModel::kEdge);
    for (EdgeId e : inst.edge_families.at("B")) CHECK_FALSE(need.contains(e));
  }
}

TEST_CASE("metadata sidecar") {
  GeneratedInstance inst = gen_lb_single(2);
  std::string meta = write_metadata(inst);
  CHECK(meta.rfind("family=lb-single\n", 0) == 0);
  CHECK(meta.find("\nsource 0\n") != std::string::npos);
  CHECK(meta.find("\ntarget Q=18\n") != std::string::npos);
  CHECK(meta.find("\nforced B ") != std::string::npos);
  CHECK(meta.find("\ngroup X ") != std::string::npos);
}

TEST_CASE("connected sampling") {
  std::uint64_t used = 0;
  Graph g = gen_random_connected(20, 0.15, 4, &used);
  CHECK(is_connected(g));
  CHECK(write_graph(g) == write_graph(gen_random(20, 0.15, used)));
}
