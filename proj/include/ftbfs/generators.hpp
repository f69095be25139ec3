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

// Graph families with named parts: the single- and multi-source lower-bound
// constructions, the set-cover reduction, the instance on which the exact
// builder is denser than necessary, and seeded random graphs.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ftbfs/graph.hpp"
#include "ftbfs/set_cover.hpp"

namespace ftbfs {

struct GeneratedInstance {
  std::string family;
  Graph graph;
  std::vector<VertexId> sources;
  std::map<std::string, std::vector<VertexId>> groups;
  /// Edge families expected to be in every valid structure.
  std::map<std::string, std::vector<EdgeId>> forced_families;
  /// Other named edge families (not claimed necessary).
  std::map<std::string, std::vector<EdgeId>> edge_families;
  std::map<std::string, std::int64_t> targets;
  std::vector<std::string> notes;
};

/// Path s = v_1 .. v_{d+1} = v*, paths P_j of length 6 + 2(d - j) from v_j
/// to z_j, a set X joined to v*, and the complete bipartite block X x Z.
/// x_size = 0 selects |X| = 3(d^2 + 7d). Throws std::invalid_argument for d < 2.
GeneratedInstance gen_lb_single(std::size_t d, std::size_t x_size = 0);

/// sigma copies of the gadget G(d) (path u_1..u_d, paths Q_i of length
/// 6 + 2(d - i) from u_i to leaf z_i). Copy i is sourced at its u_1 and its
/// u_d is joined to a hub v*; the hub is joined to X and X is completely
/// joined to every leaf. x_size = 0 selects |X| = sigma * |V(G(d))|.
GeneratedInstance gen_lb_multi(std::size_t d, std::size_t sigma, std::size_t x_size = 0);

/// Embeds a set-cover instance (N elements, M sets) so that the minimum
/// structure has |E~| + kappa* R edges, where E~ is every edge outside the
/// X x Y block.
GeneratedInstance gen_setcover_reduction(const SetCoverInstance& inst, std::size_t r);

/// gen_lb_single with a hub z_0 joined to X and, through new midpoints r_i,
/// to the end of every path P_i. The z_0 edges get the largest edge ids.
GeneratedInstance gen_bad_example(std::size_t d, std::size_t x_size = 0);

/// G(n, p) drawn from std::mt19937_64 seeded with `seed`: pairs u < v in
/// lexicographic order, kept when (draw >> 11) * 2^-53 < p.
Graph gen_random(std::size_t n, double edge_prob, std::uint64_t seed);

/// First connected gen_random(n, p, seed + k) for k = 0, 1, ...; the seed
/// actually used is stored in *used_seed when non-null.
Graph gen_random_connected(std::size_t n, double edge_prob, std::uint64_t seed,
                           std::uint64_t* used_seed = nullptr);

bool is_connected(const Graph& g);

/// Sidecar text: "family=<name>", "source <v>", "target <key>=<value>",
/// "group <name> <ids...>", "forced <name> <ids...>", "edges <name> <ids...>",
/// "note <text>".
std::string write_metadata(const GeneratedInstance& inst);

}  // namespace ftbfs
