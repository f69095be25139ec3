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

#include "ftbfs/generators.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "ftbfs/canonical_paths.hpp"

namespace ftbfs {

namespace {

class Builder {
 public:
  VertexId add_vertex() { return static_cast<VertexId>(n_++); }
  std::vector<VertexId> add_vertices(std::size_t count) {
    std::vector<VertexId> out(count);
    for (auto& v : out) v = add_vertex();
    return out;
  }
  EdgeId add_edge(VertexId a, VertexId b) {
    edges_.emplace_back(a, b);
    return static_cast<EdgeId>(edges_.size() - 1);
  }
  // Adds a path from `from` through `length - 1` fresh vertices to `to`.
  std::vector<VertexId> add_path(VertexId from, VertexId to, std::size_t length) {
    std::vector<VertexId> vertices{from};
    for (std::size_t i = 1; i < length; ++i) vertices.push_back(add_vertex());
    vertices.push_back(to);
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) add_edge(vertices[i], vertices[i + 1]);
    return vertices;
  }
  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  Graph build() const { return Graph(n_, edges_); }

 private:
  std::size_t n_ = 0;
  std::vector<std::pair<VertexId, VertexId>> edges_;
};

std::int64_t as_target(std::size_t x) { return static_cast<std::int64_t>(x); }

// Lower-bound path lengths: 6 + 2(d - j), j = 1..d.
std::size_t gadget_length(std::size_t d, std::size_t j) { return 6 + 2 * (d - j); }

struct SingleParts {
  Builder b;
  std::vector<VertexId> pi;
  std::vector<VertexId> z;
  std::vector<VertexId> x;
  std::vector<VertexId> q;
  std::vector<VertexId> r;
};

// Shared skeleton of the single-source lower bound; with `split_last` every
// path's last edge is subdivided by a fresh vertex r_j.
SingleParts single_skeleton(std::size_t d, std::size_t x_size, bool split_last,
                            GeneratedInstance& inst) {
  if (d < 2) throw std::invalid_argument("d must be at least 2");
  if (x_size == 0) x_size = 3 * (d * d + 7 * d);
  SingleParts p;
  p.pi = p.b.add_vertices(d + 1);
  p.z = p.b.add_vertices(d);
  for (std::size_t i = 0; i < d; ++i) p.b.add_edge(p.pi[i], p.pi[i + 1]);
  for (std::size_t j = 1; j <= d; ++j) {
    const std::size_t t = gadget_length(d, j);
    std::vector<VertexId> path;
    if (split_last) {
      path = p.b.add_path(p.pi[j - 1], p.b.add_vertex(), t - 1);
      VertexId r = p.b.add_vertex();
      p.r.push_back(r);
      p.b.add_edge(path.back(), r);
      p.b.add_edge(r, p.z[j - 1]);
      path.push_back(p.z[j - 1]);
    } else {
      path = p.b.add_path(p.pi[j - 1], p.z[j - 1], t);
    }
    p.q.insert(p.q.end(), path.begin(), path.end());
    inst.targets["t" + std::to_string(j)] = as_target(t);
  }
  p.x = p.b.add_vertices(x_size);
  const VertexId vstar = p.pi.back();
  for (VertexId x : p.x) p.b.add_edge(vstar, x);

  // The block X x Z, diagonal (x_j, z_j) first so that z_j's canonical
  // parent is x_j.
  std::vector<EdgeId> block;
  for (std::size_t j = 0; j < d && j < p.x.size(); ++j) block.push_back(p.b.add_edge(p.x[j], p.z[j]));
  for (std::size_t i = 0; i < p.x.size(); ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (i != j) block.push_back(p.b.add_edge(p.x[i], p.z[j]));
    }
  }
  inst.groups["pi"] = p.pi;
  inst.groups["Z"] = p.z;
  inst.groups["X"] = p.x;
  inst.groups["Q"] = p.q;
  inst.groups["vstar"] = {vstar};
  inst.sources = {p.pi.front()};
  inst.targets["d"] = as_target(d);
  inst.targets["X"] = as_target(x_size);
  inst.targets["Q"] = as_target(d * d + 7 * d);
  inst.targets["Q_vertices"] = as_target(p.q.size());
  inst.targets["B_edges"] = as_target(d * x_size);
  inst.notes.push_back(
      "Q is the formula d^2+7d; Q_vertices counts the vertices of the paths P_j exactly");
  inst.notes.push_back(
      "B_edges = d*|X| (edges of X x Z); a |Q|*|X| count would overstate the block");
  (split_last ? inst.edge_families["B"] : inst.forced_families["B"]) = block;
  return p;
}

void finish(GeneratedInstance& inst, const Builder& b) {
  inst.graph = b.build();
  inst.targets["n"] = as_target(inst.graph.num_vertices());
  inst.targets["m"] = as_target(inst.graph.num_edges());
}

}  // namespace

GeneratedInstance gen_lb_single(std::size_t d, std::size_t x_size) {
  GeneratedInstance inst;
  inst.family = "lb-single";
  SingleParts p = single_skeleton(d, x_size, false, inst);
  finish(inst, p.b);
  return inst;
}

GeneratedInstance gen_bad_example(std::size_t d, std::size_t x_size) {
  GeneratedInstance inst;
  inst.family = "bad-example";
  SingleParts p = single_skeleton(d, x_size, true, inst);
  const VertexId z0 = p.b.add_vertex();
  std::vector<EdgeId> hub;
  for (VertexId r : p.r) hub.push_back(p.b.add_edge(z0, r));
  for (VertexId x : p.x) hub.push_back(p.b.add_edge(z0, x));
  inst.groups["z0"] = {z0};
  inst.groups["R"] = p.r;
  inst.edge_families["E_prime"] = hub;
  finish(inst, p.b);
  return inst;
}

GeneratedInstance gen_lb_multi(std::size_t d, std::size_t sigma, std::size_t x_size) {
  if (d < 2) throw std::invalid_argument("d must be at least 2");
  if (sigma < 1) throw std::invalid_argument("sigma must be at least 1");
  GeneratedInstance inst;
  inst.family = "lb-multi";
  Builder b;
  std::size_t gadget_vertices = 0;
  std::vector<VertexId> roots;
  std::vector<VertexId> attach;
  std::vector<std::vector<VertexId>> leaves(sigma);
  std::vector<VertexId> all_leaves;
  for (std::size_t c = 0; c < sigma; ++c) {
    const std::size_t before = b.num_vertices();
    std::vector<VertexId> u = b.add_vertices(d);
    leaves[c] = b.add_vertices(d);
    for (std::size_t i = 0; i + 1 < d; ++i) b.add_edge(u[i], u[i + 1]);
    for (std::size_t i = 1; i <= d; ++i) b.add_path(u[i - 1], leaves[c][i - 1], gadget_length(d, i));
    gadget_vertices = b.num_vertices() - before;
    roots.push_back(u.front());
    attach.push_back(u.back());
    all_leaves.insert(all_leaves.end(), leaves[c].begin(), leaves[c].end());
    inst.groups["copy" + std::to_string(c) + "_U"] = u;
    inst.groups["copy" + std::to_string(c) + "_leaves"] = leaves[c];
  }
  if (x_size == 0) x_size = sigma * gadget_vertices;
  const VertexId vstar = b.add_vertex();
  std::vector<VertexId> x = b.add_vertices(x_size);
  for (VertexId y : attach) b.add_edge(vstar, y);
  for (VertexId xi : x) b.add_edge(vstar, xi);
  std::vector<EdgeId> cross;
  for (VertexId xi : x) {
    for (VertexId z : all_leaves) cross.push_back(b.add_edge(xi, z));
  }
  inst.sources = roots;
  inst.groups["X"] = x;
  inst.groups["vstar"] = {vstar};
  inst.groups["attach"] = attach;
  inst.forced_families["cross"] = cross;
  inst.targets["d"] = as_target(d);
  inst.targets["sigma"] = as_target(sigma);
  inst.targets["X"] = as_target(x_size);
  inst.targets["gadget_vertices"] = as_target(gadget_vertices);
  inst.targets["leaves_per_copy"] = as_target(d);
  inst.targets["cross_edges"] = as_target(sigma * d * x_size);
  inst.notes.push_back("copy sources are u_1; u_d of each copy is joined to the hub");
  finish(inst, b);
  return inst;
}

GeneratedInstance gen_setcover_reduction(const SetCoverInstance& sc, std::size_t r) {
  const std::size_t n_elems = sc.universe_size();
  const std::size_t m_sets = sc.num_sets();
  if (n_elems < 1 || m_sets < 1) throw std::invalid_argument("set cover instance must be nonempty");
  if (r < 1) throw std::invalid_argument("R must be at least 1");
  GeneratedInstance inst;
  inst.family = "reduction";
  Builder b;
  std::vector<VertexId> p = b.add_vertices(n_elems + 2);
  const VertexId vprime = b.add_vertex();
  std::vector<VertexId> y = b.add_vertices(r);
  std::vector<VertexId> x = b.add_vertices(m_sets);
  std::vector<VertexId> z = b.add_vertices(n_elems);

  std::vector<EdgeId> etilde;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) etilde.push_back(b.add_edge(p[i], p[i + 1]));
  etilde.push_back(b.add_edge(p[n_elems], vprime));
  for (VertexId yl : y) etilde.push_back(b.add_edge(p[n_elems + 1], yl));
  for (std::size_t i = 1; i <= n_elems; ++i) {
    const std::size_t first = b.num_edges();
    b.add_path(p[i - 1], z[i - 1], gadget_length(n_elems, i));
    for (std::size_t e = first; e < b.num_edges(); ++e) etilde.push_back(static_cast<EdgeId>(e));
    inst.targets["t" + std::to_string(i)] = as_target(gadget_length(n_elems, i));
  }
  for (VertexId xj : x) etilde.push_back(b.add_edge(vprime, xj));
  for (VertexId xj : x) etilde.push_back(b.add_edge(p[n_elems + 1], xj));
  std::vector<EdgeId> exz;
  for (std::size_t j = 0; j < m_sets; ++j) {
    for (std::uint32_t elem : sc.set(j)) {
      EdgeId e = b.add_edge(x[j], z[elem]);
      exz.push_back(e);
      etilde.push_back(e);
    }
  }
  std::vector<EdgeId> exy;
  for (VertexId yl : y) {
    for (VertexId xj : x) exy.push_back(b.add_edge(yl, xj));
  }
  inst.sources = {p.front()};
  inst.groups["P"] = p;
  inst.groups["vprime"] = {vprime};
  inst.groups["Y"] = y;
  inst.groups["X"] = x;
  inst.groups["Z"] = z;
  inst.forced_families["Etilde"] = etilde;
  inst.edge_families["E_XY"] = exy;
  inst.edge_families["E_XZ"] = exz;
  inst.targets["N"] = as_target(n_elems);
  inst.targets["M"] = as_target(m_sets);
  inst.targets["R"] = as_target(r);
  inst.targets["Etilde"] = as_target(etilde.size());
  inst.targets["E_XY"] = as_target(exy.size());
  if (auto cover = exact_set_cover(sc, 20)) inst.targets["kappa_star"] = as_target(cover->size());
  finish(inst, b);
  return inst;
}

Graph gen_random(std::size_t n, double edge_prob, std::uint64_t seed) {
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) {
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (draw < edge_prob) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

bool is_connected(const Graph& g) {
  if (g.num_vertices() == 0) return true;
  auto dist = bfs_distances(GraphView(g, FaultScenario::none()), 0);
  for (Distance d : dist) {
    if (d == kUnreachable) return false;
  }
  return true;
}

Graph gen_random_connected(std::size_t n, double edge_prob, std::uint64_t seed,
                           std::uint64_t* used_seed) {
  for (std::uint64_t k = 0; k < 100000; ++k) {
    Graph g = gen_random(n, edge_prob, seed + k);
    if (is_connected(g)) {
      if (used_seed) *used_seed = seed + k;
      return g;
    }
  }
  throw std::runtime_error("no connected sample found");
}

std::string write_metadata(const GeneratedInstance& inst) {
  std::ostringstream out;
  out << "family=" << inst.family << '\n';
  for (VertexId s : inst.sources) out << "source " << s << '\n';
  for (const auto& [key, value] : inst.targets) out << "target " << key << '=' << value << '\n';
  auto list = [&](const char* tag, const auto& families) {
    for (const auto& [name, ids] : families) {
      out << tag << ' ' << name;
      for (auto id : ids) out << ' ' << id;
      out << '\n';
    }
  };
  list("group", inst.groups);
  list("forced", inst.forced_families);
  list("edges", inst.edge_families);
  for (const auto& note : inst.notes) out << "note " << note << '\n';
  return out.str();
}

}  // namespace ftbfs
