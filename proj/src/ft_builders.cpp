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

#include "ftbfs/ft_builders.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ftbfs/canonical_paths.hpp"
#include "ftbfs/parallel.hpp"

namespace ftbfs {

namespace {

struct SourceRun {
  SpTree base;
  // last_edges[v]: parent edges of v over all replacement trees, sorted, unique.
  std::vector<std::vector<EdgeId>> last_edges;
  EdgeSet edges;
};

std::vector<FaultScenario> tree_faults(const Graph& g, const SpTree& base, FaultModel model) {
  std::vector<FaultScenario> faults;
  if (model == FaultModel::kEdge) {
    std::vector<EdgeId> ids;
    for (EdgeId e : base.parent_edges()) {
      if (e != kNoEdge) ids.push_back(e);
    }
    std::sort(ids.begin(), ids.end());
    for (EdgeId e : ids) faults.push_back(FaultScenario::edge(e));
  } else {
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (v != base.root() && base.reachable(v)) faults.push_back(FaultScenario::vertex(v));
    }
  }
  return faults;
}

SourceRun run_source(const Graph& g, VertexId s, FaultModel model) {
  if (s >= g.num_vertices()) throw std::invalid_argument("source out of range");
  const std::size_t n = g.num_vertices();
  SourceRun run;
  run.base = canonical_tree(GraphView(g, FaultScenario::none()), s);
  run.edges = run.base.edge_set(g.num_edges());
  run.last_edges.assign(n, {});

  const auto faults = tree_faults(g, run.base, model);
  std::vector<std::vector<EdgeId>> parents(faults.size());
  parallel_for(faults.size(), [&](std::size_t i) {
    SpTree tree = canonical_tree(GraphView(g, faults[i]), s);
    parents[i].assign(tree.parent_edges().begin(), tree.parent_edges().end());
  });
  for (const auto& p : parents) {
    for (VertexId v = 0; v < n; ++v) {
      if (p[v] == kNoEdge) continue;
      run.edges.insert(p[v]);
      if (p[v] != run.base.parent_edge(v)) run.last_edges[v].push_back(p[v]);
    }
  }
  for (auto& list : run.last_edges) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return run;
}

FtStructure assemble(const Graph& g, std::span<const VertexId> sources, FaultModel model,
                     std::span<const SourceRun> runs) {
  FtStructure ft;
  ft.sources.assign(sources.begin(), sources.end());
  ft.model = model;
  ft.num_vertices = g.num_vertices();
  ft.num_edges = g.num_edges();
  ft.edges = EdgeSet(g.num_edges());
  EdgeSet base_union(g.num_edges());
  for (const SourceRun& run : runs) {
    ft.edges.merge(run.edges);
    for (EdgeId e : run.base.parent_edges()) {
      if (e != kNoEdge) base_union.insert(e);
    }
    ft.source_depths.push_back(run.base.depth());
  }
  ft.new_edges.assign(g.num_vertices(), {});
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    std::set<EdgeId> merged;
    for (const SourceRun& run : runs) {
      for (EdgeId e : run.last_edges[v]) {
        if (!base_union.contains(e)) merged.insert(e);
      }
    }
    ft.new_edges[v].assign(merged.begin(), merged.end());
  }
  return ft;
}

}  // namespace

FtStructure build_ftbfs(const Graph& g, VertexId s, FaultModel model) {
  const VertexId sources[] = {s};
  return build_ftmbfs(g, sources, model);
}

FtStructure build_ftmbfs(const Graph& g, std::span<const VertexId> sources, FaultModel model) {
  if (sources.empty()) throw std::invalid_argument("source list is empty");
  std::vector<VertexId> sorted(sources.begin(), sources.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("duplicate source");
  }
  std::vector<SourceRun> runs;
  runs.reserve(sources.size());
  for (VertexId s : sources) runs.push_back(run_source(g, s, model));
  return assemble(g, sources, model, runs);
}

std::vector<std::size_t> new_edge_profile(const FtStructure& ft) {
  std::vector<std::size_t> out(ft.new_edges.size());
  for (std::size_t v = 0; v < out.size(); ++v) out[v] = ft.new_edges[v].size();
  return out;
}

std::size_t ceil_sqrt(std::size_t x) {
  auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(x)));
  while (r * r < x) ++r;
  while (r > 0 && (r - 1) * (r - 1) >= x) --r;
  return r;
}

std::size_t single_source_size_bound(std::size_t n, Distance depth) {
  if (n == 0) return 0;
  std::size_t by_depth = n * (static_cast<std::size_t>(depth) + 1);
  std::size_t by_sqrt = (n - 1) + n * ceil_sqrt(2 * n);
  return std::min(by_depth, by_sqrt);
}

std::size_t multi_source_size_bound(std::size_t n, std::size_t sigma) {
  if (n == 0) return 0;
  return sigma * (n - 1) + n * ceil_sqrt(2 * sigma * n) + sigma * n;
}

std::string write_structure(const Graph& g, const FtStructure& ft) {
  std::ostringstream out;
  out << "# sources:";
  for (VertexId s : ft.sources) out << ' ' << s;
  out << "\n# fault: " << to_string(ft.model) << "\n# n: " << g.num_vertices()
      << "\n# m: " << g.num_edges() << "\n# edges: " << ft.edges.size() << '\n';
  for (EdgeId e : ft.edges.ids()) out << g.edge(e).u << ' ' << g.edge(e).v << '\n';
  for (std::size_t v = 0; v < ft.new_edges.size(); ++v) {
    if (!ft.new_edges[v].empty()) out << "# new " << v << ": " << ft.new_edges[v].size() << '\n';
  }
  return out.str();
}

namespace {

std::vector<std::uint64_t> parse_numbers(std::string_view text, std::size_t line_no) {
  std::vector<std::uint64_t> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ') {
      ++i;
      continue;
    }
    std::uint64_t value = 0;
    auto r = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (r.ec != std::errc{}) {
      throw std::runtime_error("structure line " + std::to_string(line_no) + ": bad number");
    }
    out.push_back(value);
    i = static_cast<std::size_t>(r.ptr - text.data());
  }
  return out;
}

}  // namespace

FtStructure parse_structure(const Graph& g, std::string_view text) {
  FtStructure ft;
  ft.num_vertices = g.num_vertices();
  ft.num_edges = g.num_edges();
  ft.edges = EdgeSet(g.num_edges());
  ft.new_edges.assign(g.num_vertices(), {});
  std::size_t declared = 0;
  bool have_declared = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::string_view body = line.substr(1);
      while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
      auto value_after = [&](std::string_view key) -> std::optional<std::string_view> {
        if (body.substr(0, key.size()) != key) return std::nullopt;
        return body.substr(key.size());
      };
      if (auto v = value_after("sources:")) {
        for (auto x : parse_numbers(*v, line_no)) {
          if (x >= g.num_vertices()) throw std::runtime_error("structure source out of range");
          ft.sources.push_back(static_cast<VertexId>(x));
        }
      } else if (auto v = value_after("fault:")) {
        std::string_view s = *v;
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        ft.model = parse_fault_model(s);
      } else if (auto v = value_after("edges:")) {
        auto nums = parse_numbers(*v, line_no);
        if (nums.size() != 1) throw std::runtime_error("structure: bad edge count line");
        declared = nums[0];
        have_declared = true;
      }
      continue;
    }
    auto nums = parse_numbers(line, line_no);
    if (nums.size() != 2) {
      throw std::runtime_error("structure line " + std::to_string(line_no) + ": expected 'u v'");
    }
    auto id = g.find_edge(static_cast<VertexId>(nums[0]), static_cast<VertexId>(nums[1]));
    if (nums[0] >= g.num_vertices() || nums[1] >= g.num_vertices() || !id) {
      throw std::runtime_error("structure line " + std::to_string(line_no) + ": edge " +
                               std::to_string(nums[0]) + " " + std::to_string(nums[1]) +
                               " is not in the graph");
    }
    ft.edges.insert(*id);
  }
  if (have_declared && declared != ft.edges.size()) {
    throw std::runtime_error("structure: header declares " + std::to_string(declared) +
                             " edges, found " + std::to_string(ft.edges.size()));
  }
  return ft;
}

}  // namespace ftbfs
