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

#include "ftbfs/experiments.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "ftbfs/approx_cover.hpp"
#include "ftbfs/ft_builders.hpp"
#include "ftbfs/generators.hpp"
#include "ftbfs/verifier.hpp"

namespace ftbfs {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

GeneratedInstance make_instance(std::string_view family, std::size_t value,
                                const ExperimentOptions& o, std::string& params) {
  if (family == "lb-single") {
    params = "d=" + std::to_string(value);
    return gen_lb_single(value);
  }
  if (family == "lb-multi") {
    params = "d=" + std::to_string(value) + ";sigma=" + std::to_string(o.sigma);
    return gen_lb_multi(value, o.sigma);
  }
  if (family == "bad-example") {
    params = "d=" + std::to_string(value);
    return gen_bad_example(value);
  }
  if (family == "reduction") {
    params = "R=" + std::to_string(value);
    return gen_setcover_reduction(o.setcover ? *o.setcover : default_reduction_instance(), value);
  }
  if (family == "random") {
    std::uint64_t used = 0;
    GeneratedInstance inst;
    inst.family = "random";
    inst.graph = gen_random_connected(value, o.edge_prob, o.seed, &used);
    inst.sources = {0};
    char p[32];
    std::snprintf(p, sizeof p, "%g", o.edge_prob);
    params = "n=" + std::to_string(value) + ";p=" + p + ";seed=" + std::to_string(used);
    return inst;
  }
  throw std::invalid_argument("unknown family: " + std::string(family));
}

ExperimentRow run_one(std::string_view family, std::size_t value, const ExperimentOptions& o) {
  ExperimentRow row;
  row.family = std::string(family);
  GeneratedInstance inst = make_instance(family, value, o, row.params);
  const Graph& g = inst.graph;
  row.n = g.num_vertices();
  row.m = g.num_edges();

  auto t0 = Clock::now();
  FtStructure exact = build_ftmbfs(g, inst.sources, FaultModel::kEdge);
  row.exact_ms = ms_since(t0);
  row.exact_edges = exact.size();
  row.bound = inst.sources.size() == 1
                  ? single_source_size_bound(row.n, exact.source_depths.front())
                  : multi_source_size_bound(row.n, inst.sources.size());
  row.verified = !verify_ft(g, inst.sources, exact.edges, FaultModel::kEdge).has_value();

  if (o.with_approx) {
    t0 = Clock::now();
    FtStructure approx = build_approx(g, inst.sources, FaultModel::kEdge);
    row.approx_ms = ms_since(t0);
    row.approx_edges = approx.size();
    row.verified = row.verified &&
                   !verify_ft(g, inst.sources, approx.edges, FaultModel::kEdge).has_value();
  }

  const EdgeSet necessary = necessary_edges(g, inst.sources, FaultModel::kEdge);
  for (const auto& [name, ids] : inst.forced_families) {
    for (EdgeId e : ids) row.forced_edges += necessary.contains(e) ? 1 : 0;
  }

  if (family == "reduction") {
    EdgeSet forced = EdgeSet::from_ids(g.num_edges(), inst.forced_families.at("Etilde"));
    EdgeSet free = EdgeSet::from_ids(g.num_edges(), inst.edge_families.at("E_XY"));
    if (free.size() <= kDefaultFreeLimit) {
      row.optimum = brute_min_ft(g, inst.sources, FaultModel::kEdge, forced, free).size();
    }
  } else if (g.num_edges() - necessary.size() <= kDefaultFreeLimit) {
    row.optimum = brute_min_ft(g, inst.sources, FaultModel::kEdge).size();
  }
  return row;
}

}  // namespace

SetCoverInstance default_reduction_instance() {
  return SetCoverInstance(4, {{0, 2, 3}, {0, 2}, {1, 3}, {2}, {0, 3}});
}

std::vector<ExperimentRow> run_experiment(std::string_view family, std::size_t lo,
                                          std::size_t hi, const ExperimentOptions& options) {
  if (lo > hi) throw std::invalid_argument("empty parameter range");
  std::vector<ExperimentRow> rows;
  // Each cell parallelizes internally; cells run in parameter order.
  for (std::size_t v = lo; v <= hi; ++v) rows.push_back(run_one(family, v, options));
  return rows;
}

double fit_scaling(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("x and y differ in length");
  if (x.size() < 4) throw std::invalid_argument("at least 4 points are needed");
  const double k = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0) || !(y[i] > 0)) throw std::invalid_argument("values must be positive");
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = k * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("x values are all equal");
  return (k * sxy - sx * sy) / denom;
}

std::string csv_header() {
  return "family,params,n,m,exact_edges,approx_edges,bound,forced_edges,optimum,verified,"
         "exact_ms,approx_ms\n";
}

std::string to_csv(std::span<const ExperimentRow> rows) {
  std::string out = csv_header();
  char buf[64];
  for (const auto& r : rows) {
    out += r.family + ',' + r.params + ',' + std::to_string(r.n) + ',' + std::to_string(r.m) +
           ',' + std::to_string(r.exact_edges) + ',' + std::to_string(r.approx_edges) + ',' +
           std::to_string(r.bound) + ',' + std::to_string(r.forced_edges) + ',' +
           (r.optimum ? std::to_string(*r.optimum) : std::string()) + ',' +
           (r.verified ? "true" : "false");
    std::snprintf(buf, sizeof buf, ",%.3f,%.3f\n", r.exact_ms, r.approx_ms);
    out += buf;
  }
  return out;
}

}  // namespace ftbfs
