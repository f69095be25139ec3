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

// Command-line front end: build, verify, gen, oracle, experiment.
//
// Exit status: 0 ok, 1 verification failure, 2 usage or input error,
// 3 oracle search space too large.

#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ftbfs/approx_cover.hpp"
#include "ftbfs/experiments.hpp"
#include "ftbfs/ft_builders.hpp"
#include "ftbfs/generators.hpp"
#include "ftbfs/graph.hpp"
#include "ftbfs/set_cover.hpp"
#include "ftbfs/verifier.hpp"

namespace {

using namespace ftbfs;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<VertexId> parse_sources(const std::string& text, const Graph& g) {
  std::vector<VertexId> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    VertexId v = 0;
    auto r = std::from_chars(text.data() + pos, text.data() + end, v);
    if (r.ec != std::errc{} || r.ptr != text.data() + end) {
      throw UsageError("bad source list: '" + text + "'");
    }
    if (v >= g.num_vertices()) throw UsageError("source " + std::to_string(v) + " out of range");
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

void emit(const std::optional<std::string>& path, const std::string& text) {
  if (path) {
    write_text_file(*path, text);
  } else {
    std::cout << text;
  }
}

struct BuildArgs {
  std::string graph, sources = "0", mode = "exact", fault = "edge";
  std::optional<std::string> out;
};

int run_build(const BuildArgs& a) {
  const Graph g = read_graph_file(a.graph);
  const auto sources = parse_sources(a.sources, g);
  const FaultModel model = parse_fault_model(a.fault);
  FtStructure ft;
  if (a.mode == "exact") {
    ft = build_ftmbfs(g, sources, model);
  } else if (a.mode == "approx") {
    ft = build_approx(g, sources, model);
  } else {
    throw UsageError("--mode must be exact or approx");
  }
  emit(a.out, write_structure(g, ft));
  const std::size_t n = g.num_vertices();
  const std::size_t bound = sources.size() == 1 && !ft.source_depths.empty()
                                ? single_source_size_bound(n, ft.source_depths.front())
                                : multi_source_size_bound(n, sources.size());
  std::ostream& info = a.out ? std::cout : std::cerr;
  info << "size " << ft.size() << " bound " << bound << '\n';
  return kExitOk;
}

struct VerifyArgs {
  std::string graph, candidate, sources = "0", fault = "edge";
};

int run_verify(const VerifyArgs& a) {
  const Graph g = read_graph_file(a.graph);
  const auto sources = parse_sources(a.sources, g);
  const FtStructure ft = parse_structure(g, read_text_file(a.candidate));
  if (auto v = verify_ft(g, sources, ft.edges, parse_fault_model(a.fault))) {
    std::cout << v->to_string() << '\n';
    return kExitViolation;
  }
  std::cout << "OK\n";
  return kExitOk;
}

struct GenArgs {
  std::string family;
  std::size_t d = 2, sigma = 1, r = 2, n = 10;
  double p = 0.3;
  std::uint64_t seed = 1;
  std::optional<std::string> setcover, out, meta;
};

int run_gen(const GenArgs& a) {
  GeneratedInstance inst;
  if (a.family == "lb-single") {
    inst = gen_lb_single(a.d);
  } else if (a.family == "lb-multi") {
    inst = gen_lb_multi(a.d, a.sigma);
  } else if (a.family == "bad-example") {
    inst = gen_bad_example(a.d);
  } else if (a.family == "reduction") {
    SetCoverInstance sc = a.setcover ? parse_set_cover(read_text_file(*a.setcover))
                                     : default_reduction_instance();
    inst = gen_setcover_reduction(sc, a.r);
  } else if (a.family == "random") {
    inst.family = "random";
    inst.graph = gen_random(a.n, a.p, a.seed);
    inst.sources = {0};
  } else {
    throw UsageError("unknown family: " + a.family);
  }
  emit(a.out, write_graph(inst.graph));
  if (a.meta) write_text_file(*a.meta, write_metadata(inst));
  return kExitOk;
}

struct OracleArgs {
  std::string graph, sources = "0", fault = "edge";
  std::size_t free_limit = kDefaultFreeLimit;
};

int run_oracle(const OracleArgs& a) {
  const Graph g = read_graph_file(a.graph);
  const auto sources = parse_sources(a.sources, g);
  FtStructure best;
  try {
    best = brute_min_ft(g, sources, parse_fault_model(a.fault), a.free_limit);
  } catch (const SearchSpaceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResource;
  }
  std::cout << "minimum " << best.size() << '\n';
  for (EdgeId e : best.edges.ids()) {
    std::cout << g.edge(e).u << ' ' << g.edge(e).v << '\n';
  }
  return kExitOk;
}

struct ExperimentArgs {
  std::string family, range, csv;
  std::size_t sigma = 2;
  double p = 0.3;
  std::uint64_t seed = 1;
  std::optional<std::string> setcover;
};

int run_experiment_cmd(const ExperimentArgs& a) {
  const auto colon = a.range.find(':');
  std::size_t lo = 0, hi = 0;
  if (colon == std::string::npos ||
      std::from_chars(a.range.data(), a.range.data() + colon, lo).ptr != a.range.data() + colon ||
      std::from_chars(a.range.data() + colon + 1, a.range.data() + a.range.size(), hi).ptr !=
          a.range.data() + a.range.size()) {
    throw UsageError("--range must look like LO:HI");
  }
  ExperimentOptions opt;
  opt.sigma = a.sigma;
  opt.edge_prob = a.p;
  opt.seed = a.seed;
  if (a.setcover) opt.setcover = parse_set_cover(read_text_file(*a.setcover));
  auto rows = run_experiment(a.family, lo, hi, opt);
  write_text_file(a.csv, to_csv(rows));
  bool all_verified = true;
  for (const auto& r : rows) all_verified = all_verified && r.verified;
  std::cout << rows.size() << " rows written to " << a.csv << '\n';
  return all_verified ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fault-tolerant BFS structures"};
  app.require_subcommand(1);

  BuildArgs build;
  auto* b = app.add_subcommand("build", "Build a fault-tolerant structure");
  b->add_option("--graph", build.graph, "Graph file")->required();
  b->add_option("--sources", build.sources, "Comma-separated source vertices");
  b->add_option("--mode", build.mode, "exact or approx")->check(CLI::IsMember({"exact", "approx"}));
  b->add_option("--fault", build.fault, "edge or vertex")->check(CLI::IsMember({"edge", "vertex"}));
  b->add_option("--out", build.out, "Output structure file (default stdout)");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check a candidate structure");
  v->add_option("--graph", verify.graph, "Graph file")->required();
  v->add_option("--candidate", verify.candidate, "Structure file")->required();
  v->add_option("--sources", verify.sources, "Comma-separated source vertices");
  v->add_option("--fault", verify.fault, "edge or vertex")->check(CLI::IsMember({"edge", "vertex"}));

  GenArgs gen;
  auto* gcmd = app.add_subcommand("gen", "Generate a graph family");
  gcmd->add_option("--family", gen.family, "lb-single|lb-multi|reduction|bad-example|random")
      ->required();
  gcmd->add_option("--d", gen.d, "Depth parameter");
  gcmd->add_option("--sigma", gen.sigma, "Number of sources (lb-multi)");
  gcmd->add_option("--setcover", gen.setcover, "Set-cover instance file (reduction)");
  gcmd->add_option("--R", gen.r, "Y block size (reduction)");
  gcmd->add_option("--n", gen.n, "Vertex count (random)");
  gcmd->add_option("--p", gen.p, "Edge probability (random)");
  gcmd->add_option("--seed", gen.seed, "Seed (random)");
  gcmd->add_option("--out", gen.out, "Graph file (default stdout)");
  gcmd->add_option("--meta", gen.meta, "Metadata sidecar file");

  OracleArgs oracle;
  auto* o = app.add_subcommand("oracle", "Exact minimum structure by exhaustive search");
  o->add_option("--graph", oracle.graph, "Graph file")->required();
  o->add_option("--sources", oracle.sources, "Comma-separated source vertices");
  o->add_option("--fault", oracle.fault, "edge or vertex")->check(CLI::IsMember({"edge", "vertex"}));
  o->add_option("--free-limit", oracle.free_limit, "Largest number of undecided edges");

  ExperimentArgs exp;
  auto* e = app.add_subcommand("experiment", "Parameter sweep to CSV");
  e->add_option("--family", exp.family, "lb-single|lb-multi|reduction|bad-example|random")
      ->required();
  e->add_option("--range", exp.range, "LO:HI")->required();
  e->add_option("--csv", exp.csv, "Output CSV file")->required();
  e->add_option("--sigma", exp.sigma, "Number of sources (lb-multi)");
  e->add_option("--p", exp.p, "Edge probability (random)");
  e->add_option("--seed", exp.seed, "Seed (random)");
  e->add_option("--setcover", exp.setcover, "Set-cover instance file (reduction)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (b->parsed()) return run_build(build);
    if (v->parsed()) return run_verify(verify);
    if (gcmd->parsed()) return run_gen(gen);
    if (o->parsed()) return run_oracle(oracle);
    if (e->parsed()) return run_experiment_cmd(exp);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
