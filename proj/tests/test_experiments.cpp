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
#include <vector>

#include "ftbfs/experiments.hpp"

using namespace ftbfs;

TEST_CASE("fitting a power law") {
  std::vector<double> x{2, 5, 11, 40, 100};
  std::vector<double> y;
  for (double v : x) y.push_back(3.0 * std::pow(v, 1.5));
  CHECK(fit_scaling(x, y) == doctest::Approx(1.5).epsilon(1e-9));
  std::vector<double> flat(x.size(), 7.0);
  CHECK(fit_scaling(x, flat) == doctest::Approx(0.0).epsilon(1e-12));
  std::vector<double> three{1, 2, 3};
  CHECK_THROWS(fit_scaling(three, three));
  std::vector<double> bad{1, 2, 0, 4};
  std::vector<double> ok{1, 2, 3, 4};
  CHECK_THROWS(fit_scaling(bad, ok));
}

TEST_CASE("lower-bound sweep records the block") {
  auto rows = run_experiment("lb-single", 2, 4);
  REQUIRE(rows.size() == 3);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::size_t d = i + 2;
    CHECK(rows[i].forced_edges == d * 3 * (d * d + 7 * d));
    CHECK(rows[i].verified);
    CHECK(rows[i].exact_edges <= rows[i].bound);
  }
}

TEST_CASE("bad-example ratio grows") {
  auto rows = run_experiment("bad-example", 3, 6);
  double prev = 0.0;
  for (const auto& r : rows) {
    const double ratio = static_cast<double>(r.exact_edges) / static_cast<double>(r.approx_edges);
    CHECK(ratio > prev);
    prev = ratio;
  }
}

TEST_CASE("random sweep verifies") {
  auto rows = run_experiment("random", 10, 20);
  for (const auto& r : rows) CHECK(r.verified);
}

TEST_CASE("reduction sweep hits the identity") {
  auto rows = run_experiment("reduction", 1, 2);
  REQUIRE(rows.size() == 2);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    REQUIRE(rows[i].optimum.has_value());
    CHECK(*rows[i].optimum == rows[i].forced_edges + 2 * (i + 1));
  }
}

TEST_CASE("csv layout") {
  ExperimentRow r;
  r.family = "random";
  r.params = "n=5;p=0.3;seed=1";
  r.n = 5;
  r.m = 6;
  r.verified = true;
  std::vector<ExperimentRow> rows{r};
  CHECK(to_csv(rows) == csv_header() + "random,n=5;p=0.3;seed=1,5,6,0,0,0,0,,true,0.000,0.000\n");
  CHECK_THROWS(run_experiment("nope", 1, 2));
  CHECK_THROWS(run_experiment("random", 5, 4));
}
