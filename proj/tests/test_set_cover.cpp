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

#include <random>
#include <vector>

#include "ftbfs/set_cover.hpp"
#include "oracles.hpp"

using namespace ftbfs;

namespace {

SetCoverInstance fig4() { return SetCoverInstance(4, {{0, 2, 3}, {0, 2}, {1, 3}, {2}, {0, 3}}); }

}  // namespace

TEST_CASE("four elements, five sets") {
  SetCoverInstance inst = fig4();
  auto greedy = greedy_set_cover(inst);
  CHECK(greedy == std::vector<std::size_t>{0, 2});
  CHECK(inst.covers(greedy));
  auto best = exact_set_cover(inst);
  REQUIRE(best.has_value());
  CHECK(best->size() == 2);
  std::vector<std::size_t> s2s3{1, 2};
  CHECK(inst.covers(s2s3));
}

TEST_CASE("trivial instances") {
  SetCoverInstance whole(3, {{0, 1, 2}, {1}});
  CHECK(greedy_set_cover(whole) == std::vector<std::size_t>{0});
  SetCoverInstance forced(1, {{}, {0}});
  CHECK(greedy_set_cover(forced) == std::vector<std::size_t>{1});
  SetCoverInstance empty(0, {{}});
  CHECK(greedy_set_cover(empty).empty());
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(SetCoverInstance(2, {{0}}), SetCoverError);
  CHECK_THROWS_AS(SetCoverInstance(2, {{0, 2}, {1}}), SetCoverError);
}

TEST_CASE("file format") {
  SetCoverInstance inst = parse_set_cover("# four elements\n4 5\n0 2 3\n0 2\n1 3\n2\n0 3\n");
  CHECK(inst.universe_size() == 4);
  CHECK(inst.num_sets() == 5);
  CHECK(write_set_cover(inst) == "4 5\n0 2 3\n0 2\n1 3\n2\n0 3\n");
  CHECK(parse_set_cover("1 2\n\n0\n").num_sets() == 2);
  CHECK_THROWS_AS(parse_set_cover("2 1\n0 1\n0\n"), SetCoverError);
  CHECK_THROWS_AS(parse_set_cover("2 2\n0 1\n"), SetCoverError);
  CHECK_THROWS_AS(parse_set_cover("2 1\n0 5\n"), SetCoverError);
}

TEST_CASE("greedy stays within the harmonic factor") {
  CHECK(harmonic_number(1) == doctest::Approx(1.0));
  CHECK(harmonic_number(4) == doctest::Approx(25.0 / 12.0));
  std::mt19937_64 rng(2024);
  int tested = 0;
  while (tested < 100) {
    const std::size_t n = 1 + rng() % 12;
    const std::size_t m = 1 + rng() % 12;
    std::vector<std::vector<std::uint32_t>> sets(m);
    for (auto& s : sets) {
      for (std::uint32_t x = 0; x < n; ++x) {
        if (rng() % 3 == 0) s.push_back(x);
      }
    }
    try {
      SetCoverInstance inst(n, sets);
      auto greedy = greedy_set_cover(inst);
      CHECK(inst.covers(greedy));
      const std::size_t opt = oracle::brute_cover_size(n, sets);
      CHECK(exact_set_cover(inst)->size() == opt);
      CHECK(static_cast<double>(greedy.size()) <= harmonic_number(n) * static_cast<double>(opt));
      ++tested;
    } catch (const SetCoverError&) {
      // uncoverable draw
    }
  }
}
