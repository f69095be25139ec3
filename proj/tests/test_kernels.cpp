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

#include "ftbfs/kernels.hpp"

using namespace ftbfs;

TEST_CASE("scalar kernels on small inputs") {
  std::vector<std::uint64_t> set{0b1011, ~std::uint64_t{0}};
  std::vector<std::uint64_t> cov{0b0001, 0};
  CHECK(kernels::scalar::count_uncovered(set.data(), cov.data(), 2) == 66);
  std::vector<std::int32_t> a{1, 2, 3}, b{1, 2, 4};
  CHECK(kernels::scalar::first_mismatch(a.data(), b.data(), 3) == 2);
  CHECK(kernels::scalar::first_mismatch(a.data(), a.data(), 3) == 3);
  std::vector<std::uint64_t> masks{0b011, 0b100};
  CHECK(kernels::scalar::all_masks_hit(masks.data(), 2, 0b101));
  CHECK_FALSE(kernels::scalar::all_masks_hit(masks.data(), 2, 0b011));
  CHECK(kernels::scalar::all_masks_hit(masks.data(), 0, 0));
}

TEST_CASE("backend selection") {
  CHECK(kernels::backend_supported(kernels::Backend::kScalar));
  const auto before = kernels::active_backend();
  CHECK(kernels::set_backend(kernels::Backend::kScalar));
  CHECK(kernels::active_backend() == kernels::Backend::kScalar);
  kernels::set_backend(before);
}

#if defined(FTBFS_HAVE_AVX2_KERNELS)
TEST_CASE("avx2 kernels agree with scalar") {
  if (!kernels::backend_supported(kernels::Backend::kAvx2)) {
    MESSAGE("AVX2 not available on this CPU");
    return;
  }
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t words = rng() % 40;
    std::vector<std::uint64_t> set(words), cov(words);
    for (auto& w : set) w = rng();
    for (auto& w : cov) w = trial % 3 == 0 ? 0 : rng();
    CHECK(kernels::avx2::count_uncovered(set.data(), cov.data(), words) ==
          kernels::scalar::count_uncovered(set.data(), cov.data(), words));

    const std::size_t n = rng() % 100;
    std::vector<std::int32_t> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = b[i] = static_cast<std::int32_t>(rng() % 5);
    if (n > 0 && trial % 2 == 0) b[rng() % n] += 1;
    CHECK(kernels::avx2::first_mismatch(a.data(), b.data(), n) ==
          kernels::scalar::first_mismatch(a.data(), b.data(), n));

    const std::size_t count = rng() % 30;
    std::vector<std::uint64_t> masks(count);
    for (auto& m : masks) m = std::uint64_t{1} << (rng() % 64) | std::uint64_t{1} << (rng() % 64);
    const std::uint64_t subset = rng() & rng();
    CHECK(kernels::avx2::all_masks_hit(masks.data(), count, subset) ==
          kernels::scalar::all_masks_hit(masks.data(), count, subset));
  }
}
#endif
