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

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "ftbfs/kernels.hpp"

namespace ftbfs::kernels {

namespace {

Backend detect_default() {
  if (const char* forced = std::getenv("FTBFS_SIMD")) {
    if (std::string(forced) == "scalar") return Backend::kScalar;
  }
  return backend_supported(Backend::kAvx2) ? Backend::kAvx2 : Backend::kScalar;
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> backend{detect_default()};
  return backend;
}

}  // namespace

std::string_view to_string(Backend backend) {
  return backend == Backend::kAvx2 ? "avx2" : "scalar";
}

bool backend_supported(Backend backend) {
  switch (backend) {
    case Backend::kScalar:
      return true;
    case Backend::kAvx2:
#if defined(FTBFS_HAVE_AVX2_KERNELS)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
      return false;
#endif
  }
  return false;
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

bool set_backend(Backend backend) {
  if (!backend_supported(backend)) return false;
  current().store(backend, std::memory_order_relaxed);
  return true;
}

std::size_t count_uncovered(std::span<const std::uint64_t> set,
                            std::span<const std::uint64_t> covered) {
  if (set.size() != covered.size()) throw std::invalid_argument("count_uncovered: size mismatch");
#if defined(FTBFS_HAVE_AVX2_KERNELS)
  if (active_backend() == Backend::kAvx2) {
    return avx2::count_uncovered(set.data(), covered.data(), set.size());
  }
#endif
  return scalar::count_uncovered(set.data(), covered.data(), set.size());
}

std::size_t first_mismatch(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
  if (a.size() != b.size()) throw std::invalid_argument("first_mismatch: size mismatch");
#if defined(FTBFS_HAVE_AVX2_KERNELS)
  if (active_backend() == Backend::kAvx2) return avx2::first_mismatch(a.data(), b.data(), a.size());
#endif
  return scalar::first_mismatch(a.data(), b.data(), a.size());
}

bool all_masks_hit(std::span<const std::uint64_t> masks, std::uint64_t subset) {
#if defined(FTBFS_HAVE_AVX2_KERNELS)
  if (active_backend() == Backend::kAvx2) {
    return avx2::all_masks_hit(masks.data(), masks.size(), subset);
  }
#endif
  return scalar::all_masks_hit(masks.data(), masks.size(), subset);
}

}  // namespace ftbfs::kernels
