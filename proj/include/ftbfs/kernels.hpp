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

// Data-parallel inner loops with a scalar reference implementation and an
// AVX2 variant selected at runtime. Both backends must return identical
// results for identical inputs.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace ftbfs::kernels {

enum class Backend { kScalar, kAvx2 };

std::string_view to_string(Backend backend);

/// True when the running CPU (and this build) can execute the backend.
bool backend_supported(Backend backend);

/// Backend used by the dispatching entry points. Defaults to the widest
/// supported backend; FTBFS_SIMD=scalar forces the scalar one.
Backend active_backend();

/// Returns false (and changes nothing) if the backend is unsupported.
bool set_backend(Backend backend);

/// popcount(set & ~covered) over equally sized word arrays.
std::size_t count_uncovered(std::span<const std::uint64_t> set,
                            std::span<const std::uint64_t> covered);

/// Index of the first i with a[i] != b[i], or a.size() when equal.
std::size_t first_mismatch(std::span<const std::int32_t> a, std::span<const std::int32_t> b);

/// True iff (mask & subset) != 0 for every mask.
bool all_masks_hit(std::span<const std::uint64_t> masks, std::uint64_t subset);

namespace scalar {
std::size_t count_uncovered(const std::uint64_t* set, const std::uint64_t* covered,
                            std::size_t words);
std::size_t first_mismatch(const std::int32_t* a, const std::int32_t* b, std::size_t n);
bool all_masks_hit(const std::uint64_t* masks, std::size_t count, std::uint64_t subset);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define FTBFS_HAVE_AVX2_KERNELS 1
namespace avx2 {
std::size_t count_uncovered(const std::uint64_t* set, const std::uint64_t* covered,
                            std::size_t words);
std::size_t first_mismatch(const std::int32_t* a, const std::int32_t* b, std::size_t n);
bool all_masks_hit(const std::uint64_t* masks, std::size_t count, std::uint64_t subset);
}  // namespace avx2
#endif

}  // namespace ftbfs::kernels
