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

#include "ftbfs/kernels.hpp"

#if defined(FTBFS_HAVE_AVX2_KERNELS)

#include <immintrin.h>

#include <bit>

#define FTBFS_AVX2 __attribute__((target("avx2,popcnt")))

namespace ftbfs::kernels::avx2 {

namespace {

// Per-byte popcount through a nibble lookup table, summed per 64-bit lane.
FTBFS_AVX2 inline __m256i popcount_epi64(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i lo = _mm256_and_si256(v, low_mask);
  __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo),
                                   _mm256_shuffle_epi8(lookup, hi));
  return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

}  // namespace

FTBFS_AVX2 std::size_t count_uncovered(const std::uint64_t* set,
                                       const std::uint64_t* covered, std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(set + i));
    __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(covered + i));
    acc = _mm256_add_epi64(acc, popcount_epi64(_mm256_andnot_si256(c, s)));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::size_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < words; ++i) total += static_cast<std::size_t>(std::popcount(set[i] & ~covered[i]));
  return total;
}

FTBFS_AVX2 std::size_t first_mismatch(const std::int32_t* a, const std::int32_t* b,
                                      std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    auto eq = static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(va, vb))));
    if (eq != 0xffu) return i + static_cast<std::size_t>(std::countr_one(eq));
  }
  for (; i < n; ++i) {
    if (a[i] != b[i]) return i;
  }
  return n;
}

FTBFS_AVX2 bool all_masks_hit(const std::uint64_t* masks, std::size_t count,
                              std::uint64_t subset) {
  const __m256i probe = _mm256_set1_epi64x(static_cast<long long>(subset));
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(masks + i));
    __m256i missed = _mm256_cmpeq_epi64(_mm256_and_si256(m, probe), zero);
    if (!_mm256_testz_si256(missed, missed)) return false;
  }
  for (; i < count; ++i) {
    if ((masks[i] & subset) == 0) return false;
  }
  return true;
}

}  // namespace ftbfs::kernels::avx2

#endif
