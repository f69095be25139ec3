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

#include <bit>

#include "ftbfs/kernels.hpp"

namespace ftbfs::kernels::scalar {

std::size_t count_uncovered(const std::uint64_t* set, const std::uint64_t* covered,
                            std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) {
    total += static_cast<std::size_t>(std::popcount(set[i] & ~covered[i]));
  }
  return total;
}

std::size_t first_mismatch(const std::int32_t* a, const std::int32_t* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return i;
  }
  return n;
}

bool all_masks_hit(const std::uint64_t* masks, std::size_t count, std::uint64_t subset) {
  for (std::size_t i = 0; i < count; ++i) {
    if ((masks[i] & subset) == 0) return false;
  }
  return true;
}

}  // namespace ftbfs::kernels::scalar
