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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ftbfs {

class SetCoverError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Set-cover instance over elements 0..universe_size-1. Each set carries an
/// external key (a neighbor vertex for per-vertex instances, the set index
/// for standalone ones). Sets are also kept as bitsets for the greedy loop.
class SetCoverInstance {
 public:
  SetCoverInstance() = default;
  /// Throws SetCoverError if a set names an element outside the universe or
  /// some element belongs to no set.
  SetCoverInstance(std::size_t universe_size, std::vector<std::vector<std::uint32_t>> sets,
                   std::vector<std::uint64_t> keys = {});

  std::size_t universe_size() const { return universe_size_; }
  std::size_t num_sets() const { return sets_.size(); }
  std::span<const std::uint32_t> set(std::size_t i) const { return sets_[i]; }
  std::uint64_t key(std::size_t i) const { return keys_[i]; }
  std::size_t words() const { return words_; }
  std::span<const std::uint64_t> bits(std::size_t i) const {
    return {bits_.data() + i * words_, words_};
  }

  /// True iff the union of the chosen sets is the universe.
  bool covers(std::span<const std::size_t> chosen) const;

 private:
  std::size_t universe_size_ = 0;
  std::vector<std::vector<std::uint32_t>> sets_;
  std::vector<std::uint64_t> keys_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Greedy cover: repeatedly takes the set with the most uncovered elements,
/// lowest index on ties. Returns set indices in selection order. The result
/// is at most H(universe_size) times the optimum.
std::vector<std::size_t> greedy_set_cover(const SetCoverInstance& inst);

/// Minimum cover by exhaustive search over subsets in increasing size;
/// nullopt when there are more than max_sets sets.
std::optional<std::vector<std::size_t>> exact_set_cover(const SetCoverInstance& inst,
                                                        std::size_t max_sets = 20);

/// H(k) = 1 + 1/2 + ... + 1/k.
double harmonic_number(std::size_t k);

/// "N M" then M lines of space-separated 0-based element indices.
SetCoverInstance parse_set_cover(std::string_view text);
std::string write_set_cover(const SetCoverInstance& inst);

}  // namespace ftbfs
