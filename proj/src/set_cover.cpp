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

#include "ftbfs/set_cover.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

#include "ftbfs/kernels.hpp"

namespace ftbfs {

SetCoverInstance::SetCoverInstance(std::size_t universe_size,
                                   std::vector<std::vector<std::uint32_t>> sets,
                                   std::vector<std::uint64_t> keys)
    : universe_size_(universe_size), sets_(std::move(sets)), keys_(std::move(keys)) {
  if (keys_.empty()) {
    keys_.resize(sets_.size());
    for (std::size_t i = 0; i < keys_.size(); ++i) keys_[i] = i;
  }
  if (keys_.size() != sets_.size()) throw SetCoverError("one key per set required");
  words_ = (universe_size_ + 63) / 64;
  bits_.assign(words_ * sets_.size(), 0);
  std::vector<std::uint64_t> seen(words_, 0);
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    auto& s = sets_[i];
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (std::uint32_t x : s) {
      if (x >= universe_size_) {
        throw SetCoverError("set " + std::to_string(i) + " names element " + std::to_string(x) +
                            " outside the universe");
      }
      bits_[i * words_ + x / 64] |= std::uint64_t{1} << (x % 64);
      seen[x / 64] |= std::uint64_t{1} << (x % 64);
    }
  }
  for (std::size_t x = 0; x < universe_size_; ++x) {
    if (!(seen[x / 64] >> (x % 64) & 1)) {
      throw SetCoverError("element " + std::to_string(x) + " belongs to no set");
    }
  }
}

bool SetCoverInstance::covers(std::span<const std::size_t> chosen) const {
  std::vector<std::uint64_t> acc(words_, 0);
  for (std::size_t i : chosen) {
    auto b = bits(i);
    for (std::size_t w = 0; w < words_; ++w) acc[w] |= b[w];
  }
  std::size_t covered = 0;
  for (std::uint64_t w : acc) covered += static_cast<std::size_t>(std::popcount(w));
  return covered == universe_size_;
}

std::vector<std::size_t> greedy_set_cover(const SetCoverInstance& inst) {
  std::vector<std::size_t> chosen;
  std::vector<std::uint64_t> covered(inst.words(), 0);
  std::size_t remaining = inst.universe_size();
  std::vector<std::uint8_t> used(inst.num_sets(), 0);
  while (remaining > 0) {
    std::size_t best = inst.num_sets();
    std::size_t best_gain = 0;
    for (std::size_t i = 0; i < inst.num_sets(); ++i) {
      if (used[i]) continue;
      std::size_t gain = kernels::count_uncovered(inst.bits(i), covered);
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    // Coverability is checked at construction, so some set always gains.
    chosen.push_back(best);
    used[best] = 1;
    auto b = inst.bits(best);
    for (std::size_t w = 0; w < covered.size(); ++w) covered[w] |= b[w];
    remaining -= best_gain;
  }
  return chosen;
}

std::optional<std::vector<std::size_t>> exact_set_cover(const SetCoverInstance& inst,
                                                        std::size_t max_sets) {
  const std::size_t m = inst.num_sets();
  if (m > max_sets || m > 63) return std::nullopt;
  if (inst.universe_size() == 0) return std::vector<std::size_t>{};
  for (std::size_t k = 1; k <= m; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      if (inst.covers(idx)) return idx;
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

double harmonic_number(std::size_t k) {
  double h = 0.0;
  for (std::size_t i = 1; i <= k; ++i) h += 1.0 / static_cast<double>(i);
  return h;
}

namespace {

std::vector<std::uint64_t> numbers(std::string_view line, std::size_t line_no) {
  std::vector<std::uint64_t> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    std::uint64_t v = 0;
    auto r = std::from_chars(line.data() + i, line.data() + line.size(), v);
    if (r.ec != std::errc{}) {
      throw SetCoverError("set cover line " + std::to_string(line_no) + ": bad number");
    }
    out.push_back(v);
    i = static_cast<std::size_t>(r.ptr - line.data());
  }
  return out;
}

}  // namespace

SetCoverInstance parse_set_cover(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = end + 1;
  }
  std::size_t i = 0;
  while (i < lines.size() && !lines[i].empty() && lines[i].front() == '#') ++i;
  if (i == lines.size()) throw SetCoverError("set cover file: missing header");
  auto header = numbers(lines[i], i + 1);
  if (header.size() != 2) throw SetCoverError("set cover file: header must be 'N M'");
  const std::size_t universe = header[0];
  const std::size_t m = header[1];
  std::vector<std::vector<std::uint32_t>> sets;
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t line_idx = i + 1 + k;
    if (line_idx >= lines.size()) {
      throw SetCoverError("set cover file: expected " + std::to_string(m) + " set lines");
    }
    std::vector<std::uint32_t> s;
    for (auto x : numbers(lines[line_idx], line_idx + 1)) s.push_back(static_cast<std::uint32_t>(x));
    sets.push_back(std::move(s));
  }
  for (std::size_t k = i + 1 + m; k < lines.size(); ++k) {
    if (!lines[k].empty()) throw SetCoverError("set cover file: trailing data");
  }
  return SetCoverInstance(universe, std::move(sets));
}

std::string write_set_cover(const SetCoverInstance& inst) {
  std::string out = std::to_string(inst.universe_size()) + " " + std::to_string(inst.num_sets()) + "\n";
  for (std::size_t i = 0; i < inst.num_sets(); ++i) {
    bool first = true;
    for (std::uint32_t x : inst.set(i)) {
      if (!first) out += ' ';
      out += std::to_string(x);
      first = false;
    }
    out += '\n';
  }
  return out;
}

}  // namespace ftbfs
