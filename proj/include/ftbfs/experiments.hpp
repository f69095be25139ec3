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

// Parameter sweeps over the generated families, emitted as CSV.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ftbfs/set_cover.hpp"

namespace ftbfs {

/// One sweep point. CSV columns, in order:
///   family,params,n,m,exact_edges,approx_edges,bound,forced_edges,optimum,
///   verified,exact_ms,approx_ms
/// `bound` is the analytic size bound of the exact edge-model builder.
/// `forced_edges` counts edges of the instance's forced families that
/// necessary_edges confirms. `optimum` is the brute-force minimum when the
/// search space is small enough, empty otherwise.
struct ExperimentRow {
  std::string family;
  std::string params;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t exact_edges = 0;
  std::size_t approx_edges = 0;
  std::size_t bound = 0;
  std::size_t forced_edges = 0;
  std::optional<std::size_t> optimum;
  bool verified = false;
  double exact_ms = 0.0;
  double approx_ms = 0.0;
};

struct ExperimentOptions {
  std::size_t sigma = 2;          // lb-multi
  double edge_prob = 0.3;         // random
  std::uint64_t seed = 1;         // random
  std::optional<SetCoverInstance> setcover;  // reduction; default is a 4-element, 5-set instance
  bool with_approx = true;
};

/// Sweeps the family's primary parameter over [lo, hi]: d for lb-single,
/// lb-multi and bad-example, n for random, R for reduction. Throws
/// std::invalid_argument for unknown families or an empty range.
std::vector<ExperimentRow> run_experiment(std::string_view family, std::size_t lo,
                                          std::size_t hi, const ExperimentOptions& options = {});

/// Least-squares slope of log(y) against log(x). Throws
/// std::invalid_argument for fewer than 4 points, mismatched lengths or
/// nonpositive values.
double fit_scaling(std::span<const double> x, std::span<const double> y);

std::string csv_header();
std::string to_csv(std::span<const ExperimentRow> rows);

/// The 4-element, 5-set instance used when no instance is supplied.
SetCoverInstance default_reduction_instance();

}  // namespace ftbfs
