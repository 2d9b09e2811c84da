// Copyright 2026 The wafmatrix Authors
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

#ifndef WAFMATRIX_BENCH_HPP_
#define WAFMATRIX_BENCH_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "wafmatrix/semiring.hpp"

namespace waf {

// Informal wall-clock measurements of the grounded builder on random
// families. Used to eyeball polynomial growth, not to prove a bound.

struct BenchOptions {
  std::vector<std::size_t> sizes = {25, 50, 100, 200};
  double density = 0.1;
  std::size_t samples = 5;
  std::uint64_t seed = 1;
  SemiringKind semiring = SemiringKind::kWeighted;
};

struct BenchRow {
  std::size_t arguments;
  std::uint64_t seed;
  std::size_t attacks;
  std::size_t result_size;
  /// Builder output re-checked with the complete checker, outside the timing.
  bool complete;
  double millis;
};

struct BenchSummary {
  std::vector<BenchRow> rows;
  std::vector<double> median_millis;  // one per size
  /// Least-squares slope of log(median) against log(n).
  double loglog_slope = 0.0;
};

BenchSummary RunGroundedBench(const BenchOptions& options);

/// "task,semiring,n,density,seed,attacks,result_size,complete,millis" rows.
std::string FormatBenchCsv(const BenchOptions& options, const BenchSummary& summary);

}  // namespace waf

#endif  // WAFMATRIX_BENCH_HPP_
