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

#include "wafmatrix/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>

#include "wafmatrix/builders.hpp"
#include "wafmatrix/checkers.hpp"
#include "wafmatrix/wapx.hpp"

namespace waf {

BenchSummary RunGroundedBench(const BenchOptions& options) {
  BenchSummary summary;
  std::vector<double> xs, ys;
  for (std::size_t n : options.sizes) {
    std::vector<double> times;
    for (std::size_t k = 0; k < options.samples; ++k) {
      GeneratorSpec spec;
      spec.arguments = n;
      spec.density = options.density;
      spec.semiring = Semiring(options.semiring);
      spec.weights = DefaultWeightRange(options.semiring);
      spec.seed = options.seed + k;
      const Framework f = GenerateFramework(spec);
      const auto start = std::chrono::steady_clock::now();
      BuildOptions unchecked;
      unchecked.verify = false;
      const BuildResult r = BuildWGrounded(f, unchecked);
      const auto stop = std::chrono::steady_clock::now();
      const double ms = std::chrono::duration<double, std::milli>(stop - start).count();
      times.push_back(ms);
      summary.rows.push_back({n, spec.seed, f.attack_count(), r.extension.size(),
                              static_cast<bool>(IsWComplete(f, r.extension)), ms});
    }
    std::sort(times.begin(), times.end());
    const double median = times.empty() ? 0.0 : times[times.size() / 2];
    summary.median_millis.push_back(median);
    xs.push_back(std::log(static_cast<double>(n)));
    ys.push_back(std::log(std::max(median, 1e-6)));
  }
  if (xs.size() >= 2) {
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      mx += xs[i];
      my += ys[i];
    }
    mx /= static_cast<double>(xs.size());
    my /= static_cast<double>(ys.size());
    double num = 0, den = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      num += (xs[i] - mx) * (ys[i] - my);
      den += (xs[i] - mx) * (xs[i] - mx);
    }
    summary.loglog_slope = den > 0 ? num / den : 0.0;
  }
  return summary;
}

std::string FormatBenchCsv(const BenchOptions& options, const BenchSummary& summary) {
  std::string out = "task,semiring,n,density,seed,attacks,result_size,complete,millis\n";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", options.density);
  const std::string density = buf;
  const std::string semiring(SemiringName(options.semiring));
  for (const BenchRow& r : summary.rows) {
    std::snprintf(buf, sizeof buf, "%.3f", r.millis);
    out += "ground," + semiring + "," + std::to_string(r.arguments) + "," + density +
           "," + std::to_string(r.seed) + "," + std::to_string(r.attacks) + "," +
           std::to_string(r.result_size) + "," + (r.complete ? "yes" : "no") + "," + buf +
           "\n";
  }
  return out;
}

}  // namespace waf
