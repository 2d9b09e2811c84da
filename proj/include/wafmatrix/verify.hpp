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

#ifndef WAFMATRIX_VERIFY_HPP_
#define WAFMATRIX_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wafmatrix/framework.hpp"
#include "wafmatrix/oracle.hpp"
#include "wafmatrix/wapx.hpp"

namespace waf {

/// One subset on which a decision route and the oracle differ.
struct Discrepancy {
  std::string framework;  // label of the framework
  std::string subset;     // e.g. "[a0,a2]"
  std::string semantics;  // cf, adm, stb, com
  std::string route;      // default, paper-faithful, complete-by-extension
  bool oracle = false;
  bool route_verdict = false;
};

/**
 * The discrepancy ledger of a sweep. `disagreements` holds default-mode
 * checker disagreements and must stay empty. `ledger` itemises every case
 * where a literal reading differs from the oracle: the paper-faithful stable
 * and complete deciders, and the "no admissible one-argument extension"
 * reading of completeness.
 */
struct SweepReport {
  std::size_t frameworks = 0;
  std::size_t subsets = 0;
  std::vector<Discrepancy> disagreements;
  std::vector<Discrepancy> ledger;
};

/// Compares every subset of f. Throws kOracleLimit past `limit`.
void CompareWithOracle(const Framework& f, const std::string& label,
                       SweepReport& report,
                       std::size_t limit = kDefaultOracleLimit);

struct SweepOptions {
  std::size_t count = 500;
  std::size_t max_arguments = 8;
  std::uint64_t seed = 1;
  /// Cycled through in order; all five instances by default.
  std::vector<SemiringKind> semirings = {
      SemiringKind::kBoolean, SemiringKind::kFuzzy, SemiringKind::kBottleneck,
      SemiringKind::kProbabilistic, SemiringKind::kWeighted};
};

/// The i-th framework of a seeded sweep: instance semirings[i % k], size
/// (i / k) % (max_arguments + 1), density cycling 0.2/0.35/0.5, coarse weight
/// grids (1..5, or 0.0..1.0) so ties are frequent.
GeneratorSpec SweepFramework(const SweepOptions& options, std::size_t i);

SweepReport RandomSweep(const SweepOptions& options);

/// Summary followed by one line per disagreement and per ledger entry.
std::string FormatReport(const SweepReport& report);

}  // namespace waf

#endif  // WAFMATRIX_VERIFY_HPP_
