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

#ifndef WAFMATRIX_BUILDERS_HPP_
#define WAFMATRIX_BUILDERS_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wafmatrix/framework.hpp"
#include "wafmatrix/oracle.hpp"

namespace waf {

/// One round of an incremental builder. All sets are positions in the
/// original framework.
struct BuildRound {
  ArgSet seed;         // initial arguments (grounded) or selected set (preferred)
  ArgSet accepted;     // members of seed joined to the extension this round
  ArgSet rejected;     // seed members never w-defended during the round
  ArgSet remaining;    // what is left of the framework after the round
  ArgSet accumulated;  // the extension after the round
  std::size_t fixpoint_passes = 0;
};

struct BuildTrace {
  std::vector<BuildRound> rounds;
  ArgSet result;
};

struct BuildResult {
  ArgSet extension;
  BuildTrace trace;
};

/// Order in which pending seed members are re-examined by the fixpoint pass.
enum class ScanOrder { kCanonical, kReversed };

struct BuildOptions {
  ScanOrder order = ScanOrder::kCanonical;
  /// Grounded: result must be w-complete. Preferred: result must be
  /// w-admissible with no w-admissible proper superset. Failure throws
  /// kInternalInconsistency.
  bool verify = true;
};

/**
 * Builds the w-grounded extension round by round: start from the initial
 * arguments I_1, then repeatedly take the initial arguments of what is left,
 * keep those w-defended (in F) by the extension so far, retry the rest until
 * nothing changes, and drop the seed together with everything it attacks.
 * Stops once nothing is left or a round accepts nothing.
 */
BuildResult BuildWGrounded(const Framework& f, const BuildOptions& options = {});

/// Picks a nonempty w-admissible set of the given sub-framework (positions
/// local to it), or nullopt when it has none. `round` starts at 1.
using Selector =
    std::function<std::optional<ArgSet>(const Framework& sub, std::size_t round)>;

/// Lexicographically first nonempty w-admissible set, comparing sorted
/// member lists.
Selector FirstAdmissibleSelector();

/// Returns `first` in round 1, defers to `then` afterwards.
Selector SeededSelector(ArgSet first, Selector then = FirstAdmissibleSelector());

/**
 * Builds a w-preferred extension with the same round structure as the
 * grounded builder, but each round's seed is whatever nonempty w-admissible
 * set of the remainder the selector picks. Throws kSelectorContract when the
 * selector returns an empty or non-admissible set.
 */
BuildResult BuildWPreferred(const Framework& f, const Selector& selector,
                            const BuildOptions& options = {});

/// Outcome of exploring every selector choice.
struct PreferredEnumeration {
  /// Every distinct builder output, shortlex order.
  std::vector<ArgSet> outputs;
  /// The inclusion-maximal outputs, shortlex order.
  std::vector<ArgSet> maximal;
  std::size_t branches = 0;
};

/// Runs the preferred builder over every choice of nonempty w-admissible set
/// at every round. Throws kOracleLimit past `limit` arguments.
PreferredEnumeration ExploreWPreferred(const Framework& f,
                                       std::size_t limit = kDefaultOracleLimit);

/// Every distinct output of ExploreWPreferred.
std::vector<ArgSet> EnumerateWPreferred(const Framework& f,
                                        std::size_t limit = kDefaultOracleLimit);

/// Indented text, one round per line.
std::string FormatTrace(const Framework& f, const BuildTrace& trace);

}  // namespace waf

#endif  // WAFMATRIX_BUILDERS_HPP_
