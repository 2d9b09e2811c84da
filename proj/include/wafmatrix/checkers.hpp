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

#ifndef WAFMATRIX_CHECKERS_HPP_
#define WAFMATRIX_CHECKERS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wafmatrix/framework.hpp"

namespace waf {

enum class BlockKind { kCf, kS, kSbar, kC };

/**
 * Index-selected sub-matrix of the framework matrix for a candidate set Z.
 *
 *   cf:   rows Z,     cols Z
 *   s:    rows Z,     cols A\Z
 *   sbar: rows A\Z,   cols Z
 *   c:    rows A\Z,   cols A\Z
 *
 * Row and column positions are framework positions in canonical order.
 */
struct SubBlock {
  BlockKind kind;
  std::vector<ArgIndex> rows;
  std::vector<ArgIndex> cols;
  std::vector<Value> entries;  // row-major, rows.size() x cols.size()

  const Value& at(std::size_t r, std::size_t c) const {
    return entries[r * cols.size() + c];
  }
};

SubBlock CfSubBlock(const Framework& f, const ArgSet& z);
SubBlock SSubBlock(const Framework& f, const ArgSet& z);
SubBlock SbarSubBlock(const Framework& f, const ArgSet& z);
SubBlock CSubBlock(const Framework& f, const ArgSet& z);

/// Which reading of the characterisation theorems a decider uses.
enum class CheckMode {
  /// Existential stability and strict defeat in the completeness test; agrees
  /// with the definitional oracle.
  kDefault,
  /// Literal theorem conditions: every outside column of the s-block free of
  /// top, and a non-strict defeat test carrying j_p's counter-attack.
  kPaperFaithful,
};

/// The rule that produced a verdict.
enum class Rule {
  kConflictFree,
  kAdmissible,
  kStableExistential,
  kStableUniversal,
  kCompleteDefence,
  kCompleteTheorem,
  kPreferredMaximal,
  kGroundedLeast,
};

std::string_view RuleName(Rule rule);

struct Witness {
  ArgIndex first;
  std::optional<ArgIndex> second;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
  bool accepted = true;
  std::optional<Witness> witness;  // set iff !accepted
  Rule rule = Rule::kConflictFree;

  static Verdict Accept(Rule rule) { return {true, std::nullopt, rule}; }
  static Verdict Reject(Rule rule, Witness w) { return {false, w, rule}; }
  explicit operator bool() const { return accepted; }
};

/// Every entry of the cf-block is top. Witness: first attacking pair.
Verdict IsWConflictFree(const Framework& f, const ArgSet& z);

/// Conflict-free, and for every outside j: fold of s-column j <=_S fold of
/// W(j, i) over i in Z. Witness: first outside j that is not beaten.
Verdict IsWAdmissible(const Framework& f, const ArgSet& z);

/// Admissible, plus every outside argument attacked by some member (default)
/// or by every member (paper-faithful). Witness: first offending outsider.
Verdict IsWStable(const Framework& f, const ArgSet& z,
                  CheckMode mode = CheckMode::kDefault);

/// Admissible, and no outside argument is w-defended by Z. Witness: first
/// outsider that Z w-defends (default) or that passes the literal theorem
/// conditions (paper-faithful).
Verdict IsWComplete(const Framework& f, const ArgSet& z,
                    CheckMode mode = CheckMode::kDefault);

}  // namespace waf

#endif  // WAFMATRIX_CHECKERS_HPP_
