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

#ifndef WAFMATRIX_ORACLE_HPP_
#define WAFMATRIX_ORACLE_HPP_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "wafmatrix/framework.hpp"

namespace waf {

enum class Semantics { kCf, kAdm, kStb, kCom, kPrf, kGrd };

std::string_view SemanticsName(Semantics s);
std::optional<Semantics> SemanticsFromName(std::string_view name);

struct SemanticsLabel {
  bool cf = false;
  bool adm = false;
  bool stb = false;
  bool com = false;
  bool prf = false;
  bool grd = false;

  bool has(Semantics s) const;
  friend bool operator==(const SemanticsLabel&, const SemanticsLabel&) = default;
};

inline constexpr std::size_t kDefaultOracleLimit = 20;

/**
 * Labels for every subset of a framework, decided straight from the
 * definitions by exhaustive enumeration. Subsets are addressed by bitmask
 * (bit i = argument i); iteration is binary-counter order.
 *
 * w-complete is read as "w-admissible and containing every argument it
 * w-defends". The alternative reading, "no outside b with B u {b}
 * w-admissible", is available through complete_by_extension() so the two
 * can be compared.
 */
class Classification {
 public:
  Classification(std::size_t n, std::vector<SemanticsLabel> labels);

  std::size_t argument_count() const noexcept { return n_; }
  std::size_t subset_count() const noexcept { return labels_.size(); }

  const SemanticsLabel& label(unsigned long long mask) const;
  const SemanticsLabel& label(const ArgSet& set) const;

  /// Subsets carrying the flag, shortlex order.
  std::vector<ArgSet> extensions(Semantics s) const;

  /// Inclusion-minimal w-complete sets, shortlex order.
  const std::vector<ArgSet>& minimal_complete() const noexcept {
    return minimal_complete_;
  }
  /// False is the NO-LEAST-COMPLETE condition: no grd label is assigned.
  bool least_complete_exists() const noexcept {
    return minimal_complete_.size() == 1;
  }

  /// Admissible, and no b outside with B u {b} admissible.
  bool complete_by_extension(unsigned long long mask) const;

 private:
  std::size_t n_;
  std::vector<SemanticsLabel> labels_;
  std::vector<ArgSet> minimal_complete_;
};

/// Throws kOracleLimit when f has more than `limit` arguments.
Classification ClassifyAll(const Framework& f,
                           std::size_t limit = kDefaultOracleLimit);

std::vector<ArgSet> Enumerate(const Framework& f, Semantics s,
                              std::size_t limit = kDefaultOracleLimit);

/// Classical Dung semantics over the crisp attack relation only (weights
/// ignored): conflict-free, defence by counter-attack, admissible, complete
/// (contains everything it defends), preferred (maximal admissible), stable
/// (attacks every outsider), grounded (inclusion-minimal complete).
std::vector<SemanticsLabel> ClassicalLabels(
    const Framework& f, std::size_t limit = kDefaultOracleLimit);

}  // namespace waf

#endif  // WAFMATRIX_ORACLE_HPP_
