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

#ifndef WAFMATRIX_FRAMEWORK_HPP_
#define WAFMATRIX_FRAMEWORK_HPP_

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "wafmatrix/semiring.hpp"

namespace waf {

using ArgIndex = std::size_t;

/// A duplicate-free set of argument positions, always kept in ascending
/// (canonical framework) order.
class ArgSet {
 public:
  ArgSet() = default;
  ArgSet(std::initializer_list<ArgIndex> members);
  explicit ArgSet(std::vector<ArgIndex> members);

  static ArgSet FromMask(unsigned long long mask);

  const std::vector<ArgIndex>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(ArgIndex a) const;
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  /// Only valid while every member is below 64.
  unsigned long long mask() const;

  ArgSet with(ArgIndex a) const;
  ArgSet united(const ArgSet& other) const;
  ArgSet intersected(const ArgSet& other) const;
  ArgSet minus(const ArgSet& other) const;
  bool is_subset_of(const ArgSet& other) const;

  friend bool operator==(const ArgSet&, const ArgSet&) = default;
  /// Shortlex: smaller sets first, then lexicographic on positions.
  friend bool operator<(const ArgSet& a, const ArgSet& b);

 private:
  std::vector<ArgIndex> members_;
};

/// Square matrix of semiring values with labelled rows/columns.
struct LabelledMatrix {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<Value> entries;  // row-major

  std::size_t rows() const { return row_labels.size(); }
  std::size_t cols() const { return col_labels.size(); }
  const Value& at(std::size_t r, std::size_t c) const {
    return entries[r * cols() + c];
  }
};

/**
 * A semiring-based weighted argumentation framework.
 *
 * The framework owns an n x n weight matrix; entry (s, t) is W(args[s],
 * args[t]). The attack relation is not stored separately: (a, b) is an
 * attack iff W(a, b) <_S top. Instances are immutable once built.
 */
class Framework {
 public:
  struct Attack {
    std::string source;
    std::string target;
    Value weight;
  };

  explicit Framework(Semiring semiring) : semiring_(semiring) {}

  /// All weights start at top. Throws kDuplicateArgument / kSyntax on names.
  Framework(Semiring semiring, std::vector<std::string> names);

  /// Convenience constructor for tests and fixtures.
  Framework(Semiring semiring, std::vector<std::string> names,
            const std::vector<Attack>& attacks);

  /// Row-major weights; size must be names.size()^2.
  Framework(Semiring semiring, std::vector<std::string> names,
            std::vector<Value> weights);

  const Semiring& semiring() const noexcept { return semiring_; }
  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(ArgIndex a) const;
  ArgIndex index_of(std::string_view name) const;
  bool has(std::string_view name) const;

  const Value& weight(ArgIndex from, ArgIndex to) const;
  bool attacks(ArgIndex from, ArgIndex to) const;
  const std::vector<ArgIndex>& attackers(ArgIndex a) const;
  const std::vector<ArgIndex>& attacked(ArgIndex a) const;
  std::size_t attack_count() const;

  ArgSet all() const;
  ArgSet set_of(std::initializer_list<std::string_view> names) const;
  ArgSet set_of(const std::vector<std::string>& names) const;
  /// Renders as "[a,c]".
  std::string format(const ArgSet& set) const;
  /// Throws kForeignArgument when a member is not a position of this framework.
  void require_members(const ArgSet& set) const;

  const std::vector<Value>& weights() const noexcept { return weights_; }

  friend bool operator==(const Framework& a, const Framework& b);

 private:
  void index_names();
  void derive_relation();

  Semiring semiring_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, ArgIndex> index_;
  std::vector<Value> weights_;
  std::vector<char> attack_;
  std::vector<std::vector<ArgIndex>> attackers_;
  std::vector<std::vector<ArgIndex>> attacked_;
};

bool IsValidArgumentName(std::string_view name);

/// W(B, D): times-fold over every ordered pair (b, d); top if B or D is empty.
Value SetAttackWeight(const Framework& f, const ArgSet& from, const ArgSet& to);

/// R+(Z): arguments attacked by some member of Z.
ArgSet AttackedBy(const Framework& f, const ArgSet& z);
/// R-(Z): arguments attacking some member of Z.
ArgSet AttackersOf(const Framework& f, const ArgSet& z);

ArgSet InitialArguments(const Framework& f);

/// B w-defends b iff for every attacker a of b, W(B, a) <=_S W(a, B u {b}).
bool WDefends(const Framework& f, const ArgSet& defenders, ArgIndex b);

/// Every argument of f w-defended by z.
ArgSet DefendedSet(const Framework& f, const ArgSet& z);

/// Matrix of f for the given permutation of all arguments; absent attacks
/// are top (printed as 0 under the weighted semiring).
LabelledMatrix MatrixOf(const Framework& f, const std::vector<ArgIndex>& permutation);
LabelledMatrix MatrixOf(const Framework& f);

/// F restricted to B: the weight sub-matrix over B in canonical order.
Framework Restrict(const Framework& f, const ArgSet& b);

}  // namespace waf

#endif  // WAFMATRIX_FRAMEWORK_HPP_
