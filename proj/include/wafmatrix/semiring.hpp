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

#ifndef WAFMATRIX_SEMIRING_HPP_
#define WAFMATRIX_SEMIRING_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>

namespace waf {

/// The five supported c-semiring instances.
enum class SemiringKind : std::uint8_t {
  kBoolean,
  kFuzzy,
  kBottleneck,
  kProbabilistic,
  kWeighted,
};

std::string_view SemiringName(SemiringKind kind);
std::optional<SemiringKind> SemiringFromName(std::string_view name);

struct Infinity {
  friend bool operator==(Infinity, Infinity) { return true; }
};

/**
 * An element of the carrier of one semiring instance.
 *
 * The payload is a boolean, an exact nonnegative rational, or +infinity.
 * Every value remembers the instance it belongs to; binary operations on
 * values of different instances throw kInstanceMismatch.
 */
class Value {
 public:
  using Payload = std::variant<bool, mpq_class, Infinity>;

  Value(SemiringKind kind, bool b) : kind_(kind), payload_(b) {}
  Value(SemiringKind kind, mpq_class q) : kind_(kind), payload_(std::move(q)) {
    std::get<mpq_class>(payload_).canonicalize();
  }
  Value(SemiringKind kind, Infinity) : kind_(kind), payload_(Infinity{}) {}

  SemiringKind kind() const noexcept { return kind_; }
  const Payload& payload() const noexcept { return payload_; }

  bool is_bool() const noexcept { return std::holds_alternative<bool>(payload_); }
  bool is_infinite() const noexcept {
    return std::holds_alternative<Infinity>(payload_);
  }
  bool is_rational() const noexcept {
    return std::holds_alternative<mpq_class>(payload_);
  }
  bool as_bool() const { return std::get<bool>(payload_); }
  const mpq_class& as_rational() const { return std::get<mpq_class>(payload_); }

  friend bool operator==(const Value& a, const Value& b);

 private:
  SemiringKind kind_;
  Payload payload_;
};

/**
 * A c-semiring <S, plus, times, bot, top>.
 *
 * Instances:
 *   boolean        <{false,true}, or, and, false, true>
 *   fuzzy          <[0,1], max, min, 0, 1>
 *   bottleneck     <R+ u {inf}, max, min, 0, inf>
 *   probabilistic  <[0,1], max, *, 0, 1>
 *   weighted       <R+ u {inf}, min, +, inf, 0>
 *
 * The order is induced by plus: leq(a, b) iff plus(a, b) == b, so top is the
 * best value (no attack) and bot the worst (strongest attack).
 */
class Semiring {
 public:
  explicit Semiring(SemiringKind kind) : kind_(kind) {}

  /// Throws kUnknownSemiring for anything but the five lowercase names.
  static Semiring FromName(std::string_view name);

  SemiringKind kind() const noexcept { return kind_; }
  std::string_view name() const { return SemiringName(kind_); }

  Value bot() const;
  Value top() const;

  Value plus(const Value& a, const Value& b) const;
  Value times(const Value& a, const Value& b) const;

  bool leq(const Value& a, const Value& b) const;
  bool lt(const Value& a, const Value& b) const;

  bool is_top(const Value& v) const;

  /// times-fold; the empty fold is top.
  Value fold_times(std::span<const Value> values) const;

  /// Accepts decimal literals ("7", "0.25"), "inf" for the unbounded
  /// instances and "true"/"false" for boolean. Decimals are exact.
  Value parse_value(std::string_view text) const;

  /// Inverse of parse_value for every value reachable from decimal input.
  /// Non-terminating rationals are printed as "p/q".
  std::string format(const Value& v) const;

  /// Wraps a rational after range checking it for this instance.
  Value number(const mpq_class& q) const;

  friend bool operator==(const Semiring&, const Semiring&) = default;

 private:
  void check(const Value& v) const;

  SemiringKind kind_;
};

}  // namespace waf

#endif  // WAFMATRIX_SEMIRING_HPP_
