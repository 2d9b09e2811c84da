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

#include "wafmatrix/semiring.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "wafmatrix/error.hpp"

namespace waf {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInstanceMismatch: return "INSTANCE-MISMATCH";
    case ErrorCode::kMalformedLiteral: return "MALFORMED-LITERAL";
    case ErrorCode::kOutOfRange: return "OUT-OF-RANGE";
    case ErrorCode::kUnknownSemiring: return "UNKNOWN-SEMIRING";
    case ErrorCode::kForeignArgument: return "FOREIGN-ARGUMENT";
    case ErrorCode::kDuplicateArgument: return "DUPLICATE-ARGUMENT";
    case ErrorCode::kNotAPermutation: return "NOT-A-PERMUTATION";
    case ErrorCode::kIndexOutOfRange: return "INDEX-OUT-OF-RANGE";
    case ErrorCode::kNotConflictFree: return "NOT-CONFLICT-FREE";
    case ErrorCode::kPreconditionViolation: return "PRECONDITION-VIOLATION";
    case ErrorCode::kOracleLimit: return "ORACLE-LIMIT";
    case ErrorCode::kInternalInconsistency: return "INTERNAL-INCONSISTENCY";
    case ErrorCode::kSelectorContract: return "SELECTOR-CONTRACT";
    case ErrorCode::kSyntax: return "SYNTAX";
    case ErrorCode::kDuplicateAttack: return "DUPLICATE-ATTACK";
    case ErrorCode::kUndeclaredArgument: return "UNDECLARED-ARGUMENT";
    case ErrorCode::kTopWeightAttack: return "TOP-WEIGHT-ATTACK";
    case ErrorCode::kMissingWeight: return "MISSING-WEIGHT";
    case ErrorCode::kUnexpectedWeight: return "UNEXPECTED-WEIGHT";
    case ErrorCode::kInvalidRange: return "INVALID-RANGE";
    case ErrorCode::kIo: return "IO";
  }
  return "UNKNOWN";
}

namespace {

constexpr std::array<std::pair<SemiringKind, std::string_view>, 5> kNames = {{
    {SemiringKind::kBoolean, "boolean"},
    {SemiringKind::kFuzzy, "fuzzy"},
    {SemiringKind::kBottleneck, "bottleneck"},
    {SemiringKind::kProbabilistic, "probabilistic"},
    {SemiringKind::kWeighted, "weighted"},
}};

bool IsUnit(SemiringKind k) {
  return k == SemiringKind::kFuzzy || k == SemiringKind::kProbabilistic;
}

// Numeric order on R+ u {inf}; infinity is the largest element.
int Compare(const Value& a, const Value& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return static_cast<int>(a.is_infinite()) - static_cast<int>(b.is_infinite());
  }
  return cmp(a.as_rational(), b.as_rational());
}

const Value& NumericMax(const Value& a, const Value& b) {
  return Compare(a, b) >= 0 ? a : b;
}

const Value& NumericMin(const Value& a, const Value& b) {
  return Compare(a, b) <= 0 ? a : b;
}

}  // namespace

std::string_view SemiringName(SemiringKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<SemiringKind> SemiringFromName(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

bool operator==(const Value& a, const Value& b) {
  return a.kind_ == b.kind_ && a.payload_ == b.payload_;
}

Semiring Semiring::FromName(std::string_view name) {
  auto kind = SemiringFromName(name);
  if (!kind) {
    throw Error(ErrorCode::kUnknownSemiring, "unknown semiring '" +
                                                 std::string(name) + "'");
  }
  return Semiring(*kind);
}

Value Semiring::bot() const {
  switch (kind_) {
    case SemiringKind::kBoolean: return Value(kind_, false);
    case SemiringKind::kWeighted: return Value(kind_, Infinity{});
    default: return Value(kind_, mpq_class(0));
  }
}

Value Semiring::top() const {
  switch (kind_) {
    case SemiringKind::kBoolean: return Value(kind_, true);
    case SemiringKind::kFuzzy:
    case SemiringKind::kProbabilistic: return Value(kind_, mpq_class(1));
    case SemiringKind::kBottleneck: return Value(kind_, Infinity{});
    case SemiringKind::kWeighted: return Value(kind_, mpq_class(0));
  }
  return Value(kind_, true);
}

void Semiring::check(const Value& v) const {
  if (v.kind() != kind_) {
    throw Error(ErrorCode::kInstanceMismatch,
                "value of semiring '" + std::string(SemiringName(v.kind())) +
                    "' used with semiring '" + std::string(name()) + "'");
  }
}

Value Semiring::plus(const Value& a, const Value& b) const {
  check(a);
  check(b);
  switch (kind_) {
    case SemiringKind::kBoolean: return Value(kind_, a.as_bool() || b.as_bool());
    case SemiringKind::kWeighted: return NumericMin(a, b);
    default: return NumericMax(a, b);
  }
}

Value Semiring::times(const Value& a, const Value& b) const {
  check(a);
  check(b);
  switch (kind_) {
    case SemiringKind::kBoolean:
      return Value(kind_, a.as_bool() && b.as_bool());
    case SemiringKind::kFuzzy:
    case SemiringKind::kBottleneck: return NumericMin(a, b);
    case SemiringKind::kProbabilistic:
      return Value(kind_, mpq_class(a.as_rational() * b.as_rational()));
    case SemiringKind::kWeighted:
      if (a.is_infinite() || b.is_infinite()) return Value(kind_, Infinity{});
      return Value(kind_, mpq_class(a.as_rational() + b.as_rational()));
  }
  return a;
}

bool Semiring::leq(const Value& a, const Value& b) const {
  return plus(a, b) == b;
}

bool Semiring::lt(const Value& a, const Value& b) const {
  return leq(a, b) && !(a == b);
}

bool Semiring::is_top(const Value& v) const {
  check(v);
  return v == top();
}

Value Semiring::fold_times(std::span<const Value> values) const {
  Value acc = top();
  for (const Value& v : values) acc = times(acc, v);
  return acc;
}

Value Semiring::number(const mpq_class& q) const {
  if (kind_ == SemiringKind::kBoolean) {
    throw Error(ErrorCode::kOutOfRange, "boolean semiring has no numbers");
  }
  if (sgn(q) < 0 || (IsUnit(kind_) && q > 1)) {
    throw Error(ErrorCode::kOutOfRange,
                q.get_str() + " outside the carrier of " + std::string(name()));
  }
  return Value(kind_, q);
}

Value Semiring::parse_value(std::string_view text) const {
  auto malformed = [&] {
    return Error(ErrorCode::kMalformedLiteral,
                 "'" + std::string(text) + "' is not a valid " +
                     std::string(name()) + " literal");
  };
  if (kind_ == SemiringKind::kBoolean) {
    if (text == "true") return Value(kind_, true);
    if (text == "false") return Value(kind_, false);
    throw malformed();
  }
  if (text == "inf") {
    if (IsUnit(kind_)) {
      throw Error(ErrorCode::kOutOfRange,
                  "inf outside the carrier of " + std::string(name()));
    }
    return Value(kind_, Infinity{});
  }
  // decimal := digits [ '.' digits ]
  const auto dot = text.find('.');
  const std::string_view whole = text.substr(0, dot);
  const std::string_view frac =
      dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  auto all_digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
      return std::isdigit(c) != 0;
    });
  };
  if (!all_digits(whole) || (dot != std::string_view::npos && !all_digits(frac))) {
    throw malformed();
  }
  mpz_class numerator(std::string(whole) + std::string(frac), 10);
  mpz_class denominator;
  mpz_ui_pow_ui(denominator.get_mpz_t(), 10, frac.size());
  mpq_class q(numerator, denominator);
  q.canonicalize();
  return number(q);
}

std::string Semiring::format(const Value& v) const {
  check(v);
  if (v.is_bool()) return v.as_bool() ? "true" : "false";
  if (v.is_infinite()) return "inf";
  const mpq_class& q = v.as_rational();
  mpz_class den = q.get_den();
  // Terminating decimal iff the denominator is 2^a * 5^b.
  unsigned long twos = 0, fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) { den /= 2; ++twos; }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) { den /= 5; ++fives; }
  if (den != 1) return q.get_str();
  const unsigned long digits = std::max(twos, fives);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  mpz_class scaled = q.get_num() * scale / q.get_den();
  std::string s = scaled.get_str();
  if (digits == 0) return s;
  if (s.size() <= digits) s.insert(0, digits - s.size() + 1, '0');
  s.insert(s.size() - digits, ".");
  return s;
}

}  // namespace waf
