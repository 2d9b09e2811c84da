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

#include "wafmatrix/reduction.hpp"

#include <algorithm>

#include "wafmatrix/check.hpp"
#include "wafmatrix/error.hpp"

namespace waf {

WeightMatrix::WeightMatrix(Semiring semiring, std::size_t n)
    : semiring_(semiring), n_(n), entries_(n * n, semiring.top()) {}

WeightMatrix WeightMatrix::Of(const Framework& f) {
  WeightMatrix m(f.semiring(), f.size());
  m.entries_ = f.weights();
  return m;
}

void WeightMatrix::check_index(std::size_t i) const {
  if (i >= n_) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "index " + std::to_string(i) + " outside a matrix of order " +
                    std::to_string(n_));
  }
}

const Value& WeightMatrix::at(std::size_t r, std::size_t c) const {
  check_index(r);
  check_index(c);
  return entries_[r * n_ + c];
}

void WeightMatrix::set(std::size_t r, std::size_t c, Value v) {
  check_index(r);
  check_index(c);
  entries_[r * n_ + c] = std::move(v);
}

std::vector<Value> WeightMatrix::row(std::size_t r) const {
  check_index(r);
  return {entries_.begin() + static_cast<std::ptrdiff_t>(r * n_),
          entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * n_)};
}

std::vector<Value> WeightMatrix::column(std::size_t c) const {
  check_index(c);
  std::vector<Value> out;
  out.reserve(n_);
  for (std::size_t r = 0; r < n_; ++r) out.push_back(entries_[r * n_ + c]);
  return out;
}

std::vector<Value> WeightMatrix::combine_rows(std::size_t i, std::size_t j) const {
  check_index(i);
  check_index(j);
  std::vector<Value> out;
  out.reserve(n_);
  for (std::size_t c = 0; c < n_; ++c) {
    out.push_back(semiring_.times(entries_[i * n_ + c], entries_[j * n_ + c]));
  }
  return out;
}

std::vector<Value> WeightMatrix::combine_columns(std::size_t i, std::size_t j) const {
  check_index(i);
  check_index(j);
  std::vector<Value> out;
  out.reserve(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    out.push_back(semiring_.times(entries_[r * n_ + i], entries_[r * n_ + j]));
  }
  return out;
}

void WeightMatrix::set_row(std::size_t r, const std::vector<Value>& values) {
  check_index(r);
  if (values.size() != n_) {
    throw Error(ErrorCode::kIndexOutOfRange, "row length mismatch");
  }
  std::copy(values.begin(), values.end(),
            entries_.begin() + static_cast<std::ptrdiff_t>(r * n_));
}

void WeightMatrix::set_column(std::size_t c, const std::vector<Value>& values) {
  check_index(c);
  if (values.size() != n_) {
    throw Error(ErrorCode::kIndexOutOfRange, "column length mismatch");
  }
  for (std::size_t r = 0; r < n_; ++r) entries_[r * n_ + c] = values[r];
}

void WeightMatrix::erase(std::size_t i) {
  check_index(i);
  std::vector<Value> next;
  next.reserve((n_ - 1) * (n_ - 1));
  for (std::size_t r = 0; r < n_; ++r) {
    if (r == i) continue;
    for (std::size_t c = 0; c < n_; ++c) {
      if (c != i) next.push_back(entries_[r * n_ + c]);
    }
  }
  entries_ = std::move(next);
  --n_;
}

ReducedFramework Contract(const Framework& f, const ArgSet& z, std::size_t keep) {
  f.require_members(z);
  if (keep >= z.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "contraction target " + std::to_string(keep) +
                    " outside a set of " + std::to_string(z.size()));
  }
  if (Verdict cf = IsWConflictFree(f, z); !cf) {
    throw Error(ErrorCode::kNotConflictFree,
                f.format(z) + " is not w-conflict-free: " +
                    f.name(cf.witness->first) + " attacks " +
                    f.name(*cf.witness->second));
  }
  const ArgIndex target = z.members()[keep];
  WeightMatrix m = WeightMatrix::Of(f);
  for (ArgIndex s : z) {
    if (s == target) continue;
    m.set_row(target, m.combine_rows(target, s));
    m.set_column(target, m.combine_columns(target, s));
  }
  // Delete from the highest position down so earlier positions stay valid.
  for (auto it = z.members().rbegin(); it != z.members().rend(); ++it) {
    if (*it != target) m.erase(*it);
  }

  ReducedFramework out{Framework(f.semiring()), {}, 0};
  std::vector<std::string> names;
  for (ArgIndex a = 0; a < f.size(); ++a) {
    if (a == target) {
      out.contracted = names.size();
      std::vector<std::string> group;
      for (ArgIndex s : z) group.push_back(f.name(s));
      out.origin.push_back(std::move(group));
    } else if (z.contains(a)) {
      continue;
    } else {
      out.origin.push_back({f.name(a)});
    }
    names.push_back(f.name(a));
  }
  std::vector<Value> weights;
  weights.reserve(m.size() * m.size());
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < m.size(); ++c) weights.push_back(m.at(r, c));
  }
  out.waf = Framework(f.semiring(), std::move(names), std::move(weights));
  return out;
}

Framework RemainingSubframework(const Framework& f, const ArgSet& z) {
  f.require_members(z);
  return Restrict(f, f.all().minus(z.united(AttackedBy(f, z))));
}

namespace {

// Positions of `t` inside the restriction to `b` (both canonical).
ArgSet ToRestriction(const ArgSet& b, const ArgSet& t) {
  std::vector<ArgIndex> out;
  for (ArgIndex a : t) {
    auto it = std::lower_bound(b.begin(), b.end(), a);
    out.push_back(static_cast<ArgIndex>(it - b.begin()));
  }
  return ArgSet(std::move(out));
}

}  // namespace

Verdict UnionIsExtension(const Framework& f, const ArgSet& z, const ArgSet& t,
                         Semantics semantics, std::size_t oracle_limit) {
  f.require_members(z);
  f.require_members(t);
  if (semantics == Semantics::kCf || semantics == Semantics::kGrd) {
    throw Error(ErrorCode::kPreconditionViolation,
                "union check supports adm, stb, com and prf only");
  }
  if (!IsWAdmissible(f, z)) {
    throw Error(ErrorCode::kPreconditionViolation,
                "Z-NOT-ADMISSIBLE: " + f.format(z) + " is not w-admissible");
  }
  const ArgSet b = f.all().minus(z.united(AttackedBy(f, z)));
  if (!t.is_subset_of(b)) {
    throw Error(ErrorCode::kPreconditionViolation,
                "T-OUTSIDE-REMAINDER: " + f.format(t) + " is not inside " +
                    f.format(b));
  }
  const Framework sub = Restrict(f, b);
  if (!Check(sub, ToRestriction(b, t), semantics, CheckMode::kDefault,
             oracle_limit)) {
    throw Error(ErrorCode::kPreconditionViolation,
                "T-NOT-EXTENSION-OF-REMAINDER: " + f.format(t) + " is not " +
                    std::string(SemanticsName(semantics)) + " in the remainder");
  }
  const ArgSet joined = z.united(t);
  for (ArgIndex x : t) {
    if (!WDefends(f, joined, x)) {
      throw Error(ErrorCode::kPreconditionViolation,
                  "T-NOT-DEFENDED: " + f.name(x) + " is not w-defended by " +
                      f.format(joined));
    }
  }
  return Check(f, joined, semantics, CheckMode::kDefault, oracle_limit);
}

}  // namespace waf
