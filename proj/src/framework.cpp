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

#include "wafmatrix/framework.hpp"

#include <algorithm>
#include <cctype>

#include "wafmatrix/error.hpp"

namespace waf {

ArgSet::ArgSet(std::initializer_list<ArgIndex> members)
    : ArgSet(std::vector<ArgIndex>(members)) {}

ArgSet::ArgSet(std::vector<ArgIndex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw Error(ErrorCode::kPreconditionViolation,
                "argument set contains a duplicate member");
  }
}

ArgSet ArgSet::FromMask(unsigned long long mask) {
  ArgSet s;
  for (ArgIndex i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1ULL) s.members_.push_back(i);
  }
  return s;
}

bool ArgSet::contains(ArgIndex a) const {
  return std::binary_search(members_.begin(), members_.end(), a);
}

unsigned long long ArgSet::mask() const {
  unsigned long long m = 0;
  for (ArgIndex a : members_) m |= 1ULL << a;
  return m;
}

ArgSet ArgSet::with(ArgIndex a) const {
  if (contains(a)) return *this;
  ArgSet s = *this;
  s.members_.insert(std::upper_bound(s.members_.begin(), s.members_.end(), a), a);
  return s;
}

ArgSet ArgSet::united(const ArgSet& other) const {
  ArgSet s;
  std::set_union(begin(), end(), other.begin(), other.end(),
                 std::back_inserter(s.members_));
  return s;
}

ArgSet ArgSet::intersected(const ArgSet& other) const {
  ArgSet s;
  std::set_intersection(begin(), end(), other.begin(), other.end(),
                        std::back_inserter(s.members_));
  return s;
}

ArgSet ArgSet::minus(const ArgSet& other) const {
  ArgSet s;
  std::set_difference(begin(), end(), other.begin(), other.end(),
                      std::back_inserter(s.members_));
  return s;
}

bool ArgSet::is_subset_of(const ArgSet& other) const {
  return std::includes(other.begin(), other.end(), begin(), end());
}

bool operator<(const ArgSet& a, const ArgSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.members_ < b.members_;
}

bool IsValidArgumentName(std::string_view name) {
  if (name.empty()) return false;
  auto head = static_cast<unsigned char>(name.front());
  if (!(std::isalpha(head) || head == '_')) return false;
  return std::all_of(name.begin(), name.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

Framework::Framework(Semiring semiring, std::vector<std::string> names)
    : semiring_(semiring), names_(std::move(names)) {
  weights_.assign(names_.size() * names_.size(), semiring_.top());
  index_names();
  derive_relation();
}

Framework::Framework(Semiring semiring, std::vector<std::string> names,
                     const std::vector<Attack>& attacks)
    : semiring_(semiring), names_(std::move(names)) {
  weights_.assign(names_.size() * names_.size(), semiring_.top());
  index_names();
  for (const Attack& att : attacks) {
    weights_[index_of(att.source) * size() + index_of(att.target)] = att.weight;
  }
  derive_relation();
}

Framework::Framework(Semiring semiring, std::vector<std::string> names,
                     std::vector<Value> weights)
    : semiring_(semiring), names_(std::move(names)), weights_(std::move(weights)) {
  if (weights_.size() != names_.size() * names_.size()) {
    throw Error(ErrorCode::kPreconditionViolation,
                "weight matrix does not match the argument count");
  }
  index_names();
  derive_relation();
}

void Framework::index_names() {
  index_.clear();
  for (ArgIndex i = 0; i < names_.size(); ++i) {
    if (!IsValidArgumentName(names_[i])) {
      throw Error(ErrorCode::kSyntax, "invalid argument name '" + names_[i] + "'");
    }
    if (!index_.emplace(names_[i], i).second) {
      throw Error(ErrorCode::kDuplicateArgument,
                  "argument '" + names_[i] + "' declared twice");
    }
  }
}

void Framework::derive_relation() {
  const std::size_t n = size();
  attack_.assign(n * n, 0);
  attackers_.assign(n, {});
  attacked_.assign(n, {});
  const Value top = semiring_.top();
  for (ArgIndex s = 0; s < n; ++s) {
    for (ArgIndex t = 0; t < n; ++t) {
      const Value& w = weights_[s * n + t];
      if (semiring_.lt(w, top)) {
        attack_[s * n + t] = 1;
        attacked_[s].push_back(t);
        attackers_[t].push_back(s);
      }
    }
  }
}

const std::string& Framework::name(ArgIndex a) const {
  if (a >= size()) {
    throw Error(ErrorCode::kForeignArgument,
                "argument position " + std::to_string(a) + " out of range");
  }
  return names_[a];
}

ArgIndex Framework::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) {
    throw Error(ErrorCode::kForeignArgument,
                "unknown argument '" + std::string(name) + "'");
  }
  return it->second;
}

bool Framework::has(std::string_view name) const {
  return index_.count(std::string(name)) != 0;
}

const Value& Framework::weight(ArgIndex from, ArgIndex to) const {
  if (from >= size() || to >= size()) {
    throw Error(ErrorCode::kForeignArgument, "argument position out of range");
  }
  return weights_[from * size() + to];
}

bool Framework::attacks(ArgIndex from, ArgIndex to) const {
  return attack_[from * size() + to] != 0;
}

const std::vector<ArgIndex>& Framework::attackers(ArgIndex a) const {
  name(a);
  return attackers_[a];
}

const std::vector<ArgIndex>& Framework::attacked(ArgIndex a) const {
  name(a);
  return attacked_[a];
}

std::size_t Framework::attack_count() const {
  return static_cast<std::size_t>(std::count(attack_.begin(), attack_.end(), 1));
}

ArgSet Framework::all() const {
  std::vector<ArgIndex> v(size());
  for (ArgIndex i = 0; i < size(); ++i) v[i] = i;
  return ArgSet(std::move(v));
}

ArgSet Framework::set_of(std::initializer_list<std::string_view> names) const {
  std::vector<ArgIndex> v;
  for (auto n : names) v.push_back(index_of(n));
  return ArgSet(std::move(v));
}

ArgSet Framework::set_of(const std::vector<std::string>& names) const {
  std::vector<ArgIndex> v;
  for (const auto& n : names) v.push_back(index_of(n));
  return ArgSet(std::move(v));
}

std::string Framework::format(const ArgSet& set) const {
  std::string out = "[";
  bool first = true;
  for (ArgIndex a : set) {
    if (!first) out += ',';
    out += name(a);
    first = false;
  }
  out += ']';
  return out;
}

void Framework::require_members(const ArgSet& set) const {
  if (!set.empty() && set.members().back() >= size()) {
    throw Error(ErrorCode::kForeignArgument,
                "argument position " + std::to_string(set.members().back()) +
                    " is not in a framework of " + std::to_string(size()) +
                    " arguments");
  }
}

bool operator==(const Framework& a, const Framework& b) {
  return a.semiring_ == b.semiring_ && a.names_ == b.names_ &&
         a.weights_ == b.weights_;
}

Value SetAttackWeight(const Framework& f, const ArgSet& from, const ArgSet& to) {
  f.require_members(from);
  f.require_members(to);
  const Semiring& s = f.semiring();
  Value acc = s.top();
  // Non-attacks are top, the times-identity, so they can be skipped.
  for (ArgIndex b : from) {
    for (ArgIndex d : to) {
      if (f.attacks(b, d)) acc = s.times(acc, f.weight(b, d));
    }
  }
  return acc;
}

ArgSet AttackedBy(const Framework& f, const ArgSet& z) {
  f.require_members(z);
  std::vector<char> hit(f.size(), 0);
  for (ArgIndex b : z) {
    for (ArgIndex d : f.attacked(b)) hit[d] = 1;
  }
  std::vector<ArgIndex> out;
  for (ArgIndex i = 0; i < f.size(); ++i) {
    if (hit[i]) out.push_back(i);
  }
  return ArgSet(std::move(out));
}

ArgSet AttackersOf(const Framework& f, const ArgSet& z) {
  f.require_members(z);
  std::vector<char> hit(f.size(), 0);
  for (ArgIndex b : z) {
    for (ArgIndex a : f.attackers(b)) hit[a] = 1;
  }
  std::vector<ArgIndex> out;
  for (ArgIndex i = 0; i < f.size(); ++i) {
    if (hit[i]) out.push_back(i);
  }
  return ArgSet(std::move(out));
}

ArgSet InitialArguments(const Framework& f) {
  std::vector<ArgIndex> out;
  for (ArgIndex i = 0; i < f.size(); ++i) {
    if (f.attackers(i).empty()) out.push_back(i);
  }
  return ArgSet(std::move(out));
}

bool WDefends(const Framework& f, const ArgSet& defenders, ArgIndex b) {
  f.require_members(defenders);
  const ArgSet target = defenders.with(b);
  for (ArgIndex a : f.attackers(b)) {
    const Value counter = SetAttackWeight(f, defenders, ArgSet{a});
    const Value attack = SetAttackWeight(f, ArgSet{a}, target);
    if (!f.semiring().leq(counter, attack)) return false;
  }
  return true;
}

ArgSet DefendedSet(const Framework& f, const ArgSet& z) {
  std::vector<ArgIndex> out;
  for (ArgIndex a = 0; a < f.size(); ++a) {
    if (WDefends(f, z, a)) out.push_back(a);
  }
  return ArgSet(std::move(out));
}

LabelledMatrix MatrixOf(const Framework& f,
                        const std::vector<ArgIndex>& permutation) {
  const std::size_t n = f.size();
  std::vector<char> seen(n, 0);
  if (permutation.size() != n) {
    throw Error(ErrorCode::kNotAPermutation,
                "permutation has " + std::to_string(permutation.size()) +
                    " entries, framework has " + std::to_string(n));
  }
  for (ArgIndex a : permutation) {
    if (a >= n || seen[a]) {
      throw Error(ErrorCode::kNotAPermutation,
                  "permutation repeats or leaves the argument range");
    }
    seen[a] = 1;
  }
  LabelledMatrix m;
  for (ArgIndex a : permutation) m.row_labels.push_back(f.name(a));
  m.col_labels = m.row_labels;
  m.entries.reserve(n * n);
  for (ArgIndex s : permutation) {
    for (ArgIndex t : permutation) {
      m.entries.push_back(f.attacks(s, t) ? f.weight(s, t) : f.semiring().top());
    }
  }
  return m;
}

LabelledMatrix MatrixOf(const Framework& f) {
  return MatrixOf(f, f.all().members());
}

Framework Restrict(const Framework& f, const ArgSet& b) {
  f.require_members(b);
  std::vector<std::string> names;
  std::vector<Value> weights;
  weights.reserve(b.size() * b.size());
  for (ArgIndex s : b) {
    names.push_back(f.name(s));
    for (ArgIndex t : b) weights.push_back(f.weight(s, t));
  }
  return Framework(f.semiring(), std::move(names), std::move(weights));
}

}  // namespace waf
