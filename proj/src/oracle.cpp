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

#include "wafmatrix/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>
#include <utility>

#include "wafmatrix/error.hpp"

namespace waf {

namespace {

constexpr std::array<std::pair<Semantics, std::string_view>, 6> kSemanticsNames = {{
    {Semantics::kCf, "cf"},
    {Semantics::kAdm, "adm"},
    {Semantics::kStb, "stb"},
    {Semantics::kCom, "com"},
    {Semantics::kPrf, "prf"},
    {Semantics::kGrd, "grd"},
}};

void CheckLimit(const Framework& f, std::size_t limit) {
  const std::size_t cap = std::min<std::size_t>(limit, 63);
  if (f.size() > cap) {
    throw Error(ErrorCode::kOracleLimit,
                "framework has " + std::to_string(f.size()) +
                    " arguments; exhaustive enumeration is capped at " +
                    std::to_string(cap));
  }
}

// prf from adm: maximal w.r.t. inclusion. Supersets have larger masks, so a
// descending sweep sees them first.
template <typename Label>
void MarkMaximalAdmissible(std::size_t n, std::vector<Label>& labels) {
  const unsigned long long full = labels.size();
  std::vector<char> adm_above(full, 0);
  for (unsigned long long m = full; m-- > 0;) {
    bool above = false;
    for (std::size_t b = 0; b < n && !above; ++b) {
      const unsigned long long bit = 1ULL << b;
      if (m & bit) continue;
      above = labels[m | bit].adm || adm_above[m | bit];
    }
    adm_above[m] = above;
    labels[m].prf = labels[m].adm && !above;
  }
}

// Minimal complete sets: no complete proper subset. Subsets have smaller
// masks, so an ascending sweep sees them first.
std::vector<char> MinimalComplete(std::size_t n,
                                  const std::vector<SemanticsLabel>& labels) {
  std::vector<char> com_below(labels.size(), 0);
  std::vector<char> minimal(labels.size(), 0);
  for (unsigned long long m = 0; m < labels.size(); ++m) {
    bool below = false;
    for (std::size_t b = 0; b < n && !below; ++b) {
      const unsigned long long bit = 1ULL << b;
      if (!(m & bit)) continue;
      below = labels[m ^ bit].com || com_below[m ^ bit];
    }
    com_below[m] = below;
    minimal[m] = labels[m].com && !below;
  }
  return minimal;
}

}  // namespace

std::string_view SemanticsName(Semantics s) {
  for (const auto& [k, name] : kSemanticsNames) {
    if (k == s) return name;
  }
  return "unknown";
}

std::optional<Semantics> SemanticsFromName(std::string_view name) {
  for (const auto& [k, n] : kSemanticsNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

bool SemanticsLabel::has(Semantics s) const {
  switch (s) {
    case Semantics::kCf: return cf;
    case Semantics::kAdm: return adm;
    case Semantics::kStb: return stb;
    case Semantics::kCom: return com;
    case Semantics::kPrf: return prf;
    case Semantics::kGrd: return grd;
  }
  return false;
}

Classification::Classification(std::size_t n, std::vector<SemanticsLabel> labels)
    : n_(n), labels_(std::move(labels)) {
  for (unsigned long long m = 0; m < labels_.size(); ++m) {
    if (labels_[m].grd) minimal_complete_.push_back(ArgSet::FromMask(m));
  }
  std::sort(minimal_complete_.begin(), minimal_complete_.end());
  // grd is provisionally set on every minimal complete set by ClassifyAll;
  // it survives only when the minimum is unique.
  if (minimal_complete_.size() != 1) {
    for (auto& l : labels_) l.grd = false;
  }
}

const SemanticsLabel& Classification::label(unsigned long long mask) const {
  if (mask >= labels_.size()) {
    throw Error(ErrorCode::kForeignArgument, "subset mask out of range");
  }
  return labels_[mask];
}

const SemanticsLabel& Classification::label(const ArgSet& set) const {
  if (!set.empty() && set.members().back() >= n_) {
    throw Error(ErrorCode::kForeignArgument, "subset leaves the framework");
  }
  return labels_[set.mask()];
}

std::vector<ArgSet> Classification::extensions(Semantics s) const {
  std::vector<ArgSet> out;
  for (unsigned long long m = 0; m < labels_.size(); ++m) {
    if (labels_[m].has(s)) out.push_back(ArgSet::FromMask(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Classification::complete_by_extension(unsigned long long mask) const {
  if (!label(mask).adm) return false;
  for (std::size_t b = 0; b < n_; ++b) {
    const unsigned long long bit = 1ULL << b;
    if (!(mask & bit) && labels_[mask | bit].adm) return false;
  }
  return true;
}

Classification ClassifyAll(const Framework& f, std::size_t limit) {
  CheckLimit(f, limit);
  const std::size_t n = f.size();
  const Semiring& s = f.semiring();
  const Value top = s.top();
  const unsigned long long full = 1ULL << n;
  std::vector<SemanticsLabel> labels(full);

  for (unsigned long long m = 0; m < full; ++m) {
    const ArgSet b = ArgSet::FromMask(m);
    SemanticsLabel& l = labels[m];
    // w-conflict-free: W(B, B) = top.
    l.cf = s.is_top(SetAttackWeight(f, b, b));
    if (!l.cf) continue;
    // w-admissible: every member w-defended by B from the outside.
    l.adm = std::all_of(b.begin(), b.end(), [&](ArgIndex x) {
      for (ArgIndex a : f.attackers(x)) {
        if (b.contains(a)) continue;
        if (!s.leq(SetAttackWeight(f, b, ArgSet{a}),
                   SetAttackWeight(f, ArgSet{a}, b.with(x)))) {
          return false;
        }
      }
      return true;
    });
    if (!l.adm) continue;
    // w-stable: each outsider a has some b in B with W(b, a) <_S top.
    l.stb = true;
    for (ArgIndex a = 0; a < n && l.stb; ++a) {
      if (b.contains(a)) continue;
      l.stb = std::any_of(b.begin(), b.end(), [&](ArgIndex x) {
        return s.lt(f.weight(x, a), top);
      });
    }
    // w-complete: every argument w-defended by B is in B.
    l.com = true;
    for (ArgIndex a = 0; a < n && l.com; ++a) {
      if (!b.contains(a) && WDefends(f, b, a)) l.com = false;
    }
  }

  MarkMaximalAdmissible(n, labels);
  const std::vector<char> minimal = MinimalComplete(n, labels);
  for (unsigned long long m = 0; m < full; ++m) labels[m].grd = minimal[m] != 0;
  return Classification(n, std::move(labels));
}

std::vector<ArgSet> Enumerate(const Framework& f, Semantics s, std::size_t limit) {
  return ClassifyAll(f, limit).extensions(s);
}

std::vector<SemanticsLabel> ClassicalLabels(const Framework& f, std::size_t limit) {
  CheckLimit(f, limit);
  const std::size_t n = f.size();
  const unsigned long long full = 1ULL << n;
  // out[a]: bitmask of arguments a attacks; in[a]: bitmask of a's attackers.
  std::vector<unsigned long long> out(n, 0), in(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (f.attacks(a, b)) {
        out[a] |= 1ULL << b;
        in[b] |= 1ULL << a;
      }
    }
  }
  auto attacked_by = [&](unsigned long long set) {
    unsigned long long r = 0;
    for (std::size_t a = 0; a < n; ++a) {
      if (set & (1ULL << a)) r |= out[a];
    }
    return r;
  };
  // a is defended by B iff every attacker of a is attacked by B.
  auto defended = [&](unsigned long long set) {
    const unsigned long long hit = attacked_by(set);
    unsigned long long r = 0;
    for (std::size_t a = 0; a < n; ++a) {
      if ((in[a] & ~hit) == 0) r |= 1ULL << a;
    }
    return r;
  };

  std::vector<SemanticsLabel> labels(full);
  for (unsigned long long m = 0; m < full; ++m) {
    SemanticsLabel& l = labels[m];
    l.cf = (attacked_by(m) & m) == 0;
    if (!l.cf) continue;
    const unsigned long long def = defended(m);
    l.adm = (m & ~def) == 0;
    l.com = l.adm && (def & ~m) == 0;
    const unsigned long long outside = (full - 1) & ~m;
    l.stb = (attacked_by(m) & outside) == outside;
  }
  MarkMaximalAdmissible(n, labels);
  const std::vector<char> minimal = MinimalComplete(n, labels);
  for (unsigned long long m = 0; m < full; ++m) labels[m].grd = minimal[m] != 0;
  return labels;
}

}  // namespace waf
