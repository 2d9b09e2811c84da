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

#include "wafmatrix/checkers.hpp"

#include "wafmatrix/error.hpp"

namespace waf {

namespace {

SubBlock Select(const Framework& f, BlockKind kind, std::vector<ArgIndex> rows,
                std::vector<ArgIndex> cols) {
  SubBlock block{kind, std::move(rows), std::move(cols), {}};
  block.entries.reserve(block.rows.size() * block.cols.size());
  for (ArgIndex r : block.rows) {
    for (ArgIndex c : block.cols) {
      block.entries.push_back(f.attacks(r, c) ? f.weight(r, c)
                                              : f.semiring().top());
    }
  }
  return block;
}

std::vector<ArgIndex> Outside(const Framework& f, const ArgSet& z) {
  return f.all().minus(z).members();
}

// times-fold of one column of a block.
Value ColumnFold(const Semiring& s, const SubBlock& b, std::size_t col) {
  Value acc = s.top();
  for (std::size_t r = 0; r < b.rows.size(); ++r) acc = s.times(acc, b.at(r, col));
  return acc;
}

// times-fold of one row of a block.
Value RowFold(const Semiring& s, const SubBlock& b, std::size_t row) {
  Value acc = s.top();
  for (std::size_t c = 0; c < b.cols.size(); ++c) acc = s.times(acc, b.at(row, c));
  return acc;
}

bool ColumnAllTop(const Semiring& s, const SubBlock& b, std::size_t col) {
  for (std::size_t r = 0; r < b.rows.size(); ++r) {
    if (!s.is_top(b.at(r, col))) return false;
  }
  return true;
}

// Per-outsider aggregates shared by the admissible/complete tests:
// into[q] = W(Z, j_q) from the s-block, out[q] = W(j_q, Z) from the sbar-block.
struct OutsideAggregates {
  SubBlock s;
  SubBlock sbar;
  std::vector<Value> into;
  std::vector<Value> out;
};

OutsideAggregates Aggregate(const Framework& f, const ArgSet& z) {
  OutsideAggregates agg{SSubBlock(f, z), SbarSubBlock(f, z), {}, {}};
  const Semiring& s = f.semiring();
  for (std::size_t q = 0; q < agg.s.cols.size(); ++q) {
    agg.into.push_back(ColumnFold(s, agg.s, q));
    agg.out.push_back(RowFold(s, agg.sbar, q));
  }
  return agg;
}

Verdict AdmissibleFromAggregates(const Framework& f, const ArgSet& z,
                                 const OutsideAggregates& agg) {
  if (Verdict cf = IsWConflictFree(f, z); !cf) return cf;
  const Semiring& s = f.semiring();
  for (std::size_t q = 0; q < agg.s.cols.size(); ++q) {
    if (!s.leq(agg.into[q], agg.out[q])) {
      return Verdict::Reject(Rule::kAdmissible, {agg.s.cols[q], std::nullopt});
    }
  }
  return Verdict::Accept(Rule::kAdmissible);
}

}  // namespace

std::string_view RuleName(Rule rule) {
  switch (rule) {
    case Rule::kConflictFree: return "conflict-free";
    case Rule::kAdmissible: return "admissible";
    case Rule::kStableExistential: return "stable-existential";
    case Rule::kStableUniversal: return "stable-universal";
    case Rule::kCompleteDefence: return "complete-defence";
    case Rule::kCompleteTheorem: return "complete-theorem";
    case Rule::kPreferredMaximal: return "preferred-maximal";
    case Rule::kGroundedLeast: return "grounded-least";
  }
  return "unknown";
}

SubBlock CfSubBlock(const Framework& f, const ArgSet& z) {
  f.require_members(z);
  return Select(f, BlockKind::kCf, z.members(), z.members());
}

SubBlock SSubBlock(const Framework& f, const ArgSet& z) {
  f.require_members(z);
  return Select(f, BlockKind::kS, z.members(), Outside(f, z));
}

SubBlock SbarSubBlock(const Framework& f, const ArgSet& z) {
  f.require_members(z);
  return Select(f, BlockKind::kSbar, Outside(f, z), z.members());
}

SubBlock CSubBlock(const Framework& f, const ArgSet& z) {
  f.require_members(z);
  auto out = Outside(f, z);
  return Select(f, BlockKind::kC, out, out);
}

Verdict IsWConflictFree(const Framework& f, const ArgSet& z) {
  const SubBlock cf = CfSubBlock(f, z);
  const Semiring& s = f.semiring();
  for (std::size_t r = 0; r < cf.rows.size(); ++r) {
    for (std::size_t c = 0; c < cf.cols.size(); ++c) {
      if (!s.is_top(cf.at(r, c))) {
        return Verdict::Reject(Rule::kConflictFree, {cf.rows[r], cf.cols[c]});
      }
    }
  }
  return Verdict::Accept(Rule::kConflictFree);
}

Verdict IsWAdmissible(const Framework& f, const ArgSet& z) {
  f.require_members(z);
  return AdmissibleFromAggregates(f, z, Aggregate(f, z));
}

Verdict IsWStable(const Framework& f, const ArgSet& z, CheckMode mode) {
  f.require_members(z);
  const OutsideAggregates agg = Aggregate(f, z);
  if (Verdict adm = AdmissibleFromAggregates(f, z, agg); !adm) return adm;
  const Semiring& s = f.semiring();
  const Rule rule = mode == CheckMode::kDefault ? Rule::kStableExistential
                                                : Rule::kStableUniversal;
  for (std::size_t q = 0; q < agg.s.cols.size(); ++q) {
    bool any_attack = false;
    bool all_attack = true;
    for (std::size_t r = 0; r < agg.s.rows.size(); ++r) {
      const bool attack = !s.is_top(agg.s.at(r, q));
      any_attack = any_attack || attack;
      all_attack = all_attack && attack;
    }
    const bool ok = mode == CheckMode::kDefault ? any_attack : all_attack;
    if (!ok) return Verdict::Reject(rule, {agg.s.cols[q], std::nullopt});
  }
  return Verdict::Accept(rule);
}

Verdict IsWComplete(const Framework& f, const ArgSet& z, CheckMode mode) {
  f.require_members(z);
  const OutsideAggregates agg = Aggregate(f, z);
  if (Verdict adm = AdmissibleFromAggregates(f, z, agg); !adm) return adm;
  const Semiring& s = f.semiring();
  const SubBlock c = CSubBlock(f, z);
  const std::size_t h = c.cols.size();

  if (mode == CheckMode::kDefault) {
    // j_p is w-defended by Z iff Z leaves it unattacked and every attacker
    // j_q in the c-block satisfies W(Z, j_q) <=_S W(j_q, Z) (x) W(j_q, j_p).
    for (std::size_t p = 0; p < h; ++p) {
      if (!ColumnAllTop(s, agg.s, p)) continue;
      bool defended = true;
      for (std::size_t q = 0; q < h && defended; ++q) {
        const Value& hit = c.at(q, p);
        if (s.is_top(hit)) continue;
        // Defeat of j_p's defence is the strict inequality; ties defend.
        defended = !s.lt(s.times(agg.out[q], hit), agg.into[q]);
      }
      if (defended) {
        return Verdict::Reject(Rule::kCompleteDefence, {c.cols[p], std::nullopt});
      }
    }
    return Verdict::Accept(Rule::kCompleteDefence);
  }

  for (std::size_t p = 0; p < h; ++p) {
    if (!ColumnAllTop(s, agg.s, p)) continue;
    // (1) some attacker inside A\Z, (2) one of them with
    //     W(j_q, Z) (x) W(j_q, j_p) <=_S W(Z, j_q) (x) W(j_p, j_q).
    bool beaten = false;
    for (std::size_t q = 0; q < h && !beaten; ++q) {
      const Value& hit = c.at(q, p);
      if (s.is_top(hit)) continue;
      beaten = s.leq(s.times(agg.out[q], hit), s.times(agg.into[q], c.at(p, q)));
    }
    if (!beaten) {
      return Verdict::Reject(Rule::kCompleteTheorem, {c.cols[p], std::nullopt});
    }
  }
  return Verdict::Accept(Rule::kCompleteTheorem);
}

}  // namespace waf
