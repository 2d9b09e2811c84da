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

#include "wafmatrix/check.hpp"

#include <bit>
#include <string>
#include <vector>

#include "wafmatrix/error.hpp"

namespace waf {

Verdict Check(const Framework& f, const ArgSet& z, Semantics semantics,
              CheckMode mode, std::size_t oracle_limit) {
  f.require_members(z);
  switch (semantics) {
    case Semantics::kCf: return IsWConflictFree(f, z);
    case Semantics::kAdm: return IsWAdmissible(f, z);
    case Semantics::kStb: return IsWStable(f, z, mode);
    case Semantics::kCom: return IsWComplete(f, z, mode);
    case Semantics::kPrf: {
      if (Verdict adm = IsWAdmissible(f, z); !adm) return adm;
      const ArgSet outside = f.all().minus(z);
      if (outside.size() > oracle_limit) {
        throw Error(ErrorCode::kOracleLimit,
                    std::to_string(outside.size()) +
                        " arguments outside the set; superset scan is capped at " +
                        std::to_string(oracle_limit));
      }
      // Supersets by growing number of extra members.
      const std::size_t m = outside.size();
      for (int k = 1; k <= static_cast<int>(m); ++k) {
        for (unsigned long long mask = 1; mask < (1ULL << m); ++mask) {
          if (std::popcount(mask) != k) continue;
          std::vector<ArgIndex> extra;
          for (std::size_t i = 0; i < m; ++i) {
            if (mask >> i & 1ULL) extra.push_back(outside.members()[i]);
          }
          if (IsWAdmissible(f, z.united(ArgSet(extra)))) {
            return Verdict::Reject(Rule::kPreferredMaximal, {extra.front(), std::nullopt});
          }
        }
      }
      return Verdict::Accept(Rule::kPreferredMaximal);
    }
    case Semantics::kGrd: {
      const Classification all = ClassifyAll(f, oracle_limit);
      if (!all.least_complete_exists()) {
        const ArgIndex first = z.empty() ? 0 : z.members().front();
        return Verdict::Reject(Rule::kGroundedLeast, {first, std::nullopt});
      }
      const ArgSet& least = all.minimal_complete().front();
      if (least == z) return Verdict::Accept(Rule::kGroundedLeast);
      const ArgSet diff = least.minus(z).united(z.minus(least));
      return Verdict::Reject(Rule::kGroundedLeast, {diff.members().front(), std::nullopt});
    }
  }
  return Verdict::Accept(Rule::kConflictFree);
}

}  // namespace waf
