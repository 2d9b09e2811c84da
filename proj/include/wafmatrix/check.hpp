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

#ifndef WAFMATRIX_CHECK_HPP_
#define WAFMATRIX_CHECK_HPP_

#include "wafmatrix/checkers.hpp"
#include "wafmatrix/oracle.hpp"

namespace waf {

/**
 * Decides one semantics for Z. cf/adm/stb/com go through the matrix
 * deciders. prf and grd have no sub-block characterisation. prf scans the
 * supersets of Z (at most `oracle_limit` outsiders); grd asks the exhaustive
 * oracle (at most `oracle_limit` arguments).
 *
 * prf witness: the first member of the smallest extra set E, lowest mask
 * first among equal sizes, with Z u E w-admissible. grd witness: first argument in the symmetric
 * difference with the least complete set; when no least complete set exists
 * the verdict is a rejection with Z's first member (or argument 0).
 */
Verdict Check(const Framework& f, const ArgSet& z, Semantics semantics,
              CheckMode mode = CheckMode::kDefault,
              std::size_t oracle_limit = kDefaultOracleLimit);

}  // namespace waf

#endif  // WAFMATRIX_CHECK_HPP_
