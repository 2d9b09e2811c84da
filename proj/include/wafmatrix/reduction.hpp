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

#ifndef WAFMATRIX_REDUCTION_HPP_
#define WAFMATRIX_REDUCTION_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "wafmatrix/checkers.hpp"
#include "wafmatrix/framework.hpp"
#include "wafmatrix/oracle.hpp"

namespace waf {

/// Square weight matrix used by the row/column combination rules.
class WeightMatrix {
 public:
  WeightMatrix(Semiring semiring, std::size_t n);
  static WeightMatrix Of(const Framework& f);

  std::size_t size() const noexcept { return n_; }
  const Semiring& semiring() const noexcept { return semiring_; }
  const Value& at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, Value v);

  std::vector<Value> row(std::size_t r) const;
  std::vector<Value> column(std::size_t c) const;

  /// Entrywise times of rows i and j.
  std::vector<Value> combine_rows(std::size_t i, std::size_t j) const;
  /// Entrywise times of columns i and j.
  std::vector<Value> combine_columns(std::size_t i, std::size_t j) const;

  void set_row(std::size_t r, const std::vector<Value>& values);
  void set_column(std::size_t c, const std::vector<Value>& values);
  /// Removes row i and column i.
  void erase(std::size_t i);

 private:
  void check_index(std::size_t i) const;

  Semiring semiring_;
  std::size_t n_;
  std::vector<Value> entries_;
};

struct ReducedFramework {
  Framework waf;
  /// origin[k]: original argument names represented by reduced argument k.
  std::vector<std::vector<std::string>> origin;
  /// Position of the contracted node in waf.
  ArgIndex contracted;
};

/**
 * Contracts the w-conflict-free set Z into its member at position `keep`
 * (0-based within Z): rows of Z are combined into that row, columns into that
 * column, then the other rows and columns of Z are deleted. The result has
 * n - |Z| + 1 arguments and keeps canonical order.
 *
 * Throws kNotConflictFree, kIndexOutOfRange.
 */
ReducedFramework Contract(const Framework& f, const ArgSet& z, std::size_t keep);

/// F restricted to A \ (Z u R+(Z)).
Framework RemainingSubframework(const Framework& f, const ArgSet& z);

/**
 * Checks that Z u T carries `semantics` in F, after checking the premises of
 * the division theorem one by one: Z is w-admissible in F, T lies inside the
 * remainder B, T carries `semantics` in F|B, and every member of T is
 * w-defended by Z u T in F. A failed premise throws kPreconditionViolation
 * naming it. Supports adm, stb, com and prf (prf through the oracle).
 */
Verdict UnionIsExtension(const Framework& f, const ArgSet& z, const ArgSet& t,
                         Semantics semantics,
                         std::size_t oracle_limit = kDefaultOracleLimit);

}  // namespace waf

#endif  // WAFMATRIX_REDUCTION_HPP_
