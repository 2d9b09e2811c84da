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

#ifndef WAFMATRIX_WAPX_HPP_
#define WAFMATRIX_WAPX_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include "wafmatrix/framework.hpp"

namespace waf {

// The .wapx format:
//
//   file   := header decl*
//   header := "semiring" SP name NL
//   decl   := "arg(" ID ")." NL | "att(" ID "," ID ["," WEIGHT] ")." NL
//   ID     := [A-Za-z_][A-Za-z0-9_]*
//   WEIGHT := decimal | "inf"
//
// Whitespace around tokens is ignored, '#' starts a comment running to the
// end of the line, blank lines are allowed. Boolean files omit the weight;
// every other instance requires it. Arguments are ordered by declaration.

/// Throws ParseError with line/column on syntax and semantic errors.
Framework ParseWapx(std::string_view text);

/// Canonical text: header, args in order, attacks in row-major order.
std::string SerializeWapx(const Framework& f);

/// Reads a file, or standard input when path is "-". Throws kIo.
std::string ReadTextFile(const std::string& path);

/// Uniform grid of candidate weights: lo, lo + step, ..., hi.
struct WeightRange {
  mpq_class lo;
  mpq_class hi;
  mpq_class step;
};

/// Parses "LO..HI"; the step is 10^-p where p is the larger number of
/// decimal places in LO and HI ("1..10" steps by 1, "0.0..1.0" by 0.1).
WeightRange ParseWeightRange(std::string_view text);

/// Default grid per instance: 1..10 for weighted/bottleneck, 0.0..1.0 for
/// fuzzy/probabilistic, unused for boolean.
WeightRange DefaultWeightRange(SemiringKind kind);

struct GeneratorSpec {
  std::size_t arguments = 0;
  double density = 0.5;
  Semiring semiring{SemiringKind::kWeighted};
  WeightRange weights = DefaultWeightRange(SemiringKind::kWeighted);
  std::uint64_t seed = 0;
};

/**
 * Random framework with arguments a0..a{n-1}. Every ordered pair, self-loops
 * included, is attacked with probability `density`; the weight is drawn
 * uniformly from the grid with top removed.
 *
 * Determinism: the only randomness source is std::mt19937_64 seeded with
 * `seed`. Pairs are visited row-major; per pair one draw u = (x >> 11) *
 * 2^-53 decides the attack (u < density); a weight takes draws x until
 * x < floor((2^64 - 1) / k) * k for k grid points and picks index x mod k.
 * Throws kInvalidRange.
 */
Framework GenerateFramework(const GeneratorSpec& spec);

}  // namespace waf

#endif  // WAFMATRIX_WAPX_HPP_
