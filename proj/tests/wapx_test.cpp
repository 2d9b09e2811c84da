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

#include "wafmatrix/wapx.hpp"

#include <gtest/gtest.h>

#include "test_frameworks.hpp"
#include "wafmatrix/error.hpp"

namespace waf {
namespace {

const char* const kFixtures[] = {"trio.wapx",      "crisp_five.wapx",      "five.wapx",
                                 "converge.wapx",      "branch.wapx",      "two_cycle.wapx",
                                 "fuzzy_mix.wapx", "probabilistic.wapx",
                                 "bottleneck.wapx", "empty.wapx",    "no_least.wapx"};

Framework Fixture(const std::string& name) {
  return ParseWapx(ReadTextFile(testing::FixturePath(name)));
}

TEST(Wapx, ParsesPaperFrameworks) {
  EXPECT_EQ(Fixture("trio.wapx"), testing::Trio());
  EXPECT_EQ(Fixture("five.wapx"), testing::Five());
  EXPECT_EQ(Fixture("converge.wapx"), testing::Converge());
  EXPECT_EQ(Fixture("branch.wapx"), testing::Branch());
  EXPECT_EQ(Fixture("two_cycle.wapx"), testing::TwoCycle());
  EXPECT_EQ(Fixture("empty.wapx").size(), 0u);
}

TEST(Wapx, WhitespaceAndComments) {
  const Framework f = Fixture("fuzzy_mix.wapx");
  EXPECT_EQ(f.semiring().kind(), SemiringKind::kFuzzy);
  EXPECT_EQ(f.size(), 3u);
  EXPECT_EQ(f.semiring().format(f.weight(f.index_of("y"), f.index_of("z"))), "0.25");
  EXPECT_TRUE(f.attacks(f.index_of("z"), f.index_of("z")));
}

TEST(Wapx, SerializeIsCanonical) {
  EXPECT_EQ(SerializeWapx(testing::Trio()),
            "semiring weighted\narg(a).\narg(b).\narg(c).\n"
            "att(a,b,7).\natt(b,a,9).\natt(c,b,8).\n");
  EXPECT_EQ(SerializeWapx(testing::TwoCycle()),
            "semiring boolean\narg(a).\narg(b).\natt(a,b).\natt(b,a).\n");
}

TEST(Wapx, FixturesRoundTrip) {
  for (const char* name : kFixtures) {
    const Framework f = Fixture(name);
    const std::string text = SerializeWapx(f);
    EXPECT_EQ(ParseWapx(text), f) << name;
    EXPECT_EQ(SerializeWapx(ParseWapx(text)), text) << name;
  }
}

TEST(Wapx, GeneratedFrameworksRoundTrip) {
  const SemiringKind kinds[] = {SemiringKind::kBoolean, SemiringKind::kFuzzy,
                                SemiringKind::kBottleneck, SemiringKind::kProbabilistic,
                                SemiringKind::kWeighted};
  for (std::uint64_t seed = 0; seed < 250; ++seed) {
    GeneratorSpec spec;
    spec.semiring = Semiring(kinds[seed % 5]);
    spec.weights = DefaultWeightRange(spec.semiring.kind());
    spec.arguments = seed % 12;
    spec.density = 0.1 * static_cast<double>(seed % 7);
    spec.seed = seed;
    const Framework f = GenerateFramework(spec);
    EXPECT_EQ(ParseWapx(SerializeWapx(f)), f) << seed;
  }
}

TEST(Wapx, ExactDecimalsSurvive) {
  const Framework f = ParseWapx("semiring probabilistic\narg(a).\natt(a,a,0.125).\n");
  EXPECT_EQ(f.weight(0, 0).as_rational(), mpq_class(1, 8));
  EXPECT_EQ(SerializeWapx(f), "semiring probabilistic\narg(a).\natt(a,a,0.125).\n");
}

struct BadInput {
  const char* text;
  ErrorCode code;
  std::size_t line;
};

TEST(Wapx, ErrorsCarryCodeAndPosition) {
  const BadInput cases[] = {
      {"", ErrorCode::kSyntax, 1},
      {"arg(a).\n", ErrorCode::kSyntax, 1},
      {"semiring tropical\n", ErrorCode::kUnknownSemiring, 1},
      {"semiring weighted\narg(a).\narg(a).\n", ErrorCode::kDuplicateArgument, 3},
      {"semiring weighted\narg(a).\natt(a,b,1).\n", ErrorCode::kUndeclaredArgument, 3},
      {"semiring weighted\narg(a).\natt(a,a,1).\natt(a,a,2).\n", ErrorCode::kDuplicateAttack, 4},
      {"semiring boolean\narg(a).\natt(a,a,1).\n", ErrorCode::kUnexpectedWeight, 3},
      {"semiring weighted\narg(a).\natt(a,a).\n", ErrorCode::kMissingWeight, 3},
      {"semiring weighted\narg(a).\natt(a,a,1e2).\n", ErrorCode::kMalformedLiteral, 3},
      {"semiring fuzzy\narg(a).\natt(a,a,1.5).\n", ErrorCode::kOutOfRange, 3},
      {"semiring weighted\narg(a).\natt(a,a,0).\n", ErrorCode::kTopWeightAttack, 3},
      {"semiring fuzzy\narg(a).\natt(a,a,1.0).\n", ErrorCode::kTopWeightAttack, 3},
      {"semiring weighted\narg(a)\n", ErrorCode::kSyntax, 2},
      {"semiring weighted\narg(a). arg(b).\n", ErrorCode::kSyntax, 2},
      {"semiring weighted\nargs(a).\n", ErrorCode::kSyntax, 2},
      {"semiring weighted\narg(9a).\n", ErrorCode::kSyntax, 2},
  };
  for (const BadInput& c : cases) {
    try {
      ParseWapx(c.text);
      ADD_FAILURE() << "accepted: " << c.text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.code(), c.code) << c.text << " -> " << e.what();
      EXPECT_EQ(e.line(), c.line) << c.text << " -> " << e.what();
      EXPECT_GE(e.column(), 1u);
    }
  }
}

TEST(Wapx, WeightColumnPointsAtTheLiteral) {
  try {
    ParseWapx("semiring weighted\narg(a).\natt(a,a,0).\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 9u);
  }
}

TEST(Wapx, MissingFile) {
  try {
    ReadTextFile(testing::FixturePath("absent.wapx"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
}

TEST(WeightRange, Parsing) {
  const WeightRange unit = ParseWeightRange("0.0..1.0");
  EXPECT_EQ(unit.lo, 0);
  EXPECT_EQ(unit.hi, 1);
  EXPECT_EQ(unit.step, mpq_class(1, 10));
  EXPECT_EQ(ParseWeightRange("1..10").step, 1);
  EXPECT_EQ(ParseWeightRange("0.5..2.25").step, mpq_class(1, 100));
  for (const char* bad : {"", "1", "1..", "..2", "3..1", "a..b", "1...2"}) {
    EXPECT_THROW(ParseWeightRange(bad), Error) << bad;
  }
}

TEST(Generator, DeterministicPerSeed) {
  GeneratorSpec spec;
  spec.arguments = 30;
  spec.density = 0.2;
  spec.seed = 42;
  const std::string a = SerializeWapx(GenerateFramework(spec));
  EXPECT_EQ(a, SerializeWapx(GenerateFramework(spec)));
  spec.seed = 43;
  EXPECT_NE(a, SerializeWapx(GenerateFramework(spec)));
}

TEST(Generator, WeightsStayOnTheGridAndAvoidTop) {
  GeneratorSpec spec;
  spec.arguments = 20;
  spec.density = 0.5;
  spec.semiring = Semiring(SemiringKind::kFuzzy);
  spec.weights = ParseWeightRange("0.0..1.0");
  spec.seed = 9;
  const Framework f = GenerateFramework(spec);
  std::size_t attacks = 0;
  for (const Value& w : f.weights()) {
    if (f.semiring().is_top(w)) continue;
    ++attacks;
    EXPECT_EQ(mpq_class(w.as_rational() * 10).get_den(), 1);
    EXPECT_LT(w.as_rational(), 1);
  }
  EXPECT_GT(attacks, 120u);
  EXPECT_LT(attacks, 280u);
}

TEST(Generator, DensityExtremes) {
  GeneratorSpec spec;
  spec.arguments = 6;
  spec.density = 0.0;
  EXPECT_EQ(GenerateFramework(spec).attack_count(), 0u);
  spec.density = 1.0;
  EXPECT_EQ(GenerateFramework(spec).attack_count(), 36u);
  spec.density = 1.5;
  EXPECT_THROW(GenerateFramework(spec), Error);
  spec.density = 0.5;
  spec.weights = ParseWeightRange("0..0");
  EXPECT_THROW(GenerateFramework(spec), Error);
}

TEST(Generator, FirstNamesAreStable) {
  GeneratorSpec spec;
  spec.arguments = 3;
  spec.density = 1.0;
  spec.weights = ParseWeightRange("4..4");
  EXPECT_EQ(SerializeWapx(GenerateFramework(spec)),
            "semiring weighted\narg(a0).\narg(a1).\narg(a2).\n"
            "att(a0,a0,4).\natt(a0,a1,4).\natt(a0,a2,4).\n"
            "att(a1,a0,4).\natt(a1,a1,4).\natt(a1,a2,4).\n"
            "att(a2,a0,4).\natt(a2,a1,4).\natt(a2,a2,4).\n");
}

}  // namespace
}  // namespace waf
