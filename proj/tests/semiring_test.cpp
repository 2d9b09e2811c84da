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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "test_frameworks.hpp"
#include "wafmatrix/error.hpp"

namespace waf {
namespace {

constexpr SemiringKind kAllKinds[] = {
    SemiringKind::kBoolean, SemiringKind::kFuzzy, SemiringKind::kBottleneck,
    SemiringKind::kProbabilistic, SemiringKind::kWeighted};

Value V(const Semiring& s, const char* literal) { return s.parse_value(literal); }

// Small exhaustive grid plus a few seeded rationals for every instance.
std::vector<Value> Samples(const Semiring& s) {
  std::vector<Value> out = {s.bot(), s.top()};
  switch (s.kind()) {
    case SemiringKind::kBoolean:
      return out;
    case SemiringKind::kFuzzy:
    case SemiringKind::kProbabilistic:
      for (const char* l : {"0.1", "0.25", "0.5", "0.75", "0.9"}) out.push_back(V(s, l));
      break;
    default:
      for (const char* l : {"0", "0.5", "1", "3", "7", "12.25", "inf"}) out.push_back(V(s, l));
      break;
  }
  std::mt19937 rng(17);
  for (int i = 0; i < 4; ++i) {
    mpq_class q(static_cast<long>(rng() % 97), 97);
    q.canonicalize();
    out.push_back(s.number(q));
  }
  return out;
}

class SemiringLaws : public ::testing::TestWithParam<SemiringKind> {};

TEST_P(SemiringLaws, MonoidsDistributivityAnnihilatorAbsorptivity) {
  const Semiring s(GetParam());
  const auto xs = Samples(s);
  for (const Value& a : xs) {
    EXPECT_EQ(s.plus(a, s.bot()), a);
    EXPECT_EQ(s.times(a, s.top()), a);
    EXPECT_EQ(s.times(a, s.bot()), s.bot());
    EXPECT_EQ(s.plus(a, a), a);
    for (const Value& b : xs) {
      EXPECT_EQ(s.plus(a, b), s.plus(b, a));
      EXPECT_EQ(s.times(a, b), s.times(b, a));
      EXPECT_EQ(s.plus(a, s.times(a, b)), a);
      for (const Value& c : xs) {
        EXPECT_EQ(s.plus(a, s.plus(b, c)), s.plus(s.plus(a, b), c));
        EXPECT_EQ(s.times(a, s.times(b, c)), s.times(s.times(a, b), c));
        EXPECT_EQ(s.times(a, s.plus(b, c)), s.plus(s.times(a, b), s.times(a, c)));
      }
    }
  }
}

TEST_P(SemiringLaws, InducedOrderIsPartialOrderWithTopAndBot) {
  const Semiring s(GetParam());
  const auto xs = Samples(s);
  for (const Value& a : xs) {
    EXPECT_TRUE(s.leq(a, a));
    EXPECT_TRUE(s.leq(s.bot(), a));
    EXPECT_TRUE(s.leq(a, s.top()));
    if (!(a == s.top())) EXPECT_TRUE(s.lt(a, s.top()));
    for (const Value& b : xs) {
      if (s.leq(a, b) && s.leq(b, a)) EXPECT_EQ(a, b);
      for (const Value& c : xs) {
        if (s.leq(a, b) && s.leq(b, c)) EXPECT_TRUE(s.leq(a, c));
      }
    }
  }
}

TEST_P(SemiringLaws, FoldTimesIsPermutationInvariant) {
  const Semiring s(GetParam());
  auto xs = Samples(s);
  const Value expected = s.fold_times(xs);
  std::mt19937 rng(5);
  for (int i = 0; i < 10; ++i) {
    std::shuffle(xs.begin(), xs.end(), rng);
    EXPECT_EQ(s.fold_times(xs), expected);
  }
}

TEST_P(SemiringLaws, FormatRoundTrips) {
  const Semiring s(GetParam());
  for (const Value& v : Samples(s)) {
    if (v.is_rational() && v.as_rational().get_den() % 97 == 0) continue;
    EXPECT_EQ(s.parse_value(s.format(v)), v) << s.format(v);
  }
}

INSTANTIATE_TEST_SUITE_P(AllInstances, SemiringLaws, ::testing::ValuesIn(kAllKinds),
                         [](const auto& info) {
                           return std::string(SemiringName(info.param));
                         });

TEST(Semiring, WeightedPlusIsMin) {
  const Semiring w(SemiringKind::kWeighted);
  EXPECT_EQ(w.plus(V(w, "7"), V(w, "9")), V(w, "7"));
  EXPECT_EQ(w.plus(V(w, "7"), w.bot()), V(w, "7"));
}

TEST(Semiring, FuzzyPlusIsMax) {
  const Semiring f(SemiringKind::kFuzzy);
  EXPECT_EQ(f.plus(V(f, "0.3"), V(f, "0.8")), V(f, "0.8"));
}

TEST(Semiring, TimesPerInstance) {
  const Semiring w(SemiringKind::kWeighted);
  EXPECT_EQ(w.times(V(w, "7"), V(w, "8")), V(w, "15"));
  const Semiring p(SemiringKind::kProbabilistic);
  EXPECT_EQ(p.times(V(p, "0.5"), V(p, "0.5")), V(p, "0.25"));
  for (SemiringKind k : kAllKinds) {
    const Semiring s(k);
    for (const Value& x : Samples(s)) EXPECT_EQ(s.times(x, s.top()), x);
  }
}

TEST(Semiring, WeightedOrderIsInverted) {
  const Semiring w(SemiringKind::kWeighted);
  EXPECT_TRUE(w.leq(V(w, "7"), V(w, "3")));
  EXPECT_FALSE(w.leq(V(w, "3"), V(w, "7")));
  EXPECT_TRUE(w.leq(w.bot(), V(w, "3")));
}

TEST(Semiring, FoldTimes) {
  const Semiring w(SemiringKind::kWeighted);
  const std::vector<Value> four = {V(w, "7"), V(w, "8"), V(w, "0"), V(w, "9")};
  EXPECT_EQ(w.fold_times(four), V(w, "24"));
  EXPECT_EQ(w.fold_times({}), w.top());
  const std::vector<Value> two = {V(w, "9"), V(w, "0")};
  EXPECT_EQ(w.fold_times(two), V(w, "9"));
}

TEST(Semiring, ParseValue) {
  const Semiring w(SemiringKind::kWeighted);
  EXPECT_EQ(V(w, "7").as_rational(), 7);
  EXPECT_EQ(V(w, "inf"), w.bot());
  EXPECT_EQ(V(w, "0.3").as_rational(), mpq_class(3, 10));
  const Semiring f(SemiringKind::kFuzzy);
  try {
    f.parse_value("1.5");
    FAIL() << "expected out-of-range";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOutOfRange);
  }
  for (const char* bad : {"", "1e3", "-1", ".5", "5.", "0x1", "abc", "1/2"}) {
    try {
      w.parse_value(bad);
      FAIL() << "accepted " << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kMalformedLiteral) << bad;
    }
  }
  EXPECT_THROW(f.parse_value("inf"), Error);
  const Semiring b(SemiringKind::kBoolean);
  EXPECT_EQ(b.parse_value("false"), b.bot());
  EXPECT_THROW(b.parse_value("1"), Error);
}

TEST(Semiring, FormatPrintsExactDecimals) {
  const Semiring w(SemiringKind::kWeighted);
  EXPECT_EQ(w.format(w.top()), "0");
  EXPECT_EQ(w.format(V(w, "0.30")), "0.3");
  EXPECT_EQ(w.format(V(w, "12.125")), "12.125");
  EXPECT_EQ(w.format(w.bot()), "inf");
  EXPECT_EQ(w.format(w.number(mpq_class(1, 3))), "1/3");
}

TEST(Semiring, InstanceMismatchIsAnError) {
  const Semiring w(SemiringKind::kWeighted);
  const Semiring b(SemiringKind::kBottleneck);
  try {
    w.plus(V(w, "1"), V(b, "1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInstanceMismatch);
  }
  EXPECT_THROW(w.times(V(b, "1"), V(b, "1")), Error);
  EXPECT_THROW(w.leq(V(w, "1"), V(b, "1")), Error);
  const std::vector<Value> mixed = {V(w, "1"), V(b, "2")};
  EXPECT_THROW(w.fold_times(mixed), Error);
}

TEST(Semiring, Names) {
  for (SemiringKind k : kAllKinds) {
    EXPECT_EQ(Semiring::FromName(SemiringName(k)).kind(), k);
  }
  EXPECT_THROW(Semiring::FromName("Weighted"), Error);
}

}  // namespace
}  // namespace waf
