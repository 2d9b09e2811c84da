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

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "test_frameworks.hpp"
#include "wafmatrix/error.hpp"
#include "wafmatrix/wapx.hpp"

namespace waf {
namespace {

using testing::Five;
using testing::Converge;
using testing::Branch;
using testing::Trio;
using testing::TwoCycle;

std::string Render(const Framework& f, const LabelledMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out += (c ? " " : "") + f.semiring().format(m.at(r, c));
    }
    out += "\n";
  }
  return out;
}

TEST(Framework, SetAttackWeightAggregates) {
  const Framework f = Five();
  const Semiring& s = f.semiring();
  EXPECT_EQ(s.format(SetAttackWeight(f, f.set_of({"a", "c"}), f.set_of({"b"}))), "15");
  EXPECT_EQ(s.format(SetAttackWeight(f, f.set_of({"c"}), f.set_of({"b", "d"}))), "17");
  EXPECT_EQ(s.format(SetAttackWeight(f, f.set_of({"a", "c"}), f.set_of({"b", "d"}))), "24");
  EXPECT_EQ(SetAttackWeight(f, {}, f.all()), s.top());
  EXPECT_EQ(SetAttackWeight(f, f.all(), {}), s.top());
}

TEST(Framework, AttackRelationIsDerivedFromWeights) {
  const Framework f = Branch();
  EXPECT_EQ(AttackedBy(f, f.set_of({"a"})), f.set_of({"b"}));
  EXPECT_EQ(AttackedBy(f, {}), ArgSet{});
  const Framework g = Converge();
  EXPECT_EQ(AttackersOf(g, g.set_of({"b"})), g.set_of({"a", "d"}));

  const Semiring& s = f.semiring();
  std::vector<Value> w = f.weights();
  w[f.index_of("a") * f.size() + f.index_of("b")] = s.top();
  const Framework cut(s, f.names(), w);
  EXPECT_EQ(AttackedBy(cut, cut.set_of({"a"})), ArgSet{});
  EXPECT_EQ(InitialArguments(cut), cut.set_of({"a", "b"}));
}

TEST(Framework, InitialArguments) {
  EXPECT_EQ(InitialArguments(Branch()), Branch().set_of({"a"}));
  EXPECT_EQ(InitialArguments(TwoCycle()), ArgSet{});
  EXPECT_EQ(InitialArguments(Converge()), Converge().set_of({"a", "d"}));
}

TEST(Framework, WDefends) {
  const Framework f = Five();
  EXPECT_TRUE(WDefends(f, f.set_of({"c"}), f.index_of("c")));
  const Framework g = Trio();
  EXPECT_FALSE(WDefends(g, g.set_of({"a"}), g.index_of("a")));
  EXPECT_TRUE(WDefends(g, g.set_of({"a", "c"}), g.index_of("a")));
  EXPECT_TRUE(WDefends(g, {}, g.index_of("c")));
}

TEST(Framework, DefendedSet) {
  const Framework f = Branch();
  const ArgSet d = DefendedSet(f, f.set_of({"a"}));
  EXPECT_TRUE(f.set_of({"a", "c"}).is_subset_of(d));
  EXPECT_FALSE(d.contains(f.index_of("d")));
  const Framework free = testing::AttackFree(4);
  EXPECT_EQ(DefendedSet(free, {}), free.all());
  // c's attacker b: W({a,d}, b) = 7 against W(b, {a,c,d}) = 8.
  const Framework g = Converge();
  EXPECT_EQ(DefendedSet(g, g.set_of({"a", "d"})), g.set_of({"a", "d"}));
}

TEST(Framework, MatrixUnderPermutations) {
  const Framework f = Trio();
  EXPECT_EQ(Render(f, MatrixOf(f, {0, 1, 2})), "0 7 0\n9 0 0\n0 8 0\n");
  EXPECT_EQ(Render(f, MatrixOf(f, {0, 2, 1})), "0 0 7\n0 0 8\n9 0 0\n");
  const LabelledMatrix m = MatrixOf(f, {0, 2, 1});
  EXPECT_EQ(m.row_labels, (std::vector<std::string>{"a", "c", "b"}));
  EXPECT_EQ(m.col_labels, m.row_labels);
  const Framework empty(Semiring(SemiringKind::kWeighted));
  EXPECT_EQ(MatrixOf(empty).rows(), 0u);
  for (const std::vector<ArgIndex>& bad :
       std::vector<std::vector<ArgIndex>>{{0, 1}, {0, 1, 1}, {0, 1, 3}}) {
    try {
      MatrixOf(f, bad);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kNotAPermutation);
    }
  }
}

TEST(Framework, PermutedMatricesAreSimultaneousRowColumnPermutations) {
  const Framework f = Five();
  const LabelledMatrix base = MatrixOf(f);
  std::vector<ArgIndex> p(f.size());
  std::iota(p.begin(), p.end(), 0);
  std::mt19937 rng(3);
  for (int round = 0; round < 20; ++round) {
    std::shuffle(p.begin(), p.end(), rng);
    const LabelledMatrix m = MatrixOf(f, p);
    for (std::size_t r = 0; r < p.size(); ++r) {
      for (std::size_t c = 0; c < p.size(); ++c) {
        EXPECT_EQ(m.at(r, c), base.at(p[r], p[c]));
      }
    }
  }
}

TEST(Framework, Restrict) {
  const Framework f = Branch();
  const Framework sub = Restrict(f, f.set_of({"c", "d"}));
  EXPECT_EQ(sub.names(), (std::vector<std::string>{"c", "d"}));
  EXPECT_EQ(sub.attack_count(), 0u);
  EXPECT_EQ(Restrict(f, f.all()), f);
  EXPECT_EQ(Restrict(f, {}).size(), 0u);
  EXPECT_THROW(Restrict(f, ArgSet{7}), Error);
}

TEST(Framework, ForeignArgumentsAreRejected) {
  const Framework f = Branch();
  try {
    SetAttackWeight(f, ArgSet{9}, f.all());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kForeignArgument);
  }
  EXPECT_THROW(f.set_of({"zz"}), Error);
  EXPECT_THROW(WDefends(f, {}, 4), Error);
}

TEST(Framework, SetAttackWeightIsFoldOverAllPairs) {
  const Framework f = Five();
  const Semiring& s = f.semiring();
  for (unsigned long long bm = 0; bm < 32; ++bm) {
    for (unsigned long long dm = 0; dm < 32; ++dm) {
      const ArgSet b = ArgSet::FromMask(bm);
      const ArgSet d = ArgSet::FromMask(dm);
      std::vector<Value> entries;
      for (ArgIndex x : b) {
        for (ArgIndex y : d) entries.push_back(f.weight(x, y));
      }
      EXPECT_EQ(entries.size(), b.size() * d.size());
      EXPECT_EQ(SetAttackWeight(f, b, d), s.fold_times(entries));
      for (ArgIndex extra = 0; extra < f.size(); ++extra) {
        EXPECT_TRUE(s.leq(SetAttackWeight(f, b.with(extra), d), SetAttackWeight(f, b, d)));
      }
    }
  }
}

// Classical defence straight from the attack relation.
bool ClassicallyDefends(const Framework& f, unsigned long long b, ArgIndex x) {
  for (ArgIndex a = 0; a < f.size(); ++a) {
    if (!f.attacks(a, x)) continue;
    bool countered = false;
    for (ArgIndex d = 0; d < f.size(); ++d) {
      if ((b >> d & 1ULL) && f.attacks(d, a)) countered = true;
    }
    if (!countered) return false;
  }
  return true;
}

TEST(Framework, BooleanDefenceIsClassicalDefence) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    GeneratorSpec spec;
    spec.arguments = 1 + seed % 6;
    spec.density = 0.3;
    spec.semiring = Semiring(SemiringKind::kBoolean);
    spec.seed = seed;
    const Framework f = GenerateFramework(spec);
    for (unsigned long long b = 0; b < (1ULL << f.size()); ++b) {
      for (ArgIndex x = 0; x < f.size(); ++x) {
        EXPECT_EQ(WDefends(f, ArgSet::FromMask(b), x), ClassicallyDefends(f, b, x))
            << "seed " << seed << " B " << f.format(ArgSet::FromMask(b)) << " x " << x;
      }
    }
  }
}

TEST(ArgSet, CanonicalOrderAndSetAlgebra) {
  const ArgSet s({3, 1, 2});
  EXPECT_EQ(s.members(), (std::vector<ArgIndex>{1, 2, 3}));
  EXPECT_THROW(ArgSet({1, 1}), Error);
  EXPECT_EQ(ArgSet::FromMask(0b1010), ArgSet({1, 3}));
  EXPECT_EQ(ArgSet({1, 3}).mask(), 0b1010u);
  EXPECT_EQ(s.minus({2}), ArgSet({1, 3}));
  EXPECT_EQ(s.intersected({0, 2}), ArgSet({2}));
  EXPECT_EQ(ArgSet({0}).united({2}), ArgSet({0, 2}));
  EXPECT_TRUE(ArgSet({1}).is_subset_of(s));
  EXPECT_TRUE(ArgSet({4}) < ArgSet({0, 1}));
  EXPECT_TRUE(ArgSet({0, 2}) < ArgSet({1, 2}));
}

TEST(Framework, Construction) {
  const Semiring s(SemiringKind::kWeighted);
  EXPECT_THROW(Framework(s, {"a", "a"}), Error);
  EXPECT_THROW(Framework(s, {"1a"}), Error);
  EXPECT_THROW(Framework(s, {"a"}, {{"a", "b", s.number(1)}}), Error);
  const Semiring b(SemiringKind::kBoolean);
  EXPECT_THROW(Framework(s, {"a"}, {{"a", "a", b.bot()}}), Error);
  EXPECT_EQ(Five().format(Five().set_of({"c", "a"})), "[a,c]");
}

}  // namespace
}  // namespace waf
