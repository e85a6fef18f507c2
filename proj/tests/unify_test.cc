// Copyright 2026 The Level01 Authors.
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

#include "level01/unify.h"

#include <functional>

#include <gtest/gtest.h>

#include "level01/syntax.h"
#include "support/random_terms.h"

namespace level01 {
namespace {

TermPtr C(const char* name) { return Term::Const(name); }

// Every Local or Eigen in |t| outside a variable's raised arguments.
void RigidNames(const TermPtr& t, std::vector<TermPtr>& out) {
  switch (t->kind()) {
    case TermKind::kLocal:
    case TermKind::kEigen:
      out.push_back(t);
      return;
    case TermKind::kAbs:
      RigidNames(t->body(), out);
      return;
    case TermKind::kApp:
      RigidNames(t->head(), out);
      for (const auto& a : t->args()) RigidNames(a, out);
      return;
    default:
      return;
  }
}

TEST(IsPatternTest, DistinctLocals) {
  NameSupply names;
  TermPtr m = names.FreshLogic(1);
  TermPtr c1 = names.FreshLocal();
  TermPtr c2 = names.FreshLocal();
  EXPECT_TRUE(IsPattern(Term::App(m, {c1, c2})));
  EXPECT_FALSE(IsPattern(Term::App(m, {c1, c1})));
  EXPECT_FALSE(IsPattern(Term::App(m, {Term::App(C("f"), {c1})})));
}

TEST(IsPatternTest, EigenArgumentsMustBeYounger) {
  NameSupply names;
  TermPtr old_eigen = names.FreshEigen();
  TermPtr m = names.FreshLogic(1);
  TermPtr new_eigen = names.FreshEigen();
  EXPECT_TRUE(IsPattern(Term::App(m, {new_eigen})));
  EXPECT_FALSE(IsPattern(Term::App(m, {old_eigen})));
  // A promoted eigenvariable is no longer a valid argument.
  EXPECT_FALSE(IsPattern(Term::App(m, {new_eigen}), UnifyOptions{true}));
}

TEST(IsPatternTest, BoundArgumentsUnderBinder) {
  NameSupply names;
  TermPtr m = names.FreshLogic(1);
  EXPECT_TRUE(IsPattern(Term::Abs("x", Term::App(m, {Term::Bound(0)}))));
}

TEST(UnifyTest, LocalInsideScope) {
  NameSupply names;
  TermPtr m = names.FreshLogic(1);
  TermPtr c = names.FreshLocal();
  UnifyOutcome out = Unify(Term::App(m, {c}), c, {}, names);
  ASSERT_TRUE(out.ok());
  EXPECT_EQ(PrintTerm(out.theta.Apply(m)), "x1\\x1");
}

TEST(UnifyTest, LocalOutsideScopeFails) {
  NameSupply names;
  TermPtr m = names.FreshLogic(1);
  TermPtr c = names.FreshLocal();
  EXPECT_EQ(Unify(c, m, {}, names).status, UnifyStatus::kFail);
}

TEST(UnifyTest, PromotedEigenIsInstantiable) {
  NameSupply names;
  TermPtr f = names.FreshEigen();
  TermPtr c = names.FreshLocal();
  EXPECT_EQ(Unify(Term::App(f, {c}), c, {}, names).status, UnifyStatus::kFail);
  UnifyOutcome out = Unify(Term::App(f, {c}), c, {}, names, UnifyOptions{true});
  ASSERT_TRUE(out.ok());
  EXPECT_EQ(PrintTerm(out.theta.Apply(f)), "x1\\x1");
}

TEST(UnifyTest, IdenticalConstants) {
  NameSupply names;
  UnifyOutcome out = Unify(C("a"), C("a"), {}, names);
  ASSERT_TRUE(out.ok());
  EXPECT_TRUE(out.theta.empty());
  EXPECT_EQ(Unify(C("a"), C("b"), {}, names).status, UnifyStatus::kFail);
}

TEST(UnifyTest, EtaFlexibility) {
  // M = x\ M' x binds one variable to the eta-expansion of the other.
  NameSupply names;
  TermPtr m = names.FreshLogic(1);
  TermPtr m2 = names.FreshLogic(1);
  TermPtr expanded = Term::Abs("x", Term::App(m2, {Term::Bound(0)}));
  UnifyOutcome out = Unify(m, expanded, {}, names);
  ASSERT_TRUE(out.ok());
  EXPECT_TRUE(Convertible(out.theta.Apply(m), out.theta.Apply(expanded)));
  EXPECT_FALSE(AlphaEqual(out.theta.Apply(m), out.theta.Apply(expanded)));
  // Forcing the abstraction on one side fixes the other.
  TermPtr id = Term::Abs("y", Term::Bound(0));
  out = Unify(id, expanded, out.theta, names);
  ASSERT_TRUE(out.ok());
  EXPECT_EQ(PrintTerm(out.theta.Apply(m)), "x1\\x1");
}

TEST(UnifyTest, OccursCheckFails) {
  NameSupply names;
  TermPtr m = names.FreshLogic(1);
  EXPECT_EQ(Unify(m, Term::App(C("f"), {m}), {}, names).status,
            UnifyStatus::kFail);
}

TEST(UnifyTest, SameVariablePrunesDisagreeingArguments) {
  NameSupply names;
  TermPtr m = names.FreshLogic(1);
  TermPtr c1 = names.FreshLocal();
  TermPtr c2 = names.FreshLocal();
  UnifyOutcome out = Unify(Term::App(m, {c1, c2}), Term::App(m, {c2, c2}), {}, names);
  // (m c2 c2) is not a pattern.
  EXPECT_EQ(out.status, UnifyStatus::kNonPattern);
  out = Unify(Term::App(m, {c1, c2}), Term::App(m, {c2, c1}), {}, names);
  ASSERT_TRUE(out.ok());
  // Only a constant function equates both argument orders.
  TermPtr value = *out.theta.Find(m->id());
  EXPECT_TRUE(AlphaEqual(out.theta.Apply(Term::App(m, {c1, c2})),
                         out.theta.Apply(Term::App(m, {c2, c1}))));
  EXPECT_EQ(value->body()->body()->kind(), TermKind::kLogic);
}

TEST(UnifyTest, PruningLowersYoungerVariable) {
  // M older than c; N younger. M = N c forces N to ignore c.
  NameSupply names;
  TermPtr m = names.FreshLogic(1);
  TermPtr c = names.FreshLocal();
  TermPtr n = names.FreshLogic(1);
  UnifyOutcome out = Unify(m, Term::App(n, {c}), {}, names);
  ASSERT_TRUE(out.ok());
  TermPtr mv = out.theta.Apply(m);
  std::vector<TermPtr> rigid;
  RigidNames(mv, rigid);
  EXPECT_TRUE(rigid.empty());
  // Afterwards c still cannot flow into M.
  EXPECT_EQ(Unify(Term::App(n, {c}), c, out.theta, names).status,
            UnifyStatus::kFail);
}

TEST(UnifyTest, NonPatternReportsOffendingTerm) {
  NameSupply names;
  TermPtr m = names.FreshLogic(1);
  UnifyOutcome out = Unify(Term::App(m, {C("a")}), C("a"), {}, names);
  ASSERT_EQ(out.status, UnifyStatus::kNonPattern);
  EXPECT_EQ(PrintTerm(out.offending), "_1 a");
}

TEST(UnifyTest, RigidRigidDecomposesBeforeNonPattern) {
  NameSupply names;
  TermPtr m = names.FreshLogic(1);
  UnifyOutcome out = Unify(Term::App(C("f"), {C("a"), Term::App(m, {C("a")})}),
                           Term::App(C("f"), {C("b"), C("c")}), {}, names);
  EXPECT_EQ(out.status, UnifyStatus::kFail);
}

// Properties over random pattern pairs.
class RandomPatternTest : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(RandomPatternTest, SoundSymmetricIdempotentAndScopeSafe) {
  testing::PatternGen gen(GetParam());
  int successes = 0;
  for (int i = 0; i < 100; ++i) {
    TermPtr s = gen.Random(6);
    TermPtr t = i % 3 == 0 ? gen.Random(6) : gen.Perturb(s);
    ASSERT_TRUE(IsPattern(s));
    ASSERT_TRUE(IsPattern(t));
    UnifyOutcome st = Unify(s, t, {}, gen.names());
    UnifyOutcome ts = Unify(t, s, {}, gen.names());
    ASSERT_NE(st.status, UnifyStatus::kNonPattern);
    EXPECT_EQ(st.ok(), ts.ok()) << PrintTerm(s) << " vs " << PrintTerm(t);
    if (!st.ok()) continue;
    ++successes;
    EXPECT_TRUE(Convertible(st.theta.Apply(s), st.theta.Apply(t)))
        << PrintTerm(s) << " vs " << PrintTerm(t);
    EXPECT_TRUE(Convertible(ts.theta.Apply(s), ts.theta.Apply(t)));
    for (const auto& [id, value] : st.theta.bindings()) {
      EXPECT_TRUE(AlphaEqual(st.theta.Apply(value), value));
      auto stamp = gen.stamps().find(id);
      if (stamp == gen.stamps().end()) continue;
      std::vector<TermPtr> rigid;
      RigidNames(value, rigid);
      for (const auto& r : rigid) {
        EXPECT_LT(r->stamp(), stamp->second)
            << "binding of _" << id << " = " << PrintTerm(value);
      }
    }
  }
  EXPECT_GT(successes, 10);
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomPatternTest, ::testing::Range(1u, 11u));

}  // namespace
}  // namespace level01
