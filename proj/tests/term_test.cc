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

#include "level01/term.h"

#include <set>

#include <gtest/gtest.h>

#include "level01/errors.h"
#include "level01/substitution.h"
#include "level01/syntax.h"
#include "support/random_terms.h"

namespace level01 {
namespace {

TermPtr C(const char* name) { return Term::Const(name); }
TermPtr B(std::uint32_t i) { return Term::Bound(i); }

// Replaces variables structurally and then normalizes. Values are closed,
// so no index adjustment is needed; this is the reference for Apply.
TermPtr NaiveApply(const Substitution& theta, const TermPtr& t) {
  switch (t->kind()) {
    case TermKind::kEigen:
    case TermKind::kLogic:
      if (const TermPtr* v = theta.Find(t->id())) return *v;
      return t;
    case TermKind::kAbs:
      return Term::Abs(t->name(), NaiveApply(theta, t->body()));
    case TermKind::kApp: {
      std::vector<TermPtr> args;
      for (const auto& a : t->args()) args.push_back(NaiveApply(theta, a));
      return Term::App(NaiveApply(theta, t->head()), std::move(args));
    }
    default:
      return t;
  }
}

TEST(NormalizeTest, IdentityRedex) {
  TermPtr t = Term::App(Term::Abs("x", B(0)), {C("a")});
  EXPECT_TRUE(AlphaEqual(Normalize(t), C("a")));
}

TEST(NormalizeTest, NormalAbstractionUnchanged) {
  TermPtr t = Term::Abs("x", B(0));
  EXPECT_TRUE(AlphaEqual(Normalize(t), t));
}

TEST(NormalizeTest, TwoStepsByHand) {
  // (x\ y\ par x y) p q  ->  (y\ par p y) q  ->  par p q
  TermPtr fn = Term::Abs("x", Term::Abs("y", Term::App(C("par"), {B(1), B(0)})));
  TermPtr t = Term::App(fn, {C("p"), C("q")});
  EXPECT_TRUE(AlphaEqual(Normalize(t), Term::App(C("par"), {C("p"), C("q")})));
}

TEST(NormalizeTest, RedexUnderBinderWithLooseIndex) {
  // z\ (x\ f x z) a  ->  z\ f a z
  TermPtr inner = Term::App(Term::Abs("x", Term::App(C("f"), {B(0), B(1)})), {C("a")});
  TermPtr t = Term::Abs("z", inner);
  TermPtr expected = Term::Abs("z", Term::App(C("f"), {C("a"), B(0)}));
  EXPECT_TRUE(AlphaEqual(Normalize(t), expected));
}

TEST(NormalizeTest, ArgumentMovedUnderBinderIsShifted) {
  // z\ (x\ y\ g x y) z  ->  z\ y\ g z y
  TermPtr fn = Term::Abs("x", Term::Abs("y", Term::App(C("g"), {B(1), B(0)})));
  TermPtr t = Term::Abs("z", Term::App(fn, {B(0)}));
  TermPtr expected = Term::Abs("z", Term::Abs("y", Term::App(C("g"), {B(1), B(0)})));
  EXPECT_TRUE(AlphaEqual(Normalize(t), expected));
}

TEST(NormalizeTest, HigherOrderArgument) {
  // (h\ h a) (x\ f x)  ->  f a
  TermPtr fn = Term::Abs("h", Term::App(B(0), {C("a")}));
  TermPtr t = Term::App(fn, {Term::Abs("x", Term::App(C("f"), {B(0)}))});
  EXPECT_TRUE(AlphaEqual(Normalize(t), Term::App(C("f"), {C("a")})));
}

TEST(NormalizeTest, BudgetStopsSelfApplication) {
  TermPtr omega_half = Term::Abs("x", Term::App(B(0), {B(0)}));
  TermPtr omega = Term::App(omega_half, {omega_half});
  EXPECT_THROW(Normalize(omega, 1000), NormalizationError);
}

TEST(NormalizeTest, IdempotentOnRandomTerms) {
  testing::RedexGen gen(7);
  for (int i = 0; i < 500; ++i) {
    TermPtr t = gen.Closed(8);
    TermPtr once = Normalize(t);
    EXPECT_TRUE(once->is_normal());
    EXPECT_TRUE(AlphaEqual(Normalize(once), once));
  }
}

TEST(TermTest, AlphaEqualityIgnoresHints) {
  TermPtr a = Term::Abs("x", Term::App(C("f"), {B(0)}));
  TermPtr b = Term::Abs("y", Term::App(C("f"), {B(0)}));
  EXPECT_TRUE(AlphaEqual(a, b));
  EXPECT_TRUE(AlphaEqual(Normalize(Term::App(Term::Abs("u", a), {C("c")})),
                         Normalize(Term::App(Term::Abs("v", b), {C("c")}))));
  EXPECT_FALSE(AlphaEqual(a, Term::Abs("x", Term::App(C("g"), {B(0)}))));
}

TEST(TermTest, ApplicationsAreFlattened) {
  TermPtr t = Term::App(Term::App(C("f"), {C("a")}), {C("b")});
  ASSERT_TRUE(t->is_app());
  EXPECT_EQ(t->head()->name(), "f");
  EXPECT_EQ(t->args().size(), 2u);
  TermPtr f = C("f");
  EXPECT_EQ(Term::App(f, {}), f);
}

TEST(SubstitutionTest, BetaAfterReplacement) {
  NameSupply names;
  TermPtr m = names.FreshLogic(1);
  Substitution theta = Substitution().Bind(m, Term::Abs("x1", B(0)));
  EXPECT_TRUE(AlphaEqual(theta.Apply(Term::App(m, {C("c")})), C("c")));
}

TEST(SubstitutionTest, EmptyIsIdentity) {
  NameSupply names;
  TermPtr t = Term::App(C("f"), {names.FreshLogic(1), Term::Abs("x", B(0))});
  EXPECT_TRUE(AlphaEqual(Substitution().Apply(t), t));
}

TEST(SubstitutionTest, NoCaptureUnderBinder) {
  NameSupply names;
  TermPtr m = names.FreshLogic(1);
  Substitution theta = Substitution().Bind(m, C("x"));
  TermPtr result = theta.Apply(Term::Abs("x", m));
  // The binder keeps its own occurrences; the free x stays free.
  EXPECT_TRUE(AlphaEqual(result, Term::Abs("x", C("x"))));
  EXPECT_EQ(PrintTerm(result), "x1\\x");
}

TEST(SubstitutionTest, BindKeepsIdempotence) {
  NameSupply names;
  TermPtr x = names.FreshLogic(1);
  TermPtr y = names.FreshLogic(1);
  Substitution theta = Substitution().Bind(x, Term::App(C("f"), {y}));
  theta = theta.Bind(y, C("a"));
  EXPECT_TRUE(AlphaEqual(*theta.Find(x->id()), Term::App(C("f"), {C("a")})));
}

TEST(SubstitutionTest, OccursCheckRejectsCycles) {
  NameSupply names;
  TermPtr x = names.FreshLogic(1);
  EXPECT_THROW(Substitution().Bind(x, Term::App(C("f"), {x})), std::logic_error);
}

TEST(SubstitutionTest, RandomApplyMatchesReferenceAndIsIdempotent) {
  testing::RedexGen gen(11);
  for (int i = 0; i < 300; ++i) {
    NameSupply names;
    std::vector<TermPtr> vars = {names.FreshLogic(1), names.FreshLogic(1),
                                 names.FreshLogic(1)};
    Substitution theta;
    theta = theta.Bind(vars[0], Normalize(gen.Closed(4)));
    theta = theta.Bind(vars[1], Normalize(gen.Closed(4, {vars[2]})));
    TermPtr t = gen.Closed(8, vars);
    TermPtr once = theta.Apply(t);
    EXPECT_EQ(once->loose(), 0u);
    EXPECT_TRUE(AlphaEqual(once, Normalize(NaiveApply(theta, NaiveApply(theta, t)))));
    EXPECT_TRUE(AlphaEqual(theta.Apply(once), once));
  }
}

TEST(FreshTest, BareWithEmptySignature) {
  NameSupply names;
  TermPtr h = names.Fresh(VarKind::kLogic, 0, {});
  EXPECT_EQ(h->kind(), TermKind::kLogic);
  EXPECT_EQ(h->level(), 0);
}

TEST(FreshTest, RaisedOverSignature) {
  NameSupply names;
  TermPtr c1 = names.FreshLocal();
  TermPtr c2 = names.FreshLocal();
  TermPtr e = names.Fresh(VarKind::kEigen, 1, {c1});
  ASSERT_TRUE(e->is_app());
  EXPECT_EQ(e->head()->kind(), TermKind::kEigen);
  ASSERT_EQ(e->args().size(), 1u);
  EXPECT_EQ(e->args()[0], c1);

  TermPtr l = names.Fresh(VarKind::kLogic, 0, {c1, c2});
  ASSERT_EQ(l->args().size(), 2u);
  EXPECT_EQ(l->args()[0], c1);
  EXPECT_EQ(l->args()[1], c2);
}

TEST(FreshTest, IdsNeverRepeatAndStampsIncrease) {
  NameSupply names;
  std::set<VarId> seen;
  Stamp last = 0;
  for (int i = 0; i < 300; ++i) {
    TermPtr t = i % 3 == 0 ? names.FreshLocal()
                : i % 3 == 1 ? names.FreshEigen()
                             : names.FreshLogic(1);
    EXPECT_TRUE(seen.insert(t->id()).second);
    EXPECT_GT(t->stamp(), last);
    last = t->stamp();
  }
}

}  // namespace
}  // namespace level01
