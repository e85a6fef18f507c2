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

#include "level01/formula.h"

#include <array>
#include <algorithm>
#include <string>
#include <utility>

namespace level01 {

Formula Classify(const TermPtr& t) {
  Formula f;
  f.term = t;
  const TermPtr& head = SpineHead(t);
  auto args = SpineArgs(t);
  if (head->kind() != TermKind::kConst) return f;
  const std::string& name = head->name();
  if (args.empty()) {
    if (name == logic::kTrue) f.kind = FormulaKind::kTop;
    if (name == logic::kFalse) f.kind = FormulaKind::kBot;
    return f;
  }
  if (args.size() == 2) {
    if (name == logic::kAnd) f.kind = FormulaKind::kAnd;
    else if (name == logic::kOr) f.kind = FormulaKind::kOr;
    else if (name == logic::kImp) f.kind = FormulaKind::kImp;
    else return f;
    f.left = args[0];
    f.right = args[1];
    return f;
  }
  if (args.size() == 1) {
    if (name == logic::kPi) f.kind = FormulaKind::kAll;
    else if (name == logic::kSigma) f.kind = FormulaKind::kEx;
    else if (name == logic::kNabla) f.kind = FormulaKind::kNabla;
    else return f;
    f.binder = args[0];
  }
  return f;
}

bool IsReservedSymbol(std::string_view name) {
  static constexpr std::array<std::string_view, 10> kReserved = {
      logic::kTrue, logic::kFalse, logic::kAnd,   logic::kOr, logic::kImp,
      logic::kPi,   logic::kSigma, logic::kNabla, logic::kEq, logic::kPrint};
  return std::find(kReserved.begin(), kReserved.end(), name) != kReserved.end();
}

TermPtr MakeTop() { return Term::Const(std::string(logic::kTrue)); }
TermPtr MakeBot() { return Term::Const(std::string(logic::kFalse)); }

namespace {
TermPtr Binary(std::string_view op, TermPtr a, TermPtr b) {
  return Term::App(Term::Const(std::string(op)), {std::move(a), std::move(b)});
}
}  // namespace

TermPtr MakeAnd(TermPtr a, TermPtr b) { return Binary(logic::kAnd, std::move(a), std::move(b)); }
TermPtr MakeOr(TermPtr a, TermPtr b) { return Binary(logic::kOr, std::move(a), std::move(b)); }
TermPtr MakeImp(TermPtr a, TermPtr b) { return Binary(logic::kImp, std::move(a), std::move(b)); }
TermPtr MakeEq(TermPtr a, TermPtr b) { return Binary(logic::kEq, std::move(a), std::move(b)); }

TermPtr MakeQuantifier(std::string_view quantifier, std::string hint,
                       TermPtr body) {
  return Term::App(Term::Const(std::string(quantifier)),
                   {Term::Abs(std::move(hint), std::move(body))});
}

}  // namespace level01
