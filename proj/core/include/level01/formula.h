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

#ifndef LEVEL01_FORMULA_H_
#define LEVEL01_FORMULA_H_

#include <string_view>

#include "level01/term.h"

namespace level01 {

// Formulas are terms over reserved logical constants, so substitution and
// normalization treat goals and data uniformly. Quantifiers take an
// abstraction: (pi x\ B) is App(pi, [Abs(B)]).
namespace logic {
inline constexpr std::string_view kTrue = "true";
inline constexpr std::string_view kFalse = "false";
inline constexpr std::string_view kAnd = "&";
inline constexpr std::string_view kOr = ";";
inline constexpr std::string_view kImp = "=>";
inline constexpr std::string_view kPi = "pi";
inline constexpr std::string_view kSigma = "sigma";
inline constexpr std::string_view kNabla = "nabla";
inline constexpr std::string_view kEq = "=";
inline constexpr std::string_view kPrint = "print";
}  // namespace logic

enum class FormulaKind {
  kTop,
  kBot,
  kAtom,
  kAnd,
  kOr,
  kImp,
  kAll,
  kEx,
  kNabla,
};

// Shallow view of a formula term.
struct Formula {
  FormulaKind kind = FormulaKind::kAtom;
  TermPtr term;
  // kAnd/kOr/kImp operands.
  TermPtr left;
  TermPtr right;
  // Quantifier argument, normally an abstraction.
  TermPtr binder;
};

Formula Classify(const TermPtr& t);

// Connectives and the builtin predicates; none of these may head a clause.
bool IsReservedSymbol(std::string_view name);

TermPtr MakeTop();
TermPtr MakeBot();
TermPtr MakeAnd(TermPtr a, TermPtr b);
TermPtr MakeOr(TermPtr a, TermPtr b);
TermPtr MakeImp(TermPtr a, TermPtr b);
TermPtr MakeEq(TermPtr a, TermPtr b);
// |body| is the body of the binder (index 0 refers to the bound variable).
TermPtr MakeQuantifier(std::string_view quantifier, std::string hint,
                       TermPtr body);

}  // namespace level01

#endif  // LEVEL01_FORMULA_H_
